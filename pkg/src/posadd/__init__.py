"""Positional addition of regular sets of numbers written in base k."""

from .automata import (
    AutomatonError,
    Nfa,
    Word,
    accepts,
    determinize,
    enumerate_accepted,
    equivalent,
    intersect,
    is_canonical_language,
    is_empty,
    minimize,
    restrict_alphabet,
    reverse,
    trim,
)
from .construction import bound_states, build_sum_msd, build_sum_nfa, build_sum_one_state
from .fooling import (
    Certified,
    DuplicatePair,
    F1Violation,
    F2Violation,
    FoolingPair,
    gen_fooling_addition,
    gen_fooling_one_state,
    gen_fooling_unary,
    verify_fooling,
)
from .positional import add_words, canonical, sum_language_oracle, value_of
from .witnesses import one_state_witness_a, one_state_witness_b, unary_witness, witness_a, witness_b

__version__ = "0.1.0"
