"""Digit words as natural numbers.

Words are least-significant digit first: ``(w0, w1, ...)`` denotes
``w0 + w1*k + w2*k**2 + ...``.  The canonical notation of a number has no
trailing zero digit, and the empty word is the notation of 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .automata import AutomatonError, Nfa, Word, check_word, enumerate_accepted, non_canonical_witness


def value_of(word: Sequence[int], k: int) -> int:
    check_word(word, k)
    value = 0
    for d in reversed(word):
        value = value * k + d
    return value


def canonical(value: int, k: int) -> Word:
    if k < 2:
        raise AutomatonError(f"base must be at least 2, got {k}")
    if value < 0:
        raise AutomatonError("negative numbers have no notation")
    digits = []
    while value:
        value, d = divmod(value, k)
        digits.append(d)
    return tuple(digits)


def is_canonical_word(word: Sequence[int]) -> bool:
    return not word or word[-1] != 0


def add_words(u: Sequence[int], v: Sequence[int], k: int) -> Word:
    """Ripple-carry addition of two canonical words."""
    u, v = check_word(u, k), check_word(v, k)
    for w in (u, v):
        if not is_canonical_word(w):
            raise AutomatonError(f"operand {list(w)} has a trailing zero")
    out = []
    carry = 0
    for i in range(max(len(u), len(v))):
        s = (u[i] if i < len(u) else 0) + (v[i] if i < len(v) else 0) + carry
        carry, d = divmod(s, k)
        out.append(d)
    if carry:
        out.append(carry)
    return tuple(out)


@dataclass(frozen=True)
class OracleResult:
    words: frozenset[Word]
    operand_counts: tuple[int, int]
    max_len: int


def sum_language_oracle(a: Nfa, b: Nfa, max_len: int) -> OracleResult:
    """Bounded sum language computed with integer arithmetic.

    Enumerates operand words of length at most ``max_len``, adds their values
    and keeps canonical sums that still fit in ``max_len`` digits.  A sum is
    never shorter than either operand, so nothing of length ``<= max_len`` is
    missed.
    """
    if a.k != b.k:
        raise AutomatonError(f"automata over different bases: {a.k} and {b.k}")
    k = a.k
    for name, nfa in (("left", a), ("right", b)):
        bad = non_canonical_witness(nfa)
        if bad is not None:
            raise AutomatonError(
                f"{name} operand accepts non-canonical word {list(bad)} (trailing zero)"
            )
    left = {value_of(w, k) for w in enumerate_accepted(a, max_len)}
    right = {value_of(w, k) for w in enumerate_accepted(b, max_len)}
    bound = k**max_len
    sums = {s + t for s in left for t in right if s + t < bound}
    words = frozenset(canonical(v, k) for v in sums)
    return OracleResult(words, (len(left), len(right)), max_len)
