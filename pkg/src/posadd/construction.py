"""NFAs for the positional sum of two languages of LSD-first notations.

The general construction simulates both operands digit by digit with a carry
bit.  Its states fall into four groups:

* ``Pair(p, q, c)``  both operands still produce digits;
* ``OnlyA(p, c)``    the right operand has ended, the left one continues;
* ``OnlyB(q, c)``    the left operand has ended, the right one continues;
* ``Accept``         both have ended and the final carry digit 1 was read.
"""

from __future__ import annotations

import warnings
from collections import Counter
from dataclasses import dataclass
from typing import Union

from .automata import AutomatonError, Nfa, _renumber, is_canonical_language, reverse


@dataclass(frozen=True)
class Pair:
    p: int
    q: int
    carry: int

    def __str__(self) -> str:
        return f"({self.p},{self.q},{self.carry})"


@dataclass(frozen=True)
class OnlyA:
    p: int
    carry: int

    def __str__(self) -> str:
        return f"(A,{self.p},{self.carry})"


@dataclass(frozen=True)
class OnlyB:
    q: int
    carry: int

    def __str__(self) -> str:
        return f"(B,{self.q},{self.carry})"


@dataclass(frozen=True)
class Accept:
    def __str__(self) -> str:
        return "q_acc"


@dataclass(frozen=True)
class MergedCarry:
    """``OnlyA(0, 1)`` and ``OnlyB(0, 1)`` fused; exists only for one-state operands."""

    def __str__(self) -> str:
        return "q_01"


SumState = Union[Pair, OnlyA, OnlyB, Accept, MergedCarry]


class CanonicityWarning(UserWarning):
    """An operand accepts a word with a trailing zero digit."""


def bound_states(m: int, n: int) -> int:
    """Worst-case number of NFA states for the sum of an m-state and an n-state NFA."""
    if m < 1 or n < 1:
        raise AutomatonError("state counts must be positive")
    if m == n == 1:
        return 6
    return 2 * m * n + 2 * m + 2 * n + 1


def sum_states(m: int, n: int) -> list[SumState]:
    states: list[SumState] = [Pair(p, q, c) for p in range(m) for q in range(n) for c in (0, 1)]
    states += [OnlyA(p, c) for p in range(m) for c in (0, 1)]
    states += [OnlyB(q, c) for q in range(n) for c in (0, 1)]
    states.append(Accept())
    return states


def _digit(total: int, k: int) -> tuple[int, int]:
    # (emitted digit, outgoing carry)
    return (total, 0) if total < k else (total - k, 1)


def build_sum_nfa(a: Nfa, b: Nfa) -> Nfa:
    """The untrimmed ``2mn + 2m + 2n + 1``-state NFA for ``L(a) (+) L(b)``.

    Operands whose languages contain words ending in 0 are accepted with a
    :class:`CanonicityWarning`; the automaton is still built, but then it no
    longer describes the sum of the numbers those words denote.
    """
    if a.k != b.k:
        raise AutomatonError(f"automata over different bases: {a.k} and {b.k}")
    for side, nfa in (("left", a), ("right", b)):
        if not is_canonical_language(nfa):
            warnings.warn(f"{side} operand accepts a word ending with 0", CanonicityWarning, stacklevel=2)
    k, m, n = a.k, a.state_count, b.state_count
    states = sum_states(m, n)
    index = {s: i for i, s in enumerate(states)}
    acc = index[Accept()]
    fa, fb = a.accepting, b.accepting
    trans: set[tuple[int, int, int]] = set()

    def emit(src: SumState, digit: int, dst: SumState) -> None:
        trans.add((index[src], digit, index[dst]))

    for c in (0, 1):
        for p, da, p2 in a.transitions:
            # both operands continue
            for q, db, q2 in b.transitions:
                d, c2 = _digit(da + db + c, k)
                emit(Pair(p, q, c), d, Pair(p2, q2, c2))
            d, c2 = _digit(da + c, k)
            for q in fb:
                emit(Pair(p, q, c), d, OnlyA(p2, c2))
            emit(OnlyA(p, c), d, OnlyA(p2, c2))
        for q, db, q2 in b.transitions:
            d, c2 = _digit(db + c, k)
            for p in fa:
                emit(Pair(p, q, c), d, OnlyB(q2, c2))
            emit(OnlyB(q, c), d, OnlyB(q2, c2))

    for p in fa:
        for q in fb:
            trans.add((index[Pair(p, q, 1)], 1, acc))
    for p in fa:
        trans.add((index[OnlyA(p, 1)], 1, acc))
    for q in fb:
        trans.add((index[OnlyB(q, 1)], 1, acc))

    accepting = {index[Pair(p, q, 0)] for p in fa for q in fb}
    accepting |= {index[OnlyA(p, 0)] for p in fa}
    accepting |= {index[OnlyB(q, 0)] for q in fb}
    accepting.add(acc)
    return Nfa(k, len(states), index[Pair(a.initial, b.initial, 0)], accepting, trans, tuple(states))


def _reachable(nfa: Nfa) -> set[int]:
    seen = {nfa.initial}
    stack = [nfa.initial]
    while stack:
        q = stack.pop()
        for s, _, t in nfa.transitions:
            if s == q and t not in seen:
                seen.add(t)
                stack.append(t)
    return seen


def build_sum_one_state(a: Nfa, b: Nfa) -> Nfa:
    """Sum NFA for two one-state operands with at most six states.

    Starts from the general seven-state construction.  When both carry states
    ``(A,0,1)`` and ``(B,0,1)`` are reachable they are entered from the same
    states by the same digit, so they are fused into one state keeping the
    union of their outgoing edges.  An unreachable carry state is dropped.
    """
    if a.state_count != 1 or b.state_count != 1:
        raise AutomatonError("both operands must have exactly one state")
    general = build_sum_nfa(a, b)
    labels = general.labels
    index = {s: i for i, s in enumerate(labels)}
    ia, ib = index[OnlyA(0, 1)], index[OnlyB(0, 1)]
    live = _reachable(general)
    if ia in live and ib in live:
        merged = ia  # place the fused state where (A,0,1) was
        trans = {
            (merged if s == ib else s, d, merged if t == ib else t)
            for s, d, t in general.transitions
        }
        new_labels = tuple(MergedCarry() if i == ia else lab for i, lab in enumerate(labels))
        fused = Nfa(general.k, general.state_count, general.initial, general.accepting, trans, new_labels)
        keep = [i for i in range(general.state_count) if i != ib]
    else:
        fused = general
        keep = [i for i in range(general.state_count) if i not in (ia, ib) or i in live]
    order = sorted(keep, key=lambda i: _one_state_rank(fused.labels[i]))
    return _renumber(fused, order)


def _one_state_rank(label: SumState) -> int:
    # display order: (0,0,0), (0,0,1), carry state(s), (A,0,0), (B,0,0), q_acc
    if isinstance(label, Pair):
        return label.carry
    if isinstance(label, MergedCarry):
        return 2
    if isinstance(label, OnlyA):
        return 2 if label.carry else 4
    if isinstance(label, OnlyB):
        return 3 if label.carry else 5
    return 6


def build_sum_msd(a_msd: Nfa, b_msd: Nfa) -> Nfa:
    """Sum automaton for operands written most-significant digit first."""
    return reverse(build_sum_nfa(reverse(a_msd), reverse(b_msd)))


def census(nfa: Nfa) -> Counter:
    """Count states per group, using the state labels of a sum construction."""
    groups: Counter = Counter()
    for lab in nfa.labels or ():
        groups[state_group(lab)] += 1
    return groups


def state_group(label) -> str:
    if isinstance(label, Pair):
        return "pair"
    if isinstance(label, OnlyA):
        return "only_a"
    if isinstance(label, OnlyB):
        return "only_b"
    if isinstance(label, Accept):
        return "accept"
    if isinstance(label, MergedCarry):
        return "merged"
    return "other"
