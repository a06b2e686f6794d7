"""Fooling sets: verification and the explicit families for positional sums.

A list of pairs ``(x_i, y_i)`` is a fooling set for ``L`` when every
``x_i y_i`` is in ``L`` and, for ``i != j``, at least one of ``x_i y_j`` and
``x_j y_i`` is not.  Any NFA for ``L`` then has at least as many states as
there are pairs.

Indices reported in verdicts are 1-based, in list order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .automata import AutomatonError, Nfa, Word, check_word


@dataclass(frozen=True)
class FoolingPair:
    x: Word
    y: Word

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", tuple(self.x))
        object.__setattr__(self, "y", tuple(self.y))


@dataclass(frozen=True)
class Certified:
    bound: int

    def __str__(self) -> str:
        return f"CERTIFIED {self.bound}"


@dataclass(frozen=True)
class F1Violation:
    index: int
    word: Word

    def __str__(self) -> str:
        return f"F1 VIOLATION pair {self.index}: {_fmt(self.word)} not in language"


@dataclass(frozen=True)
class F2Violation:
    i: int
    j: int
    xi_yj: Word
    xj_yi: Word

    def __str__(self) -> str:
        return (
            f"F2 VIOLATION pairs {self.i},{self.j}: "
            f"{_fmt(self.xi_yj)} and {_fmt(self.xj_yi)} both in language"
        )


@dataclass(frozen=True)
class DuplicatePair:
    i: int
    j: int

    def __str__(self) -> str:
        return f"DUPLICATE pairs {self.i},{self.j}"


FoolingVerdict = Union[Certified, F1Violation, F2Violation, DuplicatePair]


def _fmt(word: Word) -> str:
    return ",".join(map(str, word)) if word else "eps"


def verify_fooling(pairs: Sequence[FoolingPair], lang: Nfa) -> FoolingVerdict:
    """Check both fooling-set conditions; return the first violation found.

    Order of checks: duplicate pairs, then condition F1 for each pair, then
    F2 for each ``i < j``.
    """
    for p in pairs:
        check_word(p.x, lang.k)
        check_word(p.y, lang.k)
    seen: dict[FoolingPair, int] = {}
    for j, p in enumerate(pairs, 1):
        if p in seen:
            return DuplicatePair(seen[p], j)
        seen[p] = j

    after_x = [lang.run(p.x) for p in pairs]
    acc = lang.accepting_mask

    def member(i: int, j: int) -> bool:
        start = after_x[i]
        return bool(start and lang.run(pairs[j].y, start) & acc)

    for i, p in enumerate(pairs):
        if not member(i, i):
            return F1Violation(i + 1, p.x + p.y)
    for i in range(len(pairs)):
        for j in range(i + 1, len(pairs)):
            if member(i, j) and member(j, i):
                return F2Violation(i + 1, j + 1, pairs[i].x + pairs[j].y, pairs[j].x + pairs[i].y)
    return Certified(len(pairs))


def _w(*parts) -> Word:
    out: list[int] = []
    for part in parts:
        if isinstance(part, int):
            out.append(part)
        else:
            out.extend(part)
    return tuple(out)


def _rep(digit: int, times: int) -> Word:
    return (digit,) * times


def gen_fooling_addition(k: int, m: int, n: int) -> list[FoolingPair]:
    """The ``2mn + 2m + 2n + 1`` pairs for the sum of the two witness families.

    Groups in order: (4^i 3^j, ...) for all i, j; the same shifted by a
    carry-producing k-2; two groups that leave the right operand behind; two
    that leave the left operand behind; finally one pair ending in the
    accepting sink.
    """
    if k < 9 or m < 1 or n < 2:
        raise AutomatonError(f"addition fooling set needs k >= 9, m >= 1, n >= 2; got k={k}, m={m}, n={n}")
    km2 = k - 2
    pairs = []
    for i in range(m):
        for j in range(n):
            pairs.append(FoolingPair(
                _w(_rep(4, i), _rep(3, j)),
                _w(5, _rep(4, m - 1 - i), _rep(3, n - 1 - j), 5),
            ))
    for i in range(m):
        for j in range(n):
            pairs.append(FoolingPair(
                _w(_rep(4, i), _rep(3, (j - 1) % n), km2),
                _w(6, _rep(4, m - 1 - i), _rep(3, n - 1 - j), 5),
            ))
    for i in range(m):
        pairs.append(FoolingPair(
            _w(_rep(4, i), _rep(3, n - 2), km2, 0),
            _w(3, _rep(1, m - 1 - i), 2, 2),
        ))
    for i in range(m):
        pairs.append(FoolingPair(
            _w(_rep(4, i), _rep(3, n - 2), km2, 0, 3),
            _w(_rep(1, m - 1 - i), 2, 2),
        ))
    head = _w(_rep(4, m - 1), _rep(3, n - 1), km2)
    for j in range(n):
        pairs.append(FoolingPair(
            _w(head, 0, _rep(0, j)),
            _w(_rep(0, n - 1 - j), 4, _rep(1, n - 1), 3, 3),
        ))
    for j in range(n):
        pairs.append(FoolingPair(
            _w(head, _rep(0, n), 4, _rep(1, j)),
            _w(_rep(1, n - 1 - j), 3, 3),
        ))
    pairs.append(FoolingPair(_w(_rep(4, m - 1), _rep(3, n - 2), km2, 0, 1), ()))
    return pairs


def gen_fooling_one_state(k: int) -> list[FoolingPair]:
    if k < 9:
        raise AutomatonError(f"one-state fooling set needs k >= 9, got {k}")
    km2 = k - 2
    return [
        FoolingPair((), (5,)),
        FoolingPair((km2,), (6,)),
        FoolingPair((km2, 0), (3, 2)),
        FoolingPair((km2, 0, 3), (2,)),
        FoolingPair((km2, 0, 4), (3,)),
        FoolingPair((km2, 0, 1), ()),
    ]


def gen_fooling_unary(n: int, digit: int = 1) -> list[FoolingPair]:
    """``(a^i, a^(n-i))`` for ``i = 1..n``, with ``a`` the given digit."""
    if n < 1:
        raise AutomatonError("n must be positive")
    return [FoolingPair(_rep(digit, i), _rep(digit, n - i)) for i in range(1, n + 1)]
