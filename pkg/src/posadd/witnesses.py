"""Operand automata that force the sum construction to its worst case."""

from __future__ import annotations

from .automata import AutomatonError, Nfa

FAMILIES = ("a", "b", "unary", "one-a", "one-b")


def _need(cond: bool, message: str) -> None:
    if not cond:
        raise AutomatonError(message)


def witness_a(k: int, m: int) -> Nfa:
    """Partial DFA over {1, 2, k-1} counting 1s modulo m; accepts count m-1."""
    _need(k >= 9, f"witness family a requires base k >= 9, got {k}")
    _need(m >= 1, f"witness family a requires m >= 1, got {m}")
    trans = set()
    for i in range(m):
        trans.add((i, 1, (i + 1) % m))
        trans.add((i, 2, i))
        trans.add((i, k - 1, i))
    return Nfa(k, m, 0, {m - 1}, trans)


def witness_b(k: int, n: int) -> Nfa:
    """Partial DFA over {1, 3, k-1} counting 1s and (k-1)s modulo n; accepts count n-1."""
    _need(k >= 9, f"witness family b requires base k >= 9, got {k}")
    _need(n >= 1, f"witness family b requires n >= 1, got {n}")
    trans = set()
    for j in range(n):
        trans.add((j, 1, (j + 1) % n))
        trans.add((j, k - 1, (j + 1) % n))
        trans.add((j, 3, j))
    return Nfa(k, n, 0, {n - 1}, trans)


def unary_witness(k: int, m: int) -> Nfa:
    """``(1^m)^*`` as an m-cycle on digit 1."""
    _need(k >= 2, f"unary witness requires base k >= 2, got {k}")
    _need(m >= 1, f"unary witness requires m >= 1, got {m}")
    return Nfa(k, m, 0, {0}, {(i, 1, (i + 1) % m) for i in range(m)})


def one_state_witness_a(k: int) -> Nfa:
    """``{2, k-1}^*``."""
    _need(k >= 9, f"one-state witness requires base k >= 9, got {k}")
    return Nfa(k, 1, 0, {0}, {(0, 2, 0), (0, k - 1, 0)})


def one_state_witness_b(k: int) -> Nfa:
    """``{3, k-1}^*``."""
    _need(k >= 9, f"one-state witness requires base k >= 9, got {k}")
    return Nfa(k, 1, 0, {0}, {(0, 3, 0), (0, k - 1, 0)})


def unary_cycle(k: int, n: int, digit: int = 1) -> Nfa:
    """Words over a single digit whose length is a multiple of n."""
    _need(n >= 1, "cycle length must be positive")
    _need(0 <= digit < k, f"digit {digit} outside base {k}")
    return Nfa(k, n, 0, {0}, {(i, digit, (i + 1) % n) for i in range(n)})


def make_witness(family: str, k: int, m: int | None = None, n: int | None = None) -> Nfa:
    """Dispatch by family name as used on the command line."""
    size = m if m is not None else n
    if family == "a":
        _need(m is not None, "family a needs --m")
        return witness_a(k, m)
    if family == "b":
        _need(n is not None, "family b needs --n")
        return witness_b(k, n)
    if family == "unary":
        _need(size is not None, "family unary needs --m or --n")
        return unary_witness(k, size)
    if family == "one-a":
        return one_state_witness_a(k)
    if family == "one-b":
        return one_state_witness_b(k)
    raise AutomatonError(f"unknown witness family {family!r}")
