"""Nondeterministic finite automata over digit alphabets.

States are dense integers ``0 .. state_count-1``.  The alphabet of an
automaton in base ``k`` is the set of digits ``0 .. k-1``.  Words are tuples
of digits, read left to right; throughout the package they are interpreted
least-significant digit first.

Every operation is a pure function returning a new :class:`Nfa`.
"""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Iterable, Sequence

Word = tuple[int, ...]
Transition = tuple[int, int, int]


class AutomatonError(ValueError):
    """Raised on malformed automata or inputs that do not fit the alphabet."""


def _bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Nfa:
    """An automaton ``(states, Sigma_k, delta, initial, accepting)``.

    ``labels`` optionally names each state for diagnostics and DOT output;
    it does not take part in equality.
    """

    k: int
    state_count: int
    initial: int
    accepting: frozenset[int]
    transitions: frozenset[Transition]
    labels: tuple[Any, ...] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        # Normalise containers so that callers may pass lists or sets.
        object.__setattr__(self, "accepting", frozenset(self.accepting))
        object.__setattr__(self, "transitions", frozenset(tuple(t) for t in self.transitions))
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))
        if self.k < 2:
            raise AutomatonError(f"base must be at least 2, got {self.k}")
        if self.state_count < 1:
            raise AutomatonError("an automaton needs at least one state")
        n = self.state_count
        if not 0 <= self.initial < n:
            raise AutomatonError(f"initial state {self.initial} out of range")
        for q in self.accepting:
            if not 0 <= q < n:
                raise AutomatonError(f"accepting state {q} out of range")
        for src, digit, dst in self.transitions:
            if not (0 <= src < n and 0 <= dst < n):
                raise AutomatonError(f"transition {(src, digit, dst)} uses a state out of range")
            if not 0 <= digit < self.k:
                raise AutomatonError(f"transition {(src, digit, dst)} uses digit outside base {self.k}")
        if self.labels is not None and len(self.labels) != n:
            raise AutomatonError("labels must name every state exactly once")

    # -- derived tables -----------------------------------------------------

    @cached_property
    def successor_masks(self) -> tuple[tuple[int, ...], ...]:
        """``successor_masks[q][d]`` is the bitmask of ``delta(q, d)``."""
        table = [[0] * self.k for _ in range(self.state_count)]
        for src, digit, dst in self.transitions:
            table[src][digit] |= 1 << dst
        return tuple(tuple(row) for row in table)

    @cached_property
    def accepting_mask(self) -> int:
        mask = 0
        for q in self.accepting:
            mask |= 1 << q
        return mask

    @cached_property
    def _distance_to_accept(self) -> tuple[float, ...]:
        # Backward BFS: shortest word leading from each state into F.
        preds: dict[int, set[int]] = defaultdict(set)
        for src, _, dst in self.transitions:
            preds[dst].add(src)
        dist = [float("inf")] * self.state_count
        queue = deque()
        for q in self.accepting:
            dist[q] = 0
            queue.append(q)
        while queue:
            q = queue.popleft()
            for p in preds[q]:
                if dist[p] == float("inf"):
                    dist[p] = dist[q] + 1
                    queue.append(p)
        return tuple(dist)

    def step(self, mask: int, digit: int) -> int:
        out = 0
        row = self.successor_masks
        for q in _bits(mask):
            out |= row[q][digit]
        return out

    def run(self, word: Sequence[int], start: int | None = None) -> int:
        """Return the bitmask of states reached on ``word``."""
        mask = (1 << self.initial) if start is None else start
        for digit in word:
            if not 0 <= digit < self.k:
                raise AutomatonError(f"digit {digit} outside base {self.k}")
            mask = self.step(mask, digit)
            if not mask:
                break
        return mask

    def label(self, q: int) -> str:
        if self.labels is None:
            return str(q)
        return str(self.labels[q])

    def out_transitions(self, q: int) -> list[tuple[int, int]]:
        return sorted((d, t) for s, d, t in self.transitions if s == q)

    @property
    def is_partial_dfa(self) -> bool:
        seen = set()
        for src, digit, _ in self.transitions:
            if (src, digit) in seen:
                return False
            seen.add((src, digit))
        return True

    @property
    def is_complete_dfa(self) -> bool:
        return self.is_partial_dfa and len(self.transitions) == self.state_count * self.k

    def __repr__(self) -> str:
        return (
            f"Nfa(k={self.k}, states={self.state_count}, initial={self.initial}, "
            f"accepting={sorted(self.accepting)}, transitions={len(self.transitions)})"
        )


def empty_language(k: int) -> Nfa:
    return Nfa(k, 1, 0, frozenset(), frozenset())


def epsilon_language(k: int) -> Nfa:
    return Nfa(k, 1, 0, frozenset({0}), frozenset())


def from_word(word: Sequence[int], k: int) -> Nfa:
    """A chain automaton accepting exactly ``word``."""
    n = len(word)
    trans = {(i, d, i + 1) for i, d in enumerate(word)}
    return Nfa(k, n + 1, 0, {n}, trans)


def from_words(words: Iterable[Sequence[int]], k: int) -> Nfa:
    """A prefix-tree automaton (a partial DFA) for a finite set of words."""
    node_ids: dict[Word, int] = {(): 0}
    trans = set()
    accepting = set()
    for word in sorted({tuple(w) for w in words}):
        prefix: Word = ()
        for d in word:
            nxt = prefix + (d,)
            if nxt not in node_ids:
                node_ids[nxt] = len(node_ids)
                trans.add((node_ids[prefix], d, node_ids[nxt]))
            prefix = nxt
        accepting.add(node_ids[prefix])
    return Nfa(k, len(node_ids), 0, accepting, trans)


def check_word(word: Sequence[int], k: int) -> Word:
    word = tuple(word)
    for d in word:
        if not 0 <= d < k:
            raise AutomatonError(f"digit {d} outside base {k}")
    return word


def accepts(nfa: Nfa, word: Sequence[int]) -> bool:
    """True iff some run of ``nfa`` on ``word`` ends in an accepting state."""
    check_word(word, nfa.k)
    return bool(nfa.run(word) & nfa.accepting_mask)


def enumerate_accepted(nfa: Nfa, max_len: int) -> set[Word]:
    """All accepted words of length at most ``max_len``.

    Explores subsets level by level; words sharing a subset are extended
    together, and subsets that cannot reach an accepting state within the
    remaining length are pruned.
    """
    if max_len < 0:
        raise AutomatonError("max_len must be non-negative")
    dist = nfa._distance_to_accept

    def reach(mask: int) -> float:
        return min(dist[q] for q in _bits(mask))

    found: set[Word] = set()
    start = 1 << nfa.initial
    if reach(start) > max_len:
        return found
    frontier: dict[int, list[Word]] = {start: [()]}
    step_cache: dict[tuple[int, int], int] = {}
    for length in range(max_len + 1):
        for mask, words in frontier.items():
            if mask & nfa.accepting_mask:
                found.update(words)
        if length == max_len:
            break
        remaining = max_len - length - 1
        nxt: dict[int, list[Word]] = defaultdict(list)
        for mask, words in frontier.items():
            for d in range(nfa.k):
                key = (mask, d)
                target = step_cache.get(key)
                if target is None:
                    target = step_cache[key] = nfa.step(mask, d)
                if target and reach(target) <= remaining:
                    nxt[target].extend(w + (d,) for w in words)
        frontier = nxt
        if not frontier:
            break
    return found


def shortest_accepted(nfa: Nfa) -> Word | None:
    """A shortest accepted word (lexicographically least among those), or None."""
    start = 1 << nfa.initial
    parent: dict[int, tuple[int, int] | None] = {start: None}
    queue = deque([start])
    while queue:
        mask = queue.popleft()
        if mask & nfa.accepting_mask:
            word = []
            while parent[mask] is not None:
                prev, d = parent[mask]
                word.append(d)
                mask = prev
            return tuple(reversed(word))
        for d in range(nfa.k):
            target = nfa.step(mask, d)
            if target and target not in parent:
                parent[target] = (mask, d)
                queue.append(target)
    return None


def is_empty(nfa: Nfa) -> bool:
    return nfa._distance_to_accept[nfa.initial] == float("inf")


def reverse(nfa: Nfa) -> Nfa:
    """Automaton for the reversed language, with at most one extra state."""
    flipped = {(dst, d, src) for src, d, dst in nfa.transitions}
    labels = nfa.labels
    if len(nfa.accepting) == 1:
        (start,) = nfa.accepting
        return Nfa(nfa.k, nfa.state_count, start, {nfa.initial}, flipped, labels)
    # A fresh initial state copies the outgoing edges of every old accepting state.
    fresh = nfa.state_count
    trans = set(flipped)
    for src, d, dst in flipped:
        if src in nfa.accepting:
            trans.add((fresh, d, dst))
    accepting = {nfa.initial}
    if nfa.initial in nfa.accepting:
        accepting.add(fresh)
    if labels is not None:
        labels = labels + ("start",)
    return Nfa(nfa.k, nfa.state_count + 1, fresh, accepting, trans, labels)


def _require_same_base(a: Nfa, b: Nfa) -> None:
    if a.k != b.k:
        raise AutomatonError(f"automata over different bases: {a.k} and {b.k}")


def intersect(a: Nfa, b: Nfa) -> Nfa:
    """Product automaton; state ``p * b.state_count + q`` stands for ``(p, q)``."""
    _require_same_base(a, b)
    nb = b.state_count
    by_digit: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for q, d, q2 in b.transitions:
        by_digit[d].append((q, q2))
    trans = {
        (p * nb + q, d, p2 * nb + q2)
        for p, d, p2 in a.transitions
        for q, q2 in by_digit[d]
    }
    accepting = {p * nb + q for p in a.accepting for q in b.accepting}
    return Nfa(a.k, a.state_count * nb, a.initial * nb + b.initial, accepting, trans)


def restrict_alphabet(nfa: Nfa, digits: Iterable[int]) -> Nfa:
    keep = set(digits)
    for d in keep:
        if not 0 <= d < nfa.k:
            raise AutomatonError(f"digit {d} outside base {nfa.k}")
    trans = {t for t in nfa.transitions if t[1] in keep}
    return Nfa(nfa.k, nfa.state_count, nfa.initial, nfa.accepting, trans, nfa.labels)


def trim(nfa: Nfa) -> Nfa:
    """Drop states that are unreachable or cannot reach an accepting state."""
    reachable = {nfa.initial}
    queue = deque([nfa.initial])
    succ: dict[int, set[int]] = defaultdict(set)
    for src, _, dst in nfa.transitions:
        succ[src].add(dst)
    while queue:
        q = queue.popleft()
        for r in succ[q]:
            if r not in reachable:
                reachable.add(r)
                queue.append(r)
    dist = nfa._distance_to_accept
    useful = sorted(q for q in reachable if dist[q] != float("inf"))
    if not useful:
        return empty_language(nfa.k)
    return _renumber(nfa, useful)


def _renumber(nfa: Nfa, keep: Sequence[int]) -> Nfa:
    index = {q: i for i, q in enumerate(keep)}
    trans = {
        (index[s], d, index[t])
        for s, d, t in nfa.transitions
        if s in index and t in index
    }
    accepting = {index[q] for q in nfa.accepting if q in index}
    labels = None if nfa.labels is None else tuple(nfa.labels[q] for q in keep)
    return Nfa(nfa.k, len(keep), index[nfa.initial], accepting, trans, labels)


def determinize(nfa: Nfa) -> Nfa:
    """Subset construction; the result is complete and only reachable subsets appear.

    The empty subset, when reached, serves as the dead state.
    """
    start = 1 << nfa.initial
    index = {start: 0}
    order = [start]
    trans = set()
    i = 0
    while i < len(order):
        mask = order[i]
        for d in range(nfa.k):
            target = nfa.step(mask, d)
            if target not in index:
                index[target] = len(order)
                order.append(target)
            trans.add((i, d, index[target]))
        i += 1
    accepting = {index[m] for m in order if m & nfa.accepting_mask}
    labels = tuple("{" + ",".join(str(q) for q in _bits(m)) + "}" for m in order)
    return Nfa(nfa.k, len(order), 0, accepting, trans, labels)


def minimize(dfa: Nfa) -> Nfa:
    """Hopcroft partition refinement on a complete DFA.

    States of the result are numbered in breadth-first order from the initial
    state with digits tried in increasing order, so two minimal DFAs for the
    same language compare equal.
    """
    if not dfa.is_complete_dfa:
        raise AutomatonError("minimize expects a complete DFA")
    k = dfa.k
    delta = [[0] * k for _ in range(dfa.state_count)]
    for s, d, t in dfa.transitions:
        delta[s][d] = t

    # Restrict to reachable states first.
    reachable = [dfa.initial]
    seen = {dfa.initial}
    for q in reachable:
        for t in delta[q]:
            if t not in seen:
                seen.add(t)
                reachable.append(t)

    inverse: list[list[list[int]]] = [[[] for _ in range(k)] for _ in range(dfa.state_count)]
    for q in reachable:
        for d, t in enumerate(delta[q]):
            inverse[t][d].append(q)

    finals = frozenset(q for q in reachable if q in dfa.accepting)
    others = frozenset(seen - finals)
    partition = [blk for blk in (finals, others) if blk]
    block_of = {}
    for b, blk in enumerate(partition):
        for q in blk:
            block_of[q] = b
    work = deque((b, d) for b in range(len(partition)) for d in range(k))
    while work:
        b, d = work.popleft()
        splitter = partition[b]
        pre = {p for t in splitter for p in inverse[t][d]}
        touched: dict[int, set[int]] = defaultdict(set)
        for p in pre:
            touched[block_of[p]].add(p)
        for cb, inside in touched.items():
            blk = partition[cb]
            if len(inside) == len(blk):
                continue
            outside = blk - inside
            inside = frozenset(inside)
            small, large = (inside, outside) if len(inside) <= len(outside) else (outside, inside)
            partition[cb] = large
            nb = len(partition)
            partition.append(small)
            for q in small:
                block_of[q] = nb
            for e in range(k):
                work.append((nb, e))

    # Canonical BFS numbering of blocks.
    start = block_of[dfa.initial]
    number = {start: 0}
    order = [start]
    trans = set()
    for i, blk_id in enumerate(order):
        rep = next(iter(partition[blk_id]))
        for d in range(k):
            tgt = block_of[delta[rep][d]]
            if tgt not in number:
                number[tgt] = len(order)
                order.append(tgt)
            trans.add((i, d, number[tgt]))
    accepting = {number[b] for b in order if next(iter(partition[b])) in dfa.accepting}
    return Nfa(k, len(order), 0, accepting, trans)


def equivalent(a: Nfa, b: Nfa) -> bool:
    """Language equality, decided by comparing canonical minimal DFAs."""
    _require_same_base(a, b)
    return minimize(determinize(a)) == minimize(determinize(b))


def ends_with_zero(k: int) -> Nfa:
    """Automaton for ``Sigma_k^* 0``."""
    trans = {(0, d, 0) for d in range(k)} | {(0, 0, 1)}
    return Nfa(k, 2, 0, {1}, trans)


def is_canonical_language(nfa: Nfa) -> bool:
    """True iff no accepted word ends with digit 0.

    Words are least-significant digit first, so a final 0 is a leading zero
    of the written number.
    """
    return is_empty(intersect(nfa, ends_with_zero(nfa.k)))


def non_canonical_witness(nfa: Nfa) -> Word | None:
    """A shortest accepted word ending with 0, if any."""
    return shortest_accepted(intersect(nfa, ends_with_zero(nfa.k)))
