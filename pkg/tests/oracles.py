"""Reference implementations used only by the tests.

They avoid the bitmask tables and subset machinery of the library so that a
bug there cannot hide itself.
"""

import itertools
import random

from posadd.automata import Nfa, trim


def naive_accepts(nfa: Nfa, word) -> bool:
    current = {nfa.initial}
    for d in word:
        current = {t for (s, e, t) in nfa.transitions if s in current and e == d}
    return bool(current & set(nfa.accepting))


def all_words(k: int, max_len: int, digits=None):
    alphabet = range(k) if digits is None else sorted(digits)
    for length in range(max_len + 1):
        yield from itertools.product(alphabet, repeat=length)


def scan_language(nfa: Nfa, max_len: int, digits=None) -> set:
    """Accepted words found by testing every word of bounded length."""
    return {w for w in all_words(nfa.k, max_len, digits) if naive_accepts(nfa, w)}


def nerode_classes(nfa: Nfa, prefix_len: int, suffix_len: int, digits=None) -> int:
    """Number of distinct residual signatures over bounded prefixes and suffixes."""
    suffixes = list(all_words(nfa.k, suffix_len, digits))
    signatures = set()
    for prefix in all_words(nfa.k, prefix_len, digits):
        signatures.add(tuple(naive_accepts(nfa, prefix + s) for s in suffixes))
    return len(signatures)


def brute_sum_words(left: set, right: set, k: int, max_len: int) -> set:
    """Sums of LSD-first words, computed digit-by-digit-free with Python ints."""
    def val(w):
        return sum(d * k**i for i, d in enumerate(w))

    out = set()
    for u in left:
        for v in right:
            s = val(u) + val(v)
            digits = []
            while s:
                s, r = divmod(s, k)
                digits.append(r)
            if len(digits) <= max_len:
                out.add(tuple(digits))
    return out


def random_partial_dfa(rng: random.Random, k: int = 10, max_states: int = 3, max_out: int = 3) -> Nfa:
    """A trimmed partial DFA whose transitions avoid digit 0."""
    n = rng.randint(1, max_states)
    trans = set()
    for q in range(n):
        for d in rng.sample(range(1, k), rng.randint(1, max_out)):
            trans.add((q, d, rng.randrange(n)))
    accepting = set(rng.sample(range(n), rng.randint(1, n)))
    return trim(Nfa(k, n, 0, accepting, trans))


def random_nfa(rng: random.Random, k: int = 3, max_states: int = 4, density: float = 0.3) -> Nfa:
    n = rng.randint(1, max_states)
    trans = {(s, d, t) for s in range(n) for d in range(k) for t in range(n) if rng.random() < density}
    accepting = {q for q in range(n) if rng.random() < 0.4}
    return Nfa(k, n, rng.randrange(n), accepting, trans)


def has_equivalent_pair(dfa: Nfa) -> bool:
    """Table filling: True if two distinct states are indistinguishable."""
    n, k = dfa.state_count, dfa.k
    delta = {(s, d): t for s, d, t in dfa.transitions}
    marked = {(p, q) for p in range(n) for q in range(p + 1, n) if (p in dfa.accepting) != (q in dfa.accepting)}
    changed = True
    while changed:
        changed = False
        for p in range(n):
            for q in range(p + 1, n):
                if (p, q) in marked:
                    continue
                for d in range(k):
                    a, b = sorted((delta[p, d], delta[q, d]))
                    if a != b and (a, b) in marked:
                        marked.add((p, q))
                        changed = True
                        break
    return len(marked) < n * (n - 1) // 2
