"""Text formats for automata, words and fooling-set pairs, plus DOT export.

Automaton file::

    k 9
    states 2
    initial 0
    accepting 1
    trans 0 1 1
    trans 1 1 0

``#`` starts a comment.  State labels, when an automaton has them, are
written as ``# label <state> <text>`` comment lines; readers that ignore
comments lose nothing else.
"""

from __future__ import annotations

import re

from .automata import AutomatonError, Nfa, Word, check_word
from .construction import Accept, MergedCarry, OnlyA, OnlyB, Pair, state_group
from .fooling import FoolingPair


class FormatError(AutomatonError):
    """Malformed text input."""


EPS = "eps"
_LABEL_TAG = "label"
_WORD_RE = re.compile(r"[0-9]+(?:,[0-9]+)*")


def format_word(word: Word) -> str:
    return ",".join(str(d) for d in word) if word else EPS


def parse_word(text: str, k: int | None = None) -> Word:
    if text == EPS:
        return ()
    if not _WORD_RE.fullmatch(text):
        raise FormatError(f"bad word {text!r}: expected 'eps' or comma-separated decimal digits")
    word = tuple(int(part) for part in text.split(","))
    if k is not None:
        check_word(word, k)
    return word


def format_automaton(nfa: Nfa) -> str:
    lines = [
        f"k {nfa.k}",
        f"states {nfa.state_count}",
        f"initial {nfa.initial}",
        " ".join(["accepting"] + [str(q) for q in sorted(nfa.accepting)]),
    ]
    lines += [f"trans {s} {d} {t}" for s, d, t in sorted(nfa.transitions)]
    if nfa.labels is not None:
        lines += [f"# {_LABEL_TAG} {q} {nfa.label(q)}" for q in range(nfa.state_count)]
    return "\n".join(lines) + "\n"


def _int(token: str, lineno: int) -> int:
    if not re.fullmatch(r"-?\d+", token):
        raise FormatError(f"line {lineno}: expected an integer, got {token!r}")
    return int(token)


def parse_automaton(text: str) -> Nfa:
    header: dict[str, object] = {}
    trans = []
    labels: dict[int, str] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line.startswith("#"):
            parts = line[1:].split(None, 2)
            if len(parts) == 3 and parts[0] == _LABEL_TAG and parts[1].isdigit():
                labels[int(parts[1])] = parts[2]
            continue
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, *args = line.split()
        if key in ("k", "states", "initial"):
            if key in header:
                raise FormatError(f"line {lineno}: duplicate {key!r}")
            if len(args) != 1:
                raise FormatError(f"line {lineno}: {key!r} takes one integer")
            header[key] = _int(args[0], lineno)
        elif key == "accepting":
            if key in header:
                raise FormatError(f"line {lineno}: duplicate 'accepting'")
            header[key] = [_int(a, lineno) for a in args]
        elif key == "trans":
            if len(args) != 3:
                raise FormatError(f"line {lineno}: 'trans' takes source, digit, target")
            trans.append(tuple(_int(a, lineno) for a in args))
        else:
            raise FormatError(f"line {lineno}: unknown keyword {key!r}")
    missing = [key for key in ("k", "states", "initial", "accepting") if key not in header]
    if missing:
        raise FormatError(f"missing header line(s): {', '.join(missing)}")
    if len(set(trans)) != len(trans):
        raise FormatError("duplicate transition lines")
    n = header["states"]
    label_tuple = None
    if labels:
        if set(labels) != set(range(n)):
            raise FormatError("label comments must cover every state")
        label_tuple = tuple(parse_state_label(labels[q]) for q in range(n))
    return Nfa(header["k"], n, header["initial"], frozenset(header["accepting"]), frozenset(trans), label_tuple)


_PAIR_RE = re.compile(r"\((\d+),(\d+),([01])\)")
_ONLY_RE = re.compile(r"\(([AB]),(\d+),([01])\)")


def parse_state_label(text: str):
    """Recover structured sum-construction labels; other text stays a string."""
    if m := _PAIR_RE.fullmatch(text):
        return Pair(int(m[1]), int(m[2]), int(m[3]))
    if m := _ONLY_RE.fullmatch(text):
        cls = OnlyA if m[1] == "A" else OnlyB
        return cls(int(m[2]), int(m[3]))
    if text == str(Accept()):
        return Accept()
    if text == str(MergedCarry()):
        return MergedCarry()
    return text


def format_pairs(pairs: list[FoolingPair]) -> str:
    return "".join(f"{format_word(p.x)};{format_word(p.y)}\n" for p in pairs)


def parse_pairs(text: str) -> list[FoolingPair]:
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split(";")
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected '<word>;<word>'")
        pairs.append(FoolingPair(parse_word(parts[0]), parse_word(parts[1])))
    return pairs


_COLORS = {
    "pair": "lightblue",
    "only_a": "palegreen",
    "only_b": "khaki",
    "accept": "salmon",
    "merged": "plum",
}


def to_dot(nfa: Nfa, name: str = "nfa") -> str:
    out = [f"digraph {name} {{", "  rankdir=LR;", '  __start [shape=point, label=""];']
    for q in range(nfa.state_count):
        attrs = [f'label="{nfa.label(q)}"']
        attrs.append("shape=doublecircle" if q in nfa.accepting else "shape=circle")
        if nfa.labels is not None:
            lab = nfa.labels[q]
            color = _COLORS.get(state_group(lab))
            if color:
                attrs.append(f'style=filled, fillcolor="{color}"')
            if getattr(lab, "carry", 0) == 1 or isinstance(lab, MergedCarry):
                attrs.append("penwidth=2")
        out.append(f"  q{q} [{', '.join(attrs)}];")
    out.append(f"  __start -> q{nfa.initial};")
    edges: dict[tuple[int, int], list[int]] = {}
    for s, d, t in sorted(nfa.transitions):
        edges.setdefault((s, t), []).append(d)
    for (s, t), digits in edges.items():
        out.append(f'  q{s} -> q{t} [label="{",".join(map(str, digits))}"];')
    out.append("}")
    return "\n".join(out) + "\n"
