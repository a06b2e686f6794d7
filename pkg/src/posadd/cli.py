"""Command-line interface.

Exit codes: 0 success / accepted, 1 a negative answer (rejected, mismatch,
violation), 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import sys
import warnings
from pathlib import Path

from . import automata as core
from .automata import AutomatonError, Nfa
from .construction import (
    bound_states,
    build_sum_msd,
    build_sum_nfa,
    build_sum_one_state,
    census,
)
from .fooling import (
    Certified,
    gen_fooling_addition,
    gen_fooling_one_state,
    gen_fooling_unary,
    verify_fooling,
)
from .positional import sum_language_oracle
from .serialize import (
    format_automaton,
    format_pairs,
    format_word,
    parse_automaton,
    parse_pairs,
    parse_word,
    to_dot,
)
from .witnesses import (
    FAMILIES,
    make_witness,
    one_state_witness_a,
    one_state_witness_b,
    witness_a,
    witness_b,
)

MAX_CLI_BASE = 36
DEFAULT_MAX_LEN = 6


class UsageError(Exception):
    pass


def _read_nfa(path: str) -> Nfa:
    try:
        nfa = parse_automaton(Path(path).read_text())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    if nfa.k > MAX_CLI_BASE:
        raise UsageError(f"{path}: base {nfa.k} exceeds the supported maximum {MAX_CLI_BASE}")
    return nfa


def _write(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _check_base(k: int) -> None:
    if not 2 <= k <= MAX_CLI_BASE:
        raise UsageError(f"base must be between 2 and {MAX_CLI_BASE}, got {k}")


def _census_line(nfa: Nfa) -> str:
    groups = census(nfa)
    parts = [f"{name}={groups.get(name, 0)}" for name in ("pair", "only_a", "only_b", "accept")]
    if groups.get("merged"):
        parts.append(f"merged={groups['merged']}")
    if groups.get("other"):
        parts.append(f"other={groups['other']}")
    return f"census: {' '.join(parts)} total={nfa.state_count}"


# -- subcommands --------------------------------------------------------------

def cmd_witness(args) -> int:
    _check_base(args.k)
    nfa = make_witness(args.family, args.k, args.m, args.n)
    _write(format_automaton(nfa), args.output)
    return 0


def cmd_sum(args) -> int:
    left, right = _read_nfa(args.left), _read_nfa(args.right)
    if args.msd:
        result = build_sum_msd(left, right)
    elif left.state_count == right.state_count == 1 and not args.no_one_state_opt:
        result = build_sum_one_state(left, right)
    else:
        result = build_sum_nfa(left, right)
    if args.trim:
        result = core.trim(result)
    print(_census_line(result), file=sys.stderr)
    _write(format_automaton(result), args.output)
    return 0


def cmd_member(args) -> int:
    nfa = _read_nfa(args.file)
    word = parse_word(args.word, nfa.k)
    ok = core.accepts(nfa, word)
    print("true" if ok else "false")
    return 0 if ok else 1


def _compare(built: set, oracle: frozenset) -> tuple | None:
    diff = sorted(built ^ oracle, key=lambda w: (len(w), w))
    if not diff:
        return None
    word = diff[0]
    return word, "construction" if word in built else "oracle"


def cmd_check_sum(args) -> int:
    left, right = _read_nfa(args.left), _read_nfa(args.right)
    oracle = sum_language_oracle(left, right, args.max_len)
    built = core.enumerate_accepted(build_sum_nfa(left, right), args.max_len)
    print(f"construction: {len(built)} words")
    print(f"oracle: {len(oracle.words)} words")
    mismatch = _compare(built, oracle.words)
    if mismatch is None:
        print("OK")
        return 0
    word, side = mismatch
    print(f"MISMATCH {format_word(word)} only in {side}")
    return 1


def cmd_fool_gen(args) -> int:
    if args.one_state:
        pairs = gen_fooling_one_state(args.k)
    elif args.unary is not None:
        pairs = gen_fooling_unary(args.unary)
    else:
        if args.m is None or args.n is None:
            raise UsageError("fool-gen needs --m and --n, --one-state, or --unary N")
        pairs = gen_fooling_addition(args.k, args.m, args.n)
    _write(format_pairs(pairs), args.output)
    return 0


def cmd_fool_verify(args) -> int:
    nfa = _read_nfa(args.lang)
    try:
        pairs = parse_pairs(Path(args.pairs).read_text())
    except OSError as exc:
        raise UsageError(f"cannot read {args.pairs}: {exc.strerror}") from None
    verdict = verify_fooling(pairs, nfa)
    print(verdict)
    return 0 if isinstance(verdict, Certified) else 1


def worst_case_instance(k: int, m: int, n: int):
    """Operands, sum automaton and fooling set realising the bound for (m, n).

    For ``n == 1 < m`` the operand roles are swapped; addition commutes.
    """
    if m == n == 1:
        a, b = one_state_witness_a(k), one_state_witness_b(k)
        return a, b, build_sum_one_state(a, b), gen_fooling_one_state(k)
    if n == 1:
        a, b = witness_b(k, m), witness_a(k, 1)
        return a, b, build_sum_nfa(a, b), gen_fooling_addition(k, 1, m)
    a, b = witness_a(k, m), witness_b(k, n)
    return a, b, build_sum_nfa(a, b), gen_fooling_addition(k, m, n)


def cmd_table(args) -> int:
    _check_base(args.k)
    if args.k < 9:
        raise UsageError("the worst-case witnesses need base k >= 9")
    if args.max_m < 1 or args.max_n < 1:
        raise UsageError("--max-m and --max-n must be positive")
    header = ["m", "n", "f_k"]
    if args.verify:
        header += ["states", "check-sum", "fool-verify"]
    print("\t".join(header))
    failed = False
    for m in range(1, args.max_m + 1):
        for n in range(1, args.max_n + 1):
            f = bound_states(m, n)
            row = [str(m), str(n), str(f)]
            if args.verify:
                a, b, nfa, pairs = worst_case_instance(args.k, m, n)
                oracle = sum_language_oracle(a, b, args.max_len)
                sum_ok = core.enumerate_accepted(nfa, args.max_len) == oracle.words
                verdict = verify_fooling(pairs, nfa)
                fool_ok = verdict == Certified(f) and nfa.state_count == f
                failed |= not (sum_ok and fool_ok)
                row += [str(nfa.state_count), "PASS" if sum_ok else "FAIL", "PASS" if fool_ok else "FAIL"]
            print("\t".join(row))
    return 1 if failed else 0


def cmd_dot(args) -> int:
    sys.stdout.write(to_dot(_read_nfa(args.file)))
    return 0


def cmd_reverse(args) -> int:
    _write(format_automaton(core.reverse(_read_nfa(args.file))), args.output)
    return 0


def cmd_restrict(args) -> int:
    nfa = _read_nfa(args.file)
    digits = parse_word(args.digits, nfa.k)
    _write(format_automaton(core.restrict_alphabet(nfa, digits)), args.output)
    return 0


def cmd_equiv(args) -> int:
    same = core.equivalent(_read_nfa(args.file1), _read_nfa(args.file2))
    print("true" if same else "false")
    return 0 if same else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="posadd", description="Positional addition of regular sets of numbers.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("witness", help="write a witness automaton")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("sum", help="build the sum automaton of two operands")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("-o", "--output")
    p.add_argument("--msd", action="store_true", help="operands read most significant digit first")
    p.add_argument("--no-one-state-opt", action="store_true")
    p.add_argument("--trim", action="store_true")
    p.set_defaults(func=cmd_sum)

    p = sub.add_parser("member", help="test membership of a word")
    p.add_argument("file")
    p.add_argument("word")
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("check-sum", help="compare the construction with the integer oracle")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--max-len", type=int, default=DEFAULT_MAX_LEN)
    p.set_defaults(func=cmd_check_sum)

    p = sub.add_parser("fool-gen", help="write a fooling set")
    p.add_argument("--k", type=int, default=9)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--one-state", action="store_true")
    group.add_argument("--unary", type=int, metavar="N")
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_fool_gen)

    p = sub.add_parser("fool-verify", help="verify a fooling set against an automaton")
    p.add_argument("lang")
    p.add_argument("pairs")
    p.set_defaults(func=cmd_fool_verify)

    p = sub.add_parser("table", help="tabulate the state complexity")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--max-m", type=int, required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--verify", action="store_true")
    p.add_argument("--max-len", type=int, default=DEFAULT_MAX_LEN)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("dot", help="print a DOT digraph")
    p.add_argument("file")
    p.set_defaults(func=cmd_dot)

    p = sub.add_parser("reverse", help="reverse an automaton")
    p.add_argument("file")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_reverse)

    p = sub.add_parser("restrict", help="keep only transitions on the given digits")
    p.add_argument("file")
    p.add_argument("--digits", required=True)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_restrict)

    p = sub.add_parser("equiv", help="decide language equivalence")
    p.add_argument("file1")
    p.add_argument("file2")
    p.set_defaults(func=cmd_equiv)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            code = args.func(args)
        for w in caught:
            print(f"warning: {w.message}", file=sys.stderr)
        return code
    except (UsageError, AutomatonError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
