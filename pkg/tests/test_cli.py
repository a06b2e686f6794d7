import pytest

from posadd.automata import equivalent, from_word
from posadd.cli import main
from posadd.construction import Pair, build_sum_nfa, build_sum_one_state
from posadd.fooling import FoolingPair, gen_fooling_addition
from posadd.serialize import (
    FormatError,
    format_automaton,
    format_pairs,
    format_word,
    parse_automaton,
    parse_pairs,
    parse_word,
    to_dot,
)
from posadd.witnesses import (
    one_state_witness_a,
    one_state_witness_b,
    unary_cycle,
    unary_witness,
    witness_a,
    witness_b,
)


@pytest.fixture
def files(tmp_path):
    def write(name, nfa):
        path = tmp_path / name
        path.write_text(format_automaton(nfa))
        return str(path)
    return write


# formats

GENERATED = [
    witness_a(9, 3), witness_b(10, 2), unary_witness(2, 4),
    one_state_witness_a(9), build_sum_nfa(witness_a(9, 2), witness_b(9, 2)),
    build_sum_one_state(one_state_witness_a(9), one_state_witness_b(9)),
]


@pytest.mark.parametrize("nfa", GENERATED)
def test_automaton_round_trip(nfa):
    text = format_automaton(nfa)
    back = parse_automaton(text)
    assert back == nfa
    assert format_automaton(back) == text
    if nfa.labels is not None:
        assert back.labels == nfa.labels


def test_automaton_text_layout():
    text = format_automaton(witness_a(9, 1))
    assert text == "k 9\nstates 1\ninitial 0\naccepting 0\ntrans 0 1 0\ntrans 0 2 0\ntrans 0 8 0\n"


def test_parse_tolerates_comments_and_order():
    text = "# demo\ntrans 0 1 1\n\nk 3  # base\nstates 2\naccepting\ninitial 0\n"
    nfa = parse_automaton(text)
    assert nfa.accepting == frozenset() and nfa.transitions == {(0, 1, 1)}


@pytest.mark.parametrize("text", [
    "k 3\nstates 2\ninitial 0\n",
    "k 3\nk 3\nstates 1\ninitial 0\naccepting\n",
    "k 3\nstates 1\ninitial 0\naccepting\nbogus 1\n",
    "k 3\nstates 1\ninitial 0\naccepting\ntrans 0 1\n",
    "k x\nstates 1\ninitial 0\naccepting\n",
    "k 3\nstates 1\ninitial 0\naccepting\ntrans 0 1 0\ntrans 0 1 0\n",
])
def test_parse_errors(text):
    with pytest.raises(FormatError):
        parse_automaton(text)


def test_word_text():
    assert parse_word("eps") == ()
    assert parse_word("5,4,3,5") == (5, 4, 3, 5)
    assert format_word(()) == "eps"
    assert format_word((12, 0)) == "12,0"
    for bad in ("", "1, 2", "1,,2", "a", "-1"):
        with pytest.raises(FormatError):
            parse_word(bad)


def test_pairs_round_trip():
    pairs = gen_fooling_addition(9, 2, 2)
    text = format_pairs(pairs)
    assert text.splitlines()[0] == "eps;5,4,3,5"
    assert parse_pairs(text) == pairs
    with pytest.raises(FormatError):
        parse_pairs("1;2;3\n")


def test_dot_output():
    dot = to_dot(build_sum_nfa(witness_a(9, 2), witness_b(9, 2)))
    assert dot.startswith("digraph")
    assert '"(A,1,0)"' in dot and "q_acc" in dot
    assert "penwidth=2" in dot


# commands

def test_witness_and_member(tmp_path, capsys):
    a, b = tmp_path / "a.nfa", tmp_path / "b.nfa"
    assert main(["witness", "--family", "a", "--k", "9", "--m", "2", "-o", str(a)]) == 0
    assert main(["witness", "--family", "b", "--k", "9", "--n", "2", "-o", str(b)]) == 0
    assert parse_automaton(a.read_text()) == witness_a(9, 2)
    s = tmp_path / "sum_2_2.nfa"
    assert main(["sum", str(a), str(b), "-o", str(s)]) == 0
    err = capsys.readouterr().err
    assert "pair=8 only_a=4 only_b=4 accept=1" in err
    assert main(["member", str(s), "5,4,3,5"]) == 0
    assert capsys.readouterr().out == "true\n"
    assert main(["member", str(s), "eps"]) == 1
    assert capsys.readouterr().out == "false\n"
    assert main(["member", str(s), "9"]) == 2


def test_witness_parameter_violation(tmp_path, capsys):
    assert main(["witness", "--family", "a", "--k", "8", "--m", "2", "-o", str(tmp_path / "x")]) == 2
    assert "k >= 9" in capsys.readouterr().err
    assert main(["witness", "--family", "z", "--k", "9", "-o", str(tmp_path / "x")]) == 2


def test_sum_one_state_default(files, capsys, tmp_path):
    a, b = files("a.nfa", one_state_witness_a(9)), files("b.nfa", one_state_witness_b(9))
    out = tmp_path / "s.nfa"
    assert main(["sum", a, b, "-o", str(out)]) == 0
    assert parse_automaton(out.read_text()).state_count == 6
    assert "merged=1" in capsys.readouterr().err
    assert main(["sum", a, b, "--no-one-state-opt", "-o", str(out)]) == 0
    seven = parse_automaton(out.read_text())
    assert seven.state_count == 7
    assert Pair(0, 0, 1) in seven.labels


def test_sum_trim_and_msd(files, tmp_path):
    a, b = files("a.nfa", witness_a(9, 2)), files("b.nfa", witness_b(9, 2))
    out = tmp_path / "s.nfa"
    assert main(["sum", a, b, "--trim", "-o", str(out)]) == 0
    trimmed = parse_automaton(out.read_text())
    assert trimmed.state_count <= 17
    assert equivalent(trimmed, build_sum_nfa(witness_a(9, 2), witness_b(9, 2)))
    assert main(["sum", a, b, "--msd", "-o", str(out)]) == 0


def test_sum_warns_on_non_canonical(files, capsys):
    a, b = files("a.nfa", from_word((1, 0), 9)), files("b.nfa", witness_b(9, 2))
    assert main(["sum", a, b]) == 0
    assert "warning" in capsys.readouterr().err


def test_check_sum(files, capsys):
    a, b = files("a.nfa", witness_a(9, 2)), files("b.nfa", witness_b(9, 3))
    assert main(["check-sum", a, b, "--max-len", "5"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[-1] == "OK"
    assert out[0].split(": ")[1] == out[1].split(": ")[1]


def test_check_sum_non_canonical_is_error(files):
    a, b = files("a.nfa", from_word((1, 0), 9)), files("b.nfa", witness_b(9, 2))
    assert main(["check-sum", a, b, "--max-len", "3"]) == 2


def test_fool_gen_and_verify(tmp_path, files, capsys):
    pairs = tmp_path / "p.txt"
    assert main(["fool-gen", "--k", "9", "--m", "2", "--n", "3", "-o", str(pairs)]) == 0
    assert len(parse_pairs(pairs.read_text())) == 23
    lang = files("l.nfa", build_sum_nfa(witness_a(9, 2), witness_b(9, 3)))
    assert main(["fool-verify", lang, str(pairs)]) == 0
    assert capsys.readouterr().out.strip() == "CERTIFIED 23"

    assert main(["fool-gen", "--k", "9", "--one-state", "-o", str(pairs)]) == 0
    assert parse_pairs(pairs.read_text())[0] == FoolingPair((), (5,))
    assert main(["fool-gen", "--unary", "4", "-o", str(pairs)]) == 0
    assert len(parse_pairs(pairs.read_text())) == 4
    assert main(["fool-verify", lang, str(pairs)]) == 1
    assert "VIOLATION" in capsys.readouterr().out
    assert main(["fool-gen", "--k", "9", "--m", "2", "-o", str(pairs)]) == 2


def test_table(capsys):
    assert main(["table", "--k", "9", "--max-m", "2", "--max-n", "2"]) == 0
    rows = [line.split("\t") for line in capsys.readouterr().out.splitlines()]
    assert rows[0] == ["m", "n", "f_k"]
    table = {(int(r[0]), int(r[1])): int(r[2]) for r in rows[1:]}
    assert table == {(1, 1): 6, (1, 2): 11, (2, 1): 11, (2, 2): 17}


def test_table_verify(capsys):
    assert main(["table", "--k", "10", "--max-m", "2", "--max-n", "2", "--verify", "--max-len", "5"]) == 0
    rows = capsys.readouterr().out.splitlines()[1:]
    assert all(r.endswith("PASS\tPASS") for r in rows)


def test_table_small_base_rejected():
    assert main(["table", "--k", "5", "--max-m", "2", "--max-n", "2"]) == 2


def test_dot_reverse_restrict_equiv(files, tmp_path, capsys):
    s = files("s.nfa", build_sum_nfa(unary_witness(9, 2), unary_witness(9, 3)))
    assert main(["dot", s]) == 0
    assert capsys.readouterr().out.startswith("digraph")
    r, rr, only2 = tmp_path / "r.nfa", tmp_path / "rr.nfa", tmp_path / "two.nfa"
    assert main(["reverse", s, "-o", str(r)]) == 0
    assert main(["reverse", str(r), "-o", str(rr)]) == 0
    assert main(["equiv", s, str(rr)]) == 0
    assert capsys.readouterr().out == "true\n"
    assert main(["restrict", s, "--digits", "2", "-o", str(only2)]) == 0
    cycle = files("c.nfa", unary_cycle(9, 6, 2))
    assert main(["equiv", str(only2), cycle]) == 0
    assert main(["equiv", s, cycle]) == 1


def test_usage_errors(tmp_path, capsys):
    assert main([]) == 2
    assert main(["member", str(tmp_path / "missing.nfa"), "1"]) == 2
    bad = tmp_path / "bad.nfa"
    bad.write_text("k 40\nstates 1\ninitial 0\naccepting\n")
    assert main(["member", str(bad), "1"]) == 2
