import json
import subprocess
import sys

import pytest

import pregroup.reduction as reduction
from pregroup.algebra import word
from pregroup.cli import main
from pregroup.grammar import parse
from pregroup.reduction import expands_from_empty, leq
from pregroup.render import render_diagram


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


# --- parse -------------------------------------------------------------------------


def test_parse_welsh_sentence(capsys, grammars_dir):
    code, out, _ = run(capsys, "parse", grammars_dir / "welsh.yaml", "--sentence", "Dyma fy nghath i")
    assert code == 0
    assert "verdict:    grammatical" in out
    assert "links (1,2) (3,6) (4,5); residual 0 [d_pt]" in out
    assert (
        "( d_pt n^l ) ( n c1^l n_p^l ) ( n_p ) ( c1 )\n"
        "   ^    |______|  |     |________|      |\n"
        "                  |_____________________|\n"
    ) in out


def test_parse_json(capsys, grammars_dir):
    code, out, _ = run(capsys, "parse", grammars_dir / "foo.yaml", "--types", "FOO BAR DOG DUCK", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["grammatical"]
    assert [l[:2] for l in doc["reductions"][0]["links"]] == [[1, 4], [2, 3], [5, 8], [6, 7]]
    assert doc["word"] == "s a c^l c a^r a^r b^l b a^rr"


def test_parse_not_grammatical(capsys, grammars_dir):
    code, out, _ = run(capsys, "parse", grammars_dir / "toy.yaml", "--types", "NOUN transVERB")
    assert code == 1 and "not grammatical" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["parse", "missing.yaml", "--types", "NOUN"],
        ["parse", "GRAMMARS/toy.yaml", "--types", "NOUN WHAT"],
        ["parse", "GRAMMARS/toy.yaml", "--sentence", "cats purr"],
        ["parse", "GRAMMARS/toy.yaml", "--types", "NOUN", "--cap", "0"],
        ["connect", "GRAMMARS/toy.yaml", "--types", "NOUN NOUN"],
        ["check", "GRAMMARS/toy.yaml", "--bound", "-1"],
        ["parse", "GRAMMARS/toy.yaml"],
        ["bogus"],
    ],
)
def test_errors_exit_two(capsys, grammars_dir, argv):
    argv = [a.replace("GRAMMARS", str(grammars_dir)) for a in argv]
    try:
        code = main(argv)
    except SystemExit as exc:  # argparse usage errors
        code = exc.code
    assert code == 2


def test_malformed_grammar_exits_two(capsys, tmp_path):
    bad = tmp_path / "bad.yaml"
    bad.write_text("generators: [n]\nsentence: n\ntypes: {}\nwhat: 1\n")
    code, _, err = run(capsys, "parse", bad, "--types", "SENTENCE")
    assert code == 2 and "unknown grammar fields" in err


# --- connect -----------------------------------------------------------------------


def test_connect_welsh(capsys, grammars_dir):
    code, out, _ = run(capsys, "connect", grammars_dir / "welsh.yaml", "--sentence", "Dyma fy nghath i")
    assert code == 0 and "verdict:    connected" in out


def test_connect_foo_two_components(capsys, grammars_dir, tmp_path):
    dot = tmp_path / "foo.dot"
    code, out, _ = run(capsys, "connect", grammars_dir / "foo.yaml", "--types", "FOO BAR DOG DUCK", "--dot", dot)
    assert code == 1
    assert "{0:FOO, 1:BAR} {2:DOG, 3:DUCK}" in out
    assert dot.read_text().count(" -- ") == 4


def test_connect_json_mirrors_text(capsys, grammars_dir):
    code, out, _ = run(capsys, "connect", grammars_dir / "foo.yaml", "--types", "FOO BAR DOG DUCK", "--format", "json")
    doc = json.loads(out)
    assert code == 1 and doc["components"] == [[0, 1], [2, 3]] and len(doc["edges"]) == 4


# --- check -------------------------------------------------------------------------


def test_check_s_connected_nonce(capsys, grammars_dir):
    code, out, _ = run(capsys, "check", grammars_dir / "toy.yaml", "--property", "s-connected", "--bound", "3")
    assert code == 1
    assert "  NOUN.intVERB.NONCE: " in out


def test_check_simply_reducing_nonce(capsys, grammars_dir):
    code, out, _ = run(capsys, "check", grammars_dir / "toy.yaml", "--property", "simply-reducing", "--bound", "3")
    assert code == 0 and "inconclusive up to 3" in out


def test_check_lint(capsys, grammars_dir):
    code, out, _ = run(capsys, "check", grammars_dir / "toy.yaml", "--property", "lint")
    assert code == 1 and "NONCE" in out


def test_check_counterexamples_sorted(capsys, grammars_dir):
    code, out, _ = run(capsys, "check", grammars_dir / "toy.yaml", "--format", "json")
    names = [".".join(c["types"]) for c in json.loads(out)["counterexamples"]]
    assert names == sorted(names, key=lambda n: (n.count("."), n.split(".")))


# --- properties ----------------------------------------------------------------------


def test_properties_small_family(capsys):
    code, out, _ = run(capsys, "properties", "--max-len", "4", "--max-index", "1", "--pairs", "200")
    assert code == 0 and out.count("PASS") == 4


def test_properties_vacuous(capsys):
    code, _, _ = run(capsys, "properties", "--max-len", "0", "--pairs", "0")
    assert code == 0


def test_properties_catch_parity_mutation(capsys, monkeypatch):
    def flipped(a, b, poset):
        if b.adjoint_index != a.adjoint_index + 1:
            return False
        if a.adjoint_index % 2 == 0:
            return poset.leq(b.generator, a.generator)
        return poset.leq(a.generator, b.generator)

    monkeypatch.setattr(reduction, "contractible_pair", flipped)
    code, out, _ = run(capsys, "properties", "--max-len", "4", "--max-index", "1", "--pairs", "200")
    assert code == 1 and "FAIL chain" in out


def test_console_script_entry_point(grammars_dir):
    proc = subprocess.run(
        [sys.executable, "-m", "pregroup.cli", "parse", str(grammars_dir / "toy.yaml"), "--sentence", "cats sleep"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and "grammatical" in proc.stdout


# --- rendering -----------------------------------------------------------------------


def test_render_decorated_word(ns):
    w = word("n^r n n^l n n^l n") * word("n^r n").r
    d = leq(word("n^r n n^l n n^l n"), word("n^r n"), ns).witness
    assert d.word == w
    assert d.spans == [(0, 7), (1, 6), (2, 3), (4, 5)]
    assert render_diagram(d) == (
        "n^r n n^l n n^l n n^r n^rr\n"
        " |  |  |__|  |__|  |   |\n"
        " |  |______________|   |\n"
        " |_____________________|"
    )


def test_render_expansion_lids(ab):
    d = expands_from_empty(word("a^r b^r b a"), ab).witness
    assert render_diagram(d) == (
        " __________\n"
        " |   ____ |\n"
        " |   |  | |\n"
        "a^r b^r b a"
    )


def test_render_marks_residual(toy):
    r = parse(["NOUN", "intVERB"], toy)
    assert render_diagram(r.reductions[0], r.bracketed.spans()) == "( n ) ( n^r s )\n  |______|  ^"
