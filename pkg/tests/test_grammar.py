from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pregroup.algebra import PregroupWord, SimpleTerm, word
from pregroup.errors import MalformedInputError, UnknownNameError
from pregroup.grammar import (
    SENTENCE,
    PregroupModel,
    bracket,
    dump_grammar,
    load_grammar,
    loads_grammar,
    parse,
    parse_surface,
)

WELSH = ["HERE_IS", "POSS_1SG", "NOUN_POSS", "CONFIRM_1SG"]
TOY = load_grammar(Path(__file__).resolve().parent.parent / "grammars" / "toy.yaml")

MINIMAL = """
generators: [n, s]
sentence: s
types:
  NOUN: n
  intVERB: n^r s
"""


# --- loading ------------------------------------------------------------------------


def test_shipped_grammars_load(grammars_dir):
    for path in sorted(grammars_dir.glob("*.yaml")):
        model = load_grammar(path)
        assert model.sentence_image == word(model.poset.sentence)


def test_welsh_model_contents(welsh):
    p = welsh.poset
    assert set(p.generators) == {"n", "s", "d_pt", "c1", "n_p"}
    assert p.leq("n_p", "n") and p.leq("d_pt", "s")
    assert not p.leq("n", "n_p")
    assert welsh.types["HERE_IS"] == word("d_pt n^l")
    assert [welsh.lexicon[w] for w in "Dyma fy nghath i".split()] == WELSH


def test_sentence_type_added_when_missing():
    model = loads_grammar(MINIMAL)
    assert model.types[SENTENCE] == word("s")
    assert model.lexical_types == ["NOUN", "intVERB"]
    assert model.sentence_generator == "s"


def test_empty_image_allowed():
    model = loads_grammar(MINIMAL + "  PAD: 1\n")
    assert model.types["PAD"] == PregroupWord()


@pytest.mark.parametrize(
    "text, fragment",
    [
        (MINIMAL + "extra: 3\n", "unknown grammar fields"),
        ("generators: [n]\nsentence: n\n", "missing 'types'"),
        ("generators: [n]\nsentence: s\ntypes: {}\n", "sentence"),
        ("generators: [n, s]\nsentence: s\norder: [[n, s], [s, n]]\ntypes: {}\n", "antisymmetric"),
        ("generators: [n, s]\nsentence: s\ntypes:\n  X: q\n", "'X'"),
        ("generators: [n, s]\nsentence: s\ntypes:\n  X: n\n  X: s\n", "duplicate"),
        (MINIMAL + "lexicon:\n  cats: [NOUN, intVERB]\n", "ambiguity"),
        (MINIMAL + "lexicon:\n  cats: CAT\n", "unknown type"),
        ("[1, 2]", "mapping"),
        ("generators: [n\n", "cannot read"),
        ("generators: [n, s]\nsentence: s\norder: [n]\ntypes: {}\n", "pairs"),
    ],
)
def test_malformed_grammars_rejected(text, fragment):
    with pytest.raises(MalformedInputError, match=fragment):
        loads_grammar(text)


def test_dump_round_trips(welsh, foo, toy):
    for model in (welsh, foo, toy):
        again = loads_grammar(dump_grammar(model))
        assert again.poset == model.poset
        assert dict(again.types) == dict(model.types)
        assert again.lexicon == model.lexicon


def test_missing_file_raises_oserror(tmp_path):
    with pytest.raises(OSError):
        load_grammar(tmp_path / "nope.yaml")


def test_model_validation():
    m = loads_grammar(MINIMAL)
    with pytest.raises(MalformedInputError):
        PregroupModel(m.poset, {"X": word("n")})
    with pytest.raises(MalformedInputError):
        m.with_type("BAD", word("q"))
    assert m.with_type("ADJ", word("n n^l")).types["ADJ"] == word("n n^l")
    assert "NOUN" not in m.without_type("NOUN").types


# --- bracketing ----------------------------------------------------------------------


def test_welsh_bracketing(welsh):
    bw = bracket(WELSH, welsh)
    assert [str(img) for _, img in bw.items] == ["d_pt n^l", "n c1^l n_p^l", "n_p", "c1"]
    assert str(bw) == "( d_pt n^l ) ( n c1^l n_p^l ) ( n_p ) ( c1 )"
    assert bw.boundaries == (0, 0, 1, 1, 1, 2, 3)


def test_empty_bracketing(welsh):
    bw = bracket([], welsh)
    assert bw.items == () and bw.flat == PregroupWord()


def test_foo_flattening(foo):
    assert bracket(["FOO", "BAR", "DOG", "DUCK"], foo).flat == word("s a c^l c a^r a^r b^l b a^rr")


def test_unknown_type_named(welsh):
    with pytest.raises(UnknownNameError, match="NOPE"):
        bracket(["HERE_IS", "NOPE"], welsh)


type_strings = st.lists(st.sampled_from(["NOUN", "intVERB", "transVERB", "attADJ", "NONCE"]), max_size=5)


@given(type_strings, type_strings)
def test_bracketing_flattens_homomorphically(u, v):
    assert bracket(u + v, TOY).flat == bracket(u, TOY).flat * bracket(v, TOY).flat


@given(type_strings)
def test_boundaries_partition_the_flat_word(u):
    bw = bracket(u, TOY)
    assert len(bw.boundaries) == len(bw.flat)
    assert list(bw.boundaries) == sorted(bw.boundaries)
    for k, (a, b) in enumerate(bw.spans()):
        assert bw.flat[a:b] == bw.items[k][1]
        assert all(bw.boundaries[p] == k for p in range(a, b))


# --- parsing ----------------------------------------------------------------------------


def test_welsh_sentence_parses(welsh):
    r = parse(WELSH, welsh)
    assert r.grammatical and not r.truncated
    assert len(r.reductions) == 1
    d = r.reductions[0]
    assert d.spans == [(1, 2), (3, 6), (4, 5)]
    assert d.residuals == (0,)
    assert d.word[0] == SimpleTerm("d_pt", 0)


def test_foo_sentence_parses(foo):
    assert parse(["FOO", "BAR", "DOG", "DUCK"], foo).grammatical


def test_noun_transitive_verb_rejected(toy):
    r = parse(["NOUN", "transVERB"], toy)
    assert not r.grammatical and r.reductions == []


def test_empty_type_string_is_not_a_sentence(toy):
    assert not parse([], toy).grammatical


def test_cap_must_be_positive(toy):
    with pytest.raises(ValueError):
        parse(["NOUN", "intVERB"], toy, cap=0)


def test_surface_parsing(welsh, toy):
    assert parse_surface("Dyma fy nghath i", welsh).grammatical
    assert not parse_surface(["Dyma", "Dyma"], welsh).grammatical
    with pytest.raises(UnknownNameError, match="cath"):
        parse_surface("Dyma fy cath i", welsh)
    assert parse_surface("cats sleep", toy).grammatical


def test_surface_parsing_needs_lexicon():
    with pytest.raises(UnknownNameError):
        parse_surface("cats", loads_grammar(MINIMAL))


def test_single_word_sentence_has_no_links():
    model = loads_grammar(MINIMAL + "  HALT: s\nlexicon:\n  halt: HALT\n")
    r = parse_surface("halt", model)
    assert r.grammatical and [d.links for d in r.reductions] == [()]


def test_non_simple_sentence_image_returns_single_witness():
    model = loads_grammar(MINIMAL + "  SENTENCE: s n^l\n  TV: n^r s n^l\n")
    r = parse(["NOUN", "TV"], model)
    assert r.grammatical and len(r.reductions) == 1
    assert model.sentence_generator is None


@given(type_strings, st.integers(1, 3))
def test_verdict_independent_of_cap(u, cap):
    assert parse(u, TOY, cap=cap).grammatical == parse(u, TOY).grammatical
