"""
Pregroup models of a language: type assignment, bracketing and parsing.

A model assigns a pregroup word to every grammatical type. A type string is
interpreted item by item (the bracketed form, keeping word boundaries) and
then flattened by concatenation. It is a sentence when the flat word lies
below the image of the sentence type.

Grammar files are YAML (JSON also loads)::

    generators: [n, s]
    order: []                  # cover pairs [lower, upper]
    sentence: s
    types:
      NOUN: n
      intVERB: n^r s
    lexicon:                   # optional, surface word -> type name
      cats: NOUN
      sleep: intVERB

``types`` gets ``SENTENCE: <sentence>`` added when absent.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Mapping, Sequence

import yaml

from .algebra import GeneratorPoset, PregroupWord, SimpleTerm
from .errors import MalformedInputError, UnknownNameError
from .reduction import DEFAULT_CAP, LinkDiagram, enumerate_reductions, leq

SENTENCE = "SENTENCE"
GRAMMAR_FIELDS = ("generators", "order", "sentence", "types", "lexicon")


@dataclass(frozen=True)
class PregroupModel:
    poset: GeneratorPoset
    types: Mapping[str, PregroupWord]
    sentence_type: str = SENTENCE
    lexicon: Mapping[str, str] | None = None

    def __post_init__(self) -> None:
        if self.sentence_type not in self.types:
            raise MalformedInputError(f"sentence type {self.sentence_type!r} has no image")
        for name, image in self.types.items():
            try:
                self.poset.check_word(image)
            except MalformedInputError as err:
                raise MalformedInputError(f"type {name!r}: {err}") from None
        if self.lexicon is not None:
            for surface, name in self.lexicon.items():
                if name not in self.types:
                    raise MalformedInputError(
                        f"lexicon entry {surface!r} points at unknown type {name!r}"
                    )

    @property
    def sentence_image(self) -> PregroupWord:
        return self.types[self.sentence_type]

    @property
    def sentence_generator(self) -> str | None:
        """The generator ``s`` when the sentence type maps to the simple term ``(s, 0)``."""
        image = self.sentence_image
        if len(image) == 1 and image[0].adjoint_index == 0:
            return image[0].generator
        return None

    @property
    def lexical_types(self) -> list[str]:
        """Type names usable in type strings: everything but the sentence type, in file order."""
        return [t for t in self.types if t != self.sentence_type]

    def with_type(self, name: str, image: PregroupWord) -> PregroupModel:
        """A copy with ``name`` (re)assigned to ``image``."""
        types = dict(self.types)
        types[name] = image
        return PregroupModel(self.poset, types, self.sentence_type, self.lexicon)

    def without_type(self, name: str) -> PregroupModel:
        types = {k: v for k, v in self.types.items() if k != name}
        lexicon = None
        if self.lexicon is not None:
            lexicon = {k: v for k, v in self.lexicon.items() if v != name}
        return PregroupModel(self.poset, types, self.sentence_type, lexicon)


@dataclass(frozen=True)
class BracketedWord:
    """A type string interpreted item by item, with its flattening cached."""

    items: tuple[tuple[str, PregroupWord], ...]
    flat: PregroupWord = field(init=False)
    boundaries: tuple[int, ...] = field(init=False)

    def __post_init__(self) -> None:
        terms: list[SimpleTerm] = []
        owner: list[int] = []
        for k, (_, image) in enumerate(self.items):
            terms.extend(image.terms)
            owner.extend([k] * len(image))
        object.__setattr__(self, "flat", PregroupWord(tuple(terms)))
        object.__setattr__(self, "boundaries", tuple(owner))

    @property
    def type_names(self) -> list[str]:
        return [name for name, _ in self.items]

    def spans(self) -> list[tuple[int, int]]:
        """Half-open flat-position span of each item."""
        out, start = [], 0
        for _, image in self.items:
            out.append((start, start + len(image)))
            start += len(image)
        return out

    def __str__(self) -> str:
        return " ".join(f"( {image} )" for _, image in self.items)


@dataclass(frozen=True)
class ParseResult:
    grammatical: bool
    bracketed: BracketedWord
    reductions: list[LinkDiagram]
    truncated: bool = False


def bracket(type_string: Sequence[str], model: PregroupModel) -> BracketedWord:
    items = []
    for name in type_string:
        if name not in model.types:
            raise UnknownNameError(f"unknown type {name!r}")
        items.append((name, model.types[name]))
    return BracketedWord(tuple(items))


def parse(
    type_string: Sequence[str], model: PregroupModel, cap: int = DEFAULT_CAP
) -> ParseResult:
    """
    Decide whether a type string is a sentence and collect its reductions.

    When the sentence type maps to a single ``(s, 0)`` every reduction diagram
    (up to ``cap``) is listed; otherwise the one witness found by the general
    comparison is returned. The verdict never depends on ``cap``.
    """
    if cap < 1:
        raise ValueError("cap must be positive")
    bw = bracket(type_string, model)
    if not type_string:
        return ParseResult(False, bw, [])
    verdict = leq(bw.flat, model.sentence_image, model.poset)
    if not verdict.holds:
        return ParseResult(False, bw, [])
    s = model.sentence_generator
    if s is None:
        return ParseResult(True, bw, [verdict.witness])
    diagrams, truncated = enumerate_reductions(bw.flat, s, model.poset, cap)
    return ParseResult(True, bw, diagrams, truncated)


def parse_surface(
    words: Sequence[str] | str, model: PregroupModel, cap: int = DEFAULT_CAP
) -> ParseResult:
    if model.lexicon is None:
        raise UnknownNameError("model has no lexicon")
    if isinstance(words, str):
        words = words.split()
    missing = [w for w in words if w not in model.lexicon]
    if missing:
        raise UnknownNameError(f"words not in lexicon: {', '.join(missing)}")
    return parse([model.lexicon[w] for w in words], model, cap)


class _StrictLoader(yaml.SafeLoader):
    """SafeLoader that refuses duplicate mapping keys."""


def _mapping_no_duplicates(loader: yaml.SafeLoader, node: yaml.MappingNode) -> dict:
    seen = set()
    for key_node, _ in node.value:
        key = loader.construct_object(key_node)
        if key in seen:
            raise MalformedInputError(
                f"duplicate key {key!r} (line {key_node.start_mark.line + 1})"
            )
        seen.add(key)
    return loader.construct_mapping(node)


_StrictLoader.add_constructor(
    yaml.resolver.BaseResolver.DEFAULT_MAPPING_TAG, _mapping_no_duplicates
)


def _name(value: object, what: str) -> str:
    if not isinstance(value, str) or not value:
        raise MalformedInputError(f"{what} must be a non-empty string, got {value!r}")
    return value


def model_from_dict(doc: object) -> PregroupModel:
    if not isinstance(doc, dict):
        raise MalformedInputError("grammar document must be a mapping")
    unknown = sorted(set(doc) - set(GRAMMAR_FIELDS))
    if unknown:
        raise MalformedInputError(f"unknown grammar fields: {', '.join(map(str, unknown))}")
    for required in ("generators", "sentence", "types"):
        if required not in doc:
            raise MalformedInputError(f"grammar is missing {required!r}")

    gens = doc["generators"]
    if not isinstance(gens, list):
        raise MalformedInputError("'generators' must be a list")
    order = doc.get("order") or []
    if not isinstance(order, list) or not all(isinstance(p, list) and len(p) == 2 for p in order):
        raise MalformedInputError("'order' must be a list of [lower, upper] pairs")
    poset = GeneratorPoset(
        [_name(g, "generator") for g in gens],
        [(_name(a, "generator"), _name(b, "generator")) for a, b in order],
        sentence=_name(doc["sentence"], "sentence"),
    )

    raw_types = doc["types"]
    if not isinstance(raw_types, dict):
        raise MalformedInputError("'types' must be a mapping")
    types: dict[str, PregroupWord] = {}
    for name, text in raw_types.items():
        if text == 1:  # YAML reads a bare 1 as an integer
            text = "1"
        types[_name(name, "type name")] = PregroupWord.parse(_name(text, f"type {name!r}"))
    types.setdefault(SENTENCE, PregroupWord((SimpleTerm(poset.sentence, 0),)))

    lexicon = doc.get("lexicon")
    if lexicon is not None:
        if not isinstance(lexicon, dict):
            raise MalformedInputError("'lexicon' must be a mapping")
        for surface, name in lexicon.items():
            if isinstance(name, list):
                raise MalformedInputError(f"lexical ambiguity for {surface!r} is not supported")
            _name(surface, "lexicon word")
            _name(name, f"lexicon entry {surface!r}")
    return PregroupModel(poset, types, SENTENCE, lexicon)


def loads_grammar(text: str) -> PregroupModel:
    try:
        doc = yaml.load(text, Loader=_StrictLoader)
    except yaml.YAMLError as err:
        raise MalformedInputError(f"cannot read grammar: {err}") from None
    return model_from_dict(doc)


def load_grammar(path: str | os.PathLike) -> PregroupModel:
    with open(path, encoding="utf-8") as fh:
        return loads_grammar(fh.read())


def dump_grammar(model: PregroupModel) -> str:
    doc = {
        "generators": list(model.poset.generators),
        "order": [list(p) for p in model.poset.covers],
        "sentence": model.poset.sentence,
        "types": {k: str(v) for k, v in model.types.items()},
    }
    if model.lexicon is not None:
        doc["lexicon"] = dict(model.lexicon)
    return yaml.safe_dump(doc, sort_keys=False, allow_unicode=True)
