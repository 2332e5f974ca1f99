"""
Free pregroup words over a generator poset.

A word is a sequence of simple terms ``(g, z)``: a generator ``g`` together
with an integer adjoint index ``z``. Index 0 is the basic type, ``z = 1`` its
right adjoint, ``z = -1`` its left adjoint, and so on.

>>> poset = GeneratorPoset.discrete(["n", "s"], sentence="s")
>>> w = PregroupWord.parse("n^r s n^l")
>>> str(w.l), str(w.r)
('n^l s^l n', 'n s^r n^rr')
>>> contractible_pair(SimpleTerm("n", 0), SimpleTerm("n", 1), poset)
True
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator, NamedTuple, Sequence, overload

import networkx as nx

from .errors import MalformedInputError

_INDEX_SUFFIX = {-2: "^ll", -1: "^l", 0: "", 1: "^r", 2: "^rr"}
_TOKEN = re.compile(
    r"^(?P<gen>[^\s^]+)(?:\^(?:(?P<lr>[lr]+)|\((?P<num>[+\-−]?\d+)\)))?$"
)


class SimpleTerm(NamedTuple):
    """A generator paired with an adjoint index."""

    generator: str
    adjoint_index: int = 0

    @property
    def l(self) -> SimpleTerm:
        return SimpleTerm(self.generator, self.adjoint_index - 1)

    @property
    def r(self) -> SimpleTerm:
        return SimpleTerm(self.generator, self.adjoint_index + 1)

    def __str__(self) -> str:
        suffix = _INDEX_SUFFIX.get(self.adjoint_index)
        if suffix is None:
            suffix = f"^({self.adjoint_index})"
        return self.generator + suffix

    @classmethod
    def parse(cls, token: str) -> SimpleTerm:
        """Parse ``g``, ``g^rr``, ``g^l`` or ``g^(z)``."""
        m = _TOKEN.match(token)
        if m is None or m["gen"] == "1":
            raise MalformedInputError(f"bad term token {token!r}")
        if m["lr"] is not None:
            z = m["lr"].count("r") - m["lr"].count("l")
        elif m["num"] is not None:
            z = int(m["num"].replace("−", "-"))
        else:
            z = 0
        return cls(m["gen"], z)


@dataclass(frozen=True)
class PregroupWord:
    """
    An element of the free monoid on simple terms; the empty word is 1.

    Words are immutable. ``u * v`` concatenates, ``w.l`` and ``w.r`` are the
    left and right adjoints.
    """

    terms: tuple[SimpleTerm, ...] = ()

    def __post_init__(self) -> None:
        terms = self.terms
        if not (type(terms) is tuple and all(type(t) is SimpleTerm for t in terms)):
            object.__setattr__(self, "terms", tuple(SimpleTerm(*t) for t in terms))

    @classmethod
    def parse(cls, text: str) -> PregroupWord:
        """
        Parse whitespace separated tokens; ``1`` denotes the unit.

        >>> PregroupWord.parse("b a^rr s^(-3)").terms
        (SimpleTerm(generator='b', adjoint_index=0), SimpleTerm(generator='a', adjoint_index=2), SimpleTerm(generator='s', adjoint_index=-3))
        """
        return cls(tuple(SimpleTerm.parse(tok) for tok in text.split() if tok != "1"))

    @overload
    def __getitem__(self, key: int) -> SimpleTerm: ...
    @overload
    def __getitem__(self, key: slice) -> PregroupWord: ...

    def __getitem__(self, key):
        if isinstance(key, slice):
            return PregroupWord(self.terms[key])
        return self.terms[key]

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[SimpleTerm]:
        return iter(self.terms)

    def __mul__(self, other: PregroupWord) -> PregroupWord:
        return multiply(self, other)

    @property
    def l(self) -> PregroupWord:
        return left_adjoint(self)

    @property
    def r(self) -> PregroupWord:
        return right_adjoint(self)

    @property
    def generators(self) -> set[str]:
        return {t.generator for t in self.terms}

    def __str__(self) -> str:
        return " ".join(map(str, self.terms)) if self.terms else "1"

    def __repr__(self) -> str:
        return f"PregroupWord.parse({str(self)!r})"


def word(text: str) -> PregroupWord:
    """Shorthand for :meth:`PregroupWord.parse`."""
    return PregroupWord.parse(text)


class GeneratorPoset:
    """
    A finite poset of generators, optionally with a sentence generator.

    The order is given by cover pairs ``(lower, upper)`` and stored as its
    reflexive-transitive closure. Order cycles are rejected.

    >>> welsh = GeneratorPoset(["n", "s", "d_pt", "c1", "n_p"],
    ...                        [("n_p", "n"), ("d_pt", "s")], sentence="s")
    >>> welsh.leq("n_p", "n"), welsh.leq("n", "n_p")
    (True, False)
    """

    def __init__(
        self,
        generators: Iterable[str],
        covers: Iterable[tuple[str, str]] = (),
        sentence: str | None = None,
    ):
        gens = list(generators)
        if len(set(gens)) != len(gens):
            raise MalformedInputError("generator names must be distinct")
        if not gens:
            raise MalformedInputError("a generator poset needs at least one generator")
        for g in gens:
            if not isinstance(g, str) or not _TOKEN.match(g) or "^" in g or g == "1":
                raise MalformedInputError(f"bad generator name {g!r}")
        graph = nx.DiGraph()
        graph.add_nodes_from(gens)
        for pair in covers:
            if len(pair) != 2:
                raise MalformedInputError(f"order pair {pair!r} must have two entries")
            lo, hi = pair
            for g in (lo, hi):
                if g not in graph:
                    raise MalformedInputError(f"order pair mentions unknown generator {g!r}")
            if lo != hi:
                graph.add_edge(lo, hi)
        if not nx.is_directed_acyclic_graph(graph):
            cycle = nx.find_cycle(graph)
            raise MalformedInputError(f"order is not antisymmetric: cycle {cycle}")
        if sentence is not None and sentence not in graph:
            raise MalformedInputError(f"sentence generator {sentence!r} is not a generator")
        closure = nx.transitive_closure_dag(graph)
        self.generators: tuple[str, ...] = tuple(gens)
        self.order: frozenset[tuple[str, str]] = frozenset(closure.edges) | {
            (g, g) for g in gens
        }
        self.sentence = sentence
        self._gens = frozenset(gens)

    @classmethod
    def discrete(cls, generators: Iterable[str], sentence: str | None = None) -> GeneratorPoset:
        return cls(generators, (), sentence)

    def __contains__(self, generator: object) -> bool:
        return generator in self._gens

    def require(self, *generators: str) -> None:
        for g in generators:
            if g not in self._gens:
                raise MalformedInputError(f"unknown generator {g!r}")

    def leq(self, g: str, h: str) -> bool:
        """``g <= h`` in the generator order."""
        if g not in self._gens or h not in self._gens:
            self.require(g, h)
        return g == h or (g, h) in self.order

    def check_word(self, w: PregroupWord) -> None:
        for t in w.terms:
            if t.generator not in self._gens:
                raise MalformedInputError(f"term {t} uses unknown generator {t.generator!r}")

    @property
    def covers(self) -> list[tuple[str, str]]:
        """Cover relation (transitive reduction), sorted."""
        graph = nx.DiGraph()
        graph.add_nodes_from(self.generators)
        graph.add_edges_from((a, b) for a, b in self.order if a != b)
        return sorted(nx.transitive_reduction(graph).edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GeneratorPoset):
            return NotImplemented
        return (self._gens, self.order, self.sentence) == (
            other._gens,
            other.order,
            other.sentence,
        )

    def __hash__(self) -> int:
        return hash((self._gens, self.order, self.sentence))

    def __repr__(self) -> str:
        return (
            f"GeneratorPoset({list(self.generators)!r}, {self.covers!r}, "
            f"sentence={self.sentence!r})"
        )


def induced_leq(a: SimpleTerm, b: SimpleTerm, poset: GeneratorPoset) -> bool:
    """
    Order on simple terms induced by the generator order.

    Terms are comparable only at equal index; even indices preserve the
    generator order and odd indices reverse it.
    """
    poset.require(a.generator, b.generator)
    if a.adjoint_index != b.adjoint_index:
        return False
    if a.adjoint_index % 2 == 0:
        return poset.leq(a.generator, b.generator)
    return poset.leq(b.generator, a.generator)


def left_adjoint(w: PregroupWord) -> PregroupWord:
    return PregroupWord(tuple(SimpleTerm(g, z - 1) for g, z in reversed(w.terms)))


def right_adjoint(w: PregroupWord) -> PregroupWord:
    return PregroupWord(tuple(SimpleTerm(g, z + 1) for g, z in reversed(w.terms)))


def multiply(u: PregroupWord, v: PregroupWord) -> PregroupWord:
    return PregroupWord(u.terms + v.terms)


def contractible_pair(a: SimpleTerm, b: SimpleTerm, poset: GeneratorPoset) -> bool:
    """
    Whether the adjacent pair ``a b`` is below 1 (a generalized contraction).

    Requires ``b`` one index to the right of ``a``. At even index ``z`` of ``a``
    the generator of ``a`` must lie below that of ``b``; at odd ``z`` above.
    """
    ga, za = a
    gb, zb = b
    if zb != za + 1:
        poset.require(ga, gb)
        return False
    if za % 2 == 0:
        return poset.leq(ga, gb)
    return poset.leq(gb, ga)


def expandable_pair(a: SimpleTerm, b: SimpleTerm, poset: GeneratorPoset) -> bool:
    """
    Whether the adjacent pair ``a b`` lies above 1 (a generalized expansion).

    Requires ``a`` one index to the right of ``b``. With ``z`` the index of
    ``b``: for odd ``z + 1`` the generator of ``a`` must lie below that of
    ``b``, for even ``z + 1`` above.
    """
    ga, za = a
    gb, zb = b
    if za != zb + 1:
        poset.require(ga, gb)
        return False
    if za % 2 == 0:
        return poset.leq(gb, ga)
    return poset.leq(ga, gb)


def words_over(
    generators: Sequence[str], max_len: int, max_index: int, min_len: int = 0
) -> Iterator[PregroupWord]:
    """All words of length ``min_len..max_len`` with ``|z| <= max_index``, shortest first."""
    alphabet = [SimpleTerm(g, z) for g in generators for z in range(-max_index, max_index + 1)]
    for n in range(min_len, max_len + 1):
        for terms in product(alphabet, repeat=n):
            yield PregroupWord(terms)
