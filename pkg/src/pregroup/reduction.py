"""
Decision procedures for the order of a free pregroup.

Every question is reduced to "does this word contract to 1?", decided by an
interval dynamic program over non-crossing matchings:

    Null(i, j)  iff  exists k: pair(i, k) and Null(i+1, k-1) and Null(k+1, j)

Why contraction-only search suffices: any inequality can be derived with all
contractions performed before all expansions, and every expansion lengthens
the word by two. A derivation ending in a word of length <= 1 therefore needs
no expansions at all. The oracle-equivalence tests check this rather than
assume it.

General comparison uses ``w <= v  iff  w v^r <= 1``:

* if ``w <= v`` then ``w v^r <= v v^r <= 1``;
* if ``w v^r <= 1`` then ``w = w 1 <= w v^r v <= 1 v = v`` (using ``1 <= v^r v``).
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import lru_cache
from itertools import islice
from typing import Callable, Iterator, Literal, NamedTuple, Sequence

from .algebra import (
    GeneratorPoset,
    PregroupWord,
    SimpleTerm,
    contractible_pair,
    expandable_pair,
    induced_leq,
    right_adjoint,
)

CONTRACTION = "contraction"
EXPANSION = "expansion"
LinkKind = Literal["contraction", "expansion"]

DEFAULT_CAP = 10_000


class Link(NamedTuple):
    """An underscore (contraction) or overscore (expansion) joining two positions."""

    left_pos: int
    right_pos: int
    kind: LinkKind = CONTRACTION

    @property
    def span(self) -> tuple[int, int]:
        return self.left_pos, self.right_pos


@dataclass(frozen=True)
class LinkDiagram:
    """A non-crossing pattern of links over a word plus the positions left uncovered."""

    word: PregroupWord
    links: tuple[Link, ...]
    residuals: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "links", tuple(sorted(self.links)))
        object.__setattr__(self, "residuals", tuple(sorted(self.residuals)))

    @property
    def spans(self) -> list[tuple[int, int]]:
        return [l.span for l in self.links]

    def residual_word(self) -> PregroupWord:
        return PregroupWord(tuple(self.word[p] for p in self.residuals))


@dataclass(frozen=True)
class Verdict:
    holds: bool
    witness: LinkDiagram | None = None
    truncated: bool = False

    def __post_init__(self) -> None:
        if self.witness is not None and not self.holds:
            raise ValueError("a witness requires holds=True")

    def __bool__(self) -> bool:
        return self.holds


PairTest = Callable[[SimpleTerm, SimpleTerm, GeneratorPoset], bool]


class _Table:
    """Query-local memo for the interval program over half-open spans [i, j)."""

    def __init__(self, terms: Sequence[SimpleTerm], poset: GeneratorPoset, pair: PairTest):
        self.terms = terms
        self.poset = poset
        self.pair = pair
        self.null = lru_cache(maxsize=None)(self._null)
        self.pair_ok = lru_cache(maxsize=None)(self._pair_ok)

    def _pair_ok(self, i: int, k: int) -> bool:
        return self.pair(self.terms[i], self.terms[k], self.poset)

    def _null(self, i: int, j: int) -> bool:
        if i >= j:
            return True
        if (j - i) & 1:
            return False
        for k in range(i + 1, j, 2):
            if self.pair_ok(i, k) and self.null(i + 1, k) and self.null(k + 1, j):
                return True
        return False

    def witness(self, i: int, j: int, kind: LinkKind) -> list[Link]:
        """One matching of [i, j); assumes ``null(i, j)``."""
        links: list[Link] = []
        stack = [(i, j)]
        while stack:
            i, j = stack.pop()
            while i < j:
                for k in range(i + 1, j, 2):
                    if self.pair_ok(i, k) and self.null(i + 1, k) and self.null(k + 1, j):
                        links.append(Link(i, k, kind))
                        stack.append((i + 1, k))
                        i = k + 1
                        break
        return links

    def matchings(self, i: int, j: int, kind: LinkKind) -> Iterator[tuple[Link, ...]]:
        """
        All matchings of [i, j) in lexicographic order of their sorted link lists.

        The first link ``(i, k)`` leads; links inside it all have smaller left
        ends than links after it, so ordering by ``k`` then inner then outer
        is exactly lexicographic.
        """
        if i >= j:
            yield ()
            return
        for k in range(i + 1, j, 2):
            if self.pair_ok(i, k) and self.null(i + 1, k) and self.null(k + 1, j):
                head = (Link(i, k, kind),)
                for inner in self.matchings(i + 1, k, kind):
                    for outer in self.matchings(k + 1, j, kind):
                        yield head + inner + outer


def _check(w: PregroupWord, poset: GeneratorPoset) -> None:
    poset.check_word(w)


def contracts_to_empty(w: PregroupWord, poset: GeneratorPoset) -> Verdict:
    """Decide ``w <= 1``; the witness covers every position with contraction links."""
    _check(w, poset)
    table = _Table(w.terms, poset, contractible_pair)
    if not table.null(0, len(w)):
        return Verdict(False)
    return Verdict(True, LinkDiagram(w, tuple(table.witness(0, len(w), CONTRACTION))))


def expands_from_empty(w: PregroupWord, poset: GeneratorPoset) -> Verdict:
    """Decide ``1 <= w`` with the dual program over expandable pairs."""
    _check(w, poset)
    table = _Table(w.terms, poset, expandable_pair)
    if not table.null(0, len(w)):
        return Verdict(False)
    return Verdict(True, LinkDiagram(w, tuple(table.witness(0, len(w), EXPANSION))))


def leq(w: PregroupWord, v: PregroupWord, poset: GeneratorPoset) -> Verdict:
    """Decide ``w <= v``; the witness is a diagram on ``w * v^r``."""
    _check(v, poset)
    return contracts_to_empty(w * right_adjoint(v), poset)


def _residual_choices(table: _Table, w: PregroupWord, target: str) -> list[int]:
    goal = SimpleTerm(target, 0)
    n = len(w)
    return [
        p
        for p in range(0, n, 2)
        if w[p].adjoint_index == 0
        and induced_leq(w[p], goal, table.poset)
        and table.null(0, p)
        and table.null(p + 1, n)
    ]


def reduces_to_simple(w: PregroupWord, target: str, poset: GeneratorPoset) -> Verdict:
    """
    Decide ``w <= (target, 0)``.

    The witness is a diagram on ``w`` itself with exactly one residual
    position holding some ``(g, 0)`` with ``g <= target``.
    """
    poset.require(target)
    _check(w, poset)
    table = _Table(w.terms, poset, contractible_pair)
    choices = _residual_choices(table, w, target)
    if not choices:
        return Verdict(False)
    p, n = choices[0], len(w)
    links = table.witness(0, p, CONTRACTION) + table.witness(p + 1, n, CONTRACTION)
    return Verdict(True, LinkDiagram(w, tuple(links), (p,)))


def iter_reductions(
    w: PregroupWord, target: str | None, poset: GeneratorPoset
) -> Iterator[LinkDiagram]:
    """
    Lazily yield every diagram witnessing ``w <= (target, 0)`` (or ``w <= 1``
    when ``target`` is None), in lexicographic order of link lists.
    """
    _check(w, poset)
    table = _Table(w.terms, poset, contractible_pair)
    n = len(w)
    if target is None:
        if table.null(0, n):
            for links in table.matchings(0, n, CONTRACTION):
                yield LinkDiagram(w, links)
        return
    poset.require(target)

    def with_residual(p: int) -> Iterator[tuple[tuple[Link, ...], int]]:
        for pre in table.matchings(0, p, CONTRACTION):
            for post in table.matchings(p + 1, n, CONTRACTION):
                yield pre + post, p

    streams = [with_residual(p) for p in _residual_choices(table, w, target)]
    for links, p in heapq.merge(*streams, key=lambda item: item[0]):
        yield LinkDiagram(w, links, (p,))


def enumerate_reductions(
    w: PregroupWord,
    target: str | None,
    poset: GeneratorPoset,
    cap: int = DEFAULT_CAP,
) -> tuple[list[LinkDiagram], bool]:
    """Up to ``cap`` reduction diagrams, and whether more exist."""
    if cap < 1:
        raise ValueError("cap must be positive")
    found = list(islice(iter_reductions(w, target, poset), cap + 1))
    return found[:cap], len(found) > cap


def count_reductions(w: PregroupWord, target: str | None, poset: GeneratorPoset) -> int:
    """Number of reduction diagrams, counted without enumerating them."""
    table = _Table(w.terms, poset, contractible_pair)
    n = len(w)

    @lru_cache(maxsize=None)
    def count(i: int, j: int) -> int:
        if i >= j:
            return 1
        if (j - i) & 1:
            return 0
        return sum(
            count(i + 1, k) * count(k + 1, j)
            for k in range(i + 1, j, 2)
            if table.pair_ok(i, k)
        )

    if target is None:
        return count(0, n)
    poset.require(target)
    goal = SimpleTerm(target, 0)
    return sum(
        count(0, p) * count(p + 1, n)
        for p in range(0, n, 2)
        if w[p].adjoint_index == 0 and induced_leq(w[p], goal, poset)
    )


def diagram_violations(d: LinkDiagram, poset: GeneratorPoset | None = None) -> list[str]:
    """
    Structural problems with a diagram; empty when it is well formed.

    Checks position bounds, exactly-once coverage, planarity, that no residual
    sits under a link, and (given a poset) that every link joins a pair that
    contracts (or expands) once its interior is gone.
    """
    n = len(d.word)
    problems: list[str] = []
    seen: dict[int, str] = {}

    def claim(p: int, owner: str) -> None:
        if not 0 <= p < n:
            problems.append(f"{owner}: position {p} out of range")
        elif p in seen:
            problems.append(f"position {p} used by {seen[p]} and {owner}")
        else:
            seen[p] = owner

    for link in d.links:
        if link.left_pos >= link.right_pos:
            problems.append(f"{link}: left end not before right end")
        if link.kind not in (CONTRACTION, EXPANSION):
            problems.append(f"{link}: unknown kind")
        claim(link.left_pos, str(tuple(link)))
        claim(link.right_pos, str(tuple(link)))
    for p in d.residuals:
        claim(p, "residual")
    missing = sorted(set(range(n)) - set(seen))
    if missing:
        problems.append(f"positions {missing} neither linked nor residual")

    for a in d.links:
        for b in d.links:
            if a.left_pos < b.left_pos < a.right_pos < b.right_pos:
                problems.append(f"links {tuple(a)} and {tuple(b)} cross")
            elif a.left_pos < b.left_pos < b.right_pos < a.right_pos and a.kind != b.kind:
                problems.append(f"{b.kind} link {b.span} nested inside {a.kind} link {a.span}")
        for p in d.residuals:
            if a.left_pos < p < a.right_pos:
                problems.append(f"residual {p} lies under link {tuple(a)}")

    if poset is not None and not problems:
        for link in d.links:
            x, y = d.word[link.left_pos], d.word[link.right_pos]
            test = contractible_pair if link.kind == CONTRACTION else expandable_pair
            if not test(x, y, poset):
                problems.append(f"{link.kind} link {link.span} joins {x} and {y}")
    return problems
