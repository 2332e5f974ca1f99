"""
Brute-force rewriting oracle for the free quasi-pregroup preorder.

The preorder is the reflexive-transitive closure of single rewriting steps:

* induced replacement: ``(g, z) -> (h, z)`` when ``g <= h`` and ``z`` is even,
  or ``h <= g`` and ``z`` is odd;
* contraction removal: ``u (g, z)(g, z+1) v -> u v``;
* expansion insertion: ``u v -> u (g, z+1)(g, z) v``.

Each step goes upward (``w <= w'``). The search is a breadth-first closure
bounded by word length and by an adjoint-index window, since insertion alone
makes the closure infinite.

Nothing here calls into the reduction engine; the two implementations are
meant to be compared against each other. Only :func:`down_closure`, which
exists to cross-check them, uses both.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Literal

from .algebra import GeneratorPoset, PregroupWord, SimpleTerm, words_over

Direction = Literal["up", "down"]
Terms = tuple[SimpleTerm, ...]


@dataclass(frozen=True)
class RewriteStep:
    """One application of a rewriting clause at ``position``."""

    kind: Literal["contraction-removal", "expansion-insertion", "induced-replacement"]
    position: int
    detail: tuple[SimpleTerm, ...]


@dataclass
class ClosureResult:
    start: PregroupWord
    reachable: set[PregroupWord] = field(default_factory=set)
    frontier_exhausted: bool = True
    step_bound_hit: bool = False

    def __contains__(self, w: PregroupWord) -> bool:
        return w in self.reachable


@lru_cache(maxsize=64)
def _order_maps(poset: GeneratorPoset) -> tuple[dict[str, list[str]], dict[str, list[str]]]:
    above: dict[str, list[str]] = {g: [] for g in poset.generators}
    below: dict[str, list[str]] = {g: [] for g in poset.generators}
    for lo, hi in sorted(poset.order):
        if lo != hi:
            above[lo].append(hi)
            below[hi].append(lo)
    return above, below


def _raise_term(t: SimpleTerm, poset: GeneratorPoset) -> Iterator[SimpleTerm]:
    # one induced step upward: even indices move up the generator order, odd down
    above, below = _order_maps(poset)
    g, z = t
    for h in (above if z % 2 == 0 else below)[g]:
        yield SimpleTerm(h, z)


def _lower_term(t: SimpleTerm, poset: GeneratorPoset) -> Iterator[SimpleTerm]:
    above, below = _order_maps(poset)
    g, z = t
    for h in (below if z % 2 == 0 else above)[g]:
        yield SimpleTerm(h, z)


@lru_cache(maxsize=256)
def _primitive_pairs(
    generators: tuple[str, ...], zmin: int, zmax: int
) -> list[tuple[SimpleTerm, SimpleTerm]]:
    # pairs (g, z)(g, z+1) with both indices inside the window
    return [
        (SimpleTerm(g, z), SimpleTerm(g, z + 1))
        for g in generators
        for z in range(zmin, zmax)
    ]


def moves(
    w: Terms,
    poset: GeneratorPoset,
    direction: Direction,
    max_len: int,
    index_range: tuple[int, int],
    generators: Iterable[str] | None = None,
) -> Iterator[tuple[RewriteStep, Terms]]:
    """
    Single rewriting steps out of ``w``.

    ``direction="up"`` yields words ``w'`` with ``w R w'``; ``"down"`` yields
    ``w'`` with ``w' R w``. Insertions respect ``max_len`` and the index window.
    """
    gens = tuple(sorted(poset.generators if generators is None else generators))
    allowed = set(gens)
    zmin, zmax = index_range
    n = len(w)

    for i, t in enumerate(w):
        changed = _raise_term(t, poset) if direction == "up" else _lower_term(t, poset)
        for u in changed:
            if u.generator in allowed:
                yield RewriteStep("induced-replacement", i, (t, u)), w[:i] + (u,) + w[i + 1 :]

    # "up" removes contraction pairs and inserts expansion pairs; "down" undoes
    # those clauses, so its steps carry the kind of the clause being reversed
    for i in range(n - 1):
        a, b = w[i], w[i + 1]
        if a.generator != b.generator:
            continue
        if direction == "up" and b.adjoint_index == a.adjoint_index + 1:
            yield RewriteStep("contraction-removal", i, (a, b)), w[:i] + w[i + 2 :]
        if direction == "down" and a.adjoint_index == b.adjoint_index + 1:
            yield RewriteStep("expansion-insertion", i, (a, b)), w[:i] + w[i + 2 :]

    if n + 2 <= max_len:
        for lo, hi in _primitive_pairs(gens, zmin, zmax):
            pair = (hi, lo) if direction == "up" else (lo, hi)
            kind = "expansion-insertion" if direction == "up" else "contraction-removal"
            for i in range(n + 1):
                yield RewriteStep(kind, i, pair), w[:i] + pair + w[i:]


def step_down(w: PregroupWord, poset: GeneratorPoset) -> set[PregroupWord]:
    """
    Non-lengthening one-step rewrites of ``w``.

    Removes one adjacent pair ``(g, z)(g, z+1)`` or lowers one term in the
    induced order (``(n, 0) -> (n_p, 0)`` when ``n_p <= n``).
    """
    out: set[PregroupWord] = set()
    terms = w.terms
    for i in range(len(terms) - 1):
        a, b = terms[i], terms[i + 1]
        if a.generator == b.generator and b.adjoint_index == a.adjoint_index + 1:
            out.add(PregroupWord(terms[:i] + terms[i + 2 :]))
    for i, t in enumerate(terms):
        for u in _lower_term(t, poset):
            out.add(PregroupWord(terms[:i] + (u,) + terms[i + 1 :]))
    return out


def _window(*ws: PregroupWord) -> tuple[int, int]:
    zs = [t.adjoint_index for w in ws for t in w]
    return (min(zs), max(zs)) if zs else (0, 0)


def closure(
    start: PregroupWord,
    poset: GeneratorPoset,
    max_len: int,
    index_range: tuple[int, int] | None = None,
    direction: Direction = "up",
    max_steps: int = 1_000_000,
    generators: Iterable[str] | None = None,
) -> ClosureResult:
    """
    Every word reachable from ``start`` by rewriting steps in ``direction``
    without exceeding ``max_len`` or leaving the index window.
    """
    if index_range is None:
        index_range = _window(start)
    gens = list(poset.generators if generators is None else generators)
    seen: set[Terms] = {start.terms}
    queue = deque([start.terms])
    expanded = 0
    while queue:
        if expanded >= max_steps:
            break
        w = queue.popleft()
        expanded += 1
        for _, nxt in moves(w, poset, direction, max_len, index_range, gens):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return ClosureResult(
        start=start,
        reachable={PregroupWord(t) for t in seen},
        frontier_exhausted=not queue,
        step_bound_hit=bool(queue),
    )


@dataclass(frozen=True)
class OracleAnswer:
    holds: bool
    inconclusive: bool = False

    def __bool__(self) -> bool:
        return self.holds


def oracle_leq(
    w: PregroupWord,
    v: PregroupWord,
    poset: GeneratorPoset,
    max_len: int | None = None,
    max_steps: int = 1_000_000,
    index_range: tuple[int, int] | None = None,
) -> OracleAnswer:
    """
    Decide ``w <= v`` by breadth-first search from ``w`` for ``v``.

    Defaults: ``max_len = max(|w|, |v|)`` and the index window spanned by
    ``w`` and ``v``. Both suffice because a derivation can be rearranged to
    contract first and expand afterwards, which never exceeds the longer end
    and only uses pairs taken from ``w`` or destined for ``v``.
    """
    if max_len is None:
        max_len = max(len(w), len(v))
    if max_len < max(len(w), len(v)):
        raise ValueError("max_len must be at least the length of both words")
    if index_range is None:
        index_range = _window(w, v)
    target = v.terms
    seen: set[Terms] = {w.terms}
    queue = deque([w.terms])
    expanded = 0
    gens = list(poset.generators)
    while queue:
        cur = queue.popleft()
        if cur == target:
            return OracleAnswer(True)
        if expanded >= max_steps:
            return OracleAnswer(False, inconclusive=True)
        expanded += 1
        for _, nxt in moves(cur, poset, "up", max_len, index_range, gens):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return OracleAnswer(False)


def oracle_down_closure(
    poset: GeneratorPoset, restrict_to: Iterable[str], max_len: int, max_index: int
) -> set[PregroupWord]:
    """Words over ``restrict_to`` that rewrite to 1, by closing downward from 1."""
    gens = sorted(restrict_to)
    poset.require(*gens)
    result = closure(
        PregroupWord(),
        poset,
        max_len,
        (-max_index, max_index),
        direction="down",
        generators=gens,
    )
    if result.step_bound_hit:
        raise RuntimeError("oracle closure hit its step bound")
    return result.reachable


def oracle_up_closure(
    poset: GeneratorPoset, generators: Iterable[str], max_len: int, max_index: int
) -> set[PregroupWord]:
    """Words over ``generators`` that 1 rewrites to."""
    gens = sorted(generators)
    result = closure(
        PregroupWord(),
        poset,
        max_len,
        (-max_index, max_index),
        direction="up",
        generators=gens,
    )
    if result.step_bound_hit:
        raise RuntimeError("oracle closure hit its step bound")
    return result.reachable


def down_closure(
    poset: GeneratorPoset,
    restrict_to: Iterable[str],
    max_len: int,
    max_index: int | None = None,
    verify: bool = False,
) -> set[PregroupWord]:
    """
    Words of length <= ``max_len`` over ``restrict_to`` lying below 1.

    Found by running the contraction decision procedure over every candidate
    word with ``|z| <= max_index`` (default ``max_len``). With ``verify`` the
    result is also recomputed by rewriting and the two must agree.
    """
    from .reduction import contracts_to_empty

    gens = sorted(restrict_to)
    poset.require(*gens)
    if max_index is None:
        max_index = max_len
    found = {
        w
        for w in words_over(gens, max_len, max_index)
        if len(w) % 2 == 0 and contracts_to_empty(w, poset)
    }
    if verify:
        expected = oracle_down_closure(poset, gens, max_len, max_index)
        if found != expected:
            diff = sorted(map(str, found ^ expected))[:5]
            raise AssertionError(f"engine and oracle down-closures differ, e.g. {diff}")
    return found
