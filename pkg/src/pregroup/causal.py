"""
Causal graphs of sentences and bounded checks of whole models.

The causal graph of a parsed type string has one node per item of the
bracketing and one edge per link whose two ends fall in different items.
A sentence is connected when that graph is; a model is S-connected when
every type string reducing to S is.

When a string has several reduction diagrams the graph depends on the
choice, so connectivity is quantified over diagrams: ``exists`` (some
diagram gives a connected graph, the default) or ``forall``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterator, Literal, NamedTuple, Sequence

import networkx as nx

from .algebra import GeneratorPoset, PregroupWord, SimpleTerm, words_over
from .errors import ConsistencyError, ModelError, PreconditionError, UnknownNameError
from .grammar import BracketedWord, PregroupModel, bracket, parse
from .reduction import (
    DEFAULT_CAP,
    Link,
    LinkDiagram,
    contracts_to_empty,
    enumerate_reductions,
    expands_from_empty,
)

Mode = Literal["exists", "forall"]
MODES: tuple[Mode, ...] = ("exists", "forall")


class Edge(NamedTuple):
    u: int
    v: int
    link: Link


@dataclass(frozen=True)
class CausalGraph:
    bracketed: BracketedWord
    diagram: LinkDiagram
    edges: tuple[Edge, ...]
    internal_links: tuple[Link, ...]

    @property
    def nodes(self) -> range:
        return range(len(self.bracketed.items))

    def components(self) -> list[tuple[int, ...]]:
        g = nx.MultiGraph()
        g.add_nodes_from(self.nodes)
        g.add_edges_from((e.u, e.v) for e in self.edges)
        return sorted(tuple(sorted(c)) for c in nx.connected_components(g))

    @property
    def connected(self) -> bool:
        return len(self.components()) <= 1

    def edge_multiset(self) -> dict[tuple[int, int], int]:
        counts: dict[tuple[int, int], int] = {}
        for e in self.edges:
            counts[(e.u, e.v)] = counts.get((e.u, e.v), 0) + 1
        return counts


def causal_graph(bw: BracketedWord, diagram: LinkDiagram) -> CausalGraph:
    """
    Build the causal graph of ``bw`` under ``diagram``.

    Contraction and expansion links count alike. Links with both ends in one
    item are kept aside in ``internal_links``.
    """
    if diagram.word != bw.flat:
        raise ConsistencyError(
            f"diagram is over {diagram.word}, bracketing flattens to {bw.flat}"
        )
    owner = bw.boundaries
    edges, internal = [], []
    for link in diagram.links:
        a, b = owner[link.left_pos], owner[link.right_pos]
        if a == b:
            internal.append(link)
        else:
            edges.append(Edge(min(a, b), max(a, b), link))
    edges.sort(key=lambda e: (e.u, e.v, e.link.left_pos, e.link.right_pos))
    return CausalGraph(bw, diagram, tuple(edges), tuple(internal))


@dataclass(frozen=True)
class ConnectivityReport:
    connected: bool
    components: list[tuple[int, ...]]
    mode: Mode
    diagrams_examined: int
    truncated: bool = False
    graph: CausalGraph | None = None

    @property
    def conclusive(self) -> bool:
        # a capped search settles "exists" only positively and "forall" only negatively
        if not self.truncated:
            return True
        return self.connected if self.mode == "exists" else not self.connected


def _target_generator(model: PregroupModel, target: str | None) -> tuple[str, str]:
    name = model.sentence_type if target is None else target
    if name not in model.types:
        raise UnknownNameError(f"unknown type {name!r}")
    image = model.types[name]
    if len(image) != 1 or image[0].adjoint_index != 0:
        raise ModelError(
            f"type {name!r} maps to {image}; causal analysis needs a single basic type (g, 0)"
        )
    return name, image[0].generator


def _reductions(
    type_string: Sequence[str], model: PregroupModel, target: str | None, cap: int
) -> tuple[BracketedWord, list[LinkDiagram], bool]:
    name, generator = _target_generator(model, target)
    if name == model.sentence_type:
        result = parse(type_string, model, cap)
        return result.bracketed, result.reductions, result.truncated
    bw = bracket(type_string, model)
    if not type_string:
        return bw, [], False
    diagrams, truncated = enumerate_reductions(bw.flat, generator, model.poset, cap)
    return bw, diagrams, truncated


def sentence_connected(
    type_string: Sequence[str],
    model: PregroupModel,
    mode: Mode = "exists",
    cap: int = DEFAULT_CAP,
    target: str | None = None,
) -> ConnectivityReport:
    """
    Connectivity of a grammatical type string's causal graph.

    ``target`` names the type to reduce to (the sentence type by default).
    The reported components come from the deciding diagram: the first
    connected one under ``exists``, the first disconnected one under
    ``forall``, otherwise the first diagram.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    bw, diagrams, truncated = _reductions(type_string, model, target, cap)
    if not diagrams:
        raise PreconditionError(
            f"{'.'.join(type_string) or '(empty)'} does not reduce to "
            f"{target or model.sentence_type}"
        )
    return _decide(bw, diagrams, truncated, mode)


def _decide(
    bw: BracketedWord, diagrams: list[LinkDiagram], truncated: bool, mode: Mode
) -> ConnectivityReport:
    graphs = [causal_graph(bw, d) for d in diagrams]
    flags = [g.connected for g in graphs]
    if mode == "exists":
        connected = any(flags)
        deciding = graphs[flags.index(True)] if connected else graphs[0]
    else:
        connected = all(flags)
        deciding = graphs[0] if connected else graphs[flags.index(False)]
    return ConnectivityReport(
        connected, deciding.components(), mode, len(graphs), truncated, deciding
    )


@dataclass(frozen=True)
class Counterexample:
    type_string: tuple[str, ...]
    diagnostic: str
    graph: CausalGraph | None = None

    def __str__(self) -> str:
        return ".".join(self.type_string)


@dataclass
class ModelCheckReport:
    """
    Outcome of a bounded search for counterexamples.

    ``conclusive`` is True only when a counterexample was found; an empty
    search up to ``bound`` proves nothing beyond that bound.
    """

    property: Literal["s-connected", "simply-reducing"]
    bound: int
    counterexamples: list[Counterexample] = field(default_factory=list)
    strings_checked: int = 0
    grammatical: int = 0

    @property
    def conclusive(self) -> bool:
        return bool(self.counterexamples)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def contains(self, type_string: Sequence[str] | str) -> bool:
        if isinstance(type_string, str):
            type_string = type_string.replace(".", " ").split()
        return any(c.type_string == tuple(type_string) for c in self.counterexamples)


def type_strings(model: PregroupModel, bound: int) -> Iterator[tuple[str, ...]]:
    """Every string of lexical types of length 1..bound, shortest first, then lexicographic."""
    alphabet = sorted(model.lexical_types)
    for n in range(1, bound + 1):
        yield from product(alphabet, repeat=n)


def _components_text(bw: BracketedWord, components: list[tuple[int, ...]]) -> str:
    names = bw.type_names
    return " | ".join("{" + ", ".join(names[i] for i in c) + "}" for c in components)


def check_s_connected(
    model: PregroupModel,
    bound: int,
    mode: Mode = "exists",
    cap: int = DEFAULT_CAP,
    target: str | None = None,
) -> ModelCheckReport:
    """Search every type string up to ``bound`` for a disconnected sentence."""
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    _target_generator(model, target)
    report = ModelCheckReport("s-connected", bound)
    for ts in type_strings(model, bound):
        report.strings_checked += 1
        bw, diagrams, truncated = _reductions(ts, model, target, cap)
        if not diagrams:
            continue
        report.grammatical += 1
        result = _decide(bw, diagrams, truncated, mode)
        if not result.connected:
            report.counterexamples.append(
                Counterexample(
                    ts,
                    f"components {_components_text(bw, result.components)}",
                    result.graph,
                )
            )
    report.counterexamples.sort(key=lambda c: (len(c.type_string), c.type_string))
    return report


@dataclass(frozen=True)
class SimpleSplit:
    """``w = left . pivot . right`` with both sides below 1 and free of the sentence generator."""

    left: PregroupWord
    pivot: SimpleTerm
    right: PregroupWord
    position: int


def simply_reduces(w: PregroupWord, poset: GeneratorPoset, s: str) -> SimpleSplit | None:
    """
    Find a split of ``w`` as ``u (t, 0) v`` with ``t <= s``, where ``u`` and
    ``v`` contract to 1 and contain no term built on ``s``. Returns None if
    there is none.
    """
    poset.require(s)
    poset.check_word(w)
    for p, term in enumerate(w):
        if term.adjoint_index != 0 or not poset.leq(term.generator, s):
            continue
        u, v = w[:p], w[p + 1 :]
        if s in u.generators or s in v.generators:
            continue
        if contracts_to_empty(u, poset) and contracts_to_empty(v, poset):
            return SimpleSplit(u, term, v, p)
    return None


def check_simply_reducing(model: PregroupModel, bound: int) -> ModelCheckReport:
    """Every type string up to ``bound`` that reduces to s must simply reduce."""
    _, s = _target_generator(model, None)
    report = ModelCheckReport("simply-reducing", bound)
    for ts in type_strings(model, bound):
        report.strings_checked += 1
        result = parse(ts, model, cap=1)
        if not result.grammatical:
            continue
        report.grammatical += 1
        flat = result.bracketed.flat
        if simply_reduces(flat, model.poset, s) is None:
            report.counterexamples.append(
                Counterexample(ts, f"{flat} reduces to {s} but not simply")
            )
    report.counterexamples.sort(key=lambda c: (len(c.type_string), c.type_string))
    return report


@dataclass(frozen=True)
class Diagnostic:
    severity: Literal["warning"]
    type_name: str
    code: Literal["down-closure", "nonce-pattern"]
    message: str

    def __str__(self) -> str:
        return f"{self.severity}: {self.type_name}: {self.message}"


def lint_down_closure(model: PregroupModel) -> list[Diagnostic]:
    """
    Flag types whose image lies below 1.

    Such a type can pad any sentence on either side and keep it grammatical.
    Types that also avoid the sentence generator entirely get a second,
    ``nonce-pattern`` warning: adding them to a model breaks connectedness.
    """
    s = model.sentence_generator or model.poset.sentence
    out: list[Diagnostic] = []
    for name, image in model.types.items():
        if not contracts_to_empty(image, model.poset):
            continue
        shown = str(image) if len(image) else "the empty word"
        out.append(
            Diagnostic("warning", name, "down-closure", f"image {shown} lies below the identity")
        )
        if s is None or s not in image.generators:
            out.append(
                Diagnostic(
                    "warning",
                    name,
                    "nonce-pattern",
                    f"image {shown} avoids {s} and can be appended to any sentence "
                    "without any link to it",
                )
            )
    return out


@dataclass
class SweepReport:
    max_len: int
    max_index: int
    words_checked: int = 0
    below_one: int = 0
    above_one: int = 0
    violations: list[PregroupWord] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations


def acyclicity_sweep(poset: GeneratorPoset, max_len: int, max_index: int) -> SweepReport:
    """Look for a nonempty word with both ``w <= 1`` and ``1 <= w``; none should exist."""
    report = SweepReport(max_len, max_index)
    for w in words_over(poset.generators, max_len, max_index, min_len=1):
        report.words_checked += 1
        if not contracts_to_empty(w, poset):
            continue
        report.below_one += 1
        if expands_from_empty(w, poset):
            report.above_one += 1
            report.violations.append(w)
    return report


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(graph: CausalGraph, name: str = "causal") -> str:
    """
    Graphviz source for a causal graph.

    Nodes appear in index order, edges sorted by endpoints then link position;
    the output is byte-for-byte reproducible.
    """
    lines = [f"graph {name} {{"]
    for i, (type_name, image) in enumerate(graph.bracketed.items):
        lines.append(f"  {i} [label={_quote(f'{i}: {type_name} [{image}]')}];")
    for e in graph.edges:
        lines.append(f"  {e.u} -- {e.v} [label={_quote(f'{e.link.left_pos}-{e.link.right_pos}')}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
