"""
Command-line interface: ``pregroup parse | connect | check | properties``.

Exit status: 0 when the asked-for property holds, 1 when it does not, 2 on
malformed input, unknown names, unreadable files or violated preconditions.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

import yaml

from . import causal, properties
from .errors import PregroupError
from .grammar import PregroupModel, load_grammar, parse
from .reduction import DEFAULT_CAP, LinkDiagram
from .render import render_diagram

OK, FAILED, ERROR = 0, 1, 2


def _type_string(args: argparse.Namespace, model: PregroupModel) -> list[str]:
    if args.sentence is not None:
        if model.lexicon is None:
            raise PregroupError("grammar has no lexicon; use --types")
        words = args.sentence.split()
        missing = [w for w in words if w not in model.lexicon]
        if missing:
            raise PregroupError(f"words not in lexicon: {', '.join(missing)}")
        return [model.lexicon[w] for w in words]
    return args.types.split()


def _links_text(d: LinkDiagram) -> str:
    links = " ".join(f"({l.left_pos},{l.right_pos})" for l in d.links) or "none"
    res = ", ".join(f"{p} [{d.word[p]}]" for p in d.residuals) or "none"
    return f"links {links}; residual {res}"


def _diagram_json(d: LinkDiagram) -> dict:
    return {
        "links": [[l.left_pos, l.right_pos, l.kind] for l in d.links],
        "residuals": list(d.residuals),
    }


def cmd_parse(args: argparse.Namespace) -> int:
    model = load_grammar(args.grammar)
    names = _type_string(args, model)
    result = parse(names, model, args.cap)
    bw = result.bracketed
    if args.format == "json":
        doc = {
            "types": names,
            "bracketing": [[n, str(img)] for n, img in bw.items],
            "word": str(bw.flat),
            "grammatical": result.grammatical,
            "reductions": [_diagram_json(d) for d in result.reductions],
            "truncated": result.truncated,
        }
        print(json.dumps(doc, indent=2))
    else:
        print(f"types:      {' '.join(names)}")
        print(f"bracketing: {bw}")
        print(f"verdict:    {'grammatical' if result.grammatical else 'not grammatical'}")
        if result.grammatical:
            more = f" (capped at {args.cap}; more exist)" if result.truncated else ""
            print(f"reductions: {len(result.reductions)}{more}")
            for k, d in enumerate(result.reductions, 1):
                print(f"\n#{k}: {_links_text(d)}")
                if args.diagram == "text":
                    print(render_diagram(d, bw.spans()))
    return OK if result.grammatical else FAILED


def _component_text(graph: causal.CausalGraph, comp: Sequence[int]) -> str:
    names = graph.bracketed.type_names
    return "{" + ", ".join(f"{i}:{names[i]}" for i in comp) + "}"


def cmd_connect(args: argparse.Namespace) -> int:
    model = load_grammar(args.grammar)
    names = _type_string(args, model)
    report = causal.sentence_connected(names, model, args.mode, args.cap)
    g = report.graph
    if g is not None and args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(causal.to_dot(g))
    if args.format == "json":
        doc = {
            "types": names,
            "connected": report.connected,
            "mode": report.mode,
            "diagrams_examined": report.diagrams_examined,
            "truncated": report.truncated,
            "components": [list(c) for c in report.components],
            "edges": [] if g is None else [
                [e.u, e.v, e.link.left_pos, e.link.right_pos] for e in g.edges
            ],
            "dot": args.dot,
        }
        print(json.dumps(doc, indent=2))
        return OK if report.connected else FAILED
    verdict = "connected" if report.connected else "not connected"
    print(f"types:      {' '.join(names)}")
    print(f"verdict:    {verdict} (mode {report.mode}, "
          f"{report.diagrams_examined} diagram(s) examined)")
    if report.truncated:
        print("warning:    reduction cap reached; verdict covers examined diagrams only")
    if g is not None:
        print("components: " + " ".join(_component_text(g, c) for c in report.components))
        edges = ", ".join(f"{e.u}-{e.v} via ({e.link.left_pos},{e.link.right_pos})" for e in g.edges)
        print(f"edges:      {edges or 'none'}")
    if args.dot:
        print(f"dot:        written to {args.dot}")
    return OK if report.connected else FAILED


def cmd_check(args: argparse.Namespace) -> int:
    model = load_grammar(args.grammar)
    as_json = args.format == "json"
    if args.property == "lint":
        diagnostics = causal.lint_down_closure(model)
        if as_json:
            print(json.dumps({
                "property": "lint",
                "warnings": [
                    {"severity": d.severity, "type": d.type_name, "code": d.code, "message": d.message}
                    for d in diagnostics
                ],
            }, indent=2))
        else:
            for d in diagnostics:
                print(f"{d.severity}: {d.type_name}: [{d.code}] {d.message}")
            if not diagnostics:
                print("no warnings")
        return FAILED if diagnostics else OK

    if args.bound < 0:
        raise ValueError("--bound must be non-negative")
    if args.property == "s-connected":
        report = causal.check_s_connected(model, args.bound, args.mode, args.cap)
        label = f"s-connected (mode {args.mode})"
    else:
        report = causal.check_simply_reducing(model, args.bound)
        label = "simply-reducing"
    if as_json:
        print(json.dumps({
            "property": args.property,
            "mode": args.mode if args.property == "s-connected" else None,
            "bound": args.bound,
            "strings_checked": report.strings_checked,
            "grammatical": report.grammatical,
            "conclusive": report.conclusive,
            "counterexamples": [
                {"types": list(c.type_string), "diagnostic": c.diagnostic}
                for c in report.counterexamples
            ],
        }, indent=2))
        return OK if report.passed else FAILED
    print(f"property:   {label}, type strings up to length {args.bound}")
    print(f"checked:    {report.strings_checked} strings, {report.grammatical} grammatical")
    if report.passed:
        print(f"no counterexample up to {args.bound} (inconclusive up to {args.bound}: "
              "longer strings were not examined)")
        return OK
    print(f"counterexamples: {len(report.counterexamples)} (shortest first, then by name)")
    for c in report.counterexamples:
        print(f"  {c}: {c.diagnostic}")
    return FAILED


def cmd_properties(args: argparse.Namespace) -> int:
    ok = True
    for label, poset in (
        ("discrete", properties.discrete_poset(args.generators)),
        ("chain", properties.chain_poset(args.generators)),
    ):
        fam = properties.check_family(poset, args.max_len, args.max_index)
        ok &= fam.passed
        status = "PASS" if fam.passed else "FAIL"
        print(f"{status} {label}: {fam.words} words, {fam.below_one} below 1, "
              f"{fam.above_one} above 1, {len(fam.mismatches)} oracle mismatches, "
              f"{len(fam.cycles)} nonempty words both above and below 1")
        for kind, w in fam.mismatches[:5]:
            print(f"     {kind} disagrees with rewriting on {w}")
        for w in fam.cycles[:5]:
            print(f"     acyclicity violated by {w}")
        if args.pairs:
            pr = properties.check_pairs(poset, args.max_len, args.max_index, args.pairs, args.seed)
            ok &= pr.passed
            status = "PASS" if pr.passed else "FAIL"
            print(f"{status} {label} leq pairs: {pr.pairs} pairs ({pr.holding} holding), "
                  f"{len(pr.mismatches)} mismatches, {pr.inconclusive} inconclusive")
            for w, v in pr.mismatches[:5]:
                print(f"     leq({w}, {v}) disagrees with rewriting")
    return OK if ok else FAILED


def _add_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("grammar", help="grammar file (YAML or JSON)")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--types", help="space-separated type names")
    src.add_argument("--sentence", help="space-separated surface words, looked up in the lexicon")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="maximum diagrams to enumerate")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pregroup", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", help="decide grammaticality and list reductions")
    _add_input(p)
    p.add_argument("--diagram", choices=("text", "none"), default="text")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("connect", help="decide whether a sentence's causal graph is connected")
    _add_input(p)
    p.add_argument("--mode", choices=causal.MODES, default="exists")
    p.add_argument("--dot", metavar="PATH", help="write the causal graph as Graphviz DOT")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_connect)

    p = sub.add_parser("check", help="bounded model check of a grammar property")
    p.add_argument("grammar")
    p.add_argument("--property", choices=("s-connected", "simply-reducing", "lint"),
                   default="s-connected")
    p.add_argument("--bound", type=int, default=3, help="longest type string examined")
    p.add_argument("--mode", choices=causal.MODES, default="exists")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("properties", help="cross-check the decision procedures against rewriting")
    p.add_argument("--max-len", type=int, default=6)
    p.add_argument("--max-index", type=int, default=2)
    p.add_argument("--generators", type=int, default=2)
    p.add_argument("--pairs", type=int, default=2000, help="sampled leq pairs per poset (0 to skip)")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_properties)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "cap", 1) < 1:
        parser.error("--cap must be positive")
    try:
        return args.func(args)
    except (PregroupError, OSError, yaml.YAMLError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return ERROR
    except Exception as err:  # keep the exit-code contract total
        print(f"internal error: {type(err).__name__}: {err}", file=sys.stderr)
        return ERROR


if __name__ == "__main__":
    sys.exit(main())
