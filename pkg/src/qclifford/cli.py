"""``qclifford`` command line.

Exit codes: 0 ok, 2 input error, 3 disconnected graph, 4 spin precondition.
Text output is always rendered from the same dict that ``--output json``
prints, so the two stay in step.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .algebra import AlgebraContext, format_element, word_product
from .classify import FieldType, class_report, lie_from_dict, render_iso, render_lie, report_iso
from .errors import DisconnectedGraphError, GraphFormatError, SpinPreconditionError
from .gf2core import classify_quadratic
from .graphs import ColoredGraph, build_space, family, parse_graph
from .lie import identify_K
from .spin import check_spin_graph, left_regular_rep, verify_spin
from .tables import render_table, table_rows

EXIT_INPUT, EXIT_CONNECTIVITY, EXIT_SPIN = 2, 3, 4


def _load_graph(args, rest: list[str]) -> tuple[ColoredGraph, list[str]]:
    if args.family:
        g = family(args.family)
    else:
        if not rest:
            raise GraphFormatError("give a graph FILE or --family SPEC")
        path, rest = Path(rest[0]), rest[1:]
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as exc:
            raise GraphFormatError(f"cannot read {path}: {exc.strerror}") from None
        g = parse_graph(text)
    if g.n == 0:
        raise GraphFormatError("graph has no vertices")
    return g, rest


# -- renderers: dict -> text ---------------------------------------------------

def render_classify(doc: dict) -> str:
    alg = render_iso(report_iso(doc))
    return (f"n={doc['n']} r={doc['r']} type={doc['type']} field={doc['field']} "
            f"algebra={alg} dim={doc['dim']}\n")


def render_lie_report(doc: dict) -> str:
    yes = "yes" if doc["is_line_graph"] else "no"
    lines = [f"reduced_size={doc['reduced_size']} line_graph={yes} root_size={doc['root_size']}",
             f"quotient={render_lie(lie_from_dict(doc['quotient']))} quotient_dim={doc['quotient_dim']}"]
    full = doc.get("full_type")
    lines.append(f"closure_dim={doc['closure_dim']} full_type="
                 + (render_lie(lie_from_dict(full)) if full else "None"))
    return "\n".join(lines) + "\n"


def render_spin(doc: dict) -> str:
    keys = ("squares_ok", "edge_anticommute_ok", "nonedge_commute_ok", "berman_ok")
    lines = [f"{k}={'true' if doc[k] else 'false'}" for k in keys]
    lines.append(f"lie_span_dim={doc['lie_span_dim']}")
    return "\n".join(lines) + "\n"


def render_mul(doc: dict) -> str:
    return doc["element"] + "\n"


def render_tables(doc: dict) -> str:
    return doc["text"]


RENDER = {"classify": render_classify, "lie": render_lie_report, "spin": render_spin,
          "mul": render_mul, "tables": render_tables}


# -- commands: args -> dict ----------------------------------------------------

def cmd_classify(args, rest) -> dict:
    g, _ = _load_graph(args, rest)
    space, _ = build_space(g)
    return class_report(classify_quadratic(space), FieldType(args.field))


def cmd_lie(args, rest) -> dict:
    g, _ = _load_graph(args, rest)
    return identify_K(g, FieldType(args.field)).to_dict()


def cmd_spin(args, rest) -> dict:
    g, _ = _load_graph(args, rest)
    try:
        check_spin_graph(g)
    except DisconnectedGraphError as exc:
        raise SpinPreconditionError(str(exc)) from None
    return verify_spin(left_regular_rep(g), g).to_dict()


def cmd_mul(args, rest) -> dict:
    g, rest = _load_graph(args, rest)
    word = " ".join(rest).split()
    ctx = AlgebraContext.from_graph(g)
    elem = word_product(ctx, word)
    return {"word": word, "element": format_element(elem, g.names),
            "terms": [[[g.names[i] for i in range(g.n) if v >> i & 1], str(x)]
                      for v, x in elem.items()]}


def cmd_tables(args, rest) -> dict:
    if len(rest) != 1 or rest[0] not in {"1", "2", "3", "4", "5", "6"}:
        raise GraphFormatError("tables takes one of 1..6")
    which = int(rest[0])
    rows = table_rows(which)
    return {"table": which, "rows": [list(r) for r in rows], "text": render_table(which)}


COMMANDS = {"classify": cmd_classify, "lie": cmd_lie, "spin": cmd_spin,
            "mul": cmd_mul, "tables": cmd_tables}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="qclifford",
        description="Quasi-Clifford algebras of colored graphs: classification, Lie algebras, spin checks.")
    p.add_argument("command", choices=sorted(COMMANDS))
    p.add_argument("args", nargs="*", help="graph FILE (unless --family), then EXPR words or table N")
    p.add_argument("--family", metavar="SPEC", help="A:n, D:n, E:n, K:n or Cl:p,q")
    p.add_argument("--field", choices=["I", "II", "III"], default="III")
    p.add_argument("--output", choices=["text", "json"], default="text")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_intermixed_args(argv)
    try:
        doc = COMMANDS[args.command](args, list(args.args))
    except SpinPreconditionError as exc:
        print(f"qclifford: {exc}", file=sys.stderr)
        return EXIT_SPIN
    except DisconnectedGraphError as exc:
        print(f"qclifford: {exc}", file=sys.stderr)
        return EXIT_CONNECTIVITY
    except (GraphFormatError, ValueError) as exc:
        print(f"qclifford: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.output == "json":
        sys.stdout.write(json.dumps(doc, ensure_ascii=False, sort_keys=True) + "\n")
    else:
        sys.stdout.write(RENDER[args.command](doc))
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
