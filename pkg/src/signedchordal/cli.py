"""Command-line entry point.

Exit codes: 0 chordal or ok, 1 not chordal or a failed check, 2 input
error, 3 a witness was requested for a chordal input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from .catalog import FamilyTag, all_join_tags, all_sum_tags, cycle_tag, generate, minimal_non_chordal_witness
from .elimination import (
    digraph_to_signed_graph,
    recognize_chordal_signed_bigraph,
    recognize_chordal_signed_graph,
)
from .errors import InputIsChordal, SignedGraphError
from .io import format_graph, graph_to_json, read_digraph, read_graph, to_dot
from .oracle import verify

EXIT_OK = 0
EXIT_NOT_CHORDAL = 1
EXIT_INPUT_ERROR = 2
EXIT_CHORDAL_INPUT = 3


def _err(msg: str) -> None:
    print(f"signedchordal: {msg}", file=sys.stderr)


def cmd_recognize(args) -> int:
    if args.mode == "digraph":
        g = digraph_to_signed_graph(read_digraph(args.path))
    else:
        g = read_graph(args.path)
    if args.mode == "bigraph":
        cert = recognize_chordal_signed_bigraph(g)
        if cert is None:
            print("not chordal")
            return EXIT_NOT_CHORDAL
        for u, v in cert.sequence:
            print(u, v)
    else:
        cert = recognize_chordal_signed_graph(g)
        if cert is None:
            print("not chordal")
            return EXIT_NOT_CHORDAL
        for v in cert.sequence:
            print(v)
    return EXIT_OK


def cmd_witness(args) -> int:
    g = read_graph(args.path)
    try:
        w = minimal_non_chordal_witness(g)
    except InputIsChordal as exc:
        _err(str(exc))
        return EXIT_CHORDAL_INPUT
    if args.json:
        print(json.dumps({"tag": str(w.tag), "family": w.tag.family,
                          "params": dict(w.tag.params),
                          "embedding": [[i, v] for i, v in enumerate(w.embedding)]},
                         sort_keys=True))
        return EXIT_OK
    print(f"family {w.tag.family}")
    for key, value in w.tag.params:
        print(f"param {key}={value}")
    for i, v in enumerate(w.embedding):
        print(f"pair {i} {v}")
    return EXIT_OK


def _catalog_tags(family: str, params: Optional[str], max_tail: int, max_k: int):
    if params:
        return [FamilyTag.parse(f"{family} {params}")]
    if family == "C2k":
        return [cycle_tag(k) for k in range(3, max_k + 1)]
    if family == "Sum":
        return all_sum_tags(max_tail)
    if family == "Join":
        return all_join_tags(max_tail)
    if family == "MinimalComplete":
        return [FamilyTag("MinimalComplete", (("i", i),)) for i in range(1, 6)]
    return [FamilyTag(family)]


def _slug(tag: FamilyTag) -> str:
    parts = [tag.family] + [f"{k}{v}" for k, v in tag.params]
    return "_".join(parts).replace("+", "p").replace("-", "m").replace("−", "m")


def cmd_catalog(args) -> int:
    os.makedirs(args.outdir, exist_ok=True)
    ext = "json" if args.format == "json" else "sg"
    rows = []
    for tag in _catalog_tags(args.family, args.params, args.max_tail, args.max_k):
        for i, g in enumerate(generate(tag)):
            name = f"{_slug(tag)}_{i:03d}.{ext}"
            with open(os.path.join(args.outdir, name), "w", encoding="utf-8") as fh:
                fh.write(graph_to_json(g) if args.format == "json" else format_graph(g))
            params = " ".join(f"{k}={v}" for k, v in tag.params) or "-"
            rows.append(f"{name}\t{tag.family}\t{params}\t{g.n}\t{g.m}")
    with open(os.path.join(args.outdir, "manifest.tsv"), "w", encoding="utf-8") as fh:
        fh.write("file\tfamily\tparams\tvertices\tedges\n")
        fh.writelines(row + "\n" for row in rows)
    print(f"wrote {len(rows)} graphs to {args.outdir}")
    return EXIT_OK


def parse_bounds(text: Optional[str]) -> Optional[dict]:
    """``{"max_n": 7}`` JSON, ``3,3`` or ``2,2;3,4`` part sizes, or ``7``."""
    if not text:
        return None
    text = text.strip()
    if text.startswith("{"):
        return json.loads(text)
    if "," in text:
        pairs = [tuple(int(x) for x in chunk.split(",")) for chunk in text.split(";") if chunk]
        if any(len(p) != 2 for p in pairs):
            raise ValueError(f"bad part sizes {text!r}")
        return {"pairs": pairs}
    return {"max_n": int(text)}


def cmd_verify(args) -> int:
    try:
        bounds = parse_bounds(args.bounds) or {}
    except ValueError as exc:
        _err(f"bad --bounds: {exc}")
        return EXIT_INPUT_ERROR
    if args.seed is not None:
        bounds["seed"] = args.seed
    report = verify(args.suite, bounds or None, workers=args.workers)
    print(report.to_json() if args.json else report.to_text())
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(report.to_json() + "\n")
    return EXIT_OK if report.ok else EXIT_NOT_CHORDAL


def cmd_export_dot(args) -> int:
    text = to_dot(read_graph(args.path))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="signedchordal",
                                description="Chordal signed graph and bigraph recognition.")
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("recognize", help="print an elimination ordering or report failure")
    r.add_argument("path")
    r.add_argument("--mode", choices=("bigraph", "graph", "digraph"), default="bigraph")
    r.set_defaults(func=cmd_recognize)

    w = sub.add_parser("witness", help="print a minimal forbidden induced subgraph")
    w.add_argument("path")
    w.add_argument("--json", action="store_true")
    w.set_defaults(func=cmd_witness)

    c = sub.add_parser("catalog", help="write forbidden family members as graph files")
    c.add_argument("--family", required=True)
    c.add_argument("--params", help="e.g. 'k=4' or 'type1=1 k1=2 type2=2 k2=2'")
    c.add_argument("--outdir", default=".")
    c.add_argument("--format", choices=("text", "json"), default="text")
    c.add_argument("--max-tail", type=int, default=4)
    c.add_argument("--max-k", type=int, default=6)
    c.set_defaults(func=cmd_catalog)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", required=True)
    v.add_argument("--bounds")
    v.add_argument("--workers", type=int, default=1)
    v.add_argument("--seed", type=int)
    v.add_argument("--json", action="store_true")
    v.add_argument("--output", help="also write the JSON report here")
    v.set_defaults(func=cmd_verify)

    d = sub.add_parser("export-dot", help="render a graph file as DOT")
    d.add_argument("path")
    d.add_argument("-o", "--output")
    d.set_defaults(func=cmd_export_dot)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (SignedGraphError, OSError, KeyError) as exc:
        _err(str(exc))
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
