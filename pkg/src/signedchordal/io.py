"""Text and JSON graph files, plus DOT rendering.

The text format::

    signedgraph 1
    # comment
    v 0 left
    v 1
    e 0 1 +

Every vertex gets a ``v`` line on output so isolated vertices survive a
round trip.  Digraph files use ``a <u> <v>`` arc lines instead of ``e``.
A file whose first non-blank character is ``{`` is read as JSON.
"""

from __future__ import annotations

import json
from typing import Optional

from .errors import GraphParseError, SignedGraphError
from .graph import Digraph, Sign, SignedGraph, build_graph

HEADER = "signedgraph 1"
_SIGNS = {"+": "+", "-": "-", "−": "-"}


def _int(token: str, line: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise GraphParseError(f"expected a vertex id, got {token!r}", line) from None
    if value < 0:
        raise GraphParseError(f"negative vertex id {value}", line)
    return value


def _scan(text: str, kinds: set):
    """Yield ``(line_no, kind, tokens, rest)`` for every record line."""
    seen_header = False
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if not seen_header:
            if line.split() != HEADER.split():
                raise GraphParseError(f"expected header {HEADER!r}", no)
            seen_header = True
            continue
        kind, _, rest = line.partition(" ")
        if kind not in kinds:
            raise GraphParseError(f"unknown record {kind!r}", no)
        yield no, kind, rest.split(), rest.strip()
    if not seen_header:
        raise GraphParseError("empty file, missing header", 1)


def _labels(records: dict, n: int) -> Optional[list]:
    if not any(label is not None for label in records.values()):
        return None
    return [records.get(v) for v in range(n)]


def parse_graph(text: str) -> SignedGraph:
    """Parse a signed graph from text or JSON."""
    if text.lstrip().startswith("{"):
        return graph_from_json(text)
    vertices: dict[int, Optional[str]] = {}
    edges = []
    for no, kind, tokens, rest in _scan(text, {"v", "e"}):
        if kind == "v":
            if not tokens:
                raise GraphParseError("vertex line without id", no)
            v = _int(tokens[0], no)
            if v in vertices:
                raise GraphParseError(f"vertex {v} declared twice", no)
            label = rest[len(tokens[0]):].strip()
            vertices[v] = label or None
        else:
            if len(tokens) != 3:
                raise GraphParseError("edge line needs 'e <u> <v> <+|->'", no)
            u, v = _int(tokens[0], no), _int(tokens[1], no)
            if tokens[2] not in _SIGNS:
                raise GraphParseError(f"bad sign {tokens[2]!r}", no)
            edges.append((u, v, _SIGNS[tokens[2]], no))
    n = 1 + max([*vertices, *(e[0] for e in edges), *(e[1] for e in edges)], default=-1)
    seen = set()
    for u, v, _, no in edges:
        if u == v:
            raise GraphParseError(f"loop at vertex {u}", no)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphParseError(f"edge {key[0]}-{key[1]} given twice", no)
        seen.add(key)
    return build_graph(n, [(u, v, s) for u, v, s, _ in edges], _labels(vertices, n))


def parse_digraph(text: str) -> Digraph:
    """Parse a digraph from text (``a`` lines) or JSON (an ``arcs`` list).

    Vertex labels are accepted and ignored."""
    if text.lstrip().startswith("{"):
        data = _load_json(text)
        try:
            return Digraph(int(data["n"]), [tuple(a) for a in data["arcs"]])
        except (KeyError, TypeError, ValueError) as exc:
            raise GraphParseError(f"malformed digraph JSON: {exc}") from None
    vertices = set()
    arcs = []
    for no, kind, tokens, _ in _scan(text, {"v", "a"}):
        if kind == "v":
            if not tokens:
                raise GraphParseError("vertex line without id", no)
            vertices.add(_int(tokens[0], no))
            continue
        if len(tokens) != 2:
            raise GraphParseError("arc line needs 'a <u> <v>'", no)
        u, v = _int(tokens[0], no), _int(tokens[1], no)
        if u == v:
            raise GraphParseError(f"loop arc at {u}", no)
        if (u, v) in arcs:
            raise GraphParseError(f"arc {u}->{v} given twice", no)
        arcs.append((u, v))
    n = 1 + max([*vertices, *(w for a in arcs for w in a)], default=-1)
    return Digraph(n, arcs)


def format_graph(g: SignedGraph) -> str:
    lines = [HEADER]
    for v in range(g.n):
        label = g.label(v)
        lines.append(f"v {v}" if label is None else f"v {v} {label}")
    for u, v, s in g.edges():
        lines.append(f"e {u} {v} {s.value}")
    return "\n".join(lines) + "\n"


def format_digraph(d: Digraph) -> str:
    lines = [HEADER] + [f"v {v}" for v in range(d.n)]
    lines += [f"a {u} {v}" for u, v in sorted(d.arcs)]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# JSON mirror


def graph_to_dict(g: SignedGraph) -> dict:
    return {
        "format": "signedgraph",
        "version": 1,
        "n": g.n,
        "labels": None if g.labels is None else list(g.labels),
        "edges": [[u, v, s.value] for u, v, s in g.edges()],
    }


def graph_to_json(g: SignedGraph) -> str:
    return json.dumps(graph_to_dict(g), sort_keys=True) + "\n"


def _load_json(text: str) -> dict:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphParseError(exc.msg, exc.lineno) from None
    if not isinstance(data, dict):
        raise GraphParseError("JSON graph must be an object")
    if data.get("format", "signedgraph") != "signedgraph" or data.get("version", 1) != 1:
        raise GraphParseError("unsupported JSON graph format or version")
    return data


def graph_from_json(text: str) -> SignedGraph:
    data = _load_json(text)
    try:
        n = int(data["n"])
        edges = [(int(u), int(v), Sign.parse(s)) for u, v, s in data.get("edges", [])]
        labels = data.get("labels")
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphParseError(f"malformed graph JSON: {exc}") from None
    try:
        return build_graph(n, edges, labels)
    except SignedGraphError as exc:
        raise GraphParseError(str(exc)) from None


def read_graph(path: str) -> SignedGraph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def read_digraph(path: str) -> Digraph:
    with open(path, encoding="utf-8") as fh:
        return parse_digraph(fh.read())


def write_graph(g: SignedGraph, path: str, as_json: bool = False) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(graph_to_json(g) if as_json else format_graph(g))


# ---------------------------------------------------------------------------
# DOT


def _dot_quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(g: SignedGraph, name: str = "G") -> str:
    """Undirected DOT text; positive edges blue, negative edges red."""
    lines = [f"graph {_dot_quote(name)} {{"]
    for v in range(g.n):
        label = g.label(v)
        lines.append(f"  {v} [label={_dot_quote(str(v) if label is None else label)}];")
    for u, v, s in g.edges():
        colour = "blue" if s is Sign.POSITIVE else "red"
        lines.append(f'  {u} -- {v} [color={colour}, label="{s.value}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
