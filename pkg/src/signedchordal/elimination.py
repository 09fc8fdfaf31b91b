"""Signed simplicial tests and greedy elimination recognizers.

A vertex is signed simplicial when its neighbourhood is a positive clique.
An edge ``uv`` of a bigraph is signed simplicial when ``N(u) ∪ N(v) - {u, v}``
is a positive biclique.  Because ``N(v) - u`` lies on ``u``'s side and
``N(u) - v`` on ``v``'s side, that biclique condition reads: every vertex of
``N(v) - u`` is positively adjacent to every vertex of ``N(u) - v``.  No
global 2-colouring is needed, which keeps the inner loops on bitmasks.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .errors import NotAnEdge, VertexOutOfRange
from .graph import (
    Digraph,
    SignedGraph,
    build_graph,
    is_bipartite,
    iter_bits,
    side_masks,
)


class CertificateKind(enum.Enum):
    VERTEX_ORDERING = "vertex"
    EDGE_ORDERING = "edge"


@dataclass(frozen=True)
class EliminationCertificate:
    kind: CertificateKind
    sequence: tuple

    def __len__(self) -> int:
        return len(self.sequence)


# ---------------------------------------------------------------------------
# predicates on raw bitmask adjacency


def simplicial_edge_masks(adj: Sequence[int], pos: Sequence[int], u: int, v: int) -> bool:
    """Signed simplicial test for edge ``uv`` on mutable bitmask adjacency."""
    a_side = adj[u] & ~(1 << v)
    for b in iter_bits(adj[v] & ~(1 << u)):
        if pos[b] & a_side != a_side:
            return False
    return True


def simplicial_vertex_masks(adj: Sequence[int], pos: Sequence[int], v: int) -> bool:
    nb = adj[v]
    for u in iter_bits(nb):
        rest = nb & ~(1 << u)
        if pos[u] & rest != rest:
            return False
    return True


# ---------------------------------------------------------------------------
# public predicates


def is_signed_simplicial_vertex(g: SignedGraph, v: int) -> bool:
    if not 0 <= v < g.n:
        raise VertexOutOfRange(f"vertex {v} not in graph")
    return simplicial_vertex_masks(g.adj, g.pos, v)


def is_signed_simplicial_edge(g: SignedGraph, e) -> bool:
    u, v = e[0], e[1]
    if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
        raise NotAnEdge(f"{u}-{v} is not an edge")
    side_masks(g)  # raises OddCycle
    return simplicial_edge_masks(g.adj, g.pos, u, v)


def signed_simplicial_edges(g: SignedGraph) -> list[tuple[int, int]]:
    """All signed simplicial edges of a bigraph, sorted."""
    side_masks(g)
    return [(u, v) for (u, v) in sorted(g.signs) if simplicial_edge_masks(g.adj, g.pos, u, v)]


def has_signed_simplicial_edge(g: SignedGraph) -> bool:
    return any(simplicial_edge_masks(g.adj, g.pos, u, v) for (u, v) in g.signs)


# ---------------------------------------------------------------------------
# recognizers


def recognize_chordal_signed_graph(g: SignedGraph) -> Optional[EliminationCertificate]:
    """Delete the lowest-id signed simplicial vertex until none is left."""
    adj, pos = list(g.adj), list(g.pos)
    alive = g.vertex_mask
    order = []
    while alive:
        for v in iter_bits(alive):
            if simplicial_vertex_masks(adj, pos, v):
                break
        else:
            return None
        order.append(v)
        alive &= ~(1 << v)
        clear = ~(1 << v)
        for u in iter_bits(adj[v]):
            adj[u] &= clear
            pos[u] &= clear
        adj[v] = pos[v] = 0
    return EliminationCertificate(CertificateKind.VERTEX_ORDERING, tuple(order))


EdgeChooser = Callable[[list], tuple]


def eliminate_edges(n: int, adj: list, pos: list, edges: Sequence[tuple[int, int]],
                    chooser: Optional[EdgeChooser] = None) -> Optional[list]:
    """Greedy edge-without-vertex elimination on mutable masks.

    ``chooser`` receives the sorted list of current signed simplicial edges
    and returns one of them; the default takes the least.  Only edges near a
    deleted edge are re-tested.
    """
    remaining = set(edges)
    simp = {e for e in remaining if simplicial_edge_masks(adj, pos, *e)}
    order = []
    while remaining:
        if not simp:
            return None
        if chooser is None:
            e = min(simp)
        else:
            e = chooser(sorted(simp))
        u, v = e
        order.append(e)
        remaining.discard(e)
        simp.discard(e)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        pos[u] &= ~(1 << v)
        pos[v] &= ~(1 << u)
        # an edge's status depends only on edges among its closed neighbourhood
        near = adj[u] | adj[v] | (1 << u) | (1 << v)
        for x in iter_bits(near):
            for y in iter_bits(adj[x]):
                f = (x, y) if x < y else (y, x)
                if simplicial_edge_masks(adj, pos, x, y):
                    simp.add(f)
                else:
                    simp.discard(f)
    return order


def recognize_chordal_signed_bigraph(g: SignedGraph,
                                     chooser: Optional[EdgeChooser] = None
                                     ) -> Optional[EliminationCertificate]:
    """Edge elimination ordering of a signed bigraph, or ``None``.

    Raises :class:`OddCycle` on non-bipartite input.
    """
    side_masks(g)
    order = eliminate_edges(g.n, list(g.adj), list(g.pos), sorted(g.signs), chooser)
    if order is None:
        return None
    return EliminationCertificate(CertificateKind.EDGE_ORDERING, tuple(order))


def is_chordal_signed_bigraph(g: SignedGraph) -> bool:
    return recognize_chordal_signed_bigraph(g) is not None


def verify_certificate(g: SignedGraph, c: EliminationCertificate) -> bool:
    """Replay a certificate step by step, including completeness."""
    adj, pos = list(g.adj), list(g.pos)
    if c.kind is CertificateKind.VERTEX_ORDERING:
        seq = list(c.sequence)
        if sorted(seq) != list(range(g.n)):
            return False
        for v in seq:
            if not simplicial_vertex_masks(adj, pos, v):
                return False
            for u in iter_bits(adj[v]):
                adj[u] &= ~(1 << v)
                pos[u] &= ~(1 << v)
            adj[v] = pos[v] = 0
        return True
    if not is_bipartite(g):
        return False
    seq = [tuple(sorted(e)) for e in c.sequence]
    if len(set(seq)) != len(seq) or set(seq) != set(g.signs):
        return False
    for u, v in seq:
        if not simplicial_edge_masks(adj, pos, u, v):
            return False
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        pos[u] &= ~(1 << v)
        pos[v] &= ~(1 << u)
    return True


# ---------------------------------------------------------------------------
# unsigned counterparts


def is_chordal_graph(g: SignedGraph) -> bool:
    """Perfect elimination by greedy simplicial-vertex deletion; signs ignored."""
    adj = list(g.adj)
    alive = g.vertex_mask
    while alive:
        for v in iter_bits(alive):
            nb = adj[v]
            if all((adj[u] | (1 << u)) & nb == nb for u in iter_bits(nb)):
                break
        else:
            return False
        alive &= ~(1 << v)
        for u in iter_bits(adj[v]):
            adj[u] &= ~(1 << v)
        adj[v] = 0
    return True


def is_chordal_bigraph(g: SignedGraph) -> bool:
    """Perfect edge-without-vertex elimination on the underlying bigraph."""
    side_masks(g)
    u = g.underlying()
    return eliminate_edges(u.n, list(u.adj), list(u.adj), sorted(u.signs)) is not None


def has_induced_long_cycle(g: SignedGraph, min_length: int = 6) -> Optional[list[int]]:
    """An induced cycle with at least ``min_length`` vertices, or ``None``.

    Grows induced paths from each start vertex (as the minimum of the cycle).
    Exponential; meant for cross-checks on small graphs.
    """
    adj = g.adj
    for s in range(g.n):
        allowed = ~((1 << s) - 1)
        for t in iter_bits(adj[s] & allowed):
            stack = [([s, t], (1 << s) | (1 << t))]
            while stack:
                path, used = stack.pop()
                last = path[-1]
                for nx in iter_bits(adj[last] & allowed & ~used):
                    inner = used & ~(1 << s) & ~(1 << last)
                    if adj[nx] & inner:
                        continue
                    if adj[nx] >> s & 1:
                        if len(path) + 1 >= min_length and path[1] < nx:
                            return path + [nx]
                        continue
                    stack.append((path + [nx], used | (1 << nx)))
    return None


# ---------------------------------------------------------------------------
# digraphs


def digraph_to_signed_graph(d: Digraph) -> SignedGraph:
    """Symmetric arc pairs become positive edges, lone arcs negative ones."""
    edges = {}
    for u, v in d.arcs:
        key = (min(u, v), max(u, v))
        if key in edges:
            continue
        edges[key] = "+" if (v, u) in d.arcs else "-"
    return build_graph(d.n, [(u, v, s) for (u, v), s in sorted(edges.items())])


def is_strict_chordal_digraph(d: Digraph) -> bool:
    return recognize_chordal_signed_graph(digraph_to_signed_graph(d)) is not None
