"""Separability, canonical orderings, minimal separations and tadpoles."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .errors import InternalInconsistency, IsolatedVertex, SeparableInput
from .graph import NEG, SignedGraph, components, iter_bits, side_masks


# ---------------------------------------------------------------------------
# separability


def is_separable(g: SignedGraph) -> Optional[tuple[tuple[int, int], tuple[int, int]]]:
    """Two edges inducing ``2K2``, or ``None`` when ``g`` is non-separable."""
    side_masks(g)
    edges = sorted(g.signs)
    adj = g.adj
    for i, (a, b) in enumerate(edges):
        closed = adj[a] | adj[b]
        for c, d in edges[i + 1:]:
            if not (closed >> c & 1 or closed >> d & 1):
                return (a, b), (c, d)
    return None


def is_separable_masks(adj, mask: int) -> bool:
    """``2K2`` test on the subgraph induced by ``mask`` (no bipartite check)."""
    edges = [(u, v) for u in iter_bits(mask) for v in iter_bits(adj[u] & mask) if u < v]
    for i, (a, b) in enumerate(edges):
        closed = adj[a] | adj[b]
        for c, d in edges[i + 1:]:
            if not (closed >> c & 1 or closed >> d & 1):
                return True
    return False


# ---------------------------------------------------------------------------
# canonical orderings


@dataclass(frozen=True)
class CanonicalOrdering:
    x_order: tuple
    y_order: tuple

    def is_nested(self, g: SignedGraph) -> bool:
        xs = [g.adj[v] for v in self.x_order]
        ys = [g.adj[v] for v in self.y_order]
        return (all(xs[i] & xs[i + 1] == xs[i + 1] for i in range(len(xs) - 1))
                and all(ys[i] & ys[i + 1] == ys[i] for i in range(len(ys) - 1)))


def canonical_ordering(g: SignedGraph) -> CanonicalOrdering:
    """Nested-neighbourhood ordering of a non-separable bigraph.

    Side X is the side of vertex 0.  X is sorted by decreasing degree, Y by
    increasing degree, ties by id.
    """
    xmask, ymask = side_masks(g)
    for v in range(g.n):
        if not g.adj[v]:
            raise IsolatedVertex(f"vertex {v} is isolated")
    witness = is_separable(g)
    if witness is not None:
        raise SeparableInput(f"edges {witness[0]} and {witness[1]} induce 2K2")
    deg = [g.adj[v].bit_count() for v in range(g.n)]
    xs = sorted(iter_bits(xmask), key=lambda v: (-deg[v], v))
    ys = sorted(iter_bits(ymask), key=lambda v: (deg[v], v))
    order = CanonicalOrdering(tuple(xs), tuple(ys))
    if not order.is_nested(g):
        raise InternalInconsistency("neighbourhoods of a non-separable bigraph are not nested")
    return order


def _plain_simplicial(adj, u, v) -> bool:
    a_side = adj[u] & ~(1 << v)
    return all(adj[b] & a_side == a_side for b in iter_bits(adj[v] & ~(1 << u)))


@dataclass
class NonsepReport:
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, clause: int, detail: str) -> None:
        self.violations.append((clause, detail))


def check_nonsep_properties(g: SignedGraph, order: CanonicalOrdering) -> NonsepReport:
    """Mechanical check of the five structural facts about canonical orderings
    of non-separable bigraphs.  Signs are ignored throughout."""
    rep = NonsepReport()
    adj = g.adj
    xs, ys = order.x_order, order.y_order
    ymask = sum(1 << y for y in ys)
    xpos = {v: i for i, v in enumerate(xs)}
    ypos = {v: j for j, v in enumerate(ys)}
    if not xs or not ys:
        return rep
    x1, y1 = xs[0], ys[0]
    if adj[x1] != ymask:
        rep.add(1, f"x1={x1} misses some of Y")
    for x in iter_bits(adj[y1]):
        if adj[x] != ymask:
            rep.add(2, f"{x} in N(y1) misses some of Y")
        if not _plain_simplicial(adj, x, y1):
            rep.add(3, f"edge {x}-{y1} not simplicial")
    for (a, b) in sorted(g.signs):
        x, y = (a, b) if a in xpos else (b, a)
        if _plain_simplicial(adj, x, y):
            rest = list(adj)
            rest[x] &= ~(1 << y)
            rest[y] &= ~(1 << x)
            if is_separable_masks(rest, g.vertex_mask):
                rep.add(4, f"deleting simplicial edge {x}-{y} makes the graph separable")
        else:
            i, j = xpos[x], ypos[y]
            found = any(
                not adj[xk] >> yl & 1
                for xk in iter_bits(adj[y]) if xpos[xk] > i
                for yl in iter_bits(adj[x]) if ypos[yl] < j
            )
            if not found:
                rep.add(5, f"non-simplicial edge {x}-{y} has no later/earlier non-adjacent pair")
    return rep


# ---------------------------------------------------------------------------
# minimal separations


@dataclass(frozen=True)
class SeparationCertificate:
    separator: frozenset
    h1: frozenset
    h2: frozenset

    def is_valid(self, g: SignedGraph) -> bool:
        smask = sum(1 << v for v in self.separator)
        comps = components(g, g.vertex_mask & ~smask)
        m1 = sum(1 << v for v in self.h1)
        m2 = sum(1 << v for v in self.h2)
        if m1 not in comps or m2 not in comps or m1 == m2:
            return False
        if not (_has_edge(g, m1) and _has_edge(g, m2)):
            return False
        return all(g.adj[s] & m1 and g.adj[s] & m2 for s in self.separator)


def _has_edge(g: SignedGraph, mask: int) -> bool:
    return any(g.adj[v] & mask for v in iter_bits(mask))


def _nontrivial(g: SignedGraph, mask: int) -> list[int]:
    return [c for c in components(g, mask) if c & (c - 1)]


def find_minimal_separation(g: SignedGraph) -> Optional[SeparationCertificate]:
    """A set ``S`` and two non-trivial components of ``G - S`` such that every
    vertex of ``S`` has neighbours in both; ``None`` if ``g`` is non-separable.

    Starts from the complement of a ``2K2`` and drops vertices (lowest id
    first, repeated to a fixpoint) while two non-trivial components remain.
    """
    witness = is_separable(g)
    if witness is None:
        return None
    (a, b), (c, d) = witness
    keep = (1 << a) | (1 << b) | (1 << c) | (1 << d)
    s = g.vertex_mask & ~keep
    changed = True
    while changed:
        changed = False
        for v in iter_bits(s):
            if len(_nontrivial(g, g.vertex_mask & ~(s & ~(1 << v)))) >= 2:
                s &= ~(1 << v)
                changed = True
    comps = _nontrivial(g, g.vertex_mask & ~s)
    for i, h1 in enumerate(comps):
        for h2 in comps[i + 1:]:
            if all(g.adj[v] & h1 and g.adj[v] & h2 for v in iter_bits(s)):
                return SeparationCertificate(frozenset(iter_bits(s)),
                                             frozenset(iter_bits(h1)),
                                             frozenset(iter_bits(h2)))
    raise InternalInconsistency("greedy separator is not minimal")


def all_minimal_separations(g: SignedGraph) -> Iterator[SeparationCertificate]:
    """Every ``(S, H1, H2)`` with ``S`` minimally separating ``H1`` and ``H2``.

    Exhaustive over vertex subsets; for small graphs only.  Vertices without
    neighbours can never be in ``S`` and are skipped.
    """
    full = g.vertex_mask
    active = sum(1 << v for v in range(g.n) if g.adj[v])
    sub = active
    subsets = []
    while True:
        subsets.append(sub)
        if sub == 0:
            break
        sub = (sub - 1) & active
    for s in reversed(subsets):
        comps = _nontrivial(g, full & ~s)
        if len(comps) < 2:
            continue
        for i, h1 in enumerate(comps):
            for h2 in comps[i + 1:]:
                if all(g.adj[v] & h1 and g.adj[v] & h2 for v in iter_bits(s)):
                    yield SeparationCertificate(frozenset(iter_bits(s)),
                                                frozenset(iter_bits(h1)),
                                                frozenset(iter_bits(h2)))


# ---------------------------------------------------------------------------
# tadpoles


@dataclass(frozen=True)
class TadpoleDescriptor:
    """Tail ``x1 .. xk`` (``x1`` is the end) and heads ``w, y, z``.

    Edges: the tail path, negative ``xk-y`` and ``xk-z``, ``w-y`` and ``w-z``;
    type 2 adds a negative ``w-x(k-1)``.
    """

    tadpole_type: int
    tail: tuple
    w: int
    y: int
    z: int

    @property
    def k(self) -> int:
        return len(self.tail)

    @property
    def end(self) -> int:
        return self.tail[0]

    @property
    def vertices(self) -> tuple:
        return tuple(self.tail) + (self.w, self.y, self.z)

    def edge_pairs(self) -> list[tuple[int, int]]:
        t = self.tail
        pairs = [(t[i], t[i + 1]) for i in range(len(t) - 1)]
        pairs += [(t[-1], self.y), (t[-1], self.z), (self.w, self.y), (self.w, self.z)]
        if self.tadpole_type == 2:
            pairs.append((self.w, t[-2]))
        return pairs

    def negative_pairs(self) -> list[tuple[int, int]]:
        pairs = [(self.tail[-1], self.y), (self.tail[-1], self.z)]
        if self.tadpole_type == 2:
            pairs.append((self.w, self.tail[-2]))
        return pairs


def is_induced_tadpole(g: SignedGraph, t: TadpoleDescriptor) -> bool:
    verts = t.vertices
    if len(set(verts)) != len(verts) or t.tadpole_type not in (1, 2):
        return False
    if t.tadpole_type == 2 and t.k < 2:
        return False
    mask = sum(1 << v for v in verts)
    expected = {(min(a, b), max(a, b)) for a, b in t.edge_pairs()}
    actual = {(u, v) for u in verts for v in iter_bits(g.adj[u] & mask) if u < v}
    if actual != expected:
        return False
    return all(g.sign(a, b) is NEG for a, b in t.negative_pairs())


def _induced_paths(g: SignedGraph, start: int, length: int) -> Iterator[list[int]]:
    """Induced paths with ``length`` vertices starting at ``start``, lexicographic."""
    adj = g.adj

    def grow(path, used):
        if len(path) == length:
            yield list(path)
            return
        last = path[-1]
        inner = used & ~(1 << last)
        for nx in iter_bits(adj[last] & ~used):
            if adj[nx] & inner:
                continue
            path.append(nx)
            yield from grow(path, used | (1 << nx))
            path.pop()

    yield from grow([start], 1 << start)


def find_tadpole_at(g: SignedGraph, v: int, cap_k: int = 16) -> Optional[TadpoleDescriptor]:
    """An induced tadpole whose end is ``v``; shortest tail first, then
    lexicographic on the tail, then on ``(y, z, w)``."""
    side_masks(g)
    adj, pos = g.adj, g.pos
    for k in range(1, min(cap_k, g.n - 3) + 1):
        any_path = False
        for tail in _induced_paths(g, v, k):
            any_path = True
            tmask = sum(1 << t for t in tail)
            xk = tail[-1]
            before = tmask & ~(1 << xk)
            heads = [h for h in iter_bits(adj[xk] & ~pos[xk] & ~tmask) if not adj[h] & before]
            for i, y in enumerate(heads):
                for z in heads[i + 1:]:
                    for w in iter_bits(adj[y] & adj[z] & ~tmask):
                        touch = adj[w] & tmask
                        if touch == 0:
                            return TadpoleDescriptor(1, tuple(tail), w, y, z)
                        if k >= 2 and touch == 1 << tail[-2] and not pos[w] >> tail[-2] & 1:
                            return TadpoleDescriptor(2, tuple(tail), w, y, z)
        if not any_path:
            break
    return None


# ---------------------------------------------------------------------------
# complete adjacency


class Adjacency(enum.Enum):
    NOT_COMPLETE = "not-completely-adjacent"
    ALL_POSITIVE = "completely-adjacent-all-positive"
    WITH_EXCEPTIONS = "completely-adjacent-with-exceptions"


@dataclass(frozen=True)
class AdjacencyClass:
    kind: Adjacency
    exceptions: tuple = ()

    @property
    def exceptions_allowed(self) -> bool:
        """True when every negative edge goes to the end or to ``w``."""
        return all(tag in ("x", "w") for tag, _ in self.exceptions)


def check_complete_adjacency(g: SignedGraph, u: int, t: TadpoleDescriptor) -> AdjacencyClass:
    """Classify how ``u`` attaches to tadpole ``t`` (``u`` not on ``t``)."""
    if u in t.vertices:
        raise ValueError("u lies on the tadpole")
    xmask, _ = side_masks(g)
    u_side = xmask >> u & 1
    opposite = [v for v in t.vertices if (xmask >> v & 1) != u_side]
    if any(not g.adj[u] >> v & 1 for v in opposite):
        return AdjacencyClass(Adjacency.NOT_COMPLETE)
    names = {v: f"x{i + 1}" for i, v in enumerate(t.tail)}
    names.update({t.end: "x", t.w: "w", t.y: "y", t.z: "z"})
    exc = tuple((names[v], v) for v in opposite if not g.pos[u] >> v & 1)
    if not exc:
        return AdjacencyClass(Adjacency.ALL_POSITIVE)
    return AdjacencyClass(Adjacency.WITH_EXCEPTIONS, exc)
