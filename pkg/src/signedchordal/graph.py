"""Signed graphs, bipartitions, black-edge patterns and sign-aware isomorphism.

Vertices are dense integers ``0 .. n-1``.  Adjacency is kept twice: as one
bitmask per vertex (``adj[v]``, and ``pos[v]`` for the positive neighbours)
and as a sign map keyed by ``(min, max)``.  Graph values are immutable.
"""

from __future__ import annotations

import enum
import itertools
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Optional, Sequence

from .errors import DuplicateEdge, LoopEdge, OddCycle, VertexOutOfRange


class Sign(enum.Enum):
    POSITIVE = "+"
    NEGATIVE = "-"

    @classmethod
    def parse(cls, value) -> "Sign":
        if isinstance(value, Sign):
            return value
        if value in ("+", "+1", 1, "pos", "positive"):
            return cls.POSITIVE
        if value in ("-", "-1", -1, "neg", "negative"):
            return cls.NEGATIVE
        raise ValueError(f"not a sign: {value!r}")

    def __str__(self) -> str:
        return self.value

    def flipped(self) -> "Sign":
        return Sign.NEGATIVE if self is Sign.POSITIVE else Sign.POSITIVE


POS = Sign.POSITIVE
NEG = Sign.NEGATIVE


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_to_set(mask: int) -> frozenset:
    return frozenset(iter_bits(mask))


def set_to_bits(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def _key(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class SignedGraph:
    """An immutable simple graph whose every edge is positive or negative.

    Build instances with :func:`build_graph`; the constructor trusts its
    input.
    """

    __slots__ = ("n", "adj", "pos", "signs", "labels", "_hash")

    def __init__(self, n: int, signs: Mapping[tuple[int, int], Sign], labels=None):
        adj = [0] * n
        pos = [0] * n
        for (u, v), s in signs.items():
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            if s is POS:
                pos[u] |= 1 << v
                pos[v] |= 1 << u
        self.n = n
        self.adj = tuple(adj)
        self.pos = tuple(pos)
        self.signs = dict(signs)
        self.labels = tuple(labels) if labels is not None else None
        self._hash = None

    # -- basic queries -----------------------------------------------------
    @property
    def m(self) -> int:
        return len(self.signs)

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> list[tuple[int, int, Sign]]:
        """All edges as ``(u, v, sign)`` with ``u < v``, sorted."""
        return [(u, v, s) for (u, v), s in sorted(self.signs.items())]

    def edge_pairs(self) -> list[tuple[int, int]]:
        return sorted(self.signs)

    def sign(self, u: int, v: int) -> Optional[Sign]:
        return self.signs.get(_key(u, v))

    def has_edge(self, u: int, v: int) -> bool:
        return _key(u, v) in self.signs

    def neg(self, v: int) -> int:
        return self.adj[v] & ~self.pos[v]

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def label(self, v: int) -> Optional[str]:
        return None if self.labels is None else self.labels[v]

    def positive_edges(self):
        return [(u, v) for (u, v), s in sorted(self.signs.items()) if s is POS]

    def negative_edges(self):
        return [(u, v) for (u, v), s in sorted(self.signs.items()) if s is NEG]

    # -- derived graphs ----------------------------------------------------
    def underlying(self) -> "SignedGraph":
        """The same graph with every edge made positive (signs forgotten)."""
        return SignedGraph(self.n, {e: POS for e in self.signs}, self.labels)

    def without_edges(self, edges: Iterable[tuple[int, int]]) -> "SignedGraph":
        signs = dict(self.signs)
        for u, v in edges:
            signs.pop(_key(u, v))
        return SignedGraph(self.n, signs, self.labels)

    def relabeled(self, perm: Sequence[int]) -> "SignedGraph":
        """Graph with vertex ``v`` renamed ``perm[v]`` (perm is a bijection)."""
        signs = {_key(perm[u], perm[v]): s for (u, v), s in self.signs.items()}
        labels = None
        if self.labels is not None:
            labels = [None] * self.n
            for v in range(self.n):
                labels[perm[v]] = self.labels[v]
        return SignedGraph(self.n, signs, labels)

    # -- value semantics ---------------------------------------------------
    def __eq__(self, other) -> bool:
        if not isinstance(other, SignedGraph):
            return NotImplemented
        return (self.n == other.n and self.signs == other.signs
                and self.labels == other.labels)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, tuple(sorted(self.signs.items(), key=lambda kv: kv[0])),
                               self.labels))
        return self._hash

    def __repr__(self) -> str:
        body = " ".join(f"{u}{s.value}{v}" for u, v, s in self.edges())
        return f"SignedGraph(n={self.n}, [{body}])"


def build_graph(n: int, signed_edges: Iterable, labels=None) -> SignedGraph:
    """Validate and build a signed graph from ``(u, v, sign)`` triples.

    Signs may be :class:`Sign` members or ``'+'``/``'-'``.  Duplicate pairs
    are rejected rather than overwritten.
    """
    if n < 0:
        raise VertexOutOfRange(f"negative vertex count {n}")
    signs: dict[tuple[int, int], Sign] = {}
    for u, v, s in signed_edges:
        for w in (u, v):
            if not 0 <= w < n:
                raise VertexOutOfRange(f"vertex {w} not in 0..{n - 1}")
        if u == v:
            raise LoopEdge(f"loop at vertex {u}")
        k = _key(u, v)
        if k in signs:
            raise DuplicateEdge(f"edge {k[0]}-{k[1]} given twice")
        signs[k] = Sign.parse(s)
    if labels is not None:
        labels = list(labels)
        if len(labels) != n:
            raise VertexOutOfRange("label table does not match vertex count")
    return SignedGraph(n, signs, labels)


def negative_cycle(length: int) -> SignedGraph:
    return build_graph(length, [(i, (i + 1) % length, NEG) for i in range(length)])


def induced_subgraph(g: SignedGraph, keep: Iterable[int], with_map: bool = False):
    """Subgraph induced by ``keep``, relabelled densely in increasing id order.

    With ``with_map=True`` returns ``(subgraph, old_to_new)``.
    """
    keep = sorted(set(keep))
    for v in keep:
        if not 0 <= v < g.n:
            raise VertexOutOfRange(f"vertex {v} not in graph")
    old_to_new = {v: i for i, v in enumerate(keep)}
    kmask = set_to_bits(keep)
    signs = {}
    for u in keep:
        for v in iter_bits(g.adj[u] & kmask):
            if u < v:
                signs[(old_to_new[u], old_to_new[v])] = g.signs[(u, v)]
    labels = None if g.labels is None else [g.labels[v] for v in keep]
    sub = SignedGraph(len(keep), signs, labels)
    return (sub, old_to_new) if with_map else sub


def induced_by_mask(g: SignedGraph, mask: int) -> SignedGraph:
    return induced_subgraph(g, iter_bits(mask))


# ---------------------------------------------------------------------------
# bipartitions


@dataclass(frozen=True)
class Bipartition:
    x: frozenset
    y: frozenset

    def validate(self, g: SignedGraph) -> None:
        if self.x & self.y or (self.x | self.y) != frozenset(range(g.n)):
            raise ValueError("sides must partition the vertex set")
        for u, v in g.signs:
            if (u in self.x) == (v in self.x):
                raise ValueError(f"edge {u}-{v} inside one side")

    @property
    def alpha(self) -> int:
        return len(self.x)

    @property
    def beta(self) -> int:
        return len(self.y)

    def side_of(self, v: int) -> str:
        return "x" if v in self.x else "y"

    def swapped(self) -> "Bipartition":
        return Bipartition(self.y, self.x)


def side_masks(g: SignedGraph) -> tuple[int, int]:
    """Bitmask form of :func:`bipartition` (same deterministic rule)."""
    colour = [-1] * g.n
    xmask = 0
    for root in range(g.n):
        if colour[root] != -1:
            continue
        colour[root] = 0
        xmask |= 1 << root
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in iter_bits(g.adj[u]):
                if colour[v] == -1:
                    colour[v] = 1 - colour[u]
                    if colour[v] == 0:
                        xmask |= 1 << v
                    queue.append(v)
                elif colour[v] == colour[u]:
                    raise OddCycle(f"odd cycle through edge {u}-{v}")
    return xmask, g.vertex_mask & ~xmask


def is_bipartite(g: SignedGraph) -> bool:
    try:
        side_masks(g)
    except OddCycle:
        return False
    return True


def bipartition(g: SignedGraph) -> Bipartition:
    """2-colour ``g``; the lowest id of every component goes to side X."""
    xmask, ymask = side_masks(g)
    bp = Bipartition(bits_to_set(xmask), bits_to_set(ymask))
    bp.validate(g)
    return bp


def is_positive_biclique(g: SignedGraph, s: Iterable[int]) -> bool:
    """True iff every X-vertex of ``s`` is joined to every Y-vertex of ``s``
    by a positive edge (X, Y from :func:`bipartition`)."""
    xmask, ymask = side_masks(g)
    smask = set_to_bits(s)
    if smask >> g.n:
        raise VertexOutOfRange("vertex set not contained in graph")
    ys = smask & ymask
    return all(g.pos[x] & ys == ys for x in iter_bits(smask & xmask))


def is_positive_clique(g: SignedGraph, s: Iterable[int]) -> bool:
    smask = set_to_bits(s)
    if smask >> g.n:
        raise VertexOutOfRange("vertex set not contained in graph")
    return all(g.pos[v] & smask == smask & ~(1 << v) for v in iter_bits(smask))


def components(g: SignedGraph, mask: Optional[int] = None) -> list[int]:
    """Connected components of ``g`` restricted to ``mask``, as bitmasks,
    ordered by their lowest vertex."""
    if mask is None:
        mask = g.vertex_mask
    comps = []
    rest = mask
    while rest:
        seed = rest & -rest
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= g.adj[v]
            nxt &= mask & ~comp
            comp |= nxt
            frontier = nxt
        comps.append(comp)
        rest &= ~comp
    return comps


# ---------------------------------------------------------------------------
# patterns with black edges


@dataclass(frozen=True)
class PatternGraph:
    """Edge-coloured template: blue = positive, red = negative, black = either."""

    n: int
    blue: frozenset = frozenset()
    red: frozenset = frozenset()
    black: frozenset = frozenset()
    name: str = ""

    def __post_init__(self):
        norm = {}
        for colour in ("blue", "red", "black"):
            edges = frozenset(_key(u, v) for u, v in getattr(self, colour))
            for u, v in edges:
                if u == v:
                    raise LoopEdge(f"loop at {u} in pattern {self.name}")
                if not (0 <= u < self.n and 0 <= v < self.n):
                    raise VertexOutOfRange(f"pattern edge {u}-{v} out of range")
            norm[colour] = edges
            object.__setattr__(self, colour, edges)
        if (norm["blue"] & norm["red"]) or (norm["blue"] & norm["black"]) \
                or (norm["red"] & norm["black"]):
            raise DuplicateEdge(f"pattern {self.name} colours overlap")

    @property
    def edges(self) -> frozenset:
        return self.blue | self.red | self.black

    def instantiate(self, black_signs: Sequence[Sign]) -> SignedGraph:
        """The member obtained by giving the sorted black edges these signs."""
        signs = {e: POS for e in self.blue}
        signs.update({e: NEG for e in self.red})
        for e, s in zip(sorted(self.black), black_signs, strict=True):
            signs[e] = Sign.parse(s)
        return SignedGraph(self.n, signs)

    def raw_expansions(self) -> Iterator[SignedGraph]:
        for vec in itertools.product((POS, NEG), repeat=len(self.black)):
            yield self.instantiate(vec)


def expand_pattern(p: PatternGraph) -> list[SignedGraph]:
    """All black-edge sign assignments, one representative per
    sign-isomorphism class, in lexicographic order of the sign vector
    (``+`` before ``-``, sorted black edges)."""
    return dedup_isomorphic(p.raw_expansions())


def dedup_isomorphic(graphs: Iterable[SignedGraph]) -> list[SignedGraph]:
    """Keep the first graph of every sign-isomorphism class, order preserved."""
    kept: list[SignedGraph] = []
    buckets: dict = {}
    for g in graphs:
        key = invariant(g)
        bucket = buckets.setdefault(key, [])
        if any(are_isomorphic(h, g) is not None for h in bucket):
            continue
        bucket.append(g)
        kept.append(g)
    return kept


# ---------------------------------------------------------------------------
# isomorphism


def _refine(g: SignedGraph, rounds: int = 3) -> list:
    colour = [(g.pos[v].bit_count(), g.neg(v).bit_count()) for v in range(g.n)]
    for _ in range(rounds):
        palette = {c: i for i, c in enumerate(sorted(set(colour)))}
        c = [palette[x] for x in colour]
        colour = [
            (c[v],
             tuple(sorted(c[u] for u in iter_bits(g.pos[v]))),
             tuple(sorted(c[u] for u in iter_bits(g.neg(v)))))
            for v in range(g.n)
        ]
    return colour


def invariant(g: SignedGraph):
    """Isomorphism invariant: sorted colours after signed colour refinement."""
    return (g.n, len(g.signs), tuple(sorted(_refine(g))))


class _Matcher:
    """Backtracking bijection search from a pattern onto a target graph.

    Pattern edges carry a requirement: must be positive, must be negative,
    or any sign.  Non-edges must map to non-edges.
    """

    def __init__(self, n, p_adj, p_blue, p_red, t_adj, t_pos, pinned=None):
        self.n = n
        self.p_adj, self.p_blue, self.p_red = p_adj, p_blue, p_red
        self.t_adj, self.t_pos = t_adj, t_pos
        self.t_neg = [t_adj[v] & ~t_pos[v] for v in range(n)]
        self.pinned = dict(pinned or {})
        # static candidates from degree bookkeeping
        static = []
        for p in range(n):
            deg = p_adj[p].bit_count()
            nb, nr = p_blue[p].bit_count(), p_red[p].bit_count()
            mask = 0
            for c in range(n):
                if t_adj[c].bit_count() != deg:
                    continue
                tp = t_pos[c].bit_count()
                tn = deg - tp
                if tp >= nb and tn >= nr:
                    mask |= 1 << c
            static.append(mask)
        self.static = static
        self.order = self._order()

    def _order(self):
        n = self.n
        seen = 0
        order = []
        pinned_first = sorted(self.pinned)
        for p in pinned_first:
            order.append(p)
            seen |= 1 << p
        while len(order) < n:
            # most constrained next: most neighbours already placed, then degree
            best = None
            for p in range(n):
                if seen >> p & 1:
                    continue
                key = ((self.p_adj[p] & seen).bit_count(),
                       -self.static[p].bit_count(), self.p_adj[p].bit_count(), -p)
                if best is None or key > best[0]:
                    best = (key, p)
            order.append(best[1])
            seen |= 1 << best[1]
        return order

    def run(self) -> Optional[list[int]]:
        image = [-1] * self.n
        for p, c in self.pinned.items():
            if not self.static[p] >> c & 1:
                return None
        if self._extend(0, image, 0):
            return image
        return None

    def _extend(self, depth, image, used) -> bool:
        if depth == self.n:
            return True
        p = self.order[depth]
        cand = self.static[p] & ~used
        if p in self.pinned:
            cand &= 1 << self.pinned[p]
        for q in self.order[:depth]:
            fq = image[q]
            bit = 1 << q
            if self.p_adj[p] & bit:
                if self.p_blue[p] & bit:
                    cand &= self.t_pos[fq]
                elif self.p_red[p] & bit:
                    cand &= self.t_neg[fq]
                else:
                    cand &= self.t_adj[fq]
            else:
                cand &= ~self.t_adj[fq]
            if not cand:
                return False
        for c in iter_bits(cand):
            image[p] = c
            if self._extend(depth + 1, image, used | (1 << c)):
                return True
        image[p] = -1
        return False


def are_isomorphic(g: SignedGraph, h: SignedGraph, respect_signs: bool = True):
    """A vertex bijection ``f`` (list, ``f[v]`` in ``h``) or ``None``."""
    if g.n != h.n or len(g.signs) != len(h.signs):
        return None
    if respect_signs:
        if invariant(g) != invariant(h):
            return None
        matcher = _Matcher(g.n, g.adj, g.pos, [g.neg(v) for v in range(g.n)],
                           h.adj, h.pos)
    else:
        gu, hu = g.underlying(), h.underlying()
        if invariant(gu) != invariant(hu):
            return None
        matcher = _Matcher(g.n, gu.adj, gu.pos, [0] * g.n, hu.adj, hu.pos)
    return matcher.run()


def match_pattern(p: PatternGraph, g: SignedGraph, pinned: Optional[dict] = None):
    """A bijection from pattern vertices onto ``g`` realising some member of
    the pattern's family, or ``None``.  ``pinned`` fixes some images."""
    if p.n != g.n or len(p.edges) != len(g.signs):
        return None
    adj = [0] * p.n
    blue = [0] * p.n
    red = [0] * p.n
    for colour, store in ((p.blue, blue), (p.red, red), (p.black, None)):
        for u, v in colour:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            if store is not None:
                store[u] |= 1 << v
                store[v] |= 1 << u
    return _Matcher(p.n, adj, blue, red, g.adj, g.pos, pinned).run()


def check_isomorphism(g: SignedGraph, h: SignedGraph, f: Sequence[int],
                      respect_signs: bool = True) -> bool:
    """Replay a claimed bijection edge by edge."""
    if g.n != h.n or sorted(f) != list(range(g.n)):
        return False
    for u in range(g.n):
        for v in range(u + 1, g.n):
            a, b = g.sign(u, v), h.sign(f[u], f[v])
            if (a is None) != (b is None):
                return False
            if respect_signs and a is not b:
                return False
    return True


# ---------------------------------------------------------------------------
# digraphs


@dataclass(frozen=True)
class Digraph:
    n: int
    arcs: frozenset

    def __post_init__(self):
        arcs = frozenset((int(u), int(v)) for u, v in self.arcs)
        for u, v in arcs:
            if u == v:
                raise LoopEdge(f"loop arc at {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise VertexOutOfRange(f"arc {u}->{v} out of range")
        object.__setattr__(self, "arcs", arcs)
