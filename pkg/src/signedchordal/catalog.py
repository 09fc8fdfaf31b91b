"""The forbidden family: generators, membership and witness extraction.

Finite members (F1-F6, D, the five minimal complete bigraphs) come from the
transcribed figure data in ``data/figures.json``.  Cycles, sums and joins of
tadpoles are parametric and built here.
"""

from __future__ import annotations

import functools
import itertools
import json
from dataclasses import dataclass
from importlib import resources
from typing import Iterable, Iterator, Optional, Sequence

from .elimination import has_signed_simplicial_edge, recognize_chordal_signed_bigraph
from .errors import (
    IncompatibleParities,
    InputIsChordal,
    InternalInconsistency,
    ParamOutOfBounds,
)
from .graph import (
    NEG,
    POS,
    PatternGraph,
    Sign,
    SignedGraph,
    components,
    dedup_isomorphic,
    expand_pattern,
    induced_subgraph,
    invariant,
    are_isomorphic,
    is_bipartite,
    iter_bits,
    match_pattern,
    side_masks,
)
from .structure import TadpoleDescriptor

FINITE_FAMILIES = ("F1", "F2", "F3", "F4", "F5", "F6", "D")
PARAMETRIC_FAMILIES = ("C2k", "Sum", "Join")
FORBIDDEN_FAMILIES = FINITE_FAMILIES + PARAMETRIC_FAMILIES
AUXILIARY_FAMILIES = ("MinimalComplete", "W", "Z", "Tadpole")

MAX_CYCLE_K = 8
MAX_TAIL = 8


# ---------------------------------------------------------------------------
# tags


@dataclass(frozen=True)
class FamilyTag:
    """A family name plus its parameters as ``(name, value)`` pairs."""

    family: str
    params: tuple = ()

    def param(self, name, default=None):
        return dict(self.params).get(name, default)

    def __str__(self) -> str:
        if not self.params:
            return self.family
        body = " ".join(f"{k}={v}" for k, v in self.params)
        return f"{self.family} {body}"

    @classmethod
    def parse(cls, text: str) -> "FamilyTag":
        parts = text.replace(",", " ").split()
        if not parts:
            raise ParamOutOfBounds("empty family tag")
        params = []
        for item in parts[1:]:
            key, _, value = item.partition("=")
            params.append((key, _coerce(value)))
        return cls(parts[0], tuple(params))

    def with_params(self, **kw) -> "FamilyTag":
        merged = dict(self.params)
        merged.update(kw)
        return FamilyTag(self.family, tuple(merged.items()))


def _coerce(value: str):
    if value.lstrip("-").isdigit():
        return int(value)
    return value


def cycle_tag(k: int) -> FamilyTag:
    return FamilyTag("C2k", (("k", k),))


@dataclass(frozen=True)
class ForbiddenWitness:
    """An induced copy of ``member`` inside a host: ``embedding[i]`` is the
    host vertex playing member vertex ``i``."""

    tag: FamilyTag
    member: SignedGraph
    embedding: tuple

    def host_vertices(self) -> list[int]:
        return sorted(self.embedding)

    def is_valid(self, host: SignedGraph) -> bool:
        emb = self.embedding
        if len(set(emb)) != len(emb) or len(emb) != self.member.n:
            return False
        for i in range(self.member.n):
            for j in range(i + 1, self.member.n):
                if self.member.sign(i, j) is not host.sign(emb[i], emb[j]):
                    return False
        return True


# ---------------------------------------------------------------------------
# figure data


@functools.lru_cache(maxsize=None)
def figure_data() -> dict:
    text = resources.files("signedchordal").joinpath("data/figures.json").read_text()
    return json.loads(text)


def figure_pattern(name: str) -> PatternGraph:
    try:
        d = figure_data()[name]
    except KeyError:
        raise ParamOutOfBounds(f"no figure named {name}") from None
    return PatternGraph(d["n"], frozenset(map(tuple, d["blue"])),
                        frozenset(map(tuple, d["red"])),
                        frozenset(map(tuple, d["black"])), name)


def w_graph_ends(i: int) -> tuple:
    """Labelled vertices ``x`` (and ``x'`` where drawn) of ``W_i``."""
    d = figure_data()[f"W{i}"]
    return (d["x"],) + ((d["x_prime"],) if "x_prime" in d else ())


def z_roles(i: int) -> dict:
    return dict(figure_data()[f"Z{i}"]["roles"])


# ---------------------------------------------------------------------------
# tadpoles


@dataclass(frozen=True)
class Tadpole:
    """A concrete signed tadpole: its graph plus the roles of its vertices."""

    graph: SignedGraph
    descriptor: TadpoleDescriptor

    @property
    def is_w1(self) -> bool:
        return self.descriptor.tadpole_type == 1 and self.descriptor.k == 1


def _check_tadpole_params(tadpole_type: int, k: int, cap: int = MAX_TAIL) -> None:
    if tadpole_type not in (1, 2):
        raise ParamOutOfBounds(f"tadpole type must be 1 or 2, got {tadpole_type}")
    low = 1 if tadpole_type == 1 else 2
    if not low <= k <= cap:
        raise ParamOutOfBounds(f"type-{tadpole_type} tail length must be in {low}..{cap}")


def tadpole_descriptor(tadpole_type: int, k: int) -> TadpoleDescriptor:
    """Standard ids: tail ``0..k-1`` (end 0), then ``w = k, y = k+1, z = k+2``."""
    return TadpoleDescriptor(tadpole_type, tuple(range(k)), k, k + 1, k + 2)


def tadpole_pattern(tadpole_type: int, k: int, cap: int = MAX_TAIL) -> PatternGraph:
    _check_tadpole_params(tadpole_type, k, cap)
    d = tadpole_descriptor(tadpole_type, k)
    red = set(d.negative_pairs())
    black = set(d.edge_pairs()) - red
    return PatternGraph(k + 3, frozenset(), frozenset(red), frozenset(black),
                        f"T{tadpole_type},{k}")


def make_tadpole(tadpole_type: int, k: int, black_signs: Optional[Sequence] = None) -> Tadpole:
    """A tadpole with its black edges (sorted) signed as given, default all '+'."""
    p = tadpole_pattern(tadpole_type, k)
    if black_signs is None:
        black_signs = [POS] * len(p.black)
    signs = [Sign.parse(s) for s in black_signs]
    return Tadpole(p.instantiate(signs), tadpole_descriptor(tadpole_type, k))


def _parity_from(g_adj: Sequence[int], root: int, n: int) -> list[int]:
    par = [-1] * n
    par[root] = 0
    frontier = [root]
    while frontier:
        nxt = []
        for u in frontier:
            for v in iter_bits(g_adj[u]):
                if par[v] == -1:
                    par[v] = 1 - par[u]
                    nxt.append(v)
        frontier = nxt
    return par


def _pattern_adj(p: PatternGraph) -> list[int]:
    adj = [0] * p.n
    for u, v in p.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return adj


# ---------------------------------------------------------------------------
# sums and joins as patterns


def sum_pattern(t1: tuple, t2: tuple, cap: int = MAX_TAIL) -> PatternGraph:
    """Pattern of all sums of a ``(type, k)`` tadpole with another.

    The first tadpole keeps the standard ids; the second tadpole's end is
    vertex 0 and its other vertices follow.
    """
    p1, p2 = tadpole_pattern(*t1, cap=cap), tadpole_pattern(*t2, cap=cap)
    off = p1.n - 1

    def m(v):
        return 0 if v == 0 else v + off

    colour = {}
    for name in ("blue", "red", "black"):
        colour[name] = set(getattr(p1, name)) | {(m(u), m(v)) for u, v in getattr(p2, name)}
    return PatternGraph(p1.n + p2.n - 1, frozenset(colour["blue"]), frozenset(colour["red"]),
                        frozenset(colour["black"]), f"Sum{t1}{t2}")


def _sign_colour(choice) -> str:
    if choice is None or choice == "*":
        return "black"
    return "red" if Sign.parse(choice) is NEG else "blue"


def join_pattern(t1: tuple, t2: tuple, same_side: bool,
                 exceptions: tuple = (None, None), cap: int = MAX_TAIL) -> PatternGraph:
    """Pattern of the joins of two tadpoles.

    The first tadpole uses ids ``0..n1-1`` with end 0; the second uses
    ``n1..`` with end ``n1``.  ``same_side`` says whether the two ends lie in
    the same part.  Every cross edge is positive, except that when the ends
    lie in different parts and a constituent is ``W1`` the edge from the
    other end to that ``W1``'s far head ``w`` takes the sign in
    ``exceptions`` (``None`` leaves it free).
    """
    p1, p2 = tadpole_pattern(*t1, cap=cap), tadpole_pattern(*t2, cap=cap)
    w1 = (t1 == (1, 1), t2 == (1, 1))
    for idx in (0, 1):
        if exceptions[idx] is not None and exceptions[idx] != "*":
            if not w1[idx]:
                raise IncompatibleParities("exception sign given for a constituent that is not W1")
            if same_side:
                raise IncompatibleParities("exception edges only exist when the ends are in different parts")
    n1 = p1.n
    par1 = _parity_from(_pattern_adj(p1), 0, p1.n)
    par2 = _parity_from(_pattern_adj(p2), 0, p2.n)
    shift = 0 if same_side else 1
    colour = {"blue": set(p1.blue), "red": set(p1.red), "black": set(p1.black)}
    for name in colour:
        colour[name] |= {(u + n1, v + n1) for u, v in getattr(p2, name)}
    x, xp = 0, n1
    w_of = {0: p1.n - 3, 1: n1 + p2.n - 3}
    # x against the second tadpole
    for v in range(p2.n):
        if par2[v] ^ shift == 1:
            target = v + n1
            if w1[1] and not same_side and target == w_of[1]:
                colour[_sign_colour(exceptions[1])].add((x, target))
            else:
                colour["blue"].add((x, target))
    # x' against the first tadpole
    for v in range(p1.n):
        if par1[v] != shift:
            if v == x:
                continue  # the x x' edge is already present
            if w1[0] and not same_side and v == w_of[0]:
                colour[_sign_colour(exceptions[0])].add((v, xp))
            else:
                colour["blue"].add((v, xp))
    return PatternGraph(n1 + p2.n, frozenset(colour["blue"]), frozenset(colour["red"]),
                        frozenset(colour["black"]), f"Join{t1}{t2}")


def sum_of_tadpoles(t1: Tadpole, t2: Tadpole) -> SignedGraph:
    """Disjoint union of two tadpoles with their ends identified.

    The result uses ``t1``'s vertex ids, followed by ``t2``'s non-end vertices
    in increasing id order.
    """
    g1, g2 = t1.graph, t2.graph
    e2 = t2.descriptor.end
    others = [v for v in range(g2.n) if v != e2]
    m2 = {v: g1.n + i for i, v in enumerate(others)}
    m2[e2] = t1.descriptor.end
    signs = dict(g1.signs)
    for (u, v), s in g2.signs.items():
        a, b = m2[u], m2[v]
        signs[(min(a, b), max(a, b))] = s
    return SignedGraph(g1.n + g2.n - 1, signs)


def join_of_tadpoles(t1: Tadpole, t2: Tadpole, same_side: Optional[bool] = None,
                     exceptions: tuple = (None, None)) -> list[SignedGraph]:
    """All joins of two concrete tadpoles consistent with the options.

    ``same_side=None`` produces both placements of the ends.  ``exceptions``
    fixes, per ``W1`` constituent, the sign of the edge from the other end to
    its far head; ``None`` produces both signs.
    """
    g1, g2 = t1.graph, t2.graph
    d1, d2 = t1.descriptor, t2.descriptor
    for idx, t in ((0, t1), (1, t2)):
        if exceptions[idx] is not None and not t.is_w1:
            raise IncompatibleParities("exception sign given for a constituent that is not W1")
    if same_side is True and any(e is not None for e in exceptions):
        raise IncompatibleParities("exception edges only exist when the ends are in different parts")
    placements = [True, False] if same_side is None else [same_side]
    par1 = _parity_from(g1.adj, d1.end, g1.n)
    par2 = _parity_from(g2.adj, d2.end, g2.n)
    n1 = g1.n
    x, xp = d1.end, d2.end + n1
    out = []
    for same in placements:
        shift = 0 if same else 1
        if same and any(e is not None for e in exceptions):
            continue
        base = dict(g1.signs)
        base.update({(u + n1, v + n1): s for (u, v), s in g2.signs.items()})
        free = []
        for v in range(g2.n):
            if par2[v] ^ shift == 1:
                key = (x, v + n1) if x < v + n1 else (v + n1, x)
                if t2.is_w1 and not same and v == d2.w:
                    free.append((key, exceptions[1]))
                else:
                    base[key] = POS
        for v in range(g1.n):
            if par1[v] != shift and v != x:
                key = (v, xp) if v < xp else (xp, v)
                if t1.is_w1 and not same and v == d1.w:
                    free.append((key, exceptions[0]))
                else:
                    base[key] = POS
        choices = [[Sign.parse(c)] if c is not None else [POS, NEG] for _, c in free]
        for combo in itertools.product(*choices):
            signs = dict(base)
            for (key, _), s in zip(free, combo):
                signs[key] = s
            out.append(SignedGraph(n1 + g2.n, signs))
    return out


# ---------------------------------------------------------------------------
# generation


def cycle_graph(signs: Sequence) -> SignedGraph:
    n = len(signs)
    return SignedGraph(n, {(min(i, (i + 1) % n), max(i, (i + 1) % n)): Sign.parse(s)
                           for i, s in enumerate(signs)})


def _cycle_key(vec: tuple) -> tuple:
    n = len(vec)
    rots = [vec[i:] + vec[:i] for i in range(n)]
    rev = vec[::-1]
    rots += [rev[i:] + rev[:i] for i in range(n)]
    return min(rots)


def tadpole_kinds(max_tail: int) -> list[tuple[int, int]]:
    return [(1, k) for k in range(1, max_tail + 1)] + [(2, k) for k in range(2, max_tail + 1)]


def _tag_pattern(tag: FamilyTag) -> PatternGraph:
    fam = tag.family
    if fam in FINITE_FAMILIES:
        return figure_pattern(fam)
    if fam == "MinimalComplete":
        i = tag.param("i")
        if i not in range(1, 6):
            raise ParamOutOfBounds("MinimalComplete index must be 1..5")
        return figure_pattern(f"MinimalComplete{i}")
    if fam == "W":
        i = tag.param("i")
        if i not in range(1, 7):
            raise ParamOutOfBounds("W index must be 1..6")
        return figure_pattern(f"W{i}")
    if fam == "Z":
        i = tag.param("i")
        if i not in (1, 2):
            raise ParamOutOfBounds("Z index must be 1 or 2")
        return figure_pattern(f"Z{i}")
    if fam == "Tadpole":
        return tadpole_pattern(tag.param("type"), tag.param("k"))
    if fam == "Sum":
        return sum_pattern(_constituent(tag, 1), _constituent(tag, 2))
    raise ParamOutOfBounds(f"no single pattern for {tag}")


def _constituent(tag: FamilyTag, i: int) -> tuple:
    t, k = tag.param(f"type{i}"), tag.param(f"k{i}")
    if t is None or k is None:
        raise ParamOutOfBounds(f"{tag.family} needs type{i} and k{i}")
    _check_tadpole_params(t, k)
    return (t, k)


def join_patterns(tag: FamilyTag) -> list[tuple[FamilyTag, PatternGraph]]:
    """Every fully specified join pattern compatible with a (partial) tag."""
    t1, t2 = _constituent(tag, 1), _constituent(tag, 2)
    side = tag.param("side")
    if side not in (None, "same", "opposite"):
        raise ParamOutOfBounds("side must be 'same' or 'opposite'")
    sides = ["same", "opposite"] if side is None else [side]
    out = []
    for sd in sides:
        ex_opts = []
        for idx, t in ((1, t1), (2, t2)):
            given = tag.param(f"w{idx}")
            if sd == "same" or t != (1, 1):
                if given not in (None, "none"):
                    if side is None:
                        ex_opts = None
                        break
                    raise IncompatibleParities(f"w{idx} option needs an opposite-side W1 constituent")
                ex_opts.append(["none"])
            else:
                ex_opts.append(["+", "-"] if given in (None, "*") else [given])
        if ex_opts is None:
            continue
        for e1, e2 in itertools.product(*ex_opts):
            full = FamilyTag("Join", (("type1", t1[0]), ("k1", t1[1]), ("type2", t2[0]),
                                      ("k2", t2[1]), ("side", sd), ("w1", e1), ("w2", e2)))
            ex = tuple(None if e == "none" else e for e in (e1, e2))
            out.append((full, join_pattern(t1, t2, sd == "same", ex)))
    return out


def generate_raw(tag: FamilyTag) -> Iterator[SignedGraph]:
    """Every member before isomorphism reduction."""
    if tag.family == "C2k":
        k = tag.param("k")
        if not isinstance(k, int) or not 3 <= k <= MAX_CYCLE_K:
            raise ParamOutOfBounds(f"C2k needs 3 <= k <= {MAX_CYCLE_K}")
        for vec in itertools.product((POS, NEG), repeat=2 * k):
            yield cycle_graph(vec)
        return
    if tag.family == "Join":
        for _, p in join_patterns(tag):
            yield from p.raw_expansions()
        return
    yield from _tag_pattern(tag).raw_expansions()


def raw_count(tag: FamilyTag) -> int:
    return sum(1 for _ in generate_raw(tag))


def generate(tag: FamilyTag, dedup: bool = True) -> list[SignedGraph]:
    """Members of a family, one per sign-isomorphism class by default.

    Order is the order of the black-edge sign vectors (``+`` first)."""
    if not dedup:
        return list(generate_raw(tag))
    if tag.family == "C2k":
        k = tag.param("k")
        if not isinstance(k, int) or not 3 <= k <= MAX_CYCLE_K:
            raise ParamOutOfBounds(f"C2k needs 3 <= k <= {MAX_CYCLE_K}")
        seen, out = set(), []
        for vec in itertools.product("+-", repeat=2 * k):
            key = _cycle_key(vec)
            if key not in seen:
                seen.add(key)
                out.append(cycle_graph(vec))
        return out
    if tag.family == "Join":
        return dedup_isomorphic(generate_raw(tag))
    return expand_pattern(_tag_pattern(tag))


def all_sum_tags(max_tail: int = 4) -> list[FamilyTag]:
    kinds = tadpole_kinds(max_tail)
    return [FamilyTag("Sum", (("type1", a[0]), ("k1", a[1]), ("type2", b[0]), ("k2", b[1])))
            for i, a in enumerate(kinds) for b in kinds[i:]]


def all_join_tags(max_tail: int = 4) -> list[FamilyTag]:
    """Fully specified join tags (side and every W1 option fixed)."""
    kinds = tadpole_kinds(max_tail)
    out = []
    for i, a in enumerate(kinds):
        for b in kinds[i:]:
            partial = FamilyTag("Join", (("type1", a[0]), ("k1", a[1]),
                                         ("type2", b[0]), ("k2", b[1])))
            out.extend(t for t, _ in join_patterns(partial))
    return out


# ---------------------------------------------------------------------------
# membership


@functools.lru_cache(maxsize=None)
def _finite_table() -> dict:
    table: dict = {}
    for fam in FINITE_FAMILIES:
        for member in generate(FamilyTag(fam)):
            table.setdefault(invariant(member), []).append((FamilyTag(fam), member))
    return table


def _match_finite(g: SignedGraph):
    for tag, member in _finite_table().get(invariant(g), ()):
        f = are_isomorphic(member, g)
        if f is not None:
            return tag, member, f
    return None


def _as_cycle(g: SignedGraph) -> Optional[list[int]]:
    if g.n < 6 or any(g.adj[v].bit_count() != 2 for v in range(g.n)):
        return None
    order = [0]
    prev, cur = -1, 0
    while True:
        nxt = [u for u in iter_bits(g.adj[cur]) if u != prev][0]
        if nxt == 0:
            break
        order.append(nxt)
        prev, cur = cur, nxt
    return order if len(order) == g.n else None


def _match_tadpole_part(g: SignedGraph, part_mask: int, end: int):
    """Match the subgraph on ``part_mask`` (containing ``end``) to a tadpole
    with that end.  Returns ``((type, k), host_images)`` or ``None``."""
    sub, fwd = induced_subgraph(g, iter_bits(part_mask), with_map=True)
    back = {v: u for u, v in fwd.items()}
    k = sub.n - 3
    for t in (1, 2):
        if k < t:
            continue
        f = match_pattern(tadpole_pattern(t, k, cap=max(k, 2)), sub, {0: fwd[end]})
        if f is not None:
            return (t, k), [back[f[i]] for i in range(sub.n)]
    return None


def _member_from_images(g: SignedGraph, images: Sequence[int]) -> SignedGraph:
    pos = {h: i for i, h in enumerate(images)}
    signs = {}
    for (u, v), s in g.signs.items():
        if u in pos and v in pos:
            a, b = pos[u], pos[v]
            signs[(min(a, b), max(a, b))] = s
    return SignedGraph(len(images), signs)


def _match_sum(g: SignedGraph):
    full = g.vertex_mask
    for x in range(g.n):
        comps = components(g, full & ~(1 << x))
        if len(comps) != 2:
            continue
        parts = []
        for c in comps:
            r = _match_tadpole_part(g, c | (1 << x), x)
            if r is None:
                break
            parts.append(r)
        if len(parts) != 2:
            continue
        if parts[1][0] < parts[0][0]:
            parts.reverse()
        (t1, img1), (t2, img2) = parts
        images = img1 + img2[1:]
        tag = FamilyTag("Sum", (("type1", t1[0]), ("k1", t1[1]), ("type2", t2[0]), ("k2", t2[1])))
        return tag, images
    return None


def _check_join(g, xmask, x, xp, t1, img1, t2, img2):
    """Verify the cross edges of a candidate join; returns the option signs
    ``(w1, w2)`` or ``None``."""
    side = lambda v: xmask >> v & 1  # noqa: E731
    same = side(x) == side(xp)
    w1_t1, w1_t2 = t1 == (1, 1), t2 == (1, 1)
    opts = ["none", "none"]
    for end, other_img, other_is_w1, slot in ((x, img2, w1_t2, 1), (xp, img1, w1_t1, 0)):
        far_w = other_img[-3]
        for v in other_img:
            if side(v) == side(end):
                if g.has_edge(end, v):
                    return None
                continue
            s = g.sign(end, v)
            if s is None:
                return None
            if other_is_w1 and not same and v == far_w:
                opts[slot] = s.value
            elif s is not POS:
                return None
    return ("same" if same else "opposite"), opts[0], opts[1]


def _match_join(g: SignedGraph):
    full = g.vertex_mask
    xmask, _ = side_masks(g)
    for x in range(g.n):
        for xp in range(x + 1, g.n):
            rest = full & ~(1 << x) & ~(1 << xp)
            comps = components(g, rest)
            if len(comps) != 2:
                continue
            for a, b in ((comps[0], comps[1]), (comps[1], comps[0])):
                r1 = _match_tadpole_part(g, a | (1 << x), x)
                if r1 is None:
                    continue
                r2 = _match_tadpole_part(g, b | (1 << xp), xp)
                if r2 is None:
                    continue
                (t1, img1), (t2, img2) = r1, r2
                res = _check_join(g, xmask, x, xp, t1, img1, t2, img2)
                if res is None:
                    continue
                sd, o1, o2 = res
                if t2 < t1:
                    t1, t2, img1, img2, o1, o2 = t2, t1, img2, img1, o2, o1
                tag = FamilyTag("Join", (("type1", t1[0]), ("k1", t1[1]), ("type2", t2[0]),
                                         ("k2", t2[1]), ("side", sd), ("w1", o1), ("w2", o2)))
                return tag, img1 + img2
    return None


def classify(g: SignedGraph) -> Optional[tuple[FamilyTag, SignedGraph, tuple]]:
    """``(tag, member, embedding)`` when ``g`` itself is a forbidden graph.

    ``member`` is the family's representative (finite families) or ``g`` read
    in the family's standard vertex order (parametric families);
    ``embedding[i]`` is the vertex of ``g`` playing member vertex ``i``.
    """
    if g.n < 4 or not is_bipartite(g):
        return None
    if len(components(g)) != 1 or has_signed_simplicial_edge(g):
        return None
    order = _as_cycle(g)
    if order is not None:
        return cycle_tag(g.n // 2), _member_from_images(g, order), tuple(order)
    found = _match_finite(g)
    if found is not None:
        tag, member, f = found
        return tag, member, tuple(f)
    for matcher in (_match_sum, _match_join):
        found = matcher(g)
        if found is not None:
            tag, images = found
            return tag, _member_from_images(g, images), tuple(images)
    return None


def membership(g: SignedGraph) -> Optional[FamilyTag]:
    """The family of ``g`` when ``g`` itself is a forbidden graph, else ``None``."""
    found = classify(g)
    return None if found is None else found[0]


# ---------------------------------------------------------------------------
# witnesses


def minimal_non_chordal_witness(g: SignedGraph) -> ForbiddenWitness:
    """Shrink a non-chordal bigraph to a vertex-minimal non-chordal induced
    subgraph and classify it.

    One pass in increasing id order is enough: once deleting ``v`` leaves a
    chordal graph, deleting it from any smaller set does too.
    """
    if recognize_chordal_signed_bigraph(g) is not None:
        raise InputIsChordal("graph is chordal; there is no forbidden subgraph")
    keep = set(range(g.n))
    for v in range(g.n):
        trial = keep - {v}
        if recognize_chordal_signed_bigraph(induced_subgraph(g, trial)) is None:
            keep = trial
    sub, fwd = induced_subgraph(g, keep, with_map=True)
    back = {new: old for old, new in fwd.items()}
    found = classify(sub)
    if found is None:
        raise InternalInconsistency(
            f"vertex-minimal non-chordal subgraph on {sorted(keep)} is not a known forbidden graph")
    tag, member, emb = found
    return ForbiddenWitness(tag, member, tuple(back[v] for v in emb))


def find_induced_member(g: SignedGraph, size_cap: int,
                        families: Optional[Iterable[str]] = None) -> Optional[ForbiddenWitness]:
    """First vertex subset (by size, then lexicographic) inducing a forbidden
    graph, optionally restricted to some families."""
    fams = None if families is None else set(families)
    adj = g.adj
    live = [v for v in range(g.n) if adj[v]]
    for size in range(4, min(size_cap, len(live)) + 1):
        for subset in itertools.combinations(live, size):
            mask = 0
            for v in subset:
                mask |= 1 << v
            if any(not adj[v] & mask for v in subset):
                continue
            sub = induced_subgraph(g, subset)
            found = classify(sub)
            if found is None:
                continue
            tag, member, emb = found
            if fams is not None and tag.family not in fams:
                continue
            return ForbiddenWitness(tag, member, tuple(subset[i] for i in emb))
    return None


def contains_induced(g: SignedGraph, members: Sequence[SignedGraph]) -> Optional[tuple]:
    """Vertex subset of ``g`` inducing a copy of one of ``members``."""
    by_size: dict = {}
    for m in members:
        by_size.setdefault(m.n, {}).setdefault(invariant(m), []).append(m)
    for size in sorted(by_size):
        bucket = by_size[size]
        for subset in itertools.combinations(range(g.n), size):
            sub = induced_subgraph(g, subset)
            for m in bucket.get(invariant(sub), ()):
                if are_isomorphic(m, sub) is not None:
                    return subset
    return None
