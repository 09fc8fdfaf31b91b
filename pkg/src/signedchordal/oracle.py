"""Brute-force oracles, exhaustive enumeration and the verification suites.

The oracles deliberately share nothing with the greedy recognizers beyond
the signed simplicial predicates, so agreement between the two is evidence
rather than tautology.
"""

from __future__ import annotations

import itertools
import json
import os
import random
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional, Sequence

from .catalog import (
    FamilyTag,
    contains_induced,
    figure_pattern,
    find_induced_member,
    generate,
    minimal_non_chordal_witness,
    w_graph_ends,
    z_roles,
)
from .elimination import (
    has_signed_simplicial_edge,
    is_chordal_bigraph,
    recognize_chordal_signed_bigraph,
    recognize_chordal_signed_graph,
    simplicial_edge_masks,
    simplicial_vertex_masks,
    verify_certificate,
)
from .errors import BudgetExceeded, InternalInconsistency, TooManyEdges, TooManyVertices
from .graph import (
    NEG,
    POS,
    SignedGraph,
    components,
    induced_subgraph,
    iter_bits,
    match_pattern,
    side_masks,
)
from .structure import (
    Adjacency,
    TadpoleDescriptor,
    all_minimal_separations,
    canonical_ordering,
    check_complete_adjacency,
    check_nonsep_properties,
    find_tadpole_at,
    is_induced_tadpole,
    is_separable,
)

DEFAULT_CODE_BUDGET = 3 ** 16
DEFAULT_MEMO_BUDGET = 2 ** 24
MAX_ORACLE_EDGES = 24
MAX_ORACLE_VERTICES = 16


def code_budget() -> int:
    """Default enumeration budget; ``SIGNEDCHORDAL_BUDGET`` overrides it."""
    raw = os.environ.get("SIGNEDCHORDAL_BUDGET")
    return int(raw) if raw else DEFAULT_CODE_BUDGET


# ---------------------------------------------------------------------------
# oracles


def oracle_chordal_bigraph(g: SignedGraph, edge_order: Optional[Sequence[int]] = None,
                           memo_budget: int = DEFAULT_MEMO_BUDGET) -> bool:
    """The ordering definition read literally: ``g`` is chordal iff it is
    edgeless or some signed simplicial edge ``e`` leaves ``g - e`` chordal.

    Memoised on the bitmask of remaining edges.  ``edge_order`` permutes the
    order in which candidate edges are tried; the answer must not depend on
    it.
    """
    side_masks(g)
    edges = sorted(g.signs)
    m = len(edges)
    if m > MAX_ORACLE_EDGES:
        raise TooManyEdges(f"{m} edges exceed the oracle bound of {MAX_ORACLE_EDGES}")
    order = list(range(m)) if edge_order is None else list(edge_order)
    ends = [(u, v, g.signs[(u, v)] is POS) for u, v in edges]
    n = g.n
    memo: dict[int, bool] = {}

    def masks(state):
        adj = [0] * n
        pos = [0] * n
        for i in iter_bits(state):
            u, v, p = ends[i]
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            if p:
                pos[u] |= 1 << v
                pos[v] |= 1 << u
        return adj, pos

    def chordal(state):
        if state == 0:
            return True
        hit = memo.get(state)
        if hit is not None:
            return hit
        if len(memo) >= memo_budget:
            raise BudgetExceeded("memo table exceeded its budget")
        adj, pos = masks(state)
        result = False
        for i in order:
            if state >> i & 1:
                u, v, _ = ends[i]
                if simplicial_edge_masks(adj, pos, u, v) and chordal(state & ~(1 << i)):
                    result = True
                    break
        memo[state] = result
        return result

    return chordal((1 << m) - 1)


def oracle_no_bad_subgraph(g: SignedGraph) -> bool:
    """True iff no induced subgraph with an edge lacks a signed simplicial edge.

    Subsets containing a vertex isolated within the subset are skipped: such
    a vertex changes no edge neighbourhood, so dropping it gives a smaller
    subset with the same verdict.
    """
    side_masks(g)
    if g.n > MAX_ORACLE_VERTICES:
        raise TooManyVertices(f"{g.n} vertices exceed the oracle bound of {MAX_ORACLE_VERTICES}")
    adj, pos = g.adj, g.pos
    n = g.n
    for mask in range(3, 1 << n):
        if mask & (mask - 1) == 0:
            continue
        sub_adj = [0] * n
        ok = True
        for v in iter_bits(mask):
            a = adj[v] & mask
            if not a:
                ok = False
                break
            sub_adj[v] = a
        if not ok:
            continue
        sub_pos = [pos[v] & mask for v in range(n)]
        found = False
        for u in iter_bits(mask):
            for v in iter_bits(sub_adj[u]):
                if u < v and simplicial_edge_masks(sub_adj, sub_pos, u, v):
                    found = True
                    break
            if found:
                break
        if not found:
            return False
    return True


def oracle_chordal_signed_graph(g: SignedGraph) -> bool:
    """Vertex-deletion recursion: chordal iff empty or some signed simplicial
    vertex ``v`` leaves ``g - v`` chordal.  Memoised on the vertex mask."""
    n = g.n
    if n > MAX_ORACLE_VERTICES:
        raise TooManyVertices(f"{n} vertices exceed the oracle bound of {MAX_ORACLE_VERTICES}")
    memo: dict[int, bool] = {}

    def chordal(mask):
        if mask == 0:
            return True
        hit = memo.get(mask)
        if hit is not None:
            return hit
        adj = [a & mask for a in g.adj]
        pos = [p & mask for p in g.pos]
        result = any(simplicial_vertex_masks(adj, pos, v) and chordal(mask & ~(1 << v))
                     for v in iter_bits(mask))
        memo[mask] = result
        return result

    return chordal(g.vertex_mask)


# ---------------------------------------------------------------------------
# enumeration


def graph_from_code(a: int, b: int, digits: Sequence[int]) -> SignedGraph:
    """X = ``0..a-1``, Y = ``a..a+b-1``; digit ``i*b + j`` of the code gives the
    pair ``(i, a+j)``: 0 absent, 1 positive, 2 negative."""
    signs = {}
    for idx, d in enumerate(digits):
        if d:
            i, j = divmod(idx, b)
            signs[(i, a + j)] = POS if d == 1 else NEG
    return SignedGraph(a + b, signs)


def code_digits(code: int, length: int) -> tuple:
    """Base-3 digits of ``code``, least significant first."""
    out = []
    for _ in range(length):
        code, d = divmod(code, 3)
        out.append(d)
    return tuple(out)


def _canonical_matrices(a: int, b: int, alphabet: int) -> Iterator[tuple]:
    """Row-major matrices with non-decreasing rows and columns (as base-
    ``alphabet`` words read from the first entry).  Every class under row and
    column permutations has at least one such representative: the
    lexicographically least flattening of the class is one."""
    rows = list(itertools.product(range(alphabet), repeat=b))
    for chosen in itertools.combinations_with_replacement(rows, a):
        ok = True
        for j in range(b - 1):
            if tuple(r[j] for r in chosen) > tuple(r[j + 1] for r in chosen):
                ok = False
                break
        if ok:
            yield tuple(itertools.chain.from_iterable(chosen))


def iter_codes(a: int, b: int, modulus: int = 1, residue: int = 0,
               budget: Optional[int] = None, canonical: bool = False,
               alphabet: int = 3) -> Iterator[tuple]:
    """Digit tuples of every (or every canonical) matrix, in a fixed order.

    Labeled mode visits codes ``0 .. alphabet^(ab) - 1`` in increasing order
    and keeps those congruent to ``residue``; canonical mode partitions by
    the position in its own sequence.
    """
    length = a * b
    total = alphabet ** length
    limit = code_budget() if budget is None else budget
    if total > limit:
        raise BudgetExceeded(f"{alphabet}^{length} codes exceed the budget of {limit}")
    if canonical:
        for idx, digits in enumerate(_canonical_matrices(a, b, alphabet)):
            if idx % modulus == residue:
                yield digits
        return
    # product() runs its last slot fastest, i.e. it counts upward in the
    # reversed digit order
    for code, word in enumerate(itertools.product(range(alphabet), repeat=length)):
        if code % modulus == residue:
            yield word[::-1]


def enumerate_signed_bigraphs(a: int, b: int, visitor: Optional[Callable] = None,
                              modulus: int = 1, residue: int = 0,
                              budget: Optional[int] = None, canonical: bool = False) -> int:
    """Call ``visitor(graph)`` on every signed bigraph with parts of sizes
    ``a`` and ``b``; returns the number visited."""
    count = 0
    for digits in iter_codes(a, b, modulus, residue, budget, canonical):
        count += 1
        if visitor is not None:
            visitor(graph_from_code(a, b, digits))
    return count


def iter_bigraphs(max_n: int, min_n: int = 1, canonical: bool = False, modulus: int = 1,
                  residue: int = 0, budget: Optional[int] = None, signed: bool = True,
                  max_edges: Optional[int] = None) -> Iterator[SignedGraph]:
    """Every bigraph on ``min_n..max_n`` vertices over every part split.

    Canonical mode only uses splits with ``a <= b`` (the other half is the
    mirror image) and the canonical matrix filter.  Unsigned mode uses only
    positive edges.
    """
    alphabet = 3 if signed else 2
    idx = 0
    for n in range(min_n, max_n + 1):
        splits = range(0, n // 2 + 1) if canonical else range(0, n + 1)
        for a in splits:
            b = n - a
            # partition after the filter so canonical mode balances well
            for digits in iter_codes(a, b, 1, 0, budget, canonical, alphabet):
                if max_edges is not None and sum(1 for d in digits if d) > max_edges:
                    continue
                if idx % modulus == residue:
                    yield graph_from_code(a, b, digits)
                idx += 1


def iter_signed_graphs(n: int, modulus: int = 1, residue: int = 0) -> Iterator[SignedGraph]:
    """Every signed graph on ``n`` labeled vertices (each pair absent/+/-)."""
    pairs = list(itertools.combinations(range(n), 2))
    for code in range(residue, 3 ** len(pairs), modulus):
        signs = {}
        c = code
        for p in pairs:
            c, d = divmod(c, 3)
            if d:
                signs[p] = POS if d == 1 else NEG
        yield SignedGraph(n, signs)


def sample_bigraph(rng: random.Random, sizes: Sequence[int] = (7, 8)) -> SignedGraph:
    """Uniform size, uniform split ``1 <= a < n``, each pair uniform over
    absent / positive / negative."""
    n = rng.choice(list(sizes))
    a = rng.randint(1, n - 1)
    b = n - a
    return graph_from_code(a, b, [rng.randrange(3) for _ in range(a * b)])


def complete_signings(a: int, b: int) -> Iterator[SignedGraph]:
    for bits in itertools.product((1, 2), repeat=a * b):
        yield graph_from_code(a, b, bits)


# ---------------------------------------------------------------------------
# reports


@dataclass
class VerificationReport:
    tag: str
    bounds: dict
    enumerated: int = 0
    examined: int = 0
    chordal: int = 0
    non_chordal: int = 0
    families: Counter = field(default_factory=Counter)
    notes: Counter = field(default_factory=Counter)
    discrepancies: list = field(default_factory=list)
    discrepancy_count: int = 0
    elapsed: float = 0.0
    max_discrepancies: int = 50

    @property
    def ok(self) -> bool:
        return self.discrepancy_count == 0 and self.chordal + self.non_chordal == self.examined

    def record(self, chordal: bool) -> None:
        self.examined += 1
        if chordal:
            self.chordal += 1
        else:
            self.non_chordal += 1

    def fail(self, g: SignedGraph, reason: str) -> None:
        self.discrepancy_count += 1
        if len(self.discrepancies) < self.max_discrepancies:
            self.discrepancies.append({"graph": _edge_text(g), "n": g.n, "reason": reason})

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        out = VerificationReport(self.tag, self.bounds)
        for name in ("enumerated", "examined", "chordal", "non_chordal", "discrepancy_count"):
            setattr(out, name, getattr(self, name) + getattr(other, name))
        out.families = self.families + other.families
        out.notes = self.notes + other.notes
        out.discrepancies = self.discrepancies + other.discrepancies
        out.elapsed = max(self.elapsed, other.elapsed)
        return out

    def to_dict(self) -> dict:
        return {
            "tag": self.tag,
            "bounds": self.bounds,
            "enumerated": self.enumerated,
            "examined": self.examined,
            "chordal": self.chordal,
            "non_chordal": self.non_chordal,
            "families": dict(sorted(self.families.items())),
            "notes": dict(sorted(self.notes.items())),
            "discrepancy_count": self.discrepancy_count,
            "discrepancies": self.discrepancies,
            "elapsed_seconds": round(self.elapsed, 3),
            "ok": self.ok,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_text(self) -> str:
        lines = [
            f"suite {self.tag}",
            f"bounds {json.dumps(self.bounds, sort_keys=True)}",
            f"enumerated {self.enumerated}",
            f"examined {self.examined}",
            f"chordal {self.chordal}",
            f"non_chordal {self.non_chordal}",
        ]
        for fam, cnt in sorted(self.families.items()):
            lines.append(f"family {fam} {cnt}")
        for key, cnt in sorted(self.notes.items()):
            lines.append(f"note {key} {cnt}")
        lines.append(f"discrepancies {self.discrepancy_count}")
        for d in self.discrepancies:
            lines.append(f"discrepancy {d['reason']} :: {d['graph']}")
        lines.append(f"elapsed {self.elapsed:.2f}s")
        lines.append("result " + ("ok" if self.ok else "FAIL"))
        return "\n".join(lines)


def _edge_text(g: SignedGraph) -> str:
    return " ".join(f"{u}{s.value}{v}" for u, v, s in g.edges())


# ---------------------------------------------------------------------------
# shared predicates


@dataclass(frozen=True)
class _Params:
    modulus: int = 1
    residue: int = 0
    canonical: bool = True


def _members(*families: str) -> list[SignedGraph]:
    out = []
    for fam in families:
        if fam.startswith("MinimalComplete"):
            out.extend(generate(FamilyTag("MinimalComplete", (("i", int(fam[-1])),))))
        else:
            out.extend(generate(FamilyTag(fam)))
    return out


def _mask_has_simplicial_edge(adj, pos, mask: int) -> bool:
    sub_adj = {v: adj[v] & mask for v in iter_bits(mask)}
    sub_pos = {v: pos[v] & mask for v in sub_adj}
    for u, au in sub_adj.items():
        for v in iter_bits(au):
            if u < v:
                a_side = au & ~(1 << v)
                if all(sub_pos[b] & a_side == a_side for b in iter_bits(sub_adj[v] & ~(1 << u))):
                    return True
    return False


def _contains_member_without_simplicial(g: SignedGraph, members: Sequence[SignedGraph]) -> bool:
    """Induced copy of some member.  Subsets with a vertex lacking neighbours
    inside, or with a signed simplicial edge, are skipped: no member has
    either (checked separately)."""
    sizes = sorted({m.n for m in members})
    by_size = {s: [m for m in members if m.n == s] for s in sizes}
    adj, pos = g.adj, g.pos
    for s in sizes:
        for subset in itertools.combinations(range(g.n), s):
            mask = 0
            for v in subset:
                mask |= 1 << v
            if any(not adj[v] & mask for v in subset):
                continue
            if _mask_has_simplicial_edge(adj, pos, mask):
                continue
            if contains_induced(induced_subgraph(g, subset), by_size[s]) is not None:
                return True
    return False


# ---------------------------------------------------------------------------
# theorem suites


def _suite_comp(report, bounds, which):
    if which == "Comp":
        members = _members("F1", "F2", "F3", "F4")
    else:
        members = _members(*(f"MinimalComplete{i}" for i in range(1, 6)))
    for a, b in bounds["pairs"]:
        for idx, g in enumerate(complete_signings(a, b)):
            if idx % bounds["_modulus"] != bounds["_residue"]:
                continue
            report.enumerated += 1
            truth = oracle_chordal_bigraph(g)
            report.record(truth)
            free = contains_induced(g, members) is None
            if truth != free:
                report.fail(g, f"oracle chordal={truth} but member-free={free}")
            if which == "Comp":
                greedy = recognize_chordal_signed_bigraph(g) is not None
                if greedy != truth:
                    report.fail(g, "greedy recognizer disagrees with oracle")


def _suite_nonsep(report, bounds, p: _Params):
    families = ("F1", "F2", "F3", "F4", "F5", "F6")
    members = _members(*families)
    for g in iter_bigraphs(bounds["max_n"], canonical=p.canonical, modulus=p.modulus,
                           residue=p.residue):
        report.enumerated += 1
        if is_separable(g) is not None:
            continue
        truth = oracle_chordal_bigraph(g)
        report.record(truth)
        free = not _contains_member_without_simplicial(g, members)
        if truth != free:
            report.fail(g, f"oracle chordal={truth} but F1-F6-free={free}")


def _check_main(report, g: SignedGraph) -> None:
    report.enumerated += 1
    cert = recognize_chordal_signed_bigraph(g)
    greedy = cert is not None
    truth = oracle_chordal_bigraph(g)
    subsets = oracle_no_bad_subgraph(g)
    report.record(truth)
    if not (greedy == truth == subsets):
        report.fail(g, f"greedy={greedy} oracle={truth} subsets={subsets}")
        return
    if greedy:
        if not verify_certificate(g, cert):
            report.fail(g, "certificate failed replay")
        return
    try:
        w = minimal_non_chordal_witness(g)
    except InternalInconsistency as exc:
        report.fail(g, f"InternalInconsistency: {exc}")
        return
    report.families[w.tag.family] += 1
    if not w.is_valid(g):
        report.fail(g, "witness embedding is not an induced copy")
    elif recognize_chordal_signed_bigraph(w.member) is not None:
        report.fail(g, "witness member is chordal")


def _suite_main(report, bounds, p: _Params):
    if "max_n" in bounds:
        for g in iter_bigraphs(bounds["max_n"], canonical=bounds.get("canonical", False),
                               modulus=p.modulus, residue=p.residue):
            _check_main(report, g)
    if bounds.get("sample"):
        rng = random.Random(bounds.get("seed", 0))
        sizes = bounds.get("sizes", (7, 8))
        for i in range(bounds["sample"]):
            g = sample_bigraph(rng, sizes)
            if i % p.modulus == p.residue:
                _check_main(report, g)


def _suite_graph_variant(report, bounds, p: _Params):
    for n in range(0, bounds["max_n"] + 1):
        for g in iter_signed_graphs(n, p.modulus, p.residue):
            report.enumerated += 1
            cert = recognize_chordal_signed_graph(g)
            truth = oracle_chordal_signed_graph(g)
            report.record(truth)
            if (cert is not None) != truth:
                report.fail(g, f"greedy={cert is not None} oracle={truth}")
            elif cert is not None and not verify_certificate(g, cert):
                report.fail(g, "vertex certificate failed replay")


# ---------------------------------------------------------------------------
# lemma suites


def _suite_l21(report, bounds, p: _Params):
    for a, b in bounds["pairs"]:
        for idx, g in enumerate(complete_signings(a, b)):
            if idx % p.modulus != p.residue:
                continue
            report.enumerated += 1
            truth = oracle_chordal_bigraph(g)
            report.record(truth)
            if has_signed_simplicial_edge(g) != truth:
                report.fail(g, f"has simplicial edge={not truth} but chordal={truth}")


def _suite_l32(report, bounds, p: _Params):
    for g in iter_bigraphs(bounds["max_n"], canonical=p.canonical, modulus=p.modulus,
                           residue=p.residue, signed=False):
        report.enumerated += 1
        if is_separable(g) is not None:
            continue
        if not is_chordal_bigraph(g):
            report.fail(g, "non-separable bigraph is not a chordal bigraph")
        if any(not g.adj[v] for v in range(g.n)) or g.n == 0:
            continue
        report.record(True)
        order = canonical_ordering(g)
        rep = check_nonsep_properties(g, order)
        for clause, detail in rep.violations:
            report.fail(g, f"clause {clause}: {detail}")


def _orientations(g: SignedGraph):
    """Each part may play X; every minimum-degree vertex of Y may be y1."""
    order = canonical_ordering(g)
    for xs, ys in ((order.x_order, order.y_order), (order.y_order, order.x_order)):
        low = min(g.adj[y].bit_count() for y in ys)
        for y1 in ys:
            if g.adj[y1].bit_count() == low:
                yield set(xs), y1


def _z_lemma(report, bounds, p: _Params, which: int):
    pattern = figure_pattern(f"Z{which}")
    roles = z_roles(which)
    target = ("F2", "F3", "F4", "F5") if which == 1 else ("F3", "F4", "F5", "F6")
    members = _members(*target)
    for g in iter_bigraphs(bounds["max_n"], canonical=p.canonical, modulus=p.modulus,
                           residue=p.residue):
        report.enumerated += 1
        if g.n < pattern.n or any(not g.adj[v] for v in range(g.n)):
            continue
        if is_separable(g) is not None or has_signed_simplicial_edge(g):
            continue
        applies = False
        for xs, y1 in _orientations(g):
            n_y1 = g.adj[y1]
            for subset in itertools.combinations(range(g.n), pattern.n):
                sub, fwd = induced_subgraph(g, subset, with_map=True)
                for pins in _role_pins(subset, roles, xs, n_y1):
                    if match_pattern(pattern, sub, {r: fwd[h] for r, h in pins.items()}):
                        applies = True
                        break
                if applies:
                    break
            if applies:
                break
        if not applies:
            continue
        report.record(False)
        if not _contains_member_without_simplicial(g, members):
            report.fail(g, f"Z{which} hypothesis holds but no induced {'/'.join(target)} member")


def _role_pins(subset, roles, xs, n_y1):
    """Assignments of the ``x_i``/``x_j`` roles to subset vertices in N(y1)."""
    cands = [v for v in subset if v in xs and n_y1 >> v & 1]
    for xi, xj in itertools.permutations(cands, 2):
        yield {roles["x_i"]: xi, roles["x_j"]: xj}


def _has_induced_long_cycle_or_d(g: SignedGraph, d_pattern) -> bool:
    from .elimination import has_induced_long_cycle

    if has_induced_long_cycle(g, 6) is not None:
        return True
    for subset in itertools.combinations(range(g.n), 6):
        if match_pattern(d_pattern, induced_subgraph(g, subset)) is not None:
            return True
    return False


def _separable_graphs(bounds, p: _Params, max_edges=None):
    for g in iter_bigraphs(bounds["max_n"], canonical=p.canonical, modulus=p.modulus,
                           residue=p.residue, max_edges=max_edges):
        if any(not g.adj[v] for v in range(g.n)):
            continue  # isolated vertices never enter a separation
        if is_separable(g) is None:
            continue
        yield g


def _suite_l42(report, bounds, p: _Params):
    d_pattern = figure_pattern("D")
    for g in _separable_graphs(bounds, p):
        report.enumerated += 1
        if _has_induced_long_cycle_or_d(g, d_pattern):
            continue
        report.record(oracle_chordal_bigraph(g))
        xmask, _ = side_masks(g)
        for cert in all_minimal_separations(g):
            s = sorted(cert.separator)
            h1 = sum(1 << v for v in cert.h1)
            h2 = sum(1 << v for v in cert.h2)
            for i, u in enumerate(s):
                for v in s[i + 1:]:
                    if (xmask >> u & 1) != (xmask >> v & 1):
                        if not g.pos[u] >> v & 1:
                            report.fail(g, f"S={s}: {u}{v} not a positive edge")
                    elif not (g.adj[u] & g.adj[v] & h1 and g.adj[u] & g.adj[v] & h2):
                        report.fail(g, f"S={s}: {u},{v} lack a common neighbour on some side")


def _suite_l46(report, bounds, p: _Params):
    for g in _separable_graphs(bounds, p, bounds.get("max_edges")):
        report.enumerated += 1
        if recognize_chordal_signed_bigraph(g) is None:
            continue
        report.record(True)
        simp = [e for e in g.signs if simplicial_edge_masks(g.adj, g.pos, *e)]
        for cert in all_minimal_separations(g):
            if not any((u in cert.h1 and v in cert.h1) or (u in cert.h2 and v in cert.h2)
                       for u, v in simp):
                report.fail(g, f"S={sorted(cert.separator)}: neither side holds a simplicial edge")


def _suite_l48(report, bounds, p: _Params):
    for g in _separable_graphs(bounds, p):
        report.enumerated += 1
        if len(components(g)) != 1:
            continue
        if recognize_chordal_signed_bigraph(g) is None:
            continue
        simp = sorted(e for e in g.signs if simplicial_edge_masks(g.adj, g.pos, *e))
        if any(_induce_2k2(g, e, f) for e, f in itertools.combinations(simp, 2)):
            continue
        report.record(True)
        inside = set()
        for cert in all_minimal_separations(g):
            for u, v in simp:
                if {u, v} <= cert.h1 or {u, v} <= cert.h2:
                    inside.add((u, v))
        served = 0
        for u, v in simp:
            t = find_tadpole_at(g, u) or find_tadpole_at(g, v)
            if t is None:
                report.fail(g, f"no tadpole ends at {u} or {v}")
                if (u, v) in inside:
                    report.notes["inside_component_without_tadpole"] += 1
            elif not is_induced_tadpole(g, t):
                report.fail(g, f"tadpole at {u}-{v} is not induced")
            else:
                served += 1
        # the weaker readings: some simplicial edge is served, and every
        # edge lying inside a component of a minimal separation is served
        report.notes["inside_component_edges"] += len(inside)
        if not served:
            report.notes["graphs_without_any_tadpole_edge"] += 1


def _induce_2k2(g, e, f) -> bool:
    closed = g.adj[e[0]] | g.adj[e[1]] | (1 << e[0]) | (1 << e[1])
    return not (closed >> f[0] & 1 or closed >> f[1] & 1)


def _suite_l44(report, bounds, p: _Params):
    patterns = [(i, figure_pattern(f"W{i}"), w_graph_ends(i)) for i in range(1, 7)]
    for g in iter_bigraphs(bounds["max_n"], canonical=p.canonical, modulus=p.modulus,
                           residue=p.residue):
        report.enumerated += 1
        if g.n < 4 or is_separable(g) is not None:
            continue
        if recognize_chordal_signed_bigraph(g) is None:
            continue
        xmask, ymask = side_masks(g)
        simp = {e for e in g.signs if simplicial_edge_masks(g.adj, g.pos, *e)}
        full = g.vertex_mask
        for s in range(1, full):
            rest = full & ~s
            if not _positive_biclique_mask(g, s, xmask):
                continue
            if any(not g.adj[v] & rest for v in iter_bits(s)):
                continue
            comps = components(g, rest)
            if len(comps) != 1:
                continue
            rest_edges = [(u, v) for (u, v) in g.signs if rest >> u & 1 and rest >> v & 1]
            if not rest_edges or any(e in simp for e in rest_edges):
                continue
            report.record(True)
            if not _has_w_member(g, s, patterns):
                report.fail(g, f"S={list(iter_bits(s))}: no induced W member anchored in S")


def _positive_biclique_mask(g, s, xmask) -> bool:
    xs = s & xmask
    ys = s & ~xmask
    return all(g.pos[x] & ys == ys for x in iter_bits(xs))


def _has_w_member(g, s, patterns) -> bool:
    for i, pattern, ends in patterns:
        for subset in itertools.combinations(range(g.n), pattern.n):
            inside = [v for v in subset if s >> v & 1]
            if len(inside) != len(ends):
                continue
            sub, fwd = induced_subgraph(g, subset, with_map=True)
            for perm in itertools.permutations(inside):
                pins = {ends[j]: fwd[perm[j]] for j in range(len(ends))}
                if match_pattern(pattern, sub, pins) is not None:
                    return True
    return False


def _induced_tadpoles(g: SignedGraph, cap_k: int) -> Iterator[TadpoleDescriptor]:
    from .structure import _induced_paths

    for v in range(g.n):
        for k in range(1, min(cap_k, g.n - 3) + 1):
            for tail in _induced_paths(g, v, k):
                xk = tail[-1]
                tmask = sum(1 << t for t in tail)
                before = tmask & ~(1 << xk)
                heads = [h for h in iter_bits(g.adj[xk] & ~g.pos[xk] & ~tmask)
                         if not g.adj[h] & before]
                for y, z in itertools.combinations(heads, 2):
                    for w in iter_bits(g.adj[y] & g.adj[z] & ~tmask):
                        for t in (1, 2):
                            d = TadpoleDescriptor(t, tuple(tail), w, y, z)
                            if is_induced_tadpole(g, d):
                                yield d


def _suite_l410(report, bounds, p: _Params):
    for g in iter_bigraphs(bounds["max_n"], canonical=p.canonical, modulus=p.modulus,
                           residue=p.residue):
        report.enumerated += 1
        if g.n < 5 or recognize_chordal_signed_bigraph(g) is None:
            continue
        tadpoles = list(_induced_tadpoles(g, g.n))
        if not tadpoles:
            continue
        report.record(True)
        for t in tadpoles:
            tv = set(t.vertices)
            tmask = sum(1 << v for v in tv)
            x = t.end
            heads = (1 << t.w) | (1 << t.y) | (1 << t.z)
            for xp in range(g.n):
                if xp in tv or not g.adj[xp] & heads:
                    continue
                linked = g.has_edge(x, xp) or any(
                    g.adj[u] & tmask == 1 << x
                    for u in iter_bits(g.adj[x] & g.adj[xp] & ~tmask))
                if not linked:
                    continue
                cls = check_complete_adjacency(g, xp, t)
                if cls.kind is Adjacency.NOT_COMPLETE or not cls.exceptions_allowed:
                    report.fail(g, f"{xp} against tadpole {t}: {cls.kind.value} {cls.exceptions}")


def _suite_cor52(report, bounds, p: _Params):
    for g in iter_bigraphs(bounds["max_n"], canonical=bounds.get("canonical", False),
                           modulus=p.modulus, residue=p.residue):
        report.enumerated += 1
        truth = oracle_chordal_bigraph(g)
        report.record(truth)
        if oracle_no_bad_subgraph(g) != truth:
            report.fail(g, f"oracle chordal={truth} disagrees with the subset predicate")


# ---------------------------------------------------------------------------
# dispatch


THEOREM_SUITES = {
    "Comp": {"pairs": [(2, 2), (2, 3), (3, 3), (3, 4)]},
    "MinF": {"pairs": [(2, 2), (2, 3), (3, 3), (3, 4)]},
    "NonSep": {"max_n": 7},
    "Main": {"max_n": 6},
    "GraphVariant": {"max_n": 5},
}

LEMMA_SUITES = {
    "L2.1": {"pairs": [(a, b) for a in range(1, 4) for b in range(1, 4)]},
    "L3.2": {"max_n": 7},
    "L3.4": {"max_n": 7},
    "L3.5": {"max_n": 7},
    "L4.2": {"max_n": 8},
    "L4.4": {"max_n": 6},
    "L4.6": {"max_n": 8, "max_edges": 12},
    "L4.8": {"max_n": 8},
    "L4.10": {"max_n": 7},
    "Cor5.2": {"max_n": 6},
}

_RUNNERS = {
    "NonSep": _suite_nonsep,
    "Main": _suite_main,
    "GraphVariant": _suite_graph_variant,
    "L2.1": _suite_l21,
    "L3.2": _suite_l32,
    "L3.4": lambda r, b, p: _z_lemma(r, b, p, 1),
    "L3.5": lambda r, b, p: _z_lemma(r, b, p, 2),
    "L4.2": _suite_l42,
    "L4.4": _suite_l44,
    "L4.6": _suite_l46,
    "L4.8": _suite_l48,
    "L4.10": _suite_l410,
    "Cor5.2": _suite_cor52,
}

SUITE_ALIASES = {name.lower(): name for name in list(THEOREM_SUITES) + list(LEMMA_SUITES)}


def _check_budget(tag: str, bounds: dict) -> None:
    limit = code_budget()
    for a, b in bounds.get("pairs", ()):
        if 2 ** (a * b) > limit:
            raise BudgetExceeded(f"{tag}: 2^{a * b} signings exceed the budget of {limit}")
    n = bounds.get("max_n")
    if n is not None:
        a = n // 2
        alphabet = 2 if tag == "L3.2" else 3
        if tag == "GraphVariant":
            if 3 ** (n * (n - 1) // 2) > limit:
                raise BudgetExceeded(f"{tag}: 3^{n * (n - 1) // 2} graphs exceed the budget")
        elif alphabet ** (a * (n - a)) > limit:
            raise BudgetExceeded(f"{tag}: {alphabet}^{a * (n - a)} codes exceed the budget of {limit}")


def _run_part(tag: str, bounds: dict, modulus: int, residue: int) -> VerificationReport:
    start = time.perf_counter()
    report = VerificationReport(tag, _public(bounds))
    params = _Params(modulus, residue, bounds.get("canonical", True))
    if tag in ("Comp", "MinF"):
        _suite_comp(report, dict(bounds, _modulus=modulus, _residue=residue), tag)
    else:
        _RUNNERS[tag](report, bounds, params)
    report.elapsed = time.perf_counter() - start
    return report


def _public(bounds: dict) -> dict:
    return {k: (list(map(list, v)) if k == "pairs" else v) for k, v in bounds.items()}


def _run(tag: str, defaults: dict, bounds: Optional[dict], workers: int) -> VerificationReport:
    full = dict(defaults)
    if bounds:
        full.update(bounds)
    _check_budget(tag, full)
    start = time.perf_counter()
    if workers <= 1:
        report = _run_part(tag, full, 1, 0)
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_run_part, [tag] * workers, [full] * workers,
                                  [workers] * workers, range(workers)))
        report = parts[0]
        for part in parts[1:]:
            report = report.merge(part)
    report.elapsed = time.perf_counter() - start
    return report


def verify_theorem(tag: str, bounds: Optional[dict] = None, workers: int = 1) -> VerificationReport:
    """Exhaustive check of one characterization theorem.

    ``Comp``/``MinF`` take ``pairs`` of part sizes; ``NonSep``, ``Main`` and
    ``GraphVariant`` take ``max_n``.  ``Main`` also accepts ``sample``,
    ``seed`` and ``sizes`` for a random sample.  ``canonical`` switches the
    canonical matrix filter on (default on, except ``Main``).
    """
    tag = SUITE_ALIASES.get(tag.lower(), tag)
    if tag not in THEOREM_SUITES:
        raise KeyError(f"unknown theorem suite {tag!r}")
    defaults = dict(THEOREM_SUITES[tag])
    if tag == "Main":
        defaults["canonical"] = False
    if bounds and tag == "Main" and "sample" in bounds and "max_n" not in bounds:
        defaults.pop("max_n")
    return _run(tag, defaults, bounds, workers)


def verify_lemma(tag: str, bounds: Optional[dict] = None, workers: int = 1) -> VerificationReport:
    """Exhaustive check of one structural lemma on small graphs."""
    tag = SUITE_ALIASES.get(tag.lower(), tag)
    if tag not in LEMMA_SUITES:
        raise KeyError(f"unknown lemma suite {tag!r}")
    defaults = dict(LEMMA_SUITES[tag])
    if tag == "Cor5.2":
        defaults["canonical"] = False
    return _run(tag, defaults, bounds, workers)


def verify(tag: str, bounds: Optional[dict] = None, workers: int = 1) -> VerificationReport:
    name = SUITE_ALIASES.get(tag.lower(), tag)
    if name in THEOREM_SUITES:
        return verify_theorem(name, bounds, workers)
    return verify_lemma(name, bounds, workers)
