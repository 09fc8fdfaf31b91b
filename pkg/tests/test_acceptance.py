"""Acceptance checks, one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v`` (about ten minutes on one
core) or ``python tests/test_acceptance.py``.
"""

import itertools
import os
import sys
import time

import pytest

from signedchordal import (
    Digraph,
    FamilyTag,
    generate,
    induced_subgraph,
    recognize_chordal_signed_bigraph,
)
from signedchordal.catalog import (
    FINITE_FAMILIES,
    all_join_tags,
    all_sum_tags,
    cycle_tag,
    generate_raw,
)
from signedchordal.cli import main
from signedchordal.elimination import (
    digraph_to_signed_graph,
    has_signed_simplicial_edge,
    is_strict_chordal_digraph,
)
from signedchordal.io import format_graph, graph_to_json, parse_graph
from signedchordal.oracle import (
    complete_signings,
    iter_bigraphs,
    oracle_chordal_bigraph,
    verify_lemma,
    verify_theorem,
)

from conftest import cycle

RESULTS = {}
GOLDEN = os.path.join(os.path.dirname(__file__), "golden")


def record(number, title, passed, detail, elapsed, limit):
    within = elapsed <= limit
    ok = passed and within
    line = (f"criterion {number} [{title}]: {'PASS' if ok else 'FAIL'} "
            f"({detail}; {elapsed:.1f}s of {limit}s)")
    RESULTS[number] = line
    print("\n" + line, file=sys.__stdout__, flush=True)
    return ok


def _suite_detail(reports):
    return ", ".join(f"{r.tag} examined={r.examined} discrepancies={r.discrepancy_count}"
                     for r in reports)


def test_criterion_1_catalog_soundness():
    start = time.perf_counter()
    tags = [FamilyTag(f) for f in FINITE_FAMILIES]
    tags += [FamilyTag("MinimalComplete", (("i", i),)) for i in range(1, 6)]
    tags += [cycle_tag(k) for k in range(3, 7)]
    tags += all_sum_tags(4) + all_join_tags(4)
    members = bad = 0
    for tag in tags:
        for g in generate_raw(tag):
            members += 1
            if has_signed_simplicial_edge(g) or recognize_chordal_signed_bigraph(g) is not None:
                bad += 1
    elapsed = time.perf_counter() - start
    ok = record(1, "catalog soundness", bad == 0 and members > 0,
                f"{members} members, {bad} exceptions", elapsed, 60)
    assert ok


def test_criterion_2_complete_bigraphs():
    start = time.perf_counter()
    pairs = {"pairs": [(2, 2), (2, 3), (3, 3), (3, 4)]}
    reports = [verify_theorem("Comp", pairs), verify_theorem("MinF", pairs)]
    elapsed = time.perf_counter() - start
    counts = {r.examined for r in reports}
    ok = record(2, "complete bigraphs", all(r.ok for r in reports) and counts == {16 + 64 + 512 + 4096},
                _suite_detail(reports), elapsed, 60)
    assert ok


def test_criterion_3_nonseparable():
    start = time.perf_counter()
    report = verify_theorem("NonSep", {"max_n": 7, "canonical": False})
    elapsed = time.perf_counter() - start
    ok = record(3, "non-separable bigraphs <= 7 vertices", report.ok and report.examined > 0,
                _suite_detail([report]), elapsed, 600)
    assert ok


def test_criterion_4_main_theorem():
    start = time.perf_counter()
    exhaustive = verify_theorem("Main", {"max_n": 6, "canonical": False})
    mid = time.perf_counter()
    sample = verify_theorem("Main", {"sample": 100_000, "seed": 1, "sizes": [7, 8]})
    end = time.perf_counter()
    ok_ex = exhaustive.ok and exhaustive.examined == 35079 and mid - start <= 900
    ok_sa = sample.ok and sample.examined == 100_000 and end - mid <= 600
    detail = (f"{_suite_detail([exhaustive])} in {mid - start:.1f}s/900s; "
              f"sample examined={sample.examined} discrepancies={sample.discrepancy_count} "
              f"in {end - mid:.1f}s/600s")
    ok = record(4, "three-way equivalence and witnesses", ok_ex and ok_sa, detail,
                end - start, 1500)
    assert ok


def test_criterion_5_minimality():
    start = time.perf_counter()
    groups = {f"C{2 * k}": list(generate_raw(cycle_tag(k))) for k in range(3, 7)}
    groups["D"] = list(generate_raw(FamilyTag("D")))
    for i in range(1, 6):
        groups[f"MinimalComplete{i}"] = generate(FamilyTag("MinimalComplete", (("i", i),)))
    failures = {}
    for name, graphs in groups.items():
        for g in graphs:
            for v in range(g.n):
                sub = induced_subgraph(g, [u for u in range(g.n) if u != v])
                if not oracle_chordal_bigraph(sub):
                    failures[name] = failures.get(name, 0) + 1
                    break
    elapsed = time.perf_counter() - start
    total = sum(len(gs) for gs in groups.values())
    detail = f"{total} graphs, non-minimal: " + (
        ", ".join(f"{k}={v}/{len(groups[k])}" for k, v in failures.items()) or "none")
    ok = record(5, "minimality", not failures, detail, elapsed, 60)
    assert ok, detail


def test_criterion_6_lemma_suites():
    start = time.perf_counter()
    reports = []
    for tag, bounds in [("L2.1", None), ("L3.2", {"max_n": 7, "canonical": False}),
                        ("L4.2", {"max_n": 8}), ("L4.6", {"max_n": 8, "max_edges": 12}),
                        ("L4.8", {"max_n": 8}), ("Cor5.2", {"max_n": 6})]:
        reports.append(verify_lemma(tag, bounds))
    elapsed = time.perf_counter() - start
    failing = [r.tag for r in reports if not r.ok]
    detail = _suite_detail(reports) + (f"; failing: {', '.join(failing)}" if failing else "")
    ok = record(6, "lemma suites", not failing, detail, elapsed, 1200)
    assert ok, detail


def test_criterion_7_graph_variant():
    start = time.perf_counter()
    report = verify_theorem("GraphVariant", {"max_n": 5})
    dc4 = Digraph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    sym = Digraph(4, [(u, v) for u in range(4) for v in range(4) if u != v])
    digraph_ok = (digraph_to_signed_graph(dc4) == cycle(4, "-")
                  and not is_strict_chordal_digraph(dc4)
                  and all(s.value == "+" for _, _, s in digraph_to_signed_graph(sym).edges())
                  and is_strict_chordal_digraph(sym))
    elapsed = time.perf_counter() - start
    ok = record(7, "signed graph variant", report.ok and digraph_ok and report.examined > 0,
                _suite_detail([report]) + f", digraph cases {'ok' if digraph_ok else 'wrong'}",
                elapsed, 300)
    assert ok


def test_criterion_8_k22_census():
    start = time.perf_counter()
    graphs = list(complete_signings(2, 2))
    chordal = [g for g in graphs if oracle_chordal_bigraph(g)]
    odd = [g for g in graphs if not oracle_chordal_bigraph(g)]
    unique_negative = len(odd) == 1 and all(s.value == "-" for _, _, s in odd[0].edges())
    elapsed = time.perf_counter() - start
    ok = record(8, "K2,2 census", len(graphs) == 16 and len(chordal) == 15 and unique_negative,
                f"{len(chordal)} of {len(graphs)} chordal", elapsed, 1)
    assert ok


def test_criterion_9_cli_contract(capsys):
    start = time.perf_counter()
    mismatches = count = 0
    for g in iter_bigraphs(6, min_n=0):
        count += 1
        if parse_graph(format_graph(g)) != g or parse_graph(graph_to_json(g)) != g:
            mismatches += 1
    cases = [
        (["recognize", os.path.join(GOLDEN, "k33.sg")], 0),
        (["recognize", os.path.join(GOLDEN, "neg_c4.sg")], 1),
        (["recognize", os.path.join(GOLDEN, "loop.sg")], 2),
        (["witness", os.path.join(GOLDEN, "neg_c4_pendant.sg")], 0),
        (["witness", os.path.join(GOLDEN, "k33.sg")], 3),
        (["recognize", "--mode", "digraph", os.path.join(GOLDEN, "directed_c4.dg")], 1),
        (["verify", "--suite", "comp", "--bounds", "3,3"], 0),
    ]
    wrong = []
    for argv, expected in cases:
        code = main(argv)
        capsys.readouterr()
        if code != expected:
            wrong.append((argv[0], code, expected))
    with open(os.path.join(GOLDEN, "k33.recognize.out"), encoding="utf-8") as fh:
        expected_out = fh.read()
    main(["recognize", os.path.join(GOLDEN, "k33.sg")])
    golden_ok = capsys.readouterr().out == expected_out
    elapsed = time.perf_counter() - start
    ok = record(9, "CLI contract", mismatches == 0 and not wrong and golden_ok,
                f"{count} graphs round-tripped, {mismatches} mismatches, "
                f"{len(cases) - len(wrong)}/{len(cases)} exit codes", elapsed, 60)
    assert ok


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
