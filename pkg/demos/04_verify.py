"""
Checking the characterizations by brute force
=============================================

Each suite enumerates small graphs, decides chordality with an independent
recursion oracle and compares against the structural statement.
"""

from signedchordal.oracle import verify

for suite, bounds in [
    ("Comp", {"pairs": [(2, 2), (2, 3), (3, 3)]}),
    ("MinF", {"pairs": [(3, 3)]}),
    ("NonSep", {"max_n": 6}),
    ("Main", {"max_n": 5}),
    ("GraphVariant", {"max_n": 4}),
    ("L2.1", None),
    ("L4.6", {"max_n": 7, "max_edges": 10}),
]:
    report = verify(suite, bounds)
    print(f"{suite:12s} examined {report.examined:6d}  chordal {report.chordal:6d}  "
          f"discrepancies {report.discrepancy_count}  {report.elapsed:.1f}s")

# the tadpole lemma breaks at eight vertices; see the report's first entry
r = verify("L4.8", {"max_n": 8})
print("L4.8 discrepancies:", r.discrepancy_count)
print("first:", r.discrepancies[0]["graph"])
print("notes:", dict(r.notes))
