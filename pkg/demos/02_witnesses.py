"""
Forbidden subgraph witnesses
============================

When a bigraph is not chordal, shrink it to a vertex-minimal non-chordal
induced subgraph and name the forbidden family it belongs to.
"""

import random

from signedchordal import build_graph, minimal_non_chordal_witness, recognize_chordal_signed_bigraph
from signedchordal.oracle import sample_bigraph

# negative 4-cycle with a pendant edge hanging off it
g = build_graph(5, [(0, 1, "-"), (1, 2, "-"), (2, 3, "-"), (3, 0, "-"), (3, 4, "+")])
w = minimal_non_chordal_witness(g)
print(w.tag, "on host vertices", w.host_vertices())

# a long induced cycle is caught whatever its signs
c8 = build_graph(8, [(i, (i + 1) % 8, "+-"[i % 2]) for i in range(8)])
print(minimal_non_chordal_witness(c8).tag)

# random 8-vertex bigraphs: tally which families show up
rng = random.Random(11)
tally = {}
for _ in range(2000):
    h = sample_bigraph(rng, sizes=(8,))
    if recognize_chordal_signed_bigraph(h) is None:
        fam = minimal_non_chordal_witness(h).tag.family
        tally[fam] = tally.get(fam, 0) + 1
for fam, count in sorted(tally.items(), key=lambda kv: -kv[1]):
    print(f"{fam:6s} {count}")
