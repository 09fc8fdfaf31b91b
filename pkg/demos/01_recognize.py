"""
Recognizing chordal signed bigraphs
===================================

Build a few small signed bigraphs, ask for an edge elimination ordering and
replay it.
"""

from signedchordal import build_graph, recognize_chordal_signed_bigraph, verify_certificate
from signedchordal.elimination import signed_simplicial_edges

# a 4-cycle with one negative edge: the opposite edge is simplicial
c4 = build_graph(4, [(0, 1, "-"), (1, 2, "+"), (2, 3, "+"), (3, 0, "+")])
print("simplicial edges:", signed_simplicial_edges(c4))

cert = recognize_chordal_signed_bigraph(c4)
print("ordering:", cert.sequence)
print("replays:", verify_certificate(c4, cert))

# make every edge negative and nothing can be removed
neg = build_graph(4, [(0, 1, "-"), (1, 2, "-"), (2, 3, "-"), (3, 0, "-")])
print("negative C4:", recognize_chordal_signed_bigraph(neg))

# an edge's own sign does not matter, only its neighbourhood does:
# one negative edge in K3,3 is fine, a negative perfect matching is not
one = build_graph(6, [(i, 3 + j, "-" if i == j == 0 else "+") for i in range(3) for j in range(3)])
print("K3,3, one negative edge:", recognize_chordal_signed_bigraph(one).sequence[:3], "...")
matching = build_graph(6, [(i, 3 + j, "-" if i == j else "+") for i in range(3) for j in range(3)])
print("K3,3, negative matching:", recognize_chordal_signed_bigraph(matching))

# the greedy choice is free: any simplicial edge works on a chordal input
import random
rng = random.Random(3)
pos_k33 = build_graph(6, [(i, 3 + j, "+") for i in range(3) for j in range(3)])
for _ in range(3):
    print(recognize_chordal_signed_bigraph(pos_k33, chooser=rng.choice).sequence[:4], "...")
