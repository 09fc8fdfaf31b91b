"""
A tour of the forbidden families
================================

Pattern families, cycles, tadpoles and their sums and joins.
"""

from signedchordal import FamilyTag, generate, join_of_tadpoles, make_tadpole, membership, sum_of_tadpoles
from signedchordal.catalog import all_join_tags, all_sum_tags, cycle_tag, figure_pattern, raw_count
from signedchordal.elimination import has_signed_simplicial_edge

# black edges stand for either sign; expansions are deduplicated up to isomorphism
for fam in ("F1", "F2", "F3", "F4", "F5", "F6", "D"):
    p = figure_pattern(fam)
    print(f"{fam}: {len(p.black)} black edges, {raw_count(FamilyTag(fam))} raw, "
          f"{len(generate(FamilyTag(fam)))} classes")

print("C6 signings up to symmetry:", len(generate(cycle_tag(3))))

# a type-1 tadpole with a two-vertex tail, and a type-2 one
t1, t2 = make_tadpole(1, 2), make_tadpole(2, 2)
print("tadpole:", t1.graph)

s = sum_of_tadpoles(t1, t2)
print("sum:", s.n, "vertices;", membership(s))

for j in join_of_tadpoles(t1, t2):
    print("join:", membership(j), "simplicial edge?", has_signed_simplicial_edge(j))

print(len(all_sum_tags(4)), "sum shapes and", len(all_join_tags(4)), "join shapes with tails up to 4")
