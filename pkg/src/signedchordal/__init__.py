"""Recognition and certification of chordal signed graphs and bigraphs."""

from .catalog import (
    FamilyTag,
    ForbiddenWitness,
    find_induced_member,
    generate,
    join_of_tadpoles,
    make_tadpole,
    membership,
    minimal_non_chordal_witness,
    sum_of_tadpoles,
)
from .elimination import (
    EliminationCertificate,
    is_chordal_bigraph,
    is_chordal_graph,
    is_signed_simplicial_edge,
    is_signed_simplicial_vertex,
    recognize_chordal_signed_bigraph,
    recognize_chordal_signed_graph,
    verify_certificate,
)
from .graph import (
    NEG,
    POS,
    Bipartition,
    Digraph,
    PatternGraph,
    Sign,
    SignedGraph,
    are_isomorphic,
    bipartition,
    build_graph,
    expand_pattern,
    induced_subgraph,
    is_positive_biclique,
    is_positive_clique,
)

__version__ = "0.1.0"
