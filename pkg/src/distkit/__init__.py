"""Graph toolkit for constructive distinguishing-coloring upper bounds.

Modules:

* ``graphs``: bitmask graph substrate, graph6 and JSON edge-list codecs.
* ``families``: named generators (complete/cycle powers, circulant, Paley,
  dihedral Cayley) and the join-family application instances.
* ``invariants``: exact independence, ratio bound, connectivity via
  max-flow, induced complete-bipartite detection.
* ``symmetry``: automorphism search by partition refinement; the
  distinguishing-coloring certifier.
* ``coloring``: exact chromatic / distinguishing-chromatic numbers and
  list-distinguishing search.
* ``partitioning``: capped-partition local search and the bound pipeline.
* ``paths``: explicit internally-disjoint path systems (Menger
  certificates) for circulant and dihedral Cayley graphs.
* ``cli``: the ``distkit`` command.
"""

from .graphs import Graph, build_graph, complement, decode_graph6, encode_graph6, induced_subgraph, join

__all__ = [
    "Graph",
    "build_graph",
    "complement",
    "decode_graph6",
    "encode_graph6",
    "induced_subgraph",
    "join",
]
