"""Shared engineered graphs for partition-engine tests.

``obstruction_instance`` builds a 23-vertex graph with maximum degree 8
that violates bigraph-freeness for r = 4 (it contains an induced K_{5,4})
together with a locally f-optimal 2-part partition, caps (4, 4), whose
first part holds an induced K_{4,4}.  Every degree is balanced so that no
single-vertex move improves the potential, and the destruction chain is
forced through two f-preserving moves into the K_{5,4} assembly.

Vertex layout: rows 0..4 and columns 5..8 form the K_{5,4}; 9..12 (W) are
the common neighbors that receive row 0; 13..14 (Y) complete the second
part's K_{4,4}; 15..18 (U) and 19..22 (Z) are degree-balancing fillers.
"""

from distkit.graphs import build_graph, mask_from
from distkit.partitioning import CapPartition, cap_plan, potential_f

ROWS = list(range(5))
COLS = list(range(5, 9))
W = list(range(9, 13))
Y = [13, 14]
U = list(range(15, 19))
Z = list(range(19, 23))


def obstruction_instance():
    edges = []
    edges += [(a, b) for a in ROWS for b in COLS]
    edges += [(a, w) for a in ROWS for w in W]
    edges += [(y, w) for y in Y for w in W]
    edges += [(COLS[i], U[(i + j) % 4]) for i in range(4) for j in range(3)]
    edges += [(y, z) for y in Y for z in Z]
    G = build_graph(23, edges)

    plan = cap_plan(8, 4)
    part1 = mask_from(ROWS[:4] + COLS + Z)
    part2 = mask_from([ROWS[4]] + W + Y + U)
    partition = CapPartition(
        (part1, part2), plan, potential_f(G, (part1, part2), plan)
    )
    return G, partition
