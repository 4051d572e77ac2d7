"""Brute-force oracles kept independent of the library's search kernels.

Everything here enumerates: permutations for automorphisms and
isomorphism, subsets for independence and induced subgraphs, vertex
subsets for cuts.  Slow on purpose; used only at oracle scale.
"""

from __future__ import annotations

import random
from itertools import combinations, permutations

from distkit.graphs import Graph, build_graph


def brute_has_nontrivial_automorphism(G: Graph):
    for p in permutations(range(G.n)):
        if p == tuple(range(G.n)):
            continue
        if all(
            G.has_edge(p[u], p[v]) == G.has_edge(u, v)
            for u in range(G.n)
            for v in range(u + 1, G.n)
        ):
            return list(p)
    return None


def brute_color_preserving_automorphism(G: Graph, colors):
    for p in permutations(range(G.n)):
        if p == tuple(range(G.n)):
            continue
        if any(colors[p[v]] != colors[v] for v in range(G.n)):
            continue
        if all(
            G.has_edge(p[u], p[v]) == G.has_edge(u, v)
            for u in range(G.n)
            for v in range(u + 1, G.n)
        ):
            return list(p)
    return None


def brute_isomorphic(G: Graph, H: Graph) -> bool:
    if G.n != H.n or G.edge_count() != H.edge_count():
        return False
    for p in permutations(range(G.n)):
        if all(
            H.has_edge(p[u], p[v]) == G.has_edge(u, v)
            for u in range(G.n)
            for v in range(u + 1, G.n)
        ):
            return True
    return False


def brute_independence_number(G: Graph) -> int:
    best = 0
    for k in range(G.n, 0, -1):
        for S in combinations(range(G.n), k):
            if all(not G.has_edge(u, v) for u, v in combinations(S, 2)):
                return k
    return best


def brute_induced_complete_bipartite(G: Graph, s: int, t: int):
    for A in combinations(range(G.n), s):
        if any(G.has_edge(u, v) for u, v in combinations(A, 2)):
            continue
        rest = [v for v in range(G.n) if v not in A]
        for B in combinations(rest, t):
            if any(G.has_edge(u, v) for u, v in combinations(B, 2)):
                continue
            if all(G.has_edge(a, b) for a in A for b in B):
                return list(A), list(B)
    return None


def brute_min_vertex_cut_size(G: Graph) -> int:
    """kappa(G) by trying every vertex subset as a cut (n small)."""
    if G.is_complete():
        return G.n - 1
    if not G.is_connected():
        return 0
    verts = list(range(G.n))
    for k in range(G.n - 1):
        for cut in combinations(verts, k):
            keep = [v for v in verts if v not in cut]
            if len(keep) < 2:
                continue
            sub_edges = [
                (keep.index(u), keep.index(v))
                for u, v in G.edges()
                if u in keep and v in keep
            ]
            if not build_graph(len(keep), sub_edges).is_connected():
                return k
    return G.n - 1


def brute_count_induced_Krr(G: Graph, r: int) -> int:
    count = 0
    for S in combinations(range(G.n), 2 * r):
        for A in combinations(S, r):
            B = tuple(v for v in S if v not in A)
            if min(A) > min(B):
                continue
            if any(G.has_edge(u, v) for u, v in combinations(A, 2)):
                continue
            if any(G.has_edge(u, v) for u, v in combinations(B, 2)):
                continue
            if all(G.has_edge(a, b) for a in A for b in B):
                count += 1
    return count


def random_graph(n: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return build_graph(n, edges)


ASYMMETRIC_6 = build_graph(
    6, [(0, 1), (0, 2), (0, 3), (0, 5), (1, 2), (1, 4), (2, 3)]
)
