"""Exhaustive corpus of small connected graphs, one per isomorphism class.

Graphs on n vertices are generated by attaching a new vertex with every
nonempty neighborhood to each (n-1)-vertex representative (every
connected graph has a non-cutvertex, so this reaches every class) and
deduplicated by an iterated neighbor-signature bucket plus exact
isomorphism tests.  Class counts are pinned against the published values
for connected graphs, and the shipped data file caches the n <= 8 corpus.
"""

from __future__ import annotations

import gzip
from importlib import resources

from .graphs import Graph, decode_graph6, encode_graph6
from .symmetry import are_isomorphic

KNOWN_CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}

CORPUS_RESOURCE = "connected_upto8.g6.gz"


def refinement_signature(G: Graph, rounds: int = 3) -> tuple:
    """Isomorphism-invariant bucket key from iterated neighbor colors."""
    colors = [G.degree(v) for v in range(G.n)]
    for _ in range(rounds):
        raw = [
            (colors[v], tuple(sorted(colors[w] for w in G.neighbors(v))))
            for v in range(G.n)
        ]
        relabel = {sig: i for i, sig in enumerate(sorted(set(raw)))}
        colors = [relabel[sig] for sig in raw]
    return (G.n, G.edge_count(), tuple(sorted(colors)))


def connected_graphs(max_n: int) -> dict[int, list[Graph]]:
    """All connected graphs with up to max_n vertices, one per class."""
    if max_n < 1:
        raise ValueError(f"need max_n >= 1, got {max_n}")
    levels: dict[int, list[Graph]] = {1: [Graph(1, (0,))]}
    for n in range(2, max_n + 1):
        buckets: dict[tuple, list[Graph]] = {}
        reps: list[Graph] = []
        new = n - 1
        for parent in levels[n - 1]:
            for nbrs in range(1, 1 << new):
                adj = list(parent.adj) + [nbrs]
                for w in range(new):
                    if nbrs >> w & 1:
                        adj[w] |= 1 << new
                cand = Graph(n, tuple(adj))
                key = refinement_signature(cand)
                bucket = buckets.setdefault(key, [])
                if not any(are_isomorphic(cand, seen) for seen in bucket):
                    bucket.append(cand)
                    reps.append(cand)
        levels[n] = reps
    return levels


def write_corpus(path: str, max_n: int = 8) -> None:
    levels = connected_graphs(max_n)
    lines = []
    for n in range(1, max_n + 1):
        for G in levels[n]:
            lines.append(encode_graph6(G))
    with gzip.open(path, "wt") as fh:
        fh.write("\n".join(lines) + "\n")


def load_corpus(max_n: int = 8) -> dict[int, list[Graph]]:
    """Load the packaged connected-graph corpus, keyed by vertex count."""
    if max_n > 8:
        raise ValueError("packaged corpus covers n <= 8")
    data = resources.files("distkit").joinpath("data", CORPUS_RESOURCE).read_bytes()
    levels: dict[int, list[Graph]] = {n: [] for n in range(1, max_n + 1)}
    for line in gzip.decompress(data).decode("ascii").splitlines():
        if not line:
            continue
        G = decode_graph6(line)
        if G.n <= max_n:
            levels[G.n].append(G)
    return levels
