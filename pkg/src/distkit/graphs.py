"""Simple undirected graphs over dense integer vertices 0..n-1.

Adjacency is stored as one Python int per vertex, used as a bitmask over
vertex ids.  All search kernels in this package are neighborhood-
intersection bound, and big-int bitwise ops give word-parallel
intersections without any dependency.  Vertex subsets ("masks") follow the
same convention throughout the package.

Two serializations are supported: graph6 text (interop) and a JSON edge
list ``{"n": ..., "edges": [[u, v], ...]}`` (readability).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import Graph6Error

GRAPH6_MAX_N = 68719476735  # 2**36 - 1, the format's ceiling


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_from(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph; ``adj[u]`` is the neighbor mask of ``u``."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise ValueError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"vertex {u} has neighbors outside 0..{self.n - 1}")
            if row >> u & 1:
                raise ValueError(f"loop at vertex {u}")
        for u in range(self.n):
            for v in bits(self.adj[u]):
                if not self.adj[v] >> u & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    # -- basic queries ------------------------------------------------

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degree_in(self, v: int, mask: int) -> int:
        """Number of neighbors of ``v`` inside the vertex mask."""
        return (self.adj[v] & mask).bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> Iterator[int]:
        return bits(self.adj[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            rest = self.adj[u] >> (u + 1) << (u + 1)
            for v in bits(rest):
                yield (u, v)

    def edge_count(self) -> int:
        return sum(self.degree(v) for v in range(self.n)) // 2

    def max_degree(self) -> int:
        return max((self.degree(v) for v in range(self.n)), default=0)

    def min_degree(self) -> int:
        return min((self.degree(v) for v in range(self.n)), default=0)

    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def is_regular(self) -> bool:
        return self.n == 0 or self.max_degree() == self.min_degree()

    def is_complete(self) -> bool:
        return self.edge_count() == self.n * (self.n - 1) // 2

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = 1
        frontier = 1
        while frontier:
            grow = 0
            for v in bits(frontier):
                grow |= self.adj[v]
            frontier = grow & ~seen
            seen |= frontier
        return seen == self.vertex_mask()

    def is_independent_set(self, mask: int) -> bool:
        for v in bits(mask):
            if self.adj[v] & mask:
                return False
        return True


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; duplicates are merged.

    Raises ValueError for out-of-range endpoints or loops.
    """
    if n < 0:
        raise ValueError(f"vertex count must be nonnegative, got {n}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) out of range for n={n}")
        if u == v:
            raise ValueError(f"loop edge at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def induced_subgraph(G: Graph, mask: int) -> tuple[Graph, list[int]]:
    """Subgraph induced by the vertices of ``mask``.

    Returns the subgraph (vertices relabeled 0..k-1 in ascending original
    order) together with the list mapping new index -> original vertex.
    """
    if mask & ~G.vertex_mask():
        raise ValueError("mask contains vertices outside the graph")
    old = list(bits(mask))
    index = {v: i for i, v in enumerate(old)}
    adj = []
    for v in old:
        row = 0
        for w in bits(G.adj[v] & mask):
            row |= 1 << index[w]
        adj.append(row)
    return Graph(len(old), tuple(adj)), old


def join(G1: Graph, G2: Graph) -> Graph:
    """Disjoint union of G1 and G2 plus every cross edge.

    G1 keeps its vertex ids; G2's are shifted up by ``G1.n``.
    """
    n = G1.n + G2.n
    low = (1 << G1.n) - 1
    high = ((1 << G2.n) - 1) << G1.n
    adj = [G1.adj[v] | high for v in range(G1.n)]
    adj += [(G2.adj[v] << G1.n) | low for v in range(G2.n)]
    return Graph(n, tuple(adj))


def complement(G: Graph) -> Graph:
    full = G.vertex_mask()
    return Graph(G.n, tuple((full & ~G.adj[v]) & ~(1 << v) for v in range(G.n)))


# -- graph6 ----------------------------------------------------------


def _g6_encode_n(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, (n >> 12) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])
    if n <= GRAPH6_MAX_N:
        out = [126, 126]
        for shift in range(30, -1, -6):
            out.append((n >> shift & 63) + 63)
        return bytes(out)
    raise ValueError(f"n={n} exceeds the graph6 limit {GRAPH6_MAX_N}")


def encode_graph6(G: Graph) -> str:
    """Encode to graph6: size header plus the column-major upper triangle."""
    out = bytearray(_g6_encode_n(G.n))
    acc = 0
    nbits = 0
    for v in range(1, G.n):
        col = G.adj[v]
        for u in range(v):
            acc = acc << 1 | (col >> u & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return out.decode("ascii")


def decode_graph6(text: str) -> Graph:
    """Decode a graph6 string; raises Graph6Error on malformed input."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6Error("empty graph6 string")
    data = s.encode("ascii", errors="replace")
    for ch in data:
        if not 63 <= ch <= 126:
            raise Graph6Error(f"byte {ch} outside graph6 range 63..126")
    pos = 0
    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            if len(data) < 8:
                raise Graph6Error("truncated graph6 size field")
            n = 0
            for ch in data[2:8]:
                n = n << 6 | (ch - 63)
            pos = 8
        else:
            if len(data) < 4:
                raise Graph6Error("truncated graph6 size field")
            n = 0
            for ch in data[1:4]:
                n = n << 6 | (ch - 63)
            pos = 4
    else:
        n = data[0] - 63
        pos = 1
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - pos != nbytes:
        raise Graph6Error(
            f"graph6 body for n={n} needs {nbytes} bytes, got {len(data) - pos}"
        )
    bitstream = 0
    for ch in data[pos:]:
        bitstream = bitstream << 6 | (ch - 63)
    pad = nbytes * 6 - nbits
    if pad and bitstream & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits in graph6 body")
    bitstream >>= pad
    adj = [0] * n
    k = nbits - 1
    for v in range(1, n):
        for u in range(v):
            if bitstream >> k & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            k -= 1
    return Graph(n, tuple(adj))


# -- JSON edge list --------------------------------------------------


def to_edge_json(G: Graph) -> str:
    return json.dumps({"n": G.n, "edges": [list(e) for e in G.edges()]})


def from_edge_json(text: str) -> Graph:
    try:
        payload = json.loads(text)
        n = payload["n"]
        edges = [(int(u), int(v)) for u, v in payload["edges"]]
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"bad edge-list JSON: {exc}") from exc
    return build_graph(int(n), edges)
