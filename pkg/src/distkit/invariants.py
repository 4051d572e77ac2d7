"""Exact and closed-form graph invariants.

Independence number runs branch-and-bound with a greedy coloring bound
(equivalently: maximum clique in the complement).  Vertex connectivity is
exact via unit-vertex-capacity max-flow on the standard split network.
Least eigenvalues come from closed forms only (circulant cosine sums and
the Paley surd); there is deliberately no general eigensolver here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import Budget
from .graphs import Graph, bits, complement, induced_subgraph

# -- independence -----------------------------------------------------


def _max_clique(adj: list[int], start_mask: int, stop_at: int | None = None,
                budget: Budget | None = None) -> int:
    """Mask of a maximum clique among the vertices of ``start_mask``.

    Tomita-style: candidates are greedily colored and explored in
    descending color order, pruning branches that cannot beat the
    incumbent.  Deterministic (lowest-index-first greedy classes).
    If ``stop_at`` is given, returns early once a clique that large is found.
    """
    best_mask = 0
    best_size = 0

    def expand(r_mask: int, r_size: int, cand: int) -> bool:
        nonlocal best_mask, best_size
        if budget is not None:
            budget.spend()
        if not cand:
            if r_size > best_size:
                best_size, best_mask = r_size, r_mask
                if stop_at is not None and best_size >= stop_at:
                    return True
            return False
        order: list[tuple[int, int]] = []
        color = 0
        todo = cand
        while todo:
            color += 1
            avail = todo
            while avail:
                low = avail & -avail
                v = low.bit_length() - 1
                order.append((v, color))
                avail &= ~adj[v]
                avail ^= low
                todo ^= low
        live = cand
        for v, c in reversed(order):
            if r_size + c <= best_size:
                return False
            if expand(r_mask | 1 << v, r_size + 1, live & adj[v]):
                return True
            live &= ~(1 << v)
        return False

    expand(0, 0, start_mask)
    return best_mask


def max_independent_set(G: Graph, mask: int | None = None,
                        stop_at: int | None = None,
                        budget: Budget | None = None) -> int:
    """Mask of a maximum independent set within ``mask`` (default: all)."""
    if mask is None:
        mask = G.vertex_mask()
    co = complement(G)
    return _max_clique(list(co.adj), mask, stop_at=stop_at, budget=budget)


def independence_number(G: Graph) -> tuple[int, list[int]]:
    """Exact independence number with a maximum witness set."""
    w = max_independent_set(G)
    return w.bit_count(), list(bits(w))


# -- spectral closed forms --------------------------------------------


@dataclass(frozen=True)
class SpectralBound:
    n: int
    k: int
    lambda_min: float
    bound: float


def hoffman_bound(n: int, k: int, lambda_min: float) -> float:
    """Ratio bound n * (-lambda_min) / (k - lambda_min) for k-regular graphs."""
    if lambda_min >= k:
        raise ValueError(f"least eigenvalue {lambda_min} must be below the degree {k}")
    return n * (-lambda_min) / (k - lambda_min)


def least_eigenvalue_circulant(n: int, connection: set[int] | frozenset[int]) -> float:
    """Minimum over j of sum_d cos(2*pi*j*d/n), d over the symmetric closure."""
    diffs = sorted(set(connection) | {n - s for s in connection})
    best = math.inf
    for j in range(n):
        val = sum(math.cos(2.0 * math.pi * j * d / n) for d in diffs)
        best = min(best, val)
    return best


def least_eigenvalue_paley(q: int) -> float:
    return (-1.0 - math.sqrt(q)) / 2.0


# -- vertex connectivity ----------------------------------------------


@dataclass(frozen=True)
class ConnectivityCertificate:
    """Exact connectivity plus a re-checkable witness.

    ``witness_cut`` is a minimum separating set for some vertex pair, or
    None for complete graphs (marked by ``complete``).
    """

    kappa: int
    witness_cut: tuple[int, ...] | None
    complete: bool

    def to_json(self) -> dict:
        return {
            "kappa": self.kappa,
            "witness_cut": None if self.witness_cut is None else list(self.witness_cut),
            "complete": self.complete,
        }


def _min_vertex_cut(G: Graph, s: int, t: int) -> tuple[int, tuple[int, ...]]:
    """Max-flow = min-cut between non-adjacent s, t on the split network.

    Node 2v is v_in, 2v+1 is v_out; internal arcs have capacity 1, edge
    arcs are effectively unbounded.  Augments one unit per BFS round.
    """
    n = G.n
    big = n + 1
    cap: dict[tuple[int, int], int] = {}
    out: list[list[int]] = [[] for _ in range(2 * n)]

    def add_arc(a: int, b: int, c: int) -> None:
        if (a, b) not in cap:
            cap[(a, b)] = 0
            cap[(b, a)] = 0
            out[a].append(b)
            out[b].append(a)
        cap[(a, b)] += c

    for v in range(n):
        add_arc(2 * v, 2 * v + 1, 1)
    for u in range(n):
        for v in bits(G.adj[u]):
            add_arc(2 * u + 1, 2 * v, big)

    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while True:
        prev = [-1] * (2 * n)
        prev[source] = source
        queue = [source]
        while queue and prev[sink] == -1:
            nxt = []
            for a in queue:
                for b in out[a]:
                    if prev[b] == -1 and cap[(a, b)] > 0:
                        prev[b] = a
                        nxt.append(b)
            queue = nxt
        if prev[sink] == -1:
            break
        b = sink
        while b != source:
            a = prev[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1

    reach = [False] * (2 * n)
    reach[source] = True
    queue = [source]
    while queue:
        a = queue.pop()
        for b in out[a]:
            if not reach[b] and cap[(a, b)] > 0:
                reach[b] = True
                queue.append(b)
    cut = tuple(v for v in range(n) if reach[2 * v] and not reach[2 * v + 1])
    return flow, cut


def vertex_connectivity(G: Graph) -> ConnectivityCertificate:
    """Exact kappa(G) with a witness minimum cut (Menger via max-flow).

    Pair enumeration follows the standard reduction: all non-neighbors of
    a minimum-degree vertex, then non-adjacent pairs among its neighbors.
    """
    if G.n < 2:
        raise ValueError("connectivity needs at least 2 vertices")
    if G.is_complete():
        return ConnectivityCertificate(G.n - 1, None, True)
    if not G.is_connected():
        return ConnectivityCertificate(0, (), False)

    u0 = min(range(G.n), key=lambda v: (G.degree(v), v))
    best = G.degree(u0)
    best_cut = tuple(bits(G.adj[u0]))

    def consider(x: int, y: int) -> None:
        nonlocal best, best_cut
        value, cut = _min_vertex_cut(G, x, y)
        if value < best:
            best, best_cut = value, cut

    non_nbrs = G.vertex_mask() & ~G.adj[u0] & ~(1 << u0)
    for v in bits(non_nbrs):
        consider(u0, v)
    nbrs = list(bits(G.adj[u0]))
    for i, x in enumerate(nbrs):
        for y in nbrs[i + 1:]:
            if not G.has_edge(x, y):
                consider(x, y)
    return ConnectivityCertificate(best, best_cut, False)


def is_k_connected(G: Graph, k: int) -> bool:
    """True iff G has at least k+1 vertices and kappa(G) >= k."""
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    if k == 0:
        return G.n >= 1
    if G.n < k + 1:
        return False
    return vertex_connectivity(G).kappa >= k


# -- induced complete bipartite detection ------------------------------


def has_induced_complete_bipartite(G: Graph, s: int, t: int,
                                   budget: Budget | None = None
                                   ) -> tuple[list[int], list[int]] | None:
    """Find disjoint independent sets A (|A|=s) and B (|B|=t) with all
    A x B edges present, i.e. an induced K_{s,t} witness; None if absent.

    Enumerates independent s-sets with common-neighborhood pruning, then
    asks the independence kernel for a t-independent set among the common
    neighbors.  Raises BudgetExceeded when the node budget runs out, which
    callers must keep distinct from None.
    """
    if s < 1 or t < 1:
        raise ValueError("side sizes must be positive")
    if budget is None:
        budget = Budget(what="induced complete bipartite search")
    adj = G.adj
    full = G.vertex_mask()

    def extend(a_mask: int, size: int, cand: int, common: int) -> tuple[int, int] | None:
        budget.spend()
        if size == s:
            b_mask = max_independent_set(G, common, stop_at=t, budget=budget)
            if b_mask.bit_count() >= t:
                trimmed = 0
                for v in bits(b_mask):
                    trimmed |= 1 << v
                    if trimmed.bit_count() == t:
                        break
                return a_mask, trimmed
            return None
        need = s - size
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            if cand.bit_count() + 1 < need:
                return None
            new_common = common & adj[v]
            if new_common.bit_count() < t:
                continue
            found = extend(a_mask | low, size + 1, cand & ~adj[v], new_common)
            if found is not None:
                return found
        return None

    hit = extend(0, 0, full, full)
    if hit is None:
        return None
    a_mask, b_mask = hit
    return list(bits(a_mask)), list(bits(b_mask))


@dataclass(frozen=True)
class AlphaCertificate:
    """Outcome of the independence-based bigraph-freeness test."""

    certified_free: bool
    alpha: int
    witness: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "certified_free": self.certified_free,
            "alpha": self.alpha,
            "witness": list(self.witness),
        }


def bigraph_free_by_alpha(G: Graph, r: int) -> AlphaCertificate:
    """Sufficient condition: alpha(G) <= r-1 rules out induced K_{r,r+1}
    and K_{r+1,r+1} (each would need an independent side of size >= r).
    Inconclusive otherwise; callers fall back to the explicit search.
    """
    if r < 1:
        raise ValueError(f"r must be positive, got {r}")
    alpha, witness = independence_number(G)
    return AlphaCertificate(alpha <= r - 1, alpha, tuple(witness))


def independence_number_in(G: Graph, mask: int) -> int:
    """Independence number of the induced subgraph on ``mask``."""
    sub, _ = induced_subgraph(G, mask)
    value, _ = independence_number(sub)
    return value
