import math

import numpy as np
import pytest

from distkit.errors import Budget, BudgetExceeded
from distkit.families import (
    CirculantSpec,
    PaleySpec,
    circulant,
    complete,
    complete_bipartite,
    cycle,
    cycle_power,
    paley,
)
from distkit.graphs import build_graph, complement, join, mask_from
from distkit.invariants import (
    bigraph_free_by_alpha,
    has_induced_complete_bipartite,
    hoffman_bound,
    independence_number,
    is_k_connected,
    least_eigenvalue_circulant,
    least_eigenvalue_paley,
    vertex_connectivity,
)
from oracles import (
    brute_independence_number,
    brute_induced_complete_bipartite,
    brute_min_vertex_cut_size,
    random_graph,
)


def test_alpha_examples():
    assert independence_number(complete(7))[0] == 1
    assert independence_number(cycle_power(12, 2))[0] == 4
    value, witness = independence_number(paley(PaleySpec(13)))
    assert value == 3
    G = paley(PaleySpec(13))
    assert G.is_independent_set(mask_from(witness)) and len(witness) == 3


def test_alpha_matches_brute_force():
    for seed in range(12):
        G = random_graph(9, 0.4, seed=seed)
        value, witness = independence_number(G)
        assert value == brute_independence_number(G)
        assert G.is_independent_set(mask_from(witness))
        assert len(witness) == value


def test_cycle_power_alpha_closed_form():
    for n in range(4, 19):
        for k in range(2, n // 2 + 1):
            if n < k + 2:
                continue
            assert independence_number(cycle_power(n, k))[0] == n // (k + 1)


def test_hoffman_examples():
    assert hoffman_bound(2, 1, -1.0) == pytest.approx(1.0)
    q = 13
    bound = hoffman_bound(q, (q - 1) // 2, least_eigenvalue_paley(q))
    assert bound == pytest.approx(math.sqrt(q), abs=1e-9)
    with pytest.raises(ValueError):
        hoffman_bound(5, 2, 2.5)


def test_hoffman_dominates_alpha_on_regular_graphs():
    cases = [(13,), (17,), (29,)]
    for (q,) in cases:
        G = paley(PaleySpec(q))
        alpha = independence_number(G)[0]
        bound = hoffman_bound(q, (q - 1) // 2, least_eigenvalue_paley(q))
        assert alpha <= bound + 1e-9
    for n, conn in [(12, {1, 2}), (10, {1, 5}), (14, {2, 3, 7})]:
        G = circulant(CirculantSpec(n, frozenset(conn)))
        alpha = independence_number(G)[0]
        lam = least_eigenvalue_circulant(n, conn)
        assert alpha <= hoffman_bound(n, G.degree(0), lam) + 1e-9


def test_least_eigenvalue_cycle():
    assert least_eigenvalue_circulant(6, {1}) == pytest.approx(-2.0, abs=1e-9)


def test_least_eigenvalue_against_dense_solver():
    for n, conn in [(12, {1, 2}), (9, {1, 3}), (10, {2, 5}), (16, {1, 4, 8})]:
        G = circulant(CirculantSpec(n, frozenset(conn)))
        A = np.zeros((n, n))
        for u, v in G.edges():
            A[u, v] = A[v, u] = 1.0
        dense = float(np.linalg.eigvalsh(A)[0])
        assert least_eigenvalue_circulant(n, conn) == pytest.approx(dense, abs=1e-9)
    for q in (5, 13, 17):
        G = paley(PaleySpec(q))
        A = np.zeros((q, q))
        for u, v in G.edges():
            A[u, v] = A[v, u] = 1.0
        assert least_eigenvalue_paley(q) == pytest.approx(
            float(np.linalg.eigvalsh(A)[0]), abs=1e-9
        )


def test_connectivity_examples():
    assert vertex_connectivity(cycle(6)).kappa == 2
    assert vertex_connectivity(paley(PaleySpec(13))).kappa == 6
    assert vertex_connectivity(cycle_power(15, 4)).kappa == 8
    cert = vertex_connectivity(complete(5))
    assert cert.kappa == 4 and cert.complete and cert.witness_cut is None


def test_connectivity_witness_disconnects():
    for seed in range(10):
        G = random_graph(8, 0.45, seed=seed)
        cert = vertex_connectivity(G)
        assert cert.kappa == brute_min_vertex_cut_size(G)
        if cert.witness_cut is not None and not cert.complete:
            assert len(cert.witness_cut) == cert.kappa
            keep = [v for v in range(G.n) if v not in cert.witness_cut]
            relabel = {v: i for i, v in enumerate(keep)}
            H = build_graph(
                len(keep),
                [(relabel[u], relabel[v]) for u, v in G.edges() if u in keep and v in keep],
            )
            assert len(keep) < 2 or not H.is_connected()


def test_paley_edge_transitive_consequence():
    for q in (5, 13, 17):
        G = paley(PaleySpec(q))
        assert vertex_connectivity(G).kappa == (q - 1) // 2


def test_join_connectivity_law():
    for seed in range(8):
        X = random_graph(5 + seed % 3, 0.5, seed=seed)
        H = random_graph(4 + seed % 2, 0.5, seed=50 + seed)
        G = join(X, H)
        kx = vertex_connectivity(X).kappa if X.n >= 2 else 0
        kh = vertex_connectivity(H).kappa if H.n >= 2 else 0
        expected = min(kx + H.n, kh + X.n, G.min_degree())
        assert vertex_connectivity(G).kappa == expected


def test_is_k_connected():
    assert is_k_connected(complete(5), 4)
    assert not is_k_connected(cycle(6), 3)
    G = join(complete(11), cycle_power(13, 2))
    assert is_k_connected(G, 11)
    assert vertex_connectivity(G).kappa == 15
    assert is_k_connected(complete(1), 0)
    assert not is_k_connected(complete(4), 4)  # needs k+1 vertices


def test_induced_bipartite_examples():
    A, B = has_induced_complete_bipartite(complete_bipartite(3, 3), 3, 3)
    assert sorted(A + B) == list(range(6))
    assert has_induced_complete_bipartite(complete(5), 1, 2) is None
    assert has_induced_complete_bipartite(cycle(6), 2, 3) is None
    assert has_induced_complete_bipartite(cycle(6), 1, 2) is not None


def test_induced_bipartite_matches_brute_force():
    for seed in range(10):
        G = random_graph(9, 0.5, seed=seed)
        for s, t in [(1, 2), (2, 2), (2, 3), (3, 3)]:
            got = has_induced_complete_bipartite(G, s, t)
            want = brute_induced_complete_bipartite(G, s, t)
            assert (got is None) == (want is None)
            if got is not None:
                A, B = got
                assert len(A) == s and len(B) == t
                assert all(G.has_edge(a, b) for a in A for b in B)
                assert G.is_independent_set(mask_from(A))
                assert G.is_independent_set(mask_from(B))


def test_induced_bipartite_budget_is_distinct():
    G = random_graph(12, 0.5, seed=1)
    with pytest.raises(BudgetExceeded):
        has_induced_complete_bipartite(G, 3, 3, budget=Budget(3, what="tiny"))


def test_bigraph_free_by_alpha():
    G = join(complete(11), cycle_power(13, 2))
    cert = bigraph_free_by_alpha(G, 7)
    assert cert.certified_free and cert.alpha == 4
    cert = bigraph_free_by_alpha(complete_bipartite(7, 8), 7)
    assert not cert.certified_free and cert.alpha == 8
    cert = bigraph_free_by_alpha(build_graph(3, []), 2)
    assert not cert.certified_free and cert.alpha == 3
