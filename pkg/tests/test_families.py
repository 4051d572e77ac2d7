import pytest

from distkit.families import (
    ApplicationSpec,
    CirculantSpec,
    DihedralSpec,
    PaleySpec,
    application_graph,
    circulant,
    circulant_power_exponent,
    complete,
    complete_bipartite,
    complete_multipartite,
    cycle,
    cycle_power,
    default_H,
    dihedral_cayley,
    paley,
)
from distkit.graphs import join
from distkit.invariants import independence_number
from oracles import brute_isomorphic


def test_basic_generators():
    assert complete_bipartite(3, 3).edge_count() == 9
    assert complete_bipartite(3, 3).max_degree() == 3
    assert cycle(6).is_regular() and cycle(6).degree(0) == 2
    assert complete_multipartite([2, 2, 2]).edge_count() == 12
    with pytest.raises(ValueError):
        complete_multipartite([])
    with pytest.raises(ValueError):
        cycle(2)


def test_cycle_power_examples():
    assert cycle_power(6, 1) == cycle(6)
    G = cycle_power(13, 2)
    assert G.is_regular() and G.degree(0) == 4
    assert cycle_power(7, 3).is_complete()
    with pytest.raises(ValueError):
        cycle_power(7, 4)


def test_circulant_examples():
    assert circulant(CirculantSpec(6, frozenset({1}))) == cycle(6)
    assert circulant(CirculantSpec(12, frozenset({1, 2}))) == cycle_power(12, 2)
    M = circulant(CirculantSpec(8, frozenset({4})))
    assert M.is_regular() and M.degree(0) == 1 and M.edge_count() == 4


def test_circulant_matches_cycle_power_generally():
    for n in range(5, 15):
        for k in range(1, n // 2 + 1):
            assert circulant(CirculantSpec(n, frozenset(range(1, k + 1)))) == cycle_power(n, k)


def test_paley_small():
    assert paley(PaleySpec(5)) == cycle(5)
    P = paley(PaleySpec(13))
    assert P.is_regular() and P.degree(0) == 6 and P.edge_count() == 39


def test_paley_translation_invariance():
    P = paley(PaleySpec(17))
    q = 17
    for c in range(1, q):
        for u in range(q):
            for v in range(u + 1, q):
                assert P.has_edge(u, v) == P.has_edge((u + c) % q, (v + c) % q)


def test_paley_rejects_bad_q():
    with pytest.raises(ValueError):
        PaleySpec(7)  # 7 = 3 (mod 4)
    with pytest.raises(ValueError):
        PaleySpec(9)  # prime power, not prime
    with pytest.raises(ValueError):
        PaleySpec(21)


def test_dihedral_structure():
    spec = DihedralSpec(6, 1)
    G = dihedral_cayley(spec)
    m = 6
    assert G.n == 12 and G.is_regular() and G.degree(0) == 2 * m - 2  # 2m-(k+1)
    # both cosets induce cliques
    for base in (0, m):
        for i in range(m):
            for j in range(i + 1, m):
                assert G.has_edge(base + i, base + j)
    # every rotation has exactly m-k reflection neighbors and vice versa
    for i in range(m):
        assert sum(1 for j in range(m) if G.has_edge(i, m + j)) == m - 1
        assert sum(1 for j in range(m) if G.has_edge(m + i, j)) == m - 1


def test_dihedral_cross_degrees_various_k():
    for m, k in [(6, 2), (8, 3), (9, 5)]:
        G = dihedral_cayley(DihedralSpec(m, k))
        for i in range(m):
            assert sum(1 for j in range(m) if G.has_edge(i, m + j)) == m - k


def test_dihedral_degenerate_generates():
    # one reflection plus all rotations still generates
    G = dihedral_cayley(DihedralSpec(4, 3, frozenset({0})))
    assert G.is_connected()


def test_dihedral_spec_validation():
    with pytest.raises(ValueError):
        DihedralSpec(6, 0)
    with pytest.raises(ValueError):
        DihedralSpec(6, 6)
    with pytest.raises(ValueError):
        DihedralSpec(6, 1, frozenset({0}))  # wrong |F|


def test_default_H():
    H7 = default_H(7)
    assert H7.n == 13 and independence_number(H7)[0] == 4
    assert brute_isomorphic(default_H(2), complete(3))
    H10 = default_H(10)
    assert H10.n == 19 and independence_number(H10)[0] == 6


def test_application_g1():
    spec = ApplicationSpec("G1", r=7, n=24)
    G = application_graph(spec)
    assert G == join(complete(11), cycle_power(13, 2))
    assert G.n == 24 and G.max_degree() == 23 and G.min_degree() == 15


def test_application_g2_arithmetic():
    spec = ApplicationSpec("G2", r=8, n=44)
    assert spec.a == 29 and spec.b == 15
    G = application_graph(spec)
    assert G.n == 44
    assert G == join(paley(PaleySpec(29)), cycle_power(15, 2))


def test_application_g2_rejects_bad_residue():
    # a = 19 = 3 (mod 4) for r=7, n=32
    spec = ApplicationSpec("G2", r=7, n=32)
    assert spec.a == 19
    with pytest.raises(ValueError):
        application_graph(spec)


def test_application_g3():
    spec = ApplicationSpec("G3", r=7, n=31)  # a = 18 = 2m, m = 9
    G = application_graph(spec)
    assert G.n == 31
    with pytest.raises(ValueError):
        application_graph(ApplicationSpec("G3", r=7, n=30))  # a = 17 odd


def test_application_g4():
    spec = ApplicationSpec("G4", r=8, n=38)  # a = 23, b = 15
    t = circulant_power_exponent(23, 8)
    assert 2 * t <= 15
    G = application_graph(spec)
    assert G == join(cycle_power(23, t), cycle_power(15, 2))


def test_application_spec_validation():
    with pytest.raises(ValueError):
        ApplicationSpec("G1", r=6, n=24)  # r too small
    with pytest.raises(ValueError):
        ApplicationSpec("G1", r=7, n=23)  # n < 3r+3
    with pytest.raises(ValueError):
        ApplicationSpec("G1", r=7, n=50)  # n > r^2
    with pytest.raises(ValueError):
        ApplicationSpec("G5", r=7, n=24)


def test_application_rejects_bad_H():
    bad_H = complete_bipartite(7, 6)  # 13 vertices but alpha = 7 > 6
    with pytest.raises(ValueError):
        application_graph(ApplicationSpec("G1", r=7, n=24, H=bad_H))
    short_H = complete(5)
    with pytest.raises(ValueError):
        application_graph(ApplicationSpec("G1", r=7, n=24, H=short_H))
