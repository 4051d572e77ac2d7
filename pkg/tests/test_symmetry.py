from distkit.families import complete, complete_bipartite, cycle, cycle_power, paley, PaleySpec
from distkit.graphs import build_graph
from distkit.symmetry import (
    are_isomorphic,
    find_color_preserving_automorphism,
    find_isomorphism,
    find_nontrivial_automorphism,
    is_automorphism,
    is_distinguishing,
    preserves_coloring,
)
from oracles import (
    ASYMMETRIC_6,
    brute_color_preserving_automorphism,
    brute_has_nontrivial_automorphism,
    brute_isomorphic,
    random_graph,
)


def test_cycle_has_nontrivial_automorphism():
    phi = find_nontrivial_automorphism(cycle(6))
    assert phi is not None and phi != list(range(6))
    assert is_automorphism(cycle(6), phi)


def test_asymmetric_six_vertex_graph():
    assert brute_has_nontrivial_automorphism(ASYMMETRIC_6) is None  # oracle agrees
    assert find_nontrivial_automorphism(ASYMMETRIC_6) is None


def test_k33_automorphism():
    phi = find_nontrivial_automorphism(complete_bipartite(3, 3))
    assert phi is not None and is_automorphism(complete_bipartite(3, 3), phi)


def test_agreement_with_brute_force_random_corpus():
    for seed in range(25):
        n = 4 + seed % 5
        G = random_graph(n, 0.45, seed=seed)
        got = find_nontrivial_automorphism(G)
        want = brute_has_nontrivial_automorphism(G)
        assert (got is None) == (want is None), (seed, n)
        if got is not None:
            assert is_automorphism(G, got) and got != list(range(n))


def test_agreement_with_brute_force_n8():
    for seed in (101, 102, 103):
        G = random_graph(8, 0.5, seed=seed)
        got = find_nontrivial_automorphism(G)
        want = brute_has_nontrivial_automorphism(G)
        assert (got is None) == (want is None)


def test_color_preserving_examples():
    C6 = cycle(6)
    assert find_color_preserving_automorphism(C6, [0, 1, 2, 3, 4, 5]) is None
    phi = find_color_preserving_automorphism(C6, [1, 2, 1, 2, 1, 2])
    assert phi is not None
    assert is_automorphism(C6, phi) and preserves_coloring([1, 2, 1, 2, 1, 2], phi)
    C4 = cycle(4)
    phi = find_color_preserving_automorphism(C4, [1, 2, 1, 3])
    assert phi is not None and preserves_coloring([1, 2, 1, 3], phi)


def test_color_preserving_matches_brute_force():
    for seed in range(15):
        n = 4 + seed % 4
        G = random_graph(n, 0.5, seed=200 + seed)
        colors = [((v * 7) + seed) % 3 for v in range(n)]
        got = find_color_preserving_automorphism(G, colors)
        want = brute_color_preserving_automorphism(G, colors)
        assert (got is None) == (want is None)
        if got is not None:
            assert is_automorphism(G, got) and preserves_coloring(colors, got)


def test_is_distinguishing_examples():
    assert is_distinguishing(cycle(5), [1, 2, 1, 2, 3])
    assert not is_distinguishing(complete(4), [1, 1, 2, 3])
    assert not is_distinguishing(cycle(6), [1, 2, 1, 2, 1, 2])


def test_injective_coloring_always_distinguishing():
    for seed in range(5):
        G = random_graph(7, 0.5, seed=300 + seed)
        assert is_distinguishing(G, list(range(7)))


def test_isomorphism_search():
    # relabeled Petersen-ish pair
    G = cycle_power(10, 2)
    perm = [3, 7, 1, 9, 0, 5, 2, 8, 4, 6]
    H = build_graph(10, [(perm[u], perm[v]) for u, v in G.edges()])
    phi = find_isomorphism(G, H)
    assert phi is not None
    for u, v in G.edges():
        assert H.has_edge(phi[u], phi[v])
    assert are_isomorphic(G, H)
    assert not are_isomorphic(cycle(6), cycle_power(6, 2))


def test_isomorphism_matches_brute_force():
    for seed in range(10):
        G = random_graph(6, 0.5, seed=400 + seed)
        H = random_graph(6, 0.5, seed=500 + seed)
        assert are_isomorphic(G, H) == brute_isomorphic(G, H)


def test_vertex_transitive_families_have_automorphisms():
    for G in (paley(PaleySpec(13)), cycle_power(9, 3), complete(6)):
        phi = find_nontrivial_automorphism(G)
        assert phi is not None and is_automorphism(G, phi)
