import random

import pytest

from halfmult.errors import BudgetError
from halfmult.graphs import (
    Graph,
    complement,
    complete,
    cycle,
    edgeless,
    find_clique,
    from_edges,
    from_graph6,
    has_clique,
    independence_profile,
    max_clique_size,
    sample_er_graph,
    to_graph6,
)

from conftest import oracle_independent_subset_counts, oracle_max_clique


def test_complete_and_cycle_shapes():
    k5 = complete(5)
    assert k5.edge_count == 10
    c5 = cycle(5)
    assert c5.edge_count == 5
    assert all(c5.degree(v) == 2 for v in range(5))
    k5.validate()
    c5.validate()


def test_from_edges_rejects_bad_input():
    with pytest.raises(ValueError):
        from_edges(3, [(0, 0)])
    with pytest.raises(ValueError):
        from_edges(3, [(0, 5)])


def test_complement_involution_and_known_cases():
    assert complement(complete(6)) == edgeless(6)
    assert complement(edgeless(6)) == complete(6)
    c5 = cycle(5)
    assert complement(c5).edge_count == 5  # C(5,2) - 5
    assert complement(complement(c5)) == c5


def test_sample_er_graph_extremes():
    assert sample_er_graph(10, 0.0, 123) == edgeless(10)
    assert sample_er_graph(10, 1.0, 123) == complete(10)
    with pytest.raises(ValueError):
        sample_er_graph(10, 1.5, 0)
    with pytest.raises(ValueError):
        sample_er_graph(0, 0.5, 0)


def test_sample_er_graph_deterministic_and_symmetric():
    a = sample_er_graph(25, 0.37, 999)
    b = sample_er_graph(25, 0.37, 999)
    assert a == b
    a.validate()
    assert a != sample_er_graph(25, 0.37, 1000)


def test_sample_er_graph_edge_count_statistics():
    # binomial(435, 1/2): mean 217.5, sd ~10.43; 100-seed mean within 4 sd
    n, pairs = 30, 435
    counts = [sample_er_graph(n, 0.5, seed).edge_count for seed in range(100)]
    mean = sum(counts) / len(counts)
    sd_mean = (pairs * 0.25) ** 0.5 / 10.0
    assert abs(mean - 217.5) < 4 * sd_mean
    assert all(abs(c - 217.5) < 4 * (pairs * 0.25) ** 0.5 for c in counts)


def test_has_clique_known_cases():
    assert has_clique(complete(5), 5)
    assert not has_clique(cycle(5), 3)
    assert has_clique(cycle(5), 2)
    assert max_clique_size(edgeless(7)) == 1
    assert max_clique_size(cycle(5)) == 2
    assert max_clique_size(complete(9)) == 9


def test_find_clique_witness_is_valid():
    g = from_edges(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 2), (3, 2)])
    w = find_clique(g, 3)
    assert w is not None and len(w) == 3
    for i in range(3):
        for j in range(i + 1, 3):
            assert g.has_edge(w[i], w[j])
    assert find_clique(g, 4) is None


def test_clique_search_matches_oracle_on_random_graphs():
    rng = random.Random(20240817)
    for _ in range(40):
        n = rng.randint(1, 9)
        p = rng.random()
        g = sample_er_graph(n, p, rng.getrandbits(32))
        w = oracle_max_clique(g)
        assert max_clique_size(g) == w
        for t in range(1, n + 2):
            assert has_clique(g, t) == (w >= t)


def test_clique_search_matches_oracle_n12():
    for seed in range(5):
        g = sample_er_graph(12, 0.5, seed)
        assert max_clique_size(g) == oracle_max_clique(g)


def test_independence_profile_known_values():
    assert independence_profile(complete(3), 3).counts == (1, 3, 0, 0)
    assert independence_profile(cycle(5), 3).counts == (1, 5, 5, 0)
    k = edgeless(5)
    prof = independence_profile(k, 5)
    assert prof.counts == (1, 5, 10, 10, 5, 1)


def test_independence_profile_matches_subset_oracle():
    rng = random.Random(7)
    for _ in range(25):
        n = rng.randint(1, 9)
        g = sample_er_graph(n, rng.random(), rng.getrandbits(32))
        kmax = min(n, 5)
        assert list(independence_profile(g, kmax).counts) == oracle_independent_subset_counts(g, kmax)


def test_independence_profile_hereditary_and_budget():
    g = sample_er_graph(10, 0.6, 5)
    prof = independence_profile(g, 10)
    assert prof[0] == 1 and prof[1] == g.n
    assert sum(prof.counts) <= 2**g.n
    seen_zero = False
    for k in range(1, 11):
        if prof[k] == 0:
            seen_zero = True
        if seen_zero:
            assert prof[k] == 0
    import math

    for k in range(6):
        assert independence_profile(edgeless(5), 5)[k] == math.comb(5, k)
    with pytest.raises(BudgetError):
        independence_profile(edgeless(65), 2)
    independence_profile(edgeless(65), 2, budget=65)


def test_graph6_roundtrip_small_and_large():
    rng = random.Random(99)
    for _ in range(30):
        n = rng.randint(1, 20)
        g = sample_er_graph(n, rng.random(), rng.getrandbits(32))
        assert from_graph6(to_graph6(g)) == g
    big = sample_er_graph(70, 0.1, 3)  # exercises the 3-byte size field
    assert from_graph6(to_graph6(big)) == big


def test_graph6_matches_networkx():
    nx = pytest.importorskip("networkx")
    rng = random.Random(5)
    for _ in range(20):
        n = rng.randint(1, 15)
        g = sample_er_graph(n, rng.random(), rng.getrandbits(32))
        ours = to_graph6(g)
        h = nx.Graph()
        h.add_nodes_from(range(n))
        for u in range(n):
            for v in range(u + 1, n):
                if g.has_edge(u, v):
                    h.add_edge(u, v)
        theirs = nx.to_graph6_bytes(h, header=False).decode().strip()
        assert ours == theirs
        back = from_graph6(theirs)
        assert back == g


def test_graph6_rejects_malformed():
    with pytest.raises(ValueError):
        from_graph6("")
    with pytest.raises(ValueError):
        from_graph6("D")  # body too short for n=5
