import random
from fractions import Fraction

import pytest

from halfmult.errors import BudgetError
from halfmult.graphs import complete, cycle, edgeless, from_edges, sample_er_graph
from halfmult.prob import exact_independence_prob, mc_independence_prob, stirling2

from conftest import oracle_independence_prob


def test_stirling_examples():
    assert stirling2(3, 2) == 3
    assert stirling2(4, 2) == 7
    assert stirling2(5, 3) == 25
    for s in range(1, 12):
        assert stirling2(s, s) == 1
        assert stirling2(s, 1) == 1
    assert stirling2(3, 5) == 0
    assert stirling2(0, 0) == 1
    with pytest.raises(ValueError):
        stirling2(-1, 0)


def test_stirling_row_sums_are_bell_numbers():
    bell = [1, 1, 2, 5, 15, 52, 203, 877]
    for s, b in enumerate(bell):
        assert sum(stirling2(s, k) for k in range(s + 1)) == b


def test_exact_prob_paper_values():
    assert exact_independence_prob(complete(2), 3) == Fraction(1, 4)
    assert exact_independence_prob(complete(3), 2) == Fraction(1, 3)
    assert exact_independence_prob(cycle(5), 3) == Fraction(7, 25)
    for s in range(1, 5):
        assert exact_independence_prob(edgeless(6), s) == 1


def test_exact_prob_rejects_bad_input():
    with pytest.raises(ValueError):
        exact_independence_prob(complete(3), 0)
    with pytest.raises(BudgetError):
        exact_independence_prob(edgeless(65), 2)


def test_exact_prob_matches_tuple_oracle():
    rng = random.Random(314159)
    for _ in range(60):
        n = rng.randint(1, 8)
        s = rng.randint(1, 5)
        g = sample_er_graph(n, rng.random(), rng.getrandbits(32))
        assert exact_independence_prob(g, s) == oracle_independence_prob(g, s)


def test_exact_prob_matches_subset_identity_up_to_n20():
    # independent route: count independent k-subsets by direct combination
    # scan, then reassemble the with-replacement probability
    import itertools
    import math

    from halfmult.prob import stirling2

    for n, seed in [(12, 0), (16, 1), (20, 2)]:
        g = sample_er_graph(n, 0.5, seed)
        s = 4
        total = 0
        for k in range(1, s + 1):
            count = sum(
                1
                for combo in itertools.combinations(range(n), k)
                if all(not g.has_edge(u, v) for u, v in itertools.combinations(combo, 2))
            )
            total += count * math.factorial(k) * stirling2(s, k)
        assert exact_independence_prob(g, s) == Fraction(total, n**s)


def test_exact_prob_monotone_in_edges():
    rng = random.Random(2718)
    for _ in range(30):
        n = rng.randint(2, 10)
        s = rng.randint(1, 5)
        g = sample_er_graph(n, 0.4, rng.getrandbits(32))
        non_edges = [(u, v) for u in range(n) for v in range(u + 1, n) if not g.has_edge(u, v)]
        if not non_edges:
            continue
        u, v = rng.choice(non_edges)
        edges = [(a, b) for a in range(n) for b in range(a + 1, n) if g.has_edge(a, b)]
        g2 = from_edges(n, edges + [(u, v)])
        assert exact_independence_prob(g2, s) <= exact_independence_prob(g, s)


def test_exact_prob_monotone_in_s():
    rng = random.Random(1618)
    for _ in range(20):
        n = rng.randint(1, 10)
        g = sample_er_graph(n, rng.random(), rng.getrandbits(32))
        values = [exact_independence_prob(g, s) for s in range(1, 7)]
        assert all(a >= b for a, b in zip(values, values[1:]))


def test_mc_edgeless_is_exactly_one():
    est = mc_independence_prob(edgeless(9), 4, 1000, 77)
    assert est.estimate == 1.0
    assert est.std_error == 0.0


def test_mc_deterministic_for_fixed_seed():
    a = mc_independence_prob(cycle(5), 3, 20_000, 42)
    b = mc_independence_prob(cycle(5), 3, 20_000, 42)
    assert a == b
    c = mc_independence_prob(cycle(5), 3, 20_000, 43)
    assert a.estimate != c.estimate or a.seed != c.seed


def test_mc_close_to_exact():
    exact = float(exact_independence_prob(complete(2), 3))
    est = mc_independence_prob(complete(2), 3, 1_000_000, 1)
    assert abs(est.estimate - exact) <= 4 * est.std_error
    exact5 = float(exact_independence_prob(cycle(5), 3))
    est5 = mc_independence_prob(cycle(5), 3, 1_000_000, 2)
    assert abs(est5.estimate - exact5) <= 4 * est5.std_error


def test_mc_calibration_sample():
    # fuller 200-run version runs in the acceptance suite
    exact = float(exact_independence_prob(cycle(5), 3))
    misses = 0
    for seed in range(40):
        est = mc_independence_prob(cycle(5), 3, 20_000, seed)
        if abs(est.estimate - exact) > 4 * est.std_error:
            misses += 1
    assert misses <= 1


def test_mc_validates_input():
    with pytest.raises(ValueError):
        mc_independence_prob(cycle(5), 0, 10, 0)
    with pytest.raises(ValueError):
        mc_independence_prob(cycle(5), 3, 0, 0)
