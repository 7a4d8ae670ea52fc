import itertools

import pytest

from halfmult.errors import BudgetError
from halfmult.f2 import (
    SymplecticSpace,
    build_cf_graph,
    count_isotropic_subspaces,
    enumerate_isotropic_subspaces,
    f2_rank,
    f2_span,
    pack_bits,
    symplectic_form,
    unpack_bits,
)
from halfmult.graphs import has_clique, independence_profile, max_clique_size


def test_pack_unpack_roundtrip():
    assert pack_bits((1, 0)) == 1
    assert pack_bits((0, 1)) == 2
    assert unpack_bits(pack_bits((1, 0, 1, 1)), 4) == (1, 0, 1, 1)
    with pytest.raises(ValueError):
        pack_bits((2,))


def test_symplectic_form_examples():
    sp = SymplecticSpace(2)
    assert symplectic_form(pack_bits((1, 0)), pack_bits((0, 1)), sp) == 1
    assert symplectic_form(pack_bits((0, 1)), pack_bits((1, 1)), sp) == 1
    for v in range(4):
        assert symplectic_form(v, v, sp) == 0


def test_symplectic_space_validation():
    with pytest.raises(ValueError):
        SymplecticSpace(3)
    with pytest.raises(ValueError):
        SymplecticSpace(0)
    sp = SymplecticSpace(4)
    with pytest.raises(ValueError):
        sp.form(16, 0)


@pytest.mark.parametrize("dim", [2, 4, 6, 8])
def test_form_alternating_bilinear_nondegenerate(dim):
    sp = SymplecticSpace(dim)
    size = 1 << dim
    for v in range(size):
        assert sp.form(v, v) == 0
    # bilinearity on a sample; symmetry comes with it over F2
    for u, v, w in [(1 % size, 2 % size, 3 % size), (5 % size, 9 % size, 12 % size), (size - 1, 3 % size, 7 % size)]:
        assert sp.form(u ^ v, w) == (sp.form(u, w) ^ sp.form(v, w))
        assert sp.form(u, v) == sp.form(v, u)
    for v in range(1, size):
        assert any(sp.form(v, w) == 1 for w in range(size)), f"degenerate at {v}"


def test_f2_rank_examples():
    assert f2_rank([]) == 0
    assert f2_rank([pack_bits((1, 0)), pack_bits((0, 1))]) == 2
    assert f2_rank([pack_bits((1, 1)), pack_bits((1, 1))]) == 1
    vecs = [pack_bits((1, 1, 0, 0)), pack_bits((0, 1, 1, 0)), pack_bits((1, 0, 1, 0))]
    assert f2_rank(vecs) == 2


@pytest.mark.parametrize("t", [4, 6, 8, 10, 12, 14, 16])
def test_ones_minus_identity_rank(t):
    # adjacency pattern forced on a t-clique; full rank for even t
    rows = [((1 << t) - 1) ^ (1 << i) for i in range(t)]
    assert f2_rank(rows) == t


def test_f2_span():
    basis = [0b01, 0b10]
    assert f2_span(basis) == [0, 1, 2, 3]
    assert f2_span([]) == [0]


def test_build_cf_graph_t4():
    g = build_cf_graph(4)
    assert g.n == 4
    assert g.edge_count == 3
    assert g.degree(0) == 0  # zero vector is isolated
    assert max_clique_size(g) == 3
    assert not has_clique(g, 4)
    assert independence_profile(g, 3).counts == (1, 4, 3, 0)


def test_build_cf_graph_t6():
    g = build_cf_graph(6)
    assert g.n == 16
    assert g.edge_count == 60
    assert all(g.degree(v) == 8 for v in range(1, 16))
    g.validate()


def test_build_cf_graph_validation():
    with pytest.raises(ValueError):
        build_cf_graph(5)
    with pytest.raises(ValueError):
        build_cf_graph(2)
    with pytest.raises(ValueError):
        build_cf_graph(18, budget=1 << 14)


@pytest.mark.parametrize("t", [4, 6, 8])
def test_cf_graph_clique_free(t):
    assert not has_clique(build_cf_graph(t), t)


def test_count_isotropic_examples():
    assert count_isotropic_subspaces(4, 0) == 1
    assert count_isotropic_subspaces(4, 1) == 3
    assert count_isotropic_subspaces(6, 1) == 15
    assert count_isotropic_subspaces(6, 2) == 15
    assert count_isotropic_subspaces(8, 3) == 135
    with pytest.raises(ValueError):
        count_isotropic_subspaces(4, 2)
    with pytest.raises(ValueError):
        count_isotropic_subspaces(6, -1)


@pytest.mark.parametrize("t", [4, 6, 8, 10])
def test_enumeration_matches_count(t):
    for k in range(t // 2):
        subs = enumerate_isotropic_subspaces(t, k)
        assert len(subs) == count_isotropic_subspaces(t, k)
        assert len(set(subs)) == len(subs)
        sp = SymplecticSpace(t - 2)
        for basis in subs[:20]:
            span = f2_span(basis)
            assert len(span) == 1 << k
            for u, v in itertools.combinations(span, 2):
                assert sp.form(u, v) == 0


def test_enumeration_budget_and_bad_k():
    with pytest.raises(BudgetError):
        enumerate_isotropic_subspaces(12, 1)
    with pytest.raises(ValueError):
        enumerate_isotropic_subspaces(4, 2)


@pytest.mark.parametrize("t", [4, 6, 8])
def test_maximal_independent_sets_span_isotropic(t):
    g = build_cf_graph(t)
    sp = SymplecticSpace(t - 2)
    for start in range(g.n):
        # greedy maximal independent set from each start vertex
        chosen = [start]
        for v in range(g.n):
            if v != start and all(not g.has_edge(v, u) for u in chosen):
                chosen.append(v)
        span = f2_span(chosen)
        for u, v in itertools.combinations(span, 2):
            assert sp.form(u, v) == 0
        assert len(span) <= 1 << (t // 2 - 1)
