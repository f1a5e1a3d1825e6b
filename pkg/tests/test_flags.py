from fractions import Fraction

import pytest

from poscodeg.constructions import fano_complement, instantiate_blowup, named_construction
from poscodeg.enumeration import ForbiddenSpec
from poscodeg.flags import (
    Flag,
    FlagType,
    basis_family,
    codegree_pair_values,
    density_vector,
    direct_product_density,
    edge_flag,
    flag_density,
    generate_flags,
    non_edge_flag,
    pos_codegree_constraint,
    product_expansion,
    product_matrix_in,
    unit_flag,
)
from poscodeg.hypergraph import HypergraphError, RGraph

from conftest import random_graph


def test_flag_normalisation_is_label_preserving():
    a = Flag(RGraph(3, 4, [(0, 1, 3)]), (0, 1))
    b = Flag(RGraph(3, 4, [(0, 1, 2)]), (0, 1))
    c = Flag(RGraph(3, 4, [(0, 2, 3)]), (0, 1))
    assert a == b and a != c
    with pytest.raises(HypergraphError):
        Flag(RGraph(3, 3), (0, 0))


def test_flag_counts():
    assert len(generate_flags(FlagType.empty(2), 3)) == 2
    assert len(generate_flags(FlagType.empty(1), 3)) == 2
    K4 = ForbiddenSpec.of([named_construction("K4")])
    assert len(generate_flags(FlagType.empty(0), 4, K4)) == 4


def test_flag_densities():
    E = edge_flag()
    assert flag_density(E, named_construction("K4"), (2, 3)) == 1
    K4m = named_construction("K4minus")
    low = [p for p in [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)] if len(K4m.neighborhood(p)) == 1]
    assert low and all(flag_density(E, K4m, p) == Fraction(1, 2) for p in low)
    B = instantiate_blowup(fano_complement(), [2] * 7)
    assert flag_density(E, B, (0, 2)) == Fraction(2, 3)


def test_flag_density_rejects_wrong_type():
    f = Flag(RGraph(3, 4, [(0, 1, 2)]), (0, 1, 2))
    with pytest.raises(HypergraphError):
        flag_density(f, RGraph(3, 5), (0, 1, 2))


def test_edge_product_on_k4():
    b4 = basis_family(4)
    E, N = edge_flag(), non_edge_flag()
    ix = b4.index_of(named_construction("K4"))
    assert product_expansion(E, E, 4, b4)[ix] == 1
    assert product_expansion(N, N, 4, b4)[ix] == 0
    with pytest.raises(HypergraphError):
        product_expansion(E, E, 3, basis_family(3))


def test_product_matrices_are_symmetric():
    fl = generate_flags(FlagType.empty(2), 4)
    for H in basis_family(6)[::97]:
        M = product_matrix_in(H, fl, RGraph(3, 2))
        assert all(M[i][j] == M[j][i] for i in range(len(fl)) for j in range(len(fl)))


def test_unit_products_are_flag_densities(rng):
    # E times the unit is the averaged edge flag
    b5 = basis_family(5)
    E = edge_flag()
    coeffs = product_expansion(E, unit_flag(E.type), 5, b5)
    for _ in range(10):
        G = random_graph(rng, 7)
        pairs = [(u, v) for u in range(7) for v in range(7) if u != v]
        avg = sum((flag_density(E, G, p) for p in pairs), Fraction(0)) / len(pairs)
        assert density_vector(G, b5).dot(coeffs) == avg


def test_density_vector_normalised(rng):
    b = basis_family(4)
    for _ in range(5):
        assert density_vector(random_graph(rng, 6), b).total() == 1
    J4 = named_construction("Jk:4")
    adm = basis_family(5, ForbiddenSpec.of([J4]))
    with pytest.raises(HypergraphError):
        density_vector(J4, adm)


def test_direct_product_matches_expansion_on_five_vertices():
    b = basis_family(5)
    E = edge_flag()
    t1 = FlagType.empty(1)
    f = generate_flags(t1, 3)
    pe = product_expansion(f[0], f[1], 5, b)
    for H in b:
        assert density_vector(H, b).dot(pe) == direct_product_density(f[0], f[1], H)
    pe = product_expansion(E, non_edge_flag(), 5, b)
    for H in b[::5]:
        assert density_vector(H, b).dot(pe) == direct_product_density(E, non_edge_flag(), H)


def test_pair_values():
    B = instantiate_blowup(fano_complement(), [2] * 7)
    vals = codegree_pair_values(B, 4, 7)
    cross = [v for (a, b), v in vals.items() if a // 2 != b // 2]
    inside = [v for (a, b), v in vals.items() if a // 2 == b // 2]
    assert set(cross) == {Fraction(4, 9)} and set(inside) == {0}
    # co-degree zero makes the value vanish whatever the threshold
    assert codegree_pair_values(RGraph(3, 4, [(0, 1, 2)]), 4, 7)[(0, 3)] == 0
    with pytest.raises(HypergraphError):
        codegree_pair_values(B, 8, 7)


def test_zero_threshold_constraint_is_q_times_square():
    b4 = basis_family(4)
    E = edge_flag()
    assert pos_codegree_constraint(0, 3, 4, b4) == tuple(3 * x for x in product_expansion(E, E, 4, b4))
    with pytest.raises(HypergraphError):
        pos_codegree_constraint(4, 7, 3, basis_family(3))
