from fractions import Fraction

import pytest

from poscodeg.constructions import (
    WeightedBlowup,
    blowup_mpcd_fraction,
    catalog,
    daisy_star,
    fano,
    fano_complement,
    instantiate_blowup,
    integer_class_sizes,
    named_construction,
    optimize_blowup_weights,
    parse_weights,
    tight_cycle,
    tight_cycle_minus,
)
from poscodeg.hypergraph import HypergraphError, RGraph, is_isomorphic, min_pos_codegree


def test_catalog_graphs_have_expected_sizes():
    sizes = {"K4": (4, 4), "K4minus": (4, 3), "K5": (5, 10), "F32": (5, 4), "F42": (6, 7),
             "F33": (6, 10), "F5": (5, 3), "Fano": (7, 7), "FanoComplement": (7, 28)}
    for name, (n, m) in sizes.items():
        G = named_construction(name)
        assert (G.n, G.m) == (n, m), name
    assert "Jk:k" in catalog()


def test_parametrised_constructions():
    assert named_construction("Jk:4") == daisy_star(4)
    assert daisy_star(4).m == 6
    assert tight_cycle(5).m == 5 and tight_cycle_minus(5).m == 4
    assert named_construction("K:5:3") == named_construction("K5")
    assert named_construction("Tr:2").r == 2
    with pytest.raises(HypergraphError):
        named_construction("Nope")
    with pytest.raises(HypergraphError):
        named_construction("Jk:x")


def test_fano_complement_is_complement_of_fano():
    assert is_isomorphic(fano_complement(), fano().complement())
    # every pair lies in exactly one Fano line
    assert all(len(fano().neighborhood(p)) == 1 for p in [(0, 1), (2, 5), (3, 6)])


def test_weighted_blowup_validation():
    K4 = named_construction("K4")
    with pytest.raises(HypergraphError):
        WeightedBlowup(K4, [Fraction(1, 2)] * 4)
    with pytest.raises(HypergraphError):
        WeightedBlowup(K4, [Fraction(1), Fraction(1), Fraction(-1), Fraction(0)])
    assert WeightedBlowup.balanced(K4).weights == (Fraction(1, 4),) * 4


def test_blowup_fraction_of_balanced_k4():
    # a pair inside K4 sees the two other classes
    assert blowup_mpcd_fraction(WeightedBlowup.balanced(named_construction("K4"))) == Fraction(1, 2)


def test_optimize_weights_t3():
    res = optimize_blowup_weights(named_construction("Tr:3"))
    assert res.value == Fraction(2, 5)
    assert res.weights == (Fraction(1, 5), Fraction(1, 5), Fraction(1, 5), Fraction(2, 5))
    assert res.face_dimension == 0


def test_optimize_rejects_edgeless_base():
    with pytest.raises(HypergraphError):
        optimize_blowup_weights(RGraph(3, 4))


def test_instantiated_blowup_matches_fraction():
    base = named_construction("K4minus")
    # vertex 0 is the centre of K4minus; doubling it gives co-degree 2
    G = instantiate_blowup(base, [2, 1, 1, 1])
    assert G.n == 5 and min_pos_codegree(G) == 2


def test_integer_sizes_and_weights_parsing():
    J = named_construction("Jk:4")
    b = WeightedBlowup(J, optimize_blowup_weights(J).weights)
    assert integer_class_sizes(b, 8) == (4, 1, 1, 1, 1)
    assert sum(integer_class_sizes(b, 13)) == 13
    assert parse_weights("1/2, 1/4 1/4") == [Fraction(1, 2), Fraction(1, 4), Fraction(1, 4)]
    with pytest.raises(HypergraphError):
        integer_class_sizes(b, 3)
