from math import ceil

import pytest

from poscodeg.constructions import instantiate_blowup, named_construction
from poscodeg.enumeration import ForbiddenSpec, enumerate_up_to_iso
from poscodeg.extremal import co_plus_ex_exact, graphs_with_min_pos_codegree, naive_oracle
from poscodeg.hypergraph import HypergraphError, RGraph, is_isomorphic, min_pos_codegree


def spec(*names):
    return ForbiddenSpec.of([named_construction(n) for n in names])


def test_single_edge_forbidden():
    assert co_plus_ex_exact(5, ForbiddenSpec.of([RGraph(3, 3, [(0, 1, 2)])])).value == 0


def test_k4_free_four_vertices():
    res = co_plus_ex_exact(4, spec("K4"))
    assert res.value == 1
    assert any(is_isomorphic(W, named_construction("K4minus")) for W in res.witnesses)
    assert naive_oracle(3).value == 1


def test_oracle_limit():
    with pytest.raises(HypergraphError):
        naive_oracle(6)


def test_lower_bounds_from_blowups():
    # every blow-up of K4minus avoids {K4, F32, J4}; blow-ups of K5 avoid F42 here
    G = instantiate_blowup(named_construction("K4minus"), [2, 1, 1, 1])
    assert co_plus_ex_exact(5, spec("K4", "F32", "Jk:4")).value >= min_pos_codegree(G) == 2
    assert co_plus_ex_exact(5, spec("F42")).value >= min_pos_codegree(named_construction("K5"))


def test_parallel_search_is_identical():
    s = spec("K4")
    assert co_plus_ex_exact(5, s, jobs=2) == co_plus_ex_exact(5, s)


def test_witnesses_attain_value():
    res = co_plus_ex_exact(6, spec("K4", "F32", "Jk:4"))
    assert res.witnesses and all(min_pos_codegree(W) == res.value for W in res.witnesses)


@pytest.mark.parametrize("n", [4, 5, 6])
def test_threshold_generator_agrees_with_enumeration(n):
    t = ceil(4 * (n - 2) / 7)
    direct = [G for G in enumerate_up_to_iso(n, 3) if not G.m or min_pos_codegree(G) >= t]
    assert graphs_with_min_pos_codegree(n, t) == sorted(direct, key=lambda G: (G.n, G.m, G.edges))
