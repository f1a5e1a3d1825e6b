import itertools

import pytest
from hypothesis import given, settings, strategies as st

from poscodeg.constructions import named_construction, tight_cycle_minus
from poscodeg.hypergraph import (
    GammaRegion,
    HypergraphError,
    RGraph,
    canonical_form,
    canonical_labeling,
    classify_gamma_region,
    codegree,
    exists_embedding,
    exists_homomorphism,
    induced_count,
    induced_density,
    is_isomorphic,
    is_r_partite,
    iter_embeddings,
    link_graph,
    min_pos_codegree,
    positive_codegrees,
    single_edge,
    subgraph_density,
    suspension,
    triangle,
)


@st.composite
def graphs(draw, max_n=6, r=3):
    n = draw(st.integers(min_value=r, max_value=max_n))
    triples = list(itertools.combinations(range(n), r))
    mask = draw(st.lists(st.booleans(), min_size=len(triples), max_size=len(triples)))
    return RGraph(r, n, [t for t, b in zip(triples, mask) if b])


def test_rgraph_validates_edges():
    with pytest.raises(HypergraphError):
        RGraph(3, 3, [(0, 1)])
    with pytest.raises(HypergraphError):
        RGraph(3, 3, [(0, 1, 3)])
    with pytest.raises(HypergraphError):
        RGraph(3, 3, [(0, 0, 1)])


def test_codegrees_of_k4_minus():
    H = named_construction("K4minus")
    assert codegree(H, (0, 1)) == 2
    assert codegree(H, (2, 3)) == 1
    assert min_pos_codegree(H) == 1
    assert min_pos_codegree(RGraph(3, 5)) == 0


def test_jk4_pairs_among_leaves_have_codegree_one():
    J = named_construction("Jk:4")
    assert min_pos_codegree(J) == 1
    cd = positive_codegrees(J)
    assert all(d == 1 for s, d in cd.items() if 0 not in s)
    assert all(d == 3 for s, d in cd.items() if 0 in s)


def test_codegree_rejects_wrong_set_size():
    with pytest.raises(HypergraphError):
        codegree(named_construction("K4"), (0,))


def test_link_and_suspension():
    K4 = named_construction("K4")
    L = link_graph(K4, 0)
    assert L.r == 2 and L.n == 3 and L.m == 3
    S = suspension(RGraph(2, 3, [(0, 1), (1, 2)]))
    assert S.r == 3 and S.n == 4 and S.edges == ((0, 1, 3), (1, 2, 3))


@settings(max_examples=60, deadline=None)
@given(graphs(), st.randoms(use_true_random=False))
def test_canonical_form_is_relabel_invariant(G, rnd):
    perm = list(range(G.n))
    rnd.shuffle(perm)
    H = G.relabel(perm)
    assert canonical_form(G) == canonical_form(H)
    C, lab = canonical_labeling(H)
    assert H.relabel(lab) == C


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=5), graphs(max_n=5))
def test_isomorphism_matches_brute_force(G, H):
    brute = G.n == H.n and G.m == H.m and any(G.relabel(p) == H for p in itertools.permutations(range(G.n)))
    assert is_isomorphic(G, H) == brute


def test_canonical_labeling_with_fixed_prefix_keeps_labels():
    G = RGraph(3, 4, [(0, 1, 2)])
    C, lab = canonical_labeling(G, fixed=(3, 0))
    assert lab[3] == 0 and lab[0] == 1


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=4), graphs(max_n=6))
def test_embeddings_are_valid(F, H):
    for phi in itertools.islice(iter_embeddings(F, H), 20):
        assert len(set(phi)) == F.n
        assert all(H.has_edge(phi[u] for u in e) for e in F.edges)
    phi = exists_embedding(F, H, induced=True)
    if phi is not None:
        assert induced_subgraph_edges(H, phi) == len(F.edges)


def induced_subgraph_edges(H, phi):
    S = set(phi)
    return sum(1 for e in H.edges if S.issuperset(e))


def test_homomorphism_and_blowups():
    assert exists_homomorphism(named_construction("F1"), named_construction("K4minus")) is None
    assert exists_homomorphism(named_construction("K4minus"), named_construction("K4")) is not None


def test_densities():
    K4 = named_construction("K4")
    K5 = named_construction("K5")
    E = single_edge(3)
    assert induced_density(K4, K5) == 1
    assert induced_count(E, named_construction("K4minus")) == 3
    assert subgraph_density(E, K4) == 1
    assert induced_density(RGraph(3, 3), K4) == 0


def test_gamma_regions():
    assert classify_gamma_region(single_edge(3)) is GammaRegion.ZERO
    assert classify_gamma_region(named_construction("K4")) is GammaRegion.AT_LEAST_TWO_OVER_2R_MINUS_1
    assert classify_gamma_region(triangle(3)) is GammaRegion.ONE_OVER_R
    assert is_r_partite(tight_cycle_minus(6))
    assert classify_gamma_region([named_construction("K4"), single_edge(3)]) is GammaRegion.ZERO
