import itertools

import pytest
from hypothesis import given, settings, strategies as st

from poscodeg.graphio import GraphFormatError, format_graph, format_graphs, graph_from_json, graph_to_json, parse_graph, parse_graphs
from poscodeg.hypergraph import RGraph


@st.composite
def graphs(draw):
    r = draw(st.integers(min_value=2, max_value=4))
    n = draw(st.integers(min_value=0, max_value=6))
    sets = list(itertools.combinations(range(n), r))
    keep = draw(st.lists(st.booleans(), min_size=len(sets), max_size=len(sets)))
    return RGraph(r, n, [s for s, k in zip(sets, keep) if k])


@settings(max_examples=60, deadline=None)
@given(st.lists(graphs(), max_size=4))
def test_text_round_trip(gs):
    assert parse_graphs(format_graphs(gs, [f"g{i}" for i in range(len(gs))])) == gs


@settings(max_examples=30, deadline=None)
@given(graphs())
def test_json_round_trip(G):
    assert graph_from_json(graph_to_json(G)) == G


def test_format_is_stable():
    assert format_graph(RGraph(3, 4, [(0, 1, 2)])) == "3 4 1\n0 1 2\n"


@pytest.mark.parametrize("text", [
    "3 4 2\n0 1 2\n",          # missing edge
    "3 4 1\n0 1\n",            # wrong arity
    "3 4 1\n0 1 x\n",          # not an integer
    "3 4 2\n0 1 2\n2 1 0\n",  # duplicate edge
    "3 4\n",                   # bad header
    "3 4 1\n0 1 7\n",          # vertex out of range
])
def test_malformed_input(text):
    with pytest.raises(GraphFormatError):
        parse_graphs(text)


def test_parse_graph_requires_one():
    with pytest.raises(GraphFormatError):
        parse_graph("")
    assert parse_graph("# c\n3 3 1\n0 1 2\n").m == 1
