import json

import pytest

from poscodeg.enumeration import Family
from poscodeg.hypergraph import RGraph
from poscodeg.patterns import (
    Pattern,
    SuiteError,
    check_case_suite,
    family_excludes_pattern,
    find_pattern_embeddings,
    fixture_dir,
    load_suite,
    parse_suite,
    partition_case_pattern,
)


def test_pattern_validation():
    with pytest.raises(SuiteError):
        Pattern(3, [(0, 1, 2)], [(0, 1, 2)])
    p = Pattern.from_json({"labels": ["a", "b", "c", "d"], "required": [["a", "b", "c"]], "forbidden": [["a", "b", "d"]]})
    assert p.required == ((0, 1, 2),) and p.forbidden == ((0, 1, 3),)


def test_embeddings_respect_required_and_forbidden():
    H = RGraph(3, 4, [(0, 1, 2)])
    p = Pattern(3, [(0, 1, 2)], [])
    assert len(find_pattern_embeddings(H, p)) == 6
    q = Pattern(4, [(0, 1, 2)], [(0, 1, 3)])
    assert all(phi[3] == 3 for phi in find_pattern_embeddings(H, q))
    verdict = family_excludes_pattern([H], Pattern(4, [(0, 1, 2), (0, 1, 3)], []))
    assert verdict.excluded


def _fano_family():
    data = json.loads((fixture_dir() / "fano-complement-family.json").read_text())
    base = data["base"]
    return Family.from_json(data), RGraph(3, base["n"], base["edges"])


# (case vertices with 0-based classes, violating triple, violation is an edge, classes proven)
J4_CASES = {
    1: ([("x1", 0), ("x2", 1), ("x3", 2), ("a", 2), ("b", 2), ("c", 3)], ("a", "b", "c"), True, False),
    2: ([("x1", 0), ("x2", 1), ("x3", 2), ("x4", 3), ("b", 2), ("c", 3)], ("x3", "b", "c"), True, False),
    3: ([("x2", 1), ("x3", 2), ("x4", 3), ("a", 0), ("b", 3), ("c", 6)], ("a", "b", "c"), True, True),
    4: ([("x1", 0), ("x2", 1), ("x3", 2), ("a", 4), ("b", 5), ("c", 6)], ("a", "b", "c"), True, True),
    5: ([("x2", 1), ("x3", 2), ("x4", 3), ("a", 0), ("b", 1), ("c", 2)], ("a", "b", "c"), False, True),
    6: ([("x2", 1), ("x3", 2), ("x4", 3), ("a", 0), ("b", 1), ("c", 5)], ("a", "b", "c"), False, True),
    7: ([("x2", 1), ("x3", 2), ("x4", 3), ("a", 0), ("b", 4), ("c", 5)], ("a", "b", "c"), False, True),
}


def _triples(p: Pattern, edges):
    return {frozenset(p.label(v) for v in e) for e in edges}


def test_j4_patterns_follow_partition_rule():
    fam, base = _fano_family()
    suite = load_suite(fixture_dir() / "j4-claims.json")
    for idx, (window, viol, is_edge, proven) in J4_CASES.items():
        shown = suite.entries[idx].pattern
        forced = partition_case_pattern(base, [0, 1, 2, 3], window, viol, is_edge, proven)
        assert _triples(shown, shown.required) <= _triples(forced, forced.required), idx
        assert _triples(shown, shown.forbidden) <= _triples(forced, forced.forbidden), idx
        assert family_excludes_pattern(fam, forced).excluded, idx


def test_partition_rule_rejects_determined_violation():
    _, base = _fano_family()
    with pytest.raises(SuiteError):
        partition_case_pattern(base, [0, 1, 2], [("x1", 0), ("x2", 1), ("x3", 2)], ("x1", "x2", "x3"), True)


def test_suite_reports_failures():
    data = {
        "name": "t",
        "families": {"f": {"named": ["K4"]}},
        "entries": [
            {"name": "edge fits", "family": "f", "expect": "excluded",
             "pattern": {"labels": ["a", "b", "c"], "required": [["a", "b", "c"]]}},
            {"name": "locate", "family": "f", "expect": {"locate": "K4"},
             "pattern": {"labels": list("abcd"), "required": [list("abc"), list("abd"), list("acd"), list("bcd")]}},
        ],
    }
    report = check_case_suite(parse_suite(data))
    assert report.failures == 1
    assert report.results[1].passed


def test_malformed_suite():
    with pytest.raises(SuiteError):
        parse_suite({"families": {}, "entries": [{"name": "x"}]})
    with pytest.raises(SuiteError):
        parse_suite({"families": {"f": {"what": 1}}, "entries": []})
