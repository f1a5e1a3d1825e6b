import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from poscodeg.lp import Infeasible, Unbounded, lexmin_optimal, rank, solve_lp


def _solve_square(rows, rhs):
    n = len(rows)
    M = [list(map(Fraction, r)) + [Fraction(b)] for r, b in zip(rows, rhs)]
    for c in range(n):
        p = next((i for i in range(c, n) if M[i][c]), None)
        if p is None:
            return None
        M[c], M[p] = M[p], M[c]
        for i in range(n):
            if i != c and M[i][c]:
                f = M[i][c] / M[c][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[c])]
    return [M[i][n] / M[i][i] for i in range(n)]


def vertex_optimum(c, A, b):
    """Best objective over all basic feasible points of {Ax <= b, x >= 0}."""
    n = len(c)
    rows = [list(r) for r in A] + [[-1 if j == i else 0 for j in range(n)] for i in range(n)]
    rhs = list(b) + [0] * n
    best = None
    for S in itertools.combinations(range(len(rows)), n):
        x = _solve_square([rows[i] for i in S], [rhs[i] for i in S])
        if x is None:
            continue
        if all(sum(a * v for a, v in zip(r, x)) <= q for r, q in zip(rows, rhs)):
            val = sum(a * v for a, v in zip(c, x))
            best = val if best is None else max(best, val)
    return best


coef = st.integers(min_value=-4, max_value=4)


@settings(max_examples=80, deadline=None)
@given(st.lists(coef, min_size=2, max_size=2),
       st.lists(st.lists(st.integers(min_value=0, max_value=4), min_size=2, max_size=2), min_size=1, max_size=4),
       st.lists(st.integers(min_value=0, max_value=6), min_size=4, max_size=4))
def test_bounded_lp_matches_vertex_enumeration(c, A, b):
    # box constraints keep it bounded and feasible
    A = A + [[1, 0], [0, 1]]
    b = b[: len(A) - 2] + [5, 5]
    res = solve_lp(c, A, b)
    assert res.value == vertex_optimum(c, A, b)
    assert all(x >= 0 for x in res.x)
    assert all(sum(a * x for a, x in zip(r, res.x)) <= q for r, q in zip(A, b))


def test_infeasible_and_unbounded():
    with pytest.raises(Infeasible):
        solve_lp([1], [[1]], [-1])
    with pytest.raises(Unbounded):
        solve_lp([1, 0], [[0, 1]], [1])


def test_equalities_and_exact_value():
    res = solve_lp([1, 1], [[3, 1]], [2], [[1, -1]], [0])
    assert res.value == Fraction(1) and res.x == (Fraction(1, 2), Fraction(1, 2))


def test_lexmin_breaks_ties():
    # maximise x + y on x + y <= 1: every split is optimal, lexmin picks x = 0
    res = lexmin_optimal([1, 1], [[1, 1]], [1], order=[0, 1])
    assert res.x == (0, 1)
    res = lexmin_optimal([1, 1], [[1, 1]], [1], order=[1, 0])
    assert res.x == (1, 0)


def test_rank():
    assert rank([[1, 2], [2, 4]]) == 1
    assert rank([[1, 0, 1], [0, 1, 1], [1, 1, 2]]) == 2
    assert rank([]) == 0
