"""Exact rational linear programming.

A dense two-phase tableau simplex over :class:`fractions.Fraction` with
Bland's rule, so it terminates on degenerate problems.  Problems here are
tiny (tens of rows), so clarity wins over sparse bookkeeping.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

Number = int | Fraction


class LPError(ArithmeticError):
    pass


class Infeasible(LPError):
    pass


class Unbounded(LPError):
    pass


@dataclass(frozen=True)
class LPResult:
    x: tuple[Fraction, ...]
    value: Fraction


def _pivot(T: list[list[Fraction]], basis: list[int], row: int, col: int) -> None:
    pr = T[row]
    p = pr[col]
    if p != 1:
        T[row] = pr = [v / p for v in pr]
    nz = [j for j, v in enumerate(pr) if v]
    for i, r in enumerate(T):
        if i != row:
            f = r[col]
            if f:
                for j in nz:
                    r[j] -= f * pr[j]
    basis[row] = col


def _simplex(T: list[list[Fraction]], basis: list[int], allowed: int) -> None:
    # Last row holds reduced costs of a maximisation (positive = improving),
    # last column the right-hand side.  Columns >= allowed never enter.
    obj = len(T) - 1
    while True:
        col = next((j for j in range(allowed) if T[obj][j] > 0), None)
        if col is None:
            return
        best = None
        for i in range(obj):
            a = T[i][col]
            if a > 0:
                key = (T[i][-1] / a, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            raise Unbounded("objective is unbounded")
        _pivot(T, basis, best[1], col)


def solve_lp(
    c: Sequence[Number],
    A_ub: Sequence[Sequence[Number]] = (),
    b_ub: Sequence[Number] = (),
    A_eq: Sequence[Sequence[Number]] = (),
    b_eq: Sequence[Number] = (),
) -> LPResult:
    """Maximise ``c.x`` subject to ``A_ub x <= b_ub``, ``A_eq x = b_eq``, ``x >= 0``."""
    nv = len(c)
    rows: list[tuple[list[Fraction], Fraction, bool]] = []
    for a, b in zip(A_ub, b_ub):
        rows.append(([Fraction(v) for v in a], Fraction(b), True))
    for a, b in zip(A_eq, b_eq):
        rows.append(([Fraction(v) for v in a], Fraction(b), False))
    for a, _, _ in rows:
        if len(a) != nv:
            raise LPError(f"constraint row has {len(a)} coefficients, expected {nv}")

    n_slack = sum(1 for _, _, ub in rows if ub)
    # columns: originals | slacks | artificials
    T: list[list[Fraction]] = []
    basis: list[int] = []
    art_rows = []
    s = 0
    for a, b, ub in rows:
        slack = [Fraction(0)] * n_slack
        if ub:
            slack[s] = Fraction(1)
            s += 1
        if b < 0:
            a, b, slack = [-v for v in a], -b, [-v for v in slack]
        T.append(a + slack + [b])
        if ub and slack[s - 1] == 1:
            basis.append(nv + s - 1)
        else:
            basis.append(-1)
            art_rows.append(len(T) - 1)
    n_art = len(art_rows)
    width = nv + n_slack + n_art
    for i, row in enumerate(T):
        rhs = row.pop()
        row.extend([Fraction(0)] * n_art)
        row.append(rhs)
    for k, i in enumerate(art_rows):
        T[i][nv + n_slack + k] = Fraction(1)
        basis[i] = nv + n_slack + k

    if n_art:
        # phase 1: maximise -(sum of artificials)
        obj = [Fraction(0)] * (width + 1)
        for i in art_rows:
            for j in range(width + 1):
                obj[j] += T[i][j]
        for k in range(n_art):
            obj[nv + n_slack + k] = Fraction(0)
        T.append(obj)
        _simplex(T, basis, nv + n_slack)
        if T[-1][-1] != 0:
            raise Infeasible("constraints admit no non-negative solution")
        T.pop()
        # drive zero-level artificials out of the basis, dropping redundant rows
        i = 0
        while i < len(T):
            if basis[i] >= nv + n_slack:
                col = next((j for j in range(nv + n_slack) if T[i][j] != 0), None)
                if col is None:
                    del T[i]
                    del basis[i]
                    continue
                _pivot(T, basis, i, col)
            i += 1
        for row in T:
            del row[nv + n_slack : width]
        width = nv + n_slack

    obj = [Fraction(v) for v in c] + [Fraction(0)] * n_slack + [Fraction(0)]
    for i, b in enumerate(basis):
        f = obj[b]
        if f:
            obj = [o - f * t for o, t in zip(obj, T[i])]
    T.append(obj)
    _simplex(T, basis, width)
    x = [Fraction(0)] * width
    for i, b in enumerate(basis):
        x[b] = T[i][-1]
    value = sum((Fraction(ci) * xi for ci, xi in zip(c, x)), Fraction(0))
    return LPResult(tuple(x[:nv]), value)


def lexmin_optimal(
    c: Sequence[Number],
    A_ub: Sequence[Sequence[Number]] = (),
    b_ub: Sequence[Number] = (),
    A_eq: Sequence[Sequence[Number]] = (),
    b_eq: Sequence[Number] = (),
    order: Sequence[int] | None = None,
) -> LPResult:
    """Optimal value together with the lexicographically least optimal point.

    Coordinates are minimised one at a time in ``order`` (default: index
    order) while every earlier choice and the optimal value stay fixed.
    """
    first = solve_lp(c, A_ub, b_ub, A_eq, b_eq)
    nv = len(c)
    eq_a = [list(r) for r in A_eq] + [list(c)]
    eq_b = list(b_eq) + [first.value]
    x = list(first.x)
    for i in order if order is not None else range(nv):
        unit = [0] * nv
        unit[i] = -1
        res = solve_lp(unit, A_ub, b_ub, eq_a, eq_b)
        x = list(res.x)
        eq_a.append([1 if j == i else 0 for j in range(nv)])
        eq_b.append(x[i])
    return LPResult(tuple(x), first.value)


def rank(rows: Sequence[Sequence[Number]]) -> int:
    """Rank of a rational matrix by exact Gaussian elimination."""
    M = [[Fraction(v) for v in r] for r in rows]
    rk = 0
    ncols = len(M[0]) if M else 0
    for col in range(ncols):
        piv = next((i for i in range(rk, len(M)) if M[i][col] != 0), None)
        if piv is None:
            continue
        M[rk], M[piv] = M[piv], M[rk]
        for i in range(rk + 1, len(M)):
            f = M[i][col] / M[rk][col]
            if f:
                M[i] = [a - f * b for a, b in zip(M[i], M[rk])]
        rk += 1
    return rk
