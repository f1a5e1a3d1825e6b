"""Named 3-graphs, weighted blow-ups and their optimal class weights."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import floor
from typing import Callable, Sequence

from .hypergraph import HypergraphError, RGraph, single_edge, triangle
from .lp import lexmin_optimal, rank, solve_lp


def _g(n: int, edges: str | Sequence[Sequence[int]], one_based: bool = True, r: int = 3) -> RGraph:
    if isinstance(edges, str):
        edges = [[int(ch) for ch in tok] for tok in edges.split()]
    off = 1 if one_based else 0
    return RGraph(r, n, ([v - off for v in e] for e in edges))


def complete(n: int, r: int) -> RGraph:
    return RGraph(r, n, itertools.combinations(range(n), r))


def tight_cycle(length: int) -> RGraph:
    if length < 4:
        raise HypergraphError(f"tight cycles need at least 4 vertices, got {length}")
    return RGraph(3, length, ((i, (i + 1) % length, (i + 2) % length) for i in range(length)))


def tight_cycle_minus(length: int) -> RGraph:
    """C_l with the edge {l, 1, 2} (0-based {l-1, 0, 1}) removed."""
    if length < 4:
        raise HypergraphError(f"tight cycles need at least 4 vertices, got {length}")
    return RGraph(3, length, ((i, (i + 1) % length, (i + 2) % length) for i in range(length - 1)))


def daisy_star(k: int) -> RGraph:
    """J_k: vertex 0 forms an edge with every pair of the k other vertices."""
    if k < 3:
        raise HypergraphError(f"J_k needs k >= 3, got {k}")
    return RGraph(3, k + 1, ((0, i, j) for i, j in itertools.combinations(range(1, k + 1), 2)))


FANO_LINES = "123 345 156 246 147 257 367"


def fano() -> RGraph:
    return _g(7, FANO_LINES)


def fano_complement() -> RGraph:
    return fano().complement()


_FIXED: dict[str, Callable[[], RGraph]] = {
    "K4": lambda: complete(4, 3),
    "K4minus": lambda: _g(4, "123 124 134"),
    "K5": lambda: complete(5, 3),
    "F32": lambda: _g(5, "123 124 125 345"),
    "F42": lambda: _g(6, "123 124 134 156 256 356 456"),
    "F33": lambda: _g(6, "123 145 146 156 245 246 256 345 346 356"),
    "F5": lambda: _g(5, "123 124 345"),
    "Fano": fano,
    "FanoComplement": fano_complement,
    "F1": lambda: _g(7, "125 135 235 126 146 246 347"),
    # F_2 on a,b,c,d,e,g
    "F2": lambda: _g(6, "125 135 235 145 245 346"),
    # F_{3,2} on a..e is {abc, abd, abe, cde}; ++1 adds acd, ace and ++2 adds acd, bce
    "F32pp1": lambda: _g(5, "123 124 125 345 134 135"),
    "F32pp2": lambda: _g(5, "123 124 125 345 134 235"),
}

_ALIASES = {"K43": "K4", "K43minus": "K4minus", "K53": "K5"}

_PARAM: dict[str, tuple[int, Callable[..., RGraph]]] = {
    "Jk": (1, daisy_star),
    "C": (1, tight_cycle),
    "Cminus": (1, tight_cycle_minus),
    "Tr": (1, triangle),
    "Edge": (1, single_edge),
    "K": (2, complete),
    "Empty": (2, lambda n, r: RGraph(r, n)),
}


def catalog() -> list[str]:
    """Accepted construction names, parameterised ones shown with placeholders."""
    params = {"Jk": "Jk:k", "C": "C:l", "Cminus": "Cminus:l", "Tr": "Tr:r", "Edge": "Edge:r", "K": "K:n:r", "Empty": "Empty:n:r"}
    return sorted(_FIXED) + sorted(params.values())


def named_construction(spec: str) -> RGraph:
    """Graph for a name such as ``Jk:4``, ``Cminus:7``, ``Tr:3`` or ``FanoComplement``."""
    name, *args = spec.strip().split(":")
    name = _ALIASES.get(name, name)
    if name in _FIXED:
        if args:
            raise HypergraphError(f"{name} takes no parameters")
        return _FIXED[name]()
    if name in _PARAM:
        arity, make = _PARAM[name]
        if len(args) != arity:
            raise HypergraphError(f"{name} takes {arity} integer parameter(s), got {spec!r}")
        try:
            ints = [int(a) for a in args]
        except ValueError:
            raise HypergraphError(f"bad parameters in {spec!r}") from None
        try:
            return make(*ints)
        except (ValueError, TypeError) as exc:
            raise HypergraphError(f"bad parameters in {spec!r}: {exc}") from None
    raise HypergraphError(f"unknown construction {name!r}; known: {', '.join(catalog())}")


# ---------------------------------------------------------------------------
# blow-ups


@dataclass(frozen=True)
class WeightedBlowup:
    base: RGraph
    weights: tuple[Fraction, ...]

    def __init__(self, base: RGraph, weights: Sequence[Fraction | int | str]):
        w = tuple(Fraction(x) for x in weights)
        if len(w) != base.n:
            raise HypergraphError(f"need {base.n} weights, got {len(w)}")
        if any(x < 0 for x in w):
            raise HypergraphError("weights must be non-negative")
        if sum(w) != 1:
            raise HypergraphError(f"weights must sum to 1, got {sum(w)}")
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "weights", w)

    @classmethod
    def balanced(cls, base: RGraph) -> "WeightedBlowup":
        return cls(base, [Fraction(1, base.n)] * base.n)


def blowup_classes(class_sizes: Sequence[int]) -> list[list[int]]:
    out, start = [], 0
    for s in class_sizes:
        out.append(list(range(start, start + s)))
        start += s
    return out


def instantiate_blowup(base: RGraph, class_sizes: Sequence[int]) -> RGraph:
    """Blow each base vertex up to an independent class; edges are the
    rainbow r-sets over base edges.  Classes are numbered consecutively."""
    if len(class_sizes) != base.n:
        raise HypergraphError(f"need {base.n} class sizes, got {len(class_sizes)}")
    if any(s < 0 for s in class_sizes):
        raise HypergraphError("class sizes must be non-negative")
    classes = blowup_classes(class_sizes)
    edges = (p for e in base.edges for p in itertools.product(*(classes[v] for v in e)))
    return RGraph(base.r, sum(class_sizes), edges)


def _positive_sets(base: RGraph) -> dict[tuple[int, ...], frozenset[int]]:
    out = {}
    for e in base.edges:
        for s in itertools.combinations(e, base.r - 1):
            out[s] = base.neighborhood(s)
    return dict(sorted(out.items()))


def blowup_mpcd_fraction(b: WeightedBlowup) -> Fraction:
    """Minimum positive co-degree of the weighted blow-up as a fraction of n.

    Sets meeting a class twice have co-degree zero, so only (r-1)-sets of
    distinct base vertices with a non-empty base neighbourhood count.
    """
    if not b.base.m:
        raise HypergraphError("the base graph has no edges")
    return min(sum((b.weights[k] for k in nb), Fraction(0)) for nb in _positive_sets(b.base).values())


@dataclass(frozen=True)
class BlowupOptimum:
    weights: tuple[Fraction, ...]
    value: Fraction
    face_dimension: int


def _weight_lp(base: RGraph):
    # variables: w_0..w_{n-1}, t ; maximise t
    n = base.n
    A_ub, b_ub = [], []
    for nb in _positive_sets(base).values():
        A_ub.append([-1 if k in nb else 0 for k in range(n)] + [1])
        b_ub.append(0)
    A_eq = [[1] * n + [0]]
    b_eq = [1]
    c = [0] * n + [1]
    return c, A_ub, b_ub, A_eq, b_eq


def optimize_blowup_weights(base: RGraph) -> BlowupOptimum:
    """Exact optimal class weights for the minimum positive co-degree.

    Maximises ``t`` subject to ``sum_{k in N(S)} w_k >= t`` for every
    positive (r-1)-set S, ``sum w = 1`` and ``w >= 0``.  The returned weights
    are the lexicographically least optimal ones; ``face_dimension`` is the
    dimension of the set of all optimal weightings (0 means unique).
    """
    if not base.m:
        raise HypergraphError("the base graph has no edges")
    n = base.n
    c, A_ub, b_ub, A_eq, b_eq = _weight_lp(base)
    res = lexmin_optimal(c, A_ub, b_ub, A_eq, b_eq, order=range(n))
    value = res.value
    weights = res.x[:n]

    # optimal face over w alone: sum w = 1, w >= 0, coverage >= value
    ineqs = [[1 if k == i else 0 for k in range(n)] for i in range(n)]
    ineq_rhs = [Fraction(0)] * n
    for nb in _positive_sets(base).values():
        ineqs.append([1 if k in nb else 0 for k in range(n)])
        ineq_rhs.append(value)
    face_ub = [[-a for a in row] for row in ineqs]
    face_b = [-b for b in ineq_rhs]
    implicit = [[1] * n]
    # any optimal point with slack in a row proves that row is not implicit
    known = [weights]

    def dot(row, w):
        return sum((a * x for a, x in zip(row, w)), Fraction(0))

    for row, rhs in zip(ineqs, ineq_rhs):
        if any(dot(row, w) > rhs for w in known):
            continue
        res = solve_lp(row, face_ub, face_b, [[1] * n], [1])
        if res.value == rhs:
            implicit.append(row)
        else:
            known.append(res.x)
    dim = n - rank(implicit)
    return BlowupOptimum(tuple(weights), value, dim)


def integer_class_sizes(b: WeightedBlowup, n: int) -> tuple[int, ...]:
    """Largest-remainder rounding of ``n * weights``; ties go to lower indices."""
    if n < b.base.n:
        raise HypergraphError(f"n = {n} is smaller than the base ({b.base.n} vertices)")
    exact = [n * w for w in b.weights]
    sizes = [floor(x) for x in exact]
    left = n - sum(sizes)
    by_remainder = sorted(range(len(exact)), key=lambda i: (-(exact[i] - sizes[i]), i))
    for i in by_remainder[:left]:
        sizes[i] += 1
    return tuple(sizes)


def parse_weights(text: str) -> list[Fraction]:
    return [Fraction(tok) for tok in text.replace(",", " ").split()]
