"""Flags of 3-graphs, their densities, and unlabelled products.

A flag is a graph whose first ``s`` vertices are labelled ``0..s-1``; the
labelled part is its type.  Flags are compared by a key that is invariant
under permutations of the unlabelled vertices and fixes the labels.

Densities are exact.  The product of two flags is unlabelled by choosing an
ordered labelled tuple uniformly at random and then two disjoint random
extension sets, which makes the averaging identity exact on every host.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb, perm
from typing import Iterable, Sequence

from .enumeration import Family, ForbiddenSpec, enumerate_up_to_iso
from .hypergraph import HypergraphError, RGraph, canonical_form, induced_subgraph

FlagKey = tuple[int, int, tuple[tuple[int, ...], ...]]


def _key(H: RGraph, theta: Sequence[int], free: Sequence[int]) -> FlagKey:
    """Least relabelled edge list of ``H[theta + free]`` over orders of ``free``."""
    verts = set(theta) | set(free)
    inside = list(_edges_within(H, verts))
    best = None
    base = {v: i for i, v in enumerate(theta)}
    s = len(theta)
    for order in itertools.permutations(free):
        pos = dict(base)
        for i, v in enumerate(order):
            pos[v] = s + i
        cand = tuple(sorted(tuple(sorted(pos[u] for u in e)) for e in inside))
        if best is None or cand < best:
            best = cand
    return (s + len(free), s, best if best is not None else ())


def _edges_within(H: RGraph, verts: set[int]) -> Iterable[tuple[int, ...]]:
    if len(verts) < H.r:
        return ()
    return (e for e in H.edges if verts.issuperset(e))


@dataclass(frozen=True)
class FlagType:
    sigma: RGraph

    @property
    def s(self) -> int:
        return self.sigma.n

    @classmethod
    def empty(cls, s: int, r: int = 3) -> "FlagType":
        return cls(RGraph(r, s))


@dataclass(frozen=True)
class Flag:
    """Stored normalised: labelled vertices are ``0..s-1`` and the edge list
    is the flag key, so equal flags are equal objects."""

    graph: RGraph
    s: int

    def __init__(self, graph: RGraph, labeled: Sequence[int] | int):
        if isinstance(labeled, int):
            labeled = tuple(range(labeled))
        labeled = tuple(labeled)
        if len(set(labeled)) != len(labeled) or any(not 0 <= v < graph.n for v in labeled):
            raise HypergraphError(f"labelled vertices {labeled} are not distinct vertices of the graph")
        free = [v for v in range(graph.n) if v not in set(labeled)]
        n, s, edges = _key(graph, labeled, free)
        object.__setattr__(self, "graph", RGraph(graph.r, n, edges))
        object.__setattr__(self, "s", s)

    @property
    def key(self) -> FlagKey:
        return (self.graph.n, self.s, self.graph.edges)

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def type(self) -> FlagType:
        return FlagType(induced_subgraph(self.graph, range(self.s)))

    def __repr__(self) -> str:
        return f"Flag(n={self.n}, s={self.s}, edges={list(self.graph.edges)})"


def unit_flag(t: FlagType) -> Flag:
    return Flag(t.sigma, t.s)


def edge_flag() -> Flag:
    """Two labelled vertices and one free vertex completing an edge."""
    return Flag(RGraph(3, 3, [(0, 1, 2)]), 2)


def non_edge_flag() -> Flag:
    return Flag(RGraph(3, 3), 2)


def _realises_type(H: RGraph, theta: Sequence[int], sigma: RGraph) -> bool:
    return _key(H, theta, ())[2] == sigma.edges


def generate_flags(t: FlagType, n_total: int, admissible: ForbiddenSpec | None = None) -> list[Flag]:
    """All flags of type ``t`` on ``n_total`` vertices whose graph is admissible,
    up to isomorphism fixing the labels, sorted by key."""
    s = t.s
    if n_total < s:
        raise HypergraphError(f"flags of a {s}-vertex type need at least {s} vertices")
    found: dict[FlagKey, Flag] = {}
    for G in enumerate_up_to_iso(n_total, t.sigma.r, admissible):
        for theta in itertools.permutations(range(n_total), s):
            if not _realises_type(G, theta, t.sigma):
                continue
            f = Flag(G, theta)
            found.setdefault(f.key, f)
    return [found[k] for k in sorted(found)]


def flag_density(f: Flag, host: RGraph, theta: Sequence[int]) -> Fraction:
    """Probability that ``theta`` plus a uniformly random set of ``n(f) - s``
    further host vertices induces ``f`` with labels in order."""
    theta = tuple(theta)
    if len(theta) != f.s or len(set(theta)) != f.s or any(not 0 <= v < host.n for v in theta):
        raise HypergraphError(f"theta must be {f.s} distinct host vertices")
    if not _realises_type(host, theta, f.type.sigma):
        raise HypergraphError("theta does not induce the flag's type")
    rest = [v for v in range(host.n) if v not in set(theta)]
    a = f.n - f.s
    if a > len(rest):
        raise HypergraphError(f"host too small for a {f.n}-vertex flag")
    hits = sum(1 for U in itertools.combinations(rest, a) if _key(host, theta, U) == f.key)
    return Fraction(hits, comb(len(rest), a))


# ---------------------------------------------------------------------------
# bases and density vectors


def basis_family(k: int, admissible: ForbiddenSpec | None = None, r: int = 3) -> Family:
    return enumerate_up_to_iso(k, r, admissible)


@dataclass(frozen=True)
class DensityVector:
    basis: Family
    coords: tuple[Fraction, ...]

    def total(self) -> Fraction:
        return sum(self.coords, Fraction(0))

    def dot(self, vec: Sequence[Fraction]) -> Fraction:
        return sum((a * b for a, b in zip(self.coords, vec)), Fraction(0))


def density_vector(host: RGraph, basis: Family) -> DensityVector:
    """Induced densities of the basis members in ``host``.

    Raises when some k-vertex subgraph of the host is not a basis member,
    i.e. the host is not admissible for this basis.
    """
    if not len(basis):
        raise HypergraphError("empty basis")
    k = basis[0].n
    if host.n < k:
        raise HypergraphError(f"host has fewer than {k} vertices")
    index = {G: i for i, G in enumerate(basis)}
    counts = [0] * len(basis)
    for S in itertools.combinations(range(host.n), k):
        C = canonical_form(induced_subgraph(host, S))
        if C not in index:
            raise HypergraphError(f"host contains the non-basis {k}-vertex graph {list(C.edges)}")
        counts[index[C]] += 1
    total = comb(host.n, k)
    return DensityVector(basis, tuple(Fraction(c, total) for c in counts))


# ---------------------------------------------------------------------------
# products


def product_entries_in(H: RGraph, flags: Sequence[Flag], sigma: RGraph) -> dict[tuple[int, int], Fraction]:
    """Non-zero entries (i, j) of the product matrix of ``flags`` in ``H``:
    the probability that a random ordered tuple ``theta`` induces ``sigma``
    and two disjoint random extensions induce flags i and j.  With flags of
    mixed sizes, pairs too large to fit disjointly in ``H`` have no entry."""
    if not flags:
        return {}
    s = sigma.n
    sizes = sorted({f.n - s for f in flags})
    index = {f.key: i for i, f in enumerate(flags)}
    if s + sizes[0] + sizes[-1] > H.n:
        raise HypergraphError(f"flags of {s + sizes[0]} and {s + sizes[-1]} vertices do not pair up inside {H.n} vertices")
    counts: dict[tuple[int, int], int] = {}
    for theta in itertools.permutations(range(H.n), s):
        if not _realises_type(H, theta, sigma):
            continue
        rest = [v for v in range(H.n) if v not in set(theta)]
        found = []
        for a in sizes:
            for U in itertools.combinations(rest, a):
                i = index.get(_key(H, theta, U))
                if i is not None:
                    found.append((frozenset(U), i))
        for U1, i in found:
            for U2, j in found:
                if not (U1 & U2):
                    counts[i, j] = counts.get((i, j), 0) + 1
    n_theta = perm(H.n, s)
    free = H.n - s
    size = [f.n - s for f in flags]
    return {
        (i, j): Fraction(c, n_theta * comb(free, size[i]) * comb(free - size[i], size[j]))
        for (i, j), c in sorted(counts.items())
    }


def product_matrix_in(H: RGraph, flags: Sequence[Flag], sigma: RGraph) -> list[list[Fraction]]:
    """Dense form of ``product_entries_in``."""
    m = len(flags)
    M = [[Fraction(0)] * m for _ in range(m)]
    for (i, j), v in product_entries_in(H, flags, sigma).items():
        M[i][j] = v
    return M


def product_expansion(f1: Flag, f2: Flag, k: int, basis: Family) -> tuple[Fraction, ...]:
    """Coefficients ``c_H`` of the unlabelled product of ``f1`` and ``f2``."""
    if f1.type.sigma != f2.type.sigma:
        raise HypergraphError("flags have different types")
    if f1.n + f2.n - f1.s > k:
        raise HypergraphError(f"flags of {f1.n} and {f2.n} vertices need k >= {f1.n + f2.n - f1.s}")
    if any(H.n != k for H in basis):
        raise HypergraphError(f"basis members must have {k} vertices")
    sigma = f1.type.sigma
    if f1 == f2:
        return tuple(product_matrix_in(H, [f1], sigma)[0][0] for H in basis)
    return tuple(product_matrix_in(H, [f1, f2], sigma)[0][1] for H in basis)


def direct_product_density(f1: Flag, f2: Flag, host: RGraph) -> Fraction:
    """Label-averaged product computed straight from the definition:
    average over ordered tuples of the probability that disjoint random
    extensions induce both flags.  Independent of the key-indexed code path."""
    s = f1.s
    a, b = f1.n - s, f2.n - s
    sigma = f1.type.sigma
    total = Fraction(0)

    def induces(theta, U, f):
        sub = theta + U
        g = RGraph(host.r, len(sub), (
            tuple(sub.index(u) for u in e) for e in host.edges if set(e) <= set(sub)))
        return any(
            RGraph(host.r, len(sub), (tuple(p[u] for u in e) for e in g.edges)) == f.graph
            for p in (tuple(range(s)) + q for q in itertools.permutations(range(s, len(sub))))
        )

    for theta in itertools.permutations(range(host.n), s):
        sub = RGraph(host.r, s, (tuple(theta.index(u) for u in e) for e in host.edges if set(e) <= set(theta)))
        if sub != sigma:
            continue
        rest = [v for v in range(host.n) if v not in theta]
        hits = 0
        pairs = 0
        for U1 in itertools.combinations(rest, a):
            left = [v for v in rest if v not in U1]
            for U2 in itertools.combinations(left, b):
                pairs += 1
                if induces(theta, U1, f1) and induces(theta, U2, f2):
                    hits += 1
        total += Fraction(hits, pairs)
    return total / perm(host.n, s)


# ---------------------------------------------------------------------------
# minimum positive co-degree condition


def _check_threshold(p: int, q: int) -> Fraction:
    if q <= 0 or p < 0 or p > q:
        raise HypergraphError(f"threshold must satisfy 0 <= p/q <= 1, got {p}/{q}")
    return Fraction(p, q)


def pos_codegree_constraint(p: int, q: int, k: int, basis: Family) -> tuple[Fraction, ...]:
    """Unlabelled ``q E^2 - p E`` on the 2-vertex type, E the edge flag.

    On a host where every pair has co-degree 0 or at least ``(p/q)(n-2)`` the
    per-pair quantity ``e (q e - p)`` with ``e = d/(n-2)`` is non-negative,
    so the unlabelled vector is non-negative up to ``O(1/n)``.
    """
    _check_threshold(p, q)
    if k < 4:
        raise HypergraphError("the product of two edge flags needs k >= 4")
    E = edge_flag()
    U = unit_flag(E.type)
    sq = product_expansion(E, E, k, basis)
    lin = product_expansion(E, U, k, basis)
    return tuple(q * a - p * b for a, b in zip(sq, lin))


def codegree_pair_values(H: RGraph, p: int, q: int) -> dict[tuple[int, int], Fraction]:
    """``(d/(n-2)) (q d/(n-2) - p)`` for every pair of a 3-graph."""
    _check_threshold(p, q)
    if H.r != 3:
        raise HypergraphError("pair values are defined for 3-graphs")
    if H.n < 3:
        raise HypergraphError("need at least 3 vertices")
    out = {}
    for pair in itertools.combinations(range(H.n), 2):
        e = Fraction(len(H.neighborhood(pair)), H.n - 2)
        out[pair] = e * (q * e - p)
    return out
