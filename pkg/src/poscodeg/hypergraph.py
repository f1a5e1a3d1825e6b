"""Small r-uniform hypergraphs and the exact queries built on them.

Vertices are the integers ``0..n-1``; every edge is stored as a sorted
tuple and the edge list itself is kept sorted, so two graphs compare equal
exactly when their labelled edge sets agree.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import comb
from typing import Iterable, Iterator, Sequence


class HypergraphError(ValueError):
    """Raised for malformed graphs or arguments that do not fit the graph."""


@dataclass(frozen=True)
class RGraph:
    r: int
    n: int
    edges: tuple[tuple[int, ...], ...] = field(default=())

    def __init__(self, r: int, n: int, edges: Iterable[Iterable[int]] = ()):
        if r < 1:
            raise HypergraphError(f"uniformity must be positive, got {r}")
        if n < 0:
            raise HypergraphError(f"vertex count must be non-negative, got {n}")
        norm = set()
        for e in edges:
            t = tuple(sorted(e))
            if len(t) != r or len(set(t)) != r:
                raise HypergraphError(f"edge {tuple(e)} is not an {r}-set")
            if t[0] < 0 or t[-1] >= n:
                raise HypergraphError(f"edge {t} uses a vertex outside 0..{n - 1}")
            norm.add(t)
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(sorted(norm)))

    def __repr__(self) -> str:
        return f"RGraph(r={self.r}, n={self.n}, edges={list(self.edges)})"

    @cached_property
    def edge_set(self) -> frozenset[tuple[int, ...]]:
        return frozenset(self.edges)

    @cached_property
    def incidence(self) -> tuple[tuple[tuple[int, ...], ...], ...]:
        inc: list[list[tuple[int, ...]]] = [[] for _ in range(self.n)]
        for e in self.edges:
            for v in e:
                inc[v].append(e)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(x) for x in self.incidence)

    @cached_property
    def _shadow(self) -> dict[tuple[int, ...], frozenset[int]]:
        # proper subset S of some edge -> vertices w such that S+w is still inside an edge
        ext: dict[tuple[int, ...], set[int]] = {}
        for e in self.edges:
            for k in range(self.r):
                for s in itertools.combinations(e, k):
                    ext.setdefault(s, set()).update(v for v in e if v not in s)
        return {s: frozenset(w) for s, w in ext.items()}

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, e: Iterable[int]) -> bool:
        return tuple(sorted(e)) in self.edge_set

    def neighborhood(self, s: Iterable[int]) -> frozenset[int]:
        """Vertices ``v`` with ``s + {v}`` an edge."""
        key = tuple(sorted(s))
        if len(key) != self.r - 1:
            return frozenset()
        return self._shadow.get(key, frozenset())

    def relabel(self, perm: Sequence[int] | dict[int, int]) -> "RGraph":
        """Apply ``v -> perm[v]``; ``perm`` must be a bijection onto ``0..n-1``."""
        return RGraph(self.r, self.n, (tuple(perm[v] for v in e) for e in self.edges))

    def complement(self) -> "RGraph":
        es = self.edge_set
        return RGraph(self.r, self.n, (e for e in itertools.combinations(range(self.n), self.r) if e not in es))

    def add_edges(self, extra: Iterable[Iterable[int]]) -> "RGraph":
        return RGraph(self.r, self.n, itertools.chain(self.edges, extra))


def _check_vertex_set(H: RGraph, S: Iterable[int]) -> tuple[int, ...]:
    members = tuple(sorted(S))
    if len(set(members)) != len(members):
        raise HypergraphError(f"vertex set {members} has repeated members")
    for v in members:
        if not 0 <= v < H.n:
            raise HypergraphError(f"vertex {v} is outside 0..{H.n - 1}")
    return members


def codegree(H: RGraph, S: Iterable[int]) -> int:
    members = _check_vertex_set(H, S)
    if len(members) != H.r - 1:
        raise HypergraphError(f"co-degree needs an {H.r - 1}-set, got {members}")
    return len(H.neighborhood(members))


def positive_codegrees(H: RGraph) -> dict[tuple[int, ...], int]:
    """Co-degree of every (r-1)-set lying in at least one edge."""
    out: dict[tuple[int, ...], int] = {}
    for e in H.edges:
        for s in itertools.combinations(e, H.r - 1):
            out[s] = out.get(s, 0) + 1
    return out


def min_pos_codegree(H: RGraph) -> int:
    """Minimum positive co-degree; the edgeless graph gets 0."""
    cd = positive_codegrees(H)
    return min(cd.values()) if cd else 0


def link_graph(H: RGraph, v: int) -> RGraph:
    """The (r-1)-graph on the other n-1 vertices spanned by edges through ``v``.

    Vertices above ``v`` shift down by one.
    """
    if H.r < 3:
        raise HypergraphError("link graphs are only defined here for r >= 3")
    _check_vertex_set(H, (v,))
    shift = lambda u: u if u < v else u - 1  # noqa: E731
    return RGraph(H.r - 1, H.n - 1, (tuple(shift(u) for u in e if u != v) for e in H.incidence[v]))


def induced_subgraph(H: RGraph, S: Iterable[int]) -> RGraph:
    """``H[S]`` relabelled so that the i-th smallest member of S becomes i."""
    members = _check_vertex_set(H, S)
    pos = {v: i for i, v in enumerate(members)}
    inside = (e for e in H.edges if all(u in pos for u in e))
    return RGraph(H.r, len(members), (tuple(pos[u] for u in e) for e in inside))


def suspension(H: RGraph) -> RGraph:
    """Add one spike vertex (index n) to every edge."""
    return RGraph(H.r + 1, H.n + 1, (e + (H.n,) for e in H.edges))


# ---------------------------------------------------------------------------
# canonical labelling


def _refine(H: RGraph, cells: list[list[int]]) -> list[list[int]]:
    inc = H.incidence
    while True:
        color = {}
        for i, cell in enumerate(cells):
            for v in cell:
                color[v] = i
        new: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new.append(cell)
                continue
            sig = {
                v: tuple(sorted(tuple(sorted(color[u] for u in e if u != v)) for e in inc[v]))
                for v in cell
            }
            keys = sorted(set(sig.values()))
            if len(keys) > 1:
                changed = True
                for k in keys:
                    new.append([v for v in cell if sig[v] == k])
            else:
                new.append(cell)
        cells = new
        if not changed:
            return cells


def _orbit_rep(autos: list[tuple[int, ...]], prefix: tuple[int, ...], n: int) -> list[int]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in autos:
        if all(g[p] == p for p in prefix):
            for v in range(n):
                a, b = find(v), find(g[v])
                if a != b:
                    parent[max(a, b)] = min(a, b)
    return [find(v) for v in range(n)]


def canonical_labeling(H: RGraph, fixed: Sequence[int] = ()) -> tuple[RGraph, tuple[int, ...]]:
    """Canonical relabelling of ``H`` and the map ``vertex -> new label``.

    Vertices in ``fixed`` keep their order as labels ``0..len(fixed)-1``;
    this gives label-preserving canonical forms for flags.  The search
    individualises vertices of the first non-trivial cell of an equitable
    refinement and keeps the lexicographically least relabelled edge list,
    pruning siblings that a discovered automorphism maps onto each other.
    """
    n = H.n
    fixed = tuple(fixed)
    rest = [v for v in range(n) if v not in set(fixed)]
    cells = [[v] for v in fixed] + ([rest] if rest else [])
    best: list = [None, None]  # certificate, labelling
    autos: list[tuple[int, ...]] = []

    def leaf(cells: list[list[int]]) -> None:
        lab = [0] * n
        for i, cell in enumerate(cells):
            lab[cell[0]] = i
        cert = tuple(sorted(tuple(sorted(lab[u] for u in e)) for e in H.edges))
        if best[0] is None or cert < best[0]:
            best[0], best[1] = cert, lab
        elif cert == best[0]:
            inv = [0] * n
            for v, i in enumerate(best[1]):
                inv[i] = v
            autos.append(tuple(inv[lab[v]] for v in range(n)))

    def search(cells: list[list[int]], prefix: tuple[int, ...]) -> None:
        cells = _refine(H, cells)
        idx = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if idx is None:
            leaf(cells)
            return
        target = cells[idx]
        explored: list[int] = []
        for v in target:
            if autos and explored:
                rep = _orbit_rep(autos, prefix, n)
                if any(rep[u] == rep[v] for u in explored):
                    continue
            child = cells[:idx] + [[v], [u for u in target if u != v]] + cells[idx + 1 :]
            search(child, prefix + (v,))
            explored.append(v)

    if n == 0:
        return H, ()
    search(cells, fixed)
    lab = tuple(best[1])
    return RGraph(H.r, n, best[0]), lab


def canonical_form(H: RGraph) -> RGraph:
    return canonical_labeling(H)[0]


def is_isomorphic(G: RGraph, H: RGraph) -> bool:
    if G.r != H.r:
        raise HypergraphError(f"uniformity mismatch: {G.r} vs {H.r}")
    if G.n != H.n or G.m != H.m or sorted(G.degrees) != sorted(H.degrees):
        return False
    return canonical_form(G) == canonical_form(H)


# ---------------------------------------------------------------------------
# embeddings and homomorphisms


def _search_order(F: RGraph) -> list[int]:
    order: list[int] = []
    left = set(range(F.n))
    while left:
        placed = set(order)

        def score(v: int) -> tuple[int, int, int]:
            touching = sum(1 for e in F.incidence[v] if any(u in placed for u in e))
            return (touching, F.degrees[v], -v)

        v = max(left, key=score)
        order.append(v)
        left.remove(v)
    return order


def iter_embeddings(F: RGraph, H: RGraph, induced: bool = False) -> Iterator[tuple[int, ...]]:
    """Yield injective maps ``phi`` (as tuples indexed by F's vertices) with
    ``phi(E(F)) <= E(H)``; when ``induced`` non-edges must map to non-edges."""
    if F.r != H.r:
        raise HypergraphError(f"uniformity mismatch: {F.r} vs {H.r}")
    if F.n > H.n or F.m > H.m:
        return
    order = _search_order(F)
    pos = {v: i for i, v in enumerate(order)}
    # edges (or non-edges) of F fully assigned once vertex order[i] is placed
    closing: list[list[tuple[int, ...]]] = [[] for _ in order]
    closing_non: list[list[tuple[int, ...]]] = [[] for _ in order]
    for e in F.edges:
        closing[max(pos[u] for u in e)].append(e)
    if induced:
        fe = F.edge_set
        for t in itertools.combinations(range(F.n), F.r):
            if t not in fe:
                closing_non[max(pos[u] for u in t)].append(t)
    partial: list[list[tuple[tuple[int, ...], ...]]] = [[] for _ in order]
    for e in F.edges:
        for i in range(len(order)):
            done = tuple(u for u in e if pos[u] < i)
            if done and order[i] in e:
                partial[i].append(done)
    hedges = H.edge_set
    shadow = H._shadow
    hdeg = H.degrees
    phi = [-1] * F.n
    used = [False] * H.n

    def candidates(i: int) -> Iterable[int]:
        v = order[i]
        cand: set[int] | None = None
        for done in partial[i]:
            key = tuple(sorted(phi[u] for u in done))
            ext = shadow.get(key)
            if ext is None:
                return ()
            cand = set(ext) if cand is None else cand & ext
            if not cand:
                return ()
        pool = range(H.n) if cand is None else sorted(cand)
        need = F.degrees[v]
        return [w for w in pool if not used[w] and (induced or hdeg[w] >= need)]

    def rec(i: int) -> Iterator[tuple[int, ...]]:
        if i == len(order):
            yield tuple(phi)
            return
        v = order[i]
        for w in candidates(i):
            phi[v] = w
            ok = all(tuple(sorted(phi[u] for u in e)) in hedges for e in closing[i])
            if ok and induced:
                ok = all(tuple(sorted(phi[u] for u in t)) not in hedges for t in closing_non[i])
            if ok:
                used[w] = True
                yield from rec(i + 1)
                used[w] = False
            phi[v] = -1

    yield from rec(0)


def exists_embedding(F: RGraph, H: RGraph, induced: bool = False) -> tuple[int, ...] | None:
    return next(iter_embeddings(F, H, induced), None)


def exists_homomorphism(F: RGraph, H: RGraph) -> tuple[int, ...] | None:
    """A vertex map sending every edge of F onto an edge of H, or None."""
    if F.r != H.r:
        raise HypergraphError(f"uniformity mismatch: {F.r} vs {H.r}")
    if F.m and not H.m:
        return None
    order = list(range(F.n))
    hedges = H.edge_set
    shadow = H._shadow
    phi = [-1] * F.n
    # for each vertex, the edges of F whose other members all come earlier
    touching = [[e for e in F.incidence[v] if max(e) == v] for v in order]
    partial = [[e for e in F.incidence[v] if max(e) > v] for v in order]

    def consistent(v: int) -> bool:
        for e in touching[v]:
            img = [phi[u] for u in e]
            if len(set(img)) != F.r or tuple(sorted(img)) not in hedges:
                return False
        for e in partial[v]:
            img = [phi[u] for u in e if u <= v]
            if len(set(img)) != len(img):
                return False
            if tuple(sorted(img)) not in shadow:
                return False
        return True

    def rec(v: int) -> bool:
        if v == F.n:
            return True
        for w in range(H.n):
            phi[v] = w
            if consistent(v) and rec(v + 1):
                return True
        phi[v] = -1
        return False

    return tuple(phi) if rec(0) else None


def contains_any(H: RGraph, forbidden: Iterable[RGraph], induced: bool = False) -> bool:
    return any(exists_embedding(F, H, induced) is not None for F in forbidden)


# ---------------------------------------------------------------------------
# densities


def induced_count(G: RGraph, H: RGraph) -> int:
    """Number of |V(G)|-subsets of V(H) inducing a copy of G."""
    if G.r != H.r:
        raise HypergraphError(f"uniformity mismatch: {G.r} vs {H.r}")
    if G.n > H.n:
        raise HypergraphError(f"G has {G.n} vertices but H only {H.n}")
    target = canonical_form(G)
    count = 0
    for S in itertools.combinations(range(H.n), G.n):
        sub = induced_subgraph(H, S)
        if sub.m == G.m and canonical_form(sub) == target:
            count += 1
    return count


def induced_density(G: RGraph, H: RGraph) -> Fraction:
    """Induced copies of G in H divided by binom(|V(H)|, |V(G)|)."""
    return Fraction(induced_count(G, H), comb(H.n, G.n))


def subgraph_density(G: RGraph, H: RGraph) -> Fraction:
    """Non-induced density: the probability that a uniformly random injection
    V(G) -> V(H) maps every edge of G onto an edge of H."""
    if G.n > H.n:
        raise HypergraphError(f"G has {G.n} vertices but H only {H.n}")
    hits = sum(1 for _ in iter_embeddings(G, H, induced=False))
    total = 1
    for i in range(G.n):
        total *= H.n - i
    return Fraction(hits, total)


def density_profile(H: RGraph, k: int) -> dict[RGraph, Fraction]:
    """Induced densities of every k-vertex graph occurring in H, keyed by
    canonical form."""
    if k > H.n:
        raise HypergraphError(f"cannot take {k}-vertex subgraphs of a {H.n}-vertex graph")
    counts: dict[RGraph, int] = {}
    for S in itertools.combinations(range(H.n), k):
        c = canonical_form(induced_subgraph(H, S))
        counts[c] = counts.get(c, 0) + 1
    total = comb(H.n, k)
    return {g: Fraction(c, total) for g, c in sorted(counts.items(), key=lambda kv: (kv[0].m, kv[0].edges))}


# ---------------------------------------------------------------------------
# low-density classification


class GammaRegion(enum.Enum):
    ZERO = "Zero"
    ONE_OVER_R = "OneOverR"
    AT_LEAST_TWO_OVER_2R_MINUS_1 = "AtLeastTwoOver2rMinus1"

    def __str__(self) -> str:
        return self.value


def single_edge(r: int) -> RGraph:
    return RGraph(r, r, [tuple(range(r))])


def triangle(r: int) -> RGraph:
    """The r-triangle: the 2-graph triangle on 0,1,2 with vertices 3..r added
    to each of its three edges."""
    if r < 2:
        raise HypergraphError("r-triangles need r >= 2")
    spine = tuple(range(3, r + 1))
    return RGraph(r, r + 1, [(0, 1) + spine, (0, 2) + spine, (1, 2) + spine])


def is_r_partite(F: RGraph) -> bool:
    return exists_homomorphism(F, single_edge(F.r)) is not None


def classify_gamma_region(family: RGraph | Sequence[RGraph]) -> GammaRegion:
    """Where the positive co-degree density of a family can lie.

    Zero when some member maps homomorphically onto a single edge
    (r-partite), 1/r when none does but some member maps into the
    r-triangle, and at least 2/(2r-1) otherwise.
    """
    members = [family] if isinstance(family, RGraph) else list(family)
    if not members:
        raise HypergraphError("cannot classify an empty family")
    r = members[0].r
    if any(F.r != r for F in members):
        raise HypergraphError("family members have different uniformities")
    if any(is_r_partite(F) for F in members):
        return GammaRegion.ZERO
    T = triangle(r)
    if any(exists_homomorphism(F, T) is not None for F in members):
        return GammaRegion.ONE_OVER_R
    return GammaRegion.AT_LEAST_TWO_OVER_2R_MINUS_1
