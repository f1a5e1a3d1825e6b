"""Exact values of co+ex(n, F) for small n, and a brute-force oracle.

co+ex(n, F) is the largest minimum positive co-degree of an F-free
n-vertex r-graph; the edgeless graph has minimum positive co-degree 0.
"""

from __future__ import annotations

import itertools
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Sequence

from .enumeration import (
    ForbidMode,
    ForbiddenSpec,
    canonical_children,
    enumerate_up_to_iso,
    frontier,
    graph_sort_key,
)
from .hypergraph import (
    HypergraphError,
    RGraph,
    canonical_form,
    exists_embedding,
    min_pos_codegree,
    positive_codegrees,
)

WITNESS_CAP = 100
SOFT_LIMIT = 7
ORACLE_LIMIT = 5


@dataclass(frozen=True)
class ExtremalResult:
    n: int
    value: int
    witnesses: tuple[RGraph, ...]
    witness_count: int

    @property
    def truncated(self) -> bool:
        return self.witness_count > len(self.witnesses)


def _upper_bound_ok(G: RGraph, addable: Sequence[tuple[int, ...]], best: int) -> bool:
    """False when some positive pair can never reach ``best`` in a supergraph."""
    extra: dict[tuple[int, ...], int] = {}
    for e in addable:
        for s in itertools.combinations(e, G.r - 1):
            extra[s] = extra.get(s, 0) + 1
    return all(d + extra.get(s, 0) >= best for s, d in positive_codegrees(G).items())


def _search(root: RGraph, prune: tuple[RGraph, ...], forbidden: ForbiddenSpec | None,
            best: int = 0) -> tuple[int, list[RGraph]]:
    induced = forbidden is not None and forbidden.mode is ForbidMode.INDUCED
    witnesses: list[RGraph] = []
    stack = [root]
    while stack:
        G = stack.pop()
        ok = forbidden is None or forbidden.admits(G)
        if ok:
            v = min_pos_codegree(G)
            if v > best:
                best, witnesses = v, [G]
            elif v == best:
                witnesses.append(G)
        children = canonical_children(G, prune)
        if not children:
            continue
        if not induced and G.m:
            # a child G + e is admissible exactly when e is addable now
            edges = G.edge_set
            addable = [e for e in itertools.combinations(range(G.n), G.r)
                       if e not in edges and all(_fits(F, G, e) for F in prune)]
            if not _upper_bound_ok(G, addable, best):
                continue
        stack.extend(reversed(children))
    return best, witnesses


def _fits(F: RGraph, G: RGraph, e: tuple[int, ...]) -> bool:
    return exists_embedding(F, G.add_edges([e])) is None


def _job(args) -> tuple[int, list[RGraph]]:
    return _search(*args)


def co_plus_ex_exact(n: int, forbidden: ForbiddenSpec | None = None, r: int = 3, jobs: int = 1) -> ExtremalResult:
    """Maximum of the minimum positive co-degree over admissible n-vertex
    graphs, by canonical augmentation with a co-degree upper-bound cut."""
    if forbidden is not None:
        r = forbidden.r
    if n < 0:
        raise HypergraphError("n must be non-negative")
    if n > SOFT_LIMIT:
        warnings.warn(f"co+ex search beyond {SOFT_LIMIT} vertices may take very long", RuntimeWarning, stacklevel=2)
    prune: tuple[RGraph, ...] = ()
    if forbidden is not None and forbidden.mode is ForbidMode.SUBGRAPH:
        prune = tuple(F for F in forbidden.family if F.n <= n)
    root = RGraph(r, n)
    if any(F.m == 0 for F in prune):
        return ExtremalResult(n, 0, (), 0)
    if jobs > 1:
        # cutting is local to each subtree; values and witnesses are merged
        closed, opened = frontier(root, prune, 8 * jobs)
        parts = [_search_nodes(closed, forbidden)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts.extend(pool.map(_job, [(G, prune, forbidden) for G in opened]))
    else:
        parts = [_search(root, prune, forbidden)]
    best = max(v for v, _ in parts)
    found = {W for v, ws in parts if v == best for W in ws if min_pos_codegree(W) == best}
    ordered = sorted(found, key=graph_sort_key)
    return ExtremalResult(n, best, tuple(ordered[:WITNESS_CAP]), len(ordered))


def _search_nodes(nodes: Sequence[RGraph], forbidden: ForbiddenSpec | None) -> tuple[int, list[RGraph]]:
    best, ws = 0, []
    for G in nodes:
        if forbidden is None or forbidden.admits(G):
            v = min_pos_codegree(G)
            if v > best:
                best, ws = v, [G]
            elif v == best:
                ws.append(G)
    return best, ws


# ---------------------------------------------------------------------------
# brute force over labelled graphs


def _contains(F: RGraph, E: set, n: int, induced: bool) -> bool:
    fe = set(F.edges)
    non = [t for t in itertools.combinations(range(F.n), F.r) if t not in fe] if induced else []
    for phi in itertools.permutations(range(n), F.n):
        if all(tuple(sorted(phi[u] for u in e)) in E for e in fe) and \
                not any(tuple(sorted(phi[u] for u in t)) in E for t in non):
            return True
    return False


def _mpcd(E: set, n: int, r: int) -> int:
    best = None
    for s in itertools.combinations(range(n), r - 1):
        d = sum(1 for z in range(n) if z not in s and tuple(sorted(s + (z,))) in E)
        if d and (best is None or d < best):
            best = d
    return best or 0


def brute_canonical(edges: set, n: int) -> tuple[tuple[int, ...], ...]:
    """Least sorted edge list over all n! relabelings."""
    return min(tuple(sorted(tuple(sorted(p[u] for u in e)) for e in edges))
               for p in itertools.permutations(range(n)))


def naive_oracle(n: int, forbidden: ForbiddenSpec | None = None, r: int = 3) -> ExtremalResult:
    """Same contract as ``co_plus_ex_exact`` by trying every labelled graph."""
    if forbidden is not None:
        r = forbidden.r
    if n > ORACLE_LIMIT:
        raise HypergraphError(f"the brute-force oracle is limited to n <= {ORACLE_LIMIT}")
    if n < 0:
        raise HypergraphError("n must be non-negative")
    triples = list(itertools.combinations(range(n), r))
    family = list(forbidden.family) if forbidden is not None else []
    induced = forbidden is not None and forbidden.mode is ForbidMode.INDUCED
    best, classes = -1, set()
    for mask in range(1 << len(triples)):
        E = {t for i, t in enumerate(triples) if mask >> i & 1}
        if any(F.n <= n and _contains(F, E, n, induced) for F in family):
            continue
        v = _mpcd(E, n, r)
        if v > best:
            best, classes = v, set()
        if v == best:
            classes.add(brute_canonical(E, n))
    if best < 0:
        return ExtremalResult(n, 0, (), 0)
    ws = sorted((canonical_form(RGraph(r, n, c)) for c in classes), key=graph_sort_key)
    return ExtremalResult(n, best, tuple(ws[:WITNESS_CAP]), len(ws))


# ---------------------------------------------------------------------------
# graphs with a minimum positive co-degree threshold


def _with_threshold(G: RGraph, t: int) -> bool:
    return min_pos_codegree(G) >= t or not G.m


def one_vertex_extensions(G: RGraph, t: int):
    """3-graphs on ``G.n + 1`` vertices whose positive co-degrees are all at
    least ``t`` and whose deletion of the new vertex gives ``G``.

    The new vertex ``v`` has a link ``L`` on V(G).  An old pair keeps co-degree
    ``d_G(p) + [p in L]``, which must be 0 or at least ``t``; a pair ``v u``
    has co-degree ``deg_L(u)``, with the same requirement.
    """
    if G.r != 3:
        raise HypergraphError("one-vertex extensions are implemented for 3-graphs")
    n = G.n
    forced, free = [], []
    for p in itertools.combinations(range(n), 2):
        d = len(G.neighborhood(p))
        choices = [x for x in (0, 1) if d + x == 0 or d + x >= t]
        if not choices:
            return
        if len(choices) == 2:
            free.append(p)
        elif choices == [1]:
            forced.append(p)
    for bits in range(1 << len(free)):
        L = forced + [p for i, p in enumerate(free) if bits >> i & 1]
        deg = [0] * n
        for a, b in L:
            deg[a] += 1
            deg[b] += 1
        if all(x == 0 or x >= t for x in deg):
            yield RGraph(3, n + 1, list(G.edges) + [(a, b, n) for a, b in L])


def graphs_with_min_pos_codegree(n: int, t: int) -> list[RGraph]:
    """Canonical 3-graphs on n vertices with every positive co-degree >= t
    (edgeless included).  Built by one-vertex extension of all classes on
    n - 1 vertices, so it reaches n = 7 without enumerating 7-vertex classes."""
    if n <= 3:
        return [G for G in enumerate_up_to_iso(n, 3) if _with_threshold(G, t)]
    found = set()
    for G in enumerate_up_to_iso(n - 1, 3):
        for X in one_vertex_extensions(G, t):
            found.add(canonical_form(X))
    return sorted(found, key=graph_sort_key)
