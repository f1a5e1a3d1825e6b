"""Isomorphism classes of small r-graphs, optionally avoiding a forbidden family.

Generation is by canonical augmentation: every class ``X`` with at least one
edge has a unique parent class, namely ``X`` minus the edge that its
canonical labelling places last.  A child ``G + e`` is kept only when that
edge deletion leads back to ``G``, so each class is produced from exactly one
parent and duplicates can only arise among siblings, which are merged locally.
"""

from __future__ import annotations

import enum
import itertools
import json
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable, Iterable, Iterator, Sequence

from .constructions import instantiate_blowup
from .hypergraph import (
    HypergraphError,
    RGraph,
    canonical_form,
    canonical_labeling,
    exists_embedding,
    induced_subgraph,
)

SOFT_VERTEX_LIMIT = 8


def graph_sort_key(G: RGraph) -> tuple:
    return (G.n, G.m, G.edges)


@dataclass(frozen=True)
class Family:
    """Pairwise non-isomorphic canonical graphs of one uniformity, sorted."""

    r: int
    members: tuple[RGraph, ...]
    names: tuple[str | None, ...]

    def __init__(self, r: int, members: Iterable[RGraph] = (), names: Iterable[str | None] | None = None):
        members = list(members)
        names = list(names) if names is not None else [None] * len(members)
        if len(names) != len(members):
            raise HypergraphError("one name per member is required")
        seen: dict[RGraph, str | None] = {}
        for G, name in zip(members, names):
            if G.r != r:
                raise HypergraphError(f"member of uniformity {G.r} in a family of {r}-graphs")
            C = canonical_form(G)
            if C not in seen or seen[C] is None:
                seen[C] = name
        order = sorted(seen, key=graph_sort_key)
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "members", tuple(order))
        object.__setattr__(self, "names", tuple(seen[C] for C in order))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[RGraph]:
        return iter(self.members)

    def __getitem__(self, i: int) -> RGraph:
        return self.members[i]

    def __contains__(self, G: object) -> bool:
        return isinstance(G, RGraph) and G.r == self.r and canonical_form(G) in set(self.members)

    def index_of(self, G: RGraph) -> int | None:
        C = canonical_form(G)
        return next((i for i, M in enumerate(self.members) if M == C), None)

    def to_json(self) -> dict:
        out = []
        for G, name in zip(self.members, self.names):
            rec: dict = {"n": G.n, "edges": [list(e) for e in G.edges]}
            if name is not None:
                rec = {"name": name, **rec}
            out.append(rec)
        return {"r": self.r, "members": out}

    @classmethod
    def from_json(cls, data: dict) -> "Family":
        try:
            r = int(data["r"])
            recs = data["members"]
            graphs = [RGraph(r, int(m["n"]), m["edges"]) for m in recs]
            names = [m.get("name") for m in recs]
        except (KeyError, TypeError, ValueError) as exc:
            raise HypergraphError(f"malformed family JSON: {exc}") from None
        return cls(r, graphs, names)

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1)


class ForbidMode(enum.Enum):
    SUBGRAPH = "subgraph"
    INDUCED = "induced"


@dataclass(frozen=True)
class ForbiddenSpec:
    family: Family
    mode: ForbidMode = ForbidMode.SUBGRAPH

    @classmethod
    def none(cls, r: int) -> "ForbiddenSpec":
        return cls(Family(r))

    @classmethod
    def of(cls, graphs: Sequence[RGraph], r: int | None = None, mode: str | ForbidMode = "subgraph") -> "ForbiddenSpec":
        if r is None:
            if not graphs:
                raise HypergraphError("uniformity needed for an empty forbidden family")
            r = graphs[0].r
        return cls(Family(r, graphs), ForbidMode(mode))

    @property
    def r(self) -> int:
        return self.family.r

    def admits(self, H: RGraph) -> bool:
        induced = self.mode is ForbidMode.INDUCED
        return all(F.n > H.n or exists_embedding(F, H, induced) is None for F in self.family)


# ---------------------------------------------------------------------------
# canonical augmentation


def _drop_edge(G: RGraph, e: tuple[int, ...]) -> RGraph:
    return RGraph(G.r, G.n, (f for f in G.edges if f != e))


def canonical_children(G: RGraph, prune: Sequence[RGraph] = ()) -> list[RGraph]:
    """Canonical children of the canonical graph ``G`` one edge up.

    ``prune`` lists graphs that no child may contain as a subgraph; since
    containment survives adding edges, nothing beyond a pruned child is lost.
    """
    edges = G.edge_set
    out: dict[RGraph, None] = {}
    rejected: set[RGraph] = set()
    for e in itertools.combinations(range(G.n), G.r):
        if e in edges:
            continue
        X = G.add_edges([e])
        C, lab = canonical_labeling(X)
        if C in out or C in rejected:
            continue
        rejected.add(C)
        inv = [0] * X.n
        for v, i in enumerate(lab):
            inv[i] = v
        last = tuple(sorted(inv[u] for u in C.edges[-1]))
        if last != e and canonical_form(_drop_edge(X, last)) != G:
            continue
        if any(exists_embedding(F, C) is not None for F in prune):
            continue
        rejected.discard(C)
        out[C] = None
    return list(out)


def _walk(root: RGraph, prune: Sequence[RGraph], descend: Callable[[RGraph], bool]) -> None:
    stack = [root]
    while stack:
        G = stack.pop()
        if descend(G):
            stack.extend(reversed(canonical_children(G, prune)))


def _prune_list(forbidden: ForbiddenSpec | None, n: int) -> list[RGraph]:
    if forbidden is None or forbidden.mode is ForbidMode.INDUCED:
        return []
    return [F for F in forbidden.family if F.n <= n]


def _subtree(args: tuple[RGraph, tuple[RGraph, ...]]) -> list[RGraph]:
    root, prune = args
    out: list[RGraph] = []

    def visit(G: RGraph) -> bool:
        out.append(G)
        return True

    _walk(root, prune, visit)
    return out


def frontier(root: RGraph, prune: Sequence[RGraph], size: int) -> tuple[list[RGraph], list[RGraph]]:
    """Expand the tree breadth-first until at least ``size`` open nodes remain.

    Returns ``(closed, open)``: ``closed`` nodes were fully expanded, and the
    subtrees below ``open`` nodes together cover everything else.
    """
    closed: list[RGraph] = []
    level = [root]
    while level and len(level) < size:
        nxt = []
        for G in level:
            nxt.extend(canonical_children(G, prune))
        closed.extend(level)
        level = nxt
    return closed, level


def enumerate_up_to_iso(n: int, r: int, forbidden: ForbiddenSpec | None = None, jobs: int = 1) -> Family:
    """One canonical representative of every class of admissible n-vertex r-graphs."""
    if r < 1 or n < 0:
        raise HypergraphError(f"need r >= 1 and n >= 0, got n={n}, r={r}")
    if forbidden is not None and forbidden.r != r:
        raise HypergraphError(f"forbidden family has uniformity {forbidden.r}, expected {r}")
    if n > SOFT_VERTEX_LIMIT:
        warnings.warn(f"enumerating {n}-vertex graphs may take very long", RuntimeWarning, stacklevel=2)
    prune = tuple(_prune_list(forbidden, n))
    root = RGraph(r, n)
    if any(F.m == 0 and F.n <= n for F in prune):
        return Family(r)

    if jobs > 1:
        closed, opened = frontier(root, prune, 8 * jobs)
        graphs = list(closed)
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_subtree, [(G, prune) for G in opened]):
                graphs.extend(part)
    else:
        graphs = _subtree((root, prune))

    if n > 7:
        # beyond the verified range keep a global dedup as a safety net
        graphs = list(dict.fromkeys(graphs))
    if forbidden is not None:
        graphs = [G for G in graphs if forbidden.admits(G)]
    return Family(r, graphs)


# ---------------------------------------------------------------------------
# families derived from blow-ups and subgraphs


def blowup_multisets(base: RGraph, k: int) -> dict[RGraph, list[tuple[int, ...]]]:
    """Canonical k-vertex induced subgraphs of blow-ups of ``base`` mapped to
    every multiset of base vertices (sorted tuple) that realises them."""
    if k < base.r:
        raise HypergraphError(f"k must be at least r = {base.r}, got {k}")
    out: dict[RGraph, list[tuple[int, ...]]] = {}
    for ms in itertools.combinations_with_replacement(range(base.n), k):
        sizes = [ms.count(v) for v in range(base.n)]
        C = canonical_form(instantiate_blowup(base, sizes))
        out.setdefault(C, []).append(ms)
    return out


def induced_family_of_blowup(base: RGraph, k: int) -> Family:
    """Classes of k-vertex induced subgraphs of large balanced blow-ups of ``base``.

    Any k vertices of a blow-up meet at most k classes with multiplicity at
    most k, so multisets of size k over the base cover every case.  Each
    member is named by the first multiset (0-based) that produces it.
    """
    found = blowup_multisets(base, k)
    members = list(found)
    names = ["classes " + ",".join(str(v) for v in found[C][0]) for C in members]
    return Family(base.r, members, names)


def induced_subfamily(fam: Family, k: int) -> Family:
    """All classes of k-vertex induced subgraphs of members of ``fam``."""
    out = []
    for G in fam:
        if G.n < k:
            continue
        for S in itertools.combinations(range(G.n), k):
            out.append(induced_subgraph(G, S))
    return Family(fam.r, out)


def filter_containing(fam: Family, target: RGraph, induced: bool = False) -> Family:
    """Members that contain ``target`` (as an induced subgraph if asked)."""
    if target.r != fam.r:
        raise HypergraphError(f"target has uniformity {target.r}, family {fam.r}")
    for G in fam:
        if target.n > G.n:
            raise HypergraphError(f"target has {target.n} vertices, a member only {G.n}")
    keep = [(G, name) for G, name in zip(fam.members, fam.names) if exists_embedding(target, G, induced) is not None]
    return Family(fam.r, [g for g, _ in keep], [nm for _, nm in keep])


# ---------------------------------------------------------------------------
# independent count by Burnside's lemma


def _set_permutation(perm: Sequence[int], sets: list[tuple[int, ...]], index: dict) -> list[int]:
    return [index[tuple(sorted(perm[v] for v in s))] for s in sets]


def burnside_count(n: int, r: int, forbidden: ForbiddenSpec | None = None) -> int:
    """Number of isomorphism classes by averaging fixed labelled graphs over S_n.

    Without a forbidden family this is the cycle count formula; otherwise every
    labelled graph is tested, so keep ``C(n, r)`` small (at most about 10).
    """
    sets = list(itertools.combinations(range(n), r)) if n >= r else []
    index = {s: i for i, s in enumerate(sets)}
    perms = [_set_permutation(p, sets, index) for p in itertools.permutations(range(n))]
    total = 0
    if forbidden is None or not forbidden.family.members:
        for sp in perms:
            seen = [False] * len(sets)
            cycles = 0
            for i in range(len(sets)):
                if not seen[i]:
                    cycles += 1
                    j = i
                    while not seen[j]:
                        seen[j] = True
                        j = sp[j]
            total += 2**cycles
    else:
        if len(sets) > 12:
            raise HypergraphError("labelled enumeration with a forbidden family is limited to 12 potential edges")
        admissible = []
        for mask in range(1 << len(sets)):
            G = RGraph(r, n, (sets[i] for i in range(len(sets)) if mask >> i & 1))
            if forbidden.admits(G):
                admissible.append(mask)
        for sp in perms:
            for mask in admissible:
                image = 0
                for i in range(len(sets)):
                    if mask >> i & 1:
                        image |= 1 << sp[i]
                if image == mask:
                    total += 1
    q = Fraction(total, factorial(n))
    assert q.denominator == 1
    return int(q)
