"""Labelled edge patterns and case-analysis suites.

A pattern on ``m`` vertices lists edges that must be present and triples
that must be absent.  Patterns are labelled: two patterns differing only by
a vertex permutation are distinct objects, because case analyses fix the
role of every vertex.
"""

from __future__ import annotations

import itertools
import json
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator, Sequence

from .constructions import named_construction
from .enumeration import Family, induced_family_of_blowup
from .hypergraph import HypergraphError, RGraph, exists_embedding

FIXTURE_ENV = "POSCODEG_FIXTURES"


class SuiteError(HypergraphError):
    """Malformed pattern or suite configuration."""


def fixture_dir() -> Path:
    env = os.environ.get(FIXTURE_ENV)
    return Path(env) if env else Path(__file__).with_name("fixtures")


def resolve_fixture(path: str | os.PathLike, relative_to: Path | None = None) -> Path:
    """Find a fixture: as given, next to ``relative_to``, then in the fixture dir."""
    p = Path(path)
    candidates = [p]
    if relative_to is not None and not p.is_absolute():
        candidates.append(relative_to / p)
    candidates += [fixture_dir() / p, fixture_dir() / p.name]
    for c in candidates:
        if c.is_file():
            return c
    raise FileNotFoundError(f"fixture not found: {path}")


@dataclass(frozen=True)
class Pattern:
    m: int
    required: tuple[tuple[int, ...], ...]
    forbidden: tuple[tuple[int, ...], ...]
    r: int = 3
    labels: tuple[str, ...] | None = None

    def __init__(self, m, required=(), forbidden=(), r: int = 3, labels: Sequence[str] | None = None):
        req = sorted({tuple(sorted(e)) for e in required})
        forb = sorted({tuple(sorted(e)) for e in forbidden})
        for e in itertools.chain(req, forb):
            if len(e) != r or len(set(e)) != r or e[0] < 0 or e[-1] >= m:
                raise SuiteError(f"{e} is not an {r}-subset of 0..{m - 1}")
        clash = set(req) & set(forb)
        if clash:
            raise SuiteError(f"triples both required and forbidden: {sorted(clash)}")
        if labels is not None and len(labels) != m:
            raise SuiteError(f"{len(labels)} labels for {m} vertices")
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "required", tuple(req))
        object.__setattr__(self, "forbidden", tuple(forb))
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "labels", tuple(labels) if labels is not None else None)

    def required_graph(self) -> RGraph:
        return RGraph(self.r, self.m, self.required)

    def without_required(self, e: Sequence[int]) -> "Pattern":
        key = tuple(sorted(e))
        return Pattern(self.m, [f for f in self.required if f != key], self.forbidden, self.r, self.labels)

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels else str(v)

    def to_json(self) -> dict:
        out: dict = {"m": self.m, "required": [list(e) for e in self.required], "forbidden": [list(e) for e in self.forbidden]}
        if self.r != 3:
            out["r"] = self.r
        if self.labels:
            out["labels"] = list(self.labels)
        return out

    @classmethod
    def from_json(cls, data: dict) -> "Pattern":
        """Edges may be index lists or, when ``labels`` is given, label lists."""
        try:
            labels = data.get("labels")
            r = int(data.get("r", 3))
            m = int(data["m"]) if "m" in data else len(labels)
            index = {name: i for i, name in enumerate(labels)} if labels else {}

            def conv(e):
                return [index[v] if isinstance(v, str) else int(v) for v in e]

            return cls(m, [conv(e) for e in data.get("required", [])], [conv(e) for e in data.get("forbidden", [])], r, labels)
        except (KeyError, TypeError, ValueError) as exc:
            raise SuiteError(f"malformed pattern: {exc!r}") from None


def _search_order(p: Pattern) -> list[int]:
    deg = [0] * p.m
    for e in p.required:
        for v in e:
            deg[v] += 1
    return sorted(range(p.m), key=lambda v: (-deg[v], v))


def iter_pattern_embeddings(H: RGraph, p: Pattern) -> Iterator[tuple[int, ...]]:
    """Injective maps (tuples indexed by pattern vertex) respecting ``p``, in
    the search order; use :func:`find_pattern_embeddings` for sorted output."""
    if p.r != H.r:
        raise HypergraphError(f"uniformity mismatch: pattern {p.r}, graph {H.r}")
    if p.m > H.n:
        return
    order = _search_order(p)
    pos = {v: i for i, v in enumerate(order)}
    req_at: list[list[tuple[int, ...]]] = [[] for _ in order]
    forb_at: list[list[tuple[int, ...]]] = [[] for _ in order]
    for e in p.required:
        req_at[max(pos[v] for v in e)].append(e)
    for e in p.forbidden:
        forb_at[max(pos[v] for v in e)].append(e)
    hedges = H.edge_set
    phi = [-1] * p.m
    used = [False] * H.n

    def rec(i: int) -> Iterator[tuple[int, ...]]:
        if i == p.m:
            yield tuple(phi)
            return
        v = order[i]
        for w in range(H.n):
            if used[w]:
                continue
            phi[v] = w
            if all(tuple(sorted(phi[u] for u in e)) in hedges for e in req_at[i]) and all(
                tuple(sorted(phi[u] for u in e)) not in hedges for e in forb_at[i]
            ):
                used[w] = True
                yield from rec(i + 1)
                used[w] = False
        phi[v] = -1

    yield from rec(0)


def find_pattern_embeddings(H: RGraph, p: Pattern) -> list[tuple[int, ...]]:
    return sorted(iter_pattern_embeddings(H, p))


def first_pattern_embedding(H: RGraph, p: Pattern) -> tuple[int, ...] | None:
    return next(iter_pattern_embeddings(H, p), None)


@dataclass(frozen=True)
class ExclusionVerdict:
    excluded: bool
    member: int | None = None
    embedding: tuple[int, ...] | None = None


def family_excludes_pattern(fam: Family | Sequence[RGraph], p: Pattern) -> ExclusionVerdict:
    """Excluded iff no member admits an embedding; else the first witness."""
    for i, G in enumerate(fam):
        phi = first_pattern_embedding(G, p)
        if phi is not None:
            best = min(iter_pattern_embeddings(G, p))
            return ExclusionVerdict(False, i, best)
    return ExclusionVerdict(True)


# ---------------------------------------------------------------------------
# suites


@dataclass
class SuiteEntry:
    name: str
    pattern: Pattern
    family: str
    expect: str  # "excluded", "not-excluded" or "locate"
    locate: str | None = None
    note: str | None = None


@dataclass
class EntryResult:
    name: str
    passed: bool
    detail: str


@dataclass
class SuiteReport:
    name: str
    results: list[EntryResult] = field(default_factory=list)

    @property
    def failures(self) -> int:
        return sum(1 for r in self.results if not r.passed)

    @property
    def passed(self) -> bool:
        return self.failures == 0


@dataclass
class Suite:
    name: str
    families: dict[str, Family]
    entries: list[SuiteEntry]


def _load_family(spec: dict, base_dir: Path | None) -> Family:
    if "file" in spec:
        path = resolve_fixture(spec["file"], base_dir)
        with open(path) as fh:
            return Family.from_json(json.load(fh))
    if "blowup" in spec:
        return induced_family_of_blowup(named_construction(spec["blowup"]), int(spec["k"]))
    if "named" in spec:
        names = list(spec["named"])
        graphs = [named_construction(n) for n in names]
        return Family(graphs[0].r, graphs, names)
    if "members" in spec:
        return Family.from_json(spec)
    raise SuiteError(f"family spec needs 'file', 'blowup', 'named' or inline 'members': {sorted(spec)}")


def parse_suite(data: dict, base_dir: Path | None = None) -> Suite:
    try:
        fams = {key: _load_family(spec, base_dir) for key, spec in data["families"].items()}
        entries = []
        for raw in data["entries"]:
            expect = raw["expect"]
            locate = None
            if isinstance(expect, dict):
                locate = expect["locate"]
                expect = "locate"
            if expect not in ("excluded", "not-excluded", "locate"):
                raise SuiteError(f"unknown expectation {expect!r}")
            if raw["family"] not in fams:
                raise SuiteError(f"entry {raw.get('name')!r} references unknown family {raw['family']!r}")
            entries.append(SuiteEntry(raw["name"], Pattern.from_json(raw["pattern"]), raw["family"], expect, locate, raw.get("note")))
        return Suite(data.get("name", "suite"), fams, entries)
    except (KeyError, TypeError) as exc:
        raise SuiteError(f"malformed suite: missing or bad field {exc}") from None
    except (FileNotFoundError, json.JSONDecodeError) as exc:
        raise SuiteError(f"cannot load family: {exc}") from None


def load_suite(path: str | os.PathLike) -> Suite:
    p = resolve_fixture(path, Path.cwd())
    try:
        with open(p) as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise SuiteError(f"{p}: invalid JSON: {exc}") from None
    return parse_suite(data, p.parent)


def _format_map(p: Pattern, G: RGraph, phi: Sequence[int]) -> str:
    return ", ".join(f"{p.label(v)}->{w}" for v, w in enumerate(phi))


def run_entry(entry: SuiteEntry, fam: Family) -> EntryResult:
    p = entry.pattern
    if entry.expect == "locate":
        names = list(fam.names)
        if entry.locate not in names:
            raise SuiteError(f"family has no member named {entry.locate!r}")
        target = fam.members[names.index(entry.locate)]
        phi = exists_embedding(target, p.required_graph())
        if phi is None:
            return EntryResult(entry.name, False, f"no copy of {entry.locate} in the required edges")
        image = sorted(tuple(sorted(phi[u] for u in e)) for e in target.edges)
        where = " ".join("".join(p.label(w) for w in e) if p.labels else "-".join(map(str, e)) for e in image)
        return EntryResult(entry.name, True, f"{entry.locate} as {where}")
    verdict = family_excludes_pattern(fam, p)
    want = entry.expect == "excluded"
    if verdict.excluded:
        detail = "excluded"
    else:
        member = fam.names[verdict.member] or f"member {verdict.member}"
        detail = f"embeds into {member}: {_format_map(p, fam[verdict.member], verdict.embedding)}"
    return EntryResult(entry.name, verdict.excluded == want, detail)


def check_case_suite(suite: Suite) -> SuiteReport:
    report = SuiteReport(suite.name)
    for entry in suite.entries:
        report.results.append(run_entry(entry, suite.families[entry.family]))
    return report


# ---------------------------------------------------------------------------
# patterns forced by a blow-up partition


def partition_case_pattern(
    base: RGraph,
    core: Sequence[int],
    window: Sequence[tuple[str, int]],
    violation: Sequence[str],
    violation_is_edge: bool,
    classes_proven: bool = False,
) -> Pattern:
    """Edge pattern forced on a window when vertices are sorted into blow-up classes.

    The setting: core vertices ``x1, x2, ...`` sit in base classes ``core``
    and span the corresponding base subgraph; every other vertex ``v`` of a
    class ``t`` forms an edge with a core pair ``x_j x_k`` exactly when
    ``{t, class(x_j), class(x_k)}`` is a base edge (so never when ``t`` is one
    of those classes).  ``window`` lists ``(label, class)`` pairs; labels
    ``x1, x2, ...`` denote core vertices.  ``violation`` names a triple whose
    status contradicts the blow-up, and is required (or forbidden) accordingly.
    With ``classes_proven`` every triple meeting a class twice is forbidden.
    Triples with two or more non-core vertices are otherwise left free.
    """
    labels = [name for name, _ in window]
    if len(set(labels)) != len(labels):
        raise SuiteError("window labels must be distinct")
    cls = dict(window)
    core_label = {f"x{i + 1}": c for i, c in enumerate(core)}
    for name, c in window:
        if name in core_label and core_label[name] != c:
            raise SuiteError(f"{name} is a core vertex of class {core_label[name]}, not {c}")
    def forced(t: tuple[int, ...]) -> bool | None:
        names = [labels[i] for i in t]
        classes = [cls[nm] for nm in names]
        if classes_proven and len(set(classes)) < 3:
            return False
        if sum(1 for nm in names if nm in core_label) >= 2:
            return len(set(classes)) == 3 and base.has_edge(classes)
        return None

    viol = tuple(sorted(labels.index(v) for v in violation))
    if forced(viol) is not None:
        raise SuiteError("the violating triple is already determined by the partition")
    required, forbidden = [], []
    for t in itertools.combinations(range(len(labels)), 3):
        status = violation_is_edge if t == viol else forced(t)
        if status is True:
            required.append(t)
        elif status is False:
            forbidden.append(t)
    return Pattern(len(labels), required, forbidden, 3, labels)


def find_excluding_window(
    fam: Family,
    base: RGraph,
    core: Sequence[int],
    case: Sequence[tuple[str, int]],
    violation: Sequence[str],
    violation_is_edge: bool,
    classes_proven: bool = False,
    size: int | None = None,
) -> Pattern | None:
    """First window (case vertices plus extra core vertices, in index order)
    whose forced pattern ``fam`` excludes."""
    size = size or max(G.n for G in fam)
    present = {name for name, _ in case}
    spare = [(f"x{i + 1}", c) for i, c in enumerate(core) if f"x{i + 1}" not in present]
    need = size - len(case)
    if need < 0:
        raise SuiteError("case has more vertices than the window")
    for extra in itertools.combinations(spare, min(need, len(spare))):
        window = sorted(list(extra) + list(case), key=lambda nc: (not nc[0].startswith("x"), nc[0]))
        try:
            p = partition_case_pattern(base, core, window, violation, violation_is_edge, classes_proven)
        except SuiteError:
            return None
        if family_excludes_pattern(fam, p).excluded:
            return p
    return None
