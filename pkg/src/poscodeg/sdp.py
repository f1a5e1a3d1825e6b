"""Flag-algebra SDP assembly, SDPA export, and exact certificate checks.

Formulation (fixed): maximise ``lam`` subject to, for every basis member H,

    objective(H) - sum_t <Q_t, M_t(H)> - sum_j mu_j c_j(H) >= lam,

with every ``Q_t`` positive semidefinite and ``mu >= 0``.  A certificate
supplies ``Q_t``, ``mu`` and ``lam``; it is checked in exact arithmetic.
"""

from __future__ import annotations

import functools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, lcm
from typing import Callable, Sequence, TextIO

from .enumeration import Family, ForbiddenSpec, induced_family_of_blowup
from .flags import (
    Flag,
    FlagType,
    basis_family,
    density_vector,
    edge_flag,
    generate_flags,
    non_edge_flag,
    pos_codegree_constraint,
    product_expansion,
    product_entries_in,
    unit_flag,
)
from .constructions import fano_complement, named_construction
from .hypergraph import HypergraphError, RGraph, canonical_form

Matrix = list[list[Fraction]]
Entries = dict[tuple[int, int], Fraction]


class CertificateError(HypergraphError):
    """Malformed certificate (wrong shape, non-symmetric block, bad JSON)."""


@dataclass
class TypeBlock:
    type: FlagType
    flags: list[Flag]
    matrices: list[Entries]  # non-zero product entries per basis member

    @property
    def dim(self) -> int:
        return len(self.flags)


@dataclass
class SDPProblem:
    basis: Family
    objective: tuple[Fraction, ...]
    blocks: list[TypeBlock] = field(default_factory=list)
    constraints: list[tuple[Fraction, ...]] = field(default_factory=list)
    name: str = ""

    def __post_init__(self):
        n = len(self.basis)
        self.objective = tuple(Fraction(x) for x in self.objective)
        self.constraints = [tuple(Fraction(x) for x in c) for c in self.constraints]
        if len(self.objective) != n:
            raise HypergraphError(f"objective has length {len(self.objective)}, basis {n}")
        for j, c in enumerate(self.constraints):
            if len(c) != n:
                raise HypergraphError(f"constraint {j} has length {len(c)}, basis {n}")
        for t, b in enumerate(self.blocks):
            if len(b.matrices) != n:
                raise HypergraphError(f"block {t} has {len(b.matrices)} matrices, basis {n}")
            for h, M in enumerate(b.matrices):
                for (i, j), v in M.items():
                    if not (0 <= i < b.dim and 0 <= j < b.dim):
                        raise HypergraphError(f"block {t}, member {h}: entry ({i}, {j}) outside {b.dim}x{b.dim}")
                    if M.get((j, i)) != v:
                        raise HypergraphError(f"block {t}, member {h}: product matrix not symmetric")

    @property
    def block_dims(self) -> list[int]:
        return [b.dim for b in self.blocks]


# ---------------------------------------------------------------------------
# assembly


def type_blocks(basis: Family, types: Sequence[tuple[FlagType, list[Flag]]]) -> list[TypeBlock]:
    """Product matrices for all types in one pass over each basis member."""
    blocks = [TypeBlock(t, list(fl), []) for t, fl in types]
    if not len(basis):
        return blocks
    k = basis[0].n
    for b in blocks:
        for f in b.flags:
            if f.type.sigma != b.type.sigma:
                raise HypergraphError("flag does not have the block's type")
        if b.flags:
            need = 2 * max(f.n for f in b.flags) - b.type.s
            if need > k:
                raise HypergraphError(f"flags of type size {b.type.s} need k >= {need}")
    for H in basis:
        for b in blocks:
            b.matrices.append(product_entries_in(H, b.flags, b.type.sigma))
    return blocks


def types_of_size(s: int, admissible: ForbiddenSpec | None = None) -> list[FlagType]:
    """One fully labelled representative per admissible s-vertex class."""
    return [FlagType(G) for G in basis_family(s, admissible)]


def standard_types(k: int, admissible: ForbiddenSpec | None = None,
                   sizes: Sequence[int] | None = None) -> list[tuple[FlagType, list[Flag]]]:
    """Types of size s with k - s even, flags on (k + s)/2 vertices."""
    if sizes is None:
        sizes = [s for s in range(k % 2, k - 1, 2)]
    out = []
    for s in sizes:
        if (k - s) % 2:
            raise HypergraphError(f"type size {s} does not pair up to k = {k}")
        for t in types_of_size(s, admissible):
            fl = generate_flags(t, (k + s) // 2, admissible)
            out.append((t, fl))
    return out


def assemble_problem(basis: Family, objective: Sequence[Fraction],
                     types: Sequence[tuple[FlagType, list[Flag]]] = (),
                     constraints: Sequence[Sequence[Fraction]] = (), name: str = "") -> SDPProblem:
    return SDPProblem(basis, tuple(objective), type_blocks(basis, types), [tuple(c) for c in constraints], name)


# ---------------------------------------------------------------------------
# SDPA sparse export


def _variables(problem: SDPProblem) -> list[tuple]:
    """Deterministic order: Q entries (block, i <= j), then mu_j, then lam."""
    out: list[tuple] = []
    for t, b in enumerate(problem.blocks):
        for i in range(b.dim):
            for j in range(i, b.dim):
                out.append(("Q", t, i, j))
    out.extend(("mu", j) for j in range(len(problem.constraints)))
    out.append(("lam",))
    return out


@dataclass
class SDPAData:
    """Exact content of an SDPA sparse file: entries keyed by
    (matrix, block, i, j) with 1-based block/row/column and i <= j."""

    c: list[Fraction]
    block_struct: list[int]
    entries: dict[tuple[int, int, int, int], Fraction]
    scale: int = 1

    @property
    def n_vars(self) -> int:
        return len(self.c)


def sdpa_data(problem: SDPProblem) -> SDPAData:
    """Unscaled exact SDPA content for ``problem``."""
    variables = _variables(problem)
    nh = len(problem.basis)
    has_mu = bool(problem.constraints)
    struct = [b.dim for b in problem.blocks if b.dim]
    block_no = {}
    nb = 0
    for t, b in enumerate(problem.blocks):
        if b.dim:
            nb += 1
            block_no[t] = nb
    if has_mu:
        nb += 1
        mu_block = nb
        struct.append(-len(problem.constraints))
    nb += 1
    row_block = nb
    struct.append(-nh)
    ent: dict[tuple[int, int, int, int], Fraction] = {}

    def put(mat, blk, i, j, v):
        if v:
            key = (mat, blk, min(i, j), max(i, j))
            ent[key] = ent.get(key, Fraction(0)) + v
            if not ent[key]:
                del ent[key]

    for h in range(nh):
        put(0, row_block, h + 1, h + 1, -problem.objective[h])
    qvar = {}
    for m, var in enumerate(variables, 1):
        if var[0] == "Q":
            _, t, i, j = var
            qvar[t, i, j] = m
            put(m, block_no[t], i + 1, j + 1, Fraction(1))
        elif var[0] == "mu":
            j = var[1]
            put(m, mu_block, j + 1, j + 1, Fraction(1))
            for h in range(nh):
                put(m, row_block, h + 1, h + 1, -problem.constraints[j][h])
        else:
            for h in range(nh):
                put(m, row_block, h + 1, h + 1, Fraction(-1))
    for t, b in enumerate(problem.blocks):
        for h, M in enumerate(b.matrices):
            for (i, j), v in M.items():
                if i <= j:
                    put(qvar[t, i, j], row_block, h + 1, h + 1, -(1 if i == j else 2) * v)
    c = [Fraction(0)] * (len(variables) - 1) + [Fraction(-1)]
    return SDPAData(c, struct, ent)


def _is_decimal(q: Fraction) -> bool:
    d = q.denominator
    for p in (2, 5):
        while d % p == 0:
            d //= p
    return d == 1


def _render(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    d = q.denominator
    digits = 0
    while (10**digits) % d:
        digits += 1
    scaled = abs(q.numerator) * (10**digits // d)
    s = str(scaled).rjust(digits + 1, "0")
    s = s[:-digits] + "." + s[-digits:]
    return ("-" if q < 0 else "") + s


def write_sdpa(problem: SDPProblem, out: TextIO) -> SDPAData:
    """Write the SDPA sparse file; returns the (possibly scaled) content."""
    data = sdpa_data(problem)
    values = list(data.entries.values()) + data.c
    scale = 1
    if not all(_is_decimal(v) for v in values):
        scale = lcm(*(v.denominator for v in values))
    out.write(f'"poscodeg flag-algebra SDP {problem.name}: maximise lam\n')
    out.write(f'" variables: Q upper triangles per block, then {len(problem.constraints)} multipliers, then lam\n')
    if scale != 1:
        out.write(f"* scale {scale}\n")
    out.write(f"{data.n_vars} = mDIM\n")
    out.write(f"{len(data.block_struct)} = nBLOCK\n")
    out.write(" ".join(map(str, data.block_struct)) + " = bLOCKsTRUCT\n")
    out.write(" ".join(_render(v) for v in data.c) + "\n")
    for key in sorted(data.entries):
        v = data.entries[key] * scale
        out.write(" ".join(map(str, key)) + " " + _render(v) + "\n")
    data.scale = scale
    return data


def export_sdpa(problem: SDPProblem, path: str) -> SDPAData:
    try:
        with open(path, "w") as fh:
            return write_sdpa(problem, fh)
    except OSError as exc:
        raise HypergraphError(f"cannot write {path}: {exc}") from None


def parse_sdpa(text: str) -> SDPAData:
    """Inverse of ``write_sdpa``: entries are divided back by the scale."""
    scale = 1
    body = []
    for line in text.splitlines():
        s = line.strip()
        if not s:
            continue
        if s.startswith("*"):
            parts = s[1:].split()
            if len(parts) == 2 and parts[0] == "scale":
                scale = int(parts[1])
            continue
        if s.startswith('"'):
            continue
        body.append(s.split("=")[0].replace(",", " ").replace("{", " ").replace("}", " ").split())
    try:
        m = int(body[0][0])
        nb = int(body[1][0])
        struct = [int(x) for x in body[2][:nb]]
        c = [Fraction(x) for x in body[3][:m]]
        ent = {}
        for toks in body[4:]:
            mat, blk, i, j = (int(x) for x in toks[:4])
            ent[(mat, blk, min(i, j), max(i, j))] = Fraction(toks[4]) / scale
    except (IndexError, ValueError) as exc:
        raise HypergraphError(f"malformed SDPA file: {exc}") from None
    return SDPAData(c, struct, ent, scale)


# ---------------------------------------------------------------------------
# certificates


@dataclass
class Certificate:
    bound: Fraction
    blocks: list[Matrix]
    multipliers: list[Fraction]

    def to_json(self) -> dict:
        return {
            "bound": str(self.bound),
            "blocks": [[[str(x) for x in row] for row in B] for B in self.blocks],
            "multipliers": [str(x) for x in self.multipliers],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, data: dict) -> "Certificate":
        try:
            return cls(
                Fraction(data["bound"]),
                [[[Fraction(x) for x in row] for row in B] for B in data["blocks"]],
                [Fraction(x) for x in data["multipliers"]],
            )
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise CertificateError(f"malformed certificate JSON: {exc}") from None

    @classmethod
    def trivial(cls, problem: SDPProblem, bound: Fraction = Fraction(0)) -> "Certificate":
        zero = [[[Fraction(0)] * b.dim for _ in range(b.dim)] for b in problem.blocks]
        return cls(Fraction(bound), zero, [Fraction(0)] * len(problem.constraints))


def _read_json_certificate(text: str) -> Certificate:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CertificateError(f"certificate is not JSON: {exc}") from None
    return Certificate.from_json(data)


def _read_companion_certificate(text: str) -> Certificate:
    # extension point: the layout of externally published certificates is
    # not documented; register a converter with register_certificate_reader
    raise CertificateError("no reader for the companion certificate format is installed; "
                           "convert it to the JSON layout or register a reader")


CERTIFICATE_READERS: dict[str, Callable[[str], Certificate]] = {
    "json": _read_json_certificate,
    "companion": _read_companion_certificate,
}


def register_certificate_reader(name: str, reader: Callable[[str], Certificate]) -> None:
    CERTIFICATE_READERS[name] = reader


def read_certificate(text: str, fmt: str = "json") -> Certificate:
    try:
        reader = CERTIFICATE_READERS[fmt]
    except KeyError:
        raise CertificateError(f"unknown certificate format {fmt!r}") from None
    return reader(text)


@dataclass
class PSDCheck:
    ok: bool
    index: int | None = None
    reason: str = ""


def ldl_psd_check(A: Matrix) -> PSDCheck:
    """Exact LDL^T with largest-diagonal symmetric pivoting.

    Rejects on a negative pivot, or on a zero pivot whose remaining rows are
    not all zero.  ``index`` is the original row of the offending pivot.
    """
    n = len(A)
    M = [list(map(Fraction, row)) for row in A]
    alive = list(range(n))
    while alive:
        p = max(alive, key=lambda i: (M[i][i], -i))
        d = M[p][p]
        if d < 0:
            return PSDCheck(False, p, f"negative pivot {d} at row {p}")
        if d == 0:
            for i in alive:
                for j in alive:
                    if M[i][j]:
                        return PSDCheck(False, i, f"zero pivot with non-zero entry at ({i}, {j})")
            return PSDCheck(True)
        alive.remove(p)
        for i in alive:
            f = M[i][p] / d
            if f:
                for j in alive:
                    M[i][j] -= f * M[p][j]
    return PSDCheck(True)


@dataclass
class Verdict:
    accepted: bool
    failures: list[str]
    slacks: tuple[Fraction, ...]
    min_slack: Fraction | None
    argmin: int | None
    argmin_graph: RGraph | None

    def to_json(self) -> dict:
        return {
            "accepted": self.accepted,
            "failures": self.failures,
            "min_slack": None if self.min_slack is None else str(self.min_slack),
            "argmin": self.argmin,
            "slacks": [str(s) for s in self.slacks],
        }


def _check_shape(problem: SDPProblem, cert: Certificate) -> None:
    if len(cert.blocks) != len(problem.blocks):
        raise HypergraphError(f"certificate has {len(cert.blocks)} blocks, problem {len(problem.blocks)}")
    for t, (B, b) in enumerate(zip(cert.blocks, problem.blocks)):
        if len(B) != b.dim or any(len(row) != b.dim for row in B):
            raise HypergraphError(f"certificate block {t} is not {b.dim}x{b.dim}")
    if len(cert.multipliers) != len(problem.constraints):
        raise HypergraphError(f"certificate has {len(cert.multipliers)} multipliers, problem {len(problem.constraints)}")
    for t, B in enumerate(cert.blocks):
        for i in range(len(B)):
            for j in range(i):
                if B[i][j] != B[j][i]:
                    raise CertificateError(f"certificate block {t} is not symmetric at ({j}, {i})")


def member_values(problem: SDPProblem, cert: Certificate) -> tuple[Fraction, ...]:
    """``objective(H) - sum <Q, M(H)> - sum mu c(H)`` for every basis member."""
    out = []
    for h in range(len(problem.basis)):
        v = problem.objective[h]
        for B, b in zip(cert.blocks, problem.blocks):
            for (i, j), x in b.matrices[h].items():
                if B[i][j]:
                    v -= B[i][j] * x
        for mu, c in zip(cert.multipliers, problem.constraints):
            v -= mu * c[h]
        out.append(v)
    return tuple(out)


def verify_certificate(problem: SDPProblem, cert: Certificate) -> Verdict:
    _check_shape(problem, cert)
    failures = []
    for t, B in enumerate(cert.blocks):
        chk = ldl_psd_check(B)
        if not chk.ok:
            failures.append(f"block {t}: {chk.reason}")
    for j, mu in enumerate(cert.multipliers):
        if mu < 0:
            failures.append(f"multiplier {j}: negative value {mu}")
    slacks = tuple(v - cert.bound for v in member_values(problem, cert))
    for h, s in enumerate(slacks):
        if s < 0:
            failures.append(f"basis member {h}: slack {s} < 0")
    if slacks:
        h = min(range(len(slacks)), key=lambda i: (slacks[i], i))
        return Verdict(not failures, failures, slacks, slacks[h], h, problem.basis[h])
    return Verdict(not failures, failures, slacks, None, None, None)


@dataclass
class HostCheck:
    objective_value: Fraction
    product_term: Fraction
    constraint_term: Fraction
    correction: Fraction
    bound: Fraction

    @property
    def holds(self) -> bool:
        return self.objective_value >= self.bound - self.correction


def host_check(problem: SDPProblem, cert: Certificate, host: RGraph) -> HostCheck:
    """Evaluate an accepted certificate against a concrete admissible host.

    Averaging the member inequalities against the host's density vector gives
    ``obj.d >= bound + P + C`` with ``P`` the product term and ``C`` the
    constraint term.  Both are non-negative in the limit but not for each
    finite host, so the correction ``max(0, -(P + C))`` is reported.
    """
    d = density_vector(host, problem.basis)
    obj = d.dot(problem.objective)
    prod = Fraction(0)
    for B, b in zip(cert.blocks, problem.blocks):
        for h, w in enumerate(d.coords):
            if not w:
                continue
            prod += w * sum((B[i][j] * x for (i, j), x in b.matrices[h].items()), Fraction(0))
    cons = sum((mu * d.dot(c) for mu, c in zip(cert.multipliers, problem.constraints)), Fraction(0))
    corr = max(Fraction(0), -(prod + cons))
    return HostCheck(obj, prod, cons, corr, cert.bound)


# ---------------------------------------------------------------------------
# prepared problems for the large computations


def edge_density_vector(basis: Family) -> tuple[Fraction, ...]:
    return tuple(Fraction(H.m, comb(H.n, H.r)) for H in basis)


def outside_family_indicator(basis: Family, fam: Family) -> tuple[Fraction, ...]:
    members = set(fam.members)
    return tuple(Fraction(0) if canonical_form(H) in members else Fraction(-1) for H in basis)


def min_codegree_constraints(num: int, den: int, k: int, basis: Family) -> list[tuple[Fraction, ...]]:
    """Unlabelled ``(E - c) F`` for F in {unit, E, non-edge}, c = num/den:
    every pair has co-degree at least ``c (n - 2)``."""
    c = Fraction(num, den)
    E, N = edge_flag(), non_edge_flag()
    U = unit_flag(E.type)
    out = []
    for F in (U, E, N):
        a = product_expansion(E, F, k, basis)
        b = product_expansion(U, F, k, basis) if F != U else tuple(Fraction(1) for _ in basis)
        out.append(tuple(x - c * y for x, y in zip(a, b)))
    return out


@dataclass(frozen=True)
class PresetInfo:
    description: str
    forbidden: str
    target: str


PRESETS = {
    "j4-pos-codegree-structure": PresetInfo(
        "J4-free, positive co-degree >= 4/7; objective minus the density outside the 13-member "
        "blow-up family; bound 0 shows that density vanishes", "Jk:4", "0"),
    "f42-pos-codegree-structure": PresetInfo(
        "F42-free, positive co-degree >= 3/5; objective minus the density outside the 7-member "
        "blow-up family of K5; bound 0 shows that density vanishes", "F42", "0"),
    "f42-edge-density": PresetInfo(
        "F42-free; objective minus edge density; bound -b proves Turan density <= b", "F42", "-4933327/10000000"),
    "f42-codegree": PresetInfo(
        "F42-free, every co-degree >= 4185/10000; objective minus edge density; any bound above "
        "-4185/10000 is a contradiction", "F42", "> -837/2000"),
    "f33-pos-codegree": PresetInfo(
        "F33-free, positive co-degree >= 77/125; objective minus edge density; bound 0 shows the "
        "edge density vanishes", "F33", "0"),
}


@functools.lru_cache(maxsize=4)
def _prepared(forbidden: str, k: int, type_sizes: tuple[int, ...] | None):
    # presets sharing a forbidden graph reuse one basis and one set of blocks
    adm = ForbiddenSpec.of([named_construction(forbidden)])
    basis = basis_family(k, adm)
    blocks = type_blocks(basis, standard_types(k, adm, type_sizes))
    return basis, blocks


def preset_problem(name: str, k: int = 6, type_sizes: Sequence[int] | None = None) -> SDPProblem:
    if name not in PRESETS:
        raise HypergraphError(f"unknown preset {name!r}; known: {', '.join(PRESETS)}")
    info = PRESETS[name]
    basis, blocks = _prepared(info.forbidden, k, None if type_sizes is None else tuple(type_sizes))
    constraints: list = []
    if name == "j4-pos-codegree-structure":
        objective = outside_family_indicator(basis, induced_family_of_blowup(fano_complement(), k))
        constraints = [pos_codegree_constraint(4, 7, k, basis)]
    elif name == "f42-pos-codegree-structure":
        objective = outside_family_indicator(basis, induced_family_of_blowup(named_construction("K5"), k))
        constraints = [pos_codegree_constraint(3, 5, k, basis)]
    elif name == "f42-edge-density":
        objective = tuple(-x for x in edge_density_vector(basis))
    elif name == "f42-codegree":
        objective = tuple(-x for x in edge_density_vector(basis))
        constraints = min_codegree_constraints(4185, 10000, k, basis)
    else:
        objective = tuple(-x for x in edge_density_vector(basis))
        constraints = [pos_codegree_constraint(77, 125, k, basis)]
    return SDPProblem(basis, objective, blocks, constraints, name)
