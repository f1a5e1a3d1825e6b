"""Command-line entry point.

Exit status: 0 on success, 1 when a check verb (suite, verify-cert) finds a
failure, 2 on usage, input or parse errors.  Graphs are read in the text
record format from a file, from a named construction, or from stdin.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Sequence

from . import constructions as C
from . import enumeration as EN
from . import extremal as EX
from . import flags as FL
from . import hypergraph as HG
from . import patterns as PT
from . import sdp as SDP
from .graphio import format_graph, format_graphs, graph_to_json, parse_graph, parse_graphs


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# input helpers


def _read_text(arg: str | None) -> str:
    if arg is None or arg == "-":
        return sys.stdin.read()
    with open(arg) as fh:
        return fh.read()


def load_graph(arg: str | None) -> HG.RGraph:
    """A file in the text format, a named construction, or stdin for '-'."""
    if arg is not None and arg != "-" and not os.path.exists(arg):
        return C.named_construction(arg)
    return parse_graph(_read_text(arg))


def load_family(arg: str | None, r: int = 3) -> EN.Family:
    """JSON family file (also looked up among the fixtures), text graph
    stream, ``blowup:NAME:k`` or ``NAME,NAME``."""
    if arg is not None and arg != "-" and not os.path.exists(arg):
        try:
            arg = str(PT.resolve_fixture(arg, None))
        except FileNotFoundError:
            pass
    if arg is not None and arg != "-" and not os.path.exists(arg):
        if arg.startswith("blowup:"):
            try:
                _, name, k = arg.split(":")
                return EN.induced_family_of_blowup(C.named_construction(name), int(k))
            except ValueError:
                raise UsageError(f"expected blowup:NAME:k, got {arg!r}") from None
        names = arg.split(",")
        graphs = [C.named_construction(n) for n in names]
        return EN.Family(graphs[0].r, graphs, names)
    text = _read_text(arg)
    if text.lstrip().startswith("{"):
        try:
            return EN.Family.from_json(json.loads(text))
        except json.JSONDecodeError as exc:
            raise UsageError(f"invalid family JSON: {exc}") from None
    graphs = parse_graphs(text)
    return EN.Family(graphs[0].r if graphs else r, graphs)


def _forbidden(args, r: int = 3) -> EN.ForbiddenSpec | None:
    if not args.forbid:
        return None
    graphs = [load_graph(a) for a in args.forbid]
    mode = "induced" if getattr(args, "induced", False) else "subgraph"
    return EN.ForbiddenSpec.of(graphs, r, mode)


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"not a rational number: {text!r}") from None


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(",", " ").split()]
    except ValueError:
        raise UsageError(f"expected integers, got {text!r}") from None


# ---------------------------------------------------------------------------
# output


class Out:
    def __init__(self, fmt: str):
        self.json = fmt == "json"
        self.lines: list[str] = []
        self.data: dict = {}

    def text(self, s: str) -> None:
        self.lines.append(s.rstrip("\n"))

    def emit(self) -> None:
        if self.json:
            sys.stdout.write(json.dumps(self.data, indent=1) + "\n")
        elif self.lines:
            sys.stdout.write("\n".join(self.lines) + "\n")


def _map_text(phi: Sequence[int]) -> str:
    return " ".join(f"{v}->{w}" for v, w in enumerate(phi))


def _frac(q: Fraction) -> str:
    return str(Fraction(q))


# ---------------------------------------------------------------------------
# verbs


def cmd_construct(args, out: Out) -> int:
    G = C.named_construction(args.spec)
    out.text(format_graph(G))
    out.data = graph_to_json(G)
    return 0


def cmd_mpcd(args, out: Out) -> int:
    v = HG.min_pos_codegree(load_graph(args.graph))
    out.text(str(v))
    out.data = {"min_pos_codegree": v}
    return 0


def cmd_link(args, out: Out) -> int:
    L = HG.link_graph(load_graph(args.graph), args.vertex)
    out.text(format_graph(L))
    out.data = graph_to_json(L)
    return 0


def cmd_iso(args, out: Out) -> int:
    same = HG.is_isomorphic(load_graph(args.first), load_graph(args.second))
    out.text("isomorphic" if same else "not isomorphic")
    out.data = {"isomorphic": same}
    return 0


def cmd_hom(args, out: Out) -> int:
    phi = HG.exists_homomorphism(load_graph(args.source), load_graph(args.target))
    out.text("no homomorphism" if phi is None else _map_text(phi))
    out.data = {"homomorphism": None if phi is None else list(phi)}
    return 0


def cmd_embed(args, out: Out) -> int:
    phi = HG.exists_embedding(load_graph(args.pattern), load_graph(args.host), args.induced)
    out.text("no embedding" if phi is None else _map_text(phi))
    out.data = {"embedding": None if phi is None else list(phi)}
    return 0


def cmd_classify(args, out: Out) -> int:
    graphs = [load_graph(a) for a in (args.graphs or ["-"])]
    region = HG.classify_gamma_region(graphs if len(graphs) > 1 else graphs[0])
    out.text(region.value)
    out.data = {"region": region.value}
    return 0


def cmd_enumerate(args, out: Out) -> int:
    fam = EN.enumerate_up_to_iso(args.n, args.r, _forbidden(args, args.r), jobs=args.jobs)
    if args.count:
        out.text(str(len(fam)))
    else:
        out.text(format_graphs(fam))
    out.data = {"count": len(fam), **({} if args.count else fam.to_json())}
    return 0


def _emit_family(fam: EN.Family, out: Out) -> None:
    out.text(format_graphs(fam, fam.names))
    out.data = fam.to_json()


def cmd_family_extract(args, out: Out) -> int:
    _emit_family(EN.induced_family_of_blowup(load_graph(args.base), args.k), out)
    return 0


def cmd_filter(args, out: Out) -> int:
    fam = load_family(args.family)
    if args.subgraphs is not None:
        fam = EN.induced_subfamily(fam, args.subgraphs)
    if args.containing is not None:
        fam = EN.filter_containing(fam, load_graph(args.containing), args.induced)
    _emit_family(fam, out)
    return 0


def cmd_pattern(args, out: Out) -> int:
    fam = load_family(args.family)
    text = args.pattern
    if os.path.exists(text):
        with open(text) as fh:
            text = fh.read()
    try:
        p = PT.Pattern.from_json(json.loads(text))
    except json.JSONDecodeError as exc:
        raise UsageError(f"invalid pattern JSON: {exc}") from None
    v = PT.family_excludes_pattern(fam, p)
    if v.excluded:
        out.text("excluded")
    else:
        name = fam.names[v.member] or f"member {v.member}"
        out.text(f"embeds into {name}: " + " ".join(f"{p.label(i)}->{w}" for i, w in enumerate(v.embedding)))
    out.data = {"excluded": v.excluded, "member": v.member,
                "embedding": None if v.embedding is None else list(v.embedding)}
    return 0


def cmd_suite(args, out: Out) -> int:
    report = PT.check_case_suite(PT.load_suite(args.path))
    for r in report.results:
        out.text(f"{'ok  ' if r.passed else 'FAIL'} {r.name}: {r.detail}")
    out.text(f"{'PASS' if report.passed else 'FAIL'} {report.failures} failures")
    out.data = {"suite": report.name, "failures": report.failures,
                "results": [{"name": r.name, "passed": r.passed, "detail": r.detail} for r in report.results]}
    return 0 if report.passed else 1


def cmd_optimize_weights(args, out: Out) -> int:
    res = C.optimize_blowup_weights(load_graph(args.base))
    out.text(f"value {_frac(res.value)}")
    out.text("weights " + " ".join(_frac(w) for w in res.weights))
    out.text(f"face-dimension {res.face_dimension}")
    out.data = {"value": _frac(res.value), "weights": [_frac(w) for w in res.weights],
                "face_dimension": res.face_dimension}
    return 0


def cmd_blowup(args, out: Out) -> int:
    base = load_graph(args.base)
    if args.sizes:
        sizes = _ints(args.sizes)
    elif args.weights and args.n is not None:
        b = C.WeightedBlowup(base, C.parse_weights(args.weights))
        sizes = list(C.integer_class_sizes(b, args.n))
    elif args.n is not None:
        best = C.optimize_blowup_weights(base)
        sizes = list(C.integer_class_sizes(C.WeightedBlowup(base, best.weights), args.n))
    else:
        raise UsageError("blowup needs --sizes, or --n with optional --weights")
    G = C.instantiate_blowup(base, sizes)
    out.text(format_graph(G, "class sizes " + " ".join(map(str, sizes))))
    out.data = {"class_sizes": sizes, **graph_to_json(G)}
    return 0


def cmd_coplusex(args, out: Out) -> int:
    forb = _forbidden(args, args.r)
    if args.oracle:
        res = EX.naive_oracle(args.n, forb, args.r)
    else:
        res = EX.co_plus_ex_exact(args.n, forb, args.r, jobs=args.jobs)
    out.text(f"co+ex({args.n}) = {res.value}")
    out.text(f"# {res.witness_count} witnesses" + (f", first {len(res.witnesses)} shown" if res.truncated else ""))
    if not args.quiet:
        out.text(format_graphs(res.witnesses))
    out.data = {"n": res.n, "value": res.value, "witness_count": res.witness_count,
                "witnesses": [graph_to_json(W) for W in res.witnesses]}
    return 0


def _flag_type(spec: str) -> FL.FlagType:
    if spec.startswith("empty:"):
        return FL.FlagType.empty(int(spec.split(":", 1)[1]))
    return FL.FlagType(load_graph(spec))


def cmd_flags(args, out: Out) -> int:
    t = _flag_type(args.type)
    fl = FL.generate_flags(t, args.n, _forbidden(args))
    out.text(f"# {len(fl)} flags, labelled vertices 0..{t.s - 1}" if t.s else f"# {len(fl)} flags, no labels")
    out.text(format_graphs([f.graph for f in fl]))
    out.data = {"type_size": t.s, "count": len(fl), "flags": [graph_to_json(f.graph) for f in fl]}
    return 0


def _problem(args) -> SDP.SDPProblem:
    sizes = _ints(args.type_sizes) if args.type_sizes else None
    if args.preset:
        return SDP.preset_problem(args.preset, args.k, sizes)
    adm = _forbidden(args)
    basis = FL.basis_family(args.k, adm)
    if args.objective == "edge-density":
        obj = tuple(-x for x in SDP.edge_density_vector(basis))
    elif args.objective == "zero":
        obj = tuple(Fraction(0) for _ in basis)
    elif args.objective.startswith("outside:"):
        obj = SDP.outside_family_indicator(basis, load_family(args.objective.split(":", 1)[1]))
    else:
        raise UsageError(f"unknown objective {args.objective!r}")
    cons = []
    if args.pos_codegree:
        q = _fraction(args.pos_codegree)
        cons.append(FL.pos_codegree_constraint(q.numerator, q.denominator, args.k, basis))
    if args.min_codegree:
        q = _fraction(args.min_codegree)
        cons.extend(SDP.min_codegree_constraints(q.numerator, q.denominator, args.k, basis))
    types = SDP.standard_types(args.k, adm, sizes)
    return SDP.assemble_problem(basis, obj, types, cons, "custom")


def cmd_sdp_export(args, out: Out) -> int:
    P = _problem(args)
    data = SDP.export_sdpa(P, args.out)
    out.text(f"basis {len(P.basis)}")
    out.text("blocks " + " ".join(map(str, P.block_dims)))
    out.text(f"constraints {len(P.constraints)}")
    out.text(f"variables {data.n_vars}")
    out.text(f"scale {data.scale}")
    out.data = {"basis": len(P.basis), "blocks": P.block_dims, "constraints": len(P.constraints),
                "variables": data.n_vars, "scale": data.scale, "path": args.out}
    return 0


def cmd_verify_cert(args, out: Out) -> int:
    P = _problem(args)
    cert = SDP.read_certificate(_read_text(args.cert), args.cert_format)
    v = SDP.verify_certificate(P, cert)
    out.data = v.to_json()
    out.text("ACCEPT" if v.accepted else "REJECT")
    for f in v.failures:
        out.text(f"  {f}")
    if v.min_slack is not None:
        out.text(f"min slack {_frac(v.min_slack)} at basis member {v.argmin}")
        out.text(format_graph(v.argmin_graph))
        out.data["argmin_graph"] = graph_to_json(v.argmin_graph)
    if args.host and v.accepted:
        hc = SDP.host_check(P, cert, load_graph(args.host))
        out.text(f"host objective {_frac(hc.objective_value)} >= bound {_frac(hc.bound)} - correction {_frac(hc.correction)}: {hc.holds}")
        out.data["host"] = {"objective": _frac(hc.objective_value), "correction": _frac(hc.correction), "holds": hc.holds}
    return 0 if v.accepted else 1


def cmd_density(args, out: Out) -> int:
    host = load_graph(args.host)
    if args.profile is not None:
        prof = HG.density_profile(host, args.profile)
        recs = sorted(prof.items(), key=lambda kv: EN.graph_sort_key(kv[0]))
        for G, d in recs:
            out.text(f"{_frac(d)}  " + " ".join("".join(map(str, e)) for e in G.edges))
        out.data = {"profile": [{"edges": [list(e) for e in G.edges], "density": _frac(d)} for G, d in recs]}
        return 0
    if args.small is None:
        raise UsageError("density needs SMALL HOST or --profile k HOST")
    small = load_graph(args.small)
    d = HG.subgraph_density(small, host) if args.non_induced else HG.induced_density(small, host)
    out.text(_frac(d))
    out.data = {"density": _frac(d)}
    return 0


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("--jobs", type=int, default=1, help="worker processes (output does not depend on it)")

    ap = argparse.ArgumentParser(prog="poscodeg", description="Exact tools for minimum positive co-degree problems.")
    sub = ap.add_subparsers(dest="verb", required=True, metavar="VERB")

    def verb(name, fn, help):
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(fn=fn)
        return p

    def forbid(p):
        p.add_argument("--forbid", action="append", default=[], metavar="GRAPH",
                       help="forbidden graph (name or file); repeatable")
        p.add_argument("--induced", action="store_true", help="forbid induced copies")

    p = verb("construct", cmd_construct, "print a named construction")
    p.add_argument("spec", help="e.g. K4, Jk:4, Tr:3, C:7, Cminus:6, FanoComplement")
    p = verb("mpcd", cmd_mpcd, "minimum positive co-degree")
    p.add_argument("graph", nargs="?")
    p = verb("link", cmd_link, "link graph of a vertex")
    p.add_argument("graph", nargs="?")
    p.add_argument("--vertex", type=int, required=True)
    p = verb("iso", cmd_iso, "isomorphism test")
    p.add_argument("first")
    p.add_argument("second")
    p = verb("hom", cmd_hom, "find a homomorphism")
    p.add_argument("source")
    p.add_argument("target")
    p = verb("embed", cmd_embed, "find an embedding")
    p.add_argument("pattern")
    p.add_argument("host")
    p.add_argument("--induced", action="store_true")
    p = verb("classify", cmd_classify, "which of the three density regions a family lies in")
    p.add_argument("graphs", nargs="*")
    p = verb("enumerate", cmd_enumerate, "isomorphism classes of small graphs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, default=3)
    p.add_argument("--count", action="store_true")
    forbid(p)
    p = verb("family-extract", cmd_family_extract, "k-vertex induced subgraphs of blow-ups")
    p.add_argument("base")
    p.add_argument("--k", type=int, required=True)
    p = verb("filter", cmd_filter, "induced subfamilies and containment filters")
    p.add_argument("family")
    p.add_argument("--subgraphs", type=int, metavar="K")
    p.add_argument("--containing", metavar="GRAPH")
    p.add_argument("--induced", action="store_true")
    p = verb("pattern", cmd_pattern, "check one E/N pattern against a family")
    p.add_argument("family")
    p.add_argument("pattern", help="pattern JSON or a file containing it")
    p = verb("suite", cmd_suite, "run a case-analysis suite")
    p.add_argument("path")
    p = verb("optimize-weights", cmd_optimize_weights, "optimal blow-up weights")
    p.add_argument("base")
    p = verb("blowup", cmd_blowup, "instantiate a blow-up")
    p.add_argument("base")
    p.add_argument("--sizes")
    p.add_argument("--weights")
    p.add_argument("--n", type=int)
    p = verb("coplusex", cmd_coplusex, "exact co+ex(n) with witnesses")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, default=3)
    p.add_argument("--oracle", action="store_true", help="brute force over labelled graphs (n <= 5)")
    p.add_argument("--quiet", action="store_true", help="omit witnesses")
    forbid(p)
    p = verb("flags", cmd_flags, "flags of a type")
    p.add_argument("--type", required=True, help="empty:s or a fully labelled graph")
    p.add_argument("--n", type=int, required=True)
    forbid(p)

    def problem(p):
        p.add_argument("--preset", choices=sorted(SDP.PRESETS))
        p.add_argument("--k", type=int, default=6)
        p.add_argument("--type-sizes", help="type sizes, default all s with k - s even")
        p.add_argument("--objective", default="edge-density", help="edge-density, zero or outside:FAMILY")
        p.add_argument("--pos-codegree", metavar="P/Q")
        p.add_argument("--min-codegree", metavar="P/Q")
        forbid(p)

    p = verb("sdp-export", cmd_sdp_export, "assemble a flag-algebra SDP and write SDPA")
    problem(p)
    p.add_argument("--out", required=True)
    p = verb("verify-cert", cmd_verify_cert, "exact certificate check")
    problem(p)
    p.add_argument("--cert", required=True)
    p.add_argument("--cert-format", default="json", choices=sorted(SDP.CERTIFICATE_READERS))
    p.add_argument("--host", help="also evaluate against this admissible host")
    p = verb("density", cmd_density, "induced density of SMALL in HOST")
    p.add_argument("small", nargs="?")
    p.add_argument("host")
    p.add_argument("--profile", type=int, metavar="K")
    p.add_argument("--non-induced", action="store_true")
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    out = Out(args.format)
    try:
        status = args.fn(args, out)
    except (UsageError, HG.HypergraphError, OSError, ValueError) as exc:
        print(f"poscodeg {args.verb}: error: {exc}", file=sys.stderr)
        return 2
    out.emit()
    return status


if __name__ == "__main__":
    sys.exit(main())
