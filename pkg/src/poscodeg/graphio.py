"""Plain-text graph records.

A record is a header line ``r n m`` followed by ``m`` edge lines of ``r``
0-based vertex indices.  Lines starting with ``#`` are comments.  A stream
holds several records, conventionally separated by blank lines.
"""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .hypergraph import HypergraphError, RGraph


class GraphFormatError(HypergraphError):
    pass


def format_graph(H: RGraph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"{H.r} {H.n} {H.m}")
    lines.extend(" ".join(map(str, e)) for e in H.edges)
    return "\n".join(lines) + "\n"


def format_graphs(graphs: Iterable[RGraph], comments: Iterable[str | None] | None = None) -> str:
    graphs = list(graphs)
    comments = list(comments) if comments is not None else [None] * len(graphs)
    return "\n".join(format_graph(G, c) for G, c in zip(graphs, comments))


def _tokens(lines: Iterable[str]) -> Iterator[tuple[int, list[str]]]:
    for no, line in enumerate(lines, 1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        yield no, s.split()


def parse_graphs(text: str) -> list[RGraph]:
    out = []
    it = _tokens(text.splitlines())
    for no, head in it:
        try:
            r, n, m = (int(x) for x in head)
        except ValueError:
            raise GraphFormatError(f"line {no}: expected header 'r n m', got {' '.join(head)!r}") from None
        edges = []
        for _ in range(m):
            try:
                eno, toks = next(it)
            except StopIteration:
                raise GraphFormatError(f"record at line {no}: expected {m} edges, got {len(edges)}") from None
            if len(toks) != r:
                raise GraphFormatError(f"line {eno}: expected {r} vertices, got {len(toks)}")
            try:
                edges.append([int(t) for t in toks])
            except ValueError:
                raise GraphFormatError(f"line {eno}: non-integer vertex") from None
        try:
            G = RGraph(r, n, edges)
        except HypergraphError as exc:
            raise GraphFormatError(f"record at line {no}: {exc}") from None
        if G.m != m:
            raise GraphFormatError(f"record at line {no}: duplicate edges")
        out.append(G)
    return out


def parse_graph(text: str) -> RGraph:
    gs = parse_graphs(text)
    if len(gs) != 1:
        raise GraphFormatError(f"expected exactly one graph, found {len(gs)}")
    return gs[0]


def read_graphs(fh: TextIO) -> list[RGraph]:
    return parse_graphs(fh.read())


def graph_to_json(H: RGraph) -> dict:
    return {"r": H.r, "n": H.n, "edges": [list(e) for e in H.edges]}


def graph_from_json(data: dict) -> RGraph:
    try:
        return RGraph(int(data["r"]), int(data["n"]), data["edges"])
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphFormatError(f"malformed graph JSON: {exc}") from None
