"""Plain-text serialization for graphs, 3-graphs, and layered multigraphs.

Three line-oriented formats, each opened by a header naming the kind and
dimensions. Parsers validate per-line ordering, ranges, and duplicates, and
report 1-based line numbers on failure; writers emit canonical sorted order
with a trailing newline.

    3graph <n>      then one `u v w` line per edge, 0 <= u < v < w < n
    graph <n>       then one `u v` line per edge, u < v
    mgraph <n> <m>  then one `u v c1,c2,...` line per colored pair, layers
                    strictly increasing in 1..m
"""

from __future__ import annotations

from .graphs import SimpleGraph
from .hypergraphs import Uniform3Graph
from .multigraphs import MMultigraph


class FormatError(ValueError):
    """Malformed serialized graph text."""


def _nonblank_lines(text: str):
    for i, line in enumerate(text.splitlines(), start=1):
        if line.strip():
            yield i, line.split()


def _header(text: str, kind: str, argc: int) -> tuple[list[int], list]:
    lines = list(_nonblank_lines(text))
    if not lines:
        raise FormatError("empty input")
    lineno, tokens = lines[0]
    if tokens[0] != kind or len(tokens) != 1 + argc:
        raise FormatError(f"line {lineno}: expected header '{kind}' with {argc} argument(s)")
    try:
        args = [int(t) for t in tokens[1:]]
    except ValueError:
        raise FormatError(f"line {lineno}: non-integer header argument") from None
    return args, lines[1:]


def _ints(lineno: int, tokens: list[str], count: int) -> list[int]:
    if len(tokens) != count:
        raise FormatError(f"line {lineno}: expected {count} fields, got {len(tokens)}")
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise FormatError(f"line {lineno}: non-integer field") from None


def parse_3graph(text: str) -> Uniform3Graph:
    (n,), body = _header(text, "3graph", 1)
    seen: set[tuple[int, int, int]] = set()
    for lineno, tokens in body:
        u, v, w = _ints(lineno, tokens, 3)
        if not 0 <= u < v < w < n:
            raise FormatError(f"line {lineno}: vertices must satisfy 0 <= u < v < w < {n}")
        if (u, v, w) in seen:
            raise FormatError(f"line {lineno}: duplicate edge {u} {v} {w}")
        seen.add((u, v, w))
    return Uniform3Graph(n, seen)


def write_3graph(H: Uniform3Graph) -> str:
    lines = [f"3graph {H.n}"]
    lines.extend(f"{u} {v} {w}" for u, v, w in H.triples())
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> SimpleGraph:
    (n,), body = _header(text, "graph", 1)
    seen: set[tuple[int, int]] = set()
    for lineno, tokens in body:
        u, v = _ints(lineno, tokens, 2)
        if not 0 <= u < v < n:
            raise FormatError(f"line {lineno}: vertices must satisfy 0 <= u < v < {n}")
        if (u, v) in seen:
            raise FormatError(f"line {lineno}: duplicate edge {u} {v}")
        seen.add((u, v))
    return SimpleGraph(n, seen)


def write_graph(G: SimpleGraph) -> str:
    lines = [f"graph {G.n}"]
    lines.extend(f"{u} {v}" for u, v in G.edges())
    return "\n".join(lines) + "\n"


def parse_mgraph(text: str) -> MMultigraph:
    (n, m), body = _header(text, "mgraph", 2)
    masks: dict[tuple[int, int], int] = {}
    for lineno, tokens in body:
        if len(tokens) != 3:
            raise FormatError(f"line {lineno}: expected 'u v c1,c2,...'")
        try:
            u, v = int(tokens[0]), int(tokens[1])
            layers = [int(t) for t in tokens[2].split(",")]
        except ValueError:
            raise FormatError(f"line {lineno}: non-integer field") from None
        if not 0 <= u < v < n:
            raise FormatError(f"line {lineno}: vertices must satisfy 0 <= u < v < {n}")
        if (u, v) in masks:
            raise FormatError(f"line {lineno}: duplicate pair {u} {v}")
        if any(b <= a for a, b in zip(layers, layers[1:])):
            raise FormatError(f"line {lineno}: layers must strictly increase")
        if layers[0] < 1 or layers[-1] > m:
            raise FormatError(f"line {lineno}: layers must lie in 1..{m}")
        masks[(u, v)] = sum(1 << (c - 1) for c in layers)
    return MMultigraph.from_masks(n, m, masks)


def write_mgraph(mg: MMultigraph) -> str:
    lines = [f"mgraph {mg.n} {mg.m}"]
    for (u, v), _mask in mg.pairs():
        lines.append(f"{u} {v} " + ",".join(map(str, mg.colors(u, v))))
    return "\n".join(lines) + "\n"


def parse_any(text: str) -> Uniform3Graph | SimpleGraph | MMultigraph:
    """Dispatch on the header token."""
    for _lineno, tokens in _nonblank_lines(text):
        kind = tokens[0]
        break
    else:
        raise FormatError("empty input")
    parsers = {"3graph": parse_3graph, "graph": parse_graph, "mgraph": parse_mgraph}
    if kind not in parsers:
        raise FormatError(f"unknown format {kind!r}")
    return parsers[kind](text)
