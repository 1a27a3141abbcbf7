"""Reading and writing edge-colored graphs.

Canonical text format::

    n m
    u v c      (m lines, 0 <= u < v < n, c >= 1)

ASCII decimal, single spaces, LF line endings. A JSON mirror
``{"n": n, "edges": [[u, v, c], ...]}`` is also supported.
"""

from __future__ import annotations

import json
import re
from pathlib import Path
from typing import Union

from .graph import EdgeColoredGraph, InputError

_HEADER = re.compile(r"(0|[1-9][0-9]*) (0|[1-9][0-9]*)")
_EDGE = re.compile(r"(0|[1-9][0-9]*) (0|[1-9][0-9]*) (0|[1-9][0-9]*)")


class ParseError(InputError):
    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def parse_graph(data: Union[bytes, str]) -> EdgeColoredGraph:
    """Parse the canonical edge-list format. Strict: no blank lines, no CR."""
    if isinstance(data, bytes):
        try:
            text = data.decode("ascii")
        except UnicodeDecodeError as exc:
            raise ParseError("input is not ASCII") from exc
    else:
        text = data
    if not text:
        raise ParseError("empty input", 1)
    if not text.endswith("\n"):
        raise ParseError("missing final LF", text.count("\n") + 1)
    lines = text[:-1].split("\n")
    m_header = _HEADER.fullmatch(lines[0])
    if not m_header:
        raise ParseError(f"expected 'n m', got {lines[0]!r}", 1)
    n, m = int(m_header.group(1)), int(m_header.group(2))
    if len(lines) - 1 != m:
        raise ParseError(f"header declares {m} edges, found {len(lines) - 1} lines", 1)
    seen: set[tuple[int, int]] = set()
    edges = []
    for lineno, line in enumerate(lines[1:], start=2):
        match = _EDGE.fullmatch(line)
        if not match:
            raise ParseError(f"expected 'u v c', got {line!r}", lineno)
        u, v, c = (int(x) for x in match.groups())
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        if u > v:
            raise ParseError(f"endpoints must satisfy u < v, got {u} {v}", lineno)
        if v >= n:
            raise ParseError(f"vertex {v} out of range for n={n}", lineno)
        if c < 1:
            raise ParseError(f"color must be >= 1, got {c}", lineno)
        if (u, v) in seen:
            raise ParseError(f"duplicate edge {u} {v}", lineno)
        seen.add((u, v))
        edges.append((u, v, c))
    return EdgeColoredGraph(n, edges)


def write_graph(g: EdgeColoredGraph) -> bytes:
    edges = g.edges()
    out = [f"{g.n} {len(edges)}\n"]
    out.extend(f"{u} {v} {c}\n" for u, v, c in edges)
    return "".join(out).encode("ascii")


def graph_to_json(g: EdgeColoredGraph) -> dict:
    return {"n": g.n, "edges": [[u, v, c] for u, v, c in g.edges()]}


def graph_from_json(obj: object) -> EdgeColoredGraph:
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise ParseError("JSON graph must be an object with 'n' and 'edges'")
    edges = obj["edges"]
    if not isinstance(edges, list):
        raise ParseError("'edges' must be a list")
    triples = []
    for idx, e in enumerate(edges):
        if not (isinstance(e, list) and len(e) == 3):
            raise ParseError(f"edge #{idx} must be [u, v, c]")
        triples.append(tuple(e))
    try:
        return EdgeColoredGraph(obj["n"], triples)
    except InputError as exc:
        raise ParseError(str(exc)) from exc


def parse_graph_json(data: Union[bytes, str]) -> EdgeColoredGraph:
    try:
        obj = json.loads(data)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno) from exc
    return graph_from_json(obj)


def write_graph_json(g: EdgeColoredGraph) -> bytes:
    return (json.dumps(graph_to_json(g)) + "\n").encode("utf-8")


def load_graph(path: Union[str, Path]) -> EdgeColoredGraph:
    """Read a graph file; ``.json`` files (or content starting with ``{``) use the JSON mirror."""
    path = Path(path)
    data = path.read_bytes()
    if path.suffix == ".json" or data.lstrip().startswith(b"{"):
        return parse_graph_json(data)
    return parse_graph(data)


def save_graph(g: EdgeColoredGraph, path: Union[str, Path]) -> None:
    path = Path(path)
    path.write_bytes(write_graph_json(g) if path.suffix == ".json" else write_graph(g))
