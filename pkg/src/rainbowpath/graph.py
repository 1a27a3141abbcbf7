"""Edge-colored simple graphs and the basic color queries on them."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Mapping, Optional, Sequence, Tuple, Union

ColorSet = frozenset
Edge = Tuple[int, int, int]


class InputError(ValueError):
    """Raised for malformed graphs, vertices or paths."""


def _pair(u: int, v: int) -> Tuple[int, int]:
    return (u, v) if u < v else (v, u)


class EdgeColoredGraph:
    """Immutable simple graph on vertices ``0..n-1`` with a color on every edge.

    Colors are positive integers. A missing pair simply has no entry; no
    sentinel color is ever stored.

    ``edges`` may be an iterable of ``(u, v, color)`` triples or a mapping
    from ``(u, v)`` pairs to colors.
    """

    __slots__ = ("_n", "_colors", "_adj", "_hash")

    def __init__(
        self,
        n: int,
        edges: Union[Iterable[Edge], Mapping[Tuple[int, int], int]] = (),
    ) -> None:
        if isinstance(n, bool) or not isinstance(n, int) or n < 0:
            raise InputError(f"vertex count must be a nonnegative integer, got {n!r}")
        if isinstance(edges, Mapping):
            triples: Iterable[Edge] = ((u, v, c) for (u, v), c in edges.items())
        else:
            triples = edges
        colors: dict[Tuple[int, int], int] = {}
        adj: list[dict[int, int]] = [{} for _ in range(n)]
        for u, v, c in triples:
            for x in (u, v):
                if isinstance(x, bool) or not isinstance(x, int) or not 0 <= x < n:
                    raise InputError(f"vertex {x!r} out of range for n={n}")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            if isinstance(c, bool) or not isinstance(c, int) or c < 1:
                raise InputError(f"edge ({u}, {v}) has invalid color {c!r}")
            key = _pair(u, v)
            if key in colors:
                raise InputError(f"duplicate edge {key}")
            colors[key] = c
            adj[u][v] = c
            adj[v][u] = c
        self._n = n
        self._colors = colors
        # neighbor dicts in ascending vertex order for deterministic scans
        self._adj = tuple({w: a[w] for w in sorted(a)} for a in adj)
        self._hash: Optional[int] = None

    @property
    def n(self) -> int:
        return self._n

    def edges(self) -> list[Edge]:
        """All edges as ``(u, v, color)`` with ``u < v``, sorted by ``(u, v)``."""
        return [(u, v, c) for (u, v), c in sorted(self._colors.items())]

    def edge_map(self) -> Mapping[Tuple[int, int], int]:
        return dict(self._colors)

    def number_of_edges(self) -> int:
        return len(self._colors)

    def color(self, u: int, v: int) -> Optional[int]:
        """Color of edge ``uv``, or ``None`` when the pair is not an edge."""
        return self._colors.get(_pair(u, v))

    def has_edge(self, u: int, v: int) -> bool:
        return _pair(u, v) in self._colors

    def neighbors(self, v: int) -> Mapping[int, int]:
        """Neighbor -> edge color, in ascending neighbor order."""
        self._check_vertex(v)
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def colors(self) -> ColorSet:
        return frozenset(self._colors.values())

    def is_complete(self) -> bool:
        return len(self._colors) == self._n * (self._n - 1) // 2

    def without_edges(self, pairs: Iterable[Tuple[int, int]]) -> "EdgeColoredGraph":
        drop = {_pair(u, v) for u, v in pairs}
        return EdgeColoredGraph(
            self._n, {p: c for p, c in self._colors.items() if p not in drop}
        )

    def induced(self, vertices: Iterable[int]) -> "EdgeColoredGraph":
        """Subgraph induced on ``vertices``, relabelled ``0..m-1`` in the given order."""
        order = list(vertices)
        index = {v: i for i, v in enumerate(order)}
        return EdgeColoredGraph(
            len(order),
            [
                (index[u], index[v], c)
                for (u, v), c in self._colors.items()
                if u in index and v in index
            ],
        )

    def _check_vertex(self, v: int) -> None:
        if isinstance(v, bool) or not isinstance(v, int) or not 0 <= v < self._n:
            raise InputError(f"vertex {v!r} out of range for n={self._n}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EdgeColoredGraph):
            return NotImplemented
        return self._n == other._n and self._colors == other._colors

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._n, frozenset(self._colors.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"EdgeColoredGraph(n={self._n}, m={len(self._colors)})"


def color_neighborhood(g: EdgeColoredGraph, v: int) -> ColorSet:
    """Set of colors presented at ``v``."""
    return frozenset(g.neighbors(v).values())


def color_degree(g: EdgeColoredGraph, v: int) -> int:
    return len(color_neighborhood(g, v))


def min_color_degree(g: EdgeColoredGraph) -> int:
    if g.n == 0:
        return 0
    return min(color_degree(g, v) for v in range(g.n))


def max_color_degree(g: EdgeColoredGraph) -> int:
    if g.n == 0:
        return 0
    return max(color_degree(g, v) for v in range(g.n))


def iter_rainbow_triangles(g: EdgeColoredGraph) -> Iterator[Tuple[int, int, int]]:
    """Yield rainbow triangles ``(a, b, c)``, ``a < b < c``, in lexicographic order."""
    for a in range(g.n):
        na = g.neighbors(a)
        for b, cab in na.items():
            if b <= a:
                continue
            nb = g.neighbors(b)
            for c, cac in na.items():
                if c <= b:
                    continue
                cbc = nb.get(c)
                if cbc is None or cac == cab:
                    continue
                if cbc != cab and cbc != cac:
                    yield (a, b, c)


def find_rainbow_triangle(g: EdgeColoredGraph) -> Optional[Tuple[int, int, int]]:
    """Lexicographically smallest rainbow triangle, or ``None`` if there is none."""
    return next(iter_rainbow_triangles(g), None)


def find_rainbow_triangle_naive(g: EdgeColoredGraph) -> Optional[Tuple[int, int, int]]:
    """Exhaustive scan over all vertex triples; reference for the indexed scan."""
    for a, b, c in combinations(range(g.n), 3):
        cols = (g.color(a, b), g.color(a, c), g.color(b, c))
        if None not in cols and len(set(cols)) == 3:
            return (a, b, c)
    return None


def is_rainbow_triangle_free(g: EdgeColoredGraph) -> bool:
    return find_rainbow_triangle(g) is None


def is_gallai_complete(g: EdgeColoredGraph) -> bool:
    return g.is_complete() and find_rainbow_triangle(g) is None


def first_missing_pair(g: EdgeColoredGraph) -> Optional[Tuple[int, int]]:
    for u, v in combinations(range(g.n), 2):
        if not g.has_edge(u, v):
            return (u, v)
    return None


@dataclass(frozen=True)
class PathCheck:
    valid: bool
    rainbow: bool
    length: Optional[int]
    reason: Optional[str] = None


def validate_path(g: EdgeColoredGraph, p: Sequence[int]) -> PathCheck:
    """Diagnose ``p`` as a path of ``g``; never raises."""
    vertices = list(p)
    if not vertices:
        return PathCheck(False, False, None, "empty vertex sequence")
    for v in vertices:
        if isinstance(v, bool) or not isinstance(v, int) or not 0 <= v < g.n:
            return PathCheck(False, False, None, f"vertex {v!r} out of range")
    if len(set(vertices)) != len(vertices):
        return PathCheck(False, False, None, "repeated vertex")
    seen: set[int] = set()
    rainbow = True
    for a, b in zip(vertices, vertices[1:]):
        c = g.color(a, b)
        if c is None:
            return PathCheck(False, False, None, f"({a}, {b}) is not an edge")
        if c in seen:
            rainbow = False
        seen.add(c)
    return PathCheck(True, rainbow, len(vertices) - 1)


@dataclass(frozen=True)
class VertexPath:
    """A path ``u_0 u_1 ... u_l`` of a specific graph with its edge colors."""

    vertices: Tuple[int, ...]
    colors: Tuple[int, ...]

    @classmethod
    def of(cls, g: EdgeColoredGraph, vertices: Sequence[int]) -> "VertexPath":
        check = validate_path(g, vertices)
        if not check.valid:
            raise InputError(f"not a path: {check.reason}")
        vs = tuple(vertices)
        return cls(vs, tuple(g.color(a, b) for a, b in zip(vs, vs[1:])))  # type: ignore[misc]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def is_rainbow(self) -> bool:
        return len(set(self.colors)) == len(self.colors)

    @property
    def start(self) -> int:
        return self.vertices[0]

    @property
    def end(self) -> int:
        return self.vertices[-1]

    def color_set(self) -> ColorSet:
        return frozenset(self.colors)

    def reversed(self) -> "VertexPath":
        return VertexPath(self.vertices[::-1], self.colors[::-1])

    def segment(self, i: int, j: int) -> "VertexPath":
        """``u_i P u_j``; walks backwards when ``j < i``."""
        if i <= j:
            return VertexPath(self.vertices[i : j + 1], self.colors[i:j])
        return self.segment(j, i).reversed()

    def __len__(self) -> int:
        return len(self.vertices)
