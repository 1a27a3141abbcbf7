"""Exact longest rainbow path search on arbitrary edge-colored graphs."""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterator, Optional

from .graph import EdgeColoredGraph, InputError, VertexPath


@dataclass(frozen=True)
class SearchBudget:
    """Optional caps on a search. ``None`` means unlimited.

    Only ``max_nodes`` is deterministic; ``time_limit_ms`` depends on the
    machine.
    """

    max_nodes: Optional[int] = None
    time_limit_ms: Optional[int] = None

    def __post_init__(self) -> None:
        for name in ("max_nodes", "time_limit_ms"):
            value = getattr(self, name)
            if value is not None and value <= 0:
                raise ValueError(f"{name} must be positive, got {value}")


UNLIMITED = SearchBudget()


@dataclass(frozen=True)
class SearchResult:
    path: VertexPath
    exact: bool
    nodes: int

    @property
    def length(self) -> int:
        return self.path.length


class _BudgetExhausted(Exception):
    pass


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _component_bound(adj: list, v: int, visited: int, used: int) -> int:
    blocked = visited & ~(1 << v)
    seen = 1 << v
    stack = [v]
    colors = 0
    size = 0
    while stack:
        x = stack.pop()
        size += 1
        for w, cb in adj[x]:
            if cb & used or (blocked >> w) & 1:
                continue
            colors |= cb
            if not (seen >> w) & 1:
                seen |= 1 << w
                stack.append(w)
    return min(_popcount(colors), size - 1)


def longest_rainbow_path(
    g: EdgeColoredGraph,
    start: Optional[int] = None,
    budget: SearchBudget = UNLIMITED,
) -> SearchResult:
    """Maximum-length rainbow path, optionally forced to start at ``start``.

    Depth-first backtracking over (vertex set, color set) with vertices
    visited in ascending id order, so among all longest paths the
    lexicographically smallest vertex sequence is returned. When the
    budget runs out the best path so far is returned with ``exact=False``.

    Two admissible cuts, both only discarding branches that cannot
    strictly beat the incumbent:

    * every further edge needs an unused color and an unvisited vertex, so
      the extension is at most ``min(unused colors, unvisited vertices)``;
    * any extension lies inside the connected component of the endpoint in
      the graph on the unvisited vertices plus the endpoint, restricted to
      edges of unused colors; it is at most the number of distinct colors
      on those edges and at most the component size minus one.
    """
    n = g.n
    if n == 0:
        raise InputError("graph has no vertices")
    if start is not None:
        g.neighbors(start)  # range check

    color_bit = {c: 1 << i for i, c in enumerate(sorted(g.colors()))}
    all_colors = (1 << len(color_bit)) - 1
    adj = [
        [(w, color_bit[c]) for w, c in g.neighbors(v).items()] for v in range(n)
    ]
    ceiling = min(len(color_bit), n - 1)

    best: list[int] = [start if start is not None else 0]
    best_len = 0
    nodes = 0
    max_nodes = budget.max_nodes
    deadline = (
        time.monotonic() + budget.time_limit_ms / 1000.0
        if budget.time_limit_ms is not None
        else None
    )
    path: list[int] = []

    def dfs(v: int, visited: int, used: int, length: int) -> bool:
        # returns True once the ceiling is reached
        nonlocal best, best_len, nodes
        nodes += 1
        if max_nodes is not None and nodes > max_nodes:
            raise _BudgetExhausted
        if deadline is not None and nodes & 1023 == 0 and time.monotonic() > deadline:
            raise _BudgetExhausted
        if length > best_len:
            best_len = length
            best = path.copy()
            if best_len >= ceiling:
                return True
        free = all_colors & ~used
        room = n - 1 - length
        bound = _popcount(free)
        if room < bound:
            bound = room
        if length + bound <= best_len:
            return False
        if length + _component_bound(adj, v, visited, used) <= best_len:
            return False
        for w, cb in adj[v]:
            if cb & used or (visited >> w) & 1:
                continue
            path.append(w)
            if dfs(w, visited | (1 << w), used | cb, length + 1):
                return True
            path.pop()
        return False

    exact = True
    starts = range(n) if start is None else (start,)
    try:
        for s in starts:
            path = [s]
            if dfs(s, 1 << s, 0, 0):
                break
    except _BudgetExhausted:
        exact = False
    return SearchResult(VertexPath.of(g, best), exact, nodes)


def longest_rainbow_length(g: EdgeColoredGraph, budget: SearchBudget = UNLIMITED) -> int:
    result = longest_rainbow_path(g, budget=budget)
    if not result.exact:
        raise RuntimeError("search budget exhausted")
    return result.length


def iter_rainbow_paths(
    g: EdgeColoredGraph, min_length: int = 0, limit: Optional[int] = None
) -> Iterator[VertexPath]:
    """Rainbow paths of length >= ``min_length`` in lexicographic DFS order.

    Both orientations of a path are produced. ``limit`` caps the count.
    """
    count = 0
    adj = [list(g.neighbors(v).items()) for v in range(g.n)]
    for s in range(g.n):
        stack: list = [(s, [s], [], frozenset())]
        while stack:
            v, verts, cols, used = stack.pop()
            if len(cols) >= min_length:
                yield VertexPath(tuple(verts), tuple(cols))
                count += 1
                if limit is not None and count >= limit:
                    return
            for w, c in reversed(adj[v]):
                if c not in used and w not in verts:
                    stack.append((w, verts + [w], cols + [c], used | {c}))
