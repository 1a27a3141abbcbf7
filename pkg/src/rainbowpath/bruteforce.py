"""Exhaustive reference for the search oracle, for small graphs only.

Enumerates every simple path whose edge colors are pairwise distinct. A
prefix of a rainbow path is rainbow, so non-rainbow prefixes are dropped;
no bound-based pruning, no early exit.
"""

from __future__ import annotations

from .graph import EdgeColoredGraph


def all_rainbow_paths(g: EdgeColoredGraph) -> list:
    out = []

    def grow(verts: list, colors: list) -> None:
        out.append(tuple(verts))
        last = verts[-1]
        for w in range(g.n):
            c = g.color(last, w)
            if c is None or w in verts or c in colors:
                continue
            grow(verts + [w], colors + [c])

    for v in range(g.n):
        grow([v], [])
    return out


def naive_longest_rainbow_length(g: EdgeColoredGraph) -> int:
    return max((len(p) - 1 for p in all_rainbow_paths(g)), default=0)
