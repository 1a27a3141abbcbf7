"""Instance generators. Every random generator is a pure function of its seed."""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from .graph import EdgeColoredGraph, is_rainbow_triangle_free, min_color_degree

GK_MAX = 19
KINDS = ("gk", "gallai-substitution", "kgood-trianglefree", "uniform-random")


class InfeasibleError(ValueError):
    pass


@dataclass(frozen=True)
class GenSpec:
    kind: str
    n: Optional[int] = None
    k: Optional[int] = None
    color_count: Optional[int] = None
    seed: int = 0

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown generator kind {self.kind!r}")
        for name in ("n", "k", "color_count"):
            value = getattr(self, name)
            if value is not None and value < 1:
                raise ValueError(f"{name} must be positive, got {value}")
        if self.kind == "gk" and self.k is None:
            raise ValueError("gk requires k")

    def build(self) -> EdgeColoredGraph:
        if self.kind == "gk":
            return gen_gk(self.k)
        if self.kind == "gallai-substitution":
            return gen_gallai_substitution(self.n, self.seed)
        if self.kind == "kgood-trianglefree":
            return gen_kgood_triangle_free(self.n, self.k, self.seed)
        return gen_uniform_coloring(self.n, self.color_count, self.seed)

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind}
        for key, value in (("n", self.n), ("k", self.k), ("colorCount", self.color_count)):
            if value is not None:
                out[key] = value
        out["seed"] = self.seed
        return out


def gk_color(k: int, a: int, b: int) -> int:
    """Position (1-based, most significant first) of the first differing bit."""
    return k - (a ^ b).bit_length() + 1


def gen_gk(k: int) -> EdgeColoredGraph:
    """Complete graph on the binary k-tuples, vertex id = tuple read as an
    integer with coordinate 1 as the most significant bit. An edge gets
    color j when its ends agree on the first j-1 coordinates and differ on
    the j-th."""
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    if k > GK_MAX:
        raise ValueError(f"k={k} too large (limit {GK_MAX})")
    n = 1 << k
    return EdgeColoredGraph(
        n, [(a, b, gk_color(k, a, b)) for a, b in combinations(range(n), 2)]
    )


def _split(rng: random.Random, items: list, parts: int) -> list:
    rng.shuffle(items)
    cuts = sorted(rng.sample(range(1, len(items)), parts - 1))
    bounds = [0, *cuts, len(items)]
    return [sorted(items[a:b]) for a, b in zip(bounds, bounds[1:])]


def _substitute(
    rng: random.Random, vertices: list, edges: dict, next_color: int
) -> int:
    """Color all pairs of ``vertices`` without rainbow triangles; returns the next unused color."""
    if len(vertices) < 2:
        return next_color
    if len(vertices) == 2:
        edges[tuple(vertices)] = next_color
        return next_color + 1
    blocks = _split(rng, list(vertices), rng.choice((2, 3)))
    # inter-block edges follow a 2-coloring of the reduced complete graph
    palette = (next_color, next_color + 1)
    next_color += 2
    for x, y in combinations(blocks, 2):
        c = palette[rng.randrange(2)]
        for a in x:
            for b in y:
                edges[(min(a, b), max(a, b))] = c
    for block in blocks:
        next_color = _substitute(rng, block, edges, next_color)
    return next_color


def gen_gallai_substitution(n: int, seed: int) -> EdgeColoredGraph:
    """Gallai-colored complete ``K_n`` by recursive substitution.

    Vertices are split into 2 or 3 blocks, edges between blocks follow a
    2-coloring of the block graph with fresh colors, and each block is
    colored the same way recursively.
    """
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    edges: dict = {}
    _substitute(random.Random(seed), list(range(n)), edges, 1)
    return EdgeColoredGraph(n, edges)


def gen_bipartite_blowup(
    n: int, k: int, seed: int, extra_colors: int = 4
) -> EdgeColoredGraph:
    """Rainbow-triangle-free graph with minimum color degree ``>= k`` (needs ``n >= 2k``).

    Vertices are grouped into blocks split into two sides. Blocks on opposite
    sides are joined completely in a single color taken from a proper
    edge coloring of the bipartite block graph, with up to ``extra_colors``
    block pairs recolored by fresh colors of their own. Each block is
    internally a Gallai substitution with fresh colors. Any triangle has
    two vertices in one block and so repeats a color.
    """
    if n < 2 * k:
        raise InfeasibleError(f"blow-up needs n >= 2k, got n={n}, k={k}")
    rng = random.Random(seed)
    blocks = _split(rng, list(range(n)), rng.randint(2 * k, n))
    rng.shuffle(blocks)
    half = len(blocks) // 2
    left, right = blocks[:half], blocks[half:]
    width = len(right)
    palette = list(range(1, width + 1))
    rng.shuffle(palette)
    block_colors = {
        (i, j): palette[(i + j) % width] for i in range(len(left)) for j in range(width)
    }
    # a fresh single-use color keeps the block coloring proper
    next_color = width + 1
    extra = rng.randint(0, min(extra_colors, len(block_colors)))
    for key in rng.sample(sorted(block_colors), extra):
        block_colors[key] = next_color
        next_color += 1
    edges: dict = {}
    for (i, j), c in block_colors.items():
        for a in left[i]:
            for b in right[j]:
                edges[(min(a, b), max(a, b))] = c
    for block in blocks:
        next_color = _substitute(rng, block, edges, next_color)
    return EdgeColoredGraph(n, edges)


def delete_edges_keeping_k(
    g: EdgeColoredGraph, k: int, rng: random.Random, max_deletions: Optional[int] = None
) -> EdgeColoredGraph:
    """Greedily delete edges in random order while every color degree stays ``>= k``."""
    counts = [Counter(g.neighbors(v).values()) for v in range(g.n)]
    edges = g.edges()
    rng.shuffle(edges)
    removed = []
    for u, v, c in edges:
        if max_deletions is not None and len(removed) >= max_deletions:
            break
        if all(counts[x][c] > 1 or len(counts[x]) > k for x in (u, v)):
            for x in (u, v):
                counts[x][c] -= 1
                if not counts[x][c]:
                    del counts[x][c]
            removed.append((u, v))
    return g.without_edges(removed)


def kgood_base(n: int, k: int, rng: random.Random, max_attempts: int = 32) -> EdgeColoredGraph:
    """Draw base colorings until one has minimum color degree ``>= k``."""
    bases = ["gallai"]
    m = n.bit_length() - 1
    if n == 1 << m and m >= k:
        bases.append("gk")
    if n >= 2 * k:
        bases.append("blowup")
    for _ in range(max_attempts):
        kind = rng.choice(bases)
        sub_seed = rng.getrandbits(64)
        if kind == "gk":
            base = gen_gk(m)
        elif kind == "blowup":
            base = gen_bipartite_blowup(n, k, sub_seed)
        else:
            base = gen_gallai_substitution(n, sub_seed)
        if min_color_degree(base) >= k:
            return base
    raise InfeasibleError(
        f"no base coloring with minimum color degree {k} on {n} vertices "
        f"after {max_attempts} attempts"
    )


def gen_kgood_triangle_free(
    n: int,
    k: int,
    seed: int,
    max_deletions: Optional[int] = None,
    max_attempts: int = 32,
) -> EdgeColoredGraph:
    """Rainbow-triangle-free graph on ``n`` vertices with minimum color degree ``>= k``.

    A base graph is drawn (Gallai substitution, ``G_m`` when ``n = 2^m``,
    or a bipartite blow-up when ``n >= 2k``) until one is k-good, then
    edges are deleted at random while keeping it k-good. ``max_deletions``
    caps the deletion phase (``0`` returns the base graph).
    """
    if k < 1 or n < k + 1:
        raise ValueError(f"need n >= k + 1 >= 2, got n={n}, k={k}")
    rng = random.Random(seed)
    base = kgood_base(n, k, rng, max_attempts)
    return delete_edges_keeping_k(base, k, rng, max_deletions)


def gen_uniform_coloring(n: int, color_count: int, seed: int) -> EdgeColoredGraph:
    """Complete ``K_n`` with independent uniform colors from ``1..color_count``."""
    if n < 1 or color_count < 1:
        raise ValueError("n and color_count must be positive")
    rng = random.Random(seed)
    return EdgeColoredGraph(
        n, [(a, b, rng.randint(1, color_count)) for a, b in combinations(range(n), 2)]
    )


def assert_rainbow_triangle_free(g: EdgeColoredGraph) -> EdgeColoredGraph:
    if not is_rainbow_triangle_free(g):
        raise AssertionError("generator produced a rainbow triangle")
    return g


def seeds(base_seed: int, trials: int) -> Sequence[int]:
    """Per-trial seeds: ``base_seed + index``."""
    return [base_seed + i for i in range(trials)]
