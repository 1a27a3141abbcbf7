"""Structural checks on rainbow paths in rainbow-triangle-free graphs.

All path indices are positions along ``P = u_0 u_1 ... u_l``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence, Tuple, Union

from .graph import (
    EdgeColoredGraph,
    InputError,
    VertexPath,
    color_neighborhood,
    find_rainbow_triangle,
    min_color_degree,
)
from .oracle import UNLIMITED, SearchBudget, longest_rainbow_path

PathLike = Union[VertexPath, Sequence[int]]


class PreconditionError(InputError):
    pass


def _as_rainbow_path(g: EdgeColoredGraph, p: PathLike) -> VertexPath:
    vertices = p.vertices if isinstance(p, VertexPath) else tuple(p)
    path = VertexPath.of(g, vertices)
    if not path.is_rainbow:
        raise InputError("path is not rainbow")
    return path


def bound_three_quarters(k: int) -> int:
    """Smallest integer length ``>= 3k/4``."""
    return -(-3 * k // 4)


def prior_bound(k: int) -> Optional[int]:
    """Length guaranteed in any k-good coloring by the earlier results, if any.

    ``k - 1`` for ``3 <= k <= 7`` and ``ceil(2k/3) + 1`` for ``k >= 7``.
    """
    if k < 3:
        return None
    bounds = []
    if k <= 7:
        bounds.append(k - 1)
    if k >= 7:
        bounds.append(-(-2 * k // 3) + 1)
    return max(bounds)


@dataclass(frozen=True)
class LemmaCheck:
    applicable: bool
    conclusion_holds: Optional[bool] = None
    witness: Optional[Tuple] = None
    reason: Optional[str] = None


def _check_index(path: VertexPath, *indices: int) -> None:
    for idx in indices:
        if isinstance(idx, bool) or not isinstance(idx, int) or not 0 <= idx <= path.length:
            raise InputError(f"index {idx!r} outside 0..{path.length}")


def _off_path_chord(g: EdgeColoredGraph, path: VertexPath, i: int) -> Optional[int]:
    """Color of ``u_0 u_i`` when it exists and is not on the path."""
    c = g.color(path.vertices[0], path.vertices[i])
    if c is None or c in path.colors:
        return None
    return c


def check_lemma1(g: EdgeColoredGraph, p: PathLike, i: int, j: int) -> LemmaCheck:
    """Between two off-path chords ``u_0u_i``, ``u_0u_j`` of distinct colors
    there is a missing chord ``u_0u_s`` (``i < s < j``) or two chords
    ``u_0u_s``, ``u_0u_t`` (``i < s < t <= j``) of equal color."""
    path = _as_rainbow_path(g, p)
    _check_index(path, i, j)
    if path.length < 5:
        return LemmaCheck(False, reason="path shorter than 5")
    if not (2 <= i and i + 1 < j):
        return LemmaCheck(False, reason="need 2 <= i and i + 1 < j")
    ci, cj = _off_path_chord(g, path, i), _off_path_chord(g, path, j)
    if ci is None or cj is None:
        return LemmaCheck(False, reason="chord missing or colored on path")
    if ci == cj:
        return LemmaCheck(False, reason="chord colors coincide")
    return LemmaCheck(True, *_gap_conclusion(g, path, i + 1, j))


def check_lemma2(g: EdgeColoredGraph, p: PathLike, i: int) -> LemmaCheck:
    """An off-path chord ``u_0u_i`` forces ``i >= 3`` and a missing chord in
    ``[2, i)`` or two equal-colored chords in ``[2, i]``."""
    path = _as_rainbow_path(g, p)
    _check_index(path, i)
    if path.length < 5:
        return LemmaCheck(False, reason="path shorter than 5")
    if i < 1 or _off_path_chord(g, path, i) is None:
        return LemmaCheck(False, reason="chord missing or colored on path")
    if i < 3:
        return LemmaCheck(True, False, ("index", i), "off-path chord with i < 3")
    return LemmaCheck(True, *_gap_conclusion(g, path, 2, i))


def _gap_conclusion(
    g: EdgeColoredGraph, path: VertexPath, lo: int, hi: int
) -> Tuple[bool, Optional[Tuple]]:
    """Missing chord at some ``lo <= s < hi``, or a repeated chord color on ``[lo, hi]``."""
    u0 = path.vertices[0]
    chord = [g.color(u0, path.vertices[s]) for s in range(lo, hi + 1)]
    for off, c in enumerate(chord[:-1]):
        if c is None:
            return True, ("missing", lo + off)
    first: dict[int, int] = {}
    for off, c in enumerate(chord):
        if c is None:
            continue
        if c in first:
            return True, ("repeat", first[c], lo + off)
        first[c] = lo + off
    return False, None


def lemma1_pairs(g: EdgeColoredGraph, p: PathLike) -> Iterator[Tuple[int, int]]:
    """All ``(i, j)`` for which :func:`check_lemma1` is applicable."""
    path = _as_rainbow_path(g, p)
    if path.length < 5:
        return
    chords = {i: _off_path_chord(g, path, i) for i in range(2, path.length + 1)}
    for i, ci in chords.items():
        if ci is None:
            continue
        for j in range(i + 2, path.length + 1):
            cj = chords[j]
            if cj is not None and cj != ci:
                yield i, j


def lemma2_indices(g: EdgeColoredGraph, p: PathLike) -> Iterator[int]:
    path = _as_rainbow_path(g, p)
    if path.length < 5:
        return
    for i in range(1, path.length + 1):
        if _off_path_chord(g, path, i) is not None:
            yield i


@dataclass(frozen=True)
class EndpointAnalysis:
    """Color counts at the two ends of a rainbow path ``u_0 .. u_l``.

    ``s`` and ``t`` count the colors at ``u_0`` and ``u_l`` absent from the
    path; ``x`` and ``y`` are the path positions chosen to witness them
    (per color, the position nearest that end).
    """

    path: VertexPath
    k: int
    l: int
    s: int
    x: Tuple[int, ...]
    t: int
    y: Tuple[int, ...]
    unwitnessed_start: Tuple[int, ...]
    unwitnessed_end: Tuple[int, ...]
    chord_colors: int
    outside_colors: int
    ineq1_bound: int
    ineq2_bound: int
    checks: dict = field(compare=False)

    @property
    def ineq3_holds(self) -> bool:
        return self.checks["ineq3"]

    def violations(self) -> list:
        return [name for name, ok in self.checks.items() if not ok]

    @property
    def all_hold(self) -> bool:
        return not self.violations()

    def to_json(self) -> dict:
        return {
            "path": list(self.path.vertices),
            "k": self.k,
            "l": self.l,
            "s": self.s,
            "x": list(self.x),
            "t": self.t,
            "y": list(self.y),
            "unwitnessedStart": list(self.unwitnessed_start),
            "unwitnessedEnd": list(self.unwitnessed_end),
            "chordColors": self.chord_colors,
            "outsideColors": self.outside_colors,
            "ineq1Bound": self.ineq1_bound,
            "ineq2Bound": self.ineq2_bound,
            "ineq3Holds": self.ineq3_holds,
            "checks": dict(self.checks),
        }


def _gaps_ok(idx: Sequence[int]) -> bool:
    return all(b > a + 1 for a, b in zip(idx, idx[1:]))


def analyze_endpoints(g: EdgeColoredGraph, p: PathLike, k: int) -> EndpointAnalysis:
    """Endpoint counts and the inequalities they satisfy when ``p`` is a
    longest rainbow path of a k-good rainbow-triangle-free graph.

    Nothing is assumed about ``p`` beyond being rainbow; the ``checks``
    dict records which of the properties actually hold.
    """
    path = _as_rainbow_path(g, p)
    vs, l = path.vertices, path.length
    on_path = path.color_set()
    u0, ul = vs[0], vs[-1]

    start_off = sorted(color_neighborhood(g, u0) - on_path)
    end_off = sorted(color_neighborhood(g, ul) - on_path)
    x_of: dict[int, int] = {}
    for pos in range(1, l + 1):
        c = g.color(u0, vs[pos])
        if c is not None and c not in on_path:
            x_of.setdefault(c, pos)
    y_of: dict[int, int] = {}
    for pos in range(l - 1, -1, -1):
        c = g.color(vs[pos], ul)
        if c is not None and c not in on_path:
            y_of.setdefault(c, pos)
    x = tuple(sorted(x_of.values()))
    y = tuple(sorted(y_of.values()))
    s, t = len(start_off), len(end_off)

    chord_set = {g.color(u0, vs[pos]) for pos in range(1, l + 1)} - {None}
    outside = color_neighborhood(g, u0) - chord_set
    successor_colors = {path.colors[pos] for pos in y if pos < l}

    checks = {
        "xWitnessed": len(x) == s,
        "yWitnessed": len(y) == t,
        "x1AtLeast3": not x or x[0] >= 3,
        "xGaps": _gaps_ok(x),
        "ytAtMostLMinus3": not y or y[-1] <= l - 3,
        "yGaps": _gaps_ok(y),
        "ineq1": len(chord_set) <= l - s,
        "ineq2Subset": outside <= on_path - successor_colors,
        "ineq2": len(outside) <= l - t,
        "ineq3": k <= 2 * l - s - t,
        "extendStart": l + s >= k,
        "extendEnd": l + t >= k,
    }
    return EndpointAnalysis(
        path=path,
        k=k,
        l=l,
        s=s,
        x=x,
        t=t,
        y=y,
        unwitnessed_start=tuple(c for c in start_off if c not in x_of),
        unwitnessed_end=tuple(c for c in end_off if c not in y_of),
        chord_colors=len(chord_set),
        outside_colors=len(outside),
        ineq1_bound=l - s,
        ineq2_bound=l - t,
        checks=checks,
    )


def analyze_longest(
    g: EdgeColoredGraph, k: Optional[int] = None, budget: SearchBudget = UNLIMITED
) -> Tuple[EndpointAnalysis, bool]:
    """Run the oracle and analyze its path; ``k`` defaults to the minimum color degree."""
    result = longest_rainbow_path(g, budget=budget)
    if k is None:
        k = min_color_degree(g)
    return analyze_endpoints(g, result.path, k), result.exact


@dataclass(frozen=True)
class BoundCheck:
    lmax: int
    bound: int
    holds: Optional[bool]
    exact: bool
    path: VertexPath

    def to_json(self) -> dict:
        return {
            "lmax": self.lmax,
            "bound": self.bound,
            "holds": self.holds,
            "exact": self.exact,
            "path": list(self.path.vertices),
        }


def judge(lmax: int, bound: int, exact: bool) -> Optional[bool]:
    """``True`` once the bound is cleared, ``False`` only on an exact miss."""
    if lmax >= bound:
        return True
    return False if exact else None


def verify_bound34(
    g: EdgeColoredGraph, k: int, budget: SearchBudget = UNLIMITED
) -> BoundCheck:
    """Check that a k-good rainbow-triangle-free graph (``k >= 6``) has a
    rainbow path of length at least ``3k/4``."""
    if k < 6:
        raise PreconditionError(f"k must be at least 6, got {k}")
    mcd = min_color_degree(g)
    if mcd < k:
        raise PreconditionError(f"minimum color degree {mcd} is below k={k}")
    tri = find_rainbow_triangle(g)
    if tri is not None:
        raise PreconditionError(f"graph has a rainbow triangle {tri}")
    result = longest_rainbow_path(g, budget=budget)
    bound = bound_three_quarters(k)
    return BoundCheck(result.length, bound, judge(result.length, bound, result.exact), result.exact, result.path)
