"""Constructive rainbow u-paths in Gallai-colored complete graphs.

Given an anchor ``u`` with color degree ``k``, take a rainbow fan
``v_1 .. v_k`` at ``u`` and insert the fan vertices one at a time into a
working sequence ``w`` that keeps the invariant

    C(w_l w_{l+1}) == C(u w_l)   for every consecutive pair, and
    set(w) == {v_1, .., v_{i+1}} after step i.

Reading ``w`` backwards from ``u`` then gives a rainbow path of length
``k`` starting at ``u``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence, Tuple

from .graph import (
    EdgeColoredGraph,
    InputError,
    VertexPath,
    find_rainbow_triangle,
    first_missing_pair,
)

APPEND = "append"
SWAP_LAST = "swap-last"
PREPEND = "prepend"
INSERT_AT_J0 = "insert-at-j0"


class NotGallai(InputError):
    """The input is not a complete graph without rainbow triangles."""

    def __init__(self, message: str, witness: Tuple[int, ...]) -> None:
        self.witness = witness
        super().__init__(f"{message}: {witness}")


class AssumptionViolated(RuntimeError):
    """A builder step found no applicable case, or broke the invariant.

    Only possible when the Gallai hypothesis does not hold. ``witness`` is
    a rainbow triangle or a missing pair among the vertices involved.
    """

    def __init__(self, message: str, witness: Optional[Tuple[int, ...]]) -> None:
        self.witness = witness
        super().__init__(f"{message} (witness: {witness})")


@dataclass(frozen=True)
class BuilderState:
    u: int
    neighbors: Tuple[int, ...]
    w: Tuple[int, ...]
    step: int

    @property
    def done(self) -> bool:
        return len(self.w) >= len(self.neighbors)


@dataclass(frozen=True)
class StepRecord:
    step: int
    case: str
    j0: Optional[int]
    w: Tuple[int, ...]

    def to_json(self) -> dict:
        return {"step": self.step, "case": self.case, "j0": self.j0, "w": list(self.w)}


@dataclass
class BuildTrace:
    records: list = field(default_factory=list)

    def __iter__(self):
        return iter(self.records)

    def __len__(self) -> int:
        return len(self.records)


def select_rainbow_fan(g: EdgeColoredGraph, u: int) -> Tuple[int, ...]:
    """First neighbor (by vertex id) of each color at ``u``, in vertex-id order."""
    seen: set[int] = set()
    fan = []
    for v, c in g.neighbors(u).items():
        if c not in seen:
            seen.add(c)
            fan.append(v)
    return tuple(fan)


def check_condition_a(g: EdgeColoredGraph, u: int, w: Sequence[int]) -> bool:
    """True iff every edge ``w_l w_{l+1}`` has the color of ``u w_l``."""
    for x in w:
        if g.color(u, x) is None:
            raise InputError(f"({u}, {x}) is not an edge")
    for a, b in zip(w, w[1:]):
        cab = g.color(a, b)
        if cab is None:
            raise InputError(f"({a}, {b}) is not an edge")
        if cab != g.color(u, a):
            return False
    return True


def initial_state(g: EdgeColoredGraph, u: int) -> BuilderState:
    fan = select_rainbow_fan(g, u)
    return BuilderState(u, fan, fan[:1], 0)


def _local_witness(g: EdgeColoredGraph, vertices: Sequence[int]) -> Optional[Tuple[int, ...]]:
    order = sorted(set(vertices))
    sub = g.induced(order)
    missing = first_missing_pair(sub)
    if missing is not None:
        return tuple(order[i] for i in missing)
    tri = find_rainbow_triangle(sub)
    if tri is not None:
        return tuple(order[i] for i in tri)
    return None


def _color(g: EdgeColoredGraph, a: int, b: int) -> int:
    c = g.color(a, b)
    if c is None:
        raise AssumptionViolated(f"missing edge ({a}, {b})", (min(a, b), max(a, b)))
    return c


def _step(g: EdgeColoredGraph, st: BuilderState) -> Tuple[BuilderState, StepRecord]:
    if st.done:
        raise ValueError("builder already finished")
    u, w = st.u, list(st.w)
    i = st.step + 1
    x = st.neighbors[i]
    involved = (u, *w, x)

    def col(a: int, b: int) -> int:
        return _color(g, a, b)

    j0: Optional[int] = None
    # w is 0-based here: w[i-1] is w_i
    if col(w[i - 1], x) == col(u, w[i - 1]):
        case = APPEND
        w.append(x)
    elif i == 1 or col(w[i - 2], x) == col(u, w[i - 2]):
        case = SWAP_LAST
        w.insert(i - 1, x)
    else:
        cux = col(u, x)
        for j in range(i - 1, 1, -1):
            if col(w[j - 1], x) == cux and col(w[j - 2], x) != cux:
                j0 = j
                break
        if j0 is None:
            if any(col(w[j - 1], x) != cux for j in range(1, i)):
                raise AssumptionViolated(
                    f"step {i}: no insertion position for {x}", _local_witness(g, involved)
                )
            j0 = 1
        case = PREPEND if j0 == 1 else INSERT_AT_J0
        w.insert(j0 - 1, x)

    if set(w) != set(st.neighbors[: i + 1]) or not check_condition_a(g, u, w):
        raise AssumptionViolated(
            f"step {i}: invariant broken after {case}", _local_witness(g, (u, *w))
        )
    new = BuilderState(u, st.neighbors, tuple(w), i)
    return new, StepRecord(i, case, j0, new.w)


def builder_step(g: EdgeColoredGraph, st: BuilderState) -> BuilderState:
    """Insert the next fan vertex into ``st.w``."""
    return _step(g, st)[0]


def build_rainbow_u_path(
    g: EdgeColoredGraph,
    u: int,
    trace: bool = False,
    precheck: bool = True,
) -> Tuple[VertexPath, Optional[BuildTrace]]:
    """Rainbow path starting at ``u`` of length exactly ``d^c(u)``.

    With ``precheck`` the graph is first verified to be complete and free
    of rainbow triangles (``NotGallai`` otherwise). Without it, the
    per-step checks still raise ``AssumptionViolated`` on bad input.
    """
    if g.n < 1:
        raise InputError("graph has no vertices")
    g.neighbors(u)  # range check
    if precheck:
        missing = first_missing_pair(g)
        if missing is not None:
            raise NotGallai("graph is not complete, missing pair", missing)
        tri = find_rainbow_triangle(g)
        if tri is not None:
            raise NotGallai("graph has a rainbow triangle", tri)

    st = initial_state(g, u)
    log = BuildTrace() if trace else None
    while not st.done:
        st, rec = _step(g, st)
        if log is not None:
            log.records.append(rec)

    path = VertexPath.of(g, (u, *reversed(st.w)))
    if not path.is_rainbow or path.length != len(st.neighbors):
        raise AssumptionViolated("output path is not rainbow", _local_witness(g, path.vertices))
    return path, log
