"""Seeded verification suites over generated instances.

Every suite is a deterministic function of ``(suite, trials, base_seed,
budget)``. Trial ``i`` uses seed ``base_seed + i``, so single trials can be
rerun in isolation. Only node budgets keep reports reproducible; a time
limit makes them machine-dependent.
"""

from __future__ import annotations

import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Optional

from . import generators as gen
from .analysis import (
    analyze_endpoints,
    bound_three_quarters,
    check_lemma1,
    check_lemma2,
    judge,
    lemma1_pairs,
    lemma2_indices,
    prior_bound,
)
from .builder import build_rainbow_u_path, check_condition_a
from .bruteforce import naive_longest_rainbow_length
from .graph import (
    EdgeColoredGraph,
    color_degree,
    find_rainbow_triangle,
    is_gallai_complete,
    max_color_degree,
    min_color_degree,
    validate_path,
)
from .graph_io import write_graph
from .oracle import SearchBudget, iter_rainbow_paths, longest_rainbow_path

SCHEMA_VERSION = 1

PASS, FAIL, INCONCLUSIVE = "pass", "fail", "inconclusive"


@dataclass
class Trial:
    index: int
    seed: int
    gen_spec: dict
    measured: dict
    bound: Optional[int]
    holds: Optional[bool]
    exact: bool
    graph: Optional[EdgeColoredGraph] = field(default=None, repr=False)

    @property
    def status(self) -> str:
        if self.holds is None:
            return INCONCLUSIVE
        if self.holds:
            return PASS
        return FAIL if self.exact else INCONCLUSIVE

    @property
    def slack(self) -> Optional[int]:
        return self.measured.get("slack")

    def to_json(self) -> dict:
        return {
            "index": self.index,
            "seed": self.seed,
            "genSpec": self.gen_spec,
            "measured": self.measured,
            "bound": self.bound,
            "holds": self.holds,
            "exact": self.exact,
            "status": self.status,
        }


@dataclass
class ExperimentReport:
    suite: str
    trials: int
    base_seed: int
    budget: SearchBudget
    records: list

    @property
    def failures(self) -> int:
        return sum(r.status == FAIL for r in self.records)

    @property
    def inconclusive(self) -> int:
        return sum(r.status == INCONCLUSIVE for r in self.records)

    @property
    def min_slack(self) -> Optional[int]:
        slacks = [r.slack for r in self.records if r.slack is not None]
        return min(slacks) if slacks else None

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def to_json(self) -> dict:
        return {
            "schemaVersion": SCHEMA_VERSION,
            "suite": self.suite,
            "claim": SUITES[self.suite].claim,
            "baseSeed": self.base_seed,
            "trials": self.trials,
            "budget": {
                "maxNodes": self.budget.max_nodes,
                "timeLimitMs": self.budget.time_limit_ms,
            },
            "sampling": "instances are sampled from seeded generators; "
            "passing trials support but cannot prove a universal statement",
            "aggregate": {
                "trials": len(self.records),
                "failures": self.failures,
                "inconclusive": self.inconclusive,
                "minSlack": self.min_slack,
            },
            "records": [r.to_json() for r in sorted(self.records, key=lambda r: r.index)],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, ensure_ascii=False) + "\n"


# --- suites ---------------------------------------------------------------


def _builder_trial(index: int, seed: int, budget: SearchBudget) -> Trial:
    rng = random.Random(seed)
    n = rng.randint(2, 64)
    g = gen.gen_gallai_substitution(n, seed)
    spec = gen.GenSpec("gallai-substitution", n=n, seed=seed).to_json()
    problems = []
    if not is_gallai_complete(g):
        problems.append("generator output is not Gallai")
    steps = 0
    for u in range(n):
        k = color_degree(g, u)
        path, trace = build_rainbow_u_path(g, u, trace=True, precheck=False)
        check = validate_path(g, path.vertices)
        if not (check.rainbow and path.start == u and path.length == k):
            problems.append(f"vertex {u}: bad path {path.vertices}")
        for rec in trace:
            steps += 1
            if not check_condition_a(g, u, rec.w):
                problems.append(f"vertex {u}: condition A fails after step {rec.step}")
        if k >= 1 and path.colors[0] in path.colors[1:]:
            problems.append(f"vertex {u}: closing color repeats")
    return Trial(
        index,
        seed,
        spec,
        {
            "n": n,
            "colors": len(g.colors()),
            "maxColorDegree": max_color_degree(g),
            "builds": n,
            "steps": steps,
            "problems": problems[:5],
            "slack": 0 if not problems else -1,
        },
        None,
        not problems,
        True,
        g,
    )


def _gallai_max_trial(index: int, seed: int, budget: SearchBudget) -> Trial:
    rng = random.Random(seed)
    n = rng.randint(2, 14)
    g = gen.gen_gallai_substitution(n, seed)
    k = max_color_degree(g)
    result = longest_rainbow_path(g, budget=budget)
    return Trial(
        index,
        seed,
        gen.GenSpec("gallai-substitution", n=n, seed=seed).to_json(),
        {"n": n, "maxColorDegree": k, "lmax": result.length, "slack": result.length - k},
        k,
        judge(result.length, k, result.exact),
        result.exact,
        g,
    )


def _gk_trial(index: int, seed: int, budget: SearchBudget) -> Trial:
    k = index + 1
    g = gen.gen_gk(k)
    degrees = {color_degree(g, v) for v in range(g.n)}
    rainbow_free = find_rainbow_triangle(g) is None
    builder_ok = all(
        build_rainbow_u_path(g, u, precheck=False)[0].length == k for u in range(g.n)
    )
    measured = {
        "k": k,
        "n": g.n,
        "colorDegrees": sorted(degrees),
        "rainbowTriangleFree": rainbow_free,
        "builderLengthsEqualK": builder_ok,
    }
    structural = degrees == {k} and rainbow_free and builder_ok
    if k <= 5:
        result = longest_rainbow_path(g, budget=budget)
        measured["lmax"] = result.length
        measured["slack"] = result.length - k
        exact = result.exact
        holds = structural and result.length == k if exact else (None if structural else False)
    else:
        exact = True
        holds = structural
    return Trial(index, seed, gen.GenSpec("gk", k=k, seed=seed).to_json(), measured, k, holds, exact)


BOUND34_KS = (6, 7, 8)


def bound34_instance(index: int, seed: int) -> tuple:
    k = BOUND34_KS[index % len(BOUND34_KS)]
    n = random.Random(seed).randint(2 * k, 24)
    return k, n, gen.gen_kgood_triangle_free(n, k, seed)


def _bound34_trial(index: int, seed: int, budget: SearchBudget) -> Trial:
    k, n, g = bound34_instance(index, seed)
    result = longest_rainbow_path(g, budget=budget)
    bound = bound_three_quarters(k)
    measured = {
        "n": n,
        "k": k,
        "edges": g.number_of_edges(),
        "colors": len(g.colors()),
        "minColorDegree": min_color_degree(g),
        "rainbowTriangleFree": find_rainbow_triangle(g) is None,
        "lmax": result.length,
        "path": list(result.path.vertices),
        "slack": result.length - bound,
    }
    preconditions = measured["minColorDegree"] >= k and measured["rainbowTriangleFree"]
    holds = judge(result.length, bound, result.exact) if preconditions else False
    prior = prior_bound(k)
    measured["priorBound"] = prior
    prior_ok = judge(result.length, prior, result.exact)
    measured["priorHolds"] = prior_ok
    if result.exact:
        analysis = analyze_endpoints(g, result.path, k)
        measured["endpoints"] = {
            "s": analysis.s,
            "t": analysis.t,
            "x": list(analysis.x),
            "y": list(analysis.y),
            "violations": analysis.violations(),
        }
        if analysis.violations():
            holds = False
    if prior_ok is False:
        holds = False
    return Trial(
        index,
        seed,
        gen.GenSpec("kgood-trianglefree", n=n, k=k, seed=seed).to_json(),
        measured,
        bound,
        holds,
        result.exact,
        g,
    )


LEMMA_PATHS_PER_INSTANCE = 400


def lemma_instance(index: int, seed: int) -> tuple:
    rng = random.Random(seed)
    if index % 2 == 0:
        n = rng.randint(8, 14)
        return gen.GenSpec("gallai-substitution", n=n, seed=seed), gen.gen_gallai_substitution(n, seed)
    k = rng.choice(BOUND34_KS)
    n = rng.randint(2 * k, 24)
    return (
        gen.GenSpec("kgood-trianglefree", n=n, k=k, seed=seed),
        gen.gen_kgood_triangle_free(n, k, seed),
    )


def _lemma_trial(index: int, seed: int, budget: SearchBudget) -> Trial:
    spec, g = lemma_instance(index, seed)
    rainbow_free = find_rainbow_triangle(g) is None
    paths = l1 = l2 = 0
    violations = []
    for p in iter_rainbow_paths(g, min_length=5, limit=LEMMA_PATHS_PER_INSTANCE):
        paths += 1
        for i, j in lemma1_pairs(g, p):
            l1 += 1
            if not check_lemma1(g, p, i, j).conclusion_holds:
                violations.append({"lemma": 1, "path": list(p.vertices), "i": i, "j": j})
        for i in lemma2_indices(g, p):
            l2 += 1
            if not check_lemma2(g, p, i).conclusion_holds:
                violations.append({"lemma": 2, "path": list(p.vertices), "i": i})
    return Trial(
        index,
        seed,
        spec.to_json(),
        {
            "n": g.n,
            "rainbowTriangleFree": rainbow_free,
            "paths": paths,
            "lemma1Checks": l1,
            "lemma2Checks": l2,
            "violations": violations[:5],
        },
        None,
        rainbow_free and not violations,
        True,
        g,
    )


def uniform_instance(seed: int) -> tuple:
    rng = random.Random(seed)
    n = rng.randint(1, 9)
    colors = rng.randint(1, n + 1)
    return gen.GenSpec("uniform-random", n=n, color_count=colors, seed=seed), gen.gen_uniform_coloring(n, colors, seed)


def _oracle_trial(index: int, seed: int, budget: SearchBudget) -> Trial:
    spec, g = uniform_instance(seed)
    result = longest_rainbow_path(g, budget=budget)
    naive = naive_longest_rainbow_length(g)
    check = validate_path(g, result.path.vertices)
    holds: Optional[bool] = check.rainbow and result.length == naive
    if not result.exact and result.length < naive:
        holds = None
    return Trial(
        index,
        seed,
        spec.to_json(),
        {"n": g.n, "lmax": result.length, "naive": naive, "slack": result.length - naive},
        naive,
        holds,
        result.exact,
        g,
    )


def prior_instance(index: int, seed: int) -> tuple:
    rng = random.Random(seed)
    if index % 2 == 0:
        n = rng.randint(4, 12)
        colors = rng.randint(max(2, n // 2), 2 * n)
        return (
            gen.GenSpec("uniform-random", n=n, color_count=colors, seed=seed),
            gen.gen_uniform_coloring(n, colors, seed),
        )
    k = rng.randint(3, 8)
    n = rng.randint(2 * k, 20)
    return (
        gen.GenSpec("kgood-trianglefree", n=n, k=k, seed=seed),
        gen.gen_kgood_triangle_free(n, k, seed),
    )


def _prior_trial(index: int, seed: int, budget: SearchBudget) -> Trial:
    spec, g = prior_instance(index, seed)
    k = min_color_degree(g)
    bound = prior_bound(k)
    result = longest_rainbow_path(g, budget=budget)
    measured = {"n": g.n, "k": k, "lmax": result.length}
    if bound is None:
        measured["note"] = "minimum color degree below 3, no bound applies"
        holds: Optional[bool] = True
    else:
        measured["slack"] = result.length - bound
        holds = judge(result.length, bound, result.exact)
    return Trial(index, seed, spec.to_json(), measured, bound, holds, result.exact, g)


@dataclass(frozen=True)
class Suite:
    name: str
    claim: str
    run_trial: Callable[[int, int, SearchBudget], Trial]
    max_trials: Optional[int] = None


SUITES = {
    s.name: s
    for s in (
        Suite(
            "builder",
            "every vertex u of a Gallai-colored complete graph starts a rainbow path "
            "of length d^c(u), built with the invariant holding after every step",
            _builder_trial,
        ),
        Suite(
            "gallai-max",
            "a Gallai-colored complete graph has a rainbow path as long as its "
            "maximum color degree",
            _gallai_max_trial,
        ),
        Suite(
            "gk-extremal",
            "G_k has color degree k everywhere, no rainbow triangle, and longest "
            "rainbow path exactly k (oracle for k <= 5)",
            _gk_trial,
            max_trials=8,
        ),
        Suite(
            "bound34",
            "a rainbow-triangle-free graph with minimum color degree k >= 6 has a "
            "rainbow path of length >= 3k/4; endpoint inequalities hold on the "
            "longest path",
            _bound34_trial,
        ),
        Suite(
            "lemmas",
            "off-path chords from the start of a rainbow path of length >= 5 are "
            "separated by a missing chord or a repeated chord color",
            _lemma_trial,
        ),
        Suite(
            "oracle",
            "the backtracking oracle agrees with exhaustive enumeration",
            _oracle_trial,
        ),
        Suite(
            "prior-bounds",
            "k-good colorings have rainbow paths of length k-1 (3 <= k <= 7) and "
            "ceil(2k/3)+1 (k >= 7)",
            _prior_trial,
        ),
    )
}


def _run_one(args: tuple) -> Trial:
    name, index, seed, budget = args
    return SUITES[name].run_trial(index, seed, budget)


def run_suite(
    name: str,
    trials: int,
    base_seed: int,
    budget: SearchBudget = SearchBudget(),
    workers: int = 1,
) -> ExperimentReport:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    if trials < 1:
        raise ValueError("trials must be at least 1")
    suite = SUITES[name]
    if suite.max_trials is not None:
        trials = min(trials, suite.max_trials)
    jobs = [(name, i, base_seed + i, budget) for i in range(trials)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(_run_one, jobs, chunksize=max(1, trials // (4 * workers))))
    else:
        records = [_run_one(job) for job in jobs]
    return ExperimentReport(name, trials, base_seed, budget, records)


def dump_counterexamples(report: ExperimentReport, report_path: Path) -> list:
    """Write each exact failure's instance next to the report; returns the paths."""
    written = []
    for rec in report.records:
        if rec.status == FAIL and rec.graph is not None:
            out = report_path.with_name(f"{report_path.stem}.counterexample-{rec.index}.txt")
            out.write_bytes(write_graph(rec.graph))
            written.append(out)
    return written
