"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Lines are also collected and shown in the pytest terminal summary.
"""

import subprocess
import sys
import time

import pytest

from conftest import ACCEPTANCE_LINES
from rainbowpath.analysis import bound_three_quarters, prior_bound
from rainbowpath.harness import BOUND34_KS, FAIL, INCONCLUSIVE, run_suite
from rainbowpath.oracle import SearchBudget

BUDGET = SearchBudget(max_nodes=5_000_000)


def report_line(number, title, ok, detail):
    line = f"criterion {number} [{'PASS' if ok else 'FAIL'}] {title}: {detail}"
    print(line)
    ACCEPTANCE_LINES.append(line)
    return ok


@pytest.fixture(scope="module")
def builder_run():
    t0 = time.perf_counter()
    report = run_suite("builder", 500, 0, BUDGET)
    return report, time.perf_counter() - t0


@pytest.fixture(scope="module")
def bound34_report():
    return run_suite("bound34", 150, 0, BUDGET)


def test_criterion_1_builder_lengths(builder_run):
    report, elapsed = builder_run
    builds = sum(r.measured["builds"] for r in report.records)
    ok = (
        len(report.records) >= 500
        and all(r.measured["n"] <= 64 for r in report.records)
        and report.failures == 0
        and report.inconclusive == 0
        and elapsed < 300
    )
    assert report_line(
        1,
        "rainbow u-path of length d^c(u) from every vertex of Gallai K_n",
        ok,
        f"{len(report.records)} graphs, {builds} builds, {report.failures} failures, {elapsed:.1f}s",
    )


def test_criterion_2_condition_a(builder_run):
    report, _ = builder_run
    steps = sum(r.measured["steps"] for r in report.records)
    bad = [
        p
        for r in report.records
        for p in r.measured["problems"]
        if "condition A" in p
    ]
    ok = steps > 0 and not bad and report.failures == 0
    assert report_line(2, "Condition A after every builder step", ok, f"{steps} steps checked, {len(bad)} violations")


def test_criterion_3_gk_extremal():
    report = run_suite("gk-extremal", 8, 0, BUDGET)
    ks = [r.measured["k"] for r in report.records]
    small = [r for r in report.records if r.measured["k"] <= 5]
    ok = (
        ks == list(range(1, 9))
        and all(r.holds is True for r in report.records)
        and all(r.exact and r.measured["lmax"] == r.measured["k"] for r in small)
        and all(r.measured["colorDegrees"] == [r.measured["k"]] for r in report.records)
        and all(r.measured["rainbowTriangleFree"] for r in report.records)
        and all(r.measured["builderLengthsEqualK"] for r in report.records)
    )
    assert report_line(
        3,
        "G_k extremality (oracle exact for k <= 5)",
        ok,
        "lmax " + ", ".join(f"k={r.measured['k']}:{r.measured.get('lmax', '-')}" for r in report.records),
    )


def test_criterion_4_three_quarter_bound(bound34_report):
    report = bound34_report
    per_k = {k: [r for r in report.records if r.measured["k"] == k] for k in BOUND34_KS}
    completed = [r for r in report.records if r.exact]
    below = [r for r in completed if r.measured["lmax"] < bound_three_quarters(r.measured["k"])]
    pre = all(
        r.measured["n"] <= 24
        and r.measured["minColorDegree"] >= r.measured["k"]
        and r.measured["rainbowTriangleFree"]
        for r in report.records
    )
    ok = (
        all(len(v) >= 50 for v in per_k.values())
        and pre
        and not below
        and report.failures == 0
        and report.inconclusive < 0.1 * len(report.records)
    )
    slack = {k: min(r.measured["slack"] for r in v) for k, v in per_k.items()}
    assert report_line(
        4,
        "lmax >= ceil(3k/4) on k-good rainbow-triangle-free graphs, k in {6,7,8}",
        ok,
        f"{len(report.records)} trials, {len(completed)} exact, {len(below)} below bound, "
        f"{report.inconclusive} inconclusive, min slack per k {slack}",
    )


def test_criterion_5_endpoint_inequalities(bound34_report):
    exact = [r for r in bound34_report.records if r.exact]
    analysed = [r for r in exact if "endpoints" in r.measured]
    violations = [v for r in analysed for v in r.measured["endpoints"]["violations"]]
    nonzero = sum(1 for r in analysed if r.measured["endpoints"]["s"] or r.measured["endpoints"]["t"])
    ok = len(analysed) == len(exact) and len(exact) > 0 and not violations
    assert report_line(
        5,
        "endpoint inequalities and gap conditions on every longest path",
        ok,
        f"{len(analysed)} paths analysed ({nonzero} with s or t > 0), {len(violations)} violations",
    )


def test_criterion_6_lemmas():
    report = run_suite("lemmas", 100, 0, BUDGET)
    tuples = sum(r.measured["lemma1Checks"] + r.measured["lemma2Checks"] for r in report.records)
    violations = sum(len(r.measured["violations"]) for r in report.records)
    ok = (
        all(r.measured["rainbowTriangleFree"] for r in report.records)
        and violations == 0
        and report.failures == 0
        and tuples >= 10_000
    )
    assert report_line(6, "chord lemmas on rainbow paths of length >= 5", ok, f"{tuples} index tuples, {violations} violations")


def test_criterion_7_oracle_soundness():
    report = run_suite("oracle", 1000, 0, BUDGET)
    mismatches = [r for r in report.records if r.measured["lmax"] != r.measured["naive"]]
    ok = (
        len(report.records) == 1000
        and all(r.measured["n"] <= 9 for r in report.records)
        and all(r.exact for r in report.records)
        and not mismatches
        and report.failures == 0
    )
    assert report_line(7, "oracle equals exhaustive enumeration on uniform colorings", ok, f"1000 instances, {len(mismatches)} mismatches")


def test_criterion_8_prior_bounds(bound34_report):
    prior = run_suite("prior-bounds", 300, 0, BUDGET)
    samples = []
    for r in bound34_report.records:
        k = r.measured["minColorDegree"]
        samples.append((k, r.measured["lmax"], r.exact))
    for r in prior.records:
        samples.append((r.measured["k"], r.measured["lmax"], r.exact))
    checked = violations = 0
    for k, lmax, exact in samples:
        bound = prior_bound(k)
        if bound is None:
            continue
        checked += 1
        if exact and lmax < bound:
            violations += 1
    ok = violations == 0 and prior.failures == 0 and checked > 0
    assert report_line(8, "prior bounds k-1 and ceil(2k/3)+1", ok, f"{checked} k-good samples, {violations} exact violations")


def test_criterion_9_determinism(tmp_path):
    outputs = []
    for workers in (1, 2):
        out = tmp_path / f"report-{workers}.json"
        cmd = [
            sys.executable, "-m", "rainbowpath", "verify", "--suite", "bound34",
            "--trials", "50", "--seed", "42", "--workers", str(workers), "--report", str(out),
        ]
        proc = subprocess.run(cmd, capture_output=True, text=True)
        assert proc.returncode == 0, proc.stderr
        outputs.append(out.read_bytes())
    same = outputs[0] == outputs[1]
    assert report_line(9, "verify bound34 reports byte-identical across worker counts", same, f"{len(outputs[0])} bytes each")
