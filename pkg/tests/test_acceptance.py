"""Acceptance gate: one test per criterion, each printing a pass/fail line.

Run with ``pytest -s tests/test_acceptance.py`` to see the lines as they go.
"""

import itertools
import time

import numpy as np
import pytest

from abelfft import (
    DUAL,
    PRIMAL,
    Group,
    Operator,
    build_reference_operator,
    check_hypotheses,
    convolve,
    delta,
    dft_naive,
    fft_forward,
    fft_inverse,
    fileio,
    is_automorphism,
    max_abs_diff,
    pointwise_product,
    random_automorphism,
    random_function,
    recover,
    reference_operator_matrix,
    star,
)
from abelfft.bench import time_transform_paths
from abelfft.cli import main

from conftest import random_orders

TOL = 1e-9


def _report(num, ok, detail):
    print(f"criterion {num}: {'PASS' if ok else 'FAIL'} - {detail}")


@pytest.fixture(scope="module")
def reference_fixtures():
    """100 seeded (group, automorphism, flag, form) triples with size <= 512."""
    rng = np.random.default_rng(33)
    fixtures = []
    for _ in range(100):
        group = Group(random_orders(rng, max_size=512, max_factors=3, max_order=16))
        psi = random_automorphism(group, int(rng.integers(2**31)))
        conjugation = bool(rng.integers(2))
        form = "T" if rng.integers(2) else "U"
        op = build_reference_operator(group, psi, conjugation, form)
        fixtures.append((group, psi, conjugation, form, op))
    return fixtures


@pytest.fixture(scope="module")
def recovery_reports(reference_fixtures):
    return [(fx, recover(fx[4], tol=TOL)) for fx in reference_fixtures]


def test_criterion_1_transform_identities():
    rng = np.random.default_rng(11)
    worst = {"conv": 0.0, "prod": 0.0, "star": 0.0, "inv": 0.0}
    for _ in range(20):
        group = Group(random_orders(rng, max_size=1024))
        for _ in range(10):
            f = random_function(group, rng)
            g = random_function(group, rng)
            ff, fg = fft_forward(f), fft_forward(g)
            worst["conv"] = max(
                worst["conv"], max_abs_diff(fft_forward(convolve(f, g)), pointwise_product(ff, fg))
            )
            worst["prod"] = max(
                worst["prod"], max_abs_diff(fft_forward(pointwise_product(f, g)), convolve(ff, fg))
            )
            worst["star"] = max(worst["star"], max_abs_diff(fft_forward(star(f)), star(ff)))
            worst["inv"] = max(worst["inv"], max_abs_diff(fft_inverse(ff), f))
    ok = all(err <= TOL for err in worst.values())
    _report(1, ok, f"max errors over 200 pairs: {worst}")
    assert ok


def test_criterion_2_oracle_equivalence():
    shapes = (
        [(p,) for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31)]
        + [(2**k,) for k in range(11)]
        + [(4, 2), (6, 5), (8, 9, 5), (2, 2, 2, 2)]
    )
    rng = np.random.default_rng(22)
    worst = 0.0
    for orders in shapes:
        group = Group(orders)
        for _ in range(10):
            f = random_function(group, rng)
            worst = max(worst, max_abs_diff(fft_forward(f), dft_naive(f)))
    ok = worst <= TOL
    _report(2, ok, f"max |fft - naive| over {len(shapes)} shapes x 10 functions: {worst:.3e}")
    assert ok


def test_criterion_3_reference_round_trip(reference_fixtures, recovery_reports):
    failures = []
    worst_residual = 0.0
    for idx, ((group, psi, conjugation, form, op), report) in enumerate(recovery_reports):
        hypothesis = check_hypotheses(op, trials=3, seed=idx, tol=TOL)
        worst_residual = max(worst_residual, report.residual)
        if not hypothesis.passed:
            failures.append((idx, "hypotheses", hypothesis.as_dict()))
        if report.psi.perm != psi.perm or report.conjugation is not conjugation:
            failures.append((idx, "recovery-mismatch", form))
        if report.residual > TOL:
            failures.append((idx, "residual", report.residual))
    ok = not failures
    _report(3, ok, f"100 round trips, worst residual {worst_residual:.3e}, failures: {failures[:3]}")
    assert ok


def test_criterion_4_step_level_properties(recovery_reports):
    failures = []
    for idx, (_, report) in enumerate(recovery_reports):
        diag = report.diagnostics
        checks = [
            diag["unit_error"] <= TOL,
            diag["point_mass_binary_error"] <= TOL,
            diag["supports_singleton"],
            diag["identity_fixed"],
            diag["homomorphism_ok"],
            diag["homomorphism_exhaustive"],
            diag["m_multiplicativity_error"] <= TOL,
            diag["m_conjugate_additivity_error"] <= TOL,
            diag["condition_star_ok"],
        ]
        if not all(checks):
            failures.append((idx, diag))
    ok = not failures
    _report(4, ok, f"step diagnostics on 100 conforming fixtures, failures: {failures[:2]}")
    assert ok


def test_criterion_5_negative_suite(tmp_path):
    rng = np.random.default_rng(55)
    accepted = []
    for case_index in range(20):
        while True:
            orders = random_orders(rng, max_size=64, max_factors=2, max_order=9)
            group = Group(orders)
            if group.size >= 4:
                break
        form = "T" if case_index % 2 else "U"
        conjugation = bool((case_index // 2) % 2)
        psi = random_automorphism(group, int(rng.integers(2**31)))
        matrix = reference_operator_matrix(group, psi, form).copy()
        kind = case_index % 3
        if kind == 0:
            # row swap involving row 0, so constants can no longer be preserved
            r = int(rng.integers(1, group.size))
            matrix[[0, r]] = matrix[[r, 0]]
        elif kind == 1:
            r = int(rng.integers(group.size))
            c = int(rng.integers(group.size))
            matrix[r, c] += 0.7  # magnitude >= 0.5
        else:
            # compose with a permutation that is not a homomorphism
            while True:
                sigma = rng.permutation(group.size)
                if not is_automorphism(sigma, group):
                    break
            inv = np.empty(group.size, dtype=np.int64)
            inv[sigma] = np.arange(group.size)
            matrix = matrix[:, inv]
        out_side = DUAL if form == "T" else PRIMAL
        op = Operator.from_matrix(group, PRIMAL, out_side, matrix, conjugate_input=conjugation)
        path = tmp_path / f"perturbed_{case_index}.json"
        fileio.save_operator(path, op)
        check_rc = main(["check", str(path), "--trials", "4", "--seed", str(case_index)])
        rejected = check_rc == 1
        if not rejected:
            rejected = main(["recover", str(path)]) == 1
        if not rejected:
            accepted.append((case_index, kind, orders))
    ok = not accepted
    _report(5, ok, f"20 perturbed operators, false acceptances: {accepted}")
    assert ok


def test_criterion_6_automorphism_census():
    start = time.perf_counter()
    results = {}
    for orders, expected in (((4,), 2), ((2, 2), 6)):
        group = Group(orders)
        brute = {
            perm
            for perm in itertools.permutations(range(group.size))
            if is_automorphism(np.asarray(perm), group)
        }
        sampled = {random_automorphism(group, seed).perm for seed in range(200)}
        results[orders] = (len(brute), brute == sampled)
        assert len(brute) == expected
        assert sampled == brute
    elapsed = time.perf_counter() - start
    ok = results[(4,)] == (2, True) and results[(2, 2)] == (6, True)
    _report(6, ok, f"|Aut(Z4)|=2, |Aut(Z2xZ2)|=6, sampler reaches both sets ({elapsed:.2f}s)")
    assert ok


def test_criterion_7_performance_gate():
    bench = time_transform_paths(Group((4096,)), reps=20, seed=0)
    speedup = bench["speedup"]

    big = Group((1 << 18,))
    f = random_function(big, 0)
    fft_forward(f)  # warm the plan; the gate times steady-state transforms
    times = []
    for _ in range(3):
        start = time.perf_counter()
        fft_forward(f)
        times.append(time.perf_counter() - start)
    big_time = sorted(times)[1]

    ok = speedup >= 10.0 and big_time < 1.0
    _report(
        7,
        ok,
        f"size 4096 speedup {speedup:.0f}x (need >= 10), size 2^18 in {big_time:.3f}s (need < 1s)",
    )
    assert ok
