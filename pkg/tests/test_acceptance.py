"""Acceptance suite: one test per criterion, each printing a pass line.

Every tolerance is pinned here, not calibrated later.  Each criterion prints
one pass line; run with ``pytest -rA`` (or ``-s``) to see the lines for
passing criteria alongside pytest's own PASSED/FAILED verdicts.

A note on criterion 5 (disk consistency).  The coefficient tests sum the
signed weights exactly as written, and the weight w(n) turns negative when
alpha*lambda approaches 1 (on this grid: lambda = 0.75 with alpha = 1.2 or
4/3).  A "member" verdict obtained from negative weights is vacuous: the sum
is then bounded regardless of the coefficients, so it no longer dominates
the analytic condition, and the disk sampler demonstrably finds genuine
violations for such series (pinned below).  A verdict therefore CERTIFIES
membership only when every contributing weight is nonnegative; those
certificates are the ones required to survive disk sampling with zero
violations.  Vacuous verdicts are counted, must carry the negative-weight
flag in their report detail, and are excluded from the zero-violation
requirement.
"""

import math
import sys
import time
from functools import lru_cache

import pytest

from touchardstar import (
    ClassParams,
    DiskGrid,
    RTauParams,
    TouchardParams,
    apply_operator_L,
    find_threshold,
    lemma_sum_M,
    lemma_sum_N,
    poisson_moment_closed,
    poisson_moment_series,
    theorem_M_lhs,
    theorem_N_lhs,
    theorem_rtau_inclusion,
    touchard_series,
    verify_M,
    verify_N,
)
from touchardstar.formats import rows_csv

GRID_L = (0, 1, 2, 3)
GRID_M = (0.1, 0.5, 1.0, 2.0, 4.0)
GRID_LAM = (0.0, 0.25, 0.5, 0.75)
GRID_ALPHA = (1.05, 1.2, 4.0 / 3.0)
ORDER = 64

#: Weights this small in magnitude cannot move a criterion sum by more than
#: TOL_EQ; a certificate is sound when no weight sits meaningfully below 0.
WEIGHT_SOUND_TOL = 1e-12


def announce(number: int, label: str, extra: str = "") -> None:
    line = f"acceptance {number} ({label}): PASS{' [' + extra + ']' if extra else ''}"
    print(line, flush=True)


@lru_cache(maxsize=None)
def kernel(l: int, m: float, order: int = ORDER):
    return touchard_series(TouchardParams(l, m), order)


@lru_cache(maxsize=None)
def kernel_integral(l: int, m: float, order: int = ORDER):
    return apply_operator_L(TouchardParams(l, m), order)


def certificate_is_sound(p: ClassParams, order: int = ORDER) -> bool:
    # w(n) is linear in n, so its minimum over 2..order sits at an endpoint
    return min(p.weight(2), p.weight(order)) >= -WEIGHT_SOUND_TOL


def test_criterion_1_moment_dual_path():
    start = time.perf_counter()
    worst = 0.0
    comparisons = 0
    for m in (0.1, 0.5, 1.0, 2.0, 5.0, 10.0):
        for l in range(13):
            closed = poisson_moment_closed(l, m).value
            series = poisson_moment_series(l, m, 1e-13).value
            worst = max(worst, abs(closed - series) / closed)
            comparisons += 1
            assert abs(closed - series) / closed < 1e-10
        # low-order identities; the cubic is checked against the series
        # oracle before being asserted against the closed form
        assert abs(poisson_moment_closed(0, m).value - 1.0) < 1e-12
        assert abs(poisson_moment_closed(1, m).value - m) < 1e-12 * max(1.0, m)
        assert abs(poisson_moment_closed(2, m).value - (m * m + m)) < 1e-12 * (m * m + m)
        cubic = m**3 + 3 * m**2 + m
        assert abs(poisson_moment_series(3, m, 1e-14).value - cubic) < 1e-12 * cubic
        assert abs(poisson_moment_closed(3, m).value - cubic) < 1e-12 * cubic
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0
    announce(1, "moment dual-path suite",
             f"{comparisons} comparisons, max rel diff {worst:.2e}, {elapsed:.2f} s")


def test_criterion_2_notation_identities():
    def partial(m, shift):
        return math.fsum(
            m ** (n - 1) / math.factorial(n - shift)
            for n in range(2, 201)
            if 0 <= n - shift <= 170
        )

    worst = 0.0
    for m in (0.5, 1.0, 2.0, 5.0):
        em = math.exp(m)
        for shift, target in ((1, em - 1), (2, m * em), (3, m * m * em)):
            rel = abs(partial(m, shift) - target) / target
            worst = max(worst, rel)
            assert rel < 1e-10
    announce(2, "shifted-factorial sum identities", f"max rel diff {worst:.2e}")


def test_criterion_3_theorem_vs_lemma_grid():
    start = time.perf_counter()
    worst_m = worst_n = 0.0
    points = 0
    for l in GRID_L:
        for m in GRID_M:
            f = kernel(l, m)
            tp = TouchardParams(l, m)
            for lam in GRID_LAM:
                for alpha in GRID_ALPHA:
                    p = ClassParams(lam, alpha)
                    dm = abs(
                        theorem_M_lhs(tp, p).criterion_value
                        - lemma_sum_M(f, p).criterion_value
                    )
                    dn = abs(
                        theorem_N_lhs(tp, p).criterion_value
                        - lemma_sum_N(f, p).criterion_value
                    )
                    worst_m, worst_n = max(worst_m, dm), max(worst_n, dn)
                    points += 1
                    assert dm < 1e-10
                    assert dn < 1e-10
    elapsed = time.perf_counter() - start
    assert points == 240
    assert elapsed < 5.0
    announce(3, "closed form vs coefficient sum on the 240-point grid",
             f"max diff M {worst_m:.2e}, N {worst_n:.2e}, {elapsed:.2f} s")


def test_criterion_4_n_cancellation():
    rt = RTauParams(1.0, 1.0, -1.0)  # gain 2, the largest on offer
    worst_pair = worst_scaled = 0.0
    for l in GRID_L:
        for m in GRID_M:
            tp = TouchardParams(l, m)
            f = kernel(l, m)
            g = kernel_integral(l, m)
            for lam in GRID_LAM:
                for alpha in GRID_ALPHA:
                    p = ClassParams(lam, alpha)
                    via_convex = lemma_sum_N(g, p).criterion_value
                    via_starlike = lemma_sum_M(f, p).criterion_value
                    d = abs(via_convex - via_starlike)
                    worst_pair = max(worst_pair, d)
                    assert d < 1e-12
                    scaled = abs(
                        rt.gain * via_convex
                        - theorem_rtau_inclusion(tp, p, rt).criterion_value
                    )
                    worst_scaled = max(worst_scaled, scaled)
                    assert scaled < 1e-12
    announce(4, "1/n cancellation and distortion-class scaling",
             f"max diff {worst_pair:.2e}, scaled {worst_scaled:.2e}")


def _disk_consistency_rows(grid: DiskGrid):
    rows = []
    for l in GRID_L:
        for m in GRID_M:
            tp = TouchardParams(l, m)
            f = kernel(l, m)
            for lam in GRID_LAM:
                for alpha in GRID_ALPHA:
                    p = ClassParams(lam, alpha)
                    for which, theorem, lemma, verify in (
                        ("M", theorem_M_lhs, lemma_sum_M, verify_M),
                        ("N", theorem_N_lhs, lemma_sum_N, verify_N),
                    ):
                        closed = theorem(tp, p)
                        if not closed.member:
                            continue
                        sound = certificate_is_sound(p)
                        report = verify(f, p, grid)
                        rows.append(
                            {
                                "which": which,
                                "l": l,
                                "m": m,
                                "lambda": lam,
                                "alpha": alpha,
                                "sound_certificate": sound,
                                "violations": report.violations,
                                "max_real_part": report.max_real_part,
                                "detail": lemma(f, p).detail,
                            }
                        )
    return rows


def test_criterion_5_disk_consistency():
    start = time.perf_counter()
    grid = DiskGrid.uniform(0.95, rings=24, angles=96)
    rows = _disk_consistency_rows(grid)
    sound_members = [r for r in rows if r["sound_certificate"]]
    vacuous = [r for r in rows if not r["sound_certificate"]]
    assert sound_members, "grid produced no certified members to verify"
    for r in sound_members:
        assert r["violations"] == 0, f"sound certificate violated on the disk: {r}"
    # every vacuous verdict must say so in its report detail
    for r in vacuous:
        assert "negative weights contributed" in r["detail"]
    # pin the mathematical fact that makes the soundness split necessary:
    # at lambda = 0.75, alpha = 4/3 the weight is constant -1/3, the sum
    # test passes vacuously, yet the analytic condition genuinely fails
    corner = ClassParams(0.75, 4.0 / 3.0)
    corner_tp = TouchardParams(1, 2.0)
    assert theorem_M_lhs(corner_tp, corner).member
    assert not certificate_is_sound(corner)
    assert verify_M(kernel(1, 2.0), corner, grid).violations > 0
    elapsed = time.perf_counter() - start
    assert elapsed < 30.0
    announce(
        5,
        "disk consistency for certified members",
        f"{len(sound_members)} sound members verified with zero violations, "
        f"{len(vacuous)} vacuous negative-weight verdicts excluded and flagged, "
        f"{elapsed:.1f} s",
    )


THRESHOLD_COMBOS = tuple(
    (which, l, lam, alpha)
    for which in ("M", "N")
    for l in (0, 1, 2)
    for lam in (0.0, 0.5)
    for alpha in (1.2, 4.0 / 3.0)
)


def _threshold_rows():
    rows = []
    for which, l, lam, alpha in THRESHOLD_COMBOS:
        p = ClassParams(lam, alpha)
        result = find_threshold(which, l, p)
        rows.append(
            {
                "which": which,
                "l": l,
                "lambda": lam,
                "alpha": alpha,
                "m_star": result.m_star,
                "residual": result.residual,
                "iterations": result.iterations,
            }
        )
    return rows


def test_criterion_6_threshold_self_certification():
    worst = 0.0
    for which, l, lam, alpha in THRESHOLD_COMBOS:
        p = ClassParams(lam, alpha)
        result = find_threshold(which, l, p)
        worst = max(worst, abs(result.residual))
        assert abs(result.residual) < 1e-8
        brute = lemma_sum_M if which == "M" else lemma_sum_N
        below = brute(
            touchard_series(TouchardParams(l, result.m_star * (1 - 1e-5)), ORDER), p
        )
        above = brute(
            touchard_series(TouchardParams(l, result.m_star * (1 + 1e-5)), ORDER), p
        )
        assert below.criterion_value <= p.bound < above.criterion_value
    announce(
        6,
        "threshold back-substitution and brute-force straddle",
        f"{len(THRESHOLD_COMBOS)} thresholds, max |residual| {worst:.2e}",
    )


def _grid_comparison_csv() -> str:
    fields = ["l", "m", "lambda", "alpha", "theorem_M", "lemma_M", "theorem_N", "lemma_N"]
    rows = []
    for l in GRID_L:
        for m in GRID_M:
            tp = TouchardParams(l, m)
            f = touchard_series(tp, ORDER)
            for lam in GRID_LAM:
                for alpha in GRID_ALPHA:
                    p = ClassParams(lam, alpha)
                    rows.append(
                        {
                            "l": l,
                            "m": m,
                            "lambda": lam,
                            "alpha": alpha,
                            "theorem_M": theorem_M_lhs(tp, p).criterion_value,
                            "lemma_M": lemma_sum_M(f, p).criterion_value,
                            "theorem_N": theorem_N_lhs(tp, p).criterion_value,
                            "lemma_N": lemma_sum_N(f, p).criterion_value,
                        }
                    )
    return rows_csv(fields, rows)


def _cancellation_csv() -> str:
    rt = RTauParams(1.0, 1.0, -1.0)
    fields = ["l", "m", "lambda", "alpha", "convex_of_integral", "starlike", "scaled", "rtau"]
    rows = []
    for l in GRID_L:
        for m in GRID_M:
            tp = TouchardParams(l, m)
            f = touchard_series(tp, ORDER)
            g = apply_operator_L(tp, ORDER)
            for lam in GRID_LAM:
                for alpha in GRID_ALPHA:
                    p = ClassParams(lam, alpha)
                    via_convex = lemma_sum_N(g, p).criterion_value
                    rows.append(
                        {
                            "l": l,
                            "m": m,
                            "lambda": lam,
                            "alpha": alpha,
                            "convex_of_integral": via_convex,
                            "starlike": lemma_sum_M(f, p).criterion_value,
                            "scaled": rt.gain * via_convex,
                            "rtau": theorem_rtau_inclusion(tp, p, rt).criterion_value,
                        }
                    )
    return rows_csv(fields, rows)


def _disk_csv() -> str:
    grid = DiskGrid.uniform(0.95, rings=24, angles=96)
    fields = [
        "which", "l", "m", "lambda", "alpha",
        "sound_certificate", "violations", "max_real_part",
    ]
    return rows_csv(fields, _disk_consistency_rows(grid))


def _threshold_csv() -> str:
    fields = ["which", "l", "lambda", "alpha", "m_star", "residual", "iterations"]
    return rows_csv(fields, _threshold_rows())


@pytest.mark.parametrize(
    "label,builder",
    [
        ("grid comparison", _grid_comparison_csv),
        ("n-cancellation", _cancellation_csv),
        ("disk consistency", _disk_csv),
        ("thresholds", _threshold_csv),
    ],
    ids=["criterion3", "criterion4", "criterion5", "criterion6"],
)
def test_criterion_7_determinism(label, builder):
    first = builder()
    second = builder()
    assert first == second, f"{label} CSV not byte-identical across runs"
    if label == "thresholds":
        announce(7, "byte-identical CSV outputs for criteria 3-6 reruns")
