"""Verification suites over the whole library, run at scale.

Exact suites (recursion, lemma3, symmetry) use dyadic integer arithmetic
only and fail on any non-equality.  Numerical suites (bounds, sandwich,
halving) share one boundary sweep of Lebesgue constants; their bound checks
are one-sided safe, because sampled suprema never exceed the true ones,
while the equality cases are pinned by exact evaluation at the next
sequence point.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence

import numpy as np

from .core import DyadicRational, binary_expand
from .disk import check_symmetry_relations, explicit_leja_point, explicit_section
from .extrema import (
    lebesgue_constants_sweep,
    lebesgue_sharp_bound,
    quadratic_sharp_bound,
)
from .greedy import (
    circle_grid,
    find_rotation_match,
    greedy_section,
    transfinite_diameter_diagnostic,
)
from .interp import LagrangeBasis
from .recursion import (
    closed_form_check,
    defect_expansion_sum,
    defect_reduction_check,
    defect_value,
    defect_zero_indices,
    majorant_value,
    predicted_zero_defect_indices,
)

__all__ = ["SuiteResult", "SweepValues", "compute_sweep", "run_suites", "SUITE_NAMES"]

SUITE_NAMES = ("bounds", "sandwich", "recursion", "lemma3", "symmetry", "greedy", "halving")

#: numeric slack allowed on floating bound checks
NUM_TOL = 1e-6

_HALVING_SEED = 20240311


@dataclass
class SuiteResult:
    """Outcome of one verification suite."""

    name: str
    checks: int
    failures: int
    worst_slack: Optional[float]
    first_failure: Optional[str]
    seconds: float

    @property
    def passed(self) -> bool:
        return self.failures == 0


class _Recorder:
    """Counts checks, keeps the first failure message and the worst slack.

    Slack is the distance to the failing side of an inequality; negative
    slack means the check failed.  Exact checks pass ``None``.
    """

    def __init__(self) -> None:
        self.checks = 0
        self.failures = 0
        self.first: Optional[str] = None
        self.worst: Optional[float] = None

    def check(self, ok: bool, detail: str, slack: Optional[float] = None) -> None:
        self.checks += 1
        if slack is not None:
            self.worst = slack if self.worst is None else min(self.worst, slack)
        if not ok:
            self.failures += 1
            if self.first is None:
                self.first = detail

    def result(self, name: str, started: float) -> SuiteResult:
        return SuiteResult(
            name, self.checks, self.failures, self.worst, self.first, time.time() - started
        )


@dataclass
class SweepValues:
    """Shared Lebesgue-constant sweep used by the numerical suites."""

    max_k: int
    grid_size: int
    refine_tolerance: float
    lam: np.ndarray
    lam2: np.ndarray


def compute_sweep(max_k: int, grid_size: int = 1 << 14, refine_tolerance: float = 1e-11) -> SweepValues:
    lam, lam2 = lebesgue_constants_sweep(max_k, grid_size=grid_size, refine_tolerance=refine_tolerance)
    return SweepValues(max_k, grid_size, refine_tolerance, lam, lam2)


def _need_sweep(sweep: Optional[SweepValues], max_k: int) -> SweepValues:
    if sweep is None or sweep.max_k < max_k:
        return compute_sweep(max_k)
    return sweep


# ---------------------------------------------------------------------------
# exact suites


def suite_recursion(max_k: int = 1 << 16) -> SuiteResult:
    """Exact non-negativity of the defect, closed forms, the shift reduction,
    and the zero-defect characterization."""
    started = time.time()
    rec = _Recorder()
    for k in range(1, max_k + 1):
        d = defect_value(k)
        rec.check(d >= 0, f"defect({k}) = {d} < 0", slack=float(d))
        u = majorant_value(k)
        rec.check(0 <= u <= k, f"majorant({k}) = {u} outside [0, {k}]")
    for n in range(0, 11):
        for m in range(1, 101):
            rec.check(closed_form_check(n, m), f"closed form fails at n={n}, m={m}")
    for k in range(1, min(max_k, 1 << 12) + 1):
        rec.check(
            defect_reduction_check(binary_expand(k)),
            f"defect shift reduction fails at k={k}",
        )
    scanned = defect_zero_indices(max_k)
    predicted = predicted_zero_defect_indices(max_k)
    rec.check(
        scanned == predicted,
        f"zero-defect sets differ; scan^predicted symmetric difference starts at "
        f"{sorted(set(scanned) ^ set(predicted))[:5]}",
    )
    return rec.result("recursion", started)


def suite_lemma3(max_k: int = 1 << 12) -> SuiteResult:
    """Exact equality of the gap-structured expansion sum with the defect,
    plus its two-term closed form and the vanishing-gap property."""
    started = time.time()
    rec = _Recorder()
    for k in range(3, max_k + 1):
        exp = binary_expand(k)
        if exp.ones < 2:
            continue
        rec.check(
            defect_expansion_sum(exp) == defect_value(k),
            f"expansion sum != defect at k={k}",
        )
    for p0 in range(0, 11):
        for p1 in range(p0 + 1, 11):
            k = (1 << p0) + (1 << p1)
            want = DyadicRational.make(((1 << (p1 - p0)) - 2) ** 2, p1 - p0)
            rec.check(
                defect_value(k) == want,
                f"two-term defect mismatch at p0={p0}, p1={p1}",
            )
    # gaps of width one contribute nothing: dropping them leaves the sum intact
    for k in (0b111, 0b1111, 0b110110, 0b101011):
        exp = binary_expand(k)
        if exp.ones >= 2:
            rec.check(
                defect_expansion_sum(exp) == defect_value(k),
                f"vanishing-gap expansion mismatch at k={k}",
            )
    return rec.result("lemma3", started)


def suite_symmetry(max_len: int = 1 << 13) -> SuiteResult:
    """Exact pair relations for every even section up to max_len.

    The relation instances of the length-2m section are exactly the index
    pairs j < m, so one pass over j < max_len/2 covers every even section;
    the per-section reports are additionally exercised on a dyadic ladder.
    """
    started = time.time()
    rec = _Recorder()
    half = max_len // 2
    angles = [explicit_leja_point(i) for i in range(2 * half)]
    for j in range(half):
        ok = (
            angles[2 * j + 1] == angles[2 * j].antipode()
            and angles[2 * j].double() == angles[j]
            and angles[2 * j + 1].double() == angles[j]
        )
        rec.check(ok, f"pair relation fails at j={j}")
    length = 2
    while length <= max_len:
        report = check_symmetry_relations(explicit_section(length))
        rec.check(report.ok, f"section length {length}: {report.describe()}")
        length *= 2
    return rec.result("symmetry", started)


# ---------------------------------------------------------------------------
# numerical suites


def suite_greedy(grid_points: int = 8192) -> SuiteResult:
    """Greedy-vs-closed-form rotation equivalence and the geometric-mean
    distance diagnostic."""
    started = time.time()
    rec = _Recorder()
    candidates = circle_grid(grid_points)
    tol = 2.0 * math.pi / grid_points
    for size in (2, 4, 8, 16):
        got = greedy_section(size, candidates, 1.0 + 0.0j)
        rho = find_rotation_match(got.points, explicit_section(size).points, angle_tol=tol)
        rec.check(
            rho is not None,
            f"greedy size {size} is not a rotation of the closed-form node set",
        )
    diag = transfinite_diameter_diagnostic(explicit_section(1024))
    final = diag[254][1]
    rec.check(
        abs(final - 1.0) < 0.05,
        f"geometric-mean diagnostic at k=255 is {final}, expected within 0.05 of 1",
        slack=0.05 - abs(final - 1.0),
    )
    worst = max(v for _, v in diag)
    rec.check(worst <= 4.0, f"diagnostic exceeded 4: {worst}", slack=4.0 - worst)
    return rec.result("greedy", started)


def suite_halving(
    max_n: int = 64,
    points: int = 1000,
    const_max_n: int = 256,
    sweep: Optional[SweepValues] = None,
) -> SuiteResult:
    """Pointwise square-the-argument identity for the quadratic Lebesgue
    function, and equality of the doubled/undoubled constants."""
    started = time.time()
    rec = _Recorder()
    rng = np.random.default_rng(_HALVING_SEED)
    for n in range(1, max_n + 1):
        z = np.exp(1j * rng.uniform(0.0, 2.0 * math.pi, points))
        lhs = LagrangeBasis(explicit_section(2 * n)).quadratic_lebesgue_function(z)
        rhs = LagrangeBasis(explicit_section(n)).quadratic_lebesgue_function(z * z)
        err = float(np.max(np.abs(lhs - rhs) / np.abs(rhs)))
        rec.check(
            err <= 1e-10,
            f"pointwise halving identity fails at n={n}: rel err {err:.3e}",
            slack=1e-10 - err,
        )
    sweep = _need_sweep(sweep, 2 * const_max_n)
    for n in range(1, const_max_n + 1):
        diff = abs(float(sweep.lam2[2 * n]) - float(sweep.lam2[n]))
        rec.check(
            diff <= 1e-8,
            f"constant halving fails at n={n}: |diff| = {diff:.3e}",
            slack=1e-8 - diff,
        )
    return rec.result("halving", started)


def suite_bounds(max_k: int = 1024, sweep: Optional[SweepValues] = None) -> SuiteResult:
    """Every bound on the constants: the sharp 2**(-p0/2)*k bound with its
    equality cases, the quadratic sqrt(2**(-p0)*k) bound, the linear 2k
    bound, the exact-majorant bridge, and the sharper mixed chain."""
    started = time.time()
    rec = _Recorder()
    sweep = _need_sweep(sweep, max_k)
    lam, lam2 = sweep.lam, sweep.lam2
    for k in range(1, max_k + 1):
        bound = lebesgue_sharp_bound(k)
        rec.check(
            lam[k] <= bound + NUM_TOL,
            f"sharp bound fails at k={k}: {lam[k]:.9f} > {bound:.9f}",
            slack=bound + NUM_TOL - lam[k],
        )
        rec.check(
            lam[k] <= 2.0 * k,
            f"linear 2k bound fails at k={k}",
            slack=2.0 * k - lam[k],
        )
        qbound = quadratic_sharp_bound(k)
        rec.check(
            lam2[k] <= qbound + NUM_TOL,
            f"quadratic bound fails at k={k}: {lam2[k]:.9f} > {qbound:.9f}",
            slack=qbound + NUM_TOL - lam2[k],
        )
        u = float(majorant_value(k))
        rec.check(
            lam2[k] ** 2 <= u + NUM_TOL,
            f"majorant bridge fails at k={k}: {lam2[k]**2:.9f} > {u:.9f}",
            slack=u + NUM_TOL - lam2[k] ** 2,
        )
        chain = math.sqrt(k * u)
        rec.check(
            lam[k] <= chain + NUM_TOL,
            f"mixed chain bound fails at k={k}",
            slack=chain + NUM_TOL - lam[k],
        )
    n = 1
    while (1 << n) - 1 <= max_k:
        k = (1 << n) - 1
        rel = abs(lam[k] - k) / k
        rec.check(
            rel <= NUM_TOL,
            f"all-ones equality fails at k={k}: rel err {rel:.3e}",
            slack=NUM_TOL - rel,
        )
        n += 1
    for k in predicted_zero_defect_indices(min(255, max_k)):
        err = abs(lam2[k] - quadratic_sharp_bound(k))
        rec.check(
            err <= NUM_TOL,
            f"quadratic equality fails at k={k}: err {err:.3e}",
            slack=NUM_TOL - err,
        )
    return rec.result("bounds", started)


def suite_sandwich(max_k: int = 1024, sweep: Optional[SweepValues] = None) -> SuiteResult:
    """Two-sided enclosure of the quadratic constant by the binary-ones
    count: sqrt(2**(s+1)-1) from below, sqrt(3*(2**(s+1)-1)) from above."""
    started = time.time()
    rec = _Recorder()
    sweep = _need_sweep(sweep, max_k)
    for k in range(1, max_k + 1):
        ones = binary_expand(k).ones
        lo = math.sqrt((1 << ones) - 1)
        hi = math.sqrt(3.0 * ((1 << ones) - 1))
        val = float(sweep.lam2[k])
        rec.check(
            val >= lo - NUM_TOL,
            f"sandwich lower side fails at k={k}: {val:.9f} < {lo:.9f}",
            slack=val - (lo - NUM_TOL),
        )
        rec.check(
            val <= hi + NUM_TOL,
            f"sandwich upper side fails at k={k}: {val:.9f} > {hi:.9f}",
            slack=hi + NUM_TOL - val,
        )
    return rec.result("sandwich", started)


# ---------------------------------------------------------------------------
# orchestration

_EXACT_DEFAULTS: Dict[str, int] = {
    "recursion": 1 << 16,
    "lemma3": 1 << 12,
    "symmetry": 1 << 13,
}


def run_suites(
    names: Sequence[str],
    max_k: Optional[int] = None,
    grid_size: int = 1 << 14,
    refine_tolerance: float = 1e-11,
) -> List[SuiteResult]:
    """Run the requested suites, sharing one sweep across the numerical ones.

    ``max_k`` overrides every suite's scan range; left unset, exact suites
    scan their full default ranges and numerical suites stop at 1024.
    """
    unknown = [n for n in names if n not in SUITE_NAMES]
    if unknown:
        raise ValueError(f"unknown suites: {unknown}; choose from {SUITE_NAMES}")
    numeric_k = max_k if max_k is not None else 1024
    sweep: Optional[SweepValues] = None
    if any(n in names for n in ("bounds", "sandwich", "halving")):
        span = numeric_k
        if "halving" in names:
            span = max(span, 2 * min(256, max(1, numeric_k // 2)))
        sweep = compute_sweep(span, grid_size=grid_size, refine_tolerance=refine_tolerance)

    results: List[SuiteResult] = []
    for name in names:
        if name == "recursion":
            results.append(suite_recursion(max_k or _EXACT_DEFAULTS["recursion"]))
        elif name == "lemma3":
            results.append(suite_lemma3(max_k or _EXACT_DEFAULTS["lemma3"]))
        elif name == "symmetry":
            results.append(suite_symmetry(max_k or _EXACT_DEFAULTS["symmetry"]))
        elif name == "greedy":
            results.append(suite_greedy())
        elif name == "halving":
            const_n = min(256, max(1, numeric_k // 2))
            results.append(suite_halving(const_max_n=const_n, sweep=sweep))
        elif name == "bounds":
            results.append(suite_bounds(numeric_k, sweep=sweep))
        elif name == "sandwich":
            results.append(suite_sandwich(numeric_k, sweep=sweep))
    return results
