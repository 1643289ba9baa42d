"""Suprema of boundary functions over the unit circle.

Both Lebesgue functions are subharmonic on the disk, so their suprema live
on the boundary circle; we sample a dense equispaced angle grid (offset by
half a step, which keeps dyadic node angles off the grid), then sharpen the
best local maxima with golden-section search.  The reported value is never
below the raw grid maximum.

For whole families of section sizes, :func:`lebesgue_constants_sweep` turns
the grid stage into two matrix products shared across all sizes, which is
orders of magnitude faster than one call per size.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

from .core import binary_expand
from .disk import explicit_leja_point, explicit_section
from .interp import LagrangeBasis, abs_lagrange_matrix

__all__ = [
    "ExtremumReport",
    "sup_on_circle",
    "lebesgue_constant",
    "quadratic_lebesgue_constant",
    "lebesgue_constants_sweep",
    "lebesgue_sharp_bound",
    "quadratic_sharp_bound",
]

DEFAULT_GRID = 1 << 17
DEFAULT_REFINE_TOL = 1e-12

_TWO_PI = 2.0 * math.pi
_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0
_INVPHI2 = (3.0 - math.sqrt(5.0)) / 2.0


@dataclass(frozen=True)
class ExtremumReport:
    """A computed boundary supremum plus the search parameters behind it."""

    value: float
    argmax_angle: float
    grid_size: int
    refine_tolerance: float
    refined: bool


def _golden_max(
    objective: Callable[[np.ndarray], np.ndarray],
    lo: np.ndarray,
    hi: np.ndarray,
    tol: float,
) -> tuple[np.ndarray, np.ndarray]:
    """Golden-section maximization run in lockstep over bracket arrays.

    Returns per-bracket (best value, best angle).  The objective must map an
    ndarray of angles to an ndarray of values.
    """
    lo = np.asarray(lo, dtype=float).copy()
    hi = np.asarray(hi, dtype=float).copy()
    span = hi - lo
    width = float(span.max())
    steps = 0
    if width > tol:
        steps = int(math.ceil(math.log(tol / width) / math.log(_INVPHI)))
    c = lo + _INVPHI2 * span
    d = lo + _INVPHI * span
    fc = np.asarray(objective(c), dtype=float)
    fd = np.asarray(objective(d), dtype=float)
    for _ in range(steps):
        left = fc > fd
        hi = np.where(left, d, hi)
        lo = np.where(left, lo, c)
        span = hi - lo
        probe = np.where(left, lo + _INVPHI2 * span, lo + _INVPHI * span)
        f_probe = np.asarray(objective(probe), dtype=float)
        # the surviving interior point switches roles; the probe fills the gap
        c_next = np.where(left, probe, d)
        fc_next = np.where(left, f_probe, fd)
        d_next = np.where(left, c, probe)
        fd_next = np.where(left, fc, f_probe)
        c, d, fc, fd = c_next, d_next, fc_next, fd_next
    take_c = fc >= fd
    return np.where(take_c, fc, fd), np.where(take_c, c, d)


def sup_on_circle(
    objective: Callable[[np.ndarray], np.ndarray],
    grid_size: int = DEFAULT_GRID,
    refine_tolerance: float = DEFAULT_REFINE_TOL,
    refine_brackets: int = 32,
    extra_angles: Optional[Sequence[float]] = None,
) -> ExtremumReport:
    """Supremum of a boundary function over the unit circle.

    Args:
        objective: vectorized map from an ndarray of angles (radians) to values.
        grid_size: number of equispaced samples, offset by half a step.
        refine_tolerance: angle tolerance of the golden-section refinement.
        refine_brackets: how many of the best grid-local maxima to refine.
        extra_angles: optional candidate angles evaluated exactly (known or
            suspected maximizers); they participate in the final max.
    """
    if grid_size < 16:
        raise ValueError(f"grid_size must be at least 16, got {grid_size}")
    if refine_tolerance <= 0.0:
        raise ValueError("refine_tolerance must be positive")
    step = _TWO_PI / grid_size
    theta = (np.arange(grid_size) + 0.5) * step
    vals = np.asarray(objective(theta), dtype=float)
    top = int(np.argmax(vals))
    grid_best = float(vals[top])
    best_val, best_ang = grid_best, float(theta[top])

    if refine_brackets > 0:
        peaks = np.flatnonzero(
            (vals >= np.roll(vals, 1)) & (vals >= np.roll(vals, -1))
        )
        if peaks.size:
            order = np.argsort(vals[peaks])
            chosen = peaks[order[-refine_brackets:]]
            ref_val, ref_ang = _golden_max(
                objective, theta[chosen] - step, theta[chosen] + step, refine_tolerance
            )
            j = int(np.argmax(ref_val))
            if float(ref_val[j]) > best_val:
                best_val, best_ang = float(ref_val[j]), float(ref_ang[j])

    if extra_angles is not None and len(extra_angles) > 0:
        cand = np.asarray(extra_angles, dtype=float)
        cand_vals = np.asarray(objective(cand), dtype=float)
        j = int(np.argmax(cand_vals))
        if float(cand_vals[j]) > best_val:
            best_val, best_ang = float(cand_vals[j]), float(cand[j])

    return ExtremumReport(
        value=best_val,
        argmax_angle=best_ang % _TWO_PI,
        grid_size=grid_size,
        refine_tolerance=refine_tolerance,
        refined=best_val > grid_best,
    )


def lebesgue_sharp_bound(k: int) -> float:
    """2**(-p0/2) * k, the sharp Lebesgue-constant bound for section size k."""
    return 2.0 ** (-binary_expand(k).valuation / 2.0) * k


def quadratic_sharp_bound(k: int) -> float:
    """sqrt(2**(-p0) * k), the sharp quadratic-constant bound."""
    return math.sqrt(2.0 ** (-binary_expand(k).valuation) * k)


def lebesgue_constant(
    k: int,
    grid_size: int = DEFAULT_GRID,
    refine_tolerance: float = DEFAULT_REFINE_TOL,
) -> ExtremumReport:
    """Supremum of the Lebesgue function of the closed-form size-k section.

    The next point of the sequence is fed in as an exact extremum candidate:
    greedy selection maximizes the nodal product there, and at the known
    equality sizes the supremum is attained exactly at that point.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    basis = LagrangeBasis(explicit_section(k))
    return sup_on_circle(
        basis.lebesgue_on_angles,
        grid_size=grid_size,
        refine_tolerance=refine_tolerance,
        extra_angles=[explicit_leja_point(k).radians],
    )


def quadratic_lebesgue_constant(
    k: int,
    grid_size: int = DEFAULT_GRID,
    refine_tolerance: float = DEFAULT_REFINE_TOL,
) -> ExtremumReport:
    """Supremum of the quadratic Lebesgue function of the size-k section."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    basis = LagrangeBasis(explicit_section(k))
    return sup_on_circle(
        basis.quadratic_on_angles,
        grid_size=grid_size,
        refine_tolerance=refine_tolerance,
        extra_angles=[explicit_leja_point(k).radians],
    )


def _merge_top(
    best_vals: np.ndarray,
    best_angs: np.ndarray,
    new_vals: np.ndarray,
    new_angs: np.ndarray,
) -> tuple[np.ndarray, np.ndarray]:
    # column-wise: keep the strongest rows out of the stacked candidates
    keep = best_vals.shape[0]
    vals = np.vstack([best_vals, new_vals])
    angs = np.vstack([best_angs, new_angs])
    sel = np.argpartition(vals, -keep, axis=0)[-keep:]
    return np.take_along_axis(vals, sel, axis=0), np.take_along_axis(angs, sel, axis=0)


def lebesgue_constants_sweep(
    max_k: int,
    grid_size: int = 1 << 14,
    refine_tolerance: float = 1e-11,
    refine_brackets: int = 16,
    block_rows: int = 4096,
) -> tuple[np.ndarray, np.ndarray]:
    """Lebesgue and quadratic Lebesgue constants for every size k <= max_k.

    One boundary grid serves all sections: with G the matrix of inverse
    point-node distances and B the per-size inverse denominator magnitudes,
    the grid values of all sweeps are G @ B scaled by running nodal products,
    i.e. two BLAS products instead of max_k separate scans.  Each size is
    then refined around its best grid peaks and evaluated at the next point
    of the sequence, which attains the known equality cases exactly.

    Returns:
        (lam, lam2): float arrays of length max_k + 1; entry [k] is the
        constant for section size k and entry [0] is NaN.
    """
    if max_k < 1:
        raise ValueError(f"max_k must be positive, got {max_k}")
    if grid_size < 16:
        raise ValueError(f"grid_size must be at least 16, got {grid_size}")
    K = max_k
    nodes = np.array([explicit_leja_point(i).to_point() for i in range(K)])

    # B[j, k] = 1 / |prod_{i<k, i!=j} (e_j - e_i)| for j < k, built incrementally
    B = np.zeros((K, K + 1))
    den = np.empty(K, dtype=complex)
    den[0] = 1.0
    B[0, 1] = 1.0
    for k in range(2, K + 1):
        new = k - 1
        den[:new] *= nodes[:new] - nodes[new]
        den[new] = np.prod(nodes[new] - nodes[:new])
        B[:k, k] = 1.0 / np.abs(den[:k])
    B2 = B * B

    step = _TWO_PI / grid_size
    lam_grid = np.full(K + 1, -np.inf)
    lam2_grid = np.full(K + 1, -np.inf)
    brackets = max(1, refine_brackets)
    cand1_v = np.full((brackets, K + 1), -np.inf)
    cand1_t = np.zeros((brackets, K + 1))
    cand2_v = np.full((brackets, K + 1), -np.inf)
    cand2_t = np.zeros((brackets, K + 1))

    for start in range(0, grid_size, block_rows):
        stop = min(start + block_rows, grid_size)
        theta = (np.arange(start, stop) + 0.5) * step
        z = np.exp(1j * theta)
        gap = np.abs(z[:, None] - nodes[None, :])
        # half-step offset keeps dyadic node angles off the grid, but a
        # non-dyadic grid size may still hit a node exactly
        hits = gap.min(axis=1) < 1e-12
        if hits.any():
            gap[hits] = 1.0
        running = np.cumprod(gap, axis=1)  # running[:, k-1] = |w_k(z)|
        inv_gap = 1.0 / gap
        v1 = (inv_gap @ B[:, 1:]) * running
        v2 = np.sqrt((inv_gap * inv_gap) @ B2[:, 1:]) * running
        if hits.any():
            v1[hits] = 1.0  # both Lebesgue functions equal 1 at a node
            v2[hits] = 1.0
        np.maximum(lam_grid[1:], v1.max(axis=0), out=lam_grid[1:])
        np.maximum(lam2_grid[1:], v2.max(axis=0), out=lam2_grid[1:])

        for v, cand_v, cand_t in ((v1, cand1_v, cand1_t), (v2, cand2_v, cand2_t)):
            up = np.empty_like(v)
            up[:-1] = v[1:]
            up[-1] = -np.inf
            dn = np.empty_like(v)
            dn[1:] = v[:-1]
            dn[0] = -np.inf
            peaked = np.where((v >= up) & (v >= dn), v, -np.inf)
            take = min(brackets, peaked.shape[0])
            sel = np.argpartition(peaked, -take, axis=0)[-take:]
            new_v = np.take_along_axis(peaked, sel, axis=0)
            new_t = theta[sel]
            merged_v, merged_t = _merge_top(cand_v[:, 1:], cand_t[:, 1:], new_v, new_t)
            cand_v[:, 1:] = merged_v
            cand_t[:, 1:] = merged_t

    lam = lam_grid.copy()
    lam2 = lam2_grid.copy()
    lam[0] = lam2[0] = np.nan

    for k in range(1, K + 1):
        nk = nodes[:k]
        iad = B[:k, k]

        def lam_obj(th, nk=nk, iad=iad):
            mat = abs_lagrange_matrix(np.exp(1j * np.asarray(th, dtype=float)), nk, iad)
            return mat.sum(axis=1)

        def lam2_obj(th, nk=nk, iad=iad):
            mat = abs_lagrange_matrix(np.exp(1j * np.asarray(th, dtype=float)), nk, iad)
            return np.sqrt((mat * mat).sum(axis=1))

        next_angle = explicit_leja_point(k).radians
        for obj, cand_v, cand_t, best in (
            (lam_obj, cand1_v, cand1_t, lam),
            (lam2_obj, cand2_v, cand2_t, lam2),
        ):
            usable = np.isfinite(cand_v[:, k])
            if usable.any():
                centers = cand_t[usable, k]
                ref_val, _ = _golden_max(
                    obj, centers - step, centers + step, refine_tolerance
                )
                best[k] = max(best[k], float(ref_val.max()))
            best[k] = max(best[k], float(obj(np.array([next_angle]))[0]))

    return lam, lam2
