"""Lagrange interpolation machinery on unit-modulus nodes.

Evaluation computes the full nodal product once per point and divides out
one factor per basis polynomial, so a batch of m points costs O(m*k) after
the O(k^2) denominator precompute.  Within 1e-8 of a node the division is
replaced by a prefix/suffix product that excludes the offending factor,
which keeps values exact at the nodes themselves.
"""

from __future__ import annotations

import numpy as np

from .core import LejaSection
from .disk import explicit_section

__all__ = ["LagrangeBasis", "halving_identity_check"]

#: switch to the cancellation-free product when a point is this close to a node
NEAR_NODE_TOL = 1e-8

# cap on rows * nodes per evaluation chunk
_CHUNK_ELEMENTS = 1 << 22


def _products_excluding_one(d: np.ndarray) -> np.ndarray:
    """Row-wise products of all entries except the own column.

    Works for float or complex input and tolerates exact zeros, unlike
    dividing the full product by each entry.
    """
    pre = np.ones_like(d)
    suf = np.ones_like(d)
    if d.shape[1] > 1:
        np.cumprod(d[:, :-1], axis=1, out=pre[:, 1:])
        suf[:, :-1] = np.cumprod(d[:, :0:-1], axis=1)[:, ::-1]
    return pre * suf


def abs_lagrange_matrix(z: np.ndarray, nodes: np.ndarray, inv_abs_den: np.ndarray) -> np.ndarray:
    """|l_j(z)| for all j as an (m, k) float matrix."""
    gap = np.abs(z[:, None] - nodes[None, :])
    near = gap.min(axis=1) < NEAR_NODE_TOL
    with np.errstate(divide="ignore", invalid="ignore"):
        out = (gap.prod(axis=1)[:, None] / gap) * inv_abs_den[None, :]
    if near.any():
        out[near] = _products_excluding_one(gap[near]) * inv_abs_den[None, :]
    return out


def complex_lagrange_matrix(z: np.ndarray, nodes: np.ndarray, inv_den: np.ndarray) -> np.ndarray:
    """l_j(z) for all j as an (m, k) complex matrix."""
    diff = z[:, None] - nodes[None, :]
    near = np.abs(diff).min(axis=1) < NEAR_NODE_TOL
    with np.errstate(divide="ignore", invalid="ignore"):
        out = (diff.prod(axis=1)[:, None] / diff) * inv_den[None, :]
    if near.any():
        out[near] = _products_excluding_one(diff[near]) * inv_den[None, :]
    return out


class LagrangeBasis:
    """Fundamental Lagrange polynomials on the nodes of a section.

    The inverse denominators 1/prod_{i != j} (e_j - e_i) are precomputed in
    straightforward product order; on unit-modulus nodes their magnitudes
    stay in double range for any section size used here.  Instances are
    immutable after construction and evaluations at distinct points are
    independent, so sharing across threads is safe.
    """

    def __init__(self, section: LejaSection):
        nodes = np.asarray(section.points, dtype=complex)
        diff = nodes[:, None] - nodes[None, :]
        np.fill_diagonal(diff, 1.0)
        den = diff.prod(axis=1)
        if np.any(den == 0.0):
            raise ValueError("nodes are not pairwise distinct")
        self.section = section
        self.nodes = nodes
        self.inv_den = 1.0 / den
        self.inv_abs_den = 1.0 / np.abs(den)

    @property
    def k(self) -> int:
        return len(self.nodes)

    def _as_batch(self, z) -> tuple[np.ndarray, bool]:
        arr = np.asarray(z, dtype=complex)
        scalar = arr.ndim == 0
        return np.atleast_1d(arr), scalar

    def _chunk_rows(self) -> int:
        return max(1, _CHUNK_ELEMENTS // max(1, self.k))

    def basis_eval(self, j: int, z):
        """Value(s) of the j-th fundamental polynomial at z."""
        if not 0 <= j < self.k:
            raise IndexError(f"basis index {j} out of range for {self.k} nodes")
        pts, scalar = self._as_batch(z)
        diff = pts[:, None] - self.nodes[None, :]
        own = diff[:, j]
        near = np.abs(own) < NEAR_NODE_TOL
        with np.errstate(divide="ignore", invalid="ignore"):
            vals = diff.prod(axis=1) / own * self.inv_den[j]
        if near.any():
            reduced = np.delete(diff[near], j, axis=1)
            vals[near] = reduced.prod(axis=1) * self.inv_den[j]
        return complex(vals[0]) if scalar else vals

    def lebesgue_function(self, z):
        """Sum of |l_j(z)|; equals 1 at every node."""
        pts, scalar = self._as_batch(z)
        out = np.empty(len(pts))
        rows = self._chunk_rows()
        for start in range(0, len(pts), rows):
            block = pts[start : start + rows]
            out[start : start + len(block)] = abs_lagrange_matrix(
                block, self.nodes, self.inv_abs_den
            ).sum(axis=1)
        return float(out[0]) if scalar else out

    def quadratic_lebesgue_function(self, z):
        """Square root of the sum of |l_j(z)|^2; equals 1 at every node."""
        pts, scalar = self._as_batch(z)
        out = np.empty(len(pts))
        rows = self._chunk_rows()
        for start in range(0, len(pts), rows):
            block = pts[start : start + rows]
            mat = abs_lagrange_matrix(block, self.nodes, self.inv_abs_den)
            out[start : start + len(block)] = np.sqrt((mat * mat).sum(axis=1))
        return float(out[0]) if scalar else out

    def lebesgue_on_angles(self, theta):
        """Lebesgue function along the boundary, theta in radians."""
        return self.lebesgue_function(np.exp(1j * np.asarray(theta, dtype=float)))

    def quadratic_on_angles(self, theta):
        """Quadratic Lebesgue function along the boundary."""
        return self.quadratic_lebesgue_function(np.exp(1j * np.asarray(theta, dtype=float)))

    def interpolate(self, samples, z):
        """Evaluate the interpolant through (node_j, samples_j) at z.

        Reproduces polynomials of degree below the node count; interpolating
        the constant 1 returns 1 at every point (partition of unity).
        """
        samples = np.asarray(samples, dtype=complex)
        if samples.shape != (self.k,):
            raise ValueError(f"need exactly {self.k} sample values, got shape {samples.shape}")
        pts, scalar = self._as_batch(z)
        out = np.empty(len(pts), dtype=complex)
        rows = self._chunk_rows()
        for start in range(0, len(pts), rows):
            block = pts[start : start + rows]
            out[start : start + len(block)] = (
                complex_lagrange_matrix(block, self.nodes, self.inv_den) @ samples
            )
        return complex(out[0]) if scalar else out


def halving_identity_check(n: int, z, rel_tol: float = 1e-10) -> bool:
    """Check that the quadratic Lebesgue function of the length-2n section at
    z matches the length-n section's value at z**2, within rel_tol."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    pts = np.atleast_1d(np.asarray(z, dtype=complex))
    doubled = LagrangeBasis(explicit_section(2 * n))
    halved = LagrangeBasis(explicit_section(n))
    lhs = doubled.quadratic_lebesgue_function(pts)
    rhs = halved.quadratic_lebesgue_function(pts * pts)
    return bool(np.allclose(lhs, rhs, rtol=rel_tol, atol=0.0))
