"""Greedy node selection on a discretized compact set.

Each step appends the candidate maximizing the product of distances to the
existing nodes.  Products are evaluated as sums of logs so sections of
hundreds of nodes stay in floating range, and ties break to the lowest
candidate index for reproducibility.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np

from .core import LejaSection

__all__ = [
    "DiscretizedCompact",
    "circle_grid",
    "greedy_extend",
    "greedy_section",
    "transfinite_diameter_diagnostic",
    "find_rotation_match",
]

#: candidates closer than this to an existing node are treated as taken
NODE_SKIP_TOL = 1e-14


@dataclass(frozen=True, eq=False)
class DiscretizedCompact:
    """A finite point cloud standing in for a compact set.

    Args:
        points: candidate coordinates (at least 2 distinct points).
        label: free-form description used in diagnostics.
    """

    points: np.ndarray
    label: str = ""

    def __post_init__(self) -> None:
        pts = np.asarray(self.points, dtype=complex)
        if pts.ndim != 1 or pts.size < 2:
            raise ValueError("need at least two candidate points")
        if np.abs(pts - pts[0]).max() == 0.0:
            raise ValueError("candidates collapse to a single point")
        pts.setflags(write=False)
        object.__setattr__(self, "points", pts)

    def __len__(self) -> int:
        return len(self.points)


def circle_grid(n: int = 8192, label: Optional[str] = None) -> DiscretizedCompact:
    """n equispaced candidates on the unit circle, starting at 1."""
    if n < 2:
        raise ValueError(f"need at least two grid points, got {n}")
    pts = np.exp(2j * np.pi * np.arange(n) / n)
    return DiscretizedCompact(pts, label or f"circle[{n}]")


def greedy_extend(section: LejaSection, candidates: DiscretizedCompact) -> LejaSection:
    """Append the candidate with the largest distance product to the section.

    Candidates within 1e-14 of an existing node are skipped (their log
    distance is -inf); among equal maximizers the lowest index wins.

    Raises:
        ValueError: if every candidate coincides with an existing node.
    """
    nodes = section.points
    cand = candidates.points
    gap = np.abs(cand[:, None] - nodes[None, :])
    taken = gap.min(axis=1) < NODE_SKIP_TOL
    if taken.all():
        raise ValueError("every candidate coincides with an existing node")
    with np.errstate(divide="ignore"):
        score = np.where(taken, -np.inf, np.log(gap).sum(axis=1))
    best = int(np.argmax(score))  # argmax returns the first, i.e. lowest index
    return LejaSection.from_points(np.append(nodes, cand[best]), origin_tag="greedy")


def greedy_section(k: int, candidates: DiscretizedCompact, seed: complex) -> LejaSection:
    """Grow a length-k section from ``seed`` by k-1 greedy extensions.

    Args:
        k: target section length (>= 1).
        candidates: discretized compact to select from.
        seed: starting node; must belong to the candidate set.
    """
    if k < 1:
        raise ValueError(f"section length must be positive, got {k}")
    if np.abs(candidates.points - seed).min() > 1e-12:
        raise ValueError("seed does not belong to the candidate set")
    section = LejaSection.from_points(np.array([seed]), origin_tag="greedy")
    for _ in range(k - 1):
        section = greedy_extend(section, candidates)
    return section


def transfinite_diameter_diagnostic(section: LejaSection) -> List[Tuple[int, float]]:
    """Geometric-mean distance growth (prod_{j<k} |e_k - e_j|)**(1/k) per k.

    For sections filling the unit circle the values drift toward 1, the
    logarithmic capacity of the disk.
    """
    pts = section.points
    if len(pts) < 2:
        raise ValueError("need a section of length at least 2")
    out = []
    for k in range(1, len(pts)):
        mean_log = float(np.mean(np.log(np.abs(pts[k] - pts[:k]))))
        out.append((k, float(np.exp(mean_log))))
    return out


def find_rotation_match(
    points_a: np.ndarray, points_b: np.ndarray, angle_tol: float
) -> Optional[complex]:
    """A unit factor rho with {points_a} == rho * {points_b} as sets, or None.

    Matching is within ``angle_tol`` radians along the circle and assumes the
    tolerance is below half the minimal spacing of either set, so the
    candidate pairing is unambiguous.
    """
    a = np.asarray(points_a, dtype=complex)
    b = np.asarray(points_b, dtype=complex)
    if a.shape != b.shape or a.ndim != 1:
        return None
    chord_tol = 2.0 * np.sin(min(angle_tol, np.pi) / 2.0) + 1e-15
    for ref in b:
        rho = a[0] / ref
        rotated = rho * b
        gap = np.abs(a[:, None] - rotated[None, :])
        within = gap <= chord_tol
        if np.all(within.sum(axis=1) == 1) and np.all(within.sum(axis=0) == 1):
            return complex(rho)
    return None
