"""Chord lengths of fixed-length arcs of C_p.

On the Euclidean circle every arc of a given length spans a chord of the
same length; on any other C_p the chord length depends on where the arc
sits.  ``min_chord`` is the shortest chord over all placements of an arc of
a given length, and ``tangential_chord`` gives the chord as a function of
the arc's tangential angle (the angle of the arc midpoint).  By the four
reflection symmetries of C_p every chord value is attained with tangential
angle in [0, pi/4].

The two ``verify_*`` routines certify, on dense grids, the monotonicity
facts the optimality argument rests on: the minimum chord grows with arc
length on [0, pi_p], and the tangential chord profile at the worst-case
explored measure is increasing for p < 2 and decreasing for p > 2 (hence
minimized at the deployment the search actually uses).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .evacuation import worst_case_params
from .lp_geometry import (
    QUARTER_PI,
    ArcSpec,
    DomainError,
    _arc_from_zero,
    _chart,
    _point_at_arc_from_zero,
    _reduce_angle,
    chord_length,
    point_at_arc_length,
    unit_circle_point,
    validate_p,
)
from .numerics import Tolerance, maximize_1d

__all__ = [
    "Direction",
    "ChordArcSample",
    "MonotonicityReport",
    "chord_of_arc",
    "tangential_chord",
    "tangential_chord_profile",
    "min_chord",
    "verify_min_chord_monotone",
    "verify_tangential_chord_monotone",
]


class Direction(Enum):
    INCREASING = "increasing"
    DECREASING = "decreasing"


@dataclass(frozen=True)
class ChordArcSample:
    theta: float
    chord: float
    arc_len: float


@dataclass(frozen=True)
class MonotonicityReport:
    """Outcome of a grid monotonicity check; passes iff the largest
    violation stays within the declared tolerance."""

    p: float
    grid_size: int
    direction: Direction
    tol: float
    max_violation: float
    passed: bool


def chord_of_arc(p: float, arc: ArcSpec) -> float:
    """Chord length spanned by the arc: distance between its endpoints."""
    p = validate_p(p)
    total = 8.0 * _chart(p).eighth
    if not 0.0 <= arc.length < total + 1e-9:
        raise DomainError(f"arc length {arc.length} outside [0, 2*pi_p)")
    if arc.length == 0.0:
        return 0.0
    a = unit_circle_point(p, arc.start_phi)
    b = point_at_arc_length(p, arc.start_phi, min(arc.length, total))
    return chord_length(p, a.point, b.point)


def tangential_chord(p: float, theta: float, arc_len: float) -> float:
    """Chord of the arc of length ``arc_len`` whose midpoint is rho_p(theta).

    The midpoint is extended by arc_len / 2 both ways along the circle and
    the endpoint distance returned.  theta must lie in [0, pi/4] and
    arc_len in (0, 2*pi_p).
    """
    p = validate_p(p)
    if not -1e-12 <= theta <= QUARTER_PI + 1e-12:
        raise DomainError(f"tangential angle must lie in [0, pi/4], got {theta}")
    total = 8.0 * _chart(p).eighth
    if not 0.0 < arc_len < total:
        raise DomainError(f"arc length {arc_len} outside (0, 2*pi_p)")
    lam_mid = _arc_from_zero(p, _reduce_angle(theta))
    half = 0.5 * arc_len
    a = _point_at_arc_from_zero(p, lam_mid + half)
    b = _point_at_arc_from_zero(p, lam_mid - half)
    return chord_length(p, a.point, b.point)


def min_chord(p: float, u: float, n_theta: int = 512) -> float:
    """Shortest chord over all arcs of C_p of length u.

    An arc and its complement share endpoints, so u reduces to
    min(u, 2*pi_p - u); the tangential angle then sweeps [0, pi/4] on a
    dense grid and the best cell is refined by golden section.  Ties go to
    the smallest angle.
    """
    p = validate_p(p)
    total = 8.0 * _chart(p).eighth
    if not 0.0 <= u < total + 1e-9:
        raise DomainError(f"arc length {u} outside [0, 2*pi_p)")
    u_eff = min(u, total - u)
    if u_eff <= 0.0:
        return 0.0
    n = max(int(n_theta), 2)
    half = 0.5 * u_eff
    step = QUARTER_PI / n
    best_val = math.inf
    best_i = 0
    for i in range(n + 1):
        lam_mid = _arc_from_zero(p, i * step if i < n else QUARTER_PI)
        a = _point_at_arc_from_zero(p, lam_mid + half)
        b = _point_at_arc_from_zero(p, lam_mid - half)
        v = chord_length(p, a.point, b.point)
        if v < best_val:
            best_val = v
            best_i = i
    lo = (best_i - 1) * step if best_i > 0 else 0.0
    hi = (best_i + 1) * step if best_i < n else QUARTER_PI
    _, neg = maximize_1d(
        lambda th: -tangential_chord(p, th, u_eff),
        lo,
        hi,
        Tolerance(abs_tol=1e-10, rel_tol=0.0),
        n_grid=32,
    )
    return min(best_val, -neg)


def _uniform(n: int, hi: float) -> list[float]:
    step = hi / (n - 1)
    return [i * step for i in range(n - 1)] + [hi]


def tangential_chord_profile(
    p: float, arc_len: float, grid_size: int
) -> list[ChordArcSample]:
    """Sample the tangential chord on a uniform angle grid over [0, pi/4]."""
    return [
        ChordArcSample(theta, tangential_chord(p, theta, arc_len), arc_len)
        for theta in _uniform(max(int(grid_size), 2), QUARTER_PI)
    ]


def verify_min_chord_monotone(
    p: float, grid_size: int = 512, tol: float = 1e-9
) -> MonotonicityReport:
    """Certify that the minimum chord grows with arc length on [0, pi_p].

    Samples ``min_chord`` on a uniform grid and reports the largest drop
    between consecutive samples.  Certifies non-strict monotonicity up to
    floating noise only.
    """
    p = validate_p(p)
    if grid_size < 64:
        raise DomainError(f"grid must have at least 64 points, got {grid_size}")
    half_total = 4.0 * _chart(p).eighth
    values = [min_chord(p, u) for u in _uniform(grid_size, half_total)]
    worst = 0.0
    for prev, nxt in zip(values, values[1:]):
        drop = prev - nxt
        if drop > worst:
            worst = drop
    return MonotonicityReport(p, grid_size, Direction.INCREASING, tol, worst, worst <= tol)


def verify_tangential_chord_monotone(
    p: float,
    grid_size: int = 512,
    tol: float = 1e-9,
    arc_len: Optional[float] = None,
) -> MonotonicityReport:
    """Certify the monotone direction of the tangential chord profile.

    The arc length defaults to the worst-case explored measure for this p.
    Expected increasing for p < 2 and decreasing for p > 2; at p = 2 the
    profile is constant, so the report carries its full range as the
    violation (direction INCREASING by convention).
    """
    p = validate_p(p)
    if grid_size < 64:
        raise DomainError(f"grid must have at least 64 points, got {grid_size}")
    if arc_len is None:
        arc_len = worst_case_params(p).explored
    values = [s.chord for s in tangential_chord_profile(p, arc_len, grid_size)]
    if p == 2.0:
        worst = max(values) - min(values)
        direction = Direction.INCREASING
    else:
        direction = Direction.INCREASING if p < 2.0 else Direction.DECREASING
        worst = 0.0
        for prev, nxt in zip(values, values[1:]):
            viol = prev - nxt if direction is Direction.INCREASING else nxt - prev
            if viol > worst:
                worst = viol
    return MonotonicityReport(p, grid_size, direction, tol, worst, worst <= tol)
