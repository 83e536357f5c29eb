"""Two-robot wireless evacuation from the l_p unit disk.

Both robots walk from the origin to the deployment point on C_p (one time
unit), then search the perimeter in opposite directions at unit speed; the
moment one robot finds the exit the other cuts straight across.  With
``tau`` the parallel search time, the evacuation time is

    1 + tau + (distance between the robots at time tau)

and the adversary places the exit to maximize it.  The two deployments
worth analyzing are the axis point rho_p(0) and the diagonal point
rho_p(pi/4); the axis deployment is optimal for p <= 2 and the diagonal
one for p >= 2.  This module provides the simulation, the closed-form
worst case with its critical quantities, an independent grid oracle, and
the per-deployment cost curves in the chart coordinate.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .lp_geometry import (
    QUARTER_PI,
    CirclePoint,
    DomainError,
    Point2,
    _arc_from_zero,
    _chart,
    _fold_limit,
    _point_at_arc_from_zero,
    _quarter_arc_integral,
    _reduce_angle,
    _ypow,
    chord_length,
    half_perimeter,
    lp_norm,
    validate_p,
)
from .numerics import Tolerance, find_root_bracketed, maximize_1d

__all__ = [
    "Branch",
    "CostPiece",
    "AlgoParams",
    "EvacOutcome",
    "CriticalParams",
    "robot_positions",
    "separation",
    "evac_time",
    "simulate_exit",
    "aux_root_equation",
    "worst_case_params",
    "worst_case_cost",
    "worst_case_grid_oracle",
    "evac_cost_curve",
]

_ROOT_TOL = Tolerance(abs_tol=1e-13, rel_tol=0.0, max_iter=200)


class Branch(Enum):
    """Canonical deployment: on the x axis (phi = 0) or the diagonal (phi = pi/4)."""

    AXIS = "axis"
    DIAGONAL = "diagonal"


class CostPiece(Enum):
    """Which deployment cost curve to evaluate, by deployment and region."""

    AXIS = "axis"  # phi = 0, exit in the second quadrant, s in [0, 1]
    DIAG_Q2 = "diag_q2"  # phi = pi/4, exit in the second quadrant, s in [X, 1]
    DIAG_Q3 = "diag_q3"  # phi = pi/4, exit in the third quadrant, s in [-1, -X]


@dataclass(frozen=True)
class AlgoParams:
    """Search parameters: the norm p and the deployment angle phi in [0, pi/4]."""

    p: float
    phi: float = 0.0

    def __post_init__(self) -> None:
        validate_p(self.p)
        if not -1e-12 <= self.phi <= QUARTER_PI + 1e-12:
            raise DomainError(
                f"deployment angle must lie in [0, pi/4], got {self.phi}"
            )


@dataclass(frozen=True)
class EvacOutcome:
    """Result of one simulated exit placement."""

    exit: CirclePoint
    tau: float
    finder_positions: tuple[Point2, Point2]
    separation: float
    total_cost: float


@dataclass(frozen=True)
class CriticalParams:
    """Worst-case exit data for the optimal deployment at this p.

    aux_root    root of w^p + 1 = 2(1 - w)^p, present on the diagonal branch
    exit_coord  chart coordinate of the worst-case exit
    explored    arc measure searched when that exit is found (in (pi_p, 2*pi_p])
    separation  distance between the robots at that moment

    For p = 1 and p = inf the worst case is a cost-5 plateau; the values
    reported are the limits from inside (1, inf), not plateau-unique data.
    """

    p: float
    branch: Branch
    aux_root: Optional[float]
    exit_coord: float
    explored: float
    separation: float


def _total(p: float) -> float:
    return 8.0 * _chart(p).eighth


def robot_positions(params: AlgoParams, tau: float) -> tuple[Point2, Point2]:
    """Positions after parallel search time tau in [0, pi_p].

    First the counter-clockwise robot, then the clockwise one; for the two
    canonical deployments they are mutual reflections (across y=0 for the
    axis, across y=x for the diagonal).
    """
    half = 0.5 * _total(params.p)
    if not -1e-9 <= tau <= half + 1e-9:
        raise DomainError(f"search time {tau} outside [0, {half}]")
    lam0 = _arc_from_zero(params.p, _reduce_angle(params.phi))
    ccw = _point_at_arc_from_zero(params.p, lam0 + tau)
    cw = _point_at_arc_from_zero(params.p, lam0 - tau)
    return ccw.point, cw.point


def separation(params: AlgoParams, tau: float) -> float:
    """Distance between the robots at search time tau.

    Equals 2|y| of the counter-clockwise robot for phi = 0 and
    2^(1/p) |x - y| for phi = pi/4.
    """
    a, b = robot_positions(params, tau)
    return chord_length(params.p, a, b)


def evac_time(params: AlgoParams, tau: float) -> float:
    """Evacuation time if the exit is reported at search time tau."""
    return 1.0 + tau + separation(params, tau)


def simulate_exit(params: AlgoParams, exit: CirclePoint) -> EvacOutcome:
    """Run the search against one exit placement and report the outcome."""
    if abs(lp_norm(params.p, exit.point) - 1.0) > 1e-6:
        raise DomainError(f"exit {exit.point} does not lie on the unit circle")
    total = _total(params.p)
    lam0 = _arc_from_zero(params.p, _reduce_angle(params.phi))
    lam_exit = _arc_from_zero(params.p, _reduce_angle(exit.phi))
    ccw = math.fmod(lam_exit - lam0, total)
    if ccw < 0.0:
        ccw += total
    tau = min(ccw, total - ccw)
    positions = robot_positions(params, tau)
    sep = chord_length(params.p, *positions)
    return EvacOutcome(
        exit=exit,
        tau=tau,
        finder_positions=positions,
        separation=sep,
        total_cost=1.0 + tau + sep,
    )


def aux_root_equation(p: float, w: float) -> float:
    """w^p + 1 - 2(1 - w)^p, whose unique root in (0, 1) locates the
    diagonal-branch critical exit."""
    return w**p + 1.0 - 2.0 * (1.0 - w) ** p


def _axis_branch(p: float) -> tuple[Optional[float], float, float, float]:
    # Critical data for deployment phi = 0, valid for p in (1, 2].
    s = ((2.0**p - 1.0) ** (1.0 / (p - 1.0)) + 1.0) ** (-1.0 / p)
    explored = half_perimeter(p) + 2.0 * _quarter_arc_integral(p, s)
    sep = 2.0 * _ypow(p, s)
    return None, s, explored, sep


def _diagonal_branch(p: float) -> tuple[Optional[float], float, float, float]:
    # Critical data for deployment phi = pi/4, valid for p in [2, inf).
    w = find_root_bracketed(
        lambda w: aux_root_equation(p, w), 0.0, 1.0, _ROOT_TOL
    ).root
    wq = w ** (p / (p - 1.0))
    s = (wq + 1.0) ** (-1.0 / p)
    # (1 - s^p)^(1/p) computed from the exact value s^p = 1 / (1 + wq)
    s_dual = (wq / (1.0 + wq)) ** (1.0 / p)
    pi_p = half_perimeter(p)
    explored = 1.5 * pi_p - 2.0 * _quarter_arc_integral(p, s_dual)
    sep = 2.0 ** (1.0 / p) * (s_dual + s)
    return w, s, explored, sep


def worst_case_params(p: float, branch: Optional[Branch] = None) -> CriticalParams:
    """Critical quantities of the worst-case exit.

    The branch defaults to the optimal deployment for this p (axis for
    p <= 2, diagonal for p > 2); forcing a branch is allowed only where its
    closed form is valid (axis for p <= 2, diagonal for p >= 2, both at 2).
    """
    p = validate_p(p)
    if p == 1.0:
        return CriticalParams(p, Branch.AXIS, None, 0.2, 4.8, 1.6)
    if math.isinf(p):
        return CriticalParams(p, Branch.DIAGONAL, None, 1.0, 4.0, 2.0)
    if branch is None:
        branch = Branch.AXIS if p <= 2.0 else Branch.DIAGONAL
    if branch is Branch.AXIS:
        if p > 2.0:
            raise DomainError("axis branch closed forms require p <= 2")
        w, s, explored, sep = _axis_branch(p)
    else:
        if p < 2.0:
            raise DomainError("diagonal branch closed forms require p >= 2")
        w, s, explored, sep = _diagonal_branch(p)
    return CriticalParams(p, branch, w, s, explored, sep)


def worst_case_cost(p: float) -> float:
    """Worst-case evacuation cost of the optimal-deployment search at this p.

    Exactly 5 for p = 1 and p = inf.  On the diagonal branch the interior
    critical point may be a saddle, in which case the worst case sits at the
    end of the search; taking the max of the two candidates covers both.
    """
    p = validate_p(p)
    if p == 1.0 or math.isinf(p):
        return 5.0
    cp = worst_case_params(p)
    cost = 1.0 + 0.5 * cp.explored + cp.separation
    if p > 2.0:
        cost = max(cost, 1.0 + half_perimeter(p))
    return cost


def worst_case_grid_oracle(params: AlgoParams, n_grid: int = 4096) -> tuple[float, float]:
    """Independent check of the closed-form worst case: scan the evacuation
    time over a uniform tau grid on [0, pi_p] and refine the best cell.

    Returns (tau*, cost*).  Used in tests against :func:`worst_case_cost`.
    """
    if n_grid < 64:
        raise DomainError(f"oracle grid must have at least 64 points, got {n_grid}")
    half = 0.5 * _total(params.p)
    f = lambda tau: evac_time(params, tau)
    step = half / n_grid
    taus = [i * step for i in range(n_grid)] + [half]
    vals = [f(t) for t in taus]
    ibest = max(range(n_grid + 1), key=vals.__getitem__)
    lo = taus[ibest - 1] if ibest > 0 else 0.0
    hi = taus[ibest + 1] if ibest < n_grid else half
    x, v = maximize_1d(f, lo, hi, Tolerance(abs_tol=1e-10, rel_tol=0.0), n_grid=64)
    if vals[ibest] > v:
        return taus[ibest], vals[ibest]
    return x, v


def evac_cost_curve(p: float, s: float, piece: CostPiece) -> float:
    """Evacuation cost as a function of the finder's chart coordinate.

    AXIS      deployment phi = 0, finder at (-s, (1-s^p)^(1/p)), s in [0, 1]
    DIAG_Q2   deployment phi = pi/4, same chart, s in [2^(-1/p), 1]
    DIAG_Q3   deployment phi = pi/4, finder past (-1, 0), s in [-1, -2^(-1/p)]

    The worst case of the optimal deployment is the maximum of the matching
    curve; DIAG_Q3 has no interior critical point.
    """
    p = validate_p(p)
    if p <= 1.0 or math.isinf(p):
        raise DomainError("cost curves require finite p > 1")
    fold = _fold_limit(p)
    pi_p = half_perimeter(p)
    if piece is CostPiece.AXIS:
        if not 0.0 <= s <= 1.0:
            raise DomainError(f"axis curve needs s in [0, 1], got {s}")
        y = _ypow(p, s)
        if s <= fold:
            searched = _quarter_arc_integral(p, s)
        else:
            searched = 0.5 * pi_p - _quarter_arc_integral(p, y)
        return 1.0 + 0.5 * pi_p + searched + 2.0 * y
    if piece is CostPiece.DIAG_Q2:
        if not fold - 1e-12 <= s <= 1.0:
            raise DomainError(f"diagonal Q2 curve needs s in [{fold}, 1], got {s}")
        y = _ypow(p, s)
        searched = 0.25 * pi_p - _quarter_arc_integral(p, y)
        return 1.0 + 0.5 * pi_p + searched + 2.0 ** (1.0 / p) * (y + s)
    if piece is CostPiece.DIAG_Q3:
        if not -1.0 <= s <= -fold + 1e-12:
            raise DomainError(f"diagonal Q3 curve needs s in [-1, {-fold}], got {s}")
        y = _ypow(p, s)
        searched = _quarter_arc_integral(p, y)
        return 1.0 + 0.75 * pi_p + searched - 2.0 ** (1.0 / p) * (y + s)
    raise DomainError(f"unknown cost piece {piece!r}")
