"""Self-contained 1-D numerical kernels.

Three primitives with explicit tolerance contracts, used by every other
module of the package:

* ``integrate_adaptive``  globally adaptive Gauss-Kronrod (G7, K15) quadrature,
* ``find_root_bracketed`` Brent's method with guaranteed bisection fallback,
* ``maximize_1d``         dense grid scan refined by golden-section search.

All routines are pure functions of their inputs and hold no shared mutable
state, so they are safe to call concurrently.
"""
from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Callable

__all__ = [
    "Tolerance",
    "BracketedRoot",
    "IntegrationError",
    "BracketError",
    "DEFAULT_TOL",
    "integrate_adaptive",
    "find_root_bracketed",
    "maximize_1d",
]

_EPS = 2.220446049250313e-16


@dataclass(frozen=True)
class Tolerance:
    """Shared tolerance contract.

    abs_tol   absolute tolerance, must be > 0
    rel_tol   relative tolerance, must be >= 0
    max_iter  iteration / subdivision-depth budget, must be >= 1
    """

    abs_tol: float = 1e-10
    rel_tol: float = 1e-10
    max_iter: int = 60

    def __post_init__(self) -> None:
        if not self.abs_tol > 0.0:
            raise ValueError(f"abs_tol must be positive, got {self.abs_tol}")
        if self.rel_tol < 0.0:
            raise ValueError(f"rel_tol must be non-negative, got {self.rel_tol}")
        if self.max_iter < 1:
            raise ValueError(f"max_iter must be >= 1, got {self.max_iter}")


DEFAULT_TOL = Tolerance()


@dataclass(frozen=True)
class BracketedRoot:
    """Result of a bracketed root search.

    The root lies in [lo, hi]; ``residual`` is f(root).  The residual is
    within the requested absolute tolerance whenever termination happened on
    the residual test (steep functions may instead terminate on the bracket
    width test, see ``find_root_bracketed``).
    """

    lo: float
    hi: float
    root: float
    residual: float


class IntegrationError(RuntimeError):
    """Quadrature did not converge; carries the best estimate and bound."""

    def __init__(self, message: str, estimate: float, error_bound: float):
        super().__init__(message)
        self.estimate = estimate
        self.error_bound = error_bound


class BracketError(ValueError):
    """The supplied interval does not bracket a sign change."""


# 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1].
# Nodes are symmetric; only the non-negative abscissae are stored, the
# centre node last.  Gauss nodes sit at odd positions (and the centre).
_XGK = (
    0.991455371120813,
    0.949107912342759,
    0.864864423359769,
    0.741531185599394,
    0.586087235467691,
    0.405845151377397,
    0.207784955007898,
)
_WGK = (
    0.022935322010529,
    0.063092092629979,
    0.104790010322250,
    0.140653259715525,
    0.169004726639267,
    0.190350578064785,
    0.204432940075298,
    0.209482141084728,  # centre
)
_WG = (
    0.129484966168870,
    0.279705391489277,
    0.381830050505119,
    0.417959183673469,  # centre
)


def _gk15(f: Callable[[float], float], a: float, b: float) -> tuple[float, float]:
    """One Gauss-Kronrod panel: returns (K15 estimate, |K15 - G7|)."""
    c = 0.5 * (a + b)
    h = 0.5 * (b - a)
    fc = f(c)
    resk = _WGK[7] * fc
    resg = _WG[3] * fc
    for i in range(7):
        dx = h * _XGK[i]
        s = f(c - dx) + f(c + dx)
        resk += _WGK[i] * s
        if i % 2 == 1:
            resg += _WG[i // 2] * s
    return resk * h, abs(resk - resg) * abs(h)


def integrate_adaptive(
    f: Callable[[float], float],
    a: float,
    b: float,
    tol: Tolerance = DEFAULT_TOL,
) -> float:
    """Integrate f over [a, b] to max(abs_tol, rel_tol * |I|).

    Globally adaptive: the panel with the largest error estimate is bisected
    until the summed error estimate meets the target.  A panel may be split
    at most ``tol.max_iter`` times; exhausting that budget while the target
    is still unmet raises :class:`IntegrationError` carrying the best
    estimate and its error bound.
    """
    if not a <= b:
        raise ValueError(f"integration bounds out of order: [{a}, {b}]")
    if a == b:
        return 0.0

    est, err = _gk15(f, a, b)
    total_est = est
    total_err = err
    # heap entries: (-err, a, b, est, err, depth)
    heap = [(-err, a, b, est, err, 0)]
    while total_err > max(tol.abs_tol, tol.rel_tol * abs(total_est)):
        _, a0, b0, est0, err0, depth = heapq.heappop(heap)
        mid = 0.5 * (a0 + b0)
        if depth >= tol.max_iter or mid <= a0 or mid >= b0:
            raise IntegrationError(
                f"no convergence after {depth} subdivision levels on "
                f"[{a0}, {b0}] (estimate {total_est}, bound {total_err})",
                estimate=total_est,
                error_bound=total_err,
            )
        e1, r1 = _gk15(f, a0, mid)
        e2, r2 = _gk15(f, mid, b0)
        total_est += e1 + e2 - est0
        total_err += r1 + r2 - err0
        heapq.heappush(heap, (-r1, a0, mid, e1, r1, depth + 1))
        heapq.heappush(heap, (-r2, mid, b0, e2, r2, depth + 1))
    return total_est


def find_root_bracketed(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    tol: Tolerance = DEFAULT_TOL,
) -> BracketedRoot:
    """Find a root of f in [lo, hi] given f(lo) * f(hi) <= 0.

    Brent's method (inverse quadratic / secant steps guarded by bisection).
    Terminates when |f(x)| <= abs_tol or the bracket width drops below
    abs_tol; bisection fallback makes convergence unconditional.
    """
    if not lo <= hi:
        raise ValueError(f"bracket out of order: [{lo}, {hi}]")
    fa = f(lo)
    fb = f(hi)
    if fa == 0.0:
        return BracketedRoot(lo, lo, lo, 0.0)
    if fb == 0.0:
        return BracketedRoot(hi, hi, hi, 0.0)
    if (fa > 0.0) == (fb > 0.0):
        raise BracketError(f"no sign change on [{lo}, {hi}]: f={fa}, {fb}")

    a, b, c = lo, hi, lo
    fc = fa
    d = e = b - a
    for _ in range(max(tol.max_iter, 100) * 4):
        if abs(fc) < abs(fb):
            a, b, c = b, c, b
            fa, fb, fc = fb, fc, fb
        tol1 = 2.0 * _EPS * abs(b) + 0.5 * tol.abs_tol
        mid = 0.5 * (c - b)
        if fb == 0.0 or abs(fb) <= tol.abs_tol or abs(mid) <= tol1:
            break
        if abs(e) < tol1 or abs(fa) <= abs(fb):
            d = e = mid
        else:
            s = fb / fa
            if a == c:
                p = 2.0 * mid * s
                q = 1.0 - s
            else:
                q = fa / fc
                r = fb / fc
                p = s * (2.0 * mid * q * (q - r) - (b - a) * (r - 1.0))
                q = (q - 1.0) * (r - 1.0) * (s - 1.0)
            if p > 0.0:
                q = -q
            else:
                p = -p
            s = e
            e = d
            if 2.0 * p < 3.0 * mid * q - abs(tol1 * q) and p < abs(0.5 * s * q):
                d = p / q
            else:
                d = e = mid
        a, fa = b, fb
        if abs(d) > tol1:
            b += d
        elif mid > 0.0:
            b += tol1
        else:
            b -= tol1
        fb = f(b)
        if (fb > 0.0) == (fc > 0.0):
            c, fc = a, fa
            d = e = b - a
    blo, bhi = (b, c) if b <= c else (c, b)
    return BracketedRoot(blo, bhi, b, fb)


_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


def maximize_1d(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    tol: Tolerance = DEFAULT_TOL,
    n_grid: int = 4096,
) -> tuple[float, float]:
    """Maximize f on [lo, hi]: dense grid scan plus golden-section refinement.

    Returns (x*, f(x*)) with f(x*) >= the maximum over the initial grid; the
    global maximum is guaranteed only up to the grid resolution.
    """
    if not lo <= hi:
        raise ValueError(f"bounds out of order: [{lo}, {hi}]")
    if lo == hi:
        return lo, f(lo)
    n = max(int(n_grid), 2)
    step = (hi - lo) / n
    xs = [lo + i * step for i in range(n)] + [hi]
    vals = [f(x) for x in xs]
    ibest = max(range(n + 1), key=vals.__getitem__)
    gx, gv = xs[ibest], vals[ibest]

    a = xs[ibest - 1] if ibest > 0 else lo
    b = xs[ibest + 1] if ibest < n else hi
    x1 = b - _INV_PHI * (b - a)
    x2 = a + _INV_PHI * (b - a)
    f1, f2 = f(x1), f(x2)
    iters = 0
    while (b - a) > tol.abs_tol and iters < 200:
        if f1 < f2:
            a, x1, f1 = x1, x2, f2
            x2 = a + _INV_PHI * (b - a)
            f2 = f(x2)
        else:
            b, x2, f2 = x2, x1, f1
            x1 = b - _INV_PHI * (b - a)
            f1 = f(x1)
        iters += 1
    best_x, best_v = gx, gv
    for x, v in ((x1, f1), (x2, f2)):
        if v > best_v:
            best_x, best_v = x, v
    return best_x, best_v
