"""Frenet apparatus: frames, curvature, torsion, arc length, reparameterization.

All formulas here are the general parameter ones, valid for any regular
parameterization:

    T = a' / |a'|
    B = (a' x a'') / |a' x a''|
    N = B x T
    kappa = |a' x a''| / |a'|^3
    tau   = det(a', a'', a''') / |a' x a''|^2

Arc length integrates the speed with adaptive Simpson quadrature, and the
unit speed reparameterization inverts the cumulative arc length map with a
bracketed Newton iteration. The reparameterized curve differentiates through
the chain rule, so its derivatives are as exact as the base curve's.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .curves import ParamCurve
from .errors import DegenerateFrame, InputError, InvalidField, ZeroSpeed
from .tolerances import DEFAULT_TOLERANCES, Tolerances


@dataclass(frozen=True)
class FrenetFrame:
    """Orthonormal frame with curvature data at one parameter value."""

    T: np.ndarray
    N: np.ndarray
    B: np.ndarray
    kappa: float
    tau: float
    speed: float


def _frame_pieces(curve, t, tol):
    """Shared derivative plumbing for frame_at and curvature_torsion."""
    d1 = curve.eval(t, 1)
    d2 = curve.eval(t, 2)
    d3 = curve.eval(t, 3)
    speed = float(np.linalg.norm(d1))
    if speed <= tol.speed_tol:
        raise ZeroSpeed(f"speed {speed:.3e} at t={t} is below the degeneracy threshold")
    cross = np.cross(d1, d2)
    cross_norm = float(np.linalg.norm(cross))
    if cross_norm <= tol.speed_tol:
        raise DegenerateFrame(
            f"|a' x a''| = {cross_norm:.3e} at t={t}; velocity and acceleration are parallel"
        )
    kappa = cross_norm / speed**3
    tau = float(np.dot(cross, d3)) / cross_norm**2
    return d1, cross, speed, cross_norm, kappa, tau


def curvature_torsion(curve, t, tol: Tolerances | None = None) -> tuple[float, float]:
    """Curvature and torsion at ``t`` for an arbitrary regular parameterization."""
    tol = tol or DEFAULT_TOLERANCES
    _, _, _, _, kappa, tau = _frame_pieces(curve, t, tol)
    return kappa, tau


def frame_at(curve, t, tol: Tolerances | None = None) -> FrenetFrame:
    """Frenet frame at ``t``.

    The binormal comes from the velocity cross acceleration and the normal
    is defined as B x T, which keeps the triple right handed by
    construction. Raises ZeroSpeed or DegenerateFrame when the frame does
    not exist.
    """
    tol = tol or DEFAULT_TOLERANCES
    d1, cross, speed, cross_norm, kappa, tau = _frame_pieces(curve, t, tol)
    T = d1 / speed
    B = cross / cross_norm
    N = np.cross(B, T)
    return FrenetFrame(T=T, N=N, B=B, kappa=kappa, tau=tau, speed=speed)


def _adaptive_simpson(f, a, b, tol):
    """Adaptive Simpson quadrature, interval bisection on the local estimate.

    Accepts a panel when the halved estimate moves by less than 15 * tol and
    applies the standard Richardson correction, so the returned value is one
    order better than plain Simpson.
    """
    if b <= a:
        return 0.0
    fa, fm, fb = f(a), f(0.5 * (a + b)), f(b)
    whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    total = 0.0
    floor = (b - a) * 1e-14
    stack = [(a, b, fa, fm, fb, whole, tol, 0)]
    while stack:
        x0, x2, f0, f1, f2, s_whole, loc_tol, depth = stack.pop()
        xm = 0.5 * (x0 + x2)
        xl = 0.5 * (x0 + xm)
        xr = 0.5 * (xm + x2)
        fl = f(xl)
        fr = f(xr)
        s_left = (xm - x0) / 6.0 * (f0 + 4.0 * fl + f1)
        s_right = (x2 - xm) / 6.0 * (f1 + 4.0 * fr + f2)
        diff = s_left + s_right - s_whole
        if abs(diff) < 15.0 * loc_tol or depth >= 48 or (x2 - x0) <= floor:
            total += s_left + s_right + diff / 15.0
        else:
            stack.append((x0, xm, f0, fl, f1, s_left, 0.5 * loc_tol, depth + 1))
            stack.append((xm, x2, f1, fr, f2, s_right, 0.5 * loc_tol, depth + 1))
    return total


def arc_length(curve, t0, t1, quad_tol: float = 1e-11) -> float:
    """Arc length of the curve between t0 and t1 (t0 <= t1 required)."""
    t0 = float(t0)
    t1 = float(t1)
    lo, hi = curve.domain
    slack = 1e-12 * max(1.0, hi - lo)
    for t in (t0, t1):
        if not math.isfinite(t) or t < lo - slack or t > hi + slack:
            from .errors import OutOfDomain

            raise OutOfDomain(t, lo, hi)
    if t0 > t1:
        raise InputError(f"arc_length needs t0 <= t1, got t0={t0}, t1={t1}")

    def speed(t):
        return float(np.linalg.norm(curve.eval(t, 1)))

    return _adaptive_simpson(speed, max(t0, lo), min(t1, hi), quad_tol)


class ArcLengthMap:
    """Cumulative arc length of a curve and its inverse.

    A uniform table of grid_size nodes brackets queries; forward(t) adds an
    adaptive Simpson integral from the nearest node below, and inverse(s)
    runs a bracketed Newton iteration against forward. Both directions are
    cached, deterministic, and accurate to roughly 1e-12 in absolute terms,
    which keeps finite differences taken through this map well behaved.
    """

    # Tight local tolerance: node spacing is small, so panels converge at once.
    _QUAD_TOL = 1e-12

    def __init__(self, curve: ParamCurve, grid_size: int = 512, tol: Tolerances | None = None):
        tol = tol or DEFAULT_TOLERANCES
        grid_size = int(grid_size)
        if grid_size < 2:
            raise InvalidField(f"grid_size must be at least 2, got {grid_size}")
        self._curve = curve
        self._tol = tol
        ts = np.linspace(curve.t_lo, curve.t_hi, grid_size)
        for t in ts:
            if float(np.linalg.norm(curve.eval(t, 1))) <= tol.speed_tol:
                raise ZeroSpeed(f"speed vanishes near t={t}; arc length map is not invertible")
        seg = np.empty(grid_size - 1)
        for i in range(grid_size - 1):
            seg[i] = _adaptive_simpson(self._speed, ts[i], ts[i + 1], self._QUAD_TOL)
        if np.any(seg <= 0):
            raise ZeroSpeed("arc length table is not strictly increasing")
        self._ts = ts
        self._cum = np.concatenate([[0.0], np.cumsum(seg)])
        self._forward_cached = lru_cache(maxsize=65536)(self._forward_impl)
        self._inverse_cached = lru_cache(maxsize=65536)(self._inverse_impl)

    def _speed(self, t):
        return float(np.linalg.norm(self._curve.eval(t, 1)))

    @property
    def curve(self) -> ParamCurve:
        return self._curve

    @property
    def grid_size(self) -> int:
        return len(self._ts)

    @property
    def total_length(self) -> float:
        return float(self._cum[-1])

    def forward(self, t: float) -> float:
        """Arc length from the domain start to parameter t."""
        lo, hi = self._curve.domain
        t = min(max(float(t), lo), hi)
        return self._forward_cached(t)

    def _forward_impl(self, t: float) -> float:
        k = int(np.searchsorted(self._ts, t, side="right")) - 1
        k = min(max(k, 0), len(self._ts) - 2)
        if t <= self._ts[k]:
            return float(self._cum[k])
        return float(self._cum[k]) + _adaptive_simpson(self._speed, self._ts[k], t, self._QUAD_TOL)

    def inverse(self, s: float) -> float:
        """Parameter t with forward(t) = s, clamping s into [0, total_length]."""
        s = min(max(float(s), 0.0), self.total_length)
        return self._inverse_cached(s)

    def _inverse_impl(self, s: float) -> float:
        cum = self._cum
        ts = self._ts
        k = int(np.searchsorted(cum, s, side="right")) - 1
        k = min(max(k, 0), len(ts) - 2)
        lo_b, hi_b = float(ts[k]), float(ts[k + 1])
        width = cum[k + 1] - cum[k]
        frac = (s - cum[k]) / width if width > 0 else 0.5
        t = lo_b + frac * (hi_b - lo_b)
        step_tol = 1e-14 * max(1.0, self._curve.span)
        for _ in range(12):
            resid = self.forward(t) - s
            if resid > 0:
                hi_b = t
            else:
                lo_b = t
            v = self._speed(t)
            t_new = t - resid / v
            if not (lo_b <= t_new <= hi_b):
                t_new = 0.5 * (lo_b + hi_b)
            if abs(t_new - t) <= step_tol:
                t = t_new
                break
            t = t_new
        return float(min(max(t, self._curve.t_lo), self._curve.t_hi))


class ReparamCurve(ParamCurve):
    """Unit speed reparameterization of a regular base curve.

    The parameter is arc length s in [0, L]. Positions come from the base
    curve at t = inverse(s); derivatives apply the chain rule with the exact
    derivatives of the inverse map (dt/ds = 1/v and its derivatives), so no
    finite differencing is involved and the speed is exactly 1 by
    construction.
    """

    kind = "arclength_reparam"

    def __init__(self, base: ParamCurve, length_map: ArcLengthMap, tol: Tolerances | None = None):
        super().__init__(0.0, length_map.total_length, base.fd_step)
        self._base = base
        self._map = length_map
        self._tol = tol or DEFAULT_TOLERANCES

    @property
    def base(self) -> ParamCurve:
        return self._base

    @property
    def length_map(self) -> ArcLengthMap:
        return self._map

    def _evaluate(self, s: float, order: int) -> np.ndarray:
        t = self._map.inverse(s)
        if order == 0:
            return self._base.eval(t, 0)
        b1 = self._base.eval(t, 1)
        v = float(np.linalg.norm(b1))
        if v <= self._tol.speed_tol:
            raise ZeroSpeed(f"base speed vanishes at t={t}")
        t1 = 1.0 / v
        if order == 1:
            return b1 * t1
        b2 = self._base.eval(t, 2)
        vdot = float(np.dot(b1, b2)) / v
        t2 = -vdot / v**3
        if order == 2:
            return b2 * (t1 * t1) + b1 * t2
        b3 = self._base.eval(t, 3)
        vddot = (float(np.dot(b2, b2)) + float(np.dot(b1, b3))) / v - vdot * vdot / v
        t3 = (3.0 * vdot * vdot - v * vddot) / v**5
        return b3 * t1**3 + 3.0 * b2 * t1 * t2 + b1 * t3


def reparam_by_arclength(curve, grid_size: int = 512, tol: Tolerances | None = None) -> ReparamCurve:
    """Arc length reparameterization of a regular curve.

    Raises ZeroSpeed when the speed falls to the degeneracy threshold
    anywhere on the sampling grid.
    """
    tol = tol or DEFAULT_TOLERANCES
    return ReparamCurve(curve, ArcLengthMap(curve, grid_size=grid_size, tol=tol), tol=tol)
