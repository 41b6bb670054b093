"""Space curve representations with derivative evaluation.

Every curve maps a scalar parameter from a closed interval into three
dimensional Euclidean space and exposes derivatives up to order 3 through a
single ``eval(t, order)`` entry point. Analytic kinds (polynomial
components, circular helix) differentiate exactly. A polyline carries no
smooth structure of its own, so it is interpolated once by a natural cubic
spline and the spline is differentiated. Curves defined only through
positions fall back to second order central differences, with the stencil
shifted to a one sided form near the domain ends.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np
from numpy.polynomial import polynomial as npoly
from scipy.interpolate import CubicSpline

from .errors import InvalidField, OutOfDomain, UnsupportedOrder
from .tolerances import DEFAULT_TOLERANCES, Tolerances

MAX_DERIVATIVE_ORDER = 3

#: Convention marker: points and derivatives are float64 arrays of shape (3,).
Vec3 = np.ndarray


def as_vec3(value, field: str = "vector") -> np.ndarray:
    """Coerce to a finite float64 vector of shape (3,), or raise InvalidField."""
    arr = np.asarray(value, dtype=float)
    if arr.shape != (3,):
        raise InvalidField(f"{field} must have exactly three components, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise InvalidField(f"{field} must be finite, got {arr.tolist()}")
    return arr


class ParamCurve:
    """A curve over a closed parameter interval.

    Subclasses either implement ``_evaluate(t, order)`` for all orders 0..3
    or implement ``_position(t)`` alone and inherit the finite difference
    derivative path. Instances are immutable after construction and safe to
    evaluate concurrently; results do not depend on evaluation order.
    """

    kind: str = "opaque"

    def __init__(self, t_lo: float, t_hi: float, fd_step: float | None = None):
        t_lo = float(t_lo)
        t_hi = float(t_hi)
        if not (math.isfinite(t_lo) and math.isfinite(t_hi)):
            raise InvalidField(f"domain endpoints must be finite, got [{t_lo}, {t_hi}]")
        if not t_lo < t_hi:
            raise InvalidField(f"domain [{t_lo}, {t_hi}] is empty")
        self._t_lo = t_lo
        self._t_hi = t_hi
        if fd_step is None:
            fd_step = DEFAULT_TOLERANCES.fd_step * (t_hi - t_lo)
        fd_step = float(fd_step)
        if not (math.isfinite(fd_step) and fd_step > 0):
            raise InvalidField(f"fd_step must be strictly positive, got {fd_step}")
        self._fd_step = fd_step

    @property
    def t_lo(self) -> float:
        return self._t_lo

    @property
    def t_hi(self) -> float:
        return self._t_hi

    @property
    def domain(self) -> tuple[float, float]:
        return (self._t_lo, self._t_hi)

    @property
    def span(self) -> float:
        return self._t_hi - self._t_lo

    @property
    def fd_step(self) -> float:
        return self._fd_step

    def eval(self, t: float, order: int = 0) -> np.ndarray:
        """Derivative of the given order at parameter ``t``.

        Raises UnsupportedOrder for orders outside 0..3 and OutOfDomain for
        parameters outside the closed interval (a slack of 1e-12 times the
        span absorbs round off from quadrature and root finding callers).
        """
        if order not in (0, 1, 2, 3):
            raise UnsupportedOrder(order)
        t = float(t)
        lo, hi = self._t_lo, self._t_hi
        slack = 1e-12 * max(1.0, hi - lo)
        if not math.isfinite(t) or t < lo - slack or t > hi + slack:
            raise OutOfDomain(t, lo, hi)
        return self._evaluate(min(max(t, lo), hi), int(order))

    def position(self, t: float) -> np.ndarray:
        return self.eval(t, 0)

    def _evaluate(self, t: float, order: int) -> np.ndarray:
        if order == 0:
            return self._position(t)
        return finite_difference_derivative(
            self._position, t, order, self._fd_step, self.domain
        )

    def _position(self, t: float) -> np.ndarray:
        raise NotImplementedError("curve kinds must implement _position or _evaluate")

    def __repr__(self) -> str:
        return f"<{type(self).__name__} kind={self.kind!r} domain=[{self._t_lo}, {self._t_hi}]>"


class CallableCurve(ParamCurve):
    """Curve defined by an arbitrary position function.

    Derivatives come from the finite difference fallback, so this is the
    right wrapper for black box trajectories.
    """

    kind = "callable"

    def __init__(self, fn: Callable[[float], Sequence[float]], domain, fd_step=None):
        super().__init__(domain[0], domain[1], fd_step)
        self._fn = fn

    def _position(self, t: float) -> np.ndarray:
        arr = np.asarray(self._fn(t), dtype=float)
        if arr.shape != (3,):
            raise InvalidField(f"position function must return three components, got shape {arr.shape}")
        return arr


class PolynomialCurve(ParamCurve):
    """Curve with one ascending degree coefficient list per component."""

    kind = "polynomial"

    def __init__(self, coeffs, domain, fd_step=None):
        super().__init__(domain[0], domain[1], fd_step)
        if len(coeffs) != 3:
            raise InvalidField(f"polynomial curves need exactly three coefficient lists, got {len(coeffs)}")
        cleaned = []
        for i, comp in enumerate(coeffs):
            arr = np.asarray(comp, dtype=float)
            if arr.ndim != 1 or arr.size == 0:
                raise InvalidField(f"coefficient list {i} must be a non-empty sequence of reals")
            if not np.all(np.isfinite(arr)):
                raise InvalidField(f"coefficient list {i} contains non-finite values")
            cleaned.append(arr.copy())
        self._coeffs = tuple(cleaned)
        table = [self._coeffs]
        for _ in range(MAX_DERIVATIVE_ORDER):
            table.append(tuple(npoly.polyder(c) for c in table[-1]))
        self._deriv_coeffs = tuple(table)

    @property
    def coefficients(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        return self._coeffs

    def _evaluate(self, t: float, order: int) -> np.ndarray:
        cs = self._deriv_coeffs[order]
        return np.array([float(npoly.polyval(t, c)) for c in cs])


class CircularHelix(ParamCurve):
    """The helix (r cos t, r sin t, p t); p is the axial advance per radian.

    Curvature r / (r^2 + p^2) and torsion p / (r^2 + p^2) are both constant,
    which makes this the canonical circular helix. Pitch 0 gives a planar
    circle of radius r.
    """

    kind = "circular_helix"

    def __init__(self, radius, pitch, domain=(0.0, 2.0 * math.pi), fd_step=None):
        super().__init__(domain[0], domain[1], fd_step)
        radius = float(radius)
        pitch = float(pitch)
        if not (math.isfinite(radius) and radius > 0):
            raise InvalidField(f"radius must be strictly positive, got {radius}")
        if not math.isfinite(pitch):
            raise InvalidField(f"pitch must be finite, got {pitch}")
        self._radius = radius
        self._pitch = pitch

    @property
    def radius(self) -> float:
        return self._radius

    @property
    def pitch(self) -> float:
        return self._pitch

    def _evaluate(self, t: float, order: int) -> np.ndarray:
        r, p = self._radius, self._pitch
        if order == 0:
            return np.array([r * math.cos(t), r * math.sin(t), p * t])
        # d^k/dt^k of (cos, sin) is a quarter turn phase shift per order
        ph = t + order * (math.pi / 2.0)
        z = p if order == 1 else 0.0
        return np.array([r * math.cos(ph), r * math.sin(ph), z])


class Polyline(ParamCurve):
    """Point sequence interpolated by a natural cubic spline.

    A raw polyline has no curvature to speak of; the spline supplies the C2
    structure, and derivatives are derivatives of the spline (order 3 is
    piecewise constant).
    """

    kind = "polyline"

    def __init__(self, points, knots, fd_step=None):
        pts = np.asarray(points, dtype=float)
        kns = np.asarray(knots, dtype=float)
        if pts.ndim != 2 or pts.shape[1] != 3:
            raise InvalidField(f"points must be an (n, 3) array, got shape {pts.shape}")
        if kns.ndim != 1:
            raise InvalidField(f"knots must be a one dimensional array, got shape {kns.shape}")
        if pts.shape[0] != kns.shape[0]:
            raise InvalidField(f"{pts.shape[0]} points but {kns.shape[0]} knots")
        if pts.shape[0] < 2:
            raise InvalidField("polyline needs at least two points")
        if not (np.all(np.isfinite(pts)) and np.all(np.isfinite(kns))):
            raise InvalidField("points and knots must be finite")
        if not np.all(np.diff(kns) > 0):
            raise InvalidField("knots must be strictly increasing")
        super().__init__(kns[0], kns[-1], fd_step)
        self._points = pts.copy()
        self._knots = kns.copy()
        self._spline = CubicSpline(kns, pts, axis=0, bc_type="natural")

    @property
    def points(self) -> np.ndarray:
        return self._points

    @property
    def knots(self) -> np.ndarray:
        return self._knots

    def _evaluate(self, t: float, order: int) -> np.ndarray:
        return np.asarray(self._spline(t, nu=order), dtype=float)


class TransformedCurve(ParamCurve):
    """Similarity image (rotation, translation, uniform scale) of a base curve.

    Derivatives map exactly: order k picks up scale * rotation, and the
    translation only enters at order 0. Useful for invariance checks.
    """

    kind = "transformed"

    def __init__(self, base: ParamCurve, rotation=None, translation=None, scale=1.0):
        super().__init__(base.t_lo, base.t_hi, base.fd_step)
        self._base = base
        if rotation is None:
            rotation = np.eye(3)
        rotation = np.asarray(rotation, dtype=float)
        if rotation.shape != (3, 3) or not np.all(np.isfinite(rotation)):
            raise InvalidField("rotation must be a finite 3x3 matrix")
        self._rotation = rotation.copy()
        self._translation = (
            np.zeros(3) if translation is None else as_vec3(translation, "translation")
        )
        scale = float(scale)
        if not (math.isfinite(scale) and scale > 0):
            raise InvalidField(f"scale must be strictly positive, got {scale}")
        self._scale = scale

    @property
    def base(self) -> ParamCurve:
        return self._base

    def _evaluate(self, t: float, order: int) -> np.ndarray:
        out = self._scale * (self._rotation @ self._base.eval(t, order))
        if order == 0:
            out = out + self._translation
        return out


def transform_curve(base, rotation=None, translation=None, scale=1.0) -> TransformedCurve:
    """Convenience wrapper around TransformedCurve."""
    return TransformedCurve(base, rotation=rotation, translation=translation, scale=scale)


# One sided stencils need this many steps of room beyond the base point.
_ONESIDED_REACH = {1: 2, 2: 3, 3: 4}


def finite_difference_derivative(f, t, order, h, domain=None):
    """Second order accurate derivative of a vector function from positions.

    Central stencils are used where they fit. Within reach of a domain end
    the matching one sided second order stencil is used instead, so every
    point of a closed interval stays differentiable. Orders 1 and 2 use
    three point stencils, order 3 a five point stencil.
    """
    if order == 0:
        return np.asarray(f(t), dtype=float)
    if order not in (1, 2, 3):
        raise UnsupportedOrder(order)
    h = float(h)
    if not (math.isfinite(h) and h > 0):
        raise InvalidField(f"step must be strictly positive, got {h}")
    t = float(t)

    if domain is None:
        return _central_fd(f, t, order, h)

    lo, hi = float(domain[0]), float(domain[1])
    # Guarantee any branch fits in the interval, even for tiny domains.
    h = min(h, (hi - lo) / _ONESIDED_REACH[3])
    central_reach = h if order < 3 else 2.0 * h
    if t - central_reach >= lo and t + central_reach <= hi:
        return _central_fd(f, t, order, h)
    if t - lo <= hi - t:
        return _onesided_fd(f, t, order, h)
    return _onesided_fd(f, t, order, -h)


def _central_fd(f, t, order, h):
    if order == 1:
        return (np.asarray(f(t + h), float) - np.asarray(f(t - h), float)) / (2.0 * h)
    if order == 2:
        return (
            np.asarray(f(t + h), float)
            - 2.0 * np.asarray(f(t), float)
            + np.asarray(f(t - h), float)
        ) / (h * h)
    return (
        np.asarray(f(t + 2 * h), float)
        - 2.0 * np.asarray(f(t + h), float)
        + 2.0 * np.asarray(f(t - h), float)
        - np.asarray(f(t - 2 * h), float)
    ) / (2.0 * h ** 3)


def _onesided_fd(f, t, order, h):
    # h < 0 mirrors the stencil; the formulas below stay second order.
    s = [np.asarray(f(t + k * h), float) for k in range(_ONESIDED_REACH[order] + 1)]
    if order == 1:
        return (-3.0 * s[0] + 4.0 * s[1] - s[2]) / (2.0 * h)
    if order == 2:
        return (2.0 * s[0] - 5.0 * s[1] + 4.0 * s[2] - s[3]) / (h * h)
    return (-5.0 * s[0] + 18.0 * s[1] - 24.0 * s[2] + 14.0 * s[3] - 3.0 * s[4]) / (2.0 * h ** 3)


@dataclass(frozen=True)
class RegularityReport:
    """Grid minima that gate frame construction.

    is_regular means the speed never fell to the degeneracy threshold on the
    grid; is_twisted means the velocity cross acceleration norm stayed above
    it, so the Frenet frame exists at every sample.
    """

    min_speed: float
    min_cross_norm: float
    is_regular: bool
    is_twisted: bool
    grid_size: int


def regularity_check(curve, grid_size=256, tol: Tolerances | None = None) -> RegularityReport:
    """Scan a uniform grid for minimum speed and minimum |a' x a''|."""
    tol = tol or DEFAULT_TOLERANCES
    grid_size = int(grid_size)
    if grid_size < 2:
        raise InvalidField(f"grid_size must be at least 2, got {grid_size}")
    ts = np.linspace(curve.t_lo, curve.t_hi, grid_size)
    min_speed = math.inf
    min_cross = math.inf
    for t in ts:
        d1 = curve.eval(t, 1)
        d2 = curve.eval(t, 2)
        min_speed = min(min_speed, float(np.linalg.norm(d1)))
        min_cross = min(min_cross, float(np.linalg.norm(np.cross(d1, d2))))
    return RegularityReport(
        min_speed=min_speed,
        min_cross_norm=min_cross,
        is_regular=min_speed > tol.speed_tol,
        is_twisted=min_cross > tol.speed_tol,
        grid_size=grid_size,
    )
