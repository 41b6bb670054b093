"""Helix lift: translate a general helix along its axis while shearing by
the tangent direction.

The lifted curve is

    lifted(s) = offset + sin(theta) * alpha(s) + axis * (s - s0) * cos(theta)

where theta is the helix angle of the base curve alpha and axis is its axis
direction. For a unit speed base the lifted tangent has the closed form
coefficients implemented by ``closed_form_lift_frame``; the printed binormal
coefficient pair (lambda, mu) and the normal factor c are implemented here
exactly as printed so the verification suite can audit them against the
independent oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .curves import ParamCurve, as_vec3
from .errors import (
    DegenerateDenominator,
    InvalidField,
    NotAHelix,
    NotUnitSpeed,
    ThetaMismatch,
)
from .helix import helix_axis, lancret_test
from .tolerances import DEFAULT_TOLERANCES, Tolerances

AXIS_MODES = ("unit", "paper_printed", "explicit")

#: Angles closer than this to 0 or pi/2 take the degenerate construction path.
_DEGENERATE_THETA = 1e-12


@dataclass(eq=False)
class LiftSpec:
    """Parameters of a lift.

    axis_mode chooses how the axis vector is obtained: "unit" measures the
    base helix axis and normalizes it, "paper_printed" doubles that unit
    axis (the convention used by the printed worked example), and
    "explicit" takes the axis field verbatim.
    """

    theta: float
    s0: float = 0.0
    offset: np.ndarray = field(default_factory=lambda: np.zeros(3))
    axis_mode: str = "unit"
    axis: np.ndarray | None = None

    def __post_init__(self):
        self.theta = float(self.theta)
        if not (math.isfinite(self.theta) and 0.0 <= self.theta <= math.pi / 2.0):
            raise InvalidField(f"theta must lie in [0, pi/2], got {self.theta}")
        self.s0 = float(self.s0)
        if not math.isfinite(self.s0):
            raise InvalidField(f"s0 must be finite, got {self.s0}")
        self.offset = as_vec3(self.offset, "offset")
        if self.axis_mode not in AXIS_MODES:
            raise InvalidField(f"axis_mode must be one of {AXIS_MODES}, got {self.axis_mode!r}")
        if self.axis_mode == "explicit":
            if self.axis is None:
                raise InvalidField("axis_mode 'explicit' requires an axis vector")
            self.axis = as_vec3(self.axis, "axis")
            if float(np.linalg.norm(self.axis)) == 0.0:
                raise InvalidField("explicit axis must be nonzero")
        elif self.axis is not None:
            raise InvalidField(f"axis field is only allowed with axis_mode 'explicit'")

    @property
    def is_degenerate(self) -> bool:
        return self.theta < _DEGENERATE_THETA or (math.pi / 2.0 - self.theta) < _DEGENERATE_THETA


class LiftedCurve(ParamCurve):
    """The lift of a base curve, axis already resolved to a constant vector."""

    kind = "lifted"

    def __init__(self, base: ParamCurve, spec: LiftSpec, axis: np.ndarray):
        super().__init__(base.t_lo, base.t_hi, base.fd_step)
        self._base = base
        self._spec = spec
        self._axis = as_vec3(axis, "axis")
        self._sin = math.sin(spec.theta)
        self._cos = math.cos(spec.theta)

    @property
    def base(self) -> ParamCurve:
        return self._base

    @property
    def spec(self) -> LiftSpec:
        return self._spec

    @property
    def axis(self) -> np.ndarray:
        return self._axis

    def _evaluate(self, t: float, order: int) -> np.ndarray:
        if order == 0:
            return (
                self._spec.offset
                + self._sin * self._base.eval(t, 0)
                + self._axis * ((t - self._spec.s0) * self._cos)
            )
        d = self._sin * self._base.eval(t, order)
        if order == 1:
            d = d + self._axis * self._cos
        return d


def lift_curve(
    alpha: ParamCurve,
    spec: LiftSpec,
    grid_size: int = 256,
    tol: Tolerances | None = None,
    strict: bool = True,
) -> LiftedCurve:
    """Construct the lift of ``alpha`` described by ``spec``.

    With strict=True (the default) the base must be unit speed within
    vector_tol, must pass the Lancret test, and for non-explicit axis modes
    its measured helix angle must agree with spec.theta. strict=False skips
    the unit speed gate, which is what reproducing the printed worked
    example requires, since its base curve is evaluated in its original
    non arc length parameter.

    Degenerate angles are allowed: theta = pi/2 is a pure translation by
    offset (the axis term vanishes), theta = 0 produces the straight line
    offset + axis * (s - s0) and therefore requires an explicit axis.
    """
    tol = tol or DEFAULT_TOLERANCES

    if spec.is_degenerate:
        if spec.theta < _DEGENERATE_THETA:
            if spec.axis_mode != "explicit":
                raise InvalidField(
                    "theta = 0 collapses the lift to a line along the axis; "
                    "axis_mode must be 'explicit'"
                )
            axis = spec.axis
        else:
            # theta = pi/2: the axis term carries cos(theta) = 0 and is inert.
            axis = spec.axis if spec.axis is not None else np.zeros(3)
        return LiftedCurve(alpha, spec, axis)

    if strict:
        ts = np.linspace(alpha.t_lo, alpha.t_hi, int(grid_size))
        speeds = np.array([float(np.linalg.norm(alpha.eval(t, 1))) for t in ts])
        worst = float(np.max(np.abs(speeds - 1.0)))
        if worst > tol.vector_tol:
            raise NotUnitSpeed(
                f"speed deviates from 1 by {worst:.3e}; reparameterize by arc length first"
            )

    if spec.axis_mode == "explicit":
        axis = spec.axis
    else:
        is_helix, theta_measured, ratio_stat = lancret_test(alpha, grid_size, tol)
        if not is_helix:
            raise NotAHelix(
                f"kappa/tau relative deviation {ratio_stat.rel_dev:.3e} exceeds tolerance"
            )
        if abs(theta_measured - spec.theta) > tol.constancy_tol:
            raise ThetaMismatch(
                f"spec theta {spec.theta} vs measured helix angle {theta_measured}"
            )
        unit_axis, _ = helix_axis(alpha, grid_size, tol)
        axis = unit_axis if spec.axis_mode == "unit" else 2.0 * unit_axis

    return LiftedCurve(alpha, spec, axis)


@dataclass(frozen=True)
class ClosedFormFrame:
    """Printed closed form coefficients for the lifted frame.

    tbar_* are the tangent coefficients on (T, B) of the base frame; they
    are exact for a unit axis lift of a unit speed helix. bbar_* and c are
    the printed binormal and normal claims, kept verbatim for the errata
    audit; they do not agree with the oracle in general.
    """

    lam: float
    mu: float
    c: float
    tbar_T_coeff: float
    tbar_B_coeff: float
    bbar_T_coeff: float
    bbar_B_coeff: float


def closed_form_lift_frame(
    kappa: float, tau: float, theta: float, denom_tol: float = 1e-12
) -> ClosedFormFrame:
    """Evaluate the printed lifted frame coefficients at one (kappa, tau).

    lambda = cos sin^2 + cos^3 sin depends on theta alone;
    mu = (sin + cos^2) kappa - lambda tau. Raises DegenerateDenominator when
    lambda^2 + mu^2 falls to denom_tol.
    """
    kappa = float(kappa)
    tau = float(tau)
    theta = float(theta)
    if not (math.isfinite(kappa) and math.isfinite(tau) and math.isfinite(theta)):
        raise InvalidField("kappa, tau, theta must be finite")
    s, c = math.sin(theta), math.cos(theta)
    tangent_norm = math.sqrt(1.0 + c * math.sin(2.0 * theta))
    tbar_T = (s + c * c) / tangent_norm
    tbar_B = (c * s) / tangent_norm
    lam = c * s * s + c**3 * s
    mu = (s + c * c) * kappa - lam * tau
    denom_sq = lam * lam + mu * mu
    if denom_sq <= denom_tol:
        raise DegenerateDenominator(f"lambda^2 + mu^2 = {denom_sq:.3e} is below {denom_tol:.1e}")
    denom = math.sqrt(denom_sq)
    bbar_T = lam / denom
    bbar_B = mu / denom
    return ClosedFormFrame(
        lam=lam,
        mu=mu,
        c=bbar_B * tbar_T - bbar_T * tbar_B,
        tbar_T_coeff=tbar_T,
        tbar_B_coeff=tbar_B,
        bbar_T_coeff=bbar_T,
        bbar_B_coeff=bbar_B,
    )


def c_factor(kappa: float, tau: float, theta: float) -> float:
    """The printed scalar relating the lifted normal to the base normal."""
    return closed_form_lift_frame(kappa, tau, theta).c
