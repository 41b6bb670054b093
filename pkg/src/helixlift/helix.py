"""Helix classification: Lancret ratio, axis, slant test, Bertrand pairing.

A general helix is detected through the Lancret criterion, kappa / tau
constant, with the helix angle theta recovered from tan(theta) = kappa/tau.
The slant test checks constancy of

    sigma = (kappa^2 / (kappa^2 + tau^2)^(3/2)) * d(tau/kappa)/ds

with the derivative taken with respect to arc length. Bertrand pairing of
two curves over the same parameter domain compares principal normals
pointwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateFrame, DomainMismatch, InvalidField, NotAHelix
from .frenet import curvature_torsion, frame_at
from .tolerances import DEFAULT_TOLERANCES, Tolerances

#: Denominator floor in relative deviation, keeps sigma == 0 well defined.
STAT_FLOOR = 1e-12

#: Floor used for the slant quantity sigma specifically. Sigma carries units
#: of curvature and sits at exact zero for every helix; round off in the
#: grid differences (about 1e-14) must not register as relative deviation.
SIGMA_FLOOR = 1e-6


@dataclass(frozen=True)
class ConstancyStat:
    """How constant a sampled quantity was: mean, worst deviation, both sizes."""

    mean: float
    max_abs_dev: float
    rel_dev: float
    grid_size: int


def constancy_stat(values, floor: float = STAT_FLOOR) -> ConstancyStat:
    """Summarize a sample sequence; rel_dev = max deviation / max(|mean|, floor)."""
    arr = np.asarray(values, dtype=float)
    if arr.size == 0:
        raise InvalidField("constancy_stat needs at least one sample")
    mean = float(arr.mean())
    max_dev = float(np.max(np.abs(arr - mean)))
    return ConstancyStat(
        mean=mean,
        max_abs_dev=max_dev,
        rel_dev=max_dev / max(abs(mean), floor),
        grid_size=int(arr.size),
    )


def _uniform_grid(curve, grid_size):
    grid_size = int(grid_size)
    if grid_size < 3:
        raise InvalidField(f"grid_size must be at least 3, got {grid_size}")
    return np.linspace(curve.t_lo, curve.t_hi, grid_size)


def _kappa_tau_grid(curve, ts, tol):
    kappas = np.empty(len(ts))
    taus = np.empty(len(ts))
    for i, t in enumerate(ts):
        kappas[i], taus[i] = curvature_torsion(curve, t, tol)
    return kappas, taus


def lancret_test(curve, grid_size: int = 256, tol: Tolerances | None = None):
    """Lancret criterion on a uniform grid.

    Returns (is_general_helix, theta, ratio_stat). theta is reported in
    (0, pi/2) regardless of the torsion sign; it is only meaningful when the
    flag is true. Raises DegenerateFrame if the torsion vanishes at any
    sample, since the ratio is undefined there.
    """
    tol = tol or DEFAULT_TOLERANCES
    ts = _uniform_grid(curve, grid_size)
    kappas, taus = _kappa_tau_grid(curve, ts, tol)
    if np.any(np.abs(taus) <= tol.speed_tol):
        raise DegenerateFrame("torsion vanishes at a sample; Lancret ratio undefined there")
    stat = constancy_stat(kappas / taus)
    theta = math.atan(abs(stat.mean))
    return stat.rel_dev <= tol.constancy_tol, theta, stat


def helix_axis(curve, grid_size: int = 256, tol: Tolerances | None = None):
    """Axis of a general helix as the mean of cos(theta) T + sin(theta) B.

    The binormal term carries the sign of the torsion so the combination is
    constant for either handedness. Returns the unit mean direction and the
    constancy stat of the samples around it; raises NotAHelix when the
    Lancret test or the axis constancy fails.
    """
    tol = tol or DEFAULT_TOLERANCES
    is_helix, theta, ratio_stat = lancret_test(curve, grid_size, tol)
    if not is_helix:
        raise NotAHelix(f"kappa/tau relative deviation {ratio_stat.rel_dev:.3e} exceeds tolerance")
    ts = _uniform_grid(curve, grid_size)
    sign = 1.0 if ratio_stat.mean >= 0 else -1.0
    c, s = math.cos(theta), math.sin(theta)
    samples = np.empty((len(ts), 3))
    for i, t in enumerate(ts):
        fr = frame_at(curve, t, tol)
        samples[i] = c * fr.T + sign * s * fr.B
    mean_vec = samples.mean(axis=0)
    mean_norm = float(np.linalg.norm(mean_vec))
    max_dev = float(np.max(np.linalg.norm(samples - mean_vec, axis=1)))
    stat = ConstancyStat(
        mean=mean_norm,
        max_abs_dev=max_dev,
        rel_dev=max_dev / max(mean_norm, STAT_FLOOR),
        grid_size=len(ts),
    )
    if stat.rel_dev > tol.constancy_tol:
        raise NotAHelix(f"axis direction wanders by {stat.rel_dev:.3e} relative")
    return mean_vec / mean_norm, stat


def _arclength_nodes(curve, ts):
    """Cumulative arc length at the grid nodes via composite Simpson.

    One Simpson panel per segment is plenty here: the segments are short and
    the result only normalizes grid differences.
    """
    s = np.zeros(len(ts))
    speeds = np.array([float(np.linalg.norm(curve.eval(t, 1))) for t in ts])
    for i in range(len(ts) - 1):
        tm = 0.5 * (ts[i] + ts[i + 1])
        vm = float(np.linalg.norm(curve.eval(tm, 1)))
        s[i + 1] = s[i] + (ts[i + 1] - ts[i]) / 6.0 * (speeds[i] + 4.0 * vm + speeds[i + 1])
    return s


def slant_test(curve, grid_size: int = 256, tol: Tolerances | None = None):
    """Slant helix test: constancy of sigma over the grid interior.

    The derivative of tau/kappa is taken against cumulative arc length with
    a three point difference that stays second order on the non-uniform
    spacing. Endpoint samples have no centered neighbor and are skipped.
    """
    tol = tol or DEFAULT_TOLERANCES
    ts = _uniform_grid(curve, grid_size)
    kappas, taus = _kappa_tau_grid(curve, ts, tol)
    svals = _arclength_nodes(curve, ts)
    ratios = taus / kappas
    sigma = np.empty(len(ts) - 2)
    for i in range(1, len(ts) - 1):
        h_lo = svals[i] - svals[i - 1]
        h_hi = svals[i + 1] - svals[i]
        dr = (
            ratios[i + 1] * h_lo * h_lo
            + ratios[i] * (h_hi * h_hi - h_lo * h_lo)
            - ratios[i - 1] * h_hi * h_hi
        ) / (h_hi * h_lo * (h_hi + h_lo))
        k2 = kappas[i] * kappas[i]
        sigma[i - 1] = (k2 / (k2 + taus[i] * taus[i]) ** 1.5) * dr
    stat = constancy_stat(sigma, floor=SIGMA_FLOOR)
    return stat.rel_dev <= tol.constancy_tol, stat


def bertrand_test(curve_a, curve_b, grid_size: int = 256, tol: Tolerances | None = None):
    """Bertrand mate test for two curves over the same parameter domain.

    Compares |N_a . N_b| pointwise; the pair passes when the minimum stays
    within vector_tol of 1. The test is symmetric in its arguments.
    """
    tol = tol or DEFAULT_TOLERANCES
    slack = 1e-9 * max(1.0, curve_a.span)
    if (
        abs(curve_a.t_lo - curve_b.t_lo) > slack
        or abs(curve_a.t_hi - curve_b.t_hi) > slack
    ):
        raise DomainMismatch(
            f"domains [{curve_a.t_lo}, {curve_a.t_hi}] and [{curve_b.t_lo}, {curve_b.t_hi}] differ"
        )
    ts = _uniform_grid(curve_a, grid_size)
    dots = np.empty(len(ts))
    for i, t in enumerate(ts):
        na = frame_at(curve_a, t, tol).N
        nb = frame_at(curve_b, t, tol).N
        dots[i] = abs(float(np.dot(na, nb)))
    stat = constancy_stat(dots)
    return bool(np.min(dots) >= 1.0 - tol.vector_tol), stat


@dataclass(frozen=True)
class HelixClassification:
    """Combined classification of one curve."""

    is_general_helix: bool
    is_circular_helix: bool
    is_slant_helix: bool
    theta: float | None
    axis: np.ndarray | None
    ratio_stat: ConstancyStat
    sigma_stat: ConstancyStat
    kappa_stat: ConstancyStat
    tau_stat: ConstancyStat


def classify_curve(curve, grid_size: int = 256, tol: Tolerances | None = None) -> HelixClassification:
    """Run the Lancret, circular, and slant tests and assemble the result.

    A circular helix is a general helix whose curvature and torsion are each
    constant. theta and axis are populated only for general helices.
    """
    tol = tol or DEFAULT_TOLERANCES
    ts = _uniform_grid(curve, grid_size)
    kappas, taus = _kappa_tau_grid(curve, ts, tol)
    kappa_stat = constancy_stat(kappas)
    tau_stat = constancy_stat(taus)
    is_general, theta, ratio_stat = lancret_test(curve, grid_size, tol)
    is_slant, sigma_stat = slant_test(curve, grid_size, tol)
    is_circular = bool(
        is_general
        and kappa_stat.rel_dev <= tol.constancy_tol
        and tau_stat.rel_dev <= tol.constancy_tol
    )
    axis = None
    if is_general:
        axis, _ = helix_axis(curve, grid_size, tol)
    return HelixClassification(
        is_general_helix=bool(is_general),
        is_circular_helix=is_circular,
        is_slant_helix=bool(is_slant),
        theta=theta if is_general else None,
        axis=axis,
        ratio_stat=ratio_stat,
        sigma_stat=sigma_stat,
        kappa_stat=kappa_stat,
        tau_stat=tau_stat,
    )
