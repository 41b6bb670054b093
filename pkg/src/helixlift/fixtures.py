"""Built-in fixture curves and the printed formula set the suite audits.

The worked verification example is the cubic general helix

    alpha(s) = (6s, 3s^2, s^3)

whose speed is 3(s^2 + 2), together with a family of printed closed form
expressions for its frame, its lift, and the lifted frame. The printed_*
functions below reproduce those expressions verbatim, wrong ones included;
the verification suite compares each against an independent finite
difference oracle and records agreement in the errata ledger. Nothing here
asserts that a printed expression is true.
"""

from __future__ import annotations

import math

import numpy as np

from .curves import CircularHelix, PolynomialCurve
from .errors import InvalidField

SQRT2 = math.sqrt(2.0)


def paper_cubic(domain=(-3.0, 3.0)) -> PolynomialCurve:
    """The cubic helix (6t, 3t^2, t^3) used by the worked example."""
    return PolynomialCurve([[0.0, 6.0], [0.0, 0.0, 3.0], [0.0, 0.0, 0.0, 1.0]], domain)


def circular_helix(radius=1.0, pitch=1.0, domain=(0.0, 2.0 * math.pi)) -> CircularHelix:
    return CircularHelix(radius, pitch, domain)


def twisted_cubic(domain=(0.1, 1.5)) -> PolynomialCurve:
    """(t, t^2, t^3): regular and twisted but neither a general nor a slant
    helix. The domain avoids t = 0 where torsion peaks steeply."""
    return PolynomialCurve([[0.0, 1.0], [0.0, 0.0, 1.0], [0.0, 0.0, 0.0, 1.0]], domain)


def quartic_non_helix(domain=(0.25, 2.0)) -> PolynomialCurve:
    """(t, t^2, t^4): fails the Lancret test. Positive domain keeps tau nonzero."""
    return PolynomialCurve([[0.0, 1.0], [0.0, 0.0, 1.0], [0.0, 0.0, 0.0, 0.0, 1.0]], domain)


def planar_circle(radius=1.0, domain=(0.0, 2.0 * math.pi)) -> CircularHelix:
    """Degenerate control: torsion is identically zero."""
    return CircularHelix(radius, 0.0, domain)


def fixture_by_name(name: str):
    """Resolve a CLI fixture name.

    Plain names: paper_cubic, twisted_cubic. Parameterized:
    circular_helix:a,b and circle:r.
    """
    if name == "paper_cubic":
        return paper_cubic()
    if name == "twisted_cubic":
        return twisted_cubic()
    if name.startswith("circular_helix:"):
        parts = name.split(":", 1)[1].split(",")
        if len(parts) != 2:
            raise InvalidField(f"expected circular_helix:a,b, got {name!r}")
        try:
            a, b = float(parts[0]), float(parts[1])
        except ValueError as exc:
            raise InvalidField(f"non-numeric helix parameters in {name!r}") from exc
        return circular_helix(a, b)
    if name.startswith("circle:"):
        try:
            r = float(name.split(":", 1)[1])
        except ValueError as exc:
            raise InvalidField(f"non-numeric radius in {name!r}") from exc
        return planar_circle(r)
    raise InvalidField(f"unknown fixture {name!r}")


# ---------------------------------------------------------------------------
# Printed expressions for the worked example. Audit targets, not truths.
# ---------------------------------------------------------------------------


def printed_tangent(s: float) -> np.ndarray:
    d = s * s + 2.0
    return np.array([2.0, 2.0 * s, s * s]) / d


def printed_normal(s: float) -> np.ndarray:
    # Middle numerator as printed; the oracle disagrees with it.
    d = s * s + 2.0
    return np.array(
        [-2.0 * s**3 - 4.0 * s, s**4 - 4.0 * s**2 - 8.0, 2.0 * s**3 + 4.0 * s]
    ) / (d * d)


def printed_binormal(s: float) -> np.ndarray:
    d = s * s + 2.0
    return np.array([s * s, -2.0 * s, 2.0]) / d


def printed_kappa(s: float) -> float:
    # As printed: the square on (s^2 + 2) is missing.
    return 2.0 / (3.0 * (s * s + 2.0))


def printed_tau(s: float) -> float:
    return 2.0 / (3.0 * (s * s + 2.0))


def printed_axis(s: float) -> np.ndarray:
    # Simplifies to the constant (sqrt2, 0, sqrt2), which has norm 2.
    d = s * s + 2.0
    component = (2.0 * SQRT2 + SQRT2 * s * s) / d
    return np.array([component, 0.0, component])


def printed_lift(s: float) -> np.ndarray:
    d = s * s + 2.0
    return np.array(
        [
            ((3.0 * SQRT2 + 1.0) * s**3 + (6.0 * SQRT2 + 2.0) * s) / d,
            (3.0 * SQRT2 / 2.0) * s * s,
            ((SQRT2 / 2.0) * s**5 + (SQRT2 + 1.0) * s**3 + 2.0 * s) / d,
        ]
    )


def printed_lift_tangent(s: float) -> np.ndarray:
    d = s * s + 2.0
    pref = 1.0 / math.sqrt(4.0 + 2.0 * SQRT2)
    return pref * np.array(
        [
            1.0 + 2.0 * SQRT2 / d,
            2.0 * SQRT2 * s / d,
            1.0 + SQRT2 * s * s / d,
        ]
    )


def printed_lift_normal(s: float) -> np.ndarray:
    d = s * s + 2.0
    scalar = (4.0 + 2.0 * SQRT2 - 3.0 * d * d) / (
        math.sqrt(4.0 + 2.0 * SQRT2) * math.sqrt(9.0 * d**4 + 8.0)
    )
    return scalar * printed_normal(s)


def printed_lift_binormal(s: float) -> np.ndarray:
    d = s * s + 2.0
    pref = 1.0 / math.sqrt(9.0 * d**4 + 8.0)
    return pref * np.array(
        [
            6.0 * d + 2.0 * SQRT2 * s * s / d,
            6.0 * s * d - 4.0 * SQRT2 * s / d,
            3.0 * s * s * d - 4.0 * SQRT2 / d,
        ]
    )
