"""Parse and serialize curve spec documents.

A curve spec is a JSON object with a ``kind`` field. The schema kinds are
polynomial, circular_helix, polyline, and lifted; arclength_reparam is an
additional kind this toolkit emits when a lift needed its base curve
reparameterized first. parse and serialize are exact inverses on every
kind: serialize(parse(serialize(c))) == serialize(c).
"""

from __future__ import annotations

import json
import math

import numpy as np

from .curves import CircularHelix, ParamCurve, Polyline, PolynomialCurve
from .errors import InputError, InvalidField, ParseError, UnknownKind
from .frenet import ReparamCurve, reparam_by_arclength
from .lift import LiftSpec, LiftedCurve, lift_curve

_REPARAM_DEFAULT_GRID = 512


def parse_curve_spec(text: str) -> ParamCurve:
    """Parse a curve spec document into a curve object."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"curve spec is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError(f"curve spec must be a JSON object, got {type(doc).__name__}")
    return curve_from_dict(doc)


def serialize_curve_spec(curve: ParamCurve) -> str:
    """Serialize a curve to its spec document, stable across runs."""
    return json.dumps(curve_to_dict(curve), sort_keys=True, indent=2) + "\n"


def _real(doc, name, default=None):
    if name not in doc:
        if default is not None:
            return default
        raise InvalidField(f"missing required field {name!r}")
    value = doc[name]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise InvalidField(f"field {name!r} must be a number, got {value!r}")
    if not math.isfinite(value):
        raise InvalidField(f"field {name!r} must be finite, got {value!r}")
    return float(value)


def _domain(doc, required=True):
    if "domain" not in doc:
        if required:
            raise InvalidField("missing required field 'domain'")
        return None
    dom = doc["domain"]
    if not isinstance(dom, (list, tuple)) or len(dom) != 2:
        raise InvalidField(f"'domain' must be a [lo, hi] pair, got {dom!r}")
    lo, hi = dom
    for v in (lo, hi):
        if isinstance(v, bool) or not isinstance(v, (int, float)) or not math.isfinite(v):
            raise InvalidField(f"'domain' endpoints must be finite numbers, got {dom!r}")
    if not lo < hi:
        raise InvalidField(f"'domain' must satisfy lo < hi, got {dom!r}")
    return (float(lo), float(hi))


def _vector(doc, name, default=None):
    if name not in doc:
        return default
    value = doc[name]
    if not isinstance(value, (list, tuple)) or len(value) != 3:
        raise InvalidField(f"field {name!r} must be a 3-vector, got {value!r}")
    return [float(v) for v in value]


def _build_polynomial(doc):
    domain = _domain(doc)
    coeffs = doc.get("coeffs")
    if not isinstance(coeffs, list) or len(coeffs) != 3:
        raise InvalidField("'coeffs' must be a list of three coefficient lists")
    for comp in coeffs:
        if not isinstance(comp, list) or not comp:
            raise InvalidField("each coefficient list must be a non-empty list of numbers")
    return PolynomialCurve(coeffs, domain)


def _build_circular_helix(doc):
    domain = _domain(doc)
    return CircularHelix(_real(doc, "radius"), _real(doc, "pitch"), domain)


def _build_polyline(doc):
    points = doc.get("points")
    knots = doc.get("knots")
    if points is None or knots is None:
        raise InvalidField("polyline needs 'points' and 'knots'")
    curve = Polyline(points, knots)
    domain = _domain(doc, required=False)
    if domain is not None:
        slack = 1e-12 * max(1.0, curve.span)
        if abs(domain[0] - curve.t_lo) > slack or abs(domain[1] - curve.t_hi) > slack:
            raise InvalidField(
                f"'domain' {list(domain)} disagrees with the knot range "
                f"[{curve.t_lo}, {curve.t_hi}]"
            )
    return curve


def _build_lifted(doc):
    base_doc = doc.get("base")
    if not isinstance(base_doc, dict):
        raise InvalidField("'base' must be a nested curve spec object")
    base = curve_from_dict(base_doc)
    axis_mode = doc.get("axis_mode", "unit")
    spec = LiftSpec(
        theta=_real(doc, "theta"),
        s0=_real(doc, "s0", default=0.0),
        offset=np.asarray(_vector(doc, "offset", default=[0.0, 0.0, 0.0])),
        axis_mode=axis_mode,
        axis=None if doc.get("axis") is None else np.asarray(_vector(doc, "axis")),
    )
    curve = lift_curve(base, spec, strict=False)
    domain = _domain(doc, required=False)
    if domain is not None:
        slack = 1e-12 * max(1.0, curve.span)
        if abs(domain[0] - curve.t_lo) > slack or abs(domain[1] - curve.t_hi) > slack:
            raise InvalidField(
                f"'domain' {list(domain)} disagrees with the base domain "
                f"[{curve.t_lo}, {curve.t_hi}]"
            )
    return curve


def _build_reparam(doc):
    base_doc = doc.get("base")
    if not isinstance(base_doc, dict):
        raise InvalidField("'base' must be a nested curve spec object")
    grid = doc.get("grid", _REPARAM_DEFAULT_GRID)
    if isinstance(grid, bool) or not isinstance(grid, int) or grid < 2:
        raise InvalidField(f"'grid' must be an integer >= 2, got {grid!r}")
    return reparam_by_arclength(curve_from_dict(base_doc), grid_size=grid)


_BUILDERS = {
    "polynomial": _build_polynomial,
    "circular_helix": _build_circular_helix,
    "polyline": _build_polyline,
    "lifted": _build_lifted,
    "arclength_reparam": _build_reparam,
}


def curve_from_dict(doc: dict) -> ParamCurve:
    if "kind" not in doc:
        raise InvalidField("curve spec is missing the 'kind' field")
    kind = doc["kind"]
    builder = _BUILDERS.get(kind)
    if builder is None:
        raise UnknownKind(kind)
    return builder(doc)


def curve_to_dict(curve: ParamCurve) -> dict:
    if isinstance(curve, PolynomialCurve):
        return {
            "kind": "polynomial",
            "domain": [curve.t_lo, curve.t_hi],
            "coeffs": [[float(c) for c in comp] for comp in curve.coefficients],
        }
    if isinstance(curve, CircularHelix):
        return {
            "kind": "circular_helix",
            "domain": [curve.t_lo, curve.t_hi],
            "radius": curve.radius,
            "pitch": curve.pitch,
        }
    if isinstance(curve, Polyline):
        return {
            "kind": "polyline",
            "domain": [curve.t_lo, curve.t_hi],
            "points": [[float(v) for v in row] for row in curve.points],
            "knots": [float(v) for v in curve.knots],
        }
    if isinstance(curve, LiftedCurve):
        doc = {
            "kind": "lifted",
            "domain": [curve.t_lo, curve.t_hi],
            "base": curve_to_dict(curve.base),
            "theta": curve.spec.theta,
            "s0": curve.spec.s0,
            "offset": [float(v) for v in curve.spec.offset],
            "axis_mode": curve.spec.axis_mode,
        }
        if curve.spec.axis_mode == "explicit":
            doc["axis"] = [float(v) for v in curve.spec.axis]
        return doc
    if isinstance(curve, ReparamCurve):
        return {
            "kind": "arclength_reparam",
            "base": curve_to_dict(curve.base),
            "grid": curve.length_map.grid_size,
        }
    raise InputError(f"curve kind {curve.kind!r} has no spec document form")
