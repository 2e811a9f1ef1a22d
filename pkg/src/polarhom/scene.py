"""JSON scene schemas, parsing and deterministic serialization."""
from __future__ import annotations

from fractions import Fraction

from polarhom.arith.mpoly import MPoly
from polarhom.arith.poly import UniPoly
from polarhom.arith.scalar import Scalar, value_from_json, value_to_json
from polarhom.curves.differential import Differential1
from polarhom.curves.model import INFINITY, CurveModel, CurvePoint

SCHEMA_VERSION = 1

_rational = {
    "oneOf": [
        {"type": "integer"},
        {"type": "string", "pattern": r"^-?\d+(/\d+)?$"},
    ]
}
_field_value = {
    "oneOf": [
        _rational,
        {
            "type": "object",
            "properties": {
                "min_poly": {"type": "array", "items": _rational, "minItems": 2},
                "coeffs": {"type": "array", "items": _rational},
            },
            "required": ["min_poly", "coeffs"],
            "additionalProperties": False,
        },
    ]
}
_poly = {"type": "array", "items": _field_value}
_curve = {
    "oneOf": [
        {
            "type": "object",
            "properties": {"kind": {"const": "p1"}},
            "required": ["kind"],
            "additionalProperties": False,
        },
        {
            "type": "object",
            "properties": {"kind": {"const": "hyperelliptic_odd"}, "f": {"type": "array", "items": _rational, "minItems": 4}},
            "required": ["kind", "f"],
            "additionalProperties": False,
        },
    ]
}
_point = {
    "oneOf": [
        {"const": "infinity"},
        {
            "type": "object",
            "properties": {"x": _field_value, "y": _field_value},
            "required": ["x"],
            "additionalProperties": False,
        },
    ]
}
_form = {
    "type": "object",
    "properties": {"A": _poly, "B": _poly, "C": _poly},
    "required": ["A"],
    "additionalProperties": False,
}
_terms2 = {
    "type": "array",
    "items": {"type": "array", "prefixItems": [{"type": "integer", "minimum": 0}] * 2 + [_rational], "minItems": 3, "maxItems": 3},
}
_terms3 = {
    "type": "array",
    "items": {"type": "array", "prefixItems": [{"type": "integer", "minimum": 0}] * 3 + [_rational], "minItems": 4, "maxItems": 4},
}
_form1 = {
    "type": "object",
    "properties": {"P": _terms2, "Q": _terms2, "D": _terms2},
    "required": ["P", "Q"],
    "additionalProperties": False,
}
_plane = {"type": "array", "items": _rational, "minItems": 4, "maxItems": 4}


def _obj(props: dict, required: list) -> dict:
    props = {"version": {"const": SCHEMA_VERSION}, "seed": {"type": "integer"}, **props}
    return {"type": "object", "properties": props, "required": ["version"] + required, "additionalProperties": False}


SCHEMAS = {
    "curve": _obj({"curve": _curve, "forms": {"type": "array", "items": _form}}, ["curve"]),
    "boundary": _obj(
        {
            "curve": _curve,
            "chain": {
                "type": "array",
                "items": {
                    "type": "object",
                    "properties": {"form": _form, "weight": _field_value},
                    "required": ["form"],
                    "additionalProperties": False,
                },
            },
        },
        ["curve", "chain"],
    ),
    "punctures": _obj({"punctures": {"type": "array", "items": _point}}, ["punctures"]),
    "mv": _obj(
        {"curve": _curve, "S1": {"type": "array", "items": _point}, "S2": {"type": "array", "items": _point}},
        ["curve", "S1", "S2"],
    ),
    "d2": _obj(
        {"numerator": _terms2, "lines": {"type": "array", "items": {"type": "array", "items": _rational, "minItems": 3, "maxItems": 3}}},
        ["numerator", "lines"],
    ),
    "intersect": _obj(
        {
            "ambient": {
                "type": "object",
                "properties": {"num": _terms2, "den": _terms2},
                "additionalProperties": False,
            },
            "A": {"type": "object", "properties": {"curve": _terms2, "form": _form1}, "required": ["curve", "form"], "additionalProperties": False},
            "B": {"type": "object", "properties": {"curve": _terms2, "form": _form1}, "required": ["curve", "form"], "additionalProperties": False},
        },
        ["A", "B"],
    ),
    "link": _obj(
        {
            "ambient": {
                "type": "object",
                "properties": {"num": _terms3, "den": _terms3},
                "additionalProperties": False,
            },
            "cycle": {
                "type": "object",
                "properties": {"plane": _plane, "curve": _terms2, "form": {"oneOf": [{"const": "canonical"}, _form1]}},
                "required": ["plane", "curve"],
                "additionalProperties": False,
            },
            "chain": {
                "type": "object",
                "properties": {"plane": _plane, "numerator": _terms2, "denominator": _terms2},
                "required": ["plane", "numerator", "denominator"],
                "additionalProperties": False,
            },
        },
        ["cycle", "chain"],
    ),
}


# -- parsing -------------------------------------------------------------------

def rational(v) -> Fraction:
    return Fraction(v)


field_value = value_from_json


def curve(d: dict) -> CurveModel:
    if d["kind"] == "p1":
        return CurveModel.p1()
    return CurveModel.hyperelliptic([rational(c) for c in d["f"]])


def point(C: CurveModel, d) -> CurvePoint:
    if d == "infinity":
        return INFINITY
    y = field_value(d["y"]) if "y" in d else None
    return C.point(field_value(d["x"]), y)


def form(C: CurveModel, d: dict) -> Differential1:
    def poly(key):
        return UniPoly([field_value(c) for c in d.get(key) or [0]])

    den = poly("C") if d.get("C") else UniPoly([1])
    return Differential1(C, poly("A"), None if C.is_p1 else poly("B"), den)


def terms(items, nvars: int) -> MPoly:
    out: dict = {}
    for it in items:
        e = tuple(int(k) for k in it[:nvars])
        out[e] = out.get(e, Fraction(0)) + rational(it[nvars])
    return MPoly(out, nvars)


# -- serialization ---------------------------------------------------------------

value_json = value_to_json


def scalar_json(s: Scalar, decimal: int | None = None) -> dict:
    out = s.to_json()
    if decimal is not None:
        out["decimal"] = approx(s.to_complex(), decimal)
    return out


def approx(z: complex, decimal: int) -> str:
    z = complex(z)
    if abs(z.imag) < 0.5 * 10.0 ** (-decimal):
        return f"{z.real:.{decimal}f} (approx)"
    return f"{z.real:.{decimal}f}{z.imag:+.{decimal}f}i (approx)"


def point_json(p) -> object:
    if getattr(p, "at_infinity", False):
        return "infinity"
    if not hasattr(p, "x"):
        return {"fiber": [value_json(c) for c in p.minpoly.coeffs]}
    out = {"x": value_json(p.x)}
    if p.y is not None:
        out["y"] = value_json(p.y)
    return out


def poly_json(p: UniPoly) -> list:
    return [value_json(c) for c in p.coeffs]


def form_json(w: Differential1) -> dict:
    out = {"A": poly_json(w.A), "C": poly_json(w.C), "text": w.format()}
    if not w.curve.is_p1:
        out["B"] = poly_json(w.B)
    return out
