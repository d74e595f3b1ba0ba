"""JSON serialization for every documented wire format.

Field specs: {"type": "prime", "p": 5} or {"type": "rational"}.  Prime-field
values are integers 0..p-1; rationals are strings "num/den" with positive
denominator.
"""

from __future__ import annotations

from fractions import Fraction

from .classify import (
    DiagonalBasis,
    EquivResult,
    GTransform,
    IsotropyDescription,
    NormalForm,
)
from .clifford import QuadAlgebra, QuadElement
from .field import FieldElement, FieldSpec, prime_field, rationals
from .sbl import SBL, Mat2, Vec2

COEFF_NAMES = ("a1", "b1", "c1", "a2", "b2", "c2")


class FormatError(ValueError):
    """Malformed or schema-violating JSON input."""


def spec_to_json(spec: FieldSpec) -> dict:
    if spec.kind == "prime":
        return {"type": "prime", "p": spec.p}
    return {"type": "rational"}


def spec_from_json(obj) -> FieldSpec:
    try:
        if obj["type"] == "prime":
            return prime_field(int(obj["p"]))
        if obj["type"] == "rational":
            return rationals()
    except (KeyError, TypeError) as e:
        raise FormatError(f"bad field spec: {obj!r}") from e
    raise FormatError(f"unknown field type {obj.get('type')!r}")


def value_to_json(x: FieldElement):
    if x.spec.kind == "prime":
        return x.value
    return f"{x.value.numerator}/{x.value.denominator}"


def value_from_json(spec: FieldSpec, v) -> FieldElement:
    try:
        if isinstance(v, str):
            return spec.element(Fraction(v))
        if isinstance(v, int):
            return spec.element(v)
    except (ValueError, ZeroDivisionError) as e:
        raise FormatError(f"bad field value {v!r}") from e
    raise FormatError(f"bad field value {v!r}")


def sbl_to_json(F: SBL) -> dict:
    return {
        "field": spec_to_json(F.spec),
        "coeffs": {n: value_to_json(c) for n, c in zip(COEFF_NAMES, F.coeffs())},
    }


def sbl_from_json(obj) -> SBL:
    try:
        spec = spec_from_json(obj["field"])
        coeffs = [value_from_json(spec, obj["coeffs"][n]) for n in COEFF_NAMES]
    except (KeyError, TypeError) as e:
        raise FormatError(f"bad law object: {e}") from e
    return SBL(spec, *coeffs)


def mat2_to_json(u: Mat2) -> dict:
    return {
        "m": [
            [value_to_json(u.m11), value_to_json(u.m12)],
            [value_to_json(u.m21), value_to_json(u.m22)],
        ]
    }


def mat2_from_json(spec: FieldSpec, obj) -> Mat2:
    try:
        rows = obj["m"]
        return Mat2(
            value_from_json(spec, rows[0][0]),
            value_from_json(spec, rows[0][1]),
            value_from_json(spec, rows[1][0]),
            value_from_json(spec, rows[1][1]),
        )
    except (KeyError, IndexError, TypeError) as e:
        raise FormatError(f"bad matrix object: {e}") from e


def quad_element_to_json(x: QuadElement) -> dict:
    return {"x0": value_to_json(x.x0), "x12": value_to_json(x.x12)}


def quad_element_from_json(alg: QuadAlgebra, obj) -> QuadElement:
    try:
        return alg.element(
            value_from_json(alg.spec, obj["x0"]), value_from_json(alg.spec, obj["x12"])
        )
    except (KeyError, TypeError) as e:
        raise FormatError(f"bad algebra element: {e}") from e


def normal_form_to_json(nf: NormalForm) -> dict:
    out = {
        "field": spec_to_json(nf.algebra.spec),
        "beta": value_to_json(nf.algebra.beta),
        "a": quad_element_to_json(nf.a),
        "c": quad_element_to_json(nf.c),
    }
    if nf.basis is not None:
        out["basis"] = {
            "v1": [value_to_json(nf.basis.v1.x1), value_to_json(nf.basis.v1.x2)],
            "v2": [value_to_json(nf.basis.v2.x1), value_to_json(nf.basis.v2.x2)],
        }
    return out


def normal_form_from_json(obj) -> NormalForm:
    try:
        spec = spec_from_json(obj["field"])
        beta = value_from_json(spec, obj["beta"])
        alg = QuadAlgebra(beta)
        a = quad_element_from_json(alg, obj["a"])
        c = quad_element_from_json(alg, obj["c"])
        basis = None
        if "basis" in obj:
            b = obj["basis"]
            basis = DiagonalBasis(
                Vec2(value_from_json(spec, b["v1"][0]), value_from_json(spec, b["v1"][1])),
                Vec2(value_from_json(spec, b["v2"][0]), value_from_json(spec, b["v2"][1])),
                beta,
            )
    except (KeyError, IndexError, TypeError) as e:
        raise FormatError(f"bad normal form object: {e}") from e
    return NormalForm(alg, a, c, basis)


def gtransform_to_json(t: GTransform) -> dict:
    return {"kind": t.kind, "lambda": quad_element_to_json(t.lam)}


def equiv_result_to_json(r: EquivResult) -> dict:
    out: dict = {"verdict": r.verdict}
    if r.witness is not None:
        out["witness"] = mat2_to_json(r.witness)
    if r.transform is not None:
        out["transform"] = gtransform_to_json(r.transform)
    if r.reason is not None:
        out["reason"] = r.reason
    return out


def isotropy_to_json(d: IsotropyDescription) -> dict:
    return {
        "case": d.case_tag,
        "order": d.order(),
        "phi_lambdas": [quad_element_to_json(x) for x in d.phi_lambdas],
        "psi_lambdas": [quad_element_to_json(x) for x in d.psi_lambdas],
        "complete": d.complete,
    }
