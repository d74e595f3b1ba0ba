"""Symmetric bilinear composition laws on the plane, in coordinates.

A law F is stored by the six coefficients (a1, b1, c1, a2, b2, c2) of its
two symmetric Gram matrices: the first component of F(x, y) is
x^T (a1 b1; b1 c1) y and the second is x^T (a2 b2; b2 c2) y.

The attached quadratic form q_F(x) = det(F_x) (F_x the endomorphism
y -> F(x, y)), the trace covector, the equivariant section sigma of the
trace, traceless parts, regularity and the two rational invariants of
regular laws are all computed here, exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotRegular, SingularMap, SpecMismatch
from .field import FieldElement, FieldSpec


@dataclass(frozen=True)
class Vec2:
    x1: FieldElement
    x2: FieldElement

    def is_zero(self) -> bool:
        return self.x1.is_zero() and self.x2.is_zero()

    def scale(self, s: FieldElement) -> "Vec2":
        return Vec2(s * self.x1, s * self.x2)


@dataclass(frozen=True)
class Mat2:
    """Row-major 2x2 matrix over a field."""

    m11: FieldElement
    m12: FieldElement
    m21: FieldElement
    m22: FieldElement

    @staticmethod
    def identity(spec: FieldSpec) -> "Mat2":
        return Mat2(spec.one, spec.zero, spec.zero, spec.one)

    @staticmethod
    def from_columns(c1: Vec2, c2: Vec2) -> "Mat2":
        return Mat2(c1.x1, c2.x1, c1.x2, c2.x2)

    def det(self) -> FieldElement:
        return self.m11 * self.m22 - self.m12 * self.m21

    def inv(self) -> "Mat2":
        d = self.det()
        if d.is_zero():
            raise SingularMap("matrix is not invertible")
        return Mat2(self.m22 / d, -self.m12 / d, -self.m21 / d, self.m11 / d)

    def __matmul__(self, other: "Mat2") -> "Mat2":
        return Mat2(
            self.m11 * other.m11 + self.m12 * other.m21,
            self.m11 * other.m12 + self.m12 * other.m22,
            self.m21 * other.m11 + self.m22 * other.m21,
            self.m21 * other.m12 + self.m22 * other.m22,
        )

    def apply(self, v: Vec2) -> Vec2:
        return Vec2(self.m11 * v.x1 + self.m12 * v.x2, self.m21 * v.x1 + self.m22 * v.x2)


@dataclass(frozen=True)
class Covector:
    l1: FieldElement
    l2: FieldElement

    def apply(self, v: Vec2) -> FieldElement:
        return self.l1 * v.x1 + self.l2 * v.x2

    def compose(self, u: Mat2) -> "Covector":
        """The covector x -> self(u(x))."""
        return Covector(self.l1 * u.m11 + self.l2 * u.m21, self.l1 * u.m12 + self.l2 * u.m22)

    def is_zero(self) -> bool:
        return self.l1.is_zero() and self.l2.is_zero()


@dataclass(frozen=True)
class QuadraticForm:
    """q(x) = q11*x1^2 + 2*q12*x1*x2 + q22*x2^2 (Gram entries)."""

    q11: FieldElement
    q12: FieldElement
    q22: FieldElement

    def value(self, v: Vec2) -> FieldElement:
        return (
            self.q11 * v.x1 * v.x1
            + 2 * self.q12 * v.x1 * v.x2
            + self.q22 * v.x2 * v.x2
        )

    def polar(self, x: Vec2, y: Vec2) -> FieldElement:
        """The symmetric bilinear form with q(x) = polar(x, x)."""
        return (
            self.q11 * x.x1 * y.x1
            + self.q12 * (x.x1 * y.x2 + x.x2 * y.x1)
            + self.q22 * x.x2 * y.x2
        )

    def gram_det(self) -> FieldElement:
        return self.q11 * self.q22 - self.q12 * self.q12

    def is_degenerate(self) -> bool:
        return self.gram_det().is_zero()

    def compose(self, u: Mat2) -> "QuadraticForm":
        """The form x -> self(u(x))."""
        a = self.value(Vec2(u.m11, u.m21))
        c = self.value(Vec2(u.m12, u.m22))
        b = self.polar(Vec2(u.m11, u.m21), Vec2(u.m12, u.m22))
        return QuadraticForm(a, b, c)


class SBL:
    """A symmetric bilinear composition law in a fixed basis."""

    __slots__ = ("a1", "b1", "c1", "a2", "b2", "c2", "spec")

    def __init__(self, spec: FieldSpec, a1, b1, c1, a2, b2, c2):
        self.spec = spec
        self.a1 = spec.element(a1)
        self.b1 = spec.element(b1)
        self.c1 = spec.element(c1)
        self.a2 = spec.element(a2)
        self.b2 = spec.element(b2)
        self.c2 = spec.element(c2)

    def coeffs(self) -> tuple[FieldElement, ...]:
        return (self.a1, self.b1, self.c1, self.a2, self.b2, self.c2)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SBL):
            return NotImplemented
        return self.spec == other.spec and self.coeffs() == other.coeffs()

    def __hash__(self) -> int:
        return hash((self.spec, self.coeffs()))

    def __repr__(self) -> str:
        return f"SBL{tuple(c for c in self.coeffs())!r}"

    def __add__(self, other: "SBL") -> "SBL":
        if self.spec != other.spec:
            raise SpecMismatch("laws over different fields")
        return SBL(self.spec, *(a + b for a, b in zip(self.coeffs(), other.coeffs())))

    def __sub__(self, other: "SBL") -> "SBL":
        if self.spec != other.spec:
            raise SpecMismatch("laws over different fields")
        return SBL(self.spec, *(a - b for a, b in zip(self.coeffs(), other.coeffs())))

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs())

    # -- the operations of the coordinate calculus ----------------------

    def evaluate(self, x: Vec2, y: Vec2) -> Vec2:
        f1 = (
            self.a1 * x.x1 * y.x1
            + self.b1 * (x.x1 * y.x2 + x.x2 * y.x1)
            + self.c1 * x.x2 * y.x2
        )
        f2 = (
            self.a2 * x.x1 * y.x1
            + self.b2 * (x.x1 * y.x2 + x.x2 * y.x1)
            + self.c2 * x.x2 * y.x2
        )
        return Vec2(f1, f2)

    def endo(self, x: Vec2) -> Mat2:
        """The matrix of y -> F(x, y)."""
        return Mat2(
            self.a1 * x.x1 + self.b1 * x.x2,
            self.b1 * x.x1 + self.c1 * x.x2,
            self.a2 * x.x1 + self.b2 * x.x2,
            self.b2 * x.x1 + self.c2 * x.x2,
        )

    def qform(self) -> QuadraticForm:
        """The attached quadratic form x -> det(F_x)."""
        two = self.spec.element(2)
        return QuadraticForm(
            self.a1 * self.b2 - self.a2 * self.b1,
            (self.a1 * self.c2 - self.a2 * self.c1) / two,
            self.b1 * self.c2 - self.b2 * self.c1,
        )

    def trace(self) -> Covector:
        return Covector(self.a1 + self.b2, self.b1 + self.c2)

    def traceless_part(self) -> "SBL":
        return self - sigma(self.trace(), self.spec)

    def det_qbar(self) -> FieldElement:
        """Gram determinant of the attached form of the traceless part."""
        return self.traceless_part().qform().gram_det()

    def is_regular(self) -> bool:
        return not self.det_qbar().is_zero()

    def invariants(self) -> tuple[FieldElement, FieldElement]:
        """The pair of rational invariants of a regular law."""
        d = self.det_qbar()
        if d.is_zero():
            raise NotRegular("law has degenerate traceless form")
        t1 = self.a1 + self.b2
        t2 = self.b1 + self.c2
        u1 = 2 * self.b1 - self.c2
        u2 = 2 * self.b2 - self.a1
        i1 = (
            t1 * t1 * (u1 * u1 + 3 * u2 * self.c1)
            + t1 * t2 * (u2 * u1 - 9 * self.a2 * self.c1)
            + t2 * t2 * (u2 * u2 + 3 * u1 * self.a2)
        ) / (12 * d)
        i2 = (
            -self.c1 * t1**3
            + t1 * t1 * t2 * u1
            + t1 * t2 * t2 * u2
            - self.a2 * t2**3
        ) / (4 * d)
        return i1, i2


def sigma(v: Covector, spec: FieldSpec) -> SBL:
    """The equivariant section of the trace: sigma(v)(x, y) = (v(x)y + v(y)x)/3."""
    three = spec.element(3)
    return SBL(
        spec,
        2 * v.l1 / three,
        v.l2 / three,
        spec.zero,
        spec.zero,
        v.l1 / three,
        2 * v.l2 / three,
    )


def act(u: Mat2, F: SBL) -> SBL:
    """The transformed law (u.F)(x, y) = u(F(u^-1 x, u^-1 y))."""
    w = u.inv()
    col1 = Vec2(w.m11, w.m21)
    col2 = Vec2(w.m12, w.m22)
    va = u.apply(F.evaluate(col1, col1))
    vb = u.apply(F.evaluate(col1, col2))
    vc = u.apply(F.evaluate(col2, col2))
    return SBL(F.spec, va.x1, vb.x1, vc.x1, va.x2, vb.x2, vc.x2)
