"""The quadratic algebra F[tau]/(tau^2 + beta) with its norm and unit machinery.

This is the even part of the Clifford algebra of the binary form with Gram
matrix diag(-1, -beta): a two-dimensional commutative algebra spanned by 1
and tau, with tau^2 = -beta.  The norm N(x0 + x12*tau) = x0^2 + beta*x12^2
is multiplicative.  The algebra is *hyperbolic* when -beta is a square (it
splits as F x F) and *elliptic* otherwise (it is a quadratic field
extension).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

from .errors import (
    DegenerateInput,
    NotHyperbolic,
    SpecMismatch,
    Unsupported,
    ZeroDivisor,
)
from .field import FieldElement, FieldSpec, _icbrt


class QuadAlgebra:
    """F[tau]/(tau^2 + beta), beta a nonzero field scalar."""

    __slots__ = ("beta", "spec")

    def __init__(self, beta: FieldElement):
        if beta.is_zero():
            raise DegenerateInput("beta must be nonzero")
        self.beta = beta
        self.spec = beta.spec

    def __eq__(self, other) -> bool:
        return isinstance(other, QuadAlgebra) and self.beta == other.beta

    def __hash__(self) -> int:
        return hash(("quadalgebra", self.beta))

    def __repr__(self) -> str:
        return f"{self.spec!r}[tau]/(tau^2 + {self.beta!r})"

    def element(self, x0, x12=0) -> "QuadElement":
        return QuadElement(self.spec.element(x0), self.spec.element(x12), self)

    @property
    def zero(self) -> "QuadElement":
        return self.element(0, 0)

    @property
    def one(self) -> "QuadElement":
        return self.element(1, 0)

    @property
    def tau(self) -> "QuadElement":
        return self.element(0, 1)

    def is_hyperbolic(self) -> bool:
        return (-self.beta).is_square()

    def gamma(self) -> FieldElement:
        """The canonical square root of -beta (hyperbolic algebras only)."""
        g = (-self.beta).sqrt()
        if g is None:
            raise NotHyperbolic(f"-beta = {-self.beta!r} is not a square")
        return g

    def elements(self) -> Iterator["QuadElement"]:
        for x0 in self.spec.elements():
            for x12 in self.spec.elements():
                yield QuadElement(x0, x12, self)


class QuadElement:
    """x0 + x12*tau in a fixed QuadAlgebra."""

    __slots__ = ("x0", "x12", "algebra")

    def __init__(self, x0: FieldElement, x12: FieldElement, algebra: QuadAlgebra):
        self.x0 = x0
        self.x12 = x12
        self.algebra = algebra

    def _coerce(self, other) -> "QuadElement":
        if isinstance(other, QuadElement):
            if other.algebra != self.algebra:
                raise SpecMismatch("elements of different algebras")
            return other
        if isinstance(other, (int, Fraction, FieldElement)):
            return self.algebra.element(other)
        return NotImplemented  # type: ignore[return-value]

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, FieldElement)):
            other = self.algebra.element(other)
        if not isinstance(other, QuadElement):
            return NotImplemented
        return (
            self.algebra == other.algebra
            and self.x0 == other.x0
            and self.x12 == other.x12
        )

    def __hash__(self) -> int:
        return hash((self.x0, self.x12, self.algebra))

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_zero(self) -> bool:
        return self.x0.is_zero() and self.x12.is_zero()

    def is_scalar(self) -> bool:
        return self.x12.is_zero()

    def __repr__(self) -> str:
        return f"({self.x0!r} + {self.x12!r}t)"

    def __add__(self, other) -> "QuadElement":
        other = self._coerce(other)
        return QuadElement(self.x0 + other.x0, self.x12 + other.x12, self.algebra)

    __radd__ = __add__

    def __sub__(self, other) -> "QuadElement":
        other = self._coerce(other)
        return QuadElement(self.x0 - other.x0, self.x12 - other.x12, self.algebra)

    def __neg__(self) -> "QuadElement":
        return QuadElement(-self.x0, -self.x12, self.algebra)

    def __mul__(self, other) -> "QuadElement":
        other = self._coerce(other)
        beta = self.algebra.beta
        return QuadElement(
            self.x0 * other.x0 - beta * self.x12 * other.x12,
            self.x0 * other.x12 + self.x12 * other.x0,
            self.algebra,
        )

    __rmul__ = __mul__

    def conj(self) -> "QuadElement":
        return QuadElement(self.x0, -self.x12, self.algebra)

    def norm(self) -> FieldElement:
        return self.x0 * self.x0 + self.algebra.beta * self.x12 * self.x12

    def inv(self) -> "QuadElement":
        n = self.norm()
        if n.is_zero():
            raise ZeroDivisor(f"{self!r} has norm zero")
        return QuadElement(self.x0 / n, -self.x12 / n, self.algebra)

    def __truediv__(self, other) -> "QuadElement":
        return self * self._coerce(other).inv()

    def __pow__(self, n: int) -> "QuadElement":
        if n < 0:
            return self.inv() ** (-n)
        result = self.algebra.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_zero_divisor(self) -> bool:
        if self.is_zero():
            raise DegenerateInput("zero has no zero-divisor status")
        return self.norm().is_zero()


@dataclass(frozen=True)
class SplitPair:
    """Image of an element under the splitting F[tau]/(tau^2 - gamma^2) -> F x F."""

    first: FieldElement
    second: FieldElement
    gamma: FieldElement


def split(x: QuadElement) -> SplitPair:
    """(u + v*tau) -> (u - v*gamma, u + v*gamma), gamma the canonical sqrt(-beta)."""
    g = x.algebra.gamma()
    return SplitPair(x.x0 - x.x12 * g, x.x0 + x.x12 * g, g)


def unsplit(algebra: QuadAlgebra, first: FieldElement, second: FieldElement) -> QuadElement:
    g = algebra.gamma()
    two = algebra.spec.element(2)
    return QuadElement((first + second) / two, (second - first) / (two * g), algebra)


_norm_one_cache: dict = {}


def norm_one_group(algebra: QuadAlgebra) -> list[QuadElement]:
    """All elements of norm one; size p+1 (elliptic) or p-1 (hyperbolic)."""
    if algebra.spec.kind != "prime":
        raise Unsupported("norm-one group enumeration needs a finite field")
    group = _norm_one_cache.get(algebra)
    if group is None:
        group = [x for x in algebra.elements() if x.norm() == 1]
        _norm_one_cache[algebra] = group
    return group


def _height(x: QuadElement) -> int:
    vals = [x.x0.value, x.x12.value]
    return max(max(abs(v.numerator), v.denominator) for v in vals)


def _bounded_cube_search(y: QuadElement, extra: int = 2) -> list[QuadElement]:
    """All lambda = (n1 + n2*tau)/m with small height and lambda^3 == y.

    Complete only up to the height bound; callers over the rationals must
    treat an empty result as inconclusive.
    """
    alg = y.algebra
    bound = _icbrt(_height(y)) + extra
    found = []
    for m in range(1, bound + 1):
        r = m * bound
        for n1 in range(-r, r + 1):
            for n2 in range(-r, r + 1):
                lam = alg.element(Fraction(n1, m), Fraction(n2, m))
                if lam**3 == y and lam not in found:
                    found.append(lam)
    return found


def solve_cube(
    algebra: QuadAlgebra, y: QuadElement, within_norm_one: bool = False
) -> list[QuadElement]:
    """All lambda with lambda^3 == y, optionally restricted to the norm-one group.

    Over the rationals with an elliptic algebra the search is height-bounded
    and may miss roots; see :func:`cube_roots_complete` for the certificate.
    """
    if y.is_zero():
        raise DegenerateInput("y must be nonzero")
    if within_norm_one and y.norm() != 1:
        raise ValueError("y must have norm one to solve within the norm-one group")
    if algebra.spec.kind == "prime":
        candidates = (
            norm_one_group(algebra) if within_norm_one else algebra.elements()
        )
        return [lam for lam in candidates if lam**3 == y]
    if algebra.is_hyperbolic():
        s = split(y)
        r1 = algebra.spec.element(s.first).cube_roots()
        r2 = algebra.spec.element(s.second).cube_roots()
        roots = [unsplit(algebra, a, b) for a in r1 for b in r2]
    else:
        roots = _bounded_cube_search(y)
    if within_norm_one:
        roots = [lam for lam in roots if lam.norm() == 1]
    return roots


def cube_roots_complete(algebra: QuadAlgebra, found: int) -> bool:
    """Whether a nonempty cube-root set of size `found` is provably complete.

    The cube roots of a fixed element differ by cube roots of unity, of
    which there are 3 exactly when -3 is a square in the algebra and 1
    otherwise.  Works over any supported field.
    """
    if algebra.spec.kind == "prime":
        return True
    if found >= 3:
        return True
    minus3 = algebra.spec.element(-3)
    if algebra.is_hyperbolic():
        three_roots = minus3.is_square()
    else:
        # -3 = (u + v*tau)^2 forces u*v = 0; u^2 = -3 is impossible over Q,
        # so -3 is a square iff -3 = -beta*v^2, i.e. 3/beta is a square.
        three_roots = (algebra.spec.element(3) / algebra.beta).is_square()
    return found == 1 and not three_roots


def is_cube(algebra: QuadAlgebra, y: QuadElement) -> Optional[bool]:
    """Whether y is a cube of a unit; None when the bounded search is inconclusive."""
    if y.norm().is_zero():
        raise ZeroDivisor("cube membership is defined on units only")
    spec = algebra.spec
    if spec.kind == "prime":
        p = spec.p
        if algebra.is_hyperbolic():
            s = split(y)
            if p % 3 != 1:
                return True
            return all(
                pow(c.value, (p - 1) // 3, p) == 1 for c in (s.first, s.second)
            )
        d = 3 if (p * p - 1) % 3 == 0 else 1
        return y ** ((p * p - 1) // d) == algebra.one
    if algebra.is_hyperbolic():
        s = split(y)
        return bool(
            spec.element(s.first).cube_roots() and spec.element(s.second).cube_roots()
        )
    if y.is_scalar() and y.x0.cube_roots():
        return True
    if _bounded_cube_search(y):
        return True
    return None
