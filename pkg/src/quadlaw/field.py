"""Exact scalar arithmetic over GF(p), p >= 5, and over the rationals.

Every value is immutable and canonical: residues live in 0..p-1, rationals
are reduced fractions with positive denominator (``fractions.Fraction``
guarantees both).  Square and cube root extraction are exact predicates;
absence of a root is reported, never approximated.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterator, Optional, Union

from .errors import BadCharacteristic, DegenerateInput, SpecMismatch, Unsupported

Scalar = Union[int, Fraction, str, "FieldElement"]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _icbrt(n: int) -> int:
    """Floor integer cube root of n >= 0."""
    if n < 0:
        raise ValueError("negative")
    if n == 0:
        return 0
    x = 1 << ((n.bit_length() + 2) // 3)
    while True:
        y = (2 * x + n // (x * x)) // 3
        if y >= x:
            break
        x = y
    while x * x * x > n:
        x -= 1
    return x


def _int_cube_root(n: int) -> Optional[int]:
    """Exact integer cube root of n (any sign), or None."""
    s = -1 if n < 0 else 1
    r = _icbrt(abs(n))
    return s * r if r * r * r == abs(n) else None


def _tonelli_shanks(a: int, p: int) -> int:
    """A square root of a mod p, assuming one exists and p is an odd prime."""
    if a == 0:
        return 0
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    # write p-1 = q * 2^s with q odd
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


class FieldSpec:
    """GF(p) with p >= 5 prime, or the field of rationals."""

    __slots__ = ("kind", "p")

    def __init__(self, kind: str, p: Optional[int] = None):
        if kind == "prime":
            if p in (2, 3):
                raise BadCharacteristic(f"characteristic {p} is excluded")
            if p is None or not _is_prime(p):
                raise ValueError(f"{p} is not prime")
            self.kind = "prime"
            self.p = p
        elif kind == "rational":
            self.kind = "rational"
            self.p = None
        else:
            raise ValueError(f"unknown field kind {kind!r}")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FieldSpec)
            and self.kind == other.kind
            and self.p == other.p
        )

    def __hash__(self) -> int:
        return hash((self.kind, self.p))

    def __repr__(self) -> str:
        return f"GF({self.p})" if self.kind == "prime" else "QQ"

    # -- construction -------------------------------------------------

    def element(self, value: Scalar) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.spec != self:
                raise SpecMismatch(f"{value!r} is not in {self!r}")
            return value
        if isinstance(value, str):
            value = Fraction(value)
        if self.kind == "prime":
            if isinstance(value, Fraction):
                num = value.numerator % self.p
                den = value.denominator % self.p
                return FieldElement(self, num * pow(den, -1, self.p) % self.p)
            return FieldElement(self, value % self.p)
        return FieldElement(self, Fraction(value))

    @property
    def zero(self) -> "FieldElement":
        return self.element(0)

    @property
    def one(self) -> "FieldElement":
        return self.element(1)

    def elements(self) -> Iterator["FieldElement"]:
        """All field elements, prime kind only."""
        if self.kind != "prime":
            raise Unsupported("cannot enumerate the rationals")
        for v in range(self.p):
            yield FieldElement(self, v)


def prime_field(p: int) -> FieldSpec:
    return FieldSpec("prime", p)


def rationals() -> FieldSpec:
    return FieldSpec("rational")


class FieldElement:
    """A canonical scalar tied to a :class:`FieldSpec`."""

    __slots__ = ("spec", "value")

    def __init__(self, spec: FieldSpec, value):
        self.spec = spec
        self.value = value

    # -- plumbing ------------------------------------------------------

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.spec != self.spec:
                raise SpecMismatch(f"{self.spec!r} vs {other.spec!r}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.spec.element(other)
        return NotImplemented  # type: ignore[return-value]

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self.spec.element(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.spec == other.spec and self.value == other.value

    def __hash__(self) -> int:
        return hash((self.spec, self.value))

    def __bool__(self) -> bool:
        return self.value != 0

    def is_zero(self) -> bool:
        return self.value == 0

    def __repr__(self) -> str:
        return f"{self.value}"

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other) -> "FieldElement":
        other = self._coerce(other)
        if self.spec.kind == "prime":
            return FieldElement(self.spec, (self.value + other.value) % self.spec.p)
        return FieldElement(self.spec, self.value + other.value)

    __radd__ = __add__

    def __sub__(self, other) -> "FieldElement":
        other = self._coerce(other)
        if self.spec.kind == "prime":
            return FieldElement(self.spec, (self.value - other.value) % self.spec.p)
        return FieldElement(self.spec, self.value - other.value)

    def __rsub__(self, other) -> "FieldElement":
        return self._coerce(other) - self

    def __mul__(self, other) -> "FieldElement":
        other = self._coerce(other)
        if self.spec.kind == "prime":
            return FieldElement(self.spec, self.value * other.value % self.spec.p)
        return FieldElement(self.spec, self.value * other.value)

    __rmul__ = __mul__

    def __neg__(self) -> "FieldElement":
        if self.spec.kind == "prime":
            return FieldElement(self.spec, -self.value % self.spec.p)
        return FieldElement(self.spec, -self.value)

    def inv(self) -> "FieldElement":
        if self.value == 0:
            raise DegenerateInput("division by zero")
        if self.spec.kind == "prime":
            return FieldElement(self.spec, pow(self.value, -1, self.spec.p))
        return FieldElement(self.spec, 1 / self.value)

    def __truediv__(self, other) -> "FieldElement":
        return self * self._coerce(other).inv()

    def __rtruediv__(self, other) -> "FieldElement":
        return self._coerce(other) * self.inv()

    def __pow__(self, n: int) -> "FieldElement":
        if n < 0:
            return self.inv() ** (-n)
        if self.spec.kind == "prime":
            return FieldElement(self.spec, pow(self.value, n, self.spec.p))
        return FieldElement(self.spec, self.value**n)

    # -- roots ---------------------------------------------------------

    def is_square(self) -> bool:
        if self.value == 0:
            return True
        if self.spec.kind == "prime":
            return pow(self.value, (self.spec.p - 1) // 2, self.spec.p) == 1
        if self.value < 0:
            return False
        n, d = self.value.numerator, self.value.denominator
        return math.isqrt(n) ** 2 == n and math.isqrt(d) ** 2 == d

    def sqrt(self) -> Optional["FieldElement"]:
        """The canonical square root, or None.

        For GF(p) the smaller of the two residues is returned; for the
        rationals the positive root.
        """
        if not self.is_square():
            return None
        if self.spec.kind == "prime":
            p = self.spec.p
            if p <= 10_000:
                r = next(y for y in range(p) if y * y % p == self.value)
            else:
                r = _tonelli_shanks(self.value, p)
            return FieldElement(self.spec, min(r, (p - r) % p))
        n, d = self.value.numerator, self.value.denominator
        return FieldElement(self.spec, Fraction(math.isqrt(n), math.isqrt(d)))

    def cube_roots(self) -> list["FieldElement"]:
        """All y in the field with y**3 == self, sorted canonically."""
        if self.spec.kind == "rational":
            n = _int_cube_root(self.value.numerator)
            d = _int_cube_root(self.value.denominator)
            if n is None or d is None:
                return []
            return [FieldElement(self.spec, Fraction(n, d))]
        p = self.spec.p
        x = self.value
        if x == 0:
            return [self.spec.zero]
        if p % 3 != 1:
            # cubing is a bijection on GF(p)*
            s = pow(3, -1, p - 1)
            return [FieldElement(self.spec, pow(x, s, p))]
        if pow(x, (p - 1) // 3, p) != 1:
            return []
        r = next(y for y in range(1, p) if pow(y, 3, p) == x)
        omegas = [w for w in range(1, p) if pow(w, 3, p) == 1]
        return sorted(
            (FieldElement(self.spec, r * w % p) for w in omegas),
            key=lambda e: e.value,
        )
