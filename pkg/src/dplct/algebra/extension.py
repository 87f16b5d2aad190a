"""Arithmetic in ``Q[a]/(q)`` for a monic squarefree ``q``.

When ``q`` is irreducible this is a number field.  When it is not, the
ring is a product of fields and an inversion may hit a zero divisor; that
raises :class:`ExtensionSplit` carrying the factor of ``q`` it found, so a
caller can split the modulus and rerun on each piece.
"""

from __future__ import annotations

from fractions import Fraction

from .upoly import UPoly, gcd, xgcd

try:  # GMP rationals make degree 24 field arithmetic several times faster
    from gmpy2 import mpq as _rational
except ImportError:  # pragma: no cover
    _rational = Fraction


def _fast(u: UPoly) -> UPoly:
    return UPoly([_rational(c) for c in u.coeffs])


class ExtensionSplit(ZeroDivisionError):
    """Inversion met a zero divisor; ``factor`` is a proper factor of the modulus."""

    def __init__(self, factor: UPoly, modulus: UPoly):
        super().__init__(f"zero divisor: modulus {modulus} has factor {factor}")
        self.factor = factor
        self.cofactor = modulus // factor
        self.modulus = modulus


class NumberField:
    """The ring ``Q[a]/(modulus)``; ``modulus`` must be monic and squarefree."""

    __slots__ = ("modulus", "name")

    def __init__(self, modulus: UPoly, name: str = "a"):
        if modulus.degree < 1:
            raise ValueError("extension modulus must have positive degree")
        modulus = _fast(modulus.monic())
        if gcd(modulus, modulus.derivative()).degree > 0:
            raise ValueError(f"extension modulus {modulus} is not squarefree")
        self.modulus = modulus
        self.name = name

    @property
    def degree(self) -> int:
        return self.modulus.degree

    def __eq__(self, other) -> bool:
        return isinstance(other, NumberField) and self.modulus == other.modulus

    def __hash__(self):
        return hash(self.modulus.coeffs)

    def __repr__(self) -> str:
        return f"NumberField({self.modulus})"

    def __call__(self, value) -> "ExtScalar":
        if isinstance(value, ExtScalar):
            if value.field != self:
                raise ValueError("element belongs to a different extension")
            return value
        if isinstance(value, UPoly):
            return ExtScalar(self, _fast(value))
        if not isinstance(value, (int, Fraction)) and type(value) is not _rational:
            value = Fraction(value)
        return ExtScalar(self, UPoly([_rational(value)]))

    @property
    def gen(self) -> "ExtScalar":
        return ExtScalar(self, UPoly([_rational(0), _rational(1)]))

    @property
    def zero(self) -> "ExtScalar":
        return ExtScalar(self, UPoly())

    @property
    def one(self) -> "ExtScalar":
        return ExtScalar(self, UPoly([_rational(1)]))


class ExtScalar:
    __slots__ = ("field", "value")

    def __init__(self, field: NumberField, value: UPoly):
        self.field = field
        self.value = value % field.modulus if value.degree >= field.degree else value

    @property
    def modulus(self) -> UPoly:
        return self.field.modulus

    def _lift(self, other) -> "ExtScalar":
        if isinstance(other, ExtScalar):
            if other.field is not self.field and other.field != self.field:
                raise ValueError("mixed extensions in one computation")
            return other
        if isinstance(other, (int, Fraction)) or type(other) is _rational:
            return ExtScalar(self.field, UPoly([_rational(other)]))
        return NotImplemented

    def __bool__(self) -> bool:
        return bool(self.value)

    def is_rational(self) -> bool:
        return self.value.degree <= 0

    def rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        c = self.value[0]
        return Fraction(int(c.numerator), int(c.denominator))

    def __eq__(self, other) -> bool:
        o = self._lift(other)
        if o is NotImplemented:
            return False
        return not (self.value - o.value)

    def __hash__(self):
        return hash((self.field, self.value.coeffs))

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return ExtScalar(self.field, self.value + o.value)

    __radd__ = __add__

    def __neg__(self):
        return ExtScalar(self.field, -self.value)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return ExtScalar(self.field, self.value - o.value)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return ExtScalar(self.field, (self.value * o.value) % self.field.modulus)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self * ext_invert(o)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o * ext_invert(self)

    def __pow__(self, n: int):
        if n < 0:
            return ext_invert(self) ** (-n)
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __repr__(self) -> str:
        return f"ExtScalar({self.value} mod {self.field.modulus})"

    def __str__(self) -> str:
        from .upoly import format_upoly

        return format_upoly(self.value, self.field.name)


def ext_invert(x: ExtScalar) -> ExtScalar:
    """Inverse of ``x`` modulo the field's modulus by extended Euclid.

    Raises ``ZeroDivisionError`` for zero and :class:`ExtensionSplit` when
    ``x`` is a nonzero zero divisor.
    """
    if not x.value:
        raise ZeroDivisionError("division by zero in extension")
    d, u, _ = xgcd(x.value, x.field.modulus)
    if d.degree > 0:
        raise ExtensionSplit(d, x.field.modulus)
    return ExtScalar(x.field, u)


def is_zero(c) -> bool:
    """Exact zero test that refuses to guess on zero divisors."""
    if isinstance(c, ExtScalar) and c.value:
        d = gcd(c.value, c.field.modulus)
        if d.degree > 0 and d.degree < c.field.degree:
            raise ExtensionSplit(d, c.field.modulus)
    return not c
