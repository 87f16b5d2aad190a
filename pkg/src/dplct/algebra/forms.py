"""Binary and ternary forms over Q, resultants and root-multiplicity data."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Sequence

from .factor import factor_rational
from .linalg import determinant
from .upoly import UPoly, gcd, squarefree_decomposition


def _frac(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


def sylvester_matrix(f: Sequence, g: Sequence) -> list[list]:
    """Sylvester matrix of two coefficient lists given highest degree first.

    The list lengths fix the formal degrees, so leading zeros are kept and
    the determinant is the homogeneous resultant.
    """
    d, e = len(f) - 1, len(g) - 1
    n = d + e
    zero = (f[0] if f else g[0]) * 0
    rows = []
    for i in range(e):
        rows.append([zero] * i + list(f) + [zero] * (n - d - 1 - i))
    for i in range(d):
        rows.append([zero] * i + list(g) + [zero] * (n - e - 1 - i))
    return rows


def sylvester_resultant(f: Sequence, g: Sequence):
    if len(f) == 1 and len(g) == 1:
        return (f[0] * 0 + 1) if not isinstance(f[0], int) else Fraction(1)
    return determinant(sylvester_matrix(f, g))


def interpolate(xs: Sequence[Fraction], ys: Sequence) -> UPoly:
    """Newton interpolation through distinct nodes."""
    n = len(xs)
    coef = list(ys)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    poly = UPoly([coef[-1]])
    for i in range(n - 2, -1, -1):
        poly = poly * UPoly([-xs[i], Fraction(1)]) + coef[i]
    return poly


@dataclass(frozen=True)
class BinaryForm:
    """A form of degree ``degree`` in (s, t).

    ``coeffs[i]`` multiplies ``s**(degree - i) * t**i``.
    """

    degree: int
    coeffs: tuple

    def __post_init__(self):
        if self.degree < 0 or len(self.coeffs) != self.degree + 1:
            raise ValueError("binary form needs exactly degree+1 coefficients")
        object.__setattr__(self, "coeffs", tuple(_frac(c) for c in self.coeffs))

    @classmethod
    def from_dict(cls, degree: int, terms: dict) -> "BinaryForm":
        """``terms`` maps the exponent of ``s`` to a coefficient."""
        coeffs = [Fraction(0)] * (degree + 1)
        for i, c in terms.items():
            if not 0 <= i <= degree:
                raise ValueError(f"exponent {i} outside degree {degree}")
            coeffs[degree - i] += c
        return cls(degree, tuple(coeffs))

    @classmethod
    def zero(cls, degree: int) -> "BinaryForm":
        return cls(degree, (Fraction(0),) * (degree + 1))

    @classmethod
    def from_upoly(cls, u: UPoly, degree: int | None = None) -> "BinaryForm":
        """Homogenize ``u(s)`` to a form of the given degree in (s, t)."""
        d = u.degree if degree is None else degree
        if d < u.degree:
            raise ValueError("homogenizing degree below polynomial degree")
        d = max(d, 0)
        return cls(d, tuple(u[d - i] for i in range(d + 1)))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def dehomogenize(self) -> UPoly:
        """``f(s, 1)``."""
        return UPoly([self.coeffs[self.degree - k] for k in range(self.degree + 1)])

    def ord_infinity(self) -> int:
        """Multiplicity of the root (1:0), i.e. the power of ``t`` dividing f."""
        if self.is_zero():
            raise ValueError("zero form has no finite root multiplicities")
        k = 0
        while not self.coeffs[k]:
            k += 1
        return k

    def monic(self) -> "BinaryForm":
        lead = next((c for c in self.coeffs if c), None)
        if lead is None:
            return self
        return BinaryForm(self.degree, tuple(c / lead for c in self.coeffs))

    def __add__(self, other: "BinaryForm") -> "BinaryForm":
        if self.degree != other.degree:
            raise ValueError("adding forms of different degrees")
        return BinaryForm(self.degree, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "BinaryForm") -> "BinaryForm":
        return self + other.scale(-1)

    def scale(self, c) -> "BinaryForm":
        return BinaryForm(self.degree, tuple(a * c for a in self.coeffs))

    def __mul__(self, other):
        if not isinstance(other, BinaryForm):
            return self.scale(other)
        d = self.degree + other.degree
        out = [Fraction(0)] * (d + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return BinaryForm(d, tuple(out))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "BinaryForm":
        result = BinaryForm(0, (Fraction(1),))
        for _ in range(n):
            result = result * self
        return result

    def __call__(self, s, t):
        acc = 0
        for i, c in enumerate(self.coeffs):
            if c:
                acc = acc + c * s ** (self.degree - i) * t ** i
        return acc

    def substitute(self, matrix: Sequence[Sequence]) -> "BinaryForm":
        """``f(a*s + b*t, c*s + d*t)`` for ``matrix = [[a, b], [c, d]]``."""
        (a, b), (c, d) = matrix
        ls = BinaryForm(1, (a, b))
        lt = BinaryForm(1, (c, d))
        out = BinaryForm.zero(self.degree)
        for i, coef in enumerate(self.coeffs):
            if coef:
                out = out + (ls ** (self.degree - i) * lt ** i).scale(coef)
        return out

    def divides(self, other: "BinaryForm") -> bool:
        return exact_quotient(other, self) is not None

    def __str__(self) -> str:
        return format_binary(self)


def exact_quotient(f: BinaryForm, g: BinaryForm) -> BinaryForm | None:
    """``f / g`` when ``g`` divides ``f`` exactly, else ``None``."""
    if g.is_zero():
        raise ZeroDivisionError("division by the zero form")
    if f.is_zero():
        return BinaryForm.zero(max(f.degree - g.degree, 0))
    if g.degree > f.degree:
        return None
    kf, kg = f.ord_infinity(), g.ord_infinity()
    if kg > kf:
        return None
    q, r = f.dehomogenize().divmod(g.dehomogenize())
    if r:
        return None
    return BinaryForm.from_upoly(q, f.degree - g.degree)


def gcd_binary(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    """Monic gcd of two binary forms, counting common roots at infinity."""
    if f.is_zero() and g.is_zero():
        raise ValueError("undefined gcd")
    if g.is_zero():
        return f.monic()
    if f.is_zero():
        return g.monic()
    k = min(f.ord_infinity(), g.ord_infinity())
    u = gcd(f.dehomogenize(), g.dehomogenize())
    t_power = BinaryForm(k, (Fraction(0),) * k + (Fraction(1),))
    return (t_power * BinaryForm.from_upoly(u)).monic()


def resultant_binary(f: BinaryForm, g: BinaryForm) -> Fraction:
    """Homogeneous resultant: zero exactly when f, g share a projective root."""
    if f.is_zero() or g.is_zero():
        raise ValueError("resultant of a zero form")
    return sylvester_resultant(list(f.coeffs), list(g.coeffs))


def multiplicity_structure(f: BinaryForm) -> list[int]:
    """Sorted root multiplicities of ``f`` over the algebraic closure."""
    if f.is_zero():
        raise ValueError("zero form has no root multiplicities")
    out: list[int] = []
    k = f.ord_infinity()
    if k:
        out.append(k)
    for g, i in squarefree_decomposition(f.dehomogenize()):
        out.extend([i] * g.degree)
    return sorted(out)


def irreducible_factors(f: BinaryForm) -> list[tuple[BinaryForm, int]]:
    """Monic irreducible factors over Q with multiplicities (``t`` first)."""
    if f.is_zero():
        raise ValueError("cannot factor the zero form")
    out = []
    k = f.ord_infinity()
    if k:
        out.append((BinaryForm(1, (Fraction(0), Fraction(1))), k))
    for u, e in factor_rational(f.dehomogenize()):
        out.append((BinaryForm.from_upoly(u), e))
    return out


def order_along(f: BinaryForm, p: BinaryForm) -> int | float:
    """Largest ``e`` with ``p**e | f``; ``inf`` for the zero form."""
    if f.is_zero():
        return float("inf")
    e = 0
    while True:
        q = exact_quotient(f, p)
        if q is None:
            return e
        f, e = q, e + 1


def format_binary(f: BinaryForm, names: tuple[str, str] = ("s", "t")) -> str:
    terms = {}
    for i, c in enumerate(f.coeffs):
        if c:
            terms[(f.degree - i, i)] = c
    return format_terms(terms, names)


def format_terms(terms: dict, names: Sequence[str]) -> str:
    """Render ``{exponent tuple: coefficient}`` in the CLI polynomial grammar."""
    if not terms:
        return "0"
    parts = []
    for exps in sorted(terms, reverse=True):
        c = terms[exps]
        mono = "*".join(
            n if e == 1 else f"{n}^{e}" for n, e in zip(names, exps) if e
        )
        neg = c < 0
        a = -c if neg else c
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        parts.append(("-" if neg else "+", body))
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


@dataclass(frozen=True)
class TernaryForm:
    """A form of degree ``degree`` in (x, y, z); ``coeffs`` maps (i, j, k) to Q."""

    degree: int
    coeffs: tuple  # sorted tuple of ((i, j, k), Fraction), zero entries dropped

    def __post_init__(self):
        items = self.coeffs.items() if isinstance(self.coeffs, dict) else self.coeffs
        clean = {}
        for exps, c in items:
            exps = tuple(int(e) for e in exps)
            if len(exps) != 3 or min(exps) < 0 or sum(exps) != self.degree:
                raise ValueError(f"exponent {exps} does not have total degree {self.degree}")
            clean[exps] = clean.get(exps, Fraction(0)) + _frac(c)
        object.__setattr__(
            self, "coeffs", tuple(sorted((k, v) for k, v in clean.items() if v))
        )

    @property
    def terms(self) -> dict:
        return dict(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "TernaryForm") -> "TernaryForm":
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self.degree != other.degree:
            raise ValueError("adding forms of different degrees")
        t = self.terms
        for k, v in other.coeffs:
            t[k] = t.get(k, Fraction(0)) + v
        return TernaryForm(self.degree, t)

    def scale(self, c) -> "TernaryForm":
        return TernaryForm(self.degree, {k: v * c for k, v in self.coeffs})

    def __neg__(self) -> "TernaryForm":
        return self.scale(-1)

    def __sub__(self, other: "TernaryForm") -> "TernaryForm":
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, TernaryForm):
            return self.scale(other)
        out: dict = {}
        for (a, ca) in self.coeffs:
            for (b, cb) in other.coeffs:
                k = (a[0] + b[0], a[1] + b[1], a[2] + b[2])
                out[k] = out.get(k, Fraction(0)) + ca * cb
        return TernaryForm(self.degree + other.degree, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "TernaryForm":
        result = TernaryForm(0, {(0, 0, 0): 1})
        for _ in range(n):
            result = result * self
        return result

    def diff(self, var: int) -> "TernaryForm":
        out = {}
        for exps, c in self.coeffs:
            if exps[var]:
                e = list(exps)
                e[var] -= 1
                out[tuple(e)] = c * exps[var]
        return TernaryForm(max(self.degree - 1, 0), out)

    def __call__(self, x, y, z):
        acc = 0
        for (i, j, k), c in self.coeffs:
            acc = acc + c * x ** i * y ** j * z ** k
        return acc

    def restrict_z(self, x0, y0) -> list:
        """Coefficients of ``F(x0, y0, z)`` as a polynomial in z, highest first,
        padded to the formal degree."""
        out = [Fraction(0)] * (self.degree + 1)
        for (i, j, k), c in self.coeffs:
            out[self.degree - k] = out[self.degree - k] + c * x0 ** i * y0 ** j
        return out

    def substitute(self, matrix: Sequence[Sequence]) -> "TernaryForm":
        """``F(M @ (x, y, z))``."""
        lin = [
            TernaryForm(1, {(1, 0, 0): row[0], (0, 1, 0): row[1], (0, 0, 1): row[2]})
            for row in matrix
        ]
        powers = [[TernaryForm(0, {(0, 0, 0): 1})] for _ in range(3)]
        for v in range(3):
            for _ in range(self.degree):
                powers[v].append(powers[v][-1] * lin[v])
        out = TernaryForm(self.degree, {})
        for (i, j, k), c in self.coeffs:
            out = out + (powers[0][i] * powers[1][j] * powers[2][k]).scale(c)
        return out

    def hessian(self) -> "TernaryForm":
        second = [[self.diff(i).diff(j) for j in range(3)] for i in range(3)]
        (a, b, c), (d, e, f), (g, h, i) = second
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)

    def __str__(self) -> str:
        return format_terms(dict(self.coeffs), ("x", "y", "z"))


def eliminate_z(f: TernaryForm, g: TernaryForm) -> BinaryForm:
    """``Res_z(f, g)`` as a binary form in (x, y) of degree deg f * deg g.

    Computed by evaluating at ``y = 1`` on deg f * deg g + 1 rational
    abscissae and interpolating; the formal z-degrees are kept so the
    result is the homogeneous resultant.
    """
    d = f.degree * g.degree
    xs = [Fraction(i) for i in range(d + 1)]
    ys = [sylvester_resultant(f.restrict_z(x, 1), g.restrict_z(x, 1)) for x in xs]
    r = interpolate(xs, ys)
    return BinaryForm.from_upoly(r, d)


def monomials(degree: int, nvars: int = 3) -> list[tuple]:
    """Exponent tuples of the given total degree, in lexicographic order."""
    return sorted(
        (e for e in product(range(degree + 1), repeat=nvars) if sum(e) == degree),
        reverse=True,
    )


__all__ = [
    "BinaryForm",
    "TernaryForm",
    "eliminate_z",
    "exact_quotient",
    "gcd_binary",
    "interpolate",
    "irreducible_factors",
    "monomials",
    "multiplicity_structure",
    "order_along",
    "resultant_binary",
    "sylvester_resultant",
]
