"""Dense univariate polynomials over an exact field.

Coefficients are stored low degree first and may be any exact field
elements supporting ``+ - * /`` and truthiness (``Fraction`` or
:class:`~dplct.algebra.extension.ExtScalar`).  Trailing zeros are always
stripped, so the zero polynomial has an empty coefficient tuple.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence


def _strip(coeffs: Sequence) -> tuple:
    coeffs = [Fraction(c) if type(c) is int else c for c in coeffs]
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


class UPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs = _strip(list(coeffs))

    @classmethod
    def constant(cls, c) -> "UPoly":
        return cls([c])

    @classmethod
    def monomial(cls, degree: int, c=Fraction(1)) -> "UPoly":
        return cls([0] * degree + [c])

    @classmethod
    def x(cls) -> "UPoly":
        return cls([Fraction(0), Fraction(1)])

    # -- basic queries -------------------------------------------------
    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def lc(self):
        return self.coeffs[-1]

    def __getitem__(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, UPoly):
            other = UPoly([other])
        if len(self.coeffs) != len(other.coeffs):
            return False
        return all(not (a - b) for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"UPoly({list(self.coeffs)!r})"

    def __str__(self) -> str:
        return format_upoly(self, "x")

    # -- ring operations -----------------------------------------------
    def _coerce(self, other) -> "UPoly":
        return other if isinstance(other, UPoly) else UPoly([other])

    def __add__(self, other) -> "UPoly":
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return UPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "UPoly":
        return UPoly([-c for c in self.coeffs])

    def __sub__(self, other) -> "UPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "UPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "UPoly":
        if not isinstance(other, UPoly):
            return UPoly([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j, cb in enumerate(b):
                out[i + j] = out[i + j] + ca * cb
        return UPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "UPoly":
        result = UPoly([self.coeffs[0] ** 0 if self.coeffs else Fraction(1)])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divmod(self, other: "UPoly") -> tuple["UPoly", "UPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return UPoly(), self
        inv_lc = 1 / other.lc()
        quot = [0] * (dq + 1)
        db = len(other.coeffs) - 1
        for k in range(dq, -1, -1):
            c = rem[k + db] * inv_lc
            quot[k] = c
            if c:
                for j, cb in enumerate(other.coeffs):
                    rem[k + j] = rem[k + j] - c * cb
        return UPoly(quot), UPoly(rem[:db])

    def __floordiv__(self, other: "UPoly") -> "UPoly":
        return self.divmod(other)[0]

    def __mod__(self, other: "UPoly") -> "UPoly":
        return self.divmod(other)[1]

    def monic(self) -> "UPoly":
        if self.is_zero():
            return self
        inv = 1 / self.lc()
        return UPoly([c * inv for c in self.coeffs])

    def derivative(self) -> "UPoly":
        return UPoly([c * i for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, other: "UPoly") -> "UPoly":
        acc = UPoly()
        for c in reversed(self.coeffs):
            acc = acc * other + c
        return acc

    def map_coeffs(self, fn) -> "UPoly":
        return UPoly([fn(c) for c in self.coeffs])


def gcd(f: UPoly, g: UPoly) -> UPoly:
    """Monic gcd by the Euclidean algorithm (zero if both are zero)."""
    while g:
        f, g = g, f % g
    return f.monic()


def xgcd(f: UPoly, g: UPoly) -> tuple[UPoly, UPoly, UPoly]:
    """Return ``(d, u, v)`` with ``u*f + v*g == d`` and ``d`` monic."""
    r0, r1 = f, g
    s0, s1 = UPoly([1]), UPoly()
    t0, t1 = UPoly(), UPoly([1])
    while r1:
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    inv = 1 / r0.lc()
    return r0 * inv, s0 * inv, t0 * inv


def squarefree_decomposition(f: UPoly) -> list[tuple[UPoly, int]]:
    """Yun's algorithm: ``f = lc * prod(g_i**i)`` with ``g_i`` squarefree
    and pairwise coprime.  Only factors of positive degree are returned."""
    if f.degree < 1:
        return []
    out = []
    df = f.derivative()
    a = gcd(f, df)
    b = f // a
    c = df // a
    i = 1
    while b.degree >= 1:
        d = c - b.derivative()
        g = gcd(b, d)
        if g.degree >= 1:
            out.append((g, i))
        b = b // g
        c = d // g
        i += 1
    return [(g.monic(), i) for g, i in out]


def squarefree_part(f: UPoly) -> UPoly:
    if f.degree < 1:
        return UPoly([1])
    return (f // gcd(f, f.derivative())).monic()


def format_upoly(f: UPoly, var: str = "x") -> str:
    if f.is_zero():
        return "0"
    terms = []
    for i in range(f.degree, -1, -1):
        c = f.coeffs[i]
        if not c:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        cs = str(c)
        if mono:
            if cs == "1":
                term = mono
            elif cs == "-1":
                term = "-" + mono
            else:
                term = f"({cs})*{mono}" if any(ch in cs for ch in "+ ") else f"{cs}*{mono}"
        else:
            term = f"({cs})" if " " in cs else cs
        terms.append(term)
    out = terms[0]
    for t in terms[1:]:
        out += " - " + t[1:] if t.startswith("-") else " + " + t
    return out
