"""Irreducible factorization over Q, delegated to sympy.

sympy factors over Q with a Zassenhaus-style Hensel lifting after
rational content removal; we only convert to and from our own types and
fix a canonical output order so downstream certificates are deterministic.
"""

from __future__ import annotations

from fractions import Fraction

import sympy

from .upoly import UPoly

_X = sympy.Symbol("x")
_Y = sympy.Symbol("y")


def _to_fraction(c) -> Fraction:
    c = sympy.Rational(c)
    return Fraction(int(c.p), int(c.q))


def _sort_key(f: UPoly):
    return (f.degree, [(c.numerator, c.denominator) for c in f.coeffs])


def factor_rational(f: UPoly) -> list[tuple[UPoly, int]]:
    """Monic irreducible factors of ``f`` over Q with multiplicities."""
    if f.degree < 1:
        return []
    coeffs = [sympy.Rational(c.numerator, c.denominator) for c in reversed(f.coeffs)]
    poly = sympy.Poly(coeffs, _X, domain="QQ")
    _, factors = poly.factor_list()
    out = []
    for g, e in factors:
        u = UPoly([_to_fraction(c) for c in reversed(g.all_coeffs())]).monic()
        out.append((u, int(e)))
    out.sort(key=lambda p: _sort_key(p[0]))
    return out


def factor_poly(poly: dict, nvars: int) -> list[tuple[dict, int]]:
    """Irreducible factors over Q of ``{exponent tuple: coeff}`` in ``nvars``
    variables, constants dropped, each factor made monic in sympy's order."""
    gens = sympy.symbols(f"v0:{nvars}")
    expr = sympy.Poly.from_dict(
        {k: sympy.Rational(v.numerator, v.denominator) for k, v in poly.items() if v},
        *gens,
        domain="QQ",
    )
    _, factors = expr.factor_list()
    out = []
    for g, e in factors:
        g = g.monic()
        d = {tuple(int(t) for t in k): _to_fraction(v) for k, v in g.as_dict().items()}
        out.append((d, int(e)))
    out.sort(key=lambda p: sorted((k, (v.numerator, v.denominator)) for k, v in p[0].items()))
    return out


def factor_bivariate(poly: dict) -> list[tuple[dict, int]]:
    """Irreducible factors over Q of ``{(i, j): coeff}`` meaning sum c x^i y^j."""
    return factor_poly(poly, 2)
