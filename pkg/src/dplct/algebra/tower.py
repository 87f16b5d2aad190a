"""Factoring over a number field and adjoining roots, by Trager's norm method.

A number field here is ``Q`` (represented by ``None``) or a
:class:`NumberField` with an irreducible modulus.  Adjoining a root of an
irreducible ``p`` over ``K = Q(alpha)`` returns an absolute field
``L = Q(gamma)`` with ``gamma = beta + s*alpha`` together with the images
of ``alpha`` and ``beta``, so towers never appear.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import sympy

from .extension import ExtScalar, NumberField
from .factor import _to_fraction, factor_rational
from .upoly import UPoly, gcd, squarefree_decomposition

_X, _A = sympy.symbols("x a")


def _sym(c: Fraction):
    return sympy.Rational(int(c.numerator), int(c.denominator))


def _q(c) -> Fraction:
    """Fraction from an int, Fraction or GMP rational."""
    return Fraction(int(c.numerator), int(c.denominator))


def _lift(c) -> UPoly:
    """Coefficient of K as a polynomial in the generator."""
    if isinstance(c, ExtScalar):
        return c.value
    return UPoly([_q(c)])


def _norm(p: UPoly, field: NumberField, s: int) -> UPoly:
    """``Res_a(q(a), p(x - s a))`` with the coefficients of p lifted to Q[a]."""
    q = sum(_sym(c) * _A**i for i, c in enumerate(field.modulus.coeffs))
    expr = 0
    for j, c in enumerate(p.coeffs):
        lifted = sum(_sym(t) * _A**i for i, t in enumerate(_lift(c).coeffs))
        expr += lifted * (_X - s * _A) ** j
    res = sympy.Poly(sympy.resultant(q, sympy.expand(expr), _A), _X, domain="QQ")
    return UPoly([_to_fraction(c) for c in reversed(res.all_coeffs())])


def _shifts():
    yield 0
    k = 1
    while True:
        yield k
        yield -k
        k += 1


@dataclass(frozen=True)
class Factor:
    """An irreducible factor over K; ``norm`` and ``shift`` allow adjoining its root."""

    poly: UPoly
    multiplicity: int
    norm: UPoly | None = None
    shift: int = 0


def factor_over(p: UPoly, field: NumberField | None) -> list[Factor]:
    """Monic irreducible factors of ``p`` over Q or over ``field``."""
    if p.degree < 1:
        return []
    if field is None:
        return [Factor(f, e) for f, e in factor_rational(p)]
    out = []
    for sq, e in squarefree_decomposition(p.monic()):
        if sq.degree < 1:
            continue
        if sq.degree == 1:
            out.append(Factor(sq.monic(), e))
            continue
        for s in _shifts():
            n = _norm(sq, field, s)
            if gcd(n, n.derivative()).degree == 0:
                break
        alpha = field.gen
        for ni, _ in factor_rational(n):
            # ni(x + s*alpha) over K, then its gcd with sq is one irreducible factor
            shifted = ni.map_coeffs(field).compose(UPoly([alpha * s, field.one]))
            g = gcd(sq, shifted)
            out.append(Factor(g.monic(), e, ni, s))
    return out


@dataclass(frozen=True)
class Adjoined:
    field: NumberField
    root: object  # image of the new root in field
    embed: Callable  # K -> field


def adjoin_root(factor: Factor, field: NumberField | None) -> Adjoined:
    """Absolute field generated over ``field`` by a root of ``factor.poly``."""
    p = factor.poly
    if p.degree < 1:
        raise ValueError("cannot adjoin a root of a constant")
    if field is None:
        if p.degree == 1:
            raise ValueError("linear factor: root is rational")
        new = NumberField(p.monic())
        return Adjoined(new, new.gen, lambda c: new(_q(c)))
    if p.degree == 1:
        raise ValueError("linear factor: root already in the field")
    new = NumberField(factor.norm)
    gamma, s = new.gen, factor.shift
    # alpha is the unique common root of q(a) and p(gamma - s a) over Q(gamma)
    q = field.modulus.map_coeffs(new)
    lin = UPoly([gamma, new(-s)])
    # p(gamma - s a) by Horner, coefficients of p lifted to polynomials in a
    acc = UPoly()
    for c in reversed(p.coeffs):
        acc = acc * lin + _lift(c).map_coeffs(new)
    g = gcd(q, acc)
    if g.degree != 1:
        raise ArithmeticError("primitive element construction failed")
    alpha = -g[0] / g[1]
    beta = gamma - alpha * s

    def embed(c, _alpha=alpha, _new=new):
        if isinstance(c, ExtScalar):
            return c.value.map_coeffs(_new)(_alpha)
        return _new(_q(c))

    return Adjoined(new, beta, embed)
