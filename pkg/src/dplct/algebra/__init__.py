"""Exact arithmetic substrate: rationals, polynomials, forms, extensions."""

from fractions import Fraction as Rational

from .extension import ExtensionSplit, ExtScalar, NumberField, ext_invert
from .forms import (
    BinaryForm,
    TernaryForm,
    eliminate_z,
    gcd_binary,
    irreducible_factors,
    multiplicity_structure,
    order_along,
    resultant_binary,
)
from .parse import (
    PolynomialSyntaxError,
    parse_binary_form,
    parse_germ,
    parse_polynomial,
    parse_ternary_form,
)
from .upoly import UPoly

__all__ = [
    "BinaryForm",
    "ExtScalar",
    "ExtensionSplit",
    "NumberField",
    "PolynomialSyntaxError",
    "Rational",
    "TernaryForm",
    "UPoly",
    "eliminate_z",
    "ext_invert",
    "gcd_binary",
    "irreducible_factors",
    "multiplicity_structure",
    "order_along",
    "parse_binary_form",
    "parse_germ",
    "parse_polynomial",
    "parse_ternary_form",
    "resultant_binary",
]
