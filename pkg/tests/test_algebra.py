from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from dplct.algebra import (
    BinaryForm,
    ExtensionSplit,
    NumberField,
    PolynomialSyntaxError,
    UPoly,
    eliminate_z,
    gcd_binary,
    irreducible_factors,
    multiplicity_structure,
    order_along,
    parse_binary_form,
    parse_germ,
    parse_polynomial,
    parse_ternary_form,
    resultant_binary,
)
from dplct.algebra.linalg import determinant, nullspace, rank
from dplct.algebra.tower import adjoin_root, factor_over
from dplct.algebra.upoly import gcd, squarefree_decomposition, xgcd


def B(text, degree=None):
    return parse_binary_form(text, degree)


def test_resultant_examples():
    assert resultant_binary(B("s*t"), B("s^2+t^2")) == 1
    assert resultant_binary(B("s"), B("t")) == 1
    assert resultant_binary(B("s^2-t^2"), B("s-t")) == 0


def test_resultant_matches_sympy():
    s, t = sympy.symbols("s t")
    f, g = B("2*s^3 - s*t^2 + 5*t^3"), B("s^2 + 3*s*t - 7*t^2")
    expected = sympy.resultant(2 * s**3 - s + 5, s**2 + 3 * s - 7, s)
    assert resultant_binary(f, g) == Fraction(int(expected))


def test_resultant_sees_common_root_at_infinity():
    # both vanish at t = 0 only as forms; dehomogenized they look coprime
    assert resultant_binary(B("s*t^2", 3), B("t*(s+t)", 2)) == 0


def test_gcd_binary():
    assert gcd_binary(B("s*t^3"), B("s^2*(s^4+t^4)")) == B("s")
    assert gcd_binary(B("s^4+t^4"), B("s^6+t^6")).degree == 0
    with pytest.raises(ValueError):
        gcd_binary(BinaryForm.zero(3), BinaryForm.zero(2))


def test_multiplicity_structure():
    assert multiplicity_structure(B("s*(s-t)^2*(s+t)^3")) == [1, 2, 3]
    assert multiplicity_structure(B("(s^2+t^2)^2")) == [2, 2]
    assert multiplicity_structure(B("s^4-t^4")) == [1, 1, 1, 1]


def test_order_along():
    assert order_along(B("s^2*(s^4+t^4)"), B("s")) == 2
    assert order_along(B("s^4+t^4"), B("s")) == 0
    assert order_along(BinaryForm.zero(4), B("s")) == float("inf")


def test_irreducible_factors_include_t():
    facs = irreducible_factors(B("t^2*(s^2-2*t^2)"))
    assert [(str(f), e) for f, e in facs][0] == (str(B("t")), 2)
    assert sorted(f.degree for f, _ in facs) == [1, 2]


def test_eliminate_z_degree_and_vanishing():
    f = parse_ternary_form("x^2+y^2-z^2")
    g = parse_ternary_form("x-y")
    r = eliminate_z(f, g)
    assert r.degree == 2
    # common points have x = y, so the eliminant vanishes on s = t
    assert r(1, 1) == 0


def test_hessian_of_fermat():
    h = parse_ternary_form("x^4+y^4+z^4").hessian()
    assert h == parse_ternary_form("1728*x^2*y^2*z^2")


def test_upoly_division_and_gcd():
    x = UPoly.x()
    f = (x - 1) ** 2 * (x + 2)
    g = (x - 1) * (x + 5)
    assert gcd(f, g) == x - 1
    d, u, v = xgcd(f, g)
    assert u * f + v * g == d
    q, r = f.divmod(g)
    assert q * g + r == f and r.degree < g.degree


def test_squarefree_decomposition():
    x = UPoly.x()
    f = (x - 1) * (x + 1) ** 2 * (x**2 + 1) ** 3
    parts = dict((e, g) for g, e in squarefree_decomposition(f))
    assert parts[1] == x - 1
    assert parts[2] == x + 1
    assert parts[3] == x**2 + 1


def test_number_field_arithmetic():
    k = NumberField(UPoly([-2, 0, 1]))
    a = k.gen
    assert a * a == 2
    inv = 1 / (a + 1)
    assert inv * (a + 1) == 1
    assert (a + 1) ** -1 == a - 1


def test_extension_split_reports_factor():
    k = NumberField(UPoly([-1, 0, 1]))  # x^2 - 1 = (x - 1)(x + 1)
    with pytest.raises(ExtensionSplit) as info:
        _ = 1 / (k.gen - 1)
    assert info.value.factor.degree == 1
    assert info.value.factor * info.value.cofactor == k.modulus


def test_number_field_rejects_non_squarefree():
    with pytest.raises(ValueError):
        NumberField(UPoly([1, 2, 1]))


def test_factor_over_extension_and_adjoin():
    k = NumberField(UPoly([-2, 0, 1]))
    # c^2 - 3/2 stays irreducible over Q(sqrt 2); c^2 - 8 splits
    (f,) = factor_over(UPoly([Fraction(-3, 2), 0, 1]).map_coeffs(k), k)
    assert f.poly.degree == 2
    split = factor_over(UPoly([-8, 0, 1]).map_coeffs(k), k)
    assert sorted(g.poly.degree for g in split) == [1, 1]
    adj = adjoin_root(f, k)
    assert adj.field.degree == 4
    assert adj.root * adj.root == Fraction(3, 2)
    assert adj.embed(k.gen) ** 2 == 2


def test_linalg():
    assert determinant([[1, 2], [3, 4]]) == -2
    assert rank([[1, 2, 3], [2, 4, 6]]) == 1
    rows = [[1, 1, 0], [0, 1, 1]]
    (v,) = nullspace(rows)
    assert any(v)
    assert all(sum(a * b for a, b in zip(row, v)) == 0 for row in rows)


def test_parser_grammar():
    p = parse_polynomial("2x^2y - (x+y)**2 / 3", "xy")
    assert p == {
        (2, 1): Fraction(2),
        (2, 0): Fraction(-1, 3),
        (1, 1): Fraction(-2, 3),
        (0, 2): Fraction(-1, 3),
    }
    assert parse_germ("y^2 - x^3") == {(0, 2): 1, (3, 0): -1}


@pytest.mark.parametrize(
    "text, pos",
    [("x^", 2), ("x + ? y", 4), ("(x + y", 6), ("x / y", 4), ("", 0)],
)
def test_parser_errors_carry_position(text, pos):
    with pytest.raises(PolynomialSyntaxError) as info:
        parse_polynomial(text, "xy")
    assert info.value.pos == pos


def test_parser_rejects_foreign_variables_and_inhomogeneous_forms():
    with pytest.raises(PolynomialSyntaxError):
        parse_polynomial("x + z", "xy")
    with pytest.raises(ValueError):
        parse_binary_form("s^2 + t")
    with pytest.raises(ValueError):
        parse_ternary_form("x^4 + y^4 + z^4", 3)


coeff = st.integers(-4, 4)
nonzero_pair = st.lists(coeff, min_size=2, max_size=2).filter(any)


@given(nonzero_pair, nonzero_pair)
def test_resultant_of_linear_forms_is_determinant(f, g):
    f1, g1 = BinaryForm(1, tuple(f)), BinaryForm(1, tuple(g))
    assert resultant_binary(f1, g1) == f[0] * g[1] - f[1] * g[0]
