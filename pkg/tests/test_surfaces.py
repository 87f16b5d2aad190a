import pytest
import sympy

from dplct.algebra import NumberField, UPoly, parse_binary_form, parse_ternary_form
from dplct.surfaces import (
    BlowupPlane,
    DoubleCoverQuartic,
    Plane,
    QuadricProduct,
    ValidationError,
    WeierstrassDP1,
    coordinate_change,
    cusp_sites,
    degree,
    singular_points_exist,
    validate,
)


def W(a, b):
    return WeierstrassDP1(parse_binary_form(a, 4), parse_binary_form(b, 6))


def Q(text):
    return DoubleCoverQuartic(parse_ternary_form(text, 4))


def sings(v):
    return sorted((s.type, str(s.factor), s.site) for s in v.singularities)


def test_plane_and_quadric():
    assert (validate(Plane()).degree, validate(Plane()).type_tag) == (9, "P2")
    v = validate(QuadricProduct())
    assert (v.degree, v.type_tag) == (8, "P1xP1")


@pytest.mark.parametrize("n", range(1, 7))
def test_blowup_degree(n):
    pts = [(1, 0), (0, 1), (1, 1), (2, 3), (3, 7), (5, 2)][:n]
    v = validate(BlowupPlane(pts))
    assert degree(v) == 9 - n
    assert v.type_tag == ("F1" if n == 1 else "BlowupGeneral")


def test_blowup_accepts_projective_points():
    v = validate(BlowupPlane([(1, 0, 0), (0, 1, 0), (0, 0, 1)]))
    assert v.degree == 6


@pytest.mark.parametrize(
    "pts, message",
    [
        ([(1, 0), (2, 0), (3, 0)], "general position"),
        ([(0, 0), (1, 0), (0, 1), (1, 1), (2, 3), (5, 2)][:4] + [(2, 0), (3, 1)], "general position"),
        ([(1, 2), (2, 4, 2)], "distinct"),
    ],
)
def test_blowup_rejections(pts, message):
    with pytest.raises(ValidationError, match=message):
        validate(BlowupPlane(pts))


def test_six_points_on_a_conic_rejected():
    # all on y = x^2
    pts = [(0, 0), (1, 1), (-1, 1), (2, 4), (-2, 4), (3, 9)]
    with pytest.raises(ValidationError, match="general position"):
        validate(BlowupPlane(pts))


def test_collinear_triple_in_generic_looking_sextuple():
    # (1,0), (1,1), (1,3) lie on x = 1
    pts = [(0, 0), (1, 0), (0, 1), (1, 1), (1, 3), (5, 2)]
    with pytest.raises(ValidationError):
        validate(BlowupPlane(pts))


def test_blowup_over_extension():
    k = NumberField(UPoly([-2, 0, 1]))
    a = k.gen
    v = validate(BlowupPlane([(a, 0), (-a, 0), (0, 1)], k))
    # a, -a, and the point at x = 0 are not collinear
    assert v.degree == 6
    with pytest.raises(ValidationError):
        validate(BlowupPlane([(a, 0), (-a, 0), (1, 0)], k))


def test_blowup_point_count_limits():
    with pytest.raises(ValidationError):
        BlowupPlane([])
    with pytest.raises(ValidationError):
        BlowupPlane([(i, i * i) for i in range(7)])


@pytest.mark.parametrize(
    "text",
    ["x^4+y^4+z^4", "x^3*y+y^3*z+z^3*x", "x^4+y^4+z^4+x^2*y*z", "x^4-x*y^3+y^2*z^2+z^4"],
)
def test_smooth_quartics(text):
    v = validate(Q(text))
    assert (v.degree, v.type_tag) == (2, "DP2")
    assert v.notes


@pytest.mark.parametrize(
    "text",
    [
        "x^4+y^4+x*y*z^2",  # node at (0:0:1)
        "(x^2+y^2+z^2)^2",  # double conic
        "y^2*z^2-x^4+x^3*z",  # singular at (0:0:1)
        "(x^2-2*z^2)^2+y^2*(x^2+y^2+z^2)",  # two conjugate singular points (+-sqrt2 : 0 : 1)
        "x*y*(x^2+y^2+z^2)",  # reducible
    ],
)
def test_singular_quartics_rejected(text):
    with pytest.raises(ValidationError, match="branch curve singular"):
        validate(Q(text))


def test_singular_oracle_by_sympy():
    # singular points of the irrational example, found independently
    x, y = sympy.symbols("x y")
    f = (x**2 - 2) ** 2 + y**2 * (x**2 + y**2 + 1)
    sols = sympy.solve([f, f.diff(x), f.diff(y)], [x, y], dict=True)
    assert {(s[x], s[y]) for s in sols} >= {(sympy.sqrt(2), 0), (-sympy.sqrt(2), 0)}


def test_smoothness_invariant_under_coordinate_change():
    f = parse_ternary_form("x^3*y+y^3*z+z^3*x")
    g = parse_ternary_form("x^4+y^4+x*y*z^2")
    for attempt in range(1, 6):
        m = coordinate_change(attempt, seed=7)
        assert singular_points_exist(f.substitute(m))[0] is False
        assert singular_points_exist(g.substitute(m))[0] is True


def test_quartic_degree_enforced():
    with pytest.raises(ValidationError):
        DoubleCoverQuartic(parse_ternary_form("x^3+y^3+z^3"))


def test_weierstrass_smooth_and_smooth_point_cusp():
    v = validate(W("s^4+t^4", "s^6+t^6"))
    assert (v.degree, v.type_tag, v.singularities) == (1, "DP1Smooth", ())
    v = validate(W("s*(s^3+2*t^3)", "s*(s^5+t^5)"))
    assert v.type_tag == "DP1Smooth"
    assert [c.site for c in cusp_sites(v.model.a, v.model.b)] == ["SmoothPoint"]


def test_weierstrass_a1_cusp():
    v = validate(W("s*(s^3+t^3)", "s^2*(s^4+t^4)"))
    assert v.type_tag == "DP1DuVal"
    assert sings(v) == [("A1", "s", "cusp")]


def test_weierstrass_a2_cusp():
    v = validate(W("s^2*(s^2+t^2)", "s^2*(s^4+t^4)"))
    assert sings(v) == [("A2", "s", "cusp")]


def test_weierstrass_a_zero_means_infinite_order():
    v = validate(W("0", "s^2*(s^4+t^4)"))
    assert sings(v) == [("A2", "s", "cusp")]


def test_weierstrass_nodal_fibers():
    # Delta = 4a^3 + 27b^2 has t^2 (an I2 fiber, A1 at its node) or t^3 (I3, A2)
    v = validate(W("-3*s^4", "2*s^6-3*s^4*t^2+t^6"))
    assert sings(v) == [("A1", "t", "node")]
    v = validate(W("-3*s^4+t^4", "2*s^6+s^3*t^3"))
    assert sings(v) == [("A2", "t", "node")]
    v = validate(W("-3*s^4+s*t^3", "2*s^6+s^3*t^3"))
    assert sings(v) == [("A1", "s", "cusp"), ("A2", "t", "node")]


def test_fiber_over_node_has_a_double_root():
    # oracle: at t = 0 the cubic z^3 - 3z + 2 = (z - 1)^2 (z + 2)
    z = sympy.Symbol("z")
    assert sympy.factor(z**3 - 3 * z + 2) == (z - 1) ** 2 * (z + 2)


def test_weierstrass_identically_zero_discriminant_rejected():
    with pytest.raises(ValidationError):
        validate(W("-3*(s^2+t^2)^2", "2*(s^2+t^2)^3"))


def test_weierstrass_fiber_beyond_a2_rejected():
    # Delta = 27 t^6 (4 s^6 + t^6)
    with pytest.raises(ValidationError, match="outside A1/A2"):
        validate(W("-3*s^4", "2*s^6+t^6"))


def test_weierstrass_beyond_a2_rejected():
    with pytest.raises(ValidationError, match="outside A1/A2"):
        validate(W("s^2*t^2", "s^3*t^3"))


def test_min_rule_fixture_has_both_types():
    v = validate(W("s*t^2*(s+t)", "s^2*t^2*(s^2+2*t^2)"))
    assert sings(v) == [("A1", "s", "cusp"), ("A2", "t", "cusp")]


def test_weierstrass_rejects_wrong_degrees_and_zero():
    with pytest.raises(ValidationError):
        WeierstrassDP1(parse_binary_form("s^3"), parse_binary_form("s^6"))
    with pytest.raises(ValidationError):
        W("0", "0")


def test_weierstrass_singularities_invariant_under_st_change():
    m = [[2, 1], [1, 1]]
    model = W("s*t^2*(s+t)", "s^2*t^2*(s^2+2*t^2)")
    moved = WeierstrassDP1(model.a.substitute(m), model.b.substitute(m))
    before = sorted(s.type for s in validate(model).singularities)
    after = sorted(s.type for s in validate(moved).singularities)
    assert before == after == ["A1", "A2"]
