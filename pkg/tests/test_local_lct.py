from fractions import Fraction

import pytest

from dplct.local_lct import (
    BudgetExceeded,
    NewtonDegenerate,
    PlaneGerm,
    newton_lct,
    newton_polygon,
    resolve_lct,
)

F = Fraction


@pytest.mark.parametrize(
    "germ, value",
    [
        ("x*y", F(1)),
        ("y^2 - x^3", F(5, 6)),
        ("y^2 - x^4", F(3, 4)),
        ("x^2*y^3", F(1, 3)),
        ("x", F(1)),
        ("y^2 - x^5", F(7, 10)),
        ("x^3 + y^3", F(2, 3)),
        ("y^3 - x^7", F(10, 21)),
        ("x^2*y + y^4", F(5, 8)),
    ],
)
def test_resolve_examples(germ, value):
    assert resolve_lct(germ).value == value


def test_cusp_tree_records_three_divisors():
    res = resolve_lct("y^2 - x^3")
    assert [(n.mult, n.discrepancy) for n in res.nodes()] == [(2, 1), (3, 2), (6, 4)]


def test_tacnode_tree():
    res = resolve_lct("y^2 - x^4")
    assert [(n.mult, n.discrepancy) for n in res.nodes()] == [(2, 1), (4, 2)]


def test_node_needs_no_blowup():
    assert resolve_lct("x*y").blowups == 0
    # an irrational node: two tangents y = +-sqrt(2) x
    assert resolve_lct("y^2 - 2*x^2").value == 1


def test_irrational_tangent_with_higher_contact():
    # each of the two conjugate branches of (y^2-2x^2)^2 + x^5 behaves like a cusp
    res = resolve_lct("(y^2-2*x^2)^2 + x^5")
    assert res.value == F(1, 2)
    assert any("root of" in n.center for n in res.nodes())


def test_tower_of_irrational_centers():
    # sqrt(2) at the first blow-up, then sqrt(3/2) over Q(sqrt 2)
    res = resolve_lct("((y^2-2*x^2)^2-12*x^6)^2 + x^13")
    assert res.value == F(1, 4)
    assert [(n.mult, n.discrepancy) for n in res.nodes()] == [(8, 1), (12, 2), (13, 3), (26, 6)]


def test_non_reduced_components_cap():
    assert resolve_lct("y^2").value == F(1, 2)
    assert resolve_lct("x^3*y").value == F(1, 3)
    assert resolve_lct("(y^2-x^3)^2").value == F(5, 12)


def test_components_not_through_origin_ignored():
    assert resolve_lct("y*(1+x)").value == 1


def test_budget_guard():
    with pytest.raises(BudgetExceeded):
        resolve_lct("y^2 - x^200")
    assert resolve_lct("y^2 - x^9", budget=8).value == F(1, 2) + F(1, 9)


def test_germ_validation():
    with pytest.raises(ValueError, match="does not vanish"):
        PlaneGerm.parse("1 + x")
    with pytest.raises(ValueError):
        PlaneGerm.parse("x - x")


def test_transform_and_power():
    g = PlaneGerm.parse("y^2 - x^3")
    assert (g ** 2).multiplicity == 4
    moved = g.transform([[1, 1], [0, 1]])
    assert resolve_lct(moved).value == F(5, 6)
    with pytest.raises(ValueError):
        g.transform([[1, 2], [2, 4]])


@pytest.mark.parametrize(
    "germ, value",
    [
        ("y^2 - x^3", F(5, 6)),
        ("x^2 + y^5", F(7, 10)),
        ("x*y", F(1)),
        ("x^2*y^3", F(1, 3)),
        ("x + y", F(1)),
        ("x^3 + x*y^3 + y^5", None),
    ],
)
def test_newton_examples(germ, value):
    expected = value if value is not None else resolve_lct(germ).value
    assert newton_lct(germ) == expected


def test_newton_degenerate_rejected():
    with pytest.raises(NewtonDegenerate, match="use resolve_lct"):
        newton_lct("(y - x)^2")
    with pytest.raises(NewtonDegenerate):
        newton_lct("(y^2 - x^3)^2 + x^7")


def test_newton_polygon_vertices():
    assert newton_polygon("y^2 - x^3 + x^2*y^2").vertices == ((0, 2), (3, 0))
    assert newton_polygon("x^2*y + y^4 + x^5").vertices == ((0, 4), (2, 1), (5, 0))
    assert newton_polygon("x^2*y^3").vertices == ((2, 3),)
