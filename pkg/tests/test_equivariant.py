from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from dplct.equivariant import (
    CURATED,
    Determined,
    Explicit,
    GroupActionSummary,
    RiemannRoch,
    UpperBoundOnly,
    curated_lookup,
    h0_of_multiple,
    invariant_lct_decision,
    product_rigidity_hypotheses,
    superrigid_by_orbits,
)


def test_h0_examples():
    assert h0_of_multiple(9, 3, 1) == 3
    assert h0_of_multiple(3, 1, 3) == 19
    assert h0_of_multiple(9, 3, 0) == 1
    assert h0_of_multiple(9, 3, -1) == 0


def test_h0_cubic_forms_oracle():
    # degree 3 monomials in 4 variables, minus the cubic equation itself
    from math import comb

    assert h0_of_multiple(3, 1, 3) == comb(3 + 3, 3) - 1
    # h0(O(d)) on the plane is (d+1)(d+2)/2 with H a line
    for d in range(6):
        assert h0_of_multiple(9, 3, d) == (d + 1) * (d + 2) // 2


def test_h0_rejects_fake_generator():
    # K^2 = 5, r = 2: H^2 = 5/4 gives 1 + 3*5/8 for d = 1
    with pytest.raises(ValueError, match="genuine generator"):
        h0_of_multiple(5, 2, 1)


@given(st.integers(1, 9), st.integers(0, 10))
def test_h0_increasing_in_d(k2, d):
    assert h0_of_multiple(k2, 1, d + 1) > h0_of_multiple(k2, 1, d)


def test_klein_action():
    dec = invariant_lct_decision(GroupActionSummary(3, 21, 4, RiemannRoch(9)))
    assert dec.outcome == Determined(Fraction(4, 3))
    assert dec.h0 == 3


def test_a5_with_invariant_conic():
    dec = invariant_lct_decision(GroupActionSummary(3, 6, 2))
    assert dec.outcome == Determined(Fraction(2, 3))


def test_fermat_cubic_only_upper_bound():
    dec = invariant_lct_decision(GroupActionSummary(1, 18, 4, RiemannRoch(3)))
    assert dec.outcome == UpperBoundOnly(Fraction(4))
    assert dec.h0 == 19
    assert "lemma hypothesis fails" in dec.rationale
    assert curated_lookup("fermat_cubic_full_aut").value == 4


def test_explicit_h0_source():
    dec = invariant_lct_decision(GroupActionSummary(1, 5, 2, Explicit(5)))
    assert isinstance(dec.outcome, UpperBoundOnly)
    dec = invariant_lct_decision(GroupActionSummary(1, 6, 2, Explicit(5)))
    assert isinstance(dec.outcome, Determined)


@given(st.integers(1, 4), st.integers(1, 40), st.integers(1, 8), st.integers(1, 9))
def test_decision_respects_hypothesis(r, k, m, k2):
    try:
        s = GroupActionSummary(r, k, m, RiemannRoch(k2))
        dec = invariant_lct_decision(s)
    except ValueError:
        return
    assert dec.value == Fraction(m, r)
    if dec.h0 >= k:
        assert isinstance(dec.outcome, UpperBoundOnly)
    else:
        assert isinstance(dec.outcome, Determined)


def test_invalid_summaries():
    with pytest.raises(ValueError):
        GroupActionSummary(0, 1, 1)
    with pytest.raises(ValueError):
        GroupActionSummary(1, 1, 2)  # m >= r needs an h0 source
    with pytest.raises(ValueError):
        Explicit(-1)


@pytest.mark.parametrize(
    "name, value",
    [
        ("fermat_cubic_full_aut", Fraction(4)),
        ("quintic_dp_A5", Fraction(2)),
        ("quintic_dp_Z5", Fraction(4, 5)),
        ("clebsch_cubic_A5", Fraction(2)),
        ("valentiner_plane_A6", Fraction(2)),
        ("mukai_mabuchi_dp4", Fraction(1)),
        ("dp6_nontrivial_G", Fraction(1)),
    ],
)
def test_curated_values(name, value):
    entry = curated_lookup(name)
    assert entry.value == value
    assert entry.provenance


def test_curated_discrepancy_note():
    assert "K^2 = 6" in curated_lookup("quintic_dp_S5").note
    assert len(CURATED) == 8


def test_curated_unknown_lists_names():
    with pytest.raises(ValueError) as info:
        curated_lookup("nope")
    assert "valentiner_plane_A6" in str(info.value)


def test_superrigidity():
    assert superrigid_by_orbits(6, 5) is True
    assert superrigid_by_orbits(4, 5) is False
    assert superrigid_by_orbits(18, 3) is True


@given(st.integers(1, 50), st.integers(1, 9))
def test_superrigidity_monotone(k, k2):
    if superrigid_by_orbits(k, k2):
        assert superrigid_by_orbits(k + 1, k2)


def test_product_hypotheses():
    assert product_rigidity_hypotheses([2, 2], [True, True]) is True
    assert product_rigidity_hypotheses([Fraction(4, 5)], [True]) is False
    assert product_rigidity_hypotheses([1], [False]) is False
    with pytest.raises(ValueError):
        product_rigidity_hypotheses([1, 2], [True])
    with pytest.raises(ValueError):
        product_rigidity_hypotheses([], [])
