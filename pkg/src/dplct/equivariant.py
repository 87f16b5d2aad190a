"""Thresholds of del Pezzo surfaces with a group action.

Write ``-K_X ~ rH`` with ``H`` the invariant generator, let ``k`` be the
smallest orbit size and ``m`` the smallest degree of an invariant divisor
in ``|mH|``.  Then ``lct(X, G) <= m/r``, with equality as soon as
``h0((m - r)H) < k``.  The summary carries ``r, k, m`` as inputs; orbit
sizes are not computed here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union


@dataclass(frozen=True)
class Explicit:
    """A known value of h0((m - r)H)."""

    value: int

    def __post_init__(self):
        if self.value < 0:
            raise ValueError("h0 cannot be negative")


@dataclass(frozen=True)
class RiemannRoch:
    """Compute h0((m - r)H) from K^2 by Riemann-Roch."""

    K_square: int

    def __post_init__(self):
        if self.K_square < 1:
            raise ValueError("K^2 must be positive")


H0Source = Union[Explicit, RiemannRoch]


@dataclass(frozen=True)
class GroupActionSummary:
    r: int
    k: int
    m: int
    h0_source: H0Source | None = None

    def __post_init__(self):
        for name in ("r", "k", "m"):
            val = getattr(self, name)
            if not isinstance(val, int) or val < 1:
                raise ValueError(f"{name} must be a positive integer, got {val!r}")
        if self.h0_source is None and self.m >= self.r:
            raise ValueError("need --h0 or --ksquare to evaluate h0((m-r)H) when m >= r")


@dataclass(frozen=True)
class Determined:
    value: Fraction


@dataclass(frozen=True)
class UpperBoundOnly:
    bound: Fraction


@dataclass(frozen=True)
class EquivariantDecision:
    outcome: Union[Determined, UpperBoundOnly]
    rationale: str
    h0: int = 0

    @property
    def determined(self) -> bool:
        return isinstance(self.outcome, Determined)

    @property
    def value(self) -> Fraction:
        """The threshold if determined, else the upper bound."""
        o = self.outcome
        return o.value if isinstance(o, Determined) else o.bound


def h0_of_multiple(K_square: int, r: int, d: int) -> int:
    """``h0(X, dH)`` on a del Pezzo surface with ``-K = rH`` and ``K^2 = K_square``.

    Riemann-Roch with Kodaira vanishing gives ``1 + d(d + r) H^2 / 2`` for
    ``d >= 0``; negative multiples have no sections.
    """
    if K_square < 1 or r < 1:
        raise ValueError("K^2 and r must be positive")
    if d < 0:
        return 0
    value = 1 + Fraction(d * (d + r) * K_square, 2 * r * r)
    if value.denominator != 1:
        raise ValueError("H not a genuine generator for this K²/r combination")
    return int(value)


def invariant_lct_decision(s: GroupActionSummary) -> EquivariantDecision:
    bound = Fraction(s.m, s.r)
    d = s.m - s.r
    if d < 0:
        h0 = 0
    elif isinstance(s.h0_source, Explicit):
        h0 = s.h0_source.value
    else:
        h0 = h0_of_multiple(s.h0_source.K_square, s.r, d)
    if h0 < s.k:
        why = f"h0((m-r)H) = {h0} < k = {s.k}, so lct(X, G) = m/r"
        return EquivariantDecision(Determined(bound), why, h0)
    why = f"lemma hypothesis fails: h0((m-r)H) = {h0} >= k = {s.k}; only lct(X, G) <= m/r"
    return EquivariantDecision(UpperBoundOnly(bound), why, h0)


@dataclass(frozen=True)
class CuratedValue:
    name: str
    value: Fraction
    provenance: str
    note: str = ""


_CURATED = [
    CuratedValue(
        "fermat_cubic_full_aut", Fraction(4),
        "Fermat cubic surface x^3+y^3+z^3+t^3=0 with its full automorphism group;"
        " r=1, k=18, m=4, where the m/r lemma does not apply (h0=19 >= 18) and a direct argument is needed",
    ),
    CuratedValue(
        "quintic_dp_A5", Fraction(2),
        "smooth quintic del Pezzo surface with A5 acting; smallest orbits are the 6 nodes of an invariant curve",
    ),
    CuratedValue(
        "quintic_dp_Z5", Fraction(4, 5),
        "smooth quintic del Pezzo surface with a cyclic group of order 5",
    ),
    CuratedValue(
        "clebsch_cubic_A5", Fraction(2),
        "Clebsch cubic x^2y+xz^2+zt^2+tx^2=0 with Aut = S5; same value for S5 and A5, via the m/r lemma",
    ),
    CuratedValue(
        "valentiner_plane_A6", Fraction(2),
        "projective plane with the Valentiner action of A6",
    ),
    CuratedValue(
        "mukai_mabuchi_dp4", Fraction(1),
        "quartic del Pezzo surface with ordinary double points, intersection of two diagonal quadrics"
        " in P4, with Z2^4 acting; via the m/r lemma (r, k, m not stated)",
    ),
    CuratedValue(
        "dp6_nontrivial_G", Fraction(1),
        "sextic del Pezzo surface with k != 1; the hexagon of (-1)-curves is an invariant anticanonical divisor",
    ),
    CuratedValue(
        "quintic_dp_S5", Fraction(2),
        "quintic del Pezzo surface with Aut = S5; r=1, k>6, m=2, via the m/r lemma",
        note="source states K^2 = 6 for this example although the surface in question is the quintic"
        " del Pezzo surface (K^2 = 5); recorded under degree 5 without resolving the discrepancy",
    ),
]

CURATED = {c.name: c for c in _CURATED}


def curated_lookup(name: str) -> CuratedValue:
    try:
        return CURATED[name]
    except KeyError:
        known = ", ".join(sorted(CURATED))
        raise ValueError(f"unknown curated entry {name!r}; known entries: {known}") from None


def superrigid_by_orbits(min_orbit: int, K_square: int) -> bool:
    """Sufficient test for G-birational superrigidity: every orbit has >= K^2 points.

    ``False`` only means the criterion is inconclusive.
    """
    if min_orbit < 1 or K_square < 1:
        raise ValueError("orbit size and K^2 must be positive")
    return min_orbit >= K_square


def product_rigidity_hypotheses(lcts: Sequence, superrigid_flags: Sequence[bool]) -> bool:
    """Check the hypotheses of the rigidity theorem for products of surfaces."""
    if len(lcts) != len(superrigid_flags):
        raise ValueError("need one superrigidity flag per threshold")
    if not lcts:
        raise ValueError("need at least one factor")
    return all(Fraction(c) >= 1 for c in lcts) and all(bool(f) for f in superrigid_flags)
