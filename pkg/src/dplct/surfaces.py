"""Input presentations of del Pezzo surfaces and their validation.

Supported models:

* ``Plane`` and ``QuadricProduct``;
* ``BlowupPlane``: the plane blown up in 1..6 distinct points in general
  position (coordinates in Q or in one shared extension ``Q[a]/(q)``);
* ``DoubleCoverQuartic``: the double plane branched in a smooth quartic,
  i.e. a degree 2 surface;
* ``WeierstrassDP1``: ``w^2 = z^3 + a(s,t) z + b(s,t)`` in P(1,1,2,3),
  a degree 1 surface with at worst A1/A2 points.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence, Union

from .algebra.extension import ExtScalar, NumberField
from .algebra.factor import factor_poly
from .algebra.forms import (
    BinaryForm,
    TernaryForm,
    eliminate_z,
    gcd_binary,
    irreducible_factors,
    monomials,
    order_along,
)
from .algebra.linalg import cross, determinant
from .algebra.upoly import UPoly, gcd

MAX_RETRIES = 8


class ValidationError(ValueError):
    """The model is not a del Pezzo surface this toolkit handles."""


class DegenerateCoordinates(RuntimeError):
    """Every seeded coordinate change left an eliminant identically zero."""

    def __init__(self):
        super().__init__("degenerate coordinates persist")


@dataclass(frozen=True)
class Plane:
    pass


@dataclass(frozen=True)
class QuadricProduct:
    pass


@dataclass(frozen=True)
class BlowupPlane:
    points: tuple  # tuple of projective triples
    extension: NumberField | None = None

    def __post_init__(self):
        pts = []
        for p in self.points:
            p = tuple(p)
            if len(p) == 2:
                p = (p[0], p[1], 1)
            if len(p) != 3:
                raise ValidationError("plane points need 2 affine or 3 projective coordinates")
            pts.append(tuple(self._coerce(c) for c in p))
        object.__setattr__(self, "points", tuple(pts))
        if not 1 <= len(pts) <= 6:
            raise ValidationError("blow-up models take between 1 and 6 points")

    def _coerce(self, c):
        if isinstance(c, ExtScalar):
            if self.extension is None or c.field != self.extension:
                raise ValidationError("point coordinates mix incompatible extensions")
            return c
        c = Fraction(c)
        return self.extension(c) if self.extension is not None else c


@dataclass(frozen=True)
class DoubleCoverQuartic:
    branch: TernaryForm

    def __post_init__(self):
        if self.branch.degree != 4:
            raise ValidationError("branch curve must be a quartic")


@dataclass(frozen=True)
class WeierstrassDP1:
    a: BinaryForm
    b: BinaryForm

    def __post_init__(self):
        if self.a.degree != 4 or self.b.degree != 6:
            raise ValidationError("Weierstrass data needs deg a = 4 and deg b = 6")
        if self.a.is_zero() and self.b.is_zero():
            raise ValidationError("a and b cannot both vanish")


SurfaceModel = Union[Plane, QuadricProduct, BlowupPlane, DoubleCoverQuartic, WeierstrassDP1]

TYPE_TAGS = ("P2", "P1xP1", "F1", "BlowupGeneral", "DP2", "DP1Smooth", "DP1DuVal")


@dataclass(frozen=True)
class Singularity:
    """A Du Val point of a degree 1 model, located by the fiber it lies on.

    ``site`` is ``"cusp"`` when the point is the cusp of a cuspidal fiber
    (a common root of a and b) and ``"node"`` for the node of a nodal fiber.
    """

    type: str  # "A1" | "A2"
    factor: BinaryForm
    site: str

    @property
    def milnor(self) -> int:
        return {"A1": 1, "A2": 2}[self.type]


@dataclass(frozen=True)
class ValidatedSurface:
    model: SurfaceModel
    degree: int
    type_tag: str
    singularities: tuple = ()
    notes: tuple = field(default=(), compare=False)


def degree(v: ValidatedSurface) -> int:
    return v.degree


def coordinate_change(attempt: int, seed: int = 0) -> list[list[int]]:
    """Identity for attempt 0, else a seeded random invertible integer matrix."""
    if attempt == 0:
        return [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    rng = random.Random(1000003 * seed + attempt)
    while True:
        m = [[rng.randint(-3, 3) for _ in range(3)] for _ in range(3)]
        if determinant(m):
            return m


# -- blow-ups --------------------------------------------------------------

def conic_row(p: Sequence) -> list:
    """Values of the six conic monomials x^2, xy, xz, y^2, yz, z^2 at p."""
    return [p[0] ** e[0] * p[1] ** e[1] * p[2] ** e[2] for e in monomials(2)]


def _validate_blowup(model: BlowupPlane) -> ValidatedSurface:
    pts = model.points
    for p, q in combinations(pts, 2):
        if not any(cross(p, q)):
            raise ValidationError("blown-up points must be distinct")
    if any(not any(p) for p in pts):
        raise ValidationError("(0:0:0) is not a plane point")
    for triple in combinations(pts, 3):
        if not determinant(triple):
            raise ValidationError("not del Pezzo: general position violated")
    if len(pts) == 6 and not determinant([conic_row(p) for p in pts]):
        raise ValidationError("not del Pezzo: general position violated")
    n = len(pts)
    tag = "F1" if n == 1 else "BlowupGeneral"
    return ValidatedSurface(model, 9 - n, tag)


# -- double planes ---------------------------------------------------------

def _upoly_z(coeffs_high_first: list) -> UPoly:
    return UPoly(list(reversed(coeffs_high_first)))


def _common_zero_on_fiber(forms: Sequence[TernaryForm], factor: BinaryForm) -> bool:
    """Do the forms share a zero (x0 : y0 : z) with (x0 : y0) a root of factor?"""
    if factor.degree == 1 and factor.coeffs == (Fraction(0), Fraction(1)):
        x0, y0 = Fraction(1), Fraction(0)
    else:
        k = NumberField(factor.dehomogenize())
        x0, y0 = k.gen, k.one
    g = UPoly()
    for f in forms:
        g = gcd(g, _upoly_z(f.restrict_z(x0, y0)))
        if g.degree == 0:
            return False
    return g.degree != 0


def singular_points_exist(f: TernaryForm, seed: int = 0) -> tuple[bool, int]:
    """Decide whether the plane curve ``f = 0`` is singular.

    z is eliminated from (f_x, f_y) and (f_x, f_z); the gcd of the two
    eliminants contains the (x:y)-projections of all singular points.  Each
    irreducible factor is then checked against the three partials in its
    residue field.  Returns ``(singular, attempt)`` where ``attempt`` is the
    index of the coordinate change that was used.

    A curve with a repeated or rational-split component is singular (two
    components of a plane curve always meet); that case is settled first
    since its eliminants vanish in every coordinate system.
    """
    factors = factor_poly(dict(f.coeffs), 3)
    if len(factors) > 1 or any(e > 1 for _, e in factors):
        return True, 0
    for attempt in range(MAX_RETRIES + 1):
        g = f.substitute(coordinate_change(attempt, seed)) if attempt else f
        partials = [g.diff(i) for i in range(3)]
        r1 = eliminate_z(partials[0], partials[1])
        r2 = eliminate_z(partials[0], partials[2])
        if r1.is_zero() or r2.is_zero():
            continue
        if all(not p(0, 0, 1) for p in partials):
            return True, attempt
        common = gcd_binary(r1, r2)
        if common.degree == 0:
            return False, attempt
        for factor, _ in irreducible_factors(common):
            if _common_zero_on_fiber(partials, factor):
                return True, attempt
        return False, attempt
    raise DegenerateCoordinates()


def _validate_double_cover(model: DoubleCoverQuartic, seed: int) -> ValidatedSurface:
    singular, attempt = singular_points_exist(model.branch, seed)
    if singular:
        raise ValidationError("branch curve singular")
    notes = (f"smoothness decided in coordinate change #{attempt} (seed {seed})",)
    return ValidatedSurface(model, 2, "DP2", (), notes)


# -- degree one ------------------------------------------------------------

def discriminant(a: BinaryForm, b: BinaryForm) -> BinaryForm:
    return (a ** 3).scale(4) + (b ** 2).scale(27)


@dataclass(frozen=True)
class CuspSite:
    factor: BinaryForm
    ord_a: int | float
    ord_b: int
    site: str  # "SmoothPoint" | "A1" | "A2"


def cusp_sites(a: BinaryForm, b: BinaryForm) -> list[CuspSite]:
    """Classify each irreducible factor of gcd(a, b) by (ord a, ord b).

    Raises ``ValidationError`` for patterns beyond A2.
    """
    g = gcd_binary(a, b)
    if g.degree == 0:
        return []
    out = []
    for p, _ in irreducible_factors(g):
        oa, ob = order_along(a, p), order_along(b, p)
        if ob == 1:
            site = "SmoothPoint"
        elif oa == 1:
            site = "A1"
        elif ob == 2:
            site = "A2"
        else:
            raise ValidationError("singularity outside A1/A2 scope")
        out.append(CuspSite(p, oa, ob, site))
    return out


def _classify_weierstrass(a: BinaryForm, b: BinaryForm) -> list[Singularity]:
    delta = discriminant(a, b)
    if delta.is_zero():
        raise ValidationError("singularity outside A1/A2 scope")
    sings = [
        Singularity(c.site, c.factor, "cusp") for c in cusp_sites(a, b) if c.site != "SmoothPoint"
    ]
    g = gcd_binary(a, b)
    for p, e in irreducible_factors(delta):
        if g.degree > 0 and order_along(g, p) > 0:
            continue
        if e == 2:
            sings.append(Singularity("A1", p, "node"))
        elif e == 3:
            sings.append(Singularity("A2", p, "node"))
        elif e >= 4:
            raise ValidationError("singularity outside A1/A2 scope")
    return sings


def _validate_weierstrass(model: WeierstrassDP1) -> ValidatedSurface:
    sings = _classify_weierstrass(model.a, model.b)
    tag = "DP1DuVal" if sings else "DP1Smooth"
    return ValidatedSurface(model, 1, tag, tuple(sings))


def validate(model: SurfaceModel | ValidatedSurface, seed: int = 0) -> ValidatedSurface:
    if isinstance(model, ValidatedSurface):
        model = model.model
    if isinstance(model, Plane):
        return ValidatedSurface(model, 9, "P2")
    if isinstance(model, QuadricProduct):
        return ValidatedSurface(model, 8, "P1xP1")
    if isinstance(model, BlowupPlane):
        return _validate_blowup(model)
    if isinstance(model, DoubleCoverQuartic):
        return _validate_double_cover(model, seed)
    if isinstance(model, WeierstrassDP1):
        return _validate_weierstrass(model)
    raise TypeError(f"not a surface model: {model!r}")
