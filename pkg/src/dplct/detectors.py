"""Geometric predicates that pick the branch of the global threshold table.

* Eckardt points of a cubic surface given as the plane blown up in six
  points, found by scanning the 45 tritangent triples of its 27 lines;
* hyperflexes of a smooth plane quartic (a line with contact order 4),
  which is how a tacnodal anticanonical curve shows up on the double plane;
* cuspidal members of the anticanonical pencil of a Weierstrass degree 1
  surface, read off from the common roots of a and b.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from typing import Sequence

from .algebra.extension import NumberField
from .algebra.forms import TernaryForm, eliminate_z, irreducible_factors
from .algebra.linalg import cross, determinant, nullspace
from .algebra.upoly import UPoly, gcd
from .surfaces import (
    MAX_RETRIES,
    BlowupPlane,
    CuspSite,
    DegenerateCoordinates,
    ValidatedSurface,
    ValidationError,
    WeierstrassDP1,
    conic_row,
    coordinate_change,
    cusp_sites,
    singular_points_exist,
)

# -- lines on a cubic surface ---------------------------------------------

@dataclass(frozen=True)
class LineOnCubic:
    """One of the 27 lines.

    ``kind`` is ``"E"`` (exceptional curve over P_i), ``"L"`` (strict
    transform of the line through P_i and P_j) or ``"C"`` (strict transform
    of the conic through the five points other than P_i).  ``equation`` holds
    the plane line coefficients (a, b, c) or the six conic coefficients in
    the order x^2, xy, xz, y^2, yz, z^2; it is empty for ``"E"``.
    """

    kind: str
    indices: tuple[int, ...]
    equation: tuple = ()

    @property
    def label(self) -> str:
        return f"{self.kind}{''.join(str(i) for i in self.indices)}"


def _six_points(v: ValidatedSurface) -> tuple:
    if not isinstance(v.model, BlowupPlane) or len(v.model.points) != 6:
        raise ValueError("expected a validated six-point blow-up")
    return v.model.points


def _join(p, q) -> tuple:
    return tuple(cross(p, q))


def _conic_through(points: Sequence) -> tuple:
    kernel = nullspace([conic_row(p) for p in points])
    if len(kernel) != 1:
        raise ValidationError("not del Pezzo: general position violated")
    vec = kernel[0]
    lead = next(c for c in vec if c)
    return tuple(c / lead for c in vec)


def lines_on_cubic(v: ValidatedSurface) -> list[LineOnCubic]:
    pts = _six_points(v)
    out = [LineOnCubic("E", (i + 1,)) for i in range(6)]
    for i, j in combinations(range(6), 2):
        out.append(LineOnCubic("L", (i + 1, j + 1), _join(pts[i], pts[j])))
    for i in range(6):
        others = [p for k, p in enumerate(pts) if k != i]
        out.append(LineOnCubic("C", (i + 1,), _conic_through(others)))
    return out


def conic_gradient(conic: Sequence, p: Sequence) -> list:
    a, b, c, d, e, f = conic
    x, y, z = p
    return [2 * a * x + b * y + c * z, b * x + 2 * d * y + e * z, c * x + e * y + 2 * f * z]


@dataclass(frozen=True)
class EckardtWitness:
    """Three lines through one point of the cubic surface.

    For a ``"T1"`` witness (three joins) ``location`` is the plane point
    where the joins are concurrent.  For a ``"T2"`` witness
    ``{E_i, L_ij, C_j}`` the point lies on ``E_i`` and ``location`` is the
    index ``i`` together with the tangent direction, i.e. the line ``P_i P_j``.
    """

    type: str
    triple: tuple[LineOnCubic, LineOnCubic, LineOnCubic]
    location: tuple

    @property
    def key(self) -> tuple:
        return (self.type, tuple(l.label for l in self.triple))


def _perfect_matchings(items: tuple) -> list[tuple]:
    if not items:
        return [()]
    first, rest = items[0], items[1:]
    out = []
    for k, partner in enumerate(rest):
        remaining = rest[:k] + rest[k + 1:]
        for m in _perfect_matchings(remaining):
            out.append(((first, partner),) + m)
    return out


def eckardt_points(v: ValidatedSurface) -> list[EckardtWitness]:
    pts = _six_points(v)
    lines = {l.label: l for l in lines_on_cubic(v)}
    found = []
    for matching in _perfect_matchings(tuple(range(1, 7))):
        triple = tuple(lines[f"L{i}{j}"] for i, j in matching)
        if determinant([l.equation for l in triple]):
            continue
        meet = cross(triple[0].equation, triple[1].equation)
        if any(not any(cross(meet, p)) for p in pts):
            continue
        last = next(c for c in reversed(meet) if c)
        found.append(EckardtWitness("T1", triple, tuple(c / last for c in meet)))
    for i, j in permutations(range(1, 7), 2):
        join = lines[f"L{min(i, j)}{max(i, j)}"]
        conic = lines[f"C{j}"]
        grad = conic_gradient(conic.equation, pts[i - 1])
        if any(cross(grad, join.equation)):
            continue
        triple = (lines[f"E{i}"], join, conic)
        found.append(EckardtWitness("T2", triple, (i, join.equation)))
    return sorted(found, key=lambda w: w.key)


# -- hyperflexes of plane quartics ----------------------------------------

@dataclass(frozen=True)
class Flex:
    """A Galois orbit of flexes of a plane quartic.

    The orbit has ``count`` geometric points: substitute any root of
    ``modulus`` into ``point`` (coordinates in ``Q[a]/(modulus)``).
    ``contact`` is the order of contact with the tangent line ``tangent``.
    """

    modulus: UPoly
    point: tuple
    tangent: tuple
    contact: int
    count: int

    @property
    def weight(self) -> int:
        return self.contact - 2


@dataclass(frozen=True)
class FlexScheme:
    flexes: tuple[Flex, ...]
    attempt: int
    seed: int

    @property
    def hyperflexes(self) -> list[Flex]:
        return [f for f in self.flexes if f.contact == 4]

    @property
    def hyperflex_count(self) -> int:
        return sum(f.count for f in self.hyperflexes)

    @property
    def weighted_total(self) -> int:
        return sum(f.count * f.weight for f in self.flexes)


def _line_point(line: Sequence, p: Sequence) -> list:
    """A point of ``line`` different from ``p``."""
    for e in ([1, 0, 0], [0, 1, 0], [0, 0, 1]):
        q = cross(line, e)
        if any(q) and any(cross(q, p)):
            return q
    raise ArithmeticError("tangent line degenerate")


def contact_order(f: TernaryForm, p: Sequence, line: Sequence) -> int:
    """Order of vanishing of ``f`` restricted to ``line`` at ``p``."""
    q = _line_point(line, p)
    # f(p + t q) expanded in t; coefficient k is (1/k!) * (q . grad)^k f at p
    coeffs = [Fraction(0)] * (f.degree + 1)
    powers = []
    for v in range(3):
        lin, acc = UPoly([p[v], q[v]]), [UPoly([1])]
        for _ in range(f.degree):
            acc.append(acc[-1] * lin)
        powers.append(acc)
    for (i, j, k), c in f.coeffs:
        term = powers[0][i] * powers[1][j] * powers[2][k]
        for d in range(term.degree + 1):
            coeffs[d] = coeffs[d] + c * term[d]
    for order, c in enumerate(coeffs):
        if c:
            return order
    return f.degree + 1


def _transpose_inverse(m: list[list[int]]) -> list[list[Fraction]]:
    det = Fraction(determinant(m))
    cof = [[(-1) ** (i + j) * determinant([[m[r][c] for c in range(3) if c != j]
                                           for r in range(3) if r != i])
            for j in range(3)] for i in range(3)]
    # (M^-1)^T = cof / det
    return [[Fraction(cof[i][j]) / det for j in range(3)] for i in range(3)]


def _apply(m: Sequence[Sequence], v: Sequence) -> tuple:
    return tuple(sum((m[i][j] * v[j] for j in range(3)), 0 * v[0]) for i in range(3))


def flex_scheme(branch: TernaryForm, seed: int = 0) -> FlexScheme:
    """Flexes of a smooth quartic with their contact orders.

    In a coordinate system where (0:0:1) lies on neither the quartic nor its
    Hessian, z is eliminated between the two; each irreducible factor q of
    the degree 24 eliminant gives a point (a : 1 : z(a)) over Q[a]/(q) as the
    linear gcd of the two restricted polynomials.  Any degeneracy (point on a
    curve, two flexes on one line through (0:0:1), root at infinity) moves
    to the next seeded coordinate change.
    """
    singular, _ = singular_points_exist(branch, seed)
    if singular:
        raise ValidationError("branch curve singular")
    for attempt in range(MAX_RETRIES + 1):
        m = coordinate_change(attempt, seed)
        g = branch.substitute(m) if attempt else branch
        h = g.hessian()
        if not g(0, 0, 1) or not h(0, 0, 1):
            continue
        r = eliminate_z(g, h)
        if r.is_zero() or not r.coeffs[0]:
            continue
        flexes = []
        ok = True
        for q, mult in irreducible_factors(r):
            k = NumberField(q.dehomogenize())
            a = k.gen
            fz = UPoly(list(reversed(g.restrict_z(a, k.one))))
            hz = UPoly(list(reversed(h.restrict_z(a, k.one))))
            common = gcd(fz, hz)
            if common.degree != 1:
                ok = False
                break
            z0 = -common[0] / common[1]
            p = (a, k.one, z0)
            tangent = tuple(g.diff(i)(*p) for i in range(3))
            contact = contact_order(g, p, tangent)
            if contact - 2 != mult:
                # the projection merged intersection multiplicities; retry
                ok = False
                break
            point = _apply(m, p)
            line = _apply(_transpose_inverse(m), tangent)
            flexes.append(Flex(k.modulus, point, line, contact, k.degree))
        if not ok:
            continue
        return FlexScheme(tuple(flexes), attempt, seed)
    raise DegenerateCoordinates()


def hyperflexes(branch: TernaryForm, seed: int = 0) -> list[Flex]:
    """Hyperflex orbits of a smooth quartic; see :func:`flex_scheme`."""
    return flex_scheme(branch, seed).hyperflexes


# -- cuspidal anticanonical curves in degree one ---------------------------

@dataclass(frozen=True)
class CuspReport:
    entries: tuple[CuspSite, ...]

    def __bool__(self) -> bool:
        return bool(self.entries)

    def __len__(self) -> int:
        return len(self.entries)


def cusp_report(v: ValidatedSurface) -> CuspReport:
    if not isinstance(v.model, WeierstrassDP1):
        raise ValueError("cusp report needs a Weierstrass degree 1 surface")
    return CuspReport(tuple(cusp_sites(v.model.a, v.model.b)))


__all__ = [
    "CuspReport",
    "EckardtWitness",
    "Flex",
    "FlexScheme",
    "LineOnCubic",
    "contact_order",
    "cusp_report",
    "eckardt_points",
    "flex_scheme",
    "hyperflexes",
    "lines_on_cubic",
]
