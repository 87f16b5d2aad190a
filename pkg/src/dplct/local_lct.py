"""Log canonical thresholds of plane curve germs at the origin.

Two independent methods:

* :func:`resolve_lct` blows up points until the total transform has simple
  normal crossings, tracking for every exceptional divisor ``E`` the order
  ``m_E`` of the pulled-back germ and the discrepancy ``a_E``; the threshold
  is ``min((a_E + 1)/m_E, 1/k)`` with ``k`` running over the multiplicities
  of the germ's components.
* :func:`newton_lct` reads ``min(1, 1/t0)`` off the Newton polygon, where
  ``(t0, t0)`` is the point where the diagonal leaves the Newton polyhedron;
  valid for Newton-nondegenerate germs only.

Centers with irrational coordinates are handled exactly: only multiple
roots of a tangent cone need a visit, and when such a root is irrational
the whole computation moves to an absolute number field containing it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, gcd as igcd
from typing import Sequence

from .algebra.extension import NumberField
from .algebra.forms import format_terms
from .algebra.factor import factor_bivariate
from .algebra.parse import parse_germ
from .algebra.tower import Factor, adjoin_root, factor_over
from .algebra.upoly import UPoly, format_upoly, gcd, squarefree_decomposition

DEFAULT_BUDGET = 64


class BudgetExceeded(RuntimeError):
    pass


class NewtonDegenerate(ValueError):
    def __init__(self, detail: str = ""):
        msg = "Newton-degenerate; use resolve_lct"
        super().__init__(f"{msg} ({detail})" if detail else msg)


Poly = dict  # (i, j) -> coefficient, meaning sum c x^i y^j


def _clean(p: Poly) -> Poly:
    return {k: c for k, c in p.items() if c}


def _mul(p: Poly, q: Poly) -> Poly:
    out: Poly = {}
    for (i1, j1), a in p.items():
        for (i2, j2), b in q.items():
            k = (i1 + i2, j1 + j2)
            out[k] = out[k] + a * b if k in out else a * b
    return _clean(out)


def _pow(p: Poly, n: int) -> Poly:
    out = {(0, 0): Fraction(1)}
    for _ in range(n):
        out = _mul(out, p)
    return out


@dataclass(frozen=True)
class PlaneGerm:
    """A polynomial in x, y with zero constant term, viewed at the origin."""

    poly: dict

    def __post_init__(self):
        poly = {(int(i), int(j)): Fraction(c) for (i, j), c in dict(self.poly).items()}
        poly = _clean(poly)
        if not poly:
            raise ValueError("germ is identically zero")
        if poly.get((0, 0)):
            raise ValueError("germ does not vanish at the origin")
        object.__setattr__(self, "poly", poly)

    @classmethod
    def parse(cls, text: str) -> "PlaneGerm":
        return cls(parse_germ(text))

    @property
    def multiplicity(self) -> int:
        return min(i + j for i, j in self.poly)

    def __pow__(self, k: int) -> "PlaneGerm":
        return PlaneGerm(_pow(self.poly, k))

    def transform(self, matrix: Sequence[Sequence]) -> "PlaneGerm":
        """Substitute ``x -> a x + b y`` and ``y -> c x + d y`` for ``[[a, b], [c, d]]``."""
        (a, b), (c, d) = matrix
        if not Fraction(a) * d - Fraction(b) * c:
            raise ValueError("linear change must be invertible")
        lx = _clean({(1, 0): Fraction(a), (0, 1): Fraction(b)})
        ly = _clean({(1, 0): Fraction(c), (0, 1): Fraction(d)})
        out: Poly = {}
        for (i, j), coef in self.poly.items():
            term = _mul(_pow(lx, i), _pow(ly, j))
            for k, v in term.items():
                out[k] = out.get(k, 0) + coef * v
        return PlaneGerm(out)

    def __str__(self) -> str:
        return format_terms(dict(self.poly), ("x", "y"))


def _as_germ(g) -> PlaneGerm:
    if isinstance(g, PlaneGerm):
        return g
    if isinstance(g, str):
        return PlaneGerm.parse(g)
    return PlaneGerm(g)


# -- resolution -----------------------------------------------------------

@dataclass
class ResolutionNode:
    """An exceptional divisor created by blowing up ``center``."""

    center: str
    mult: int
    discrepancy: int
    children: list = field(default_factory=list)

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.discrepancy + 1, self.mult)

    def walk(self):
        yield self
        for c in self.children:
            yield from c.walk()


@dataclass(frozen=True)
class ResolutionResult:
    value: Fraction
    tree: tuple  # top-level ResolutionNode (empty if already SNC)
    components: tuple  # (factor as dict, multiplicity) through the origin

    def nodes(self) -> list[ResolutionNode]:
        return [n for root in self.tree for n in root.walk()]

    @property
    def blowups(self) -> int:
        return len(self.nodes())


@dataclass
class _Point:
    """Local picture at the origin of a chart: strict transforms and exceptional axes."""

    comps: list  # [(poly over the current field, multiplicity k)]
    exc_x: tuple | None  # (m, a) of an exceptional divisor along {x = 0}
    exc_y: tuple | None  # same along {y = 0}
    field: NumberField | None


def _mult(h: Poly) -> int:
    return min(i + j for i, j in h)


def _cone(h: Poly) -> UPoly:
    """Tangent cone dehomogenized at x = 1, as a polynomial in c = y/x."""
    m = _mult(h)
    coeffs = [0] * (m + 1)
    for (i, j), c in h.items():
        if i + j == m:
            coeffs[j] = c
    return UPoly(coeffs)


def _chart1(h: Poly) -> Poly:
    m = _mult(h)
    return {(i + j - m, j): c for (i, j), c in h.items()}


def _chart2(h: Poly) -> Poly:
    m = _mult(h)
    return {(i, i + j - m): c for (i, j), c in h.items()}


def _shift_y(h: Poly, c) -> Poly:
    """``h(x, y + c)``."""
    if not c:
        return h
    out: Poly = {}
    for (i, j), coef in h.items():
        cp = c ** 0
        for k in range(j, -1, -1):
            key = (i, k)
            term = coef * comb(j, k) * cp
            out[key] = out[key] + term if key in out else term
            cp = cp * c
    return _clean(out)


def _through_origin(comps) -> list:
    return [(h, k) for h, k in comps if not h.get((0, 0))]


def _is_snc(p: _Point) -> bool:
    ms = sum(_mult(h) for h, _ in p.comps)
    exc = [e for e in (p.exc_x, p.exc_y) if e is not None]
    if ms == 0:
        return True
    if ms == 1:
        if not exc:
            return True
        if len(exc) == 2:
            return False
        (h, _), = p.comps
        a, b = h.get((1, 0), 0), h.get((0, 1), 0)
        return bool(b) if p.exc_x is not None else bool(a)
    if ms == 2 and not exc:
        quad = UPoly([1])
        for h, _ in p.comps:
            quad = quad * _cone(h)
        # degree drop means a root at c = infinity; discriminant of the binary quadric
        c0, c1, c2 = quad[0], quad[1], quad[2]
        return bool(c1 * c1 - 4 * c0 * c2)
    return False


class _Resolver:
    def __init__(self, budget: int):
        self.budget = budget
        self.count = 0

    def run(self, p: _Point, center: str) -> list[ResolutionNode]:
        if _is_snc(p):
            return []
        self.count += 1
        if self.count > self.budget:
            raise BudgetExceeded(f"blow-up budget of {self.budget} exceeded")
        through = [e for e in (p.exc_x, p.exc_y) if e is not None]
        m_e = sum(k * _mult(h) for h, k in p.comps) + sum(m for m, _ in through)
        a_e = 1 + sum(a for _, a in through)
        node = ResolutionNode(center, m_e, a_e)
        assert node.discrepancy == 1 + sum(a for _, a in through)
        new = (m_e, a_e)

        ms = sum(_mult(h) for h, _ in p.comps)
        cone = UPoly([1])
        for h, _ in p.comps:
            cone = cone * _cone(h)
        at_infinity = ms - cone.degree
        if at_infinity >= 2 or (at_infinity == 1 and p.exc_x is not None):
            comps = _through_origin([(_chart2(h), k) for h, k in p.comps])
            q = _Point(comps, p.exc_x, new, p.field)
            node.children += self.run(q, f"{center} > x/y=0")

        for f, e in squarefree_decomposition(cone.monic()):
            if f.degree < 1:
                continue
            if e == 1:
                if p.exc_y is not None and not f[0]:
                    node.children += self._visit_root(p, new, Fraction(0), p.field, None, center)
                continue
            for fac in factor_over(f, p.field):
                node.children += self._visit(p, new, fac, center)
        return [node]

    def _visit(self, p: _Point, new, fac: Factor, center: str) -> list[ResolutionNode]:
        f = fac.poly
        if f.degree == 1:
            root = -f[0] / f[1]
            return self._visit_root(p, new, root, p.field, None, center)
        adj = adjoin_root(fac, p.field)
        return self._visit_root(p, new, adj.root, adj.field, adj.embed, center, f)

    def _visit_root(self, p, new, root, fld, embed, center, minpoly=None):
        comps = []
        for h, k in p.comps:
            h1 = _chart1(h)
            if embed is not None:
                h1 = {key: embed(c) for key, c in h1.items()}
            comps.append((_shift_y(h1, root), k))
        comps = _through_origin(comps)
        exc_y = p.exc_y if not root else None
        q = _Point(comps, new, exc_y, fld)
        label = f"root of {format_upoly(minpoly, 'c')}" if minpoly is not None else str(root)
        return self.run(q, f"{center} > y/x={label}")


def resolve_lct(g, budget: int = DEFAULT_BUDGET) -> ResolutionResult:
    """Threshold at the origin via an embedded log resolution by point blow-ups."""
    germ = _as_germ(g)
    comps = [(h, k) for h, k in factor_bivariate(germ.poly) if not h.get((0, 0))]
    resolver = _Resolver(budget)
    tree = resolver.run(_Point(list(comps), None, None, None), "origin")
    candidates = [Fraction(1, k) for _, k in comps]
    candidates += [n.ratio for root in tree for n in root.walk()]
    return ResolutionResult(min(candidates), tuple(tree), tuple(comps))


# -- Newton polygon ------------------------------------------------------

@dataclass(frozen=True)
class NewtonPolygon:
    """Compact part of the boundary of the Newton polyhedron, left to right."""

    vertices: tuple

    @property
    def edges(self) -> list[tuple]:
        return list(zip(self.vertices, self.vertices[1:]))


def _cross(o, a, b) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def newton_polygon(g) -> NewtonPolygon:
    germ = _as_germ(g)
    pts = sorted(germ.poly)
    hull: list = []
    for p in pts:
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], p) <= 0:
            hull.pop()
        hull.append(p)
    # keep the strictly descending part, starting at the lowest point of the first column
    start = min(p for p in pts if p[0] == pts[0][0])
    chain = [start]
    for p in hull:
        if p[0] > chain[-1][0] and p[1] < chain[-1][1]:
            chain.append(p)
    return NewtonPolygon(tuple(chain))


def _face_polynomial(germ: PlaneGerm, v0, v1) -> UPoly:
    n = igcd(v1[0] - v0[0], v0[1] - v1[1])
    a, b = (v1[0] - v0[0]) // n, (v0[1] - v1[1]) // n
    return UPoly([germ.poly.get((v0[0] + k * a, v0[1] - k * b), 0) for k in range(n + 1)])


def newton_lct(g) -> Fraction:
    """``min(1, 1/t0)`` from the Newton polygon; nondegenerate germs only."""
    germ = _as_germ(g)
    poly = newton_polygon(germ)
    verts = poly.vertices
    t0 = Fraction(max(verts[0][0], verts[-1][1]))
    for v0, v1 in poly.edges:
        face = _face_polynomial(germ, v0, v1)
        if gcd(face, face.derivative()).degree > 0:
            raise NewtonDegenerate(f"face from {v0} to {v1} has a repeated root")
        n = igcd(v1[0] - v0[0], v0[1] - v1[1])
        a, b = (v1[0] - v0[0]) // n, (v0[1] - v1[1]) // n
        t0 = max(t0, Fraction(b * v0[0] + a * v0[1], a + b))
    return min(Fraction(1), 1 / t0)
