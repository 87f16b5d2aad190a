"""Global log canonical thresholds of del Pezzo surfaces.

The value is read off a finite table indexed by the degree and by one
geometric property per low degree: Eckardt points on cubic surfaces,
tacnodal anticanonical curves in degree 2 (hyperflexes of the branch
quartic), cuspidal anticanonical curves in degree 1 (and for Du Val
degree 1 surfaces, where the cusp sits).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .detectors import cusp_report, eckardt_points, flex_scheme
from .surfaces import ValidatedSurface

MAIN_VALUES = frozenset(Fraction(v) for v in ("1", "5/6", "3/4", "2/3", "1/2", "1/3"))
DU_VAL_VALUES = frozenset(Fraction(v) for v in ("1", "5/6", "3/4", "2/3"))

# threshold attached to a cusp of an anticanonical curve, by where it sits
CUSP_OMEGA = {"A2": Fraction(2, 3), "A1": Fraction(3, 4), "SmoothPoint": Fraction(5, 6)}

MODEL_TACNODE = "model-level tacnode criterion: branch quartic has a line of contact order 4"
MODEL_CUSP = "model-level cusp criterion: common root of a and b"
MIN_RULE = "min-rule: smallest value over all cuspidal anticanonical curves"


@dataclass(frozen=True)
class LctCertificate:
    value: Fraction
    branch: str
    witnesses: tuple = ()
    assumptions: tuple = ()
    theorem: str = "smooth del Pezzo classification"


def lct_weighted_plane(n: int) -> Fraction:
    """Global threshold of the weighted plane P(1, 1, n)."""
    if n < 1:
        raise ValueError("weight n must be a positive integer")
    return Fraction(1, 2 + n)


def ke_criterion(lct_value, dim: int) -> bool:
    """Sufficient condition for an orbifold Kahler-Einstein metric."""
    lct_value = Fraction(lct_value)
    if lct_value < 0:
        raise ValueError("threshold must be non-negative")
    if dim < 1:
        raise ValueError("dimension must be positive")
    return lct_value > Fraction(dim, dim + 1)


def _degree_one(v: ValidatedSurface) -> LctCertificate:
    report = cusp_report(v)
    assumptions = (MODEL_CUSP,)
    if v.type_tag == "DP1Smooth":
        theorem = "smooth del Pezzo classification"
    elif all(s.type == "A1" for s in v.singularities):
        theorem = "degree 1 with ordinary double points"
    else:
        theorem = "degree 1 with A1/A2 points"
    if not report:
        return LctCertificate(Fraction(1), "degree1_no_cuspidal_curves", (), assumptions, theorem)
    value = min(CUSP_OMEGA[e.site] for e in report.entries)
    branch = {
        Fraction(2, 3): "degree1_cusp_at_A2",
        Fraction(3, 4): "degree1_cusp_at_A1",
        Fraction(5, 6): "degree1_cusp_at_smooth_point",
    }[value]
    witnesses = tuple(e for e in report.entries if CUSP_OMEGA[e.site] == value)
    if len({e.site for e in report.entries}) > 1:
        assumptions += (MIN_RULE,)
    return LctCertificate(value, branch, witnesses, assumptions, theorem)


def global_lct(v: ValidatedSurface, seed: int = 0) -> LctCertificate:
    if not isinstance(v, ValidatedSurface):
        raise TypeError("global_lct needs a validated surface; call validate() first")
    d, tag = v.degree, v.type_tag
    if tag == "P2":
        return LctCertificate(Fraction(1, 3), "plane")
    if tag == "F1":
        return LctCertificate(Fraction(1, 3), "degree8_blowup_F1")
    if tag == "P1xP1":
        return LctCertificate(Fraction(1, 2), "quadric_product")
    if d == 7:
        return LctCertificate(Fraction(1, 3), "degree7")
    if d in (5, 6):
        return LctCertificate(Fraction(1, 2), f"degree{d}")
    if d == 4:
        return LctCertificate(Fraction(2, 3), "degree4")
    if d == 3:
        witnesses = eckardt_points(v)
        if witnesses:
            return LctCertificate(Fraction(2, 3), "cubic_with_eckardt_point", tuple(witnesses))
        return LctCertificate(Fraction(3, 4), "cubic_without_eckardt_points")
    if d == 2:
        scheme = flex_scheme(v.model.branch, seed)
        note = f"flexes computed in coordinate change #{scheme.attempt} (seed {seed})"
        hyper = tuple(scheme.hyperflexes)
        if hyper:
            return LctCertificate(
                Fraction(3, 4), "degree2_tacnodal_curve", hyper, (MODEL_TACNODE, note)
            )
        return LctCertificate(Fraction(5, 6), "degree2_no_tacnodal_curves", (), (MODEL_TACNODE, note))
    if d == 1:
        return _degree_one(v)
    raise ValueError(f"unsupported surface: degree {d}, type {tag}")
