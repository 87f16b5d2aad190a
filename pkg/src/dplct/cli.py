"""``dplct`` command line front end.

Exit codes: 0 success, 1 usage error (bad flags, malformed JSON or
polynomial), 2 validation rejection, 3 internal budget exceeded or an
internal consistency check failed.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction

from .algebra.extension import ExtScalar, NumberField
from .algebra.forms import BinaryForm, TernaryForm, format_binary
from .algebra.parse import (
    PolynomialSyntaxError,
    parse_binary_form,
    parse_polynomial,
    parse_ternary_form,
)
from .algebra.upoly import UPoly, format_upoly
from .detectors import EckardtWitness, Flex, cusp_report, eckardt_points, flex_scheme
from .equivariant import (
    Determined,
    Explicit,
    GroupActionSummary,
    RiemannRoch,
    curated_lookup,
    invariant_lct_decision,
)
from .global_lct import LctCertificate, global_lct
from .lattice import Lattice, minus_one_classes, minus_two_classes
from .local_lct import (
    BudgetExceeded,
    NewtonDegenerate,
    PlaneGerm,
    ResolutionNode,
    newton_lct,
    resolve_lct,
)
from .surfaces import (
    BlowupPlane,
    CuspSite,
    DegenerateCoordinates,
    DoubleCoverQuartic,
    Plane,
    QuadricProduct,
    ValidatedSurface,
    ValidationError,
    WeierstrassDP1,
    validate,
)

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


# -- surface descriptors -------------------------------------------------

def _parse_in_a(text: str) -> UPoly:
    """Univariate polynomial in the extension generator ``a``."""
    terms = parse_polynomial(str(text).replace("a", "t"), "t")
    deg = max((k[0] for k in terms), default=0)
    coeffs = [Fraction(0)] * (deg + 1)
    for (e,), c in terms.items():
        coeffs[e] = c
    return UPoly(coeffs)


def _coordinate(value, field: NumberField | None):
    if isinstance(value, bool):
        raise UsageError(f"bad coordinate {value!r}")
    if field is None:
        try:
            return Fraction(str(value))
        except ValueError:
            raise UsageError(f"coordinate {value!r} is not a rational number") from None
    return field(_parse_in_a(value))


def surface_from_descriptor(desc: dict):
    if not isinstance(desc, dict) or "variant" not in desc:
        raise UsageError("surface descriptor must be an object with a 'variant' key")
    variant = desc["variant"]
    if variant == "plane":
        return Plane()
    if variant == "quadric_product":
        return QuadricProduct()
    if variant == "blowup":
        ext = desc.get("extension")
        field = NumberField(_parse_in_a(ext)) if ext else None
        pts = desc.get("points")
        if not isinstance(pts, list):
            raise UsageError("blowup descriptor needs a list of points")
        points = [tuple(_coordinate(c, field) for c in p) for p in pts]
        return BlowupPlane(tuple(points), field)
    if variant == "double_cover_quartic":
        return DoubleCoverQuartic(parse_ternary_form(desc["branch"], 4))
    if variant == "weierstrass_dp1":
        return WeierstrassDP1(parse_binary_form(desc["a"], 4), parse_binary_form(desc["b"], 6))
    raise UsageError(f"unknown variant {variant!r}")


def _load_surface(path: str, seed: int) -> ValidatedSurface:
    try:
        with open(path, encoding="utf-8") as fh:
            desc = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: malformed JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    try:
        model = surface_from_descriptor(desc)
    except KeyError as exc:
        raise UsageError(f"descriptor is missing the key {exc.args[0]!r}") from None
    return validate(model, seed)


# -- serialization --------------------------------------------------------

def _value(x):
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    if isinstance(x, int):
        return x
    if isinstance(x, float):
        return "inf" if math.isinf(x) else str(x)
    if isinstance(x, (Fraction, ExtScalar)):
        return str(x)
    if isinstance(x, UPoly):
        return format_upoly(x, "a")
    if isinstance(x, BinaryForm):
        return format_binary(x)
    if isinstance(x, TernaryForm):
        return str(x)
    if isinstance(x, (list, tuple)):
        return [_value(v) for v in x]
    raise TypeError(f"cannot serialize {type(x).__name__}")


def witness_json(w) -> dict:
    if isinstance(w, EckardtWitness):
        out = {"kind": "eckardt", "type": w.type, "lines": [l.label for l in w.triple]}
        if w.type == "T1":
            out["point"] = _value(w.location)
        else:
            out["exceptional_index"] = w.location[0]
            out["tangent_line"] = _value(w.location[1])
        return out
    if isinstance(w, Flex):
        return {
            "kind": "flex",
            "modulus": format_upoly(w.modulus, "a"),
            "point": _value(w.point),
            "tangent": _value(w.tangent),
            "contact": w.contact,
            "count": w.count,
        }
    if isinstance(w, CuspSite):
        return {
            "kind": "cusp",
            "factor": format_binary(w.factor),
            "ord_a": _value(w.ord_a),
            "ord_b": w.ord_b,
            "site": w.site,
        }
    raise TypeError(f"unknown witness {w!r}")


def surface_json(v: ValidatedSurface) -> dict:
    return {
        "degree": v.degree,
        "type_tag": v.type_tag,
        "singularities": [
            {"type": s.type, "factor": format_binary(s.factor), "site": s.site}
            for s in v.singularities
        ],
        "notes": list(v.notes),
    }


def certificate_json(cert: LctCertificate, v: ValidatedSurface) -> dict:
    return {
        "value": str(cert.value),
        "branch": cert.branch,
        "theorem": cert.theorem,
        "assumptions": list(cert.assumptions),
        "witnesses": [witness_json(w) for w in cert.witnesses],
        "surface": surface_json(v),
    }


def node_json(n: ResolutionNode) -> dict:
    return {
        "center": n.center,
        "mult": n.mult,
        "discrepancy": n.discrepancy,
        "ratio": str(n.ratio),
        "children": [node_json(c) for c in n.children],
    }


def dumps(obj) -> str:
    """Canonical JSON: sorted keys, fixed indentation, no floats."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False)


# -- subcommands ----------------------------------------------------------

def cmd_global(args) -> tuple[str, dict]:
    v = _load_surface(args.input, args.seed)
    cert = global_lct(v, args.seed)
    data = certificate_json(cert, v)
    lines = [str(cert.value), f"branch: {cert.branch}", f"theorem: {cert.theorem}"]
    lines += [f"assumption: {a}" for a in cert.assumptions]
    lines += [f"witness: {json.dumps(witness_json(w), sort_keys=True)}" for w in cert.witnesses]
    return "\n".join(lines), data


def cmd_local(args) -> tuple[str, dict]:
    germ = PlaneGerm.parse(args.poly)
    data = {"germ": str(germ), "method": args.method}
    lines = []
    if args.method in ("resolve", "both"):
        res = resolve_lct(germ, args.budget)
        data["resolve"] = str(res.value)
        data["tree"] = [node_json(n) for n in res.tree]
        value = res.value
    if args.method in ("newton", "both"):
        try:
            nv = newton_lct(germ)
        except NewtonDegenerate:
            if args.method == "newton":
                raise
            nv = None
            print("note: germ is Newton-degenerate; newton method not applicable", file=sys.stderr)
        data["newton"] = None if nv is None else str(nv)
        if args.method == "newton":
            value = nv
        elif nv is not None and nv != value:
            raise AssertionError(f"methods disagree: resolve {value}, newton {nv}")
    data["value"] = str(value)
    lines.append(str(value))
    if args.method == "both":
        for root in data["tree"]:
            lines += _tree_lines(root, 0)
    return "\n".join(lines), data


def _tree_lines(node: dict, depth: int) -> list[str]:
    out = ["  " * depth + f"E: mult {node['mult']}, discrepancy {node['discrepancy']}, ratio {node['ratio']}  [{node['center']}]"]
    for c in node["children"]:
        out += _tree_lines(c, depth + 1)
    return out


def cmd_equiv(args) -> tuple[str, dict]:
    if args.lookup:
        if any(v is not None for v in (args.r, args.k, args.m, args.h0, args.ksquare)):
            raise UsageError("--lookup cannot be combined with --r/--k/--m/--h0/--ksquare")
        entry = curated_lookup(args.lookup)
        data = {"name": entry.name, "value": str(entry.value), "provenance": entry.provenance, "note": entry.note}
        text = f"{entry.value}\n{entry.provenance}" + (f"\nnote: {entry.note}" if entry.note else "")
        return text, data
    if None in (args.r, args.k, args.m):
        raise UsageError("equiv needs --r, --k and --m (or --lookup NAME)")
    if args.h0 is not None and args.ksquare is not None:
        raise UsageError("give at most one of --h0 and --ksquare")
    source = None
    if args.h0 is not None:
        source = Explicit(args.h0)
    elif args.ksquare is not None:
        source = RiemannRoch(args.ksquare)
    try:
        summary = GroupActionSummary(args.r, args.k, args.m, source)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    dec = invariant_lct_decision(summary)
    word = "determined" if isinstance(dec.outcome, Determined) else "upper-bound"
    data = {"outcome": word, "value": str(dec.value), "h0": dec.h0, "rationale": dec.rationale}
    return f"{word} {dec.value}\n{dec.rationale}", data


def cmd_lattice(args) -> tuple[str, dict]:
    try:
        lat = Lattice(args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    classes = minus_one_classes(lat) if args.list == "-1" else minus_two_classes(lat)
    data = {"n": args.n, "self_intersection": int(args.list), "count": len(classes),
            "classes": [list(c.coords) for c in classes]}
    text = "\n".join([f"{len(classes)} classes"] + [str(c) for c in classes])
    return text, data


def cmd_detect(args) -> tuple[str, dict]:
    v = _load_surface(args.input, args.seed)
    if args.what == "eckardt":
        if v.degree != 3:
            raise ValidationError("eckardt detection needs a six-point blow-up")
        found = eckardt_points(v)
        items = [witness_json(w) for w in found]
    elif args.what == "hyperflex":
        if not isinstance(v.model, DoubleCoverQuartic):
            raise ValidationError("hyperflex detection needs a double cover of the plane")
        scheme = flex_scheme(v.model.branch, args.seed)
        items = [witness_json(f) for f in scheme.hyperflexes]
        data = {"detector": "hyperflex", "orbits": items, "count": scheme.hyperflex_count,
                "weighted_flex_total": scheme.weighted_total, "attempt": scheme.attempt}
        return f"{scheme.hyperflex_count} hyperflexes\n" + "\n".join(
            json.dumps(i, sort_keys=True) for i in items), data
    else:
        if not isinstance(v.model, WeierstrassDP1):
            raise ValidationError("cusp detection needs a Weierstrass degree 1 surface")
        items = [witness_json(c) for c in cusp_report(v).entries]
    data = {"detector": args.what, "witnesses": items, "count": len(items)}
    return f"{len(items)} witnesses\n" + "\n".join(json.dumps(i, sort_keys=True) for i in items), data


# -- driver ---------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="dplct", description="Exact log canonical thresholds of del Pezzo surfaces.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, with_seed=False):
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        if with_seed:
            sp.add_argument("--seed", type=int, default=0, help="seed for coordinate-change retries")

    g = sub.add_parser("global", help="global threshold of a surface")
    g.add_argument("--input", required=True, help="surface descriptor (JSON file)")
    common(g, True)

    loc = sub.add_parser("local", help="threshold of a plane curve germ at the origin")
    loc.add_argument("--poly", required=True, help='germ in x, y, e.g. "y^2 - x^3"')
    loc.add_argument("--method", choices=("resolve", "newton", "both"), default="resolve")
    loc.add_argument("--budget", type=int, default=64, help="maximum number of blow-ups")
    common(loc)

    e = sub.add_parser("equiv", help="group-invariant threshold decision or curated value")
    e.add_argument("--r", type=int)
    e.add_argument("--k", type=int)
    e.add_argument("--m", type=int)
    e.add_argument("--h0", type=int, help="explicit h0((m-r)H)")
    e.add_argument("--ksquare", type=int, help="K^2, to get h0 by Riemann-Roch")
    e.add_argument("--lookup", metavar="NAME", help="curated table entry")
    common(e)

    lat = sub.add_parser("lattice", help="(-1)- or (-2)-classes of the blown-up plane")
    lat.add_argument("--n", type=int, required=True)
    lat.add_argument("--list", choices=("-1", "-2"), required=True)
    common(lat)

    d = sub.add_parser("detect", help="raw detector output")
    d.add_argument("what", choices=("eckardt", "hyperflex", "cusp"))
    d.add_argument("--input", required=True)
    common(d, True)
    return p


COMMANDS = {
    "global": cmd_global,
    "local": cmd_local,
    "equiv": cmd_equiv,
    "lattice": cmd_lattice,
    "detect": cmd_detect,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text, data = COMMANDS[args.command](args)
    except (UsageError, PolynomialSyntaxError) as exc:
        print(f"dplct: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValidationError, NewtonDegenerate) as exc:
        print(f"dplct: rejected: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (BudgetExceeded, DegenerateCoordinates, AssertionError) as exc:
        print(f"dplct: internal: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        print(f"dplct: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(dumps(data) if args.json else text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
