"""``folcalc`` command line: JSON in, JSON (or a flat table) out.

Exit codes: 0 success, 1 domain error (a precondition of the operation
failed), 2 malformed input.  Errors are reported as ``{"error": message}`` on
standard output.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
from fractions import Fraction
from typing import Iterator

import numpy as np

from . import circle, covers, existence, forms
from .seifert import (
    SeifertError,
    SeifertInvariants,
    base_orbifold_type,
    euler_number,
    normalize,
    normalized_slopes,
    orbifold_euler_characteristic,
    reverse_orientation,
)

DOMAIN_ERRORS = (SeifertError, circle.CircleMapError, circle.RepresentationError, forms.FormError,
                 covers.BrieskornConsistencyError)


class MalformedInput(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise MalformedInput(message)


def enumerate_seifert(max_den: int, b_range, r: int, g: int = 0,
                      orbifold_filter: str | None = None) -> Iterator[SeifertInvariants]:
    """Every normalized ``(g, b, s_1..s_r)`` with denominators ``<= max_den``.

    Ordered by ``b`` then lexicographically by slopes; each tuple appears once.
    """
    slopes = normalized_slopes(max_den) if max_den >= 2 else []
    if r > 0 and not slopes:
        return
    for b in b_range:
        for combo in itertools.combinations_with_replacement(slopes, r):
            inv = SeifertInvariants(g, b, combo, True)
            if orbifold_filter is None or base_orbifold_type(inv) == orbifold_filter:
                yield inv


# --- input parsing ----------------------------------------------------------------

def _load(text_or_path: str):
    text = text_or_path
    if text_or_path.startswith("@"):
        try:
            with open(text_or_path[1:]) as fh:
                text = fh.read()
        except OSError as exc:
            raise MalformedInput(str(exc)) from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"invalid JSON: {exc}") from exc


def _parse(builder, raw):
    try:
        return builder(_load(raw))
    except DOMAIN_ERRORS:
        raise
    except (TypeError, KeyError, ValueError, ZeroDivisionError) as exc:
        raise MalformedInput(str(exc)) from exc


def _inv(args) -> SeifertInvariants:
    raw = args.inv if args.inv is not None else sys.stdin.read()
    return _parse(SeifertInvariants.from_json, raw)


def _normalized_inv(args) -> SeifertInvariants:
    inv = _inv(args)
    return inv if inv.normalized else normalize(inv)


def _map(raw) -> circle.LiftedCircleMap:
    return _parse(circle.map_from_json, raw)


def _rep(args) -> circle.SurfaceGroupRep:
    if args.rep is not None:
        return _parse(circle.SurfaceGroupRep.from_json, args.rep)
    return circle.fuchsian_generators(args.genus)


def _rational(q: Fraction) -> dict:
    return {"num": q.numerator, "den": q.denominator}


def _estimate(est: circle.Estimate) -> dict:
    out = est.to_json()
    # floats cannot carry e.g. 1/3; add the exact value when it differs
    if est.exact and isinstance(est.estimate, Fraction) and Fraction(float(est.estimate)) != est.estimate:
        out["value"] = _rational(est.estimate)
    return out


# --- handlers ---------------------------------------------------------------------

def cmd_normalize(args):
    out = normalize(_inv(args)).to_json()
    out["exact"] = True
    return out


def cmd_reverse(args):
    out = reverse_orientation(_normalized_inv(args)).to_json()
    out["exact"] = True
    return out


def cmd_euler(args):
    return {"euler_number": _rational(euler_number(_inv(args))), "exact": True}


def cmd_orbifold(args):
    inv = _normalized_inv(args)
    return {"chi": _rational(orbifold_euler_characteristic(inv)), "type": base_orbifold_type(inv),
            "exact": True}


def cmd_exists(args):
    inv = _inv(args)
    if args.which == "hor-foliation":
        d = existence.has_psl2r_horizontal_foliation(inv, strict_sum=args.strict_sum)
    elif args.which == "hor-contact":
        d = existence.has_horizontal_contact(inv)
    else:
        d = existence.is_realizable(inv)
    out = d.to_json()
    out["exact"] = True
    return out


def cmd_crosscheck(args):
    out = existence.cross_check_existence(_inv(args), require_hyperbolic=not args.any_base).to_json()
    out["exact"] = True
    return out


def cmd_cover(args):
    return covers.fiberwise_branched_cover(_inv(args), args.n).to_json()


def cmd_twisting(args):
    inv = _inv(args)
    return {"candidates": covers.twisting_candidates(inv, args.n_max), "n_max": args.n_max,
            "necessary_only": True, "exact": True}


def cmd_brieskorn(args):
    return covers.brieskorn_report(args.k, args.n_max).to_json()


def cmd_components(args):
    return {"genus": args.genus, "euler": args.euler,
            "lower_bound": covers.component_lower_bound(args.genus, args.euler), "exact": True}


def cmd_trnum(args):
    return _estimate(circle.translation_number(_map(args.map), args.iters, args.iterate))


def cmd_rotnum(args):
    return _estimate(circle.rotation_number(_map(args.map), args.iters, args.iterate))


def cmd_cover_lift(args):
    lift = circle.fiberwise_cover_lift(_map(args.map), args.n)
    return {"map": lift.to_json(),
            "translation_number": _estimate(circle.translation_number(lift, args.iters, args.iterate))}


def cmd_fuchsian(args):
    rep = circle.fuchsian_generators(args.genus)
    out = rep.to_json()
    out["traces"] = [f.trace for f in rep.generators]
    out["exact"] = False
    out["error_bound"] = rep.relation_residual
    return out


def cmd_euler_class(args):
    rep = _rep(args)
    return {"euler_class": circle.euler_class(rep, args.samples), "relation_residual": rep.relation_residual,
            "exact": False, "error_bound": rep.relation_residual}


def cmd_defect(args):
    return _estimate(circle.matsumoto_defect(_map(args.map1), _map(args.map2), args.iters))


def cmd_stability(args):
    rep = _rep(args)
    if args.h is not None:
        h = _map(args.h)
    else:
        h = circle.random_smooth_map(np.random.default_rng(args.seed), shift=True)
    words = [w.strip() for w in args.words.split(",") if w.strip()] if args.words else None
    try:
        report = circle.stability_experiment(rep, h, args.iters, words)
    except ValueError as exc:
        if isinstance(exc, DOMAIN_ERRORS):
            raise
        raise MalformedInput(str(exc)) from exc
    out = report.to_json()
    out["h"] = h.to_json()
    return out


def cmd_forms(args):
    params = {}
    model = args.model.replace("-", "_")
    if model == "deformation":
        params["t"] = args.t
        params["base"] = args.base
        if args.theta_minus is not None:
            params["theta_minus"] = args.theta_minus
        if args.theta_plus is not None:
            params["theta_plus"] = args.theta_plus
    elif model == "normal_form":
        params["n"] = args.n
    alpha = forms.build_model(model, **params)
    out = forms.classify(alpha, args.grid, args.tol)
    out["model"] = model
    return out


def cmd_enumerate(args):
    filt = None if args.filter == "none" else args.filter
    return (inv.to_json() for inv in
            enumerate_seifert(args.max_den, range(args.b_min, args.b_max + 1), args.r, args.g, filt))


# --- output -------------------------------------------------------------------------

def _flatten(obj, prefix=""):
    if isinstance(obj, dict):
        if set(obj) == {"num", "den"}:
            yield prefix, f"{obj['num']}/{obj['den']}"
            return
        for k, v in obj.items():
            yield from _flatten(v, f"{prefix}.{k}" if prefix else str(k))
    elif isinstance(obj, list) and any(isinstance(v, (dict, list)) for v in obj):
        for i, v in enumerate(obj):
            yield from _flatten(v, f"{prefix}[{i}]")
    else:
        yield prefix, json.dumps(obj)


def render(obj, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(obj)
    rows = list(_flatten(obj))
    width = max((len(k) for k, _ in rows), default=0)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in rows)


def _render_inv_row(obj) -> str:
    slopes = ", ".join(f"{s['num']}/{s['den']}" for s in obj["slopes"])
    return f"{obj['g']}\t{obj['b']}\t{slopes}"


# --- parser -------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "table"), default="json")

    p = _Parser(prog="folcalc", description="Seifert invariants, circle dynamics and 1-form checks.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_, inv=False):
        sp = sub.add_parser(name, help=help_, parents=[common])
        sp.set_defaults(func=func)
        if inv:
            sp.add_argument("--inv", help="Seifert invariants JSON (or @file); stdin if omitted")
        return sp

    add("normalize", cmd_normalize, "normal form of Seifert invariants", inv=True)
    add("reverse", cmd_reverse, "orientation reversal", inv=True)
    add("euler", cmd_euler, "rational Euler number", inv=True)
    add("orbifold", cmd_orbifold, "base orbifold Euler characteristic and type", inv=True)

    ex = sub.add_parser("exists", help="existence criteria")
    ex_sub = ex.add_subparsers(dest="which", required=True, parser_class=_Parser)
    for which in ("hor-foliation", "hor-contact", "realizable"):
        sp = ex_sub.add_parser(which, parents=[common])
        sp.add_argument("--inv")
        sp.set_defaults(func=cmd_exists)
        if which == "hor-foliation":
            sp.add_argument("--strict-sum", action="store_true")

    add("crosscheck", cmd_crosscheck, "contact versus realizability consistency", inv=True).add_argument(
        "--any-base", action="store_true", help="skip the hyperbolic-base precondition")
    add("cover", cmd_cover, "fiberwise branched cover quotient", inv=True).add_argument(
        "--n", type=int, required=True)
    add("twisting", cmd_twisting, "ceiling-equation twisting candidates", inv=True).add_argument(
        "--n-max", type=int, required=True)
    sp = add("brieskorn", cmd_brieskorn, "Brieskorn family report")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--n-max", type=int)
    sp = add("components", cmd_components, "lower bound on path components")
    sp.add_argument("--genus", type=int, required=True)
    sp.add_argument("--euler", type=int, required=True)

    for name, func in (("trnum", cmd_trnum), ("rotnum", cmd_rotnum)):
        sp = add(name, func, f"{name} of a lifted circle map")
        sp.add_argument("--map", required=True)
        sp.add_argument("--iters", type=int, default=10_000)
        sp.add_argument("--iterate", action="store_true", help="iterate even for rigid translations")
    sp = add("cover-lift", cmd_cover_lift, "fiberwise cover lift of a circle map")
    sp.add_argument("--map", required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--iters", type=int, default=10_000)
    sp.add_argument("--iterate", action="store_true")
    add("fuchsian", cmd_fuchsian, "Fuchsian surface group generators").add_argument(
        "--genus", type=int, default=2)
    sp = add("euler-class", cmd_euler_class, "Euler class of a representation")
    sp.add_argument("--rep")
    sp.add_argument("--genus", type=int, default=2, help="use the Fuchsian representation of this genus")
    sp.add_argument("--samples", type=int, default=256)
    sp = add("defect", cmd_defect, "translation-number defect")
    sp.add_argument("--map1", required=True)
    sp.add_argument("--map2", required=True)
    sp.add_argument("--iters", type=int, default=10_000)
    sp = add("stability", cmd_stability, "rotation numbers before and after conjugation")
    sp.add_argument("--rep")
    sp.add_argument("--genus", type=int, default=2)
    sp.add_argument("--h", help="conjugating map JSON; random smooth map from --seed if omitted")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--iters", type=int, default=10_000)
    sp.add_argument("--words", help="comma separated words, e.g. 'a1 b1 A1 B1,a1 a2'")

    fm = sub.add_parser("forms", help="1-form models")
    fm_sub = fm.add_subparsers(dest="which", required=True, parser_class=_Parser)
    sp = fm_sub.add_parser("check", parents=[common])
    sp.set_defaults(func=cmd_forms)
    sp.add_argument("--model", required=True, choices=("reeb", "spiral", "deformation", "normal-form",
                                                         "normal_form", "helix", "dz"))
    sp.add_argument("--grid", type=int, default=64)
    sp.add_argument("--t", type=float, default=0.1)
    sp.add_argument("--tol", type=float, default=1e-9)
    sp.add_argument("--base", choices=("dz", "spiral"), default="dz")
    sp.add_argument("--theta-minus", type=float)
    sp.add_argument("--theta-plus", type=float)
    sp.add_argument("--n", type=int, default=1)

    sp = add("enumerate", cmd_enumerate, "stream normalized Seifert invariants (one JSON per line)")
    sp.add_argument("--max-den", type=int, required=True)
    sp.add_argument("--b-min", type=int, required=True)
    sp.add_argument("--b-max", type=int, required=True)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--g", type=int, default=0)
    sp.add_argument("--filter", choices=("none", "spherical", "euclidean", "hyperbolic"), default="none")
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        result = args.func(args)
        if isinstance(result, dict):
            out.write(render(result, args.format) + "\n")
        else:
            for item in result:
                out.write((json.dumps(item) if args.format == "json" else _render_inv_row(item)) + "\n")
        return 0
    except MalformedInput as exc:
        out.write(json.dumps({"error": str(exc)}) + "\n")
        return 2
    except DOMAIN_ERRORS as exc:
        payload = exc.to_json() if hasattr(exc, "to_json") else {"error": str(exc)}
        out.write(json.dumps(payload) + "\n")
        return 1
    except ValueError as exc:
        out.write(json.dumps({"error": str(exc)}) + "\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
