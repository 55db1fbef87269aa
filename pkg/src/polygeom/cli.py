"""polygeom command-line interface.

Exit codes: 0 all checks passed, 1 a verified property failed,
2 invalid input, 3 numerical failure (non-convergence beyond retry).
"""

from __future__ import annotations

import argparse
import sys

from . import jsonio
from .apolarity import apolarity_functional, grace_witness, is_apolar
from .campaign import PROPERTIES, CampaignConfig, replay, run_campaign
from .coincidence import (
    SymmetricMultiaffine,
    coincidence_witness,
    theorem1_apolarity_residual,
    theorem1_hypothesis,
)
from .derivative_bound import (
    Theorem2Instance,
    check_theorem2,
    generate_theorem2_instance,
)
from .errors import (
    HypothesisViolated,
    InvalidInput,
    NonConvergence,
    PolygeomError,
    TheoremViolation,
)
from .rootfind import find_roots
from .svgplot import emit_svg

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INVALID = 2
EXIT_NUMERICAL = 3


def _emit(doc: dict, args) -> None:
    text = jsonio.dumps(doc)
    if getattr(args, "json_out", None):
        with open(args.json_out, "w", encoding="utf-8", newline="\n") as f:
            f.write(text + "\n")
    else:
        print(text)


def _load_multiaffine(path: str) -> SymmetricMultiaffine:
    d = jsonio.load_file(path)
    return SymmetricMultiaffine(int(d["n"]), jsonio.points_from_json(d["E"]), trim=False)


def _cmd_roots(args) -> int:
    p = jsonio.poly_from_json(jsonio.load_file(args.poly))
    try:
        rs = find_roots(p, tol=args.tol, max_iter=args.max_iter)
    except NonConvergence as e:
        _emit({"schema": jsonio.SCHEMA, "error": "non-convergence",
               "roots": jsonio.points_to_json(e.roots),
               "residuals": list(e.residuals)}, args)
        return EXIT_NUMERICAL
    _emit(jsonio.rootset_to_json(rs), args)
    return EXIT_OK


def _cmd_apolar(args) -> int:
    a = jsonio.poly_from_json(jsonio.load_file(args.a))
    b = jsonio.poly_from_json(jsonio.load_file(args.b))
    value = apolarity_functional(a, b, args.n)
    _emit({"schema": jsonio.SCHEMA, "value": jsonio.complex_to_json(value),
           "apolar": is_apolar(a, b, args.n)}, args)
    return EXIT_OK


def _cmd_grace(args) -> int:
    a = jsonio.poly_from_json(jsonio.load_file(args.a))
    b = jsonio.poly_from_json(jsonio.load_file(args.b))
    region = jsonio.region_from_json(jsonio.load_file(args.region))
    n = args.n if args.n is not None else max(a.degree(), b.degree())
    try:
        w = grace_witness(a, b, n, region)
    except HypothesisViolated as e:
        _emit({"schema": jsonio.SCHEMA, "status": "hypothesis-violation",
               "diagnostic": str(e)}, args)
        return EXIT_OK
    except TheoremViolation as e:
        _emit({"schema": jsonio.SCHEMA, "status": "theorem-violation",
               "diagnostic": str(e)}, args)
        return EXIT_FAILURE
    _emit({"schema": jsonio.SCHEMA, "status": "pass",
           "witness": jsonio.complex_to_json(w)}, args)
    return EXIT_OK


def _cmd_coincidence(args) -> int:
    P = _load_multiaffine(args.multiaffine)
    w = jsonio.points_from_json(jsonio.load_file(args.points))
    region = jsonio.region_from_json(jsonio.load_file(args.region))
    doc: dict = {"schema": jsonio.SCHEMA}

    if not args.classic:
        hyp = theorem1_hypothesis(w, max(P.total_degree, 1), region)
        doc["hypothesis"] = {
            "holds": hyp.holds,
            "derivative_roots": jsonio.points_to_json(hyp.derivative_roots.roots),
            "outside": jsonio.points_to_json(hyp.outside),
        }
        doc["apolarity_residual"] = (
            theorem1_apolarity_residual(P, w) if P.total_degree >= 1 else 0.0
        )
    try:
        z = coincidence_witness(P, w, region, classic=args.classic,
                                check_hypothesis=not args.force)
    except HypothesisViolated as e:
        doc.update(status="hypothesis-violation", diagnostic=str(e))
        _emit(doc, args)
        return EXIT_OK
    except TheoremViolation as e:
        doc.update(status="theorem-violation", diagnostic=str(e))
        _emit(doc, args)
        return EXIT_FAILURE
    doc.update(status="pass", witness=jsonio.complex_to_json(z))
    _emit(doc, args)
    return EXIT_OK


def _cmd_theorem2(args) -> int:
    if args.generate:
        if args.n is None:
            raise InvalidInput("--generate requires --n")
        inst = generate_theorem2_instance(
            args.n, seed=args.seed, radius=args.radius,
            outer_distance=args.outer_distance,
        )
        _emit({"schema": jsonio.SCHEMA,
               "inner_zeros": jsonio.points_to_json(inst.inner_zeros),
               "outer_zero": jsonio.complex_to_json(inst.outer_zero),
               "disk": jsonio.disk_to_json(inst.disk)}, args)
        return EXIT_OK

    if args.instance is None or args.k is None:
        raise InvalidInput("need --instance and --k (or --generate)")
    d = jsonio.load_file(args.instance)
    inst = Theorem2Instance(
        tuple(jsonio.points_from_json(d["inner_zeros"])),
        jsonio.complex_from_json(d["outer_zero"]),
        jsonio.disk_from_json(d["disk"]),
    )
    report = check_theorem2(inst, args.k)
    _emit({"schema": jsonio.SCHEMA, "n": report.n, "k": report.k,
           "bound": report.bound, "count_in_disk": report.count_in_disk,
           "satisfied": report.satisfied, "vacuous": report.vacuous,
           "mean_residual": report.mean_residual,
           "derivative_roots": jsonio.points_to_json(report.derivative_roots.roots)},
          args)
    return EXIT_OK if report.satisfied else EXIT_FAILURE


def _cmd_fuzz(args) -> int:
    cfg = CampaignConfig(
        property=args.property, trials=args.trials, seed=args.seed,
        n_min=args.n_min, n_max=args.n_max, root_tol=args.tol, jobs=args.jobs,
    )
    report = run_campaign(cfg)
    _emit(report.to_json(), args)
    if report.errored:
        return EXIT_NUMERICAL
    return EXIT_OK if report.failed == 0 else EXIT_FAILURE


def _cmd_replay(args) -> int:
    inst = jsonio.load_file(args.instance)
    verdict = replay(inst, args.property)
    _emit(verdict, args)
    if verdict["status"] == "fail":
        return EXIT_FAILURE
    if verdict["status"] == "error":
        return EXIT_NUMERICAL
    return EXIT_OK


def _cmd_plot(args) -> int:
    if not args.svg_out:
        raise InvalidInput("plot requires --svg-out")
    point_sets = []
    if args.points:
        point_sets.append(("points", jsonio.points_from_json(jsonio.load_file(args.points))))
    if args.poly:
        p = jsonio.poly_from_json(jsonio.load_file(args.poly))
        rs = find_roots(p)
        point_sets.append(("zeros", list(rs.roots)))
        if p.degree() >= 2:
            point_sets.append(("critical points", list(find_roots(p.derivative()).roots)))
    regions = []
    if args.region:
        regions.append(jsonio.region_from_json(jsonio.load_file(args.region)))
    emit_svg(point_sets, regions, args.svg_out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="polygeom")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--tol", type=float, default=1e-12)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--json-out")
        p.add_argument("--svg-out")
        p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("roots", help="all zeros of a polynomial")
    p.add_argument("--poly", required=True)
    p.add_argument("--max-iter", type=int, default=200)
    common(p)
    p.set_defaults(func=_cmd_roots)

    p = sub.add_parser("apolar", help="apolarity functional of two polynomials")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--n", type=int, required=True)
    common(p)
    p.set_defaults(func=_cmd_apolar)

    p = sub.add_parser("grace", help="in-region root of b for an apolar pair")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--region", required=True)
    p.add_argument("--n", type=int)
    common(p)
    p.set_defaults(func=_cmd_grace)

    for name in ("coincidence", "theorem1"):
        p = sub.add_parser(name, help="coincidence witness over a circular region")
        p.add_argument("--multiaffine", required=True)
        p.add_argument("--points", required=True)
        p.add_argument("--region", required=True)
        p.add_argument("--classic", action="store_true",
                       help="check the classical hypothesis (points in region)")
        p.add_argument("--force", action="store_true",
                       help="attempt the witness solve even if the hypothesis fails")
        common(p)
        p.set_defaults(func=_cmd_coincidence)

    p = sub.add_parser("theorem2", help="derivative-zero count bound in a disk")
    p.add_argument("--instance")
    p.add_argument("--k", type=int)
    p.add_argument("--generate", action="store_true")
    p.add_argument("--n", type=int)
    p.add_argument("--radius", type=float, default=1.0)
    p.add_argument("--outer-distance", type=float, default=2.0)
    common(p)
    p.set_defaults(func=_cmd_theorem2)

    p = sub.add_parser("fuzz", help="deterministic randomized campaign")
    p.add_argument("--property", required=True, choices=sorted(PROPERTIES))
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--n-min", type=int, default=2)
    p.add_argument("--n-max", type=int, default=12)
    common(p)
    p.set_defaults(func=_cmd_fuzz)

    p = sub.add_parser("replay", help="re-run one recorded instance")
    p.add_argument("--instance", required=True)
    p.add_argument("--property")
    common(p)
    p.set_defaults(func=_cmd_replay)

    p = sub.add_parser("plot", help="SVG scatter of points/zeros and regions")
    p.add_argument("--points")
    p.add_argument("--poly")
    p.add_argument("--region")
    common(p)
    p.set_defaults(func=_cmd_plot)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NonConvergence as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_NUMERICAL
    except (InvalidInput, FileNotFoundError, KeyError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID
    except PolygeomError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
