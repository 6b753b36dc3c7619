"""Command-line front end: fatpoints {generate|alpha|alphaseq|dim|kernel|check|repro|search|plot}.

Exit codes: 0 success, 1 error or failed reproduction, 2 success with
certification-gap warnings (an existence side certified only modulo
primes, or an UNDECIDED/INCONSISTENT verdict).
"""

from __future__ import annotations

import argparse
import os
import sys

from .algebra import AlgebraError, QQ, field_from_string
from .cache import CacheVerificationError
from .analysis import (
    INCONSISTENT,
    UNDECIDED,
    check_double_unit_step_collinear,
    check_minimal_gap_collinear,
    check_uniform_step_two_conic,
    check_unit_step_arrangement,
    conjecture_search,
    load_registry,
    repro,
    repro_all,
)
from .cache import ResultCache
from .configs import ConfigSpec, generate
from .geometry import detect_line_arrangement, is_star_configuration, spanned_lines
from .linsys import (
    FatPointScheme,
    _alpha_search,
    alpha_sequence,
    kernel_basis,
    parse_strategy,
    system_dim,
)
from .serialize import (
    dump_json,
    load_json_file,
    points_from_json_dict,
    points_to_json_dict,
    poly_to_json_dict,
    write_json_file,
)
from .svgplot import render_svg

CHECKERS = {
    "minimal-gap": (check_minimal_gap_collinear, "k"),
    "unit-step": (check_unit_step_arrangement, "k"),
    "double-unit-step": (check_double_unit_step_collinear, "k"),
    "uniform-step-two": (check_uniform_step_two_conic, "k_max"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fatpoints",
        description="Exact initial degrees of symbolic powers of planar point sets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_io(p, points=True):
        if points:
            p.add_argument("--points", help="point-set JSON file")
            p.add_argument("--family", choices=[
                "collinear", "on_conic", "general", "star", "star_minus_one",
                "dual_hesse", "type9", "nagata16", "nodal_curve_nodes",
                "two_nodal_union",
            ])
            p.add_argument("--r", type=int)
            p.add_argument("--p", type=int, help="line count for star families")
            p.add_argument("--d1", type=int)
            p.add_argument("--d2", type=int)
            p.add_argument("--prime", type=int, help="prime for finite-field families")
            p.add_argument("--height", type=int)
        p.add_argument("--field", default=None,
                       help="rational | prime:P; omit to keep the input's field")
        p.add_argument("--d", type=int)
        p.add_argument("--mults", help="comma-separated multiplicities, or one value for all")
        p.add_argument("--kmax", type=int)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--strategy", default=None,
                       help="exact | prime | multiprime:K")
        p.add_argument("--cache", help="cache directory (or FATPOINTS_CACHE)")
        p.add_argument("--verify-cache", action="store_true")
        p.add_argument("--out", help="output file (.json, .csv for tables, .svg for plots)")
        p.add_argument("--pretty", action="store_true")

    for name in ("generate", "alpha", "alphaseq", "dim", "kernel", "plot"):
        add_io(sub.add_parser(name))
    pc = sub.add_parser("check")
    add_io(pc)
    pc.add_argument("--theorem", required=True, choices=sorted(CHECKERS))
    pc.add_argument("--k", type=int, required=True)
    pr = sub.add_parser("repro")
    add_io(pr, points=False)
    pr.add_argument("--id", help="registry example id")
    pr.add_argument("--all", action="store_true")
    ps = sub.add_parser("search")
    add_io(ps, points=False)
    ps.add_argument("--conjecture", type=int, default=2, choices=(2, 3))
    ps.add_argument("--trials", type=int, required=True)
    ps.add_argument("--r-min", type=int, default=4)
    ps.add_argument("--r-max", type=int, default=9)
    return parser


class SystemExit2(Exception):
    """Usage error surfaced with exit code 1 and a message."""


def _convert_field(points, args):
    if args.field is None:
        return points
    want = field_from_string(args.field)
    have = points[0].field
    if want == have:
        return points
    if have != QQ:
        raise SystemExit2(
            f"cannot move points from {have!r} to {want!r}; prime-field "
            "configurations stay in their field"
        )
    from .algebra import point as make_point

    try:
        return tuple(
            make_point(want, *(want.of(c) for c in P.coords)) for P in points
        )
    except Exception as exc:
        raise SystemExit2(f"reduction mod {want.p} failed: {exc}")


def resolve_points(args, command=""):
    if args.points and args.family:
        raise SystemExit2("pass either --points or --family, not both")
    if args.points:
        return _convert_field(points_from_json_dict(load_json_file(args.points)), args)
    if args.family:
        # --d is the system degree for dim/kernel; families that need a
        # degree parameter there take it from --p instead (or use a
        # generated points file)
        fam_d = args.d
        if args.family in ("star_minus_one", "nodal_curve_nodes"):
            if command in ("dim", "kernel"):
                if args.p is None:
                    raise SystemExit2(
                        f"--d means the system degree for {command}; pass the "
                        f"{args.family} size as --p, or generate a points file first"
                    )
                fam_d = args.p
            elif fam_d is None:
                fam_d = args.p
        spec = ConfigSpec(
            family=args.family, r=args.r, p=args.p, d=fam_d, d1=args.d1,
            d2=args.d2, prime=args.prime, seed=args.seed, height=args.height,
        )
        return _convert_field(generate(spec), args)
    raise SystemExit2("one of --points or --family is required")


def resolve_mults(args, npoints: int):
    if not args.mults:
        return (1,) * npoints
    parts = [int(x) for x in args.mults.split(",") if x.strip() != ""]
    if len(parts) == 1:
        return (parts[0],) * npoints
    if len(parts) != npoints:
        raise SystemExit2(
            f"--mults has {len(parts)} entries for {npoints} points"
        )
    return tuple(parts)


def resolve_cache(args):
    root = args.cache or os.environ.get("FATPOINTS_CACHE")
    if not root:
        if args.verify_cache:
            raise SystemExit2("--verify-cache needs a cache directory")
        return None
    return ResultCache(root, verify=args.verify_cache)


def emit(args, payload: dict, pretty_text: str = "") -> None:
    if args.out and args.out.endswith(".csv") and "csv" in payload:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(payload["csv"])
        return
    blob = dump_json({k: v for k, v in payload.items() if k != "csv"})
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(blob)
    if args.pretty and pretty_text:
        print(pretty_text)
    elif not args.out:
        sys.stdout.write(blob)


def cmd_generate(args) -> int:
    pts = resolve_points(args)
    payload = points_to_json_dict(pts)
    emit(args, payload, "\n".join(repr(P) for P in pts))
    return 0


def cmd_alpha(args) -> int:
    pts = resolve_points(args)
    mults = resolve_mults(args, len(pts))
    scheme = FatPointScheme(pts, mults)
    strategy = parse_strategy(args.strategy) if args.strategy else None
    cache = resolve_cache(args)
    kwargs = {"certify_existence": True, "cache": cache}
    if strategy is not None:
        kwargs["strategy"] = strategy
        kwargs["certify_existence"] = False
    av = _alpha_search(scheme, **kwargs)
    warnings = []
    if not av.fully_certified:
        warnings.append("existence side certified only modulo primes")
    payload = {
        "schema": "fatpoints/1",
        "kind": "alpha",
        "value": av.value,
        "existence_certified": av.existence,
        "certification": av.certification,
        "multiplicities": list(mults),
        "warnings": warnings,
    }
    emit(args, payload, f"alpha = {av.value}  [{av.certification}]")
    return 2 if warnings else 0


def cmd_alphaseq(args) -> int:
    if not args.kmax or args.kmax < 1:
        raise SystemExit2("--kmax >= 1 is required")
    pts = resolve_points(args)
    strategy = parse_strategy(args.strategy) if args.strategy else None
    cache = resolve_cache(args)
    kwargs = {"certify_existence": True, "seed": args.seed, "cache": cache}
    if strategy is not None:
        kwargs["strategy"] = strategy
        kwargs["certify_existence"] = False
    rep = alpha_sequence(pts, args.kmax, **kwargs)
    payload = rep.to_json_dict()
    payload["csv"] = rep.to_csv()
    warnings = [
        f"k={e['k']}: existence side certified only modulo primes"
        for e in rep.entries
        if e["existence_certified"] not in ("expected_dim", "kernel", "rank")
    ]
    payload["warnings"] = warnings
    pretty = "k  alpha  diff\n" + "\n".join(
        f"{i + 1}  {a}  {'' if i == 0 else rep.diffs[i - 1]}"
        for i, a in enumerate(rep.alphas)
    )
    emit(args, payload, pretty)
    return 2 if warnings else 0


def cmd_dim(args) -> int:
    if args.d is None:
        raise SystemExit2("--d is required")
    pts = resolve_points(args, "dim")
    mults = resolve_mults(args, len(pts))
    scheme = FatPointScheme(pts, mults)
    strategy = parse_strategy(args.strategy or "multiprime:2")
    report = system_dim(scheme, args.d, strategy=strategy, cache=resolve_cache(args))
    payload = report.to_json_dict()
    pretty = (
        f"degree {report.degree}: actual_dim {report.actual_dim}, "
        f"expected_dim {report.expected_dim}, superabundance "
        f"{report.superabundance}  [{report.certification}]"
    )
    emit(args, payload, pretty)
    return 0


def cmd_kernel(args) -> int:
    if args.d is None:
        raise SystemExit2("--d is required")
    pts = resolve_points(args, "kernel")
    mults = resolve_mults(args, len(pts))
    scheme = FatPointScheme(pts, mults)
    strategy = parse_strategy(args.strategy or "exact")
    basis = kernel_basis(scheme, args.d, strategy=strategy)
    payload = {
        "schema": "fatpoints/1",
        "kind": "kernel",
        "degree": args.d,
        "dimension": len(basis),
        "basis": [poly_to_json_dict(g) for g in basis],
    }
    emit(args, payload, "\n".join(str(g) for g in basis) or "(empty system)")
    return 0


def cmd_check(args) -> int:
    pts = resolve_points(args)
    checker, _ = CHECKERS[args.theorem]
    verdict = checker(pts, args.k)
    payload = verdict.to_json_dict()
    emit(args, payload, f"{verdict.theorem}: {verdict.status}")
    return 2 if verdict.status in (UNDECIDED, INCONSISTENT) else 0


def cmd_repro(args) -> int:
    registry = load_registry()
    if args.all:
        reports = repro_all(registry)
    elif args.id:
        if args.id not in registry["examples"]:
            print(f"unknown example id {args.id!r}", file=sys.stderr)
            return 1
        reports = [repro(args.id, registry)]
    else:
        raise SystemExit2("pass --id ID or --all")
    payload = {
        "schema": "fatpoints/1",
        "kind": "repro_run",
        "reports": [r.to_json_dict() for r in reports],
        "pass": all(r.passed for r in reports),
    }
    for r in reports:
        print(r.table())
    if args.out:
        write_json_file(args.out, payload)
    return 0 if payload["pass"] else 1


def cmd_search(args) -> int:
    if args.trials < 1:
        raise SystemExit2("--trials must be at least 1")
    rep = conjecture_search(
        trials=args.trials,
        r_range=(args.r_min, args.r_max),
        k=max(args.kmax or 5, 5),
        seed=args.seed,
        difference=args.conjecture,
        field=field_from_string(args.field or "rational"),
    )
    payload = rep.to_json_dict()
    pretty = (
        f"{rep.trials} trials: {len(rep.hypothesis_true)} hypothesis-true, "
        f"{len(rep.inconsistent)} inconsistent"
    )
    emit(args, payload, pretty)
    return 0


def cmd_plot(args) -> int:
    pts = resolve_points(args)
    lines = ()
    if args.family == "star" and args.p:
        from .configs import star

        lines = star(args.p, args.seed)[1]
    elif args.family == "type9":
        lines = tuple(
            L for L, inc in spanned_lines(pts) if len(inc) == 3
        )
    else:
        got = is_star_configuration(pts) if len(pts) >= 3 else None
        if got:
            lines = got[1]
        else:
            witness = detect_line_arrangement(pts) if len(pts) >= 2 else None
            if witness:
                lines = witness.lines
    svg = render_svg(pts, lines)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(svg)
    else:
        sys.stdout.write(svg)
    return 0


COMMANDS = {
    "generate": cmd_generate,
    "alpha": cmd_alpha,
    "alphaseq": cmd_alphaseq,
    "dim": cmd_dim,
    "kernel": cmd_kernel,
    "check": cmd_check,
    "repro": cmd_repro,
    "search": cmd_search,
    "plot": cmd_plot,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except SystemExit2 as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, KeyError, OSError, AlgebraError, CacheVerificationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
