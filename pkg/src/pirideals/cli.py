"""Command-line interface.

Exit codes: 0 when every check passes, 1 when any check fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from pirideals import category as cat
from pirideals import ordered_semigroup as osg
from pirideals.errors import AlgebraError
from pirideals.ideals import RingIso, check_inverse_transversal, verify_induced_iso
from pirideals.instances import (
    build_divisor_semigroup,
    build_ideal_semigroup_zn,
    check_divisor_structure,
    poly_class_ops,
    run_counterexample,
    sampled_law_suite,
    verify_poly_classes,
    verify_z_naturals_iso,
    verify_zn_divisor_iso,
    zn_universe,
)
from pirideals.report import CheckReport
from pirideals.rings import IntegerRing, PolyRing, is_prime
from pirideals.sampling import DEFAULT_DEGREE_CAP, DEFAULT_SEED
from pirideals.suites import CERTIFY_MAX_N, HOM_ORACLE_MAX_N, certify, check_greens_universal
from pirideals.suites import check_ordered_regularity

MAX_N = 10**6
ZN_VIEWS = ("table", "order", "green", "classes", "axioms", "transversal")


class UsageError(Exception):
    pass


def _emit(text: str):
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _emit_report(report: CheckReport, fmt: str, extra: dict | None = None) -> int:
    if fmt == "json":
        payload = report.to_dict()
        if extra:
            payload.update(extra)
        _emit(json.dumps(payload, indent=2))
    else:
        _emit("\n".join(report.summary_lines()))
        for key, value in (extra or {}).items():
            _emit(f"{key}: {value}")
    return 0 if report.passed else 1


def render_table(S: osg.FiniteOrderedSemigroup) -> str:
    width = max(len(x) for x in S.labels) + 1
    head = "*".rjust(width) + " |" + "".join(x.rjust(width) for x in S.labels)
    lines = [head, "-" * len(head)]
    for i, x in enumerate(S.labels):
        lines.append(x.rjust(width) + " |" + "".join(S.labels[v].rjust(width) for v in S.mul[i]))
    return "\n".join(lines)


def order_pairs(S: osg.FiniteOrderedSemigroup) -> list[tuple[str, str]]:
    """Strict order relations ``(a, b)`` with ``a <= b``, in index order."""
    return [(S.labels[i], S.labels[j]) for i in range(S.size) for j in range(S.size)
            if i != j and S.leq[i][j]]


def _check_n(n: int) -> int:
    if not 2 <= n <= MAX_N:
        raise UsageError(f"n must lie in [2, {MAX_N}], got {n}")
    return n


def _check_p(p: int, limit: int | None = None) -> int:
    if not is_prime(p):
        raise UsageError(f"--p must be prime, got {p}")
    if limit is not None and p > limit:
        raise UsageError(f"--p must be at most {limit}, got {p}")
    return p


def cmd_zn(args) -> int:
    n = _check_n(args.n)
    S = build_ideal_semigroup_zn(n)
    view = args.view
    if view == "table":
        if args.format == "json":
            _emit(S.to_json(indent=2))
        else:
            _emit(f"{S.name}; label {n} is the zero ideal <0>\n{render_table(S)}")
        return 0
    if view == "order":
        pairs = order_pairs(S)
        if args.format == "json":
            _emit(json.dumps({"labels": list(S.labels), "order": pairs}, indent=2))
        else:
            _emit(f"{S.name} order (a <= b iff a | b):\n" + "\n".join(f"{a} <= {b}" for a, b in pairs))
        return 0
    if view == "green":
        report = check_greens_universal(S)
        g = osg.greens_relations(S)
        classes = {rel: [S.label_of(c) for c in g.partition(rel)] for rel in g.NAMES}
        return _emit_report(report, args.format, {"classes": classes})
    if view == "classes":
        return _emit_report(osg.classify(S).to_report(), args.format)
    if view == "axioms":
        report = CheckReport.aggregate("axioms", S.name, [osg.validate(S), check_ordered_regularity(n)])
        return _emit_report(report, args.format)
    return _emit_report(check_inverse_transversal(zn_universe(n), S.name), args.format)


def cmd_divisors(args) -> int:
    n = _check_n(args.n)
    D = build_divisor_semigroup(n)
    report = CheckReport.aggregate("divisor_semigroup", D.semigroup.name,
                                   [osg.validate(D.semigroup), check_divisor_structure(D)])
    if args.format == "json":
        return _emit_report(report, "json", {"table": D.semigroup.to_dict()})
    _emit(render_table(D.semigroup))
    return _emit_report(report, "text")


def cmd_z(args) -> int:
    report = CheckReport.aggregate("integers", "IntegerRing", [
        sampled_law_suite(IntegerRing(), args.samples, args.seed),
        verify_z_naturals_iso(args.samples, args.seed),
    ])
    return _emit_report(report, args.format, {"seed": args.seed})


def cmd_poly(args) -> int:
    p = _check_p(args.p)
    poly_class_ops(p)
    details = [
        sampled_law_suite(PolyRing(p), args.samples, args.seed, args.degree_cap),
        verify_poly_classes(p, args.samples, args.seed, args.degree_cap),
        verify_induced_iso(RingIso.poly_affine(p, 1, 1), args.samples, args.seed),
    ]
    if p > 2:
        details.append(verify_induced_iso(RingIso.poly_affine(p, 2, 0), args.samples, args.seed))
    report = CheckReport.aggregate("polynomials", f"PolyRing({p})", details)
    return _emit_report(report, args.format, {"seed": args.seed})


def cmd_category(args) -> int:
    n = _check_n(args.n)
    universe = zn_universe(n)
    if args.dot:
        _emit(cat.preorder_dot(universe) if args.dot == "preorder" else cat.inclusion_dot(universe))
        return 0
    details = [cat.check_subobject_axioms(universe), cat.verify_functor_laws(universe)]
    if n <= HOM_ORACLE_MAX_N:
        details.append(cat.check_hom_enumeration(n))
    return _emit_report(CheckReport.aggregate("category", f"Z_{n}", details), args.format)


def cmd_counterexample(args) -> int:
    p = _check_p(args.p, limit=5)
    return _emit_report(run_counterexample(p), args.format)


def cmd_iso(args) -> int:
    n = _check_n(args.n)
    report = verify_zn_divisor_iso(n)
    if args.format == "text":
        _emit("bijection: " + ", ".join(f"<{k}> -> {v}" for k, v in report.witness.items()))
    return _emit_report(report, args.format)


def cmd_certify(args) -> int:
    if not 2 <= args.n_max <= CERTIFY_MAX_N:
        raise UsageError(f"--n-max must lie in [2, {CERTIFY_MAX_N}], got {args.n_max}")
    start = time.perf_counter()
    report = certify(args.n_max, args.samples, args.seed, args.degree_cap)
    elapsed = round(time.perf_counter() - start, 3)
    if args.format == "json":
        return _emit_report(report, "json", {"seed": args.seed, "elapsed_seconds": elapsed})
    _emit("\n".join(report.summary_lines(max_depth=2)))
    _emit(f"seed: {args.seed}\nelapsed: {elapsed:.2f}s")
    return 0 if report.passed else 1


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED,
                        help=f"64-bit seed for sampled suites (default {DEFAULT_SEED})")
    common.add_argument("--samples", type=_positive, default=1000)
    common.add_argument("--n-max", type=int, default=60)
    common.add_argument("--degree-cap", type=_positive, default=DEFAULT_DEGREE_CAP)
    common.add_argument("--p", type=int, default=None, help="prime characteristic")

    parser = argparse.ArgumentParser(
        prog="pirideals",
        description="Ordered semigroups and categories of ideals of principal ideal rings.")
    sub = parser.add_subparsers(dest="verb", required=True)

    zn = sub.add_parser("zn", parents=[common], help="the ideal semigroup I(Z_n)")
    zn.add_argument("n", type=int)
    zn.add_argument("view", nargs="?", choices=ZN_VIEWS, default="axioms")
    zn.set_defaults(func=cmd_zn)

    dv = sub.add_parser("divisors", parents=[common], help="(D(n), *, |)")
    dv.add_argument("n", type=int)
    dv.set_defaults(func=cmd_divisors)

    sub.add_parser("z", parents=[common], help="sampled checks on I(Z)").set_defaults(func=cmd_z)

    poly = sub.add_parser("poly", parents=[common], help="sampled checks on I(F_p[x])")
    poly.set_defaults(func=cmd_poly, p_default=3)

    ct = sub.add_parser("category", parents=[common], help="subobject axioms and the functor on Z_n")
    ct.add_argument("n", type=int)
    ct.add_argument("--dot", choices=("preorder", "inclusion"), default=None,
                    help="print a DOT diagram instead of running checks")
    ct.set_defaults(func=cmd_category)

    ce = sub.add_parser("counterexample", parents=[common], help="triangular-matrix counterexample")
    ce.set_defaults(func=cmd_counterexample, p_default=2)

    iso = sub.add_parser("iso", parents=[common], help="I(Z_n) is isomorphic to D(n)")
    iso.add_argument("n", type=int)
    iso.set_defaults(func=cmd_iso)

    cert = sub.add_parser("certify", parents=[common], help="run every check")
    cert.set_defaults(func=cmd_certify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.p is None:
        args.p = getattr(args, "p_default", 3)
    try:
        return args.func(args)
    except (UsageError, AlgebraError) as exc:
        sys.stderr.write(f"{parser.prog} {args.verb}: error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
