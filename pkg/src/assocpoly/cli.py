"""Command-line front end.

Subcommands
-----------
- ``eval``: evaluate one polynomial value by a chosen representation.
- ``table``: tabulate a family over degrees (and several x values).
- ``verify``: run an identity-verification set and stream reports.
- ``gf-check``: compare generating-function partial sums against their
  closed forms (including the Charlier ODE residual).
- ``mh-study``: run a large-degree scaled-convergence study.

Output is CSV (default) or JSON via ``--output``; CSV carries a
``# seed=<seed>`` comment line, a mandatory header row, and values with
17 significant digits, so identical invocations are byte-identical.

Exit codes: 0 success, 1 verification failure, 2 parameter/validation
error, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from .asymptotics import mh_convergence_study
from .closedforms import (
    charlier_3f2,
    charlier_classical,
    laguerre_3f2,
    laguerre_classical,
    meixner_4f3,
    meixner_4f3_alt,
    meixner_c1_degenerate,
    meixner_classical,
    meixner_cross_2f1,
    meixner_quadratic,
    meixner_reflection_rhs,
    mp_from_meixner,
)
from .errors import (
    DenominatorPole,
    DomainError,
    IllConditioned,
    NotConverged,
    PoleArgument,
    QuadratureNotConverged,
    RestrictedParameter,
    SingularIntegrand,
    TailTooLarge,
    ZeroA,
    ZeroC,
    ZeroPochhammer,
)
from .genfuncs import (
    GFSpec,
    Normalization,
    gf_charlier_elementary,
    gf_charlier_integral,
    gf_charlier_ode_residual,
    gf_charlier_phi1,
    gf_laguerre,
    gf_laguerre_elementary,
    gf_lhs_auto,
    gf_meixner_alt,
    gf_meixner_appell,
    gf_meixner_elementary,
    gf_meixner_integral,
    gf_weighted_laguerre_diag,
    weighted_classical_gf,
)
from .recurrences import (
    CharlierParams,
    LaguerreParams,
    MeixnerParams,
    MeixnerPollaczekParams,
    charlier_seq,
    laguerre_seq,
    meixner_pollaczek_seq,
    meixner_seq,
)
from .report import make_report
from .verify import VERIFY_SETS, run_set, summarize

__all__ = ["main"]

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_VALIDATION = 2
EXIT_NUMERICAL = 3

_VALIDATION_ERRORS = (ZeroC, ZeroA, RestrictedParameter, DomainError,
                      ValueError, TypeError)
_NUMERICAL_ERRORS = (PoleArgument, DenominatorPole, NotConverged,
                     IllConditioned, QuadratureNotConverged, TailTooLarge,
                     ZeroPochhammer, SingularIntegrand)

_FAMILIES = ("meixner", "charlier", "laguerre", "meixner-pollaczek")

_REPS = {
    "meixner": ("recurrence", "4f3", "4f3-alt", "quadratic", "cross",
                "reflection", "degenerate-c1", "classical"),
    "charlier": ("recurrence", "3f2", "3f2-transformed", "classical"),
    "laguerre": ("recurrence", "3f2", "3f2-rahman", "classical"),
    "meixner-pollaczek": ("recurrence", "connection"),
}

_GF_FORMS = {
    "meixner": ("appell", "alt", "integral", "weighted", "elementary"),
    "charlier": ("phi1", "integral", "weighted", "elementary", "ode"),
    "laguerre": ("phi1", "weighted", "diag", "elementary"),
}


# ---------------------------------------------------------------------------
# Output plumbing
# ---------------------------------------------------------------------------


def _scalar(text):
    """Parse a real or complex scalar from the command line."""
    try:
        return float(text)
    except ValueError:
        return complex(text)


def _cell(value):
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format(value, ".17g")
    if isinstance(value, int):
        return str(value)
    if isinstance(value, dict):
        return json.dumps(value, sort_keys=True, default=str)
    return str(value)


def _write_records(args, fieldnames, records):
    """Emit records as CSV (with seed header) or JSON to --out/stdout."""
    if args.out is None:
        _write_stream(sys.stdout, args, fieldnames, records)
    else:
        with open(args.out, "w", encoding="utf-8", newline="") as stream:
            _write_stream(stream, args, fieldnames, records)


def _write_stream(stream, args, fieldnames, records):
    if args.output == "json":
        stream.write(json.dumps(records, indent=2, default=str))
        stream.write("\n")
        return
    stream.write(f"# seed={args.seed}\n")
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(fieldnames)
    for record in records:
        writer.writerow([_cell(record.get(name)) for name in fieldnames])


def _report_records(reports):
    records = []
    for rep in reports:
        lhs, rhs = complex(rep.lhs), complex(rep.rhs)
        records.append({
            "identity_id": rep.identity_id,
            "point": rep.point,
            "lhs_re": lhs.real,
            "lhs_im": lhs.imag,
            "rhs_re": rhs.real,
            "rhs_im": rhs.imag,
            "rel_discrepancy": float(rep.rel_discrepancy),
            "passed": bool(rep.passed),
        })
    return records


_REPORT_FIELDS = ("identity_id", "point", "lhs_re", "lhs_im", "rhs_re",
                  "rhs_im", "rel_discrepancy", "passed")


# ---------------------------------------------------------------------------
# Family parameter handling
# ---------------------------------------------------------------------------


def _require(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise ValueError(
                f"--{name} is required for family {args.family!r}"
            )


def _build_params(args):
    family = args.family
    gamma = args.gamma
    if family == "meixner":
        _require(args, "beta", "c")
        return MeixnerParams(args.beta, args.c, gamma)
    if family == "charlier":
        _require(args, "a")
        return CharlierParams(args.a, gamma)
    if family == "laguerre":
        _require(args, "alpha")
        return LaguerreParams(args.alpha, gamma)
    _require(args, "nu", "phi")
    return MeixnerPollaczekParams(args.nu, args.phi, gamma)


def _seq_value(params, x, n):
    if isinstance(params, MeixnerParams):
        return meixner_seq(x, params, n)[n]
    if isinstance(params, CharlierParams):
        return charlier_seq(x, params, n)[n]
    if isinstance(params, LaguerreParams):
        return laguerre_seq(x, params, n)[n]
    return meixner_pollaczek_seq(x, params, n)[n]


def _require_classical(params):
    if params.gamma != 0.0:
        raise ValueError(
            "--rep classical applies to the gamma = 0 case only"
        )


def _route_value(args, params, x, n, rep):
    """Evaluate one representation; assumes rep is valid for the family."""
    if rep == "recurrence":
        return _seq_value(params, x, n)
    if isinstance(params, MeixnerParams):
        if rep == "4f3":
            return meixner_4f3(x, params, n)
        if rep == "4f3-alt":
            return meixner_4f3_alt(x, params, n)
        if rep == "quadratic":
            return meixner_quadratic(x, params, n)
        if rep == "cross":
            return meixner_cross_2f1(x, params, n)
        if rep == "reflection":
            return meixner_reflection_rhs(x, params, n)
        if rep == "degenerate-c1":
            if args.c is not None and args.c != 1.0:
                raise ValueError("--rep degenerate-c1 requires c = 1")
            return meixner_c1_degenerate(params.beta, params.gamma, n)
        _require_classical(params)
        return meixner_classical(x, params.beta, params.c, n)
    if isinstance(params, CharlierParams):
        if rep == "3f2":
            return charlier_3f2(x, params, n, "primary")
        if rep == "3f2-transformed":
            return charlier_3f2(x, params, n, "transformed")
        _require_classical(params)
        return charlier_classical(x, params.a, n)
    if isinstance(params, LaguerreParams):
        if rep == "3f2":
            return laguerre_3f2(x, params, n, "primary")
        if rep == "3f2-rahman":
            return laguerre_3f2(x, params, n, "rahman")
        _require_classical(params)
        return laguerre_classical(x, params.alpha, n)
    return mp_from_meixner(x, params, n)


def _cross_check(args, params, x, n, rep, value):
    """Best-effort independent estimate of the relative error."""
    alternates = {
        "meixner": "4f3",
        "charlier": "3f2",
        "laguerre": "3f2",
        "meixner-pollaczek": "connection",
    }
    other = alternates[args.family] if rep == "recurrence" else "recurrence"
    if rep == "degenerate-c1" and other == "recurrence":
        x = 0.0 if x is None else x
    try:
        check = _route_value(args, params, x, n, other)
    except (ValueError, *_VALIDATION_ERRORS, *_NUMERICAL_ERRORS):
        return None
    scale = max(abs(value), abs(check))
    if scale == 0.0:
        return 0.0
    return abs(value - check) / scale


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def _cmd_eval(args):
    rep = args.rep
    if args.family == "meixner" and rep == "degenerate-c1" and args.c is None:
        args.c = 1.0
    params = _build_params(args)
    if rep not in _REPS[args.family]:
        raise ValueError(
            f"representation {rep!r} does not apply to family "
            f"{args.family!r}; choose from {_REPS[args.family]}"
        )
    if args.x is None and rep != "degenerate-c1":
        raise ValueError("--x is required (except --rep degenerate-c1)")
    x = args.x
    value = _route_value(args, params, x, args.n, rep)
    estimate = _cross_check(args, params, x, args.n, rep, value)
    v = complex(value)
    record = {
        "family": args.family,
        "representation": rep,
        "n": args.n,
        "x_re": None if x is None else complex(x).real,
        "x_im": None if x is None else complex(x).imag,
        "value_re": v.real,
        "value_im": v.imag,
        "terms_used": args.n + 1,
        "err_estimate": estimate,
    }
    _write_records(args, tuple(record), [record])
    return EXIT_OK


def _cmd_table(args):
    params = _build_params(args)
    rep = args.rep
    if rep not in _REPS[args.family]:
        raise ValueError(
            f"representation {rep!r} does not apply to family "
            f"{args.family!r}; choose from {_REPS[args.family]}"
        )
    if args.n_max < 0:
        raise ValueError("empty grid: --n-max must be >= 0")
    records = []
    for x in args.x:
        if rep == "recurrence":
            if isinstance(params, MeixnerParams):
                values = meixner_seq(x, params, args.n_max).values
            elif isinstance(params, CharlierParams):
                values = charlier_seq(x, params, args.n_max).values
            elif isinstance(params, LaguerreParams):
                values = laguerre_seq(x, params, args.n_max).values
            else:
                values = meixner_pollaczek_seq(x, params, args.n_max).values
        else:
            values = [
                _route_value(args, params, x, n, rep)
                for n in range(args.n_max + 1)
            ]
        for n, value in enumerate(values):
            v = complex(value)
            records.append({
                "family": args.family,
                "representation": rep,
                "x_re": complex(x).real,
                "x_im": complex(x).imag,
                "n": n,
                "value_re": v.real,
                "value_im": v.imag,
            })
    _write_records(
        args,
        ("family", "representation", "x_re", "x_im", "n", "value_re",
         "value_im"),
        records,
    )
    return EXIT_OK


def _cmd_verify(args):
    if args.n_max < 0:
        print("verify: empty grid (--n-max < 0)", file=sys.stderr)
        return EXIT_VALIDATION
    reports = run_set(args.set, rel_tol=args.rel_tol, seed=args.seed,
                      n_max=args.n_max)
    if not reports:
        print("verify: empty grid", file=sys.stderr)
        return EXIT_VALIDATION
    _write_records(args, _REPORT_FIELDS, _report_records(reports))
    passed, failed, worst = summarize(reports)
    print(
        f"verify --set {args.set}: {passed} passed, {failed} failed "
        f"(worst {worst.identity_id}: rel {worst.rel_discrepancy:.3e})",
        file=sys.stderr,
    )
    if failed:
        for rep in reports:
            if not rep.passed:
                print(
                    f"  FAIL {rep.identity_id} at {rep.point}: "
                    f"rel {rep.rel_discrepancy:.3e} > {rep.rel_tol:.1e}",
                    file=sys.stderr,
                )
        return EXIT_VERIFY_FAILED
    return EXIT_OK


def _gf_applicable_forms(args, params):
    forms = []
    gamma = params.gamma
    for form in _GF_FORMS[args.family]:
        if form in ("integral", "weighted") and gamma <= 0.0:
            continue
        if form == "elementary" and gamma != 0.0:
            continue
        if form == "diag" and (not isinstance(params, LaguerreParams)
                               or gamma != params.alpha or gamma == 0.0):
            continue
        forms.append(form)
    return forms


def _gf_report(args, params, x, t, form, rel_tol):
    family = args.family
    gamma = params.gamma
    point = {"x": x, "t": t, "gamma": gamma}
    if family == "meixner":
        point.update(beta=params.beta, c=params.c)
    elif family == "charlier":
        point.update(a=params.a)
    else:
        point.update(alpha=params.alpha)
    if form == "weighted":
        return weighted_classical_gf(x, params, t, rel_tol)
    if form == "ode":
        residual = gf_charlier_ode_residual(x, params, t)
        return make_report("gf-charlier-ode", point, residual, 0.0, rel_tol)
    if family == "meixner":
        norm = (Normalization.BY_GAMMA_BETA if form == "appell"
                else Normalization.BY_GAMMA_ONE)
        rhs = {
            "appell": lambda: gf_meixner_appell(x, params, t),
            "alt": lambda: gf_meixner_alt(x, params, t),
            "integral": lambda: gf_meixner_integral(x, params, t),
            "elementary": lambda: gf_meixner_elementary(
                x, params.beta, params.c, t),
        }[form]()
    elif family == "charlier":
        norm = Normalization.BY_GAMMA_ONE
        rhs = {
            "phi1": lambda: gf_charlier_phi1(x, params, t),
            "integral": lambda: gf_charlier_integral(x, params, t),
            "elementary": lambda: gf_charlier_elementary(x, params.a, t),
        }[form]()
    else:
        if form == "diag":
            norm = Normalization.WEIGHTED
            rhs = gf_weighted_laguerre_diag(x, params.alpha, t)
        else:
            norm = Normalization.PLAIN
            rhs = (gf_laguerre(x, params, t) if form == "phi1"
                   else gf_laguerre_elementary(x, params.alpha, t))
    lhs, n_used = gf_lhs_auto(GFSpec(params, x, t, norm, 60))
    point["N"] = n_used
    return make_report(f"gf-{family}-{form}", point, lhs, rhs, rel_tol)


def _cmd_gf_check(args):
    params = _build_params(args)
    applicable = _gf_applicable_forms(args, params)
    if args.forms == ["all"]:
        forms = applicable
    else:
        forms = args.forms
        for form in forms:
            if form not in _GF_FORMS[args.family]:
                raise ValueError(
                    f"form {form!r} does not apply to family "
                    f"{args.family!r}; choose from {_GF_FORMS[args.family]}"
                )
            if form not in applicable:
                raise ValueError(
                    f"form {form!r} is not applicable at these parameters "
                    f"(gamma-dependent availability)"
                )
    if not forms:
        print("gf-check: empty grid (no applicable forms)", file=sys.stderr)
        return EXIT_VALIDATION
    reports = []
    for x in args.x:
        for t in args.t:
            for form in forms:
                reports.append(
                    _gf_report(args, params, x, t, form, args.rel_tol))
    _write_records(args, _REPORT_FIELDS, _report_records(reports))
    passed, failed, worst = summarize(reports)
    print(
        f"gf-check --family {args.family}: {passed} passed, {failed} failed "
        f"(worst {worst.identity_id}: rel {worst.rel_discrepancy:.3e})",
        file=sys.stderr,
    )
    return EXIT_OK if failed == 0 else EXIT_VERIFY_FAILED


def _cmd_mh_study(args):
    if args.family == "meixner":
        _require(args, "beta", "c")
        params = MeixnerParams(args.beta, args.c, args.gamma)
    else:
        _require(args, "a")
        params = CharlierParams(args.a, args.gamma)
    study = mh_convergence_study(args.x, params, args.checkpoints)
    limit = complex(study.limit)
    records = []
    for n, value, abs_err in study.samples:
        v = complex(value)
        records.append({
            "n": n,
            "scaled_value_re": v.real,
            "scaled_value_im": v.imag,
            "limit_re": limit.real,
            "limit_im": limit.imag,
            "abs_error": float(abs_err),
        })
    if args.output == "json":
        records.append({"monotone_tail": bool(study.monotone_tail)})
    else:
        records.append({"n": "monotone_tail",
                        "abs_error": bool(study.monotone_tail)})
    _write_records(
        args,
        ("n", "scaled_value_re", "scaled_value_im", "limit_re", "limit_im",
         "abs_error"),
        records,
    )
    return EXIT_OK


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def _add_output_flags(parser):
    parser.add_argument("--output", choices=("csv", "json"), default="csv",
                        help="output format (default csv)")
    parser.add_argument("--out", default=None, metavar="PATH",
                        help="output path (default stdout)")
    parser.add_argument("--rel-tol", type=float, default=1e-8,
                        help="relative tolerance (default 1e-8)")
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for randomized sampling (default 0)")


def _add_family_flags(parser, families=_FAMILIES):
    parser.add_argument("--family", required=True, choices=families)
    parser.add_argument("--beta", type=float, default=None,
                        help="Meixner shape parameter")
    parser.add_argument("--c", type=float, default=None,
                        help="Meixner geometric parameter")
    parser.add_argument("--a", type=float, default=None,
                        help="Charlier rate parameter")
    parser.add_argument("--alpha", type=float, default=None,
                        help="Laguerre shape parameter")
    parser.add_argument("--nu", type=float, default=None,
                        help="Meixner-Pollaczek shape parameter")
    parser.add_argument("--phi", type=float, default=None,
                        help="Meixner-Pollaczek angle in (0, pi)")
    parser.add_argument("--gamma", type=float, default=0.0,
                        help="index shift (default 0)")


def build_parser():
    """The argparse parser for the ``assocpoly`` command."""
    parser = argparse.ArgumentParser(
        prog="assocpoly",
        description=(
            "Evaluate index-shifted Meixner, Charlier, Laguerre and "
            "Meixner-Pollaczek polynomials and verify their identities."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate one polynomial value")
    _add_family_flags(p_eval)
    p_eval.add_argument("--x", type=_scalar, default=None,
                        help="evaluation point (real or complex)")
    p_eval.add_argument("--n", type=int, required=True, help="degree")
    p_eval.add_argument("--rep", default="recurrence",
                        help="representation (family-dependent)")
    _add_output_flags(p_eval)
    p_eval.set_defaults(func=_cmd_eval)

    p_table = sub.add_parser("table", help="tabulate a family")
    _add_family_flags(p_table)
    p_table.add_argument("--x", type=_scalar, nargs="+", required=True,
                         help="evaluation points")
    p_table.add_argument("--n-max", type=int, default=10,
                         help="highest degree (default 10)")
    p_table.add_argument("--rep", default="recurrence",
                         help="representation (family-dependent)")
    _add_output_flags(p_table)
    p_table.set_defaults(func=_cmd_table)

    p_verify = sub.add_parser("verify", help="run an identity set")
    p_verify.add_argument("--set", required=True, choices=VERIFY_SETS)
    p_verify.add_argument("--n-max", type=int, default=25,
                          help="highest degree for grids (default 25)")
    _add_output_flags(p_verify)
    p_verify.set_defaults(func=_cmd_verify)

    p_gf = sub.add_parser("gf-check",
                          help="check generating functions at (x, t) points")
    _add_family_flags(p_gf, families=("meixner", "charlier", "laguerre"))
    p_gf.add_argument("--x", type=_scalar, nargs="+", default=[0.5],
                      help="evaluation points (default 0.5)")
    p_gf.add_argument("--t", type=float, nargs="+", default=[0.05, 0.1],
                      help="series variable values (default 0.05 0.1)")
    p_gf.add_argument("--forms", nargs="+", default=["all"],
                      help="closed forms to check (default all applicable)")
    _add_output_flags(p_gf)
    p_gf.set_defaults(func=_cmd_gf_check)

    p_mh = sub.add_parser("mh-study",
                          help="large-degree scaled convergence study")
    _add_family_flags(p_mh, families=("meixner", "charlier"))
    p_mh.add_argument("--x", type=_scalar, required=True,
                      help="evaluation point (real or complex)")
    p_mh.add_argument("--checkpoints", type=int, nargs="+",
                      default=[50, 100, 200, 400],
                      help="ascending degrees (default 50 100 200 400)")
    _add_output_flags(p_mh)
    p_mh.set_defaults(func=_cmd_mh_study)
    return parser


def main(argv=None):
    """Entry point; returns the process exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _NUMERICAL_ERRORS as exc:
        print(f"assocpoly: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except _VALIDATION_ERRORS as exc:
        print(f"assocpoly: invalid input: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
