"""Command line front end: grid sweeps to figure-ready CSV or JSON.

Exit codes: 0 success, 1 usage error, 2 domain error, 3 numerical
failure.  FRACWAVE_EPS overrides the default evaluation accuracy
(1e-10).  Files are UTF-8 with LF line endings and %.12e numbers; a
given configuration always produces byte-identical output.  Every row
carries the error bound of its value.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

import numpy as np

from .errors import DomainError, FracwaveError
from .extremum import coefficients
from .green_function import green, profile
from .types import check_positive

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_NUMERIC = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage problems; 2 is the domain-error code
    # here, so usage errors are remapped to 1
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _emit(args, columns, rows, meta):
    """Serialize fully computed rows; a failed write never leaves a file."""
    if args.format == "json":
        payload = {"meta": meta, "columns": list(columns),
                   "rows": [[float(v) for v in row] for row in rows]}
        text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    else:
        lines = [",".join(columns)]
        lines.extend(",".join("%.12e" % v for v in row) for row in rows)
        text = "\n".join(lines) + "\n"
    if args.output:
        try:
            with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)
        except BaseException:
            try:
                os.remove(args.output)
            except OSError:
                pass
            raise
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _steps(n):
    if n < 2:
        raise _UsageError(f"a range needs at least 2 grid points, got {n}")
    return n


def _coeff_with_tols(nu, tol, eps):
    # endpoint c values are exact; m exists only below the wave endpoint
    if nu == 1.0:
        return 1.0, math.nan, 0.0, math.nan
    co = coefficients(nu, tol, eps)
    return co.c, co.m, co.c_tol, co.m_tol


def cmd_eval(args):
    res = green(args.nu, args.x, args.t, args.eps)
    print(f"{res.value:.12e} {res.abs_err:.12e}")
    return EXIT_OK


def cmd_coeffs(args):
    c, m, c_tol, m_tol = _coeff_with_tols(args.nu, args.tol, args.eps)
    return _emit(args, ("nu", "c", "m", "c_tol", "m_tol"),
                 [(args.nu, c, m, c_tol, m_tol)],
                 {"command": "coeffs", "nu": args.nu, "tol": args.tol,
                  "eps": args.eps})


def cmd_profile(args):
    grid = np.linspace(args.x_from, args.x_to, _steps(args.steps))
    prof = profile(args.nu, args.t, grid, args.eps)
    rows = [(args.nu, args.t, x, g, e)
            for x, g, e in zip(prof.grid, prof.values, prof.accuracy)]
    return _emit(args, ("nu", "t", "x", "G", "abs_err"), rows,
                 {"command": "profile", "nu": args.nu, "t": args.t,
                  "x_from": args.x_from, "x_to": args.x_to,
                  "steps": args.steps, "eps": args.eps})


def cmd_surface(args):
    xs = np.linspace(args.x_from, args.x_to, _steps(args.x_steps))
    ts = np.linspace(args.t_from, args.t_to, _steps(args.t_steps))
    rows = []
    for t in ts:
        prof = profile(args.nu, float(t), xs, args.eps)
        rows.extend((args.nu, float(t), x, g, e)
                    for x, g, e in zip(prof.grid, prof.values, prof.accuracy))
    return _emit(args, ("nu", "t", "x", "G", "abs_err"), rows,
                 {"command": "surface", "nu": args.nu,
                  "t_from": args.t_from, "t_to": args.t_to,
                  "t_steps": args.t_steps, "x_from": args.x_from,
                  "x_to": args.x_to, "x_steps": args.x_steps,
                  "eps": args.eps})


def cmd_speed(args):
    ts = (np.geomspace if args.log_t else np.linspace)(
        check_positive(args.t_from, "t-from"), args.t_to, _steps(args.steps))
    if args.nu == 1.0:
        c, c_tol = 1.0, 0.0
    elif args.nu == 0.5:
        c, c_tol = 0.0, 0.0
    else:
        co = coefficients(args.nu, args.tol, args.eps)
        c, c_tol = co.c, co.c_tol
    rows = [(args.nu, t, args.nu * c * t ** (args.nu - 1.0),
             args.nu * c_tol * t ** (args.nu - 1.0)) for t in ts]
    return _emit(args, ("nu", "t", "v", "abs_err"), rows,
                 {"command": "speed", "nu": args.nu, "t_from": args.t_from,
                  "t_to": args.t_to, "steps": args.steps,
                  "log_t": bool(args.log_t), "tol": args.tol,
                  "eps": args.eps})


def cmd_hyperbola(args):
    ts = np.linspace(check_positive(args.t_from, "t-from"), args.t_to,
                     _steps(args.steps))
    co = coefficients(args.nu, args.tol, args.eps)
    rows = [(args.nu, t, co.c * t ** args.nu, co.m * t ** -args.nu,
             co.c_tol * t ** args.nu, co.m_tol * t ** -args.nu) for t in ts]
    return _emit(args, ("nu", "t", "x_star", "g_star", "x_err", "g_err"),
                 rows, {"command": "hyperbola", "nu": args.nu,
                        "t_from": args.t_from, "t_to": args.t_to,
                        "steps": args.steps, "tol": args.tol,
                        "eps": args.eps})


def cmd_product(args):
    nus = np.linspace(args.nu_from, args.nu_to, _steps(args.steps))
    rows = []
    for nu in nus:
        co = coefficients(float(nu), args.tol, args.eps)
        err = abs(co.c) * co.m_tol + abs(co.m) * co.c_tol + co.c_tol * co.m_tol
        rows.append((float(nu), co.c, co.m, co.c * co.m, err))
    return _emit(args, ("nu", "c", "m", "product", "abs_err"), rows,
                 {"command": "product", "nu_from": args.nu_from,
                  "nu_to": args.nu_to, "steps": args.steps,
                  "tol": args.tol, "eps": args.eps})


def cmd_coeff_curve(args):
    nus = np.linspace(args.nu_from, args.nu_to, _steps(args.steps))
    rows = []
    for nu in nus:
        c, m, c_tol, m_tol = _coeff_with_tols(float(nu), args.tol, args.eps)
        rows.append((float(nu), c, m, c_tol, m_tol))
    return _emit(args, ("nu", "c", "m", "c_tol", "m_tol"), rows,
                 {"command": "coeff-curve", "nu_from": args.nu_from,
                  "nu_to": args.nu_to, "steps": args.steps,
                  "tol": args.tol, "eps": args.eps})


def _add_output_flags(p):
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--output", metavar="PATH",
                   help="write to a file instead of stdout")


def _build_parser(eps_default):
    parser = _Parser(
        prog="fracwave",
        description="Fundamental solution of the time-fractional "
                    "diffusion-wave problem and its moving-maximum laws.")
    sub = parser.add_subparsers(dest="command", required=True,
                                parser_class=_Parser)

    def add(name, func, **kw):
        p = sub.add_parser(name, **kw)
        p.set_defaults(func=func)
        p.add_argument("--eps", type=float, default=eps_default,
                       help=f"absolute accuracy target (default {eps_default:g})")
        return p

    p = add("eval", cmd_eval, help="single Green-function value on stdout")
    p.add_argument("--nu", type=float, required=True)
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--t", type=float, required=True)

    p = add("coeffs", cmd_coeffs, help="maximum coefficients c, m at one order")
    p.add_argument("--nu", type=float, required=True)
    p.add_argument("--tol", type=float, default=1e-8)
    _add_output_flags(p)

    p = add("profile", cmd_profile, help="G(x, t) along an x grid at fixed t")
    p.add_argument("--nu", type=float, required=True)
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--x-from", type=float, default=0.0)
    p.add_argument("--x-to", type=float, default=3.0)
    p.add_argument("--steps", type=int, default=61)
    _add_output_flags(p)

    p = add("surface", cmd_surface, help="G over an (x, t) grid")
    p.add_argument("--nu", type=float, required=True)
    p.add_argument("--t-from", type=float, default=1.0)
    p.add_argument("--t-to", type=float, default=2.0)
    p.add_argument("--t-steps", type=int, default=5)
    p.add_argument("--x-from", type=float, default=0.0)
    p.add_argument("--x-to", type=float, default=3.0)
    p.add_argument("--x-steps", type=int, default=61)
    _add_output_flags(p)

    p = add("speed", cmd_speed, help="maximum propagation speed over t")
    p.add_argument("--nu", type=float, required=True)
    p.add_argument("--t-from", type=float, default=0.1)
    p.add_argument("--t-to", type=float, default=10.0)
    p.add_argument("--steps", type=int, default=50)
    p.add_argument("--log-t", action="store_true",
                   help="log-spaced t grid (log-lin plots)")
    p.add_argument("--tol", type=float, default=1e-8)
    _add_output_flags(p)

    p = add("hyperbola", cmd_hyperbola,
            help="parametric (x*, G*) track of the moving maximum")
    p.add_argument("--nu", type=float, required=True)
    p.add_argument("--t-from", type=float, default=1.0)
    p.add_argument("--t-to", type=float, default=4.0)
    p.add_argument("--steps", type=int, default=25)
    p.add_argument("--tol", type=float, default=1e-8)
    _add_output_flags(p)

    p = add("product", cmd_product, help="c*m over an order grid")
    p.add_argument("--nu-from", type=float, default=0.56)
    p.add_argument("--nu-to", type=float, default=0.99)
    p.add_argument("--steps", type=int, default=44)
    p.add_argument("--tol", type=float, default=1e-8)
    _add_output_flags(p)

    p = add("coeff-curve", cmd_coeff_curve, help="c and m over an order grid")
    p.add_argument("--nu-from", type=float, default=0.5)
    p.add_argument("--nu-to", type=float, default=0.99)
    p.add_argument("--steps", type=int, default=50)
    p.add_argument("--tol", type=float, default=1e-8)
    _add_output_flags(p)

    return parser


def main(argv=None) -> int:
    eps_env = os.environ.get("FRACWAVE_EPS")
    eps_default = 1e-10
    if eps_env is not None:
        try:
            eps_default = float(eps_env)
            if not (0.0 < eps_default <= 0.1):
                raise ValueError
        except ValueError:
            print("fracwave: error: FRACWAVE_EPS must be a float in (0, 0.1]",
                  file=sys.stderr)
            return EXIT_USAGE
    parser = _build_parser(eps_default)
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"fracwave: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"fracwave: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except FracwaveError as exc:
        print(f"fracwave: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
