"""Command-line harness.

Subcommands:

* ``verify {line|circle|symmetry|all}`` -- run the verification suite and
  print the JSON report; optional ``--csv`` and ``--gnuplot-dat`` side
  outputs.
* ``apply <op> --in FILE --out FILE [flags]`` -- apply an operator or group
  action to a signal file; prints a one-line JSON echo of the op, its
  parameters, and any warnings.
* ``decompose --in FILE --space {line|circle}`` -- print the scalar
  decomposition of an operator file as JSON.

Exit codes: 0 success, 1 usage (including precondition violations reported
by the operators), 2 file I/O, 3 decomposition residual above tolerance,
4 failed verification checks or internal errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .circle_ops import (
    MoebiusElement,
    RationalScale,
    cauchy_pv,
    cauchy_symbol,
    circular_convolve,
    circular_hilbert,
    moebius_act,
    semigroup_act,
)
from .signals import CircleSamples, CircleSignal, LineSignal
from .line_ops import (
    AffineElement,
    dilate,
    hardy_project,
    hilbert_multiplier,
    hilbert_pv_quadrature,
    rep_natural,
    translate,
)
from .sigio import load_operator, load_signal, save_signal
from .symmetry import FourierBasis, LineBasis, decompose_circle_operator, decompose_line_operator
from .verify import SuiteConfig, run_verify

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2
EXIT_RESIDUAL = 3
EXIT_CHECK_FAILURE = 4

APPLY_OPS = (
    "hilbert",
    "hilbert-pv",
    "hardy+",
    "hardy-",
    "dilate",
    "translate",
    "rep",
    "circular-hilbert",
    "cauchy-pv",
    "cauchy-symbol",
    "semigroup",
    "moebius",
    "convolve",
)


class UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="hilbertsym", description=__doc__)
    parser.add_argument("--version", action="version", version=f"hilbertsym {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run the verification suite")
    p_verify.add_argument("target", choices=("line", "circle", "symmetry", "all"))
    p_verify.add_argument("--config", help="JSON file mirroring the suite config")
    p_verify.add_argument("--seed", type=int, help="override the config RNG seed")
    p_verify.add_argument("--csv", help="also write a check_id,measured,tolerance table")
    p_verify.add_argument("--gnuplot-dat", help="also write plain two-column data")

    p_apply = sub.add_parser("apply", help="apply an operator/action to a signal file")
    p_apply.add_argument("op", choices=APPLY_OPS)
    p_apply.add_argument("--in", dest="infile", required=True)
    p_apply.add_argument("--out", dest="outfile", required=True)
    p_apply.add_argument("--a", type=float, help="dilation scale / affine a")
    p_apply.add_argument("--b", type=float, help="shift / affine b")
    p_apply.add_argument("--q", type=int, help="semigroup numerator")
    p_apply.add_argument("--p", type=int, help="semigroup denominator")
    p_apply.add_argument("--beta", type=float, default=0.0, help="semigroup rotation")
    p_apply.add_argument("--k-out", type=int, help="semigroup output truncation")
    p_apply.add_argument("--theta", type=float, default=0.0, help="disc rotation angle")
    p_apply.add_argument("--blaschke-a", type=float, help="disc automorphism parameter in [0,1)")
    p_apply.add_argument("--weight", choices=("plain", "jacobian"), default="plain")
    p_apply.add_argument("--with", dest="second", help="second input file (convolve)")

    p_dec = sub.add_parser("decompose", help="scalar-decompose an operator file")
    p_dec.add_argument("--in", dest="infile", required=True)
    p_dec.add_argument("--space", choices=("line", "circle"), required=True)
    p_dec.add_argument("--tol", type=float, default=1e-10, help="residual pass tolerance")
    return parser


def _need(args, names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"op {args.op!r} requires --{name.replace('_', '-')}")


def _expect_type(sig, types, op):
    if not isinstance(sig, types):
        names = "/".join(t.__name__ for t in (types if isinstance(types, tuple) else (types,)))
        raise UsageError(f"op {op!r} expects a {names} input file")


def _run_apply(args) -> int:
    sig = load_signal(args.infile)
    params: dict = {}
    warnings: list = []
    op = args.op
    if op in ("hilbert", "hilbert-pv", "hardy+", "hardy-", "dilate", "translate", "rep"):
        _expect_type(sig, LineSignal, op)
    if op == "hilbert":
        out = hilbert_multiplier(sig)
    elif op == "hilbert-pv":
        out = hilbert_pv_quadrature(sig)
    elif op in ("hardy+", "hardy-"):
        out = hardy_project(sig, op[-1])
    elif op == "dilate":
        _need(args, ["a"])
        params["a"] = args.a
        out = dilate(sig, args.a)
    elif op == "translate":
        _need(args, ["b"])
        params["b"] = args.b
        out = translate(sig, args.b)
    elif op == "rep":
        _need(args, ["a", "b"])
        params.update(a=args.a, b=args.b)
        out = rep_natural(sig, AffineElement(args.a, args.b))
    elif op == "circular-hilbert":
        _expect_type(sig, CircleSignal, op)
        out = circular_hilbert(sig)
    elif op == "cauchy-pv":
        _expect_type(sig, CircleSignal, op)
        out = cauchy_pv(sig)
    elif op == "cauchy-symbol":
        _expect_type(sig, CircleSignal, op)
        out = cauchy_symbol(sig)
    elif op == "semigroup":
        _expect_type(sig, CircleSignal, op)
        _need(args, ["q", "p"])
        params.update(q=args.q, p=args.p, beta=args.beta, k_out=args.k_out)
        out = semigroup_act(sig, RationalScale(args.q, args.p, args.beta), args.k_out)
    elif op == "moebius":
        _expect_type(sig, CircleSamples, op)
        _need(args, ["blaschke_a"])
        params.update(theta=args.theta, blaschke_a=args.blaschke_a, weight=args.weight)
        out = moebius_act(sig, MoebiusElement(args.theta, args.blaschke_a), args.weight)
    elif op == "convolve":
        _expect_type(sig, CircleSignal, op)
        if args.second is None:
            raise UsageError("op 'convolve' requires --with FILE")
        other = load_signal(args.second)
        _expect_type(other, CircleSignal, op)
        params["with"] = args.second
        out = circular_convolve(sig, other)
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown op {op!r}")

    if isinstance(out, LineSignal):
        warnings.extend(out.flags)
    save_signal(out, args.outfile)
    print(json.dumps({"op": op, "params": params, "warnings": warnings, "out": args.outfile}))
    return EXIT_OK


def _run_decompose(args) -> int:
    op = load_operator(args.infile)
    if args.space == "line":
        if not isinstance(op.basis, LineBasis):
            raise UsageError("--space line needs an operator on a line basis")
        dec = decompose_line_operator(op)
    else:
        if not isinstance(op.basis, FourierBasis):
            raise UsageError("--space circle needs an operator on a fourier basis")
        dec = decompose_circle_operator(op)
    print(json.dumps(dec.to_json_dict()))
    if dec.max_residual <= args.tol:
        return EXIT_OK
    print(
        f"residual {dec.max_residual:.3e} exceeds tolerance {args.tol:.3e}: "
        "not in the commutant form",
        file=sys.stderr,
    )
    return EXIT_RESIDUAL


def _run_verify(args) -> int:
    if args.config is not None:
        doc = json.loads(Path(args.config).read_text())
        try:
            cfg = SuiteConfig.from_json_dict(doc)
        except (TypeError, ValueError) as exc:
            raise UsageError(f"invalid config: {exc}") from exc
    else:
        cfg = SuiteConfig()
    if args.seed is not None:
        cfg.rng_seed = args.seed
    report = run_verify(args.target, cfg)
    print(json.dumps(report.to_json_dict(), indent=2))
    if args.csv:
        Path(args.csv).write_text(report.to_csv_text())
    if args.gnuplot_dat:
        Path(args.gnuplot_dat).write_text(report.to_gnuplot_text())
    return EXIT_OK if report.passed else EXIT_CHECK_FAILURE


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "verify":
            return _run_verify(args)
        if args.command == "apply":
            return _run_apply(args)
        if args.command == "decompose":
            return _run_decompose(args)
        raise UsageError(f"unknown command {args.command!r}")
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, json.JSONDecodeError) as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        # precondition violations from the operator modules, passed through
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_CHECK_FAILURE


def entry():  # console-script wrapper
    sys.exit(main())


if __name__ == "__main__":
    entry()
