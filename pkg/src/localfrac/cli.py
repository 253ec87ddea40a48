"""Batch command-line front end.

Every subcommand writes a single report (JSON or CSV) to stdout or to
``--output``. Exit codes: 0 success, 1 domain/validation/usage error,
2 numerical non-convergence.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from dataclasses import dataclass
from typing import Any, Sequence

import numpy as np

from localfrac import numeric, series, special, taylor
from localfrac.errors import ConvergenceError, LocalFracError
from localfrac.order import FractionalOrder
from localfrac.series import FractalSeries
from localfrac.taylor import fmt

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_NONCONVERGENCE = 2

FAMILIES = ("e_alpha",)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


@dataclass(frozen=True)
class CliConfig:
    output_format: str
    output_path: str | None
    alpha: FractionalOrder | None = None


def _order(text: str) -> FractionalOrder:
    try:
        return FractionalOrder(float(text))
    except (ValueError, LocalFracError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _count(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if n < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {n}")
    return n


def _sizes(text: str) -> list[int]:
    try:
        return [int(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N1,N2,..., got {text!r}") from None


_POW = re.compile(r"^pow[:_]?([-+0-9.eE]+)$")


def _power_expr(text: str) -> float:
    m = _POW.match(text.strip())
    if not m:
        raise argparse.ArgumentTypeError(f"expected pow:BETA, got {text!r}")
    try:
        beta = float(m.group(1))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad exponent in {text!r}") from None
    if not beta > 0.0:
        raise argparse.ArgumentTypeError("the exponent must be positive")
    return beta


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False, allow_abbrev=False)
    common.add_argument("--format", choices=("csv", "json"), default=None, dest="output_format")
    common.add_argument("--output", "-o", default=None, dest="output_path", metavar="PATH")

    source = _Parser(add_help=False, allow_abbrev=False)
    g = source.add_mutually_exclusive_group(required=True)
    g.add_argument("--series", metavar="FILE", help="series JSON {alpha, center, coeffs}")
    g.add_argument("--family", choices=FAMILIES, help="generated series family")
    source.add_argument("--alpha", type=_order, help="order for --family")
    source.add_argument("--family-degree", type=_count, default=30, metavar="N")
    source.add_argument("--center", type=float, default=0.0, help="center for --family")

    p = _Parser(prog="localfrac", description=__doc__, allow_abbrev=False)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name: str, help: str, with_series: bool = True) -> argparse.ArgumentParser:
        parents = [common, source] if with_series else [common]
        return sub.add_parser(name, help=help, parents=parents, allow_abbrev=False)

    q = add("ml", "Mittag-Leffler value E_alpha(x**alpha)", with_series=False)
    q.add_argument("--alpha", type=_order, required=True)
    q.add_argument("--x", type=float, required=True)
    q.add_argument("--tol", type=float, default=1e-14)
    q.add_argument("--max-terms", type=_count, default=special.DEFAULT_MAX_TERMS)

    q = add("taylor", "Taylor polynomial with remainder bound")
    q.add_argument("--x0", type=float, required=True)
    q.add_argument("--degree", type=_count, required=True)
    q.add_argument("--at", type=float, default=None, help="evaluation point")
    q.add_argument("--b", type=float, default=None, help="remainder interval end (default --at)")

    q = add("deriv", "sequential local fractional derivative")
    q.add_argument("--k", type=_count, default=1)

    q = add("integrate", "local fractional integral (series or definite value)")
    q.add_argument("--a", type=float, default=None)
    q.add_argument("--b", type=float, default=None)

    q = add("mvt", "mean value point xi")
    q.add_argument("--x0", type=float, required=True)
    q.add_argument("--x", type=float, required=True)

    q = add("converge", "convergence table of Taylor approximations")
    q.add_argument("--x0", type=float, required=True)
    q.add_argument("--x", type=float, required=True)
    q.add_argument("--nmax", type=_count, required=True)

    q = add("holder", "Hoelder exponent of (t - x0)**beta", with_series=False)
    q.add_argument("--expr", type=_power_expr, required=True, metavar="pow:BETA")
    q.add_argument("--x0", type=float, required=True)
    q.add_argument("--delta-min", type=float, default=1e-6)
    q.add_argument("--delta-max", type=float, default=1e-2)
    q.add_argument("--samples", type=_count, default=32)

    q = add("riemann-demo", "literal Riemann sums of f = 1", with_series=False)
    q.add_argument("--alpha", type=_order, required=True)
    q.add_argument("--sizes", type=_sizes, required=True, metavar="N1,N2,...")
    q.add_argument("--a", type=float, default=0.0)
    q.add_argument("--b", type=float, default=1.0)
    return p


def load_series(args: argparse.Namespace) -> FractalSeries:
    if args.series is not None:
        try:
            return FractalSeries.load(args.series)
        except OSError as exc:
            raise UsageError(f"cannot read series file: {exc}") from None
    if args.alpha is None:
        raise UsageError("--family requires --alpha")
    return FractalSeries.e_alpha(args.alpha, args.family_degree, args.center)


# -- report rendering -------------------------------------------------------


def _flatten(prefix: str, value: Any, out: list[tuple[str, str]]) -> None:
    if isinstance(value, dict):
        for k, v in value.items():
            _flatten(f"{prefix}.{k}" if prefix else k, v, out)
    elif isinstance(value, list):
        for i, v in enumerate(value):
            _flatten(f"{prefix}[{i}]", v, out)
    elif value is None:
        out.append((prefix, ""))
    elif isinstance(value, bool) or isinstance(value, int):
        out.append((prefix, str(value)))
    else:
        out.append((prefix, fmt(float(value))))


def render_record(record: dict[str, Any], output_format: str) -> str:
    if output_format == "json":
        return json.dumps(record, indent=2) + "\n"
    rows: list[tuple[str, str]] = []
    _flatten("", record, rows)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(("field", "value"))
    w.writerows(rows)
    return buf.getvalue()


def render_table(header: Sequence[str], rows: list[dict[str, Any]], output_format: str) -> str:
    if output_format == "json":
        return json.dumps(rows, indent=2) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow([str(r[h]) if isinstance(r[h], int) else fmt(r[h]) for h in header])
    return buf.getvalue()


# -- subcommands ------------------------------------------------------------


def cmd_ml(args: argparse.Namespace, cfg: CliConfig) -> str:
    r = special.mittag_leffler(args.alpha, args.x, args.tol, args.max_terms)
    record = {
        "alpha": r.alpha.alpha,
        "x": r.x,
        "value": r.value,
        "terms_used": r.terms_used,
        "tail_bound": r.tail_bound,
    }
    return render_record(record, cfg.output_format)


def cmd_taylor(args: argparse.Namespace, cfg: CliConfig) -> str:
    f = load_series(args)
    res = taylor.taylor_polynomial(f, args.x0, args.degree, b=args.b, x=args.at)
    record: dict[str, Any] = {
        "polynomial": res.polynomial.to_dict(),
        "degree": res.degree,
        "remainder_bound": res.remainder_bound,
        "interval_end": res.interval_end,
        "x": res.x,
        "xi": res.xi,
        "theta": res.theta,
    }
    if args.at is not None:
        record["value"] = series.evaluate(res.polynomial, args.at)
        record["reference"] = series.evaluate(f, args.at)
    return render_record(record, cfg.output_format)


def cmd_deriv(args: argparse.Namespace, cfg: CliConfig) -> str:
    out = series.sequential_derivative(load_series(args), args.k)
    return render_record(out.to_dict(), cfg.output_format)


def cmd_integrate(args: argparse.Namespace, cfg: CliConfig) -> str:
    f = load_series(args)
    if (args.a is None) != (args.b is None):
        raise UsageError("--a and --b must be given together")
    if args.a is None:
        return render_record(series.lf_integral(f).to_dict(), cfg.output_format)
    value = series.definite_integral(f, args.a, args.b)
    return render_record({"a": args.a, "b": args.b, "value": value}, cfg.output_format)


def cmd_mvt(args: argparse.Namespace, cfg: CliConfig) -> str:
    f = load_series(args)
    xi = taylor.find_xi(f, args.x0, args.x)
    record = {
        "x0": args.x0,
        "x": args.x,
        "xi": xi,
        "theta": (xi - args.x0) / (args.x - args.x0),
        "residual": taylor.mean_value_residual(f, args.x0, args.x, xi),
    }
    return render_record(record, cfg.output_format)


def cmd_converge(args: argparse.Namespace, cfg: CliConfig) -> str:
    table = taylor.convergence_table(load_series(args), args.x0, args.x, args.nmax)
    if cfg.output_format == "csv":
        return table.to_csv()
    return json.dumps(table.to_records(), indent=2) + "\n"


def cmd_holder(args: argparse.Namespace, cfg: CliConfig) -> str:
    beta, x0 = args.expr, args.x0

    def f(t: Any) -> Any:
        return np.power(np.maximum(np.asarray(t, dtype=float) - x0, 0.0), beta)

    est = numeric.holder_exponent(f, x0, args.delta_min, args.delta_max, args.samples)
    record = {
        "beta": beta,
        "x0": x0,
        "exponent": est.exponent,
        "r_squared": est.r_squared,
        "window": list(est.window),
    }
    return render_record(record, cfg.output_format)


def cmd_riemann(args: argparse.Namespace, cfg: CliConfig) -> str:
    sums = numeric.riemann_sum_diagnostic(lambda t: np.ones_like(t), args.a, args.b, args.alpha, args.sizes)
    rows = [{"N": n, "sum": s} for n, s in sums]
    return render_table(("N", "sum"), rows, cfg.output_format)


COMMANDS = {
    "ml": (cmd_ml, "json"),
    "taylor": (cmd_taylor, "json"),
    "deriv": (cmd_deriv, "json"),
    "integrate": (cmd_integrate, "json"),
    "mvt": (cmd_mvt, "json"),
    "converge": (cmd_converge, "csv"),
    "holder": (cmd_holder, "json"),
    "riemann-demo": (cmd_riemann, "csv"),
}


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        handler, default_format = COMMANDS[args.command]
        cfg = CliConfig(
            output_format=args.output_format or default_format,
            output_path=args.output_path,
            alpha=getattr(args, "alpha", None),
        )
        report = handler(args, cfg)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_DOMAIN
    except ConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NONCONVERGENCE
    except (LocalFracError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    if cfg.output_path:
        with open(cfg.output_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(report)
    else:
        sys.stdout.write(report)
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
