"""Command-line driver exposing each experiment as a subcommand.

Numeric subcommands emit CSV (header line, 10 significant digits, UTF-8,
LF endings) so any plotting tool can reproduce the figures; identical
configuration yields byte-identical output.  Exit status is 0 only when
every check in the run passed its documented tolerance, 1 on a
computation or tolerance failure, 2 on a usage error.
"""

from __future__ import annotations

import argparse
import cmath
import math
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Sequence

import numpy as np

from .errors import DomainError, InsufficientZerosError, SingularityError, ZetaprodError
from .specfun import log_xi_asymptotic, log_xi_z, xi_z
from .transforms import ROW_VERIFICATION_PAIRS, cosh_demo, verify_table_row
from .zerodist import (
    SmoothCountModel,
    ZeroList,
    find_zeros,
    n_of_t,
    omega_stats,
    phi_smooth,
    predict_zeros,
    residual_report,
)

ZERO_FILE_ENV = "ZETAPROD_ZERO_FILE"

_DEFAULT_TOL = {
    "cosh": 1e-6,
    "count": 2.0,
    "predict-mean": 1.0,
    "predict-max": 2.0,
    "residual": 0.02,
    "omega-mean": 0.25,
    "staircase": 2.0,
}


@dataclass
class RunConfig:
    """Validated bag of options for one subcommand run."""

    subcommand: str
    t_max: float = 100.0
    z_samples: tuple[complex, ...] = ()
    tolerances: dict[str, float] = field(default_factory=dict)
    zero_file: Path | None = None
    output_path: Path | None = None
    fourier_terms: int = 40
    grid_step: float = 0.1
    scan_step: float = 0.25
    jobs: int = 1
    n_max: int = 10
    rows: tuple[int, ...] = (1, 2, 3, 4, 5, 6, 7, 8, 9)
    all_pairs: bool = False

    def __post_init__(self):
        if not (0 < self.t_max <= 1000):
            raise DomainError(f"t_max must lie in (0, 1000], got {self.t_max!r}")
        for name, value in self.tolerances.items():
            if name not in _DEFAULT_TOL:
                raise DomainError(
                    f"unknown tolerance {name!r}; known: {', '.join(sorted(_DEFAULT_TOL))}"
                )
            if not (value > 0):
                raise DomainError(f"tolerance {name} must be positive, got {value!r}")
        if self.fourier_terms < 1:
            raise DomainError(f"fourier_terms must be >= 1, got {self.fourier_terms!r}")
        if not (self.grid_step > 0):
            raise DomainError(f"grid step must be positive, got {self.grid_step!r}")
        if self.n_max < 1:
            raise DomainError(f"n must be >= 1, got {self.n_max!r}")

    def tol(self, name: str) -> float:
        return self.tolerances.get(name, _DEFAULT_TOL[name])


def _g(x: float) -> str:
    return "%.10g" % x


def _gc(w: complex) -> str:
    w = complex(w)
    if w.imag == 0:
        return _g(w.real)
    return "%.10g%+.10gj" % (w.real, w.imag)


def _zlabel(z: complex) -> str:
    z = complex(z)
    if z.imag == 0:
        return "%g" % z.real
    return "%g%+gj" % (z.real, z.imag)


def _parse_point(text: str) -> complex:
    parts = text.split(",")
    if len(parts) not in (1, 2):
        raise ValueError(f"expected RE or RE,IM, got {text!r}")
    re_part = float(parts[0])
    im_part = float(parts[1]) if len(parts) == 2 else 0.0
    return complex(re_part, im_part)


def _parse_reals(text: str) -> tuple[complex, ...]:
    return tuple(complex(float(p), 0.0) for p in text.split(",") if p.strip())


def _parse_rows(text: str) -> tuple[int, ...]:
    rows = tuple(int(p) for p in text.split(",") if p.strip())
    if not rows or any(r not in ROW_VERIFICATION_PAIRS for r in rows):
        raise argparse.ArgumentTypeError(f"rows must be a subset of 1..9, got {text!r}")
    return rows


def _clip(zeros: ZeroList, t_max: float) -> ZeroList:
    keep = zeros.ordinates[zeros.ordinates < t_max]
    return ZeroList(keep, t_max=t_max, source=zeros.source)


def _resolve_zeros(cfg: RunConfig, needed_t: float) -> ZeroList:
    """Zero ordinates below needed_t: explicit file, then env, then scan."""
    path = cfg.zero_file or os.environ.get(ZERO_FILE_ENV)
    if path:
        zeros = ZeroList.read(path)
        if zeros.t_max < needed_t - 1e-9:
            raise InsufficientZerosError(
                f"zero file {path} reaches t_max={zeros.t_max:g}, need {needed_t:g}"
            )
        if zeros.t_max > needed_t:
            zeros = _clip(zeros, needed_t)
        return zeros
    return find_zeros(needed_t, step=cfg.scan_step, jobs=cfg.jobs)


def _cmd_xi_eval(cfg: RunConfig) -> tuple[list[str], list[str]]:
    z = cfg.z_samples[0]
    xi = xi_z(z)
    real_input = z.imag == 0

    def f6(w: complex) -> str:
        if real_input:
            return "%.6f" % w.real
        return "%.6f%+.6fj" % (w.real, w.imag)

    def f5(w: complex) -> str:
        if real_input:
            return "%.5f" % w.real
        return "%.5f%+.5fj" % (w.real, w.imag)

    if z.real > 0.5:
        ln = log_xi_z(z)
    else:
        if xi == 0:
            raise SingularityError(f"xi_z({_zlabel(z)}) = 0; log undefined")
        ln = cmath.log(xi)
    parts = [f"xi={f6(xi)}", f"ln_xi={f5(ln)}"]
    failures: list[str] = []
    if z.real > 10:
        terms = log_xi_asymptotic(z)
        dev = abs(ln - terms.main_sum())
        parts.append(f"asym_dev={dev:.3e}")
        parts.append(f"asym_bound={terms.remainder_bound:.3e}")
        if dev > terms.remainder_bound:
            failures.append(f"asymptotic deviation {dev:.3e} exceeds {terms.remainder_bound:.3e}")
    return [" ".join(parts)], failures


def _cmd_verify_table(cfg: RunConfig) -> tuple[list[str], list[str]]:
    lines: list[str] = []
    failures: list[str] = []
    for row in cfg.rows:
        pairs = ROW_VERIFICATION_PAIRS[row]
        if not cfg.all_pairs:
            pairs = pairs[:1]
        for a, z in pairs:
            chk = verify_table_row(row, a, z)
            lines.append(
                f"row={row} a={_g(a)} z={_zlabel(z)} closed={_gc(chk.closed)} "
                f"numeric={_gc(chk.numeric.value)} tol={chk.tolerance:.3e} "
                f"agree={'true' if chk.agree else 'false'}"
            )
            if not chk.agree:
                failures.append(f"row {row} disagrees at a={_g(a)}, z={_zlabel(z)}")
    return lines, failures


def _cmd_cosh_demo(cfg: RunConfig) -> tuple[list[str], list[str]]:
    z = cfg.z_samples[0]
    res = cosh_demo(z, cfg.fourier_terms)
    diff = abs(res.reconstructed - res.exact)
    line = (
        f"reconstructed={_gc(res.reconstructed)} exact={_gc(res.exact)} "
        f"abs_diff={diff:.3e} terms={cfg.fourier_terms}"
    )
    failures: list[str] = []
    if diff > cfg.tol("cosh"):
        failures.append(f"|reconstructed - exact| = {diff:.3e} > {cfg.tol('cosh'):.3e}")
    return [line], failures


def _cmd_find_zeros(cfg: RunConfig) -> tuple[list[str], list[str]]:
    zeros = find_zeros(cfg.t_max, step=cfg.scan_step, jobs=cfg.jobs)
    if cfg.output_path is not None:
        zeros.write(cfg.output_path)
        return [f"wrote {len(zeros)} zeros to {cfg.output_path}"], []
    lines = ["# xi zero ordinates (imaginary-axis, z-coordinates)",
             f"# t_max={zeros.t_max:.10g}"]
    lines += [f"{k:.10f}" for k in zeros.ordinates]
    return lines, []


def _cmd_count(cfg: RunConfig) -> tuple[list[str], list[str]]:
    zeros = _resolve_zeros(cfg, cfg.t_max)
    actual = zeros.count_below(cfg.t_max)
    formula = n_of_t(cfg.t_max)
    diff = actual - formula
    lines = [f"actual={actual} formula={_g(formula)} diff={_g(diff)}"]
    failures: list[str] = []
    if abs(diff) >= cfg.tol("count"):
        failures.append(f"|actual - formula| = {abs(diff):.3g} >= {cfg.tol('count'):g}")
    return lines, failures


def _cmd_predict(cfg: RunConfig) -> tuple[list[str], list[str]]:
    predicted = predict_zeros(cfg.n_max)
    zeros = _resolve_zeros(cfg, float(predicted[-1]) + 3.0)
    if len(zeros) < cfg.n_max:
        raise InsufficientZerosError(
            f"need {cfg.n_max} zeros, zero source provides {len(zeros)}"
        )
    actual = zeros.ordinates[: cfg.n_max]
    devs = actual - predicted
    lines = ["n,predicted_k,actual_k,deviation"]
    for i in range(cfg.n_max):
        lines.append(f"{i + 1},{_g(predicted[i])},{_g(actual[i])},{_g(devs[i])}")
    failures: list[str] = []
    mean_dev = float(np.mean(np.abs(devs)))
    max_dev = float(np.max(np.abs(devs)))
    if mean_dev > cfg.tol("predict-mean"):
        failures.append(f"mean |deviation| = {mean_dev:.3g} > {cfg.tol('predict-mean'):g}")
    if max_dev > cfg.tol("predict-max"):
        failures.append(f"max |deviation| = {max_dev:.3g} > {cfg.tol('predict-max'):g}")
    return lines, failures


def _cmd_residual(cfg: RunConfig) -> tuple[list[str], list[str]]:
    zeros = _resolve_zeros(cfg, cfg.t_max)
    z_values = [w.real for w in cfg.z_samples]
    report = residual_report(z_values, zeros)
    lines = [f"# constant_derived={_g(report.constant_derived)}",
             "z,residual,tail_estimate"]
    failures: list[str] = []
    for z, value, estimate in report.samples:
        lines.append(f"{_g(z)},{_g(value)},{_g(estimate)}")
        allowed = max(cfg.tol("residual"), estimate)
        if abs(value - report.constant_derived) > allowed:
            failures.append(
                f"residual at z={_g(z)} is {_g(value)}, outside "
                f"{_g(report.constant_derived)} +- {allowed:.3g}"
            )
    return lines, failures


def _cmd_omega(cfg: RunConfig) -> tuple[list[str], list[str]]:
    zeros = _resolve_zeros(cfg, cfg.t_max)
    stats = omega_stats(zeros, grid_step=cfg.grid_step)
    lines = ["k,omega,running_mean"]
    for (k, om), (_, mean) in zip(stats.grid, stats.running_mean):
        lines.append(f"{_g(k)},{_g(om)},{_g(mean)}")
    failures: list[str] = []
    if cfg.t_max >= 50 and abs(stats.final_mean) > cfg.tol("omega-mean"):
        failures.append(
            f"|running mean| at t_max = {abs(stats.final_mean):.3g} > {cfg.tol('omega-mean'):g}"
        )
    return lines, failures


def _cmd_report(cfg: RunConfig) -> tuple[list[str], list[str]]:
    zeros = _resolve_zeros(cfg, cfg.t_max)
    n_lim = int(math.ceil(n_of_t(cfg.t_max))) + 2
    predicted = predict_zeros(n_lim)
    n = int(round(cfg.t_max / cfg.grid_step))
    ks = cfg.grid_step * np.arange(1, n + 1)
    ks = ks[ks <= cfg.t_max + 1e-12]
    phi_sm = phi_smooth(ks)
    phi_act = zeros.count_below(ks)
    phi_prd = np.searchsorted(predicted, ks, side="right")
    lines = ["k,phi_smooth,phi_actual,phi_predicted"]
    for k, sm, act, prd in zip(ks, phi_sm, phi_act, phi_prd):
        lines.append(f"{_g(k)},{_g(sm)},{int(act)},{int(prd)}")
    failures: list[str] = []
    max_gap = int(np.max(np.abs(phi_act - phi_prd)))
    if max_gap > cfg.tol("staircase"):
        failures.append(
            f"actual and predicted staircases differ by {max_gap} > {cfg.tol('staircase'):g}"
        )
    return lines, failures


_HANDLERS: dict[str, Callable[[RunConfig], tuple[list[str], list[str]]]] = {
    "xi-eval": _cmd_xi_eval,
    "verify-table": _cmd_verify_table,
    "cosh-demo": _cmd_cosh_demo,
    "find-zeros": _cmd_find_zeros,
    "count": _cmd_count,
    "predict": _cmd_predict,
    "residual": _cmd_residual,
    "omega": _cmd_omega,
    "report": _cmd_report,
}


def _add_zero_source(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--zero-file", type=Path, default=None,
                    help=f"read ordinates from this file (default: ${ZERO_FILE_ENV}, else compute)")
    sp.add_argument("--jobs", type=int, default=1, help="parallel workers for the zero scan")
    sp.add_argument("--scan-step", type=float, default=0.25, dest="scan_step",
                    help="sign-change scan step when computing zeros")


def _add_common(sp: argparse.ArgumentParser, out_help: str) -> None:
    sp.add_argument("--tol", action="append", default=[], metavar="NAME=VALUE",
                    help="override a named tolerance (repeatable)")
    sp.add_argument("--out", type=Path, default=None, dest="output_path", help=out_help)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zetaprod",
        description="Log transforms of zero-counting measures for the symmetrized zeta function.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    sp = sub.add_parser("xi-eval", help="evaluate xi_z and its logarithm at a point")
    sp.add_argument("--z", required=True, metavar="RE[,IM]", type=_parse_point)
    _add_common(sp, "write the line to a file instead of stdout")

    sp = sub.add_parser("verify-table", help="closed forms vs adaptive quadrature")
    sp.add_argument("--rows", type=_parse_rows, default=tuple(range(1, 10)),
                    metavar="R1,R2,...", help="rows to check (default all nine)")
    sp.add_argument("--all-pairs", action="store_true",
                    help="check every catalog pair, not just the first per row")
    _add_common(sp, "write the lines to a file instead of stdout")

    sp = sub.add_parser("cosh-demo", help="log cosh reconstruction from the term series")
    sp.add_argument("--z", required=True, metavar="RE[,IM]", type=_parse_point)
    sp.add_argument("--terms", type=int, default=40, dest="fourier_terms")
    _add_common(sp, "write the line to a file instead of stdout")

    sp = sub.add_parser("find-zeros", help="scan for zero ordinates and emit a zero file")
    sp.add_argument("--t-max", type=float, required=True, dest="t_max")
    sp.add_argument("--out", type=Path, default=None, dest="output_path",
                    help="write the zero file here (default: print to stdout)")
    sp.add_argument("--step", type=float, default=0.25, dest="scan_step")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--tol", action="append", default=[], metavar="NAME=VALUE",
                    help=argparse.SUPPRESS)

    sp = sub.add_parser("count", help="actual zero count vs the counting formula")
    sp.add_argument("--t-max", type=float, required=True, dest="t_max")
    _add_zero_source(sp)
    _add_common(sp, "write the line to a file instead of stdout")

    sp = sub.add_parser("predict", help="predicted vs actual ordinates, CSV")
    sp.add_argument("--n", type=int, required=True, dest="n_max")
    _add_zero_source(sp)
    _add_common(sp, "write the CSV to a file instead of stdout")

    sp = sub.add_parser("residual", help="zero-product residual against T5, CSV")
    sp.add_argument("--z", required=True, metavar="Z1,Z2,...", type=_parse_reals,
                    dest="z_samples")
    sp.add_argument("--t-max", type=float, required=True, dest="t_max")
    _add_zero_source(sp)
    _add_common(sp, "write the CSV to a file instead of stdout")

    sp = sub.add_parser("omega", help="oscillatory remainder and running mean, CSV")
    sp.add_argument("--t-max", type=float, required=True, dest="t_max")
    sp.add_argument("--step", type=float, default=0.1, dest="grid_step")
    _add_zero_source(sp)
    _add_common(sp, "write the CSV to a file instead of stdout")

    sp = sub.add_parser("report", help="smooth, actual, predicted counts on a grid, CSV")
    sp.add_argument("--t-max", type=float, required=True, dest="t_max")
    sp.add_argument("--step", type=float, default=0.5, dest="grid_step")
    _add_zero_source(sp)
    _add_common(sp, "write the CSV to a file instead of stdout")

    return parser


def _config_from_args(parser: argparse.ArgumentParser, args: argparse.Namespace) -> RunConfig:
    tolerances: dict[str, float] = {}
    for item in getattr(args, "tol", []) or []:
        name, sep, raw = item.partition("=")
        if not sep or not name:
            parser.error(f"--tol expects NAME=VALUE, got {item!r}")
        try:
            tolerances[name] = float(raw)
        except ValueError:
            parser.error(f"--tol {name}: not a number: {raw!r}")

    kwargs = {"subcommand": args.subcommand, "tolerances": tolerances}
    z = getattr(args, "z", None)
    if isinstance(z, complex):
        kwargs["z_samples"] = (z,)
    for name in ("t_max", "z_samples", "zero_file", "output_path", "fourier_terms",
                 "grid_step", "scan_step", "jobs", "n_max", "rows", "all_pairs"):
        if hasattr(args, name) and getattr(args, name) is not None:
            kwargs[name] = getattr(args, name)
    return RunConfig(**kwargs)


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config_from_args(parser, args)
        lines, failures = _HANDLERS[cfg.subcommand](cfg)
    except ZetaprodError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    text = "\n".join(lines) + "\n"
    if cfg.subcommand == "find-zeros" and cfg.output_path is not None:
        # the handler already wrote the zero file; lines carry the notice
        sys.stdout.write(text)
    elif cfg.output_path is not None:
        with open(cfg.output_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)

    if failures:
        print("FAIL: " + "; ".join(failures), file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
