"""Command-line front end: coefficient tables, traces, sweeps, design, validation.

All tables are emitted as CSV (default) or JSON with 9-significant-digit
floats, so identical invocations produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass

import numpy as np

from . import oracle
from .design import optimize_capacitance, sweep_cutoff, time_trace
from .rcfilter import (
    RcFilter,
    amplification_factor,
    dc_voltage,
    eval_filtered,
    filtered_series,
    max_ripple,
    ripple_peak,
)
from .rectifier import (
    DEFAULT_TRUNCATION,
    RectifierKind,
    build_series,
    eval_series,
    fourier_coefficient,
    multisine_a0,
)

DEFAULT_AMPLITUDE = 1.0
DEFAULT_FC = 915e6
DEFAULT_RESISTANCE = 2.0

_KINDS = {"full": RectifierKind.FULL_WAVE, "half": RectifierKind.HALF_WAVE}


@dataclass(frozen=True)
class RunConfig:
    """Validated knobs shared by the table-producing commands."""

    command: str
    kind: RectifierKind
    amplitude: float
    fc: float
    resistance: float
    truncation: int
    output_format: str
    output_path: str | None


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.9g}"
    return str(value)


def _json_value(value):
    if isinstance(value, float):
        return float(f"{value:.9g}")
    return value


def _emit(header: list[str], rows: list[list], config: RunConfig) -> None:
    if config.output_format == "csv":
        lines = [",".join(header)]
        lines += [",".join(_fmt(v) for v in row) for row in rows]
        text = "\n".join(lines) + "\n"
    else:
        records = [{name: _json_value(v) for name, v in zip(header, row)} for row in rows]
        text = json.dumps(records, indent=2) + "\n"
    if config.output_path:
        with open(config.output_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parse_range(text: str) -> tuple[float, float, int, str]:
    """Parse ``min:max:points[:log]`` sweep syntax."""
    parts = text.split(":")
    if len(parts) not in (3, 4):
        raise ValueError(f"expected min:max:points[:log], got {text!r}")
    lo, hi, points = float(parts[0]), float(parts[1]), int(parts[2])
    spacing = "linear"
    if len(parts) == 4:
        if parts[3] not in ("lin", "linear", "log"):
            raise ValueError(f"spacing must be 'linear' or 'log', got {parts[3]!r}")
        spacing = "log" if parts[3] == "log" else "linear"
    return lo, hi, points, spacing


def _grid(lo: float, hi: float, points: int, spacing: str) -> np.ndarray:
    if not lo < hi or points < 2:
        raise ValueError(f"invalid range {lo}:{hi}:{points}")
    if spacing == "log":
        if lo <= 0:
            raise ValueError("log spacing requires positive bounds")
        return np.geomspace(lo, hi, points)
    return np.linspace(lo, hi, points)


def _filter_from_args(args, resistance: float) -> RcFilter:
    if args.cap is not None:
        return RcFilter(resistance, args.cap)
    # --fcut 0 (or inf) means the unfiltered tau = 0 case
    if args.fcut == 0 or math.isinf(args.fcut):
        return RcFilter(resistance, 0.0)
    return RcFilter.from_cutoff(resistance, args.fcut)


def _cmd_coeffs(args, config: RunConfig) -> int:
    if args.k_max < 0:
        raise ValueError(f"--k-max must be >= 0, got {args.k_max}")
    rows = []
    for k in range(args.k_max + 1):
        closed = fourier_coefficient(config.kind, k)
        quad = oracle.quad_coefficient(config.kind, k, config.fc)
        rows.append([k, closed, quad, abs(closed - quad)])
    _emit(["k", "a_closed", "a_quad", "abs_diff"], rows, config)
    return 0


def _cmd_multisine_a0(args, config: RunConfig) -> int:
    if ":" in args.df:
        lo, hi, points, spacing = _parse_range(args.df)
        dfs = _grid(lo, hi, points, spacing)
    else:
        dfs = np.array([float(args.df)])
    rows = []
    for df in dfs:
        closed = multisine_a0(config.kind, config.fc, float(df))
        quad = oracle.quad_multisine_a0(config.kind, config.fc, float(df))
        rows.append([float(df), closed, quad, abs(closed - quad)])
    _emit(["df_hz", "a0_closed", "a0_quad", "abs_diff"], rows, config)
    return 0


def _cmd_trace(args, config: RunConfig) -> int:
    filt = _filter_from_args(args, config.resistance)
    if args.t is not None:
        lo, hi, points, spacing = _parse_range(args.t)
        if spacing != "linear":
            raise ValueError("trace time grid must be linear")
        ts = np.linspace(lo, hi, points)
    else:
        ts = np.arange(1024) * (2.0 / config.fc / 1024)
    pairs = time_trace(
        config.kind,
        config.resistance,
        config.amplitude,
        config.fc,
        filt.cutoff,
        ts,
        config.truncation,
    )
    _emit(["t_s", "v_o_v"], [list(p) for p in pairs], config)
    return 0


def _cmd_sweep(args, config: RunConfig) -> int:
    lo, hi, points, spacing = _parse_range(args.fcut)
    rows = sweep_cutoff(
        config.kind,
        config.resistance,
        config.amplitude,
        config.fc,
        lo,
        hi,
        points,
        spacing,
        config.truncation,
    )
    table = [
        [r.cutoff, r.tau, r.capacitance, r.v_dc, r.ripple_analytic, r.ripple_sampled]
        for r in rows
    ]
    _emit(
        ["f_cut_hz", "tau_s", "cap_f", "v_dc_v", "ripple_analytic_v", "ripple_sampled_v"],
        table,
        config,
    )
    return 0


def _cmd_design(args, config: RunConfig) -> int:
    metric = "sampled_ptp" if args.metric == "sampled" else "analytic"
    res = optimize_capacitance(
        config.kind,
        config.resistance,
        config.amplitude,
        config.fc,
        args.budget,
        metric,
        config.truncation,
    )
    _emit(
        ["cap_f", "tau_s", "v_dc_v", "ripple_v", "budget_v", "feasible"],
        [[res.capacitance, res.tau, res.v_dc, res.ripple, res.budget, res.feasible]],
        config,
    )
    return 0


def _validation_checks(fc: float, k_max: int):
    """Yield (name, ok, detail) for every oracle-agreement invariant."""
    full, half = RectifierKind.FULL_WAVE, RectifierKind.HALF_WAVE

    for kind, label in ((full, "full"), (half, "half")):
        err = max(
            abs(fourier_coefficient(kind, k) - oracle.quad_coefficient(kind, k))
            for k in range(k_max + 1)
        )
        yield f"coefficients_vs_quadrature[{label}]", err < 1e-8, f"max|diff|={err:.3e}"
        berr = max(abs(oracle.quad_b_coefficient(kind, k)) for k in range(k_max + 1))
        yield f"sine_coefficients_zero[{label}]", berr < 1e-9, f"max|b_k|={berr:.3e}"

    ok = all(
        fourier_coefficient(full, k) == 2.0 * fourier_coefficient(half, k)
        for k in range(k_max + 1)
        if k != 1
    )
    yield "full_is_twice_half", ok, "exact"

    probe = [0, 1, 2, 5, 16, min(64, max(2, k_max))]
    derr = max(
        abs(oracle.quad_coefficient(kind, k, refine=1) - oracle.quad_coefficient(kind, k, refine=2))
        for kind in (full, half)
        for k in probe
    )
    yield "quadrature_panel_doubling", derr < 1e-10, f"max|diff|={derr:.3e}"

    ferr = max(
        abs(oracle.quad_coefficient(kind, k, fc=1.0) - oracle.quad_coefficient(kind, k, fc=fc))
        for kind in (full, half)
        for k in probe
    )
    yield "quadrature_fc_invariance", ferr < 1e-12, f"max|diff|={ferr:.3e}"

    rng = np.random.default_rng(20260811)
    dcerr = 0.0
    for _ in range(5):
        filt = RcFilter(float(rng.uniform(0.5, 20.0)), float(10 ** rng.uniform(-13, -10)))
        amp = float(rng.uniform(0.2, 3.0))
        scale = amplification_factor(filt, fc) * amp
        fs = filtered_series(build_series(full, 256, scale=scale, fc=fc), filt)
        stats = oracle.sample_stats(lambda t: eval_filtered(fs, t), 1.0 / fc, 8192)
        ref = dc_voltage(full, filt, amp, fc)
        dcerr = max(dcerr, abs(stats.mean - ref) / abs(ref))
    yield "dc_equals_sampled_mean", dcerr < 1e-9, f"max rel err={dcerr:.3e}"

    filt0 = RcFilter(2.0, 0.0)
    base = build_series(full, 256, scale=1.0, fc=fc)
    fs0 = filtered_series(base, filt0)
    ts = np.arange(1000) * (1.0 / fc / 1000)
    ierr = float(np.max(np.abs(eval_filtered(fs0, ts) - filt0.resistance * eval_series(base, ts))))
    yield "unfiltered_identity", ierr < 1e-12, f"max|diff|={ierr:.3e}"

    rp = ripple_peak(full, filt0, 1.0, fc, 256)
    mr = max_ripple(full, 1.0, 2.0, 256)
    yield "ripple_peak_tau0_equals_max", rp == mr, f"{rp:.9g} vs {mr:.9g}"

    merr = 0.0
    for kind in (full, half):
        for ratio in (0.01, 0.05, 0.1, 0.5):
            df = ratio * fc
            merr = max(
                merr, abs(multisine_a0(kind, fc, df) - oracle.quad_multisine_a0(kind, fc, df))
            )
    yield "multisine_a0_vs_quadrature", merr < 1e-8, f"max|diff|={merr:.3e}"

    rerr = 0.0
    for ratio in (0.01, 0.05, 0.1, 0.5):
        df = ratio * fc
        got = multisine_a0(full, fc, df) / multisine_a0(half, fc, df)
        want = 2.0 - (df / fc) * math.sin(0.25 * math.pi * df / fc)
        rerr = max(rerr, abs(got - want))
    yield "multisine_full_half_factor", rerr < 1e-8, f"max|diff|={rerr:.3e}"

    ok = True
    detail = []
    for trunc in (64, 256, 1024):
        series = build_series(full, trunc, scale=1.0, fc=fc)
        sup = float(
            np.max(np.abs(eval_series(series, ts) - np.abs(np.cos(2 * np.pi * fc * ts))))
        )
        bound = 4.0 / (math.pi * trunc)
        ok = ok and sup <= bound
        detail.append(f"K={trunc}:{sup:.3e}<={bound:.3e}")
    yield "series_tail_bound", ok, " ".join(detail)

    herr = max(
        abs(oracle.sample_stats(lambda t, k=k: np.cos(2 * np.pi * k * t), 1.0, 4 * k * 8).mean)
        for k in (1, 3, 8)
    )
    yield "harmonic_sample_mean_zero", herr < 1e-12, f"max|mean|={herr:.3e}"


def _cmd_validate(args, config: RunConfig) -> int:
    failures = 0
    for name, ok, detail in _validation_checks(config.fc, args.k_max):
        print(f"{'PASS' if ok else 'FAIL'} {name} ({detail})")
        failures += 0 if ok else 1
    if failures:
        print(f"{failures} check(s) failed")
        return 1
    print("all checks passed")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rectenna",
        description="Rectified-carrier Fourier model: coefficients, RC filtering, "
        "DC/ripple trade-off and capacitance design.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, needs_filter=False):
        p.add_argument("--kind", choices=sorted(_KINDS), default="full",
                       help="rectifier nonlinearity (default: full)")
        p.add_argument("--amplitude", type=float, default=DEFAULT_AMPLITUDE,
                       help="source peak amplitude in volts (default: 1)")
        p.add_argument("--fc", type=float, default=DEFAULT_FC,
                       help="carrier frequency in Hz (default: 915e6)")
        p.add_argument("--rl", type=float, default=DEFAULT_RESISTANCE,
                       help="load resistance in ohms (default: 2)")
        p.add_argument("--truncation", type=int, default=DEFAULT_TRUNCATION,
                       help="number of harmonics kept (default: 256)")
        p.add_argument("--format", choices=("csv", "json"), default="csv",
                       help="output format (default: csv)")
        p.add_argument("--out", default=None, help="write output to this path instead of stdout")
        if needs_filter:
            group = p.add_mutually_exclusive_group(required=True)
            group.add_argument("--fcut", type=float,
                               help="filter cut-off in Hz; 0 or inf selects the unfiltered tau=0 case")
            group.add_argument("--cap", type=float, help="filter capacitance in farads")

    p = sub.add_parser("coeffs", help="closed-form vs quadrature Fourier coefficients")
    add_common(p)
    p.add_argument("--k-max", type=int, default=16, help="highest harmonic index (default: 16)")

    p = sub.add_parser("trace", help="filter output voltage over a time grid")
    add_common(p, needs_filter=True)
    p.add_argument("--t", default=None,
                   help="time grid as start:stop:points (default: two carrier periods, 1024 points)")

    p = sub.add_parser("sweep", help="DC voltage and ripple vs cut-off frequency")
    add_common(p)
    p.add_argument("--fcut", required=True, help="cut-off grid as min:max:points[:log]")

    p = sub.add_parser("design", help="pick the capacitance for a ripple budget")
    add_common(p)
    p.add_argument("--budget", type=float, required=True, help="ripple budget in volts")
    p.add_argument("--metric", choices=("sampled", "analytic"), default="sampled",
                   help="ripple metric to constrain (default: sampled peak-to-peak)")

    p = sub.add_parser("multisine-a0", help="two-tone DC coefficient, closed form vs quadrature")
    add_common(p)
    p.add_argument("--df", required=True,
                   help="tone spacing in Hz, a single value or min:max:points[:log]")

    p = sub.add_parser("validate", help="run the oracle-agreement checks")
    add_common(p)
    p.add_argument("--k-max", type=int, default=64,
                   help="highest harmonic checked against quadrature (default: 64)")

    return parser


_HANDLERS = {
    "coeffs": _cmd_coeffs,
    "trace": _cmd_trace,
    "sweep": _cmd_sweep,
    "design": _cmd_design,
    "multisine-a0": _cmd_multisine_a0,
    "validate": _cmd_validate,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    config = RunConfig(
        command=args.command,
        kind=_KINDS[args.kind],
        amplitude=args.amplitude,
        fc=args.fc,
        resistance=args.rl,
        truncation=args.truncation,
        output_format=args.format,
        output_path=args.out,
    )
    if config.amplitude <= 0 or config.fc <= 0 or config.resistance <= 0 or config.truncation < 1:
        print("error: amplitude, fc, rl must be > 0 and truncation >= 1", file=sys.stderr)
        return 2
    try:
        return _HANDLERS[args.command](args, config)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def console_main() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    console_main()
