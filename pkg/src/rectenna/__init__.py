"""Fourier-series model of an RF energy-harvesting rectenna.

The model chain is: a sinewave (or two-tone multisine) source, an ideal
full-wave or half-wave rectifier expanded as a truncated cosine series, and
a parallel RC low-pass filter applied harmonic by harmonic.  Closed forms
for the DC voltage and ripple are paired with an independent quadrature /
sampling oracle, and a design layer searches the time constant for the best
DC-vs-ripple trade-off.
"""

from .design import (
    DesignResult,
    SweepRow,
    analytic_ripple,
    optimize_capacitance,
    rectified_reference,
    sampled_ripple,
    sweep_cutoff,
    time_trace,
)
from .oracle import (
    SampleStats,
    quad_b_coefficient,
    quad_coefficient,
    quad_multisine_a0,
    sample_stats,
)
from .rcfilter import (
    FilteredSeries,
    RcFilter,
    amplification_factor,
    dc_limits,
    dc_voltage,
    eval_filtered,
    filtered_series,
    max_ripple,
    ripple_peak,
    transfer,
)
from .rectifier import (
    DEFAULT_TRUNCATION,
    FourierSeries,
    RectifierKind,
    build_series,
    eval_series,
    fourier_coefficient,
    multisine_a0,
    rectify,
)
from .waveforms import (
    MultisineSpec,
    ToneSpec,
    eval_multisine,
    eval_multisine_envelope,
    eval_sinewave,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_TRUNCATION",
    "DesignResult",
    "FilteredSeries",
    "FourierSeries",
    "MultisineSpec",
    "RcFilter",
    "RectifierKind",
    "SampleStats",
    "SweepRow",
    "ToneSpec",
    "amplification_factor",
    "analytic_ripple",
    "build_series",
    "dc_limits",
    "dc_voltage",
    "eval_filtered",
    "eval_multisine",
    "eval_multisine_envelope",
    "eval_series",
    "eval_sinewave",
    "filtered_series",
    "fourier_coefficient",
    "max_ripple",
    "multisine_a0",
    "optimize_capacitance",
    "quad_b_coefficient",
    "quad_coefficient",
    "quad_multisine_a0",
    "rectified_reference",
    "rectify",
    "ripple_peak",
    "sample_stats",
    "sampled_ripple",
    "sweep_cutoff",
    "time_trace",
    "transfer",
]
