"""Parallel RC low-pass filter acting on the rectified harmonic series.

The filter is the one-pole transfer function ``H(f) = R / (1 + j 2 pi f tau)``
with ``tau = R C``.  The matched front end scales the rectifier input by the
amplification factor ``sqrt(R / (1 + (2 pi fc tau)^2))``, so both the DC level
and every harmonic amplitude depend on the same time constant: small tau means
more DC and more ripple, large tau kills both.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .rectifier import (
    DEFAULT_TRUNCATION,
    FourierSeries,
    RectifierKind,
    fourier_coefficient,
)

__all__ = [
    "RcFilter",
    "FilteredSeries",
    "amplification_factor",
    "transfer",
    "filtered_series",
    "eval_filtered",
    "dc_voltage",
    "ripple_peak",
    "max_ripple",
    "dc_limits",
]


@dataclass(frozen=True)
class RcFilter:
    """Load resistance (ohm) and smoothing capacitance (F), C = 0 allowed."""

    resistance: float
    capacitance: float

    def __post_init__(self):
        if self.resistance <= 0:
            raise ValueError(f"resistance must be > 0, got {self.resistance}")
        if self.capacitance < 0:
            raise ValueError(f"capacitance must be >= 0, got {self.capacitance}")

    @property
    def tau(self) -> float:
        """RC time constant ``R * C`` in seconds."""
        return self.resistance * self.capacitance

    @property
    def cutoff(self) -> float:
        """Cut-off frequency ``1 / (2 pi tau)``; inf when tau = 0."""
        tau = self.tau
        if tau == 0.0:
            return math.inf
        return 1.0 / (2.0 * math.pi * tau)

    @classmethod
    def from_cutoff(cls, resistance: float, cutoff: float) -> "RcFilter":
        """Build the filter whose cut-off is ``cutoff``; inf means C = 0."""
        if cutoff <= 0:
            raise ValueError(f"cutoff must be > 0, got {cutoff}")
        if math.isinf(cutoff):
            return cls(resistance, 0.0)
        return cls(resistance, 1.0 / (2.0 * math.pi * cutoff * resistance))


def amplification_factor(filt: RcFilter, fc: float) -> float:
    """Matched-input voltage scaling ``sqrt(R / (1 + (2 pi fc tau)^2))``.

    Tends to ``sqrt(R)`` as tau -> 0 and to 0 as tau -> inf.
    """
    w = 2.0 * math.pi * fc * filt.tau
    return math.sqrt(filt.resistance / (1.0 + w * w))


def transfer(filt: RcFilter, f: float) -> tuple[float, float]:
    """Magnitude and phase of ``H(f) = R / (1 + j 2 pi f tau)``.

    Returns ``(R / sqrt(1 + (2 pi f tau)^2), atan(-2 pi f tau))``.
    """
    wt = 2.0 * math.pi * f * filt.tau
    return filt.resistance / math.sqrt(1.0 + wt * wt), math.atan(-wt)


@dataclass(frozen=True)
class FilteredSeries:
    """A rectified series with the per-harmonic filter gain and phase attached.

    ``gains[i]`` and ``phase_shifts[i]`` are ``|H(k fc)|`` and ``angle H(k fc)``
    for harmonic ``k = i + 1``.
    """

    base: FourierSeries
    filt: RcFilter
    gains: np.ndarray
    phase_shifts: np.ndarray

    @property
    def dc_level(self) -> float:
        """DC term ``scale * a0 * R / 2`` of the filtered output."""
        return self.base.scale * self.base.a0 * self.filt.resistance / 2.0


def filtered_series(series: FourierSeries, filt: RcFilter) -> FilteredSeries:
    """Attach ``|H(k fc)|`` and ``angle H(k fc)`` for k = 1..K."""
    if series.fundamental_fc <= 0:
        raise ValueError("series fundamental frequency must be > 0")
    ks = np.arange(1, series.truncation + 1, dtype=float)
    wt = 2.0 * np.pi * ks * series.fundamental_fc * filt.tau
    gains = filt.resistance / np.sqrt(1.0 + wt * wt)
    phase_shifts = np.arctan(-wt)
    gains.setflags(write=False)
    phase_shifts.setflags(write=False)
    return FilteredSeries(base=series, filt=filt, gains=gains, phase_shifts=phase_shifts)


def eval_filtered(fs: FilteredSeries, t):
    """Evaluate the filter output series at time(s) t.

    ``scale * (a0 R / 2 + sum_k |H(k fc)| a_k cos(2 pi k fc t + angle H(k fc)))``
    (the per-harmonic sign of ``a_k`` absorbs the 0/pi rectifier phase).
    """
    base = fs.base
    tt = np.asarray(t, dtype=float)
    w = 2.0 * np.pi * base.fundamental_fc
    acc = np.full(tt.shape, 0.5 * base.a0 * fs.filt.resistance)
    for k in range(1, base.truncation + 1):
        a = base.ak[k - 1]
        if a != 0.0:
            acc += (fs.gains[k - 1] * a) * np.cos((w * k) * tt + fs.phase_shifts[k - 1])
    out = base.scale * acc
    return float(out) if np.ndim(t) == 0 else out


def dc_voltage(kind: RectifierKind, filt: RcFilter, amplitude: float, fc: float) -> float:
    """Time-averaged filter output ``delta * A * R * a0 / 2``."""
    delta = amplification_factor(filt, fc)
    return delta * amplitude * filt.resistance * fourier_coefficient(kind, 0) / 2.0


def ripple_peak(
    kind: RectifierKind,
    filt: RcFilter,
    amplitude: float,
    fc: float,
    truncation: int = DEFAULT_TRUNCATION,
) -> float:
    """Aligned-phase peak estimate of the filter output.

    ``delta A R (a0/2 + sum_k a_k / sqrt(1 + (2 pi k fc tau)^2))``: every
    harmonic counted at full magnitude, as if all peaked at one instant.
    Exact at tau = 0 (where it reduces to ``max_ripple``); for tau > 0 it is
    an estimate, and the sampled peak-to-peak should be consulted alongside.
    """
    if truncation < 1:
        raise ValueError(f"truncation must be >= 1, got {truncation}")
    delta = amplification_factor(filt, fc)
    ks = np.arange(1, truncation + 1, dtype=float)
    ak = np.array([fourier_coefficient(kind, k) for k in range(1, truncation + 1)])
    atten = np.sqrt(1.0 + (2.0 * np.pi * ks * fc * filt.tau) ** 2)
    harmonic_sum = float(np.sum(ak / atten))
    a0 = fourier_coefficient(kind, 0)
    return delta * amplitude * filt.resistance * (0.5 * a0 + harmonic_sum)


def max_ripple(
    kind: RectifierKind,
    amplitude: float,
    resistance: float,
    truncation: int = DEFAULT_TRUNCATION,
) -> float:
    """Unfiltered (tau = 0) peak: ``A R sqrt(R) (a0/2 + sum_k a_k)``.

    Converges to ``A R^(3/2)`` as the truncation grows, for both rectifiers.
    """
    if truncation < 1:
        raise ValueError(f"truncation must be >= 1, got {truncation}")
    ak = np.array([fourier_coefficient(kind, k) for k in range(1, truncation + 1)])
    harmonic_sum = float(np.sum(ak))
    a0 = fourier_coefficient(kind, 0)
    return math.sqrt(resistance) * amplitude * resistance * (0.5 * a0 + harmonic_sum)


def dc_limits(kind: RectifierKind, resistance: float, amplitude: float) -> tuple[float, float]:
    """DC voltage range over all time constants: ``(0, A R sqrt(R) a0 / 2)``.

    The low end is the tau -> inf limit, the high end is attained at tau = 0.
    """
    high = math.sqrt(resistance) * amplitude * resistance * fourier_coefficient(kind, 0) / 2.0
    return 0.0, high
