"""Brute-force numerical checks for the closed-form model.

Everything here avoids the analytic coefficient formulas on purpose: the
Fourier coefficients are recomputed by composite Gauss-Legendre quadrature
with panels aligned to the kinks of the rectified waveform, and waveform
statistics come from dense uniform sampling.  Panel and sample reductions
use a fixed order, so results are deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np

from .rectifier import RectifierKind, rectify

__all__ = [
    "SampleStats",
    "quad_coefficient",
    "quad_b_coefficient",
    "quad_multisine_a0",
    "sample_stats",
]

_GAUSS_ORDER = 32
_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0
_ARGMAX_RESOLUTION = 1e-12  # seconds


@lru_cache(maxsize=None)
def _gauss_nodes(order: int) -> tuple[np.ndarray, np.ndarray]:
    nodes, weights = np.polynomial.legendre.leggauss(order)
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return nodes, weights


def _integrate(f: Callable, a: float, b: float, panels: int) -> float:
    """Composite Gauss-Legendre integral of a vectorizable f over [a, b]."""
    nodes, weights = _gauss_nodes(_GAUSS_ORDER)
    edges = np.linspace(a, b, panels + 1)
    mids = 0.5 * (edges[:-1] + edges[1:])
    halves = 0.5 * (edges[1:] - edges[:-1])
    # (panels, order) grid evaluated in one call, reduced in fixed order
    points = mids[:, None] + halves[:, None] * nodes[None, :]
    values = f(points)
    return float(np.sum(halves * (values @ weights)))


def _segment_panels(length: float, k: int, fc: float, refine: int) -> int:
    # enough panels that each holds at most ~half an oscillation of the
    # fastest factor cos(2 pi k fc t)
    oscillations = (k + 1) * fc * length
    return refine * max(4, math.ceil(2.0 * oscillations))


def _quad_projection(kind: RectifierKind, k: int, fc: float, refine: int, use_sine: bool) -> float:
    if k < 0:
        raise ValueError(f"harmonic index must be >= 0, got {k}")
    if fc <= 0:
        raise ValueError(f"fc must be > 0, got {fc}")
    if refine < 1:
        raise ValueError(f"refine must be >= 1, got {refine}")
    w = 2.0 * math.pi * fc
    trig = np.sin if use_sine else np.cos

    def integrand(t):
        return rectify(kind, np.cos(w * t)) * trig((w * k) * t)

    # kinks of g(cos(2 pi fc t)) sit at +-1/(4 fc)
    quarter = 1.0 / (4.0 * fc)
    half = 1.0 / (2.0 * fc)
    total = 0.0
    for lo, hi in ((-half, -quarter), (-quarter, quarter), (quarter, half)):
        total += _integrate(integrand, lo, hi, _segment_panels(hi - lo, k, fc, refine))
    return 2.0 * fc * total


def quad_coefficient(kind: RectifierKind, k: int, fc: float = 1.0, refine: int = 1) -> float:
    """Cosine coefficient by quadrature:
    ``2 fc * integral of g(cos(2 pi fc t)) cos(2 pi k fc t) over one period``.

    Independent of ``fc`` up to roundoff (the substitution z = 2 pi fc t
    removes it); passing different carriers is a consistency check, not a
    model change.  ``refine`` multiplies the automatic panel count.
    """
    return _quad_projection(kind, k, fc, refine, use_sine=False)


def quad_b_coefficient(kind: RectifierKind, k: int, fc: float = 1.0, refine: int = 1) -> float:
    """Sine coefficient by quadrature; vanishes for all k by even symmetry."""
    if k == 0:
        return 0.0
    return _quad_projection(kind, k, fc, refine, use_sine=True)


def quad_multisine_a0(kind: RectifierKind, fc: float, df: float, refine: int = 1) -> float:
    """Two-tone DC coefficient by quadrature, per-tone normalized.

    Integrates the rectified two-tone waveform
    ``g(2 cos(pi df t) cos(2 pi fc t))`` over the central carrier period
    ``[-1/(2 fc), 1/(2 fc)]`` and scales by ``fc`` (= ``2 fc / N`` with
    N = 2 tones), the same construction that produces the closed form in
    :func:`rectenna.rectifier.multisine_a0`.  Matches that closed form for
    ``df <= fc``, where rectifier conduction stays confined to the carrier
    half-cycles.
    """
    if fc <= 0:
        raise ValueError(f"fc must be > 0, got {fc}")
    if df < 0:
        raise ValueError(f"df must be >= 0, got {df}")
    if refine < 1:
        raise ValueError(f"refine must be >= 1, got {refine}")
    w = 2.0 * math.pi * fc

    def integrand(t):
        return rectify(kind, 2.0 * np.cos((math.pi * df) * t) * np.cos(w * t))

    quarter = 1.0 / (4.0 * fc)
    half = 1.0 / (2.0 * fc)
    breakpoints = {-half, -quarter, quarter, half}
    if df > fc:
        # envelope zeros enter the carrier period
        breakpoints.update({-0.5 / df, 0.5 / df})
    edges = sorted(breakpoints)
    total = 0.0
    for lo, hi in zip(edges[:-1], edges[1:]):
        total += _integrate(integrand, lo, hi, refine * 16)
    return fc * total


@dataclass(frozen=True)
class SampleStats:
    """Summary of a sampled waveform over one period."""

    mean: float
    max: float
    min: float
    peak_to_peak: float
    argmax_t: float


def _golden_maximize(f: Callable, lo: float, hi: float, tol: float) -> tuple[float, float]:
    a, b = lo, hi
    c = b - _GOLDEN * (b - a)
    d = a + _GOLDEN * (b - a)
    fc_, fd = float(f(c)), float(f(d))
    while b - a > tol:
        if fc_ >= fd:
            b, d, fd = d, c, fc_
            c = b - _GOLDEN * (b - a)
            fc_ = float(f(c))
        else:
            a, c, fc_ = c, d, fd
            d = a + _GOLDEN * (b - a)
            fd = float(f(d))
    x = 0.5 * (a + b)
    return x, float(f(x))


def sample_stats(f: Callable, period: float, n: int, refine_argmax: bool = True) -> SampleStats:
    """Mean/extrema of ``f`` on ``n`` uniform samples over ``[0, period)``.

    The discrete argmax is sharpened by a golden-section search in its
    one-sample neighbourhood down to 1e-12 s (skipped when the grid is
    already finer than that).  ``f`` may be vectorized or scalar-only.
    """
    if n < 2:
        raise ValueError(f"need at least 2 samples, got {n}")
    if period <= 0:
        raise ValueError(f"period must be > 0, got {period}")
    ts = np.arange(n) * (period / n)
    values = np.asarray(f(ts), dtype=float)
    if values.shape != ts.shape:
        values = np.array([float(f(t)) for t in ts])
    mean = float(values.mean())
    idx = int(np.argmax(values))
    vmax = float(values[idx])
    vmin = float(values.min())
    argmax_t = float(ts[idx])
    spacing = period / n
    if refine_argmax and spacing > _ARGMAX_RESOLUTION:
        x, fx = _golden_maximize(f, argmax_t - spacing, argmax_t + spacing, _ARGMAX_RESOLUTION)
        if fx > vmax:
            vmax, argmax_t = fx, x
    return SampleStats(
        mean=mean,
        max=vmax,
        min=vmin,
        peak_to_peak=vmax - vmin,
        argmax_t=argmax_t,
    )
