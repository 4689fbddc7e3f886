"""How far the exact counts swing around their smooth asymptote.

The distinct-square counts oscillate visibly about the smooth curve, waxing
and waning like beats.  This module extracts the residual exact - smooth,
tracks its windowed amplitude relative to the smooth level, and offers a
descriptive spectral peak finder for the beat pattern.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .asymptotic import FERMI, BOSE, AsymptoticModel, rho_unrestricted
from .counting import PartitionTable
from .errors import DomainError, PrecisionLossError, SpecMismatchError

#: Largest integer a float represents exactly.
FLOAT_EXACT_MAX = 2**53


def _check_match(table: PartitionTable, model: AsymptoticModel) -> None:
    spec = table.spec
    if float(spec.s) != model.s:
        raise SpecMismatchError(f"table has s={spec.s} but model has s={model.s}")
    expected = FERMI if spec.distinct else BOSE
    if model.statistics != expected:
        raise SpecMismatchError(
            f"table distinct={spec.distinct} needs {expected!r} statistics, "
            f"model has {model.statistics!r}"
        )
    if spec.max_parts is not None:
        raise SpecMismatchError("residuals compare against the unbounded smooth curve")


def smooth_curve(model: AsymptoticModel, n_values) -> np.ndarray:
    """Smooth density evaluated at each (integer) n."""
    return np.array([rho_unrestricted(model, float(n)) for n in n_values])


def residuals(table: PartitionTable, model: AsymptoticModel, n_min: int = 1) -> np.ndarray:
    """exact(n) - smooth(n) for n = n_min .. n_max, as floats.

    Counts above 2**53 would not survive the float conversion at integer
    precision, so they raise instead of silently degrading.
    """
    _check_match(table, model)
    if n_min < 1 or n_min > table.n_max:
        raise DomainError(f"n_min must lie in 1..{table.n_max}, got {n_min!r}")
    out = np.empty(table.n_max - n_min + 1)
    for idx, n in enumerate(range(n_min, table.n_max + 1)):
        c = table.counts[n]
        if c > FLOAT_EXACT_MAX:
            raise PrecisionLossError(
                f"count at n={n} exceeds 2**53; residuals would lose integer precision"
            )
        out[idx] = float(c) - rho_unrestricted(model, float(n))
    return out


def amplitude_ratio(residual, smooth, window: int) -> np.ndarray:
    """Windowed oscillation size relative to the smooth level.

    Each output r[i] is max|residual| over a length-`window` slice divided
    by the mean of `smooth` over the same slice; the output is shorter than
    the input by window - 1 (the window edges).
    """
    residual = np.asarray(residual, dtype=float)
    smooth = np.asarray(smooth, dtype=float)
    if residual.shape != smooth.shape:
        raise DomainError("residual and smooth sequences must have equal length")
    if window < 3:
        raise DomainError(f"window must be at least 3, got {window!r}")
    if window > residual.size:
        raise DomainError(
            f"window {window} larger than sequence of length {residual.size}"
        )
    n_out = residual.size - window + 1
    out = np.empty(n_out)
    for i in range(n_out):
        out[i] = np.abs(residual[i : i + window]).max() / smooth[i : i + window].mean()
    return out


def beat_spectrum(residual, smooth=None) -> list[tuple[float, float]]:
    """Spectral peaks of the residual sequence, strongest first.

    The residual is optionally divided by the smooth curve (so the decaying
    envelope does not drown the oscillation), mean-subtracted, tapered with
    a Hann window, and Fourier transformed.  A peak is a local maximum of
    the power spectrum at least five times the median power (with a tiny
    relative floor to ignore rounding noise).  Frequencies are in cycles
    per unit n.  Purely descriptive output.
    """
    x = np.asarray(residual, dtype=float)
    if x.size < 64:
        raise DomainError(f"need at least 64 samples, got {x.size}")
    if smooth is not None:
        x = x / np.asarray(smooth, dtype=float)
    x = x - x.mean()
    power = np.abs(np.fft.rfft(x * np.hanning(x.size))) ** 2
    freqs = np.fft.rfftfreq(x.size, d=1.0)
    if power.size < 3:
        return []
    floor = max(5.0 * float(np.median(power[1:])), 1e-12 * float(power.max()))
    peaks = [
        (float(freqs[i]), float(power[i]))
        for i in range(1, power.size - 1)
        if power[i] > power[i - 1] and power[i] >= power[i + 1] and power[i] >= floor
    ]
    peaks.sort(key=lambda fp: (-fp[1], fp[0]))
    return peaks


@dataclass
class FluctuationReport:
    """Residuals, windowed amplitude ratios, and a one-glance summary."""

    n_grid: np.ndarray
    residual: np.ndarray
    smooth: np.ndarray
    ratio: np.ndarray
    window: int
    summary: dict = field(default_factory=dict)


def analyze(
    table: PartitionTable,
    model: AsymptoticModel,
    window: int = 50,
    n_min: int = 1,
    spectrum: bool = False,
) -> FluctuationReport:
    """Full residual/ratio pass over a table, with optional spectral peaks."""
    n_grid = np.arange(n_min, table.n_max + 1)
    res = residuals(table, model, n_min)
    smooth = smooth_curve(model, n_grid)
    ratio = amplitude_ratio(res, smooth, window)
    summary = {
        "first_ratio": float(ratio[0]),
        "last_ratio": float(ratio[-1]),
        "decreasing": bool(ratio[-1] < ratio[0]),
    }
    if spectrum:
        summary["peaks"] = beat_spectrum(res, smooth)[:5]
    return FluctuationReport(
        n_grid=n_grid,
        residual=res,
        smooth=smooth,
        ratio=ratio,
        window=window,
        summary=summary,
    )
