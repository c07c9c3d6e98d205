"""Power-law and plateau fits for scaling series."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class FitResult:
    """Outcome of a scaling fit.

    For power laws, values are modeled as prefactor * ell^(-exponent); for
    plateaus the exponent is 0 and ``prefactor`` is the plateau level.
    ``residual`` is the rms misfit (log space for power laws).
    """

    exponent: float
    prefactor: float
    window: tuple
    residual: float
    method: str
    exponent_err: float = 0.0

    def __post_init__(self):
        if not math.isfinite(self.residual):
            raise ValueError("fit residual must be finite")


def _window_slice(series, window):
    lo, hi = float(window[0]), float(window[1])
    ell = np.array(series.ell)
    vals = np.array(series.values)
    errs = np.array(series.errors)
    mask = (ell >= lo - 1e-12) & (ell <= hi + 1e-12)
    if mask.sum() < 4:
        raise ValueError("need at least 4 points inside the fit window")
    return ell[mask], vals[mask], errs[mask], (lo, hi)


def fit_power_law(series, window):
    """Weighted least squares of log(value) against log(ell).

    Weights come from propagated standard errors when every point carries
    one; otherwise the fit is unweighted.  The reported exponent is the
    decay power p in value ~ ell^(-p).
    """
    ell, vals, errs, win = _window_slice(series, window)
    if np.any(vals <= 0):
        raise ValueError("power-law fit requires positive values")
    x = np.log(ell)
    y = np.log(vals)
    if np.all(errs > 0):
        w = (vals / errs) ** 2  # sigma_log = err / value
    else:
        w = np.ones_like(y)
    sw = w.sum()
    xm = (w * x).sum() / sw
    ym = (w * y).sum() / sw
    sxx = (w * (x - xm) ** 2).sum()
    slope = (w * (x - xm) * (y - ym)).sum() / sxx
    intercept = ym - slope * xm
    resid = y - (intercept + slope * x)
    rms = float(np.sqrt(np.mean(resid**2)))
    dof = max(len(y) - 2, 1)
    slope_err = float(np.sqrt((w * resid**2).sum() / (dof * sxx)))
    return FitResult(
        exponent=float(-slope),
        prefactor=float(np.exp(intercept)),
        window=win,
        residual=rms,
        method="least squares on log-log",
        exponent_err=slope_err,
    )


def fit_plateau(series, window):
    """Weighted mean inside the window plus a drift statistic.

    The drift is the weighted slope of value against log(ell); a genuine
    plateau keeps it within a few standard errors of zero.
    """
    ell, vals, errs, win = _window_slice(series, window)
    if np.all(errs > 0):
        w = 1.0 / errs**2
    else:
        w = np.ones_like(vals)
    sw = w.sum()
    mean = float((w * vals).sum() / sw)
    spread = float(np.sqrt((w * (vals - mean) ** 2).sum() / sw))
    x = np.log(ell)
    xm = (w * x).sum() / sw
    sxx = (w * (x - xm) ** 2).sum()
    drift = float((w * (x - xm) * (vals - mean)).sum() / sxx)
    return FitResult(
        exponent=0.0,
        prefactor=mean,
        window=win,
        residual=spread,
        method="plateau mean",
        exponent_err=abs(drift),
    )
