"""Deterministic test-signal generators.

Three families:

* ``gaussian-packet`` -- modulated Gaussians on a line grid.  Smooth,
  decaying, and (for the default parameter ranges) spectrally concentrated
  well inside the Nyquist band, so dilation by moderate factors stays inside
  the aliasing guard.
* ``random-bandlimited`` -- noise with spectrum confined to the central half
  of the frequency range (hard cutoff plus a Gaussian envelope) and zero
  mean/Nyquist bins.  No spatial decay is implied.
* ``trig-poly`` -- circle signals with random coefficients up to a given
  degree.

All families are deterministic for a fixed seed and are normalised to a
target norm drawn from [0.7, 1.5] (within the guaranteed [0.5, 2] band).
"""

from __future__ import annotations

import numpy as np

from .signals import CircleSignal, Grid1D, LineSignal, dft, idft, norm

__all__ = ["make_probes"]

_EDGE_TOL = 1e-8
_BAND_TOL = 1e-8


def _range_pair(value, name):
    if np.isscalar(value):
        return float(value), float(value)
    lo, hi = value
    if not (np.isfinite(lo) and np.isfinite(hi) and lo <= hi):
        raise ValueError(f"degenerate {name} range: {value!r}")
    return float(lo), float(hi)


def _check_line_guards(sig: LineSignal, kind: str):
    v = np.abs(sig.values)
    peak = v.max()
    if peak == 0.0:
        raise ValueError(f"{kind} probe degenerated to zero")
    if max(v[0], v[-1]) > _EDGE_TOL * peak:
        raise ValueError(
            f"degenerate {kind} params: probe does not decay at the grid edges "
            f"(edge/peak = {max(v[0], v[-1]) / peak:.2e})"
        )
    s = dft(sig).values
    ks = sig.grid.signed_indices()
    energy = np.abs(s) ** 2
    outer = energy[np.abs(ks) > sig.grid.n // 4].sum()
    if outer > _BAND_TOL * energy.sum():
        raise ValueError(
            f"degenerate {kind} params: spectral mass outside the central half "
            f"of the band (fraction {outer / energy.sum():.2e})"
        )


def _gaussian_packets(grid, rng, count, width, center, modulation, real):
    w_lo, w_hi = _range_pair(width, "width")
    c_lo, c_hi = _range_pair(center, "center")
    m_lo, m_hi = _range_pair(modulation, "modulation")
    if w_lo <= 0:
        raise ValueError("widths must be positive")
    x = grid.positions()
    out = []
    for _ in range(count):
        w = rng.uniform(w_lo, w_hi)
        c = rng.uniform(c_lo, c_hi)
        # modulation range is a magnitude; the carrier sign is drawn separately
        nu = rng.uniform(m_lo, m_hi)
        if m_lo >= 0:
            nu *= rng.choice([-1.0, 1.0])
        env = np.exp(-((x - c) ** 2) / (2.0 * w * w))
        vals = env * np.cos(nu * (x - c)) if real else env * np.exp(1j * nu * x)
        sig = LineSignal(grid, vals)
        target = rng.uniform(0.7, 1.5)
        sig = sig.with_values(sig.values * (target / norm(sig)))
        _check_line_guards(sig, "gaussian-packet")
        out.append(sig)
    return out


def _random_bandlimited(grid, rng, count, band_fraction):
    if not (0 < band_fraction <= 0.5):
        raise ValueError("band_fraction must lie in (0, 0.5]")
    ks = grid.signed_indices()
    n = grid.n
    cutoff = band_fraction * (n // 2)
    sigma = max(cutoff / 4.0, 1.0)
    out = []
    for _ in range(count):
        spec = rng.normal(size=n) + 1j * rng.normal(size=n)
        spec *= np.exp(-((ks / sigma) ** 2) / 2.0)
        spec[np.abs(ks) > cutoff] = 0.0
        spec[0] = 0.0
        if n % 2 == 0:
            spec[n // 2] = 0.0
        sig = idft(dft(LineSignal(grid, np.zeros(n))).with_values(spec))
        target = rng.uniform(0.7, 1.5)
        sig = sig.with_values(sig.values * (target / norm(sig)))
        out.append(sig)
    return out


def _trig_polys(K, rng, count, degree, real):
    if degree > K:
        raise ValueError(f"degree {degree} exceeds truncation K={K}")
    if degree < 0:
        raise ValueError("degree must be non-negative")
    ks = np.arange(-K, K + 1)
    out = []
    for _ in range(count):
        c = rng.normal(size=2 * K + 1) + 1j * rng.normal(size=2 * K + 1)
        c[np.abs(ks) > degree] = 0.0
        if real:
            c = 0.5 * (c + np.conj(c[::-1]))
        sig = CircleSignal(c)
        target = rng.uniform(0.7, 1.5)
        sig = sig.with_coeffs(sig.coeffs * (target / norm(sig)))
        out.append(sig)
    return out


def make_probes(kind, *, seed, count, grid: Grid1D | None = None, K: int | None = None, **params):
    """Build a deterministic list of probe signals.

    Parameters depend on the kind: gaussian-packet takes ``width``, ``center``
    and ``modulation`` (scalars or (lo, hi) ranges, modulation taken as a
    magnitude range with random sign, plus ``real=True`` for cosine packets);
    random-bandlimited takes ``band_fraction``; trig-poly takes ``degree`` and
    ``real``.
    """
    if count < 1:
        raise ValueError("count must be at least 1")
    rng = np.random.default_rng(seed)
    if kind == "gaussian-packet":
        if grid is None:
            raise ValueError("gaussian-packet probes need a grid")
        return _gaussian_packets(
            grid,
            rng,
            count,
            params.pop("width", (1.0, 1.5)),
            params.pop("center", (-3.0, 3.0)),
            params.pop("modulation", (3.5, 6.0)),
            params.pop("real", False),
        )
    if kind == "random-bandlimited":
        if grid is None:
            raise ValueError("random-bandlimited probes need a grid")
        return _random_bandlimited(grid, rng, count, params.pop("band_fraction", 0.5))
    if kind == "trig-poly":
        if K is None:
            raise ValueError("trig-poly probes need a truncation degree K")
        return _trig_polys(K, rng, count, params.pop("degree", K), params.pop("real", False))
    raise ValueError(f"unknown probe kind {kind!r}")
