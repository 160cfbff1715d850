"""Sampled signals on the line and the circle, and the transforms between
sample and frequency domains.

Line signals live on a uniform grid; their spectra are calibrated so that a
bin holds (an approximation of) the continuum unitary Fourier transform at
that bin's frequency.  With that calibration the transform pair is unitary
between the weighted norms implemented by :func:`inner_product`, so isometry
statements can be asserted directly.

Circle signals are canonically two-sided Fourier coefficient vectors
``c_k, k = -K..K``; a sample-domain representation exists to host quadrature
oracles and off-grid evaluation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

_SQRT_2PI = math.sqrt(2.0 * math.pi)

__all__ = [
    "Grid1D",
    "LineSignal",
    "LineSpectrum",
    "CircleSignal",
    "CircleSamples",
    "dft",
    "idft",
    "inner_product",
    "norm",
    "circle_samples_from_coeffs",
    "circle_coeffs_from_samples",
    "evaluate_fourier_series",
    "signed_indices",
]


def _frozen_complex_array(values, expected_len=None) -> np.ndarray:
    arr = np.array(values, dtype=complex)
    if arr.ndim != 1:
        raise ValueError(f"expected a 1-d value sequence, got shape {arr.shape}")
    if expected_len is not None and arr.shape[0] != expected_len:
        raise ValueError(
            f"value length {arr.shape[0]} does not match declared length {expected_len}"
        )
    if not np.all(np.isfinite(arr.real)) or not np.all(np.isfinite(arr.imag)):
        raise ValueError("signal values must be finite (no NaN/Inf)")
    arr.setflags(write=False)
    return arr


def signed_indices(n: int) -> np.ndarray:
    """Signed bin index for each storage slot of an n-point spectrum.

    Storage uses the standard wrap-around FFT order; slot j carries signed
    index j for j <= n//2 and j-n beyond, i.e. k in [-ceil(n/2)+1, floor(n/2)].
    For even n the single shared extreme bin is reported as +n/2.
    """
    k = np.arange(n)
    k[k > n // 2] -= n
    return k


@dataclass(frozen=True)
class Grid1D:
    """Uniform grid x_j = x_min + j*dx, j = 0..n-1."""

    x_min: float
    n: int
    dx: float

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("grid needs at least two samples")
        if not (self.dx > 0.0) or not math.isfinite(self.dx):
            raise ValueError("grid spacing must be positive and finite")
        if not math.isfinite(self.x_min):
            raise ValueError("grid origin must be finite")

    @property
    def span(self) -> float:
        """Period of the implied discrete model, n*dx."""
        return self.n * self.dx

    @property
    def dxi(self) -> float:
        """Frequency spacing 2*pi/(n*dx)."""
        return 2.0 * math.pi / self.span

    def positions(self) -> np.ndarray:
        return self.x_min + self.dx * np.arange(self.n)

    def signed_indices(self) -> np.ndarray:
        return signed_indices(self.n)

    def frequencies(self) -> np.ndarray:
        """Frequencies xi_k = 2*pi*k/(n*dx) in storage (wrap-around) order."""
        return self.dxi * self.signed_indices()

    @classmethod
    def from_interval(cls, x_min: float, x_max: float, n: int) -> "Grid1D":
        """Half-open interval [x_min, x_max) sampled at n points."""
        if not x_max > x_min:
            raise ValueError("x_max must exceed x_min")
        return cls(x_min=x_min, n=n, dx=(x_max - x_min) / n)


@dataclass(frozen=True)
class LineSignal:
    """Complex samples of a finite-energy function on a :class:`Grid1D`.

    ``flags`` carries diagnostic warnings attached by producing operations
    (for example an edge-decay warning from the singular quadrature); it has
    no effect on any computation.
    """

    grid: Grid1D
    values: np.ndarray
    flags: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "values", _frozen_complex_array(self.values, self.grid.n))
        object.__setattr__(self, "flags", tuple(self.flags))

    def with_values(self, values, flags=None) -> "LineSignal":
        return LineSignal(self.grid, values, self.flags if flags is None else tuple(flags))


@dataclass(frozen=True)
class LineSpectrum:
    """Spectrum of a line signal, stored in wrap-around bin order.

    Bin j holds a sample at frequency ``grid.frequencies()[j]``; the signed
    index map is ``grid.signed_indices()`` and is part of the public contract
    (multiplier operators address bins through it).
    """

    grid: Grid1D
    values: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "values", _frozen_complex_array(self.values, self.grid.n))

    def with_values(self, values) -> "LineSpectrum":
        return LineSpectrum(self.grid, values)


@dataclass(frozen=True)
class CircleSignal:
    """Two-sided Fourier coefficient vector c_k, k = -K..K (stored in k order)."""

    coeffs: np.ndarray

    def __post_init__(self):
        arr = _frozen_complex_array(self.coeffs)
        if arr.shape[0] % 2 != 1:
            raise ValueError("coefficient vector must have odd length 2K+1")
        object.__setattr__(self, "coeffs", arr)

    @property
    def K(self) -> int:
        return (self.coeffs.shape[0] - 1) // 2

    def indices(self) -> np.ndarray:
        return np.arange(-self.K, self.K + 1)

    def coeff(self, k: int) -> complex:
        if abs(k) > self.K:
            raise ValueError(f"index {k} outside truncation [-{self.K}, {self.K}]")
        return complex(self.coeffs[k + self.K])

    @classmethod
    def from_dict(cls, entries: dict, K: int) -> "CircleSignal":
        """Build from a sparse {k: value} mapping, zero elsewhere."""
        c = np.zeros(2 * K + 1, dtype=complex)
        for k, v in entries.items():
            if abs(k) > K:
                raise ValueError(f"index {k} outside truncation K={K}")
            c[k + K] = v
        return cls(c)

    def with_coeffs(self, coeffs) -> "CircleSignal":
        return CircleSignal(coeffs)

    def padded(self, K_new: int) -> "CircleSignal":
        """Zero-pad to a larger truncation degree."""
        if K_new < self.K:
            raise ValueError("padded() cannot shrink the truncation")
        c = np.zeros(2 * K_new + 1, dtype=complex)
        c[K_new - self.K : K_new + self.K + 1] = self.coeffs
        return CircleSignal(c)


@dataclass(frozen=True)
class CircleSamples:
    """Samples at equispaced angles theta_j = 2*pi*j/n."""

    values: np.ndarray

    def __post_init__(self):
        arr = _frozen_complex_array(self.values)
        if arr.shape[0] < 1:
            raise ValueError("need at least one sample")
        object.__setattr__(self, "values", arr)

    @property
    def n(self) -> int:
        return self.values.shape[0]

    def angles(self) -> np.ndarray:
        return 2.0 * math.pi * np.arange(self.n) / self.n


def dft(f: LineSignal) -> LineSpectrum:
    """Forward transform, calibrated to the continuum unitary convention.

    Bin k approximates (1/sqrt(2 pi)) * integral f(x) exp(-i xi_k x) dx by the
    grid Riemann sum, so ``idft(dft(f)) == f`` exactly and Parseval holds
    between the weighted norms of :func:`inner_product`.
    """
    g = f.grid
    xi = g.frequencies()
    spec = (g.dx / _SQRT_2PI) * np.exp(-1j * xi * g.x_min) * np.fft.fft(f.values)
    return LineSpectrum(g, spec)


def idft(s: LineSpectrum) -> LineSignal:
    g = s.grid
    xi = g.frequencies()
    vals = np.fft.ifft(s.values * np.exp(1j * xi * g.x_min)) * (_SQRT_2PI / g.dx)
    return LineSignal(g, vals)


def _require_same_grid(a: Grid1D, b: Grid1D):
    if a != b:
        raise ValueError(f"grid mismatch: {a} vs {b}")


def inner_product(f, g) -> complex:
    """Inner product <f, g>, conjugate-linear in the second argument.

    Line signals: dx * sum f_j conj(g_j).  Line spectra: dxi-weighted sum.
    Circle samples: (1/n) sum.  Circle coefficients: plain sum.
    """
    if isinstance(f, LineSignal) and isinstance(g, LineSignal):
        _require_same_grid(f.grid, g.grid)
        return complex(f.grid.dx * np.vdot(g.values, f.values))
    if isinstance(f, LineSpectrum) and isinstance(g, LineSpectrum):
        _require_same_grid(f.grid, g.grid)
        return complex(f.grid.dxi * np.vdot(g.values, f.values))
    if isinstance(f, CircleSamples) and isinstance(g, CircleSamples):
        if f.n != g.n:
            raise ValueError(f"sample count mismatch: {f.n} vs {g.n}")
        return complex(np.vdot(g.values, f.values) / f.n)
    if isinstance(f, CircleSignal) and isinstance(g, CircleSignal):
        if f.K != g.K:
            raise ValueError(f"truncation mismatch: K={f.K} vs K={g.K}")
        return complex(np.vdot(g.coeffs, f.coeffs))
    raise ValueError(
        f"mismatched or unsupported operand types: {type(f).__name__}, {type(g).__name__}"
    )


def norm(f) -> float:
    return math.sqrt(max(inner_product(f, f).real, 0.0))


def circle_samples_from_coeffs(c: CircleSignal, n: int) -> CircleSamples:
    """Evaluate the truncated series at n equispaced angles (lossless for
    n >= 2K+1)."""
    if n < 2 * c.K + 1:
        raise ValueError(f"need n >= 2K+1 = {2 * c.K + 1} samples, got {n}")
    arr = np.zeros(n, dtype=complex)
    ks = c.indices()
    arr[ks % n] = c.coeffs
    return CircleSamples(np.fft.ifft(arr) * n)


def circle_coeffs_from_samples(s: CircleSamples, K: int) -> CircleSignal:
    """Recover coefficients up to degree K (exact when the samples come from
    a trig polynomial of degree <= K and n >= 2K+1)."""
    if s.n < 2 * K + 1:
        raise ValueError(f"need n >= 2K+1 = {2 * K + 1} samples, got {s.n}")
    F = np.fft.fft(s.values) / s.n
    ks = np.arange(-K, K + 1)
    return CircleSignal(F[ks % s.n])


def evaluate_fourier_series(c: CircleSignal, angles: np.ndarray) -> np.ndarray:
    """Evaluate sum_k c_k exp(i k theta) at arbitrary angles (exact for the
    truncated series; used by off-grid actions and quadrature oracles)."""
    angles = np.asarray(angles, dtype=float)
    return np.exp(1j * np.outer(angles, c.indices())) @ c.coeffs
