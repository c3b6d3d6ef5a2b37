"""Complex field snapshots on the spectral grid and their binary snapshot format.

Snapshot file layout ("GLSU"): magic bytes, u32 version, u32 n, f64 epsilon,
f64 time, then n*n row-major little-endian (re, im) f64 pairs.
"""

from __future__ import annotations

import struct
import warnings
from dataclasses import dataclass, field

import numpy as np

from .errors import CacheFormatError, InvalidArgumentError
from .torus import GridSpec, integer_wavenumbers

GLSU_MAGIC = b"GLSU"
GLSU_VERSION = 1


@dataclass(frozen=True)
class FieldGrid:
    """N x N complex samples of u: T^2 -> C with grid metadata.

    epsilon is the healing-length parameter; None for fields that carry no
    core scale (e.g. the canonical harmonic map). Values are treated as
    immutable once constructed.
    """

    grid: GridSpec
    values: np.ndarray
    epsilon: float | None = None
    time: float = 0.0

    def __post_init__(self):
        v = np.asarray(self.values)
        if v.shape != (self.grid.n, self.grid.n):
            raise InvalidArgumentError(
                f"values shape {v.shape} does not match grid n={self.grid.n}"
            )
        if not np.all(np.isfinite(v.view(float))):
            raise InvalidArgumentError("field values must be finite")
        if self.epsilon is not None:
            if not (self.epsilon > 0):
                raise InvalidArgumentError("epsilon must be positive")
            h = self.grid.h
            if h > self.epsilon / 2:
                warnings.warn(
                    f"grid h={h:.3g} does not resolve the core (h > epsilon/2 with "
                    f"epsilon={self.epsilon:.3g})",
                    stacklevel=2,
                )
            elif h > self.epsilon / 4:
                warnings.warn(
                    f"grid h={h:.3g} is marginal for epsilon={self.epsilon:.3g} "
                    "(h <= epsilon/4 recommended)",
                    stacklevel=2,
                )

    def copy_with(self, *, values=None, time=None) -> "FieldGrid":
        return FieldGrid(
            grid=self.grid,
            values=self.values.copy() if values is None else values,
            epsilon=self.epsilon,
            time=self.time if time is None else time,
        )


def spectral_gradient(values: np.ndarray):
    """(d1 u, d2 u) by Fourier differentiation; returns complex arrays."""
    n = values.shape[0]
    k = integer_wavenumbers(n).astype(float)
    uhat = np.fft.fft2(values)
    ik1 = (2j * np.pi) * k[:, None]
    ik2 = (2j * np.pi) * k[None, :]
    ux = np.fft.ifft2(ik1 * uhat)
    uy = np.fft.ifft2(ik2 * uhat)
    return ux, uy


def spectral_gradient_real(values: np.ndarray):
    """Gradient of a real scalar field; returns real arrays."""
    ux, uy = spectral_gradient(values.astype(complex))
    return ux.real, uy.real


def spectral_divergence(vx: np.ndarray, vy: np.ndarray) -> np.ndarray:
    """div v for a real vector field sampled on the grid."""
    gx, _ = spectral_gradient(vx.astype(complex))
    _, gy = spectral_gradient(vy.astype(complex))
    return gx.real + gy.real


def spectral_curl(vx: np.ndarray, vy: np.ndarray) -> np.ndarray:
    """curl v = d1 v2 - d2 v1 for a real vector field."""
    gx, _ = spectral_gradient(vy.astype(complex))
    _, gy = spectral_gradient(vx.astype(complex))
    return gx.real - gy.real


def grid_integral(grid: GridSpec, samples: np.ndarray):
    """Quadrature of node samples over the unit torus (exact for band-limited data)."""
    return np.sum(samples) * grid.h * grid.h


def save_field(path, fld: FieldGrid) -> None:
    n = fld.grid.n
    eps = float(fld.epsilon) if fld.epsilon is not None else float("nan")
    header = GLSU_MAGIC + struct.pack("<IIdd", GLSU_VERSION, n, eps, float(fld.time))
    data = np.empty((n, n, 2), dtype="<f8")
    data[..., 0] = fld.values.real
    data[..., 1] = fld.values.imag
    with open(path, "wb") as fh:
        fh.write(header)
        fh.write(data.tobytes())


def load_field(path) -> FieldGrid:
    with open(path, "rb") as fh:
        magic = fh.read(4)
        if magic != GLSU_MAGIC:
            raise CacheFormatError(f"bad snapshot magic {magic!r}")
        version, n = struct.unpack("<II", fh.read(8))
        if version != GLSU_VERSION:
            raise CacheFormatError(f"unsupported snapshot version {version}")
        eps, time = struct.unpack("<dd", fh.read(16))
        raw = np.frombuffer(fh.read(n * n * 2 * 8), dtype="<f8")
        if raw.size != n * n * 2:
            raise CacheFormatError("snapshot payload truncated")
    data = raw.reshape(n, n, 2)
    values = data[..., 0] + 1j * data[..., 1]
    return FieldGrid(
        grid=GridSpec(n),
        values=values,
        epsilon=None if np.isnan(eps) else eps,
        time=time,
    )
