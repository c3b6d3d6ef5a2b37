"""Geometry of the flat unit torus T^2 = R^2/Z^2 and the uniform spectral grid.

Conventions pinned here and used by every other module:

* the torus has unit area (period 1 in both directions),
* Fourier basis e^{2 pi i k.x} with integer wavenumbers k, so the Laplacian
  symbol is -4 pi^2 |k|^2,
* the rotation matrix J has J12 = 1, J21 = -1, i.e. J v = (v2, -v1), and
  complex multiplication by i acts on real pairs as iu = -J u,
* for a scalar phi, curl phi = (d2 phi, -d1 phi); for a vector u,
  curl u = d1 u2 - d2 u1 and u x v = u1 v2 - u2 v1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import InvalidArgumentError

# J v = (v2, -v1); J^T = -J and J^2 = -Id.
J_MATRIX = np.array([[0.0, 1.0], [-1.0, 0.0]])


def apply_j(v):
    """Apply the rotation matrix J to a vector or an (..., 2) array."""
    v = np.asarray(v, dtype=float)
    return np.stack((v[..., 1], -v[..., 0]), axis=-1)


def cross2(u, v):
    """u x v = u1 v2 - u2 v1 for (..., 2) arrays."""
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    return u[..., 0] * v[..., 1] - u[..., 1] * v[..., 0]


@dataclass(frozen=True)
class TorusPoint:
    """A point on T^2 with coordinates reduced into [0, 1)."""

    x1: float
    x2: float

    def __post_init__(self):
        if not (np.isfinite(self.x1) and np.isfinite(self.x2)):
            raise InvalidArgumentError("torus point coordinates must be finite")
        if not (0.0 <= self.x1 < 1.0 and 0.0 <= self.x2 < 1.0):
            raise InvalidArgumentError(
                f"coordinates ({self.x1}, {self.x2}) not reduced into [0,1); use wrap()"
            )

    def as_array(self) -> np.ndarray:
        return np.array([self.x1, self.x2])


@dataclass(frozen=True)
class TorusVector:
    """A minimal-image displacement; each component lies in [-1/2, 1/2)."""

    v1: float
    v2: float

    def __post_init__(self):
        if not (np.isfinite(self.v1) and np.isfinite(self.v2)):
            raise InvalidArgumentError("torus vector components must be finite")
        if not (-0.5 <= self.v1 < 0.5 and -0.5 <= self.v2 < 0.5):
            raise InvalidArgumentError(
                f"components ({self.v1}, {self.v2}) outside [-1/2, 1/2)"
            )

    def as_array(self) -> np.ndarray:
        return np.array([self.v1, self.v2])

    def norm(self) -> float:
        return float(np.hypot(self.v1, self.v2))


def wrap_array(x):
    """Reduce raw coordinates mod 1 into [0, 1); works on any float array."""
    x = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(x)):
        raise InvalidArgumentError("non-finite coordinates cannot be wrapped")
    return x - np.floor(x)


def wrap(p) -> TorusPoint:
    """Reduce a raw coordinate pair into the fundamental domain [0,1)^2."""
    if isinstance(p, TorusPoint):
        return p
    arr = wrap_array(np.asarray(p, dtype=float).reshape(2))
    return TorusPoint(float(arr[0]), float(arr[1]))


def min_image_array(d):
    """Reduce displacement components into [-1/2, 1/2); half-period ties go to -1/2."""
    d = np.asarray(d, dtype=float)
    return d - np.floor(d + 0.5)


def min_image_diff(p, q) -> TorusVector:
    """Minimal-image displacement p - q."""
    pa = p.as_array() if isinstance(p, TorusPoint) else np.asarray(p, dtype=float)
    qa = q.as_array() if isinstance(q, TorusPoint) else np.asarray(q, dtype=float)
    d = min_image_array(pa - qa)
    return TorusVector(float(d[0]), float(d[1]))


def geodesic_dist(p, q) -> float:
    """Geodesic (minimal-image Euclidean) distance on T^2; bounded by sqrt(2)/2."""
    pa = p.as_array() if isinstance(p, TorusPoint) else np.asarray(p, dtype=float)
    qa = q.as_array() if isinstance(q, TorusPoint) else np.asarray(q, dtype=float)
    d = min_image_array(pa - qa)
    return float(np.hypot(d[..., 0], d[..., 1]))


def geodesic_dist_array(p, q):
    """Vectorized geodesic distance for (..., 2) arrays."""
    d = min_image_array(np.asarray(p, dtype=float) - np.asarray(q, dtype=float))
    return np.hypot(d[..., 0], d[..., 1])


def _is_power_of_two(n: int) -> bool:
    return n > 0 and (n & (n - 1)) == 0


@dataclass(frozen=True)
class GridSpec:
    """Uniform n x n spectral grid on the unit torus, n a power of two >= 16.

    Nodes sit at x = (i/n, j/n); array index [i, j] corresponds to
    x1 = i*h, x2 = j*h with h = 1/n exactly.
    """

    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 16 or not _is_power_of_two(self.n):
            raise InvalidArgumentError(f"grid size n={self.n} must be a power of two >= 16")

    @property
    def h(self) -> float:
        return 1.0 / self.n

    def nodes(self) -> np.ndarray:
        """1-D node coordinates i*h, exact binary floats."""
        return np.arange(self.n) * self.h

    def meshgrid(self):
        x = self.nodes()
        return np.meshgrid(x, x, indexing="ij")

    def wavenumbers(self) -> np.ndarray:
        """Integer wavenumbers in FFT order, k in {-n/2, ..., n/2 - 1}."""
        return integer_wavenumbers(self.n)


@lru_cache(maxsize=32)
def integer_wavenumbers(n: int) -> np.ndarray:
    return (np.fft.fftfreq(n) * n).astype(np.int64)


@lru_cache(maxsize=32)
def ksq_grid(n: int) -> np.ndarray:
    """|k|^2 on the 2-D FFT grid (integer wavenumbers)."""
    k = integer_wavenumbers(n).astype(float)
    k1, k2 = np.meshgrid(k, k, indexing="ij")
    return k1 * k1 + k2 * k2


@lru_cache(maxsize=32)
def dealias_mask(n: int) -> np.ndarray:
    """2/3-rule mask: True on modes kept after truncation (max |k| < n/3)."""
    k = np.abs(integer_wavenumbers(n))
    k1, k2 = np.meshgrid(k, k, indexing="ij")
    return np.maximum(k1, k2) < n / 3.0
