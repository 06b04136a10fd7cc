"""Model parameters and excitation-sector Hamiltonians.

The Hamiltonian conserves the total excitation number k (photons plus
excited atoms), so it splits into real symmetric tridiagonal blocks of
dimension min(k, M) + 1. Everything downstream works on those blocks.

Basis convention used throughout the package: within sector k the index
n counts excited atoms, ascending, n = 0 .. min(k, M); the n-th basis
vector carries k - n photons and S_3 eigenvalue n - M/2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "ModelParams",
    "ModelFamily",
    "SectorBasis",
    "SectorHamiltonian",
    "make_params",
    "sector_dim",
    "build_sector_hamiltonian",
]


@dataclass(frozen=True)
class ModelParams:
    """Physical couplings plus the derived dimensionless parameters.

    Attributes
    ----------
    omega_c : float
        Photon (cavity) frequency, > 0.
    omega_z : float
        Atomic energy splitting, > 0.
    lam : float
        Photon-atom coupling strength, >= 0.
    M : int
        Number of atoms, >= 1.
    eta : float
        omega_z / omega_c.
    g : float
        lam / sqrt(omega_c * omega_z); the transition sits at g = 1.
    delta : float
        Detuning omega_z - omega_c.
    """

    omega_c: float
    omega_z: float
    lam: float
    M: int
    eta: float = field(init=False)
    g: float = field(init=False)
    delta: float = field(init=False)

    def __post_init__(self):
        if not self.omega_c > 0:
            raise ValueError(f"omega_c must be > 0, got {self.omega_c}")
        if not self.omega_z > 0:
            raise ValueError(f"omega_z must be > 0, got {self.omega_z}")
        if self.lam < 0:
            raise ValueError(f"lam must be >= 0, got {self.lam}")
        if int(self.M) != self.M or self.M < 1:
            raise ValueError(f"M must be a positive integer, got {self.M}")
        object.__setattr__(self, "M", int(self.M))
        object.__setattr__(self, "eta", self.omega_z / self.omega_c)
        object.__setattr__(self, "g", self.lam / math.sqrt(self.omega_c * self.omega_z))
        object.__setattr__(self, "delta", self.omega_z - self.omega_c)

    @classmethod
    def from_dimensionless(cls, omega_c: float, eta: float, g: float, M: int) -> "ModelParams":
        """Build params from (omega_c, eta, g) instead of raw couplings."""
        omega_z = eta * omega_c
        lam = g * math.sqrt(omega_c * omega_z)
        return cls(omega_c, omega_z, lam, M)


def make_params(omega_c: float, omega_z: float, lam: float, M: int) -> ModelParams:
    """Validate couplings and populate the derived quantities."""
    return ModelParams(omega_c, omega_z, lam, M)


@dataclass(frozen=True)
class ModelFamily:
    """A g-parametrized family at fixed (omega_c, eta, M).

    Crossing searches and sweeps vary g with everything else held fixed;
    this is the "params without g" handle they take.
    """

    omega_c: float
    eta: float
    M: int

    def __post_init__(self):
        if not self.omega_c > 0:
            raise ValueError(f"omega_c must be > 0, got {self.omega_c}")
        if not self.eta > 0:
            raise ValueError(f"eta must be > 0, got {self.eta}")
        if int(self.M) != self.M or self.M < 1:
            raise ValueError(f"M must be a positive integer, got {self.M}")
        object.__setattr__(self, "M", int(self.M))

    def at(self, g: float) -> ModelParams:
        return ModelParams.from_dimensionless(self.omega_c, self.eta, g, self.M)


def sector_dim(k: int, M: int) -> int:
    """Dimension of the excitation-k subspace: min(k+1, M+1)."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    if M < 1:
        raise ValueError(f"M must be >= 1, got {M}")
    return min(k + 1, M + 1)


@dataclass(frozen=True)
class SectorBasis:
    """Ordered basis of the excitation-k subspace.

    Index n = number of excited atoms, ascending; the n-th vector is
    |k - n photons, M_3 = n - M/2>.
    """

    k: int
    M: int

    def __post_init__(self):
        if self.k < 0:
            raise ValueError(f"k must be >= 0, got {self.k}")
        if self.M < 1:
            raise ValueError(f"M must be >= 1, got {self.M}")

    @property
    def dim(self) -> int:
        return sector_dim(self.k, self.M)

    def photon_numbers(self) -> np.ndarray:
        """Photon count k - n for each basis index n."""
        return self.k - np.arange(self.dim)


@dataclass(frozen=True)
class SectorHamiltonian:
    """Real symmetric tridiagonal block of H on one excitation sector."""

    basis: SectorBasis
    diag: np.ndarray
    offdiag: np.ndarray

    def as_dense(self) -> np.ndarray:
        h = np.diag(self.diag)
        if len(self.offdiag):
            h += np.diag(self.offdiag, 1) + np.diag(self.offdiag, -1)
        return h


def build_sector_hamiltonian(params: ModelParams, k: int) -> SectorHamiltonian:
    """Assemble the tridiagonal H block for total excitation number k.

    diag[n]    = omega_c (k - M/2) + delta (n - M/2)
    offdiag[n] = -(lam/sqrt(M)) sqrt((k-n)(M-n)(n+1)),  coupling n <-> n+1

    The products under the square roots are exact integers; they are
    formed before any float conversion.
    """
    basis = SectorBasis(k, params.M)
    M = params.M
    dim = basis.dim
    n = np.arange(dim, dtype=np.float64)
    diag = params.omega_c * (k - 0.5 * M) + params.delta * (0.5 * (2.0 * n - M))
    prod = (k - n[:-1]) * (M - n[:-1]) * (n[:-1] + 1.0)
    offdiag = -(params.lam / math.sqrt(M)) * np.sqrt(prod)
    diag.setflags(write=False)
    offdiag.setflags(write=False)
    return SectorHamiltonian(basis, diag, offdiag)
