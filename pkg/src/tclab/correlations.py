"""Dicke mixtures and the atomic quantum-correlation measures.

The reduced atomic ground state is always diagonal in the Dicke basis,
so every measure here is computed from the M+1 weights alone: purity,
the correlation-matrix eigenvalues, the correlation distance (QCD) and
its rescaled variant, and the pure-state entanglement distance (ED).
The general-definition computation on full 2^M density matrices lives
in tclab.oracle and is used only for cross-checks.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from . import spectral
from .model import ModelFamily
from .spectral import SectorEigenpair

__all__ = [
    "DickeMixture",
    "CorrelationReport",
    "reduce_to_dicke_mixture",
    "dicke_state_vector",
    "pauli_dicke_element",
    "a_matrix_eigenvalues",
    "purity",
    "qcd",
    "rescaled_qcd",
    "naive_qcd",
    "ed_pure",
    "ed_pure_dicke",
    "correlation_report",
    "ground_mixture",
    "qcd_crossover",
]

_NEG_QCD_GUARD = -1e-14


@dataclass(frozen=True)
class DickeMixture:
    """Atomic density matrix diagonal in the Dicke basis.

    weights[n] is the probability of the n-excitation Dicke state; the
    weights must be nonnegative and sum to 1 within 1e-12.
    """

    M: int
    weights: np.ndarray

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=np.float64)
        if w.shape != (self.M + 1,):
            raise ValueError(f"weights must have length M+1={self.M + 1}, got shape {w.shape}")
        if np.any(w < -1e-12):
            raise ValueError(f"negative weight: min={w.min()}")
        total = w.sum()
        if abs(total - 1.0) > 1e-12:
            raise ValueError(f"weights must sum to 1 within 1e-12, got {total}")
        w = np.clip(w, 0.0, None)
        w.setflags(write=False)
        object.__setattr__(self, "weights", w)

    @classmethod
    def pure(cls, M: int, n: int) -> "DickeMixture":
        """The single Dicke state with n excited atoms."""
        if not 0 <= n <= M:
            raise ValueError(f"need 0 <= n <= M, got n={n}, M={M}")
        w = np.zeros(M + 1)
        w[n] = 1.0
        return cls(M, w)


@dataclass(frozen=True)
class CorrelationReport:
    """Correlation measures of one Dicke mixture."""

    purity: float
    lambda12: float
    lambda3: float
    qcd: float
    rescaled_qcd: float


def reduce_to_dicke_mixture(eigenpair: SectorEigenpair, M: int) -> DickeMixture:
    """Trace out the photons: p_n = a_n^2 (the reduction is exactly diagonal
    because the photon number tags each atomic branch)."""
    a = np.asarray(eigenpair.amplitudes)
    if a.ndim != 1 or len(a) > M + 1:
        raise ValueError(f"amplitude vector of length {len(a)} does not fit M={M}")
    w = np.zeros(M + 1)
    w[: len(a)] = a * a
    return DickeMixture(M, w)


def dicke_state_vector(M: int, n: int) -> np.ndarray:
    """The n-excitation Dicke state in the 2^M computational basis.

    Qubit mu maps to bit mu of the basis index (bit set = excited).
    """
    if not 0 <= n <= M:
        raise ValueError(f"need 0 <= n <= M, got n={n}, M={M}")
    v = np.zeros(2**M)
    for pos in itertools.combinations(range(M), n):
        v[sum(1 << p for p in pos)] = 1.0
    return v / math.sqrt(math.comb(M, n))


def pauli_dicke_element(M: int, n: int, nprime: int, axis: int) -> complex:
    """Single-qubit Pauli matrix element <D_n| sigma_axis |D_n'> (any qubit)."""
    if not (0 <= n <= M and 0 <= nprime <= M):
        raise ValueError(f"Dicke indices out of range for M={M}: n={n}, nprime={nprime}")
    if axis not in (1, 2, 3):
        raise ValueError(f"axis must be 1, 2 or 3, got {axis}")
    if axis == 3:
        return complex(2 * n / M - 1) if n == nprime else 0j
    up = math.sqrt(((M - n) / M) * ((n + 1) / M)) if n == nprime - 1 else 0.0
    down = math.sqrt(((M - n + 1) / M) * (n / M)) if n == nprime + 1 else 0.0
    if axis == 1:
        return complex(up + down)
    return 1j * up - 1j * down


def _lambda_pair(w: np.ndarray, M: int) -> tuple[float, float]:
    n = np.arange(M)
    lambda12 = 2.0 * float(np.sum(w[:-1] * w[1:] * ((M - n) / M) * ((n + 1) / M)))
    nn = np.arange(M + 1)
    lambda3 = float(np.sum(w**2 * (2 * nn / M - 1) ** 2))
    return lambda12, lambda3


def a_matrix_eigenvalues(mix: DickeMixture, weight_mode: str = "linear") -> tuple[float, float]:
    """Eigenvalues (lambda12, lambda3) of the correlation matrix.

    For Dicke mixtures the matrix is diagonal with the doubly degenerate
    pattern (lambda12, lambda12, lambda3). weight_mode="sqrt" substitutes
    sqrt(p_n) for p_n throughout (the square-root-state variant).
    """
    if weight_mode == "linear":
        w = mix.weights
    elif weight_mode == "sqrt":
        w = np.sqrt(mix.weights)
    else:
        raise ValueError(f"weight_mode must be 'linear' or 'sqrt', got {weight_mode!r}")
    return _lambda_pair(w, mix.M)


def purity(mix: DickeMixture) -> float:
    return float(np.sum(mix.weights**2))


def qcd(mix: DickeMixture) -> float:
    """Quantum correlation distance per qubit: purity minus the largest
    correlation-matrix eigenvalue."""
    lambda12, lambda3 = a_matrix_eigenvalues(mix)
    value = purity(mix) - max(lambda12, lambda3)
    if value < 0:
        if value < _NEG_QCD_GUARD:
            raise RuntimeError(f"qcd evaluated to {value}, below the -1e-14 rounding guard")
        value = 0.0
    return value


def rescaled_qcd(mix: DickeMixture) -> float:
    """QCD of the square-root state; fixes the purity scaling of the QCD."""
    lambda12, lambda3 = a_matrix_eigenvalues(mix, weight_mode="sqrt")
    value = 1.0 - max(lambda12, lambda3)
    if value < 0:
        if value < _NEG_QCD_GUARD:
            raise RuntimeError(f"rescaled qcd evaluated to {value}, below the rounding guard")
        value = 0.0
    return value


def naive_qcd(mix: DickeMixture) -> float:
    """QCD divided by the purity: the naive rescaling, kept for comparison
    plots only."""
    return qcd(mix) / purity(mix)


def ed_pure(bloch_vectors) -> float:
    """Entanglement distance of a pure state from its single-qubit Bloch
    vectors: one minus the mean squared Bloch length."""
    b = np.asarray(bloch_vectors, dtype=np.float64)
    if b.ndim != 2 or b.shape[1] != 3:
        raise ValueError(f"expected an (M, 3) array of Bloch vectors, got shape {b.shape}")
    norms2 = np.sum(b * b, axis=1)
    if np.any(norms2 > 1.0 + 1e-9):
        raise ValueError(f"Bloch vector longer than 1: max |b|^2 = {norms2.max()}")
    return 1.0 - float(np.mean(norms2))


def ed_pure_dicke(M: int, n: int) -> float:
    """ED of the n-excitation Dicke state: 4 (n/M) (1 - n/M)."""
    if not 0 <= n <= M:
        raise ValueError(f"need 0 <= n <= M, got n={n}, M={M}")
    return 4.0 * (n / M) * (1.0 - n / M)


def correlation_report(mix: DickeMixture) -> CorrelationReport:
    lambda12, lambda3 = a_matrix_eigenvalues(mix)
    return CorrelationReport(purity(mix), lambda12, lambda3, qcd(mix), rescaled_qcd(mix))


def ground_mixture(family: ModelFamily, g: float, k_max: int | None = None) -> DickeMixture:
    """Reduced atomic state of the global ground state at coupling g."""
    gs = spectral.global_ground(family.at(g), k_max)
    return reduce_to_dicke_mixture(gs.eigenpair, family.M)


def qcd_crossover(
    family: ModelFamily,
    bracket: tuple[float, float] = (1.0, 2.0),
    weight_mode: str = "linear",
    tol: float = 1e-8,
) -> float:
    """Coupling where lambda12 overtakes lambda3 along the ground-state path.

    This is the peaked discontinuity of the (linear-mode) QCD; the sqrt
    mode locates the corresponding peak of the rescaled measure, below
    which the rescaled QCD equals the weight-averaged Dicke ED.
    """

    def f(g: float) -> float:
        mix = ground_mixture(family, g)
        lambda12, lambda3 = a_matrix_eigenvalues(mix, weight_mode)
        return lambda12 - lambda3

    lo, hi = bracket
    if not lo < hi:
        raise ValueError(f"invalid bracket {bracket!r}")
    flo, fhi = f(lo), f(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if flo * fhi > 0:
        raise RuntimeError(
            f"no eigenvalue crossover in bracket {bracket!r}: f(lo)={flo:.3e}, f(hi)={fhi:.3e}"
        )
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if fm == 0.0:
            return mid
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi, fhi = mid, fm
    return 0.5 * (lo + hi)
