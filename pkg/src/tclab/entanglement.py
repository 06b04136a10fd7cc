"""Pairwise entanglement, separability verdict and total-entanglement bounds.

For permutation-symmetric mixtures every qubit pair is equivalent, so
the total two-tangle per qubit reduces to (M-1) times one squared
concurrence. The separability verdict uses the positivity of the
partial transpose of half the qubits on the dense 2^M expansion, which
is decisive for Dicke mixtures.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .correlations import DickeMixture, dicke_state_vector, rescaled_qcd

__all__ = [
    "PairState",
    "PPTResult",
    "EntanglementReport",
    "PPT_M_CAP",
    "pair_reduction",
    "concurrence",
    "total_two_tangle",
    "ppt_check",
    "ppt_entangled",
    "entanglement_bounds",
    "entanglement_report",
]

PPT_M_CAP = 12
_PPT_TOL = 1e-10

_SIGMA_YY = np.array(
    [
        [0.0, 0.0, 0.0, -1.0],
        [0.0, 0.0, 1.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
        [-1.0, 0.0, 0.0, 0.0],
    ]
)


@dataclass(frozen=True)
class PairState:
    """Two-qubit reduction of a Dicke mixture, in the {ee, eg, ge, gg} basis."""

    matrix: np.ndarray

    def __post_init__(self):
        rho = np.asarray(self.matrix, dtype=np.float64)
        if rho.shape != (4, 4):
            raise ValueError(f"pair state must be 4x4, got {rho.shape}")
        if not np.allclose(rho, rho.T, atol=1e-12):
            raise ValueError("pair state must be symmetric")
        if abs(np.trace(rho) - 1.0) > 1e-12:
            raise ValueError(f"pair state trace {np.trace(rho)} != 1")
        if np.linalg.eigvalsh(rho)[0] < -1e-12:
            raise ValueError("pair state is not positive semidefinite")
        rho.setflags(write=False)
        object.__setattr__(self, "matrix", rho)


@dataclass(frozen=True)
class PPTResult:
    entangled: bool
    min_eigenvalue: float
    marginal: bool


@dataclass(frozen=True)
class EntanglementReport:
    concurrence: float
    tau_tot: float
    ppt_entangled: bool
    lower_bound: float
    upper_bound: float


def pair_reduction(mix: DickeMixture) -> PairState:
    """Reduced state of any qubit pair (all pairs are equal by symmetry).

    Populations and the single eg<->ge coherence follow from counting
    excitation placements among the other M-2 qubits.
    """
    M = mix.M
    if M < 2:
        raise ValueError(f"pair reduction needs M >= 2, got M={M}")
    p = mix.weights
    n = np.arange(M + 1)
    norm = M * (M - 1)
    ee = float(np.sum(p * n * (n - 1)) / norm)
    gg = float(np.sum(p * (M - n) * (M - n - 1)) / norm)
    y = float(np.sum(p * n * (M - n)) / norm)
    rho = np.array(
        [
            [ee, 0.0, 0.0, 0.0],
            [0.0, y, y, 0.0],
            [0.0, y, y, 0.0],
            [0.0, 0.0, 0.0, gg],
        ]
    )
    return PairState(rho)


def _sqrtm_psd4(rho: np.ndarray) -> np.ndarray:
    w, v = np.linalg.eigh(rho)
    w[w < 100 * np.finfo(float).eps * max(w[-1], 0.0)] = 0.0
    return (v * np.sqrt(w)) @ v.conj().T


def concurrence(pair: PairState) -> float:
    """Wootters concurrence of a two-qubit state.

    The square roots of the spin-flip eigenvalues are computed as the
    singular values of sqrt(rho) (sy x sy) sqrt(rho)*, which avoids the
    1e-8 noise floor that taking sqrt of near-zero eigenvalues of
    rho (sy x sy) rho* (sy x sy) would introduce.
    """
    a = _sqrtm_psd4(pair.matrix)
    z = a @ _SIGMA_YY @ a.conj()
    roots = np.linalg.svd(z, compute_uv=False)
    return max(0.0, roots[0] - roots[1] - roots[2] - roots[3])


def total_two_tangle(mix: DickeMixture) -> float:
    """Total two-tangle per qubit: (M-1) times the squared pair concurrence."""
    return (mix.M - 1) * concurrence(pair_reduction(mix)) ** 2


def _partial_transpose_half(rho: np.ndarray, M: int) -> np.ndarray:
    d_a = 2 ** (M // 2)
    d_b = rho.shape[0] // d_a
    return (
        rho.reshape(d_a, d_b, d_a, d_b).transpose(2, 1, 0, 3).reshape(rho.shape)
    )


def ppt_check(mix: DickeMixture, tol: float = _PPT_TOL) -> PPTResult:
    """Partial-transpose test on the dense 2^M expansion.

    Entangled iff the minimum eigenvalue of the partially transposed
    matrix is below -tol; values in [-tol, 0) are reported separable
    with the marginal flag set.
    """
    M = mix.M
    if M > PPT_M_CAP:
        raise ValueError(f"PPT expansion capped at M <= {PPT_M_CAP}, got M={M}")
    rho = np.zeros((2**M, 2**M))
    for n in range(M + 1):
        if mix.weights[n] > 0.0:
            d = dicke_state_vector(M, n)
            rho += mix.weights[n] * np.outer(d, d)
    min_eig = float(np.linalg.eigvalsh(_partial_transpose_half(rho, M))[0])
    entangled = min_eig < -tol
    return PPTResult(entangled, min_eig, (not entangled) and min_eig < 0.0)


def ppt_entangled(mix: DickeMixture) -> bool:
    return ppt_check(mix).entangled


def entanglement_bounds(mix: DickeMixture) -> tuple[float, float]:
    """(lower, upper) bounds on the total entanglement: the monogamy bound
    from the two-tangle and the rescaled QCD roof."""
    return total_two_tangle(mix), rescaled_qcd(mix)


def entanglement_report(mix: DickeMixture) -> EntanglementReport:
    conc = concurrence(pair_reduction(mix))
    tau = (mix.M - 1) * conc**2
    return EntanglementReport(
        concurrence=conc,
        tau_tot=tau,
        ppt_entangled=ppt_entangled(mix),
        lower_bound=tau,
        upper_bound=rescaled_qcd(mix),
    )
