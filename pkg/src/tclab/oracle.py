"""Brute-force reference implementations.

Builds the full (truncated Fock) x (2^M qubit) Hamiltonian densely,
solves it, and computes the correlation measures straight from their
definitions on arbitrary density matrices. Slow on purpose: this is
the ground truth the fast sector/Dicke paths are checked against, and
it makes no symmetry assumptions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .asymptotics import approx_kstar
from .correlations import dicke_state_vector
from .model import ModelParams

__all__ = [
    "FullSpace",
    "DIMENSION_CAP",
    "suggested_cutoff",
    "build_full",
    "full_ground",
    "reduce_atoms_full",
    "dicke_weights_full",
    "qcd_general",
    "a_matrix_full",
    "single_qubit_operator",
]

DIMENSION_CAP = 5000

# Single-qubit basis: index 0 = ground, index 1 = excited (bit set = excited),
# so the excited state is the +1 eigenstate of sigma_3.
_PAULI = {
    1: np.array([[0.0, 1.0], [1.0, 0.0]]),
    2: np.array([[0.0, 1.0j], [-1.0j, 0.0]]),
    3: np.array([[-1.0, 0.0], [0.0, 1.0]]),
}


def single_qubit_operator(M: int, mu: int, op: np.ndarray) -> np.ndarray:
    """Embed a 2x2 operator on qubit mu into the 2^M space.

    Qubit mu maps to bit mu of the basis index, matching
    correlations.dicke_state_vector.
    """
    if not 0 <= mu < M:
        raise ValueError(f"qubit index {mu} out of range for M={M}")
    out = np.array([[1.0 + 0.0j]])
    for nu in reversed(range(M)):
        out = np.kron(out, op if nu == mu else np.eye(2))
    return out


def _collective_ops(M: int) -> tuple[np.ndarray, np.ndarray]:
    """(S_3, S_+) as dense 2^M matrices."""
    s3 = np.zeros((2**M, 2**M))
    sp = np.zeros((2**M, 2**M))
    raise_op = np.array([[0.0, 0.0], [1.0, 0.0]])  # |e><g| with bit set = excited
    for mu in range(M):
        s3 += single_qubit_operator(M, mu, _PAULI[3]).real / 2.0
        sp += single_qubit_operator(M, mu, raise_op).real
    return s3, sp


@dataclass(frozen=True)
class FullSpace:
    """Dense truncated model: H plus the conserved quantities."""

    params: ModelParams
    n_ph_max: int
    dim: int
    hamiltonian: np.ndarray
    excitation_term: np.ndarray  # omega_c (n_ph + S_3)
    symmetry_generator: np.ndarray  # the U(1) generator annihilating the vacuum


def suggested_cutoff(params: ModelParams) -> int:
    """Photon cutoff for oracle comparisons: 4x the predicted ground sector."""
    return max(math.ceil(4 * approx_kstar(params)), 12)


def build_full(params: ModelParams, n_ph_max: int) -> FullSpace:
    """Dense Hamiltonian on Fock(0..n_ph_max) x (2^M qubits)."""
    M = params.M
    dim = (n_ph_max + 1) * 2**M
    if dim > DIMENSION_CAP:
        raise ValueError(f"full-space dimension {dim} exceeds cap {DIMENSION_CAP}")
    n_ph = n_ph_max + 1
    a = np.diag(np.sqrt(np.arange(1.0, n_ph)), 1)
    num = a.T @ a
    eye_ph = np.eye(n_ph)
    s3, sp = _collective_ops(M)
    sm = sp.T
    eye_s = np.eye(2**M)

    h = (
        params.omega_c * np.kron(num, eye_s)
        + params.omega_z * np.kron(eye_ph, s3)
        - params.lam / math.sqrt(M) * (np.kron(a.T, sm) + np.kron(a, sp))
    )
    h_i = params.omega_c * (np.kron(num, eye_s) + np.kron(eye_ph, s3))
    h_ii = h - h_i
    generator = h_ii + params.delta * M / 2.0 * np.eye(dim)
    for m in (h, h_i, generator):
        m.setflags(write=False)
    return FullSpace(params, n_ph_max, dim, h, h_i, generator)


def full_ground(full: FullSpace) -> tuple[float, np.ndarray]:
    """Lowest eigenpair of the dense Hamiltonian."""
    w, v = scipy.linalg.eigh(full.hamiltonian, subset_by_index=(0, 0))
    vec = v[:, 0]
    s = vec.sum()
    if s == 0.0:
        s = vec[np.argmax(np.abs(vec))]
    if s < 0:
        vec = -vec
    return float(w[0]), vec


def reduce_atoms_full(state: np.ndarray, M: int) -> np.ndarray:
    """Trace the photons out of a pure full-space state."""
    state = np.asarray(state)
    d_s = 2**M
    if state.ndim != 1 or state.size % d_s:
        raise ValueError(f"state of size {state.size} is not (n_ph+1) * 2^{M}")
    if abs(np.linalg.norm(state) - 1.0) > 1e-10:
        raise ValueError("state vector must be normalized")
    v = state.reshape(-1, d_s)
    return np.einsum("pi,pj->ij", v, v.conj())


def dicke_weights_full(rho_s: np.ndarray, M: int) -> tuple[np.ndarray, float]:
    """Project a 2^M atomic density matrix onto the Dicke diagonal.

    Returns the diagonal weights and the Frobenius norm of what is left
    after removing the Dicke-diagonal part (zero for sector eigenstates).
    """
    basis = np.column_stack([dicke_state_vector(M, n) for n in range(M + 1)])
    weights = np.real(np.einsum("in,ij,jn->n", basis, rho_s, basis))
    residual = rho_s - (basis * weights) @ basis.T
    return weights, float(np.linalg.norm(residual))


def _sqrtm_psd(rho: np.ndarray) -> np.ndarray:
    w, v = np.linalg.eigh(rho)
    # zero out eigensolver noise around exact zeros: sqrt() would blow
    # +2e-16 artifacts up to 1.4e-8 in the root
    w[w < 100 * np.finfo(float).eps * max(w[-1], 0.0)] = 0.0
    return (v * np.sqrt(w)) @ v.conj().T


def _qcd_of(rho: np.ndarray, M: int) -> float:
    purity = float(np.real(np.trace(rho @ rho)))
    lam_max_sum = 0.0
    for mu in range(M):
        b = [rho @ single_qubit_operator(M, mu, _PAULI[i]) for i in (1, 2, 3)]
        a_mat = np.empty((3, 3))
        for i in range(3):
            for j in range(3):
                a_mat[i, j] = np.einsum("ij,ji->", b[i], b[j]).real
        a_mat = 0.5 * (a_mat + a_mat.T)
        lam_max_sum += float(np.linalg.eigvalsh(a_mat)[-1])
    return purity - lam_max_sum / M


def qcd_general(rho: np.ndarray, M: int) -> tuple[float, float]:
    """(qcd, rescaled_qcd) computed literally from the definitions.

    No symmetry assumptions: builds every per-qubit correlation matrix
    by tracing Pauli products, averages the maximal eigenvalues, and
    repeats on the matrix square root for the rescaled value.
    """
    if M > 10:
        raise ValueError(f"general-definition computation capped at M <= 10, got {M}")
    rho = np.asarray(rho)
    if rho.shape != (2**M, 2**M):
        raise ValueError(f"density matrix shape {rho.shape} does not match M={M}")
    eigs = np.linalg.eigvalsh(rho)
    if eigs[0] < -1e-10:
        raise ValueError(f"density matrix not positive semidefinite: min eig {eigs[0]}")
    if abs(np.trace(rho).real - 1.0) > 1e-10:
        raise ValueError(f"density matrix trace {np.trace(rho)} != 1")
    return _qcd_of(rho, M), _qcd_of(_sqrtm_psd(rho), M)


def a_matrix_full(rho: np.ndarray, M: int, mu: int) -> np.ndarray:
    """The 3x3 correlation matrix of qubit mu, from the raw definition."""
    b = [rho @ single_qubit_operator(M, mu, _PAULI[i]) for i in (1, 2, 3)]
    a_mat = np.empty((3, 3), dtype=complex)
    for i in range(3):
        for j in range(3):
            a_mat[i, j] = np.einsum("ij,ji->", b[i], b[j])
    return a_mat
