import itertools
import math

import numpy as np
import pytest

from tclab.model import ModelFamily, ModelParams


@pytest.fixture
def fam8() -> ModelFamily:
    """The workhorse family: M=8 atoms, eta=10, omega_c=1."""
    return ModelFamily(omega_c=1.0, eta=10.0, M=8)


def params(eta=10.0, g=1.0, M=8, omega_c=1.0) -> ModelParams:
    return ModelParams.from_dimensionless(omega_c, eta, g, M)


def brute_dicke_vector(M: int, n: int) -> np.ndarray:
    """Test-local Dicke state builder (bit set = excited), independent of
    the package implementation."""
    v = np.zeros(2**M)
    for pos in itertools.combinations(range(M), n):
        v[sum(1 << p for p in pos)] = 1.0
    return v / math.sqrt(math.comb(M, n))


def brute_mixture_matrix(weights) -> np.ndarray:
    """Dense 2^M density matrix of a Dicke mixture."""
    M = len(weights) - 1
    rho = np.zeros((2**M, 2**M))
    for n, p in enumerate(weights):
        if p:
            d = brute_dicke_vector(M, n)
            rho += p * np.outer(d, d)
    return rho


def brute_partial_trace_keep(rho: np.ndarray, M: int, keep: tuple[int, ...]) -> np.ndarray:
    """Partial trace keeping the listed qubits, by explicit tensor tracing.

    Qubit mu is bit mu of the basis index, so it sits at ket axis M-1-mu
    of the reshaped tensor. Output basis: keep[0] is the most significant
    bit, bit value 1 = excited.
    """
    labels = list(range(M - 1, -1, -1))  # labels[j] = qubit at ket axis j
    tensor = rho.reshape((2,) * (2 * M))
    for mu in set(range(M)) - set(keep):
        m = len(labels)
        j = labels.index(mu)
        tensor = np.trace(tensor, axis1=j, axis2=j + m)
        labels.pop(j)
    m = len(labels)
    perm = [labels.index(mu) for mu in keep]
    tensor = np.transpose(tensor, perm + [m + p for p in perm])
    d = 2 ** len(keep)
    return tensor.reshape(d, d)


def brute_pair_state(weights, mu: int, nu: int) -> np.ndarray:
    """Two-qubit reduction of a Dicke mixture in the {ee, eg, ge, gg} basis."""
    M = len(weights) - 1
    rho = brute_mixture_matrix(weights)
    pair = brute_partial_trace_keep(rho, M, (mu, nu))
    # natural bit order is gg, ge, eg, ee; flip to ee, eg, ge, gg
    order = [3, 2, 1, 0]
    return pair[np.ix_(order, order)]


def random_mixture_weights(rng: np.random.Generator, M: int) -> np.ndarray:
    w = rng.random(M + 1)
    return w / w.sum()
