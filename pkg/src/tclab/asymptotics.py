"""Closed forms: first-multiplet energies and the many-excitation limit.

For k much larger than M the sector block is well approximated by a
rotated spin in an effective field, giving closed forms for the lowest
level, its mixing angle and binomial weights, the crossing ladder, and
the ground-sector index. No regime guard is applied: callers get raw
formula values everywhere (the CLI annotates regime validity).
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .model import ModelFamily, ModelParams

__all__ = [
    "AsymptoticGround",
    "DegenerateMixingWarning",
    "energy_E1_closed",
    "mixing_angle_beta1",
    "mixing_angle_betak",
    "approx_energy",
    "approx_weights",
    "approx_crossing",
    "approx_kstar",
]


class DegenerateMixingWarning(UserWarning):
    """Mixing direction undefined (resonant, zero coupling)."""


@dataclass(frozen=True)
class AsymptoticGround:
    """Approximate sector ground state: angle, binomial weights, energy."""

    k: float
    beta_k: float
    weights: np.ndarray
    energy: float


def energy_E1_closed(params: ModelParams) -> float:
    """Closed form for the lowest level of the single-excitation sector."""
    eta = params.eta
    return (
        params.omega_c / 2
        + params.omega_z / 2 * (1 - params.M)
        - params.omega_z / 2 * math.sqrt((1 - 1 / eta) ** 2 + 4 * params.g**2 / eta)
    )


def _mixing_angle(detune: float, coupling_sq: float) -> float:
    if detune == 0.0 and coupling_sq == 0.0:
        warnings.warn(
            "mixing direction undefined at zero detuning and zero coupling; returning pi/2",
            DegenerateMixingWarning,
            stacklevel=3,
        )
        return math.pi / 2
    arg = detune / math.sqrt(detune**2 + coupling_sq)
    return math.acos(min(1.0, max(-1.0, arg)))


def mixing_angle_beta1(params: ModelParams) -> float:
    """Mixing angle of the k=1 ground state, in [0, pi]."""
    return _mixing_angle(1 - 1 / params.eta, 4 * params.g**2 / params.eta)


def mixing_angle_betak(params: ModelParams, k: float) -> float:
    """Mixing angle of the sector-k asymptotic ground state."""
    return _mixing_angle(1 - 1 / params.eta, 4 * params.g**2 * k / (params.eta * params.M))


def approx_energy(params: ModelParams, k: float) -> float:
    """Asymptotic lowest level of sector k (intended regime k >> M)."""
    eta = params.eta
    M = params.M
    return params.omega_c * (k - M / 2) - params.omega_z * M / 2 * math.sqrt(
        (1 - 1 / eta) ** 2 + 4 * params.g**2 * k / (eta * M)
    )


def approx_weights(params: ModelParams, k: float) -> AsymptoticGround:
    """Binomial atomic weights of the asymptotic sector-k ground state."""
    M = params.M
    beta = mixing_angle_betak(params, k)
    c2 = math.cos(beta / 2) ** 2
    s2 = math.sin(beta / 2) ** 2
    n = np.arange(M + 1)
    binom = np.array([math.comb(M, int(j)) for j in n], dtype=np.float64)
    weights = binom * c2 ** (M - n) * s2**n
    weights.setflags(write=False)
    return AsymptoticGround(k, beta, weights, approx_energy(params, k))


def approx_crossing(family: ModelFamily, k: float) -> float:
    """Asymptotic crossing coupling between sectors k and k+1.

    Evaluated as sqrt(x + sqrt(x^2 + (1 - 1/eta)^2)) with x = 2k/(eta M),
    which is algebraically identical to the k >> M form and stays finite
    at k = 0.
    """
    x = 2.0 * k / (family.eta * family.M)
    return math.sqrt(x + math.sqrt(x * x + (1 - 1 / family.eta) ** 2))


def approx_kstar(params: ModelParams) -> float:
    """Predicted ground-sector index g^2 eta M / 4 (real, not rounded)."""
    return params.g**2 * params.eta * params.M / 4.0
