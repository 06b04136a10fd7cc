"""Sector eigenpairs, global ground state and level-crossing search.

The ground state of the full model at coupling g lives in the sector
whose lowest eigenvalue E_k(g) is minimal; as g grows the minimizing k
climbs through an infinite ladder of level crossings g_k. This module
solves the per-sector eigenproblem, scans for the global minimum, and
locates the crossings by bracketed bisection.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigh_tridiagonal

from . import asymptotics, kernels
from .model import ModelFamily, ModelParams, SectorHamiltonian, build_sector_hamiltonian

__all__ = [
    "SectorEigenpair",
    "GroundState",
    "BracketError",
    "lowest_eigenpair",
    "sector_ground_energy",
    "suggested_k_max",
    "global_ground",
    "find_level_crossing",
    "crossing_table",
    "excitation_staircase",
]


class BracketError(RuntimeError):
    """No sign change of E_{k+1} - E_k inside the search bracket."""


@dataclass(frozen=True)
class SectorEigenpair:
    """Lowest eigenvalue of one sector with its normalized eigenvector.

    Sign convention: amplitudes sum to a positive value, which makes
    every entry strictly positive whenever the coupling is nonzero
    (negative off-diagonals, Perron-Frobenius).
    """

    k: int
    energy: float
    amplitudes: np.ndarray


@dataclass(frozen=True)
class GroundState:
    """Global minimum over sectors k = 0 .. k_max (the scan window used)."""

    params: ModelParams
    kstar: int
    eigenpair: SectorEigenpair
    k_max: int


def _lowest_eigvec(h: SectorHamiltonian) -> np.ndarray:
    dim = h.basis.dim
    if dim == 1:
        return np.array([1.0])
    _, v = eigh_tridiagonal(h.diag, h.offdiag, select="i", select_range=(0, 0))
    vec = v[:, 0]
    s = vec.sum()
    if s == 0.0:
        s = vec[np.argmax(np.abs(vec))]
    if s < 0:
        vec = -vec
    return vec / np.linalg.norm(vec)


def lowest_eigenpair(h: SectorHamiltonian) -> SectorEigenpair:
    """Deterministic lowest eigenpair of a sector block."""
    energy = kernels.lowest_value(h.diag, h.offdiag)
    vec = _lowest_eigvec(h)
    vec.setflags(write=False)
    return SectorEigenpair(h.basis.k, energy, vec)


def sector_ground_energy(params: ModelParams, k: int) -> float:
    """E_k(g): lowest eigenvalue of the excitation-k block."""
    h = build_sector_hamiltonian(params, k)
    return kernels.lowest_value(h.diag, h.offdiag)


def suggested_k_max(params: ModelParams) -> int:
    """Scan window: twice the predicted ground-sector index, floored at M + 10."""
    return max(math.ceil(2.0 * asymptotics.approx_kstar(params)), params.M + 10)


def global_ground(params: ModelParams, k_max: int | None = None) -> GroundState:
    """Minimize E_k over k in [0, k_max]; ties resolve to the smaller k."""
    if k_max is None:
        k_max = suggested_k_max(params)
    energies = kernels.scan_lowest(params.omega_c, params.delta, params.lam, params.M, k_max)
    kstar = int(np.argmin(energies))
    if kstar == k_max:
        warnings.warn(
            f"ground-state scan hit the window edge (kstar = k_max = {k_max}); "
            "the window may be too small",
            stacklevel=2,
        )
    pair = lowest_eigenpair(build_sector_hamiltonian(params, kstar))
    return GroundState(params, kstar, pair, k_max)


def _default_bracket(family: ModelFamily, k: int) -> tuple[float, float]:
    gt = asymptotics.approx_crossing(family, k)
    return max(1.0, 0.5 * gt), 1.5 * gt + 1.0


def find_level_crossing(
    family: ModelFamily,
    k: int,
    bracket: tuple[float, float] | None = None,
    tol: float = 1e-10,
) -> float:
    """Coupling g_k where E_{k+1}(g) crosses below E_k(g).

    Bisection on f(g) = E_{k+1}(g) - E_k(g), which is positive below the
    crossing and negative above it. If the initial bracket misses the
    sign change it is widened geometrically a bounded number of times
    before giving up.
    """

    def f(g: float) -> float:
        p = family.at(g)
        return sector_ground_energy(p, k + 1) - sector_ground_energy(p, k)

    explicit = bracket is not None
    lo, hi = bracket if explicit else _default_bracket(family, k)
    if not lo < hi:
        raise ValueError(f"invalid bracket ({lo}, {hi}) for k={k}")
    flo, fhi = f(lo), f(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if not explicit:
        # the default bracket can land its lower edge on the root itself
        # (k=0 crosses exactly at g=1); widen a bounded number of times
        expansions = 0
        while flo * fhi > 0 and expansions < 40:
            if flo <= 0:
                lo = max(0.5 * lo, 1e-8)
                flo = f(lo)
            else:
                hi = 1.3 * hi + 0.5
                fhi = f(hi)
            expansions += 1
    if flo * fhi > 0:
        raise BracketError(
            f"no sign change of E_{k + 1} - E_{k} in bracket ({lo!r}, {hi!r}) for k={k}"
        )
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        fm = f(mid)
        if fm == 0.0:
            return mid
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi, fhi = mid, fm
    return 0.5 * (lo + hi)


def crossing_table(family: ModelFamily, k_max: int) -> list[tuple[int, float]]:
    """(k, g_k) for k = 0 .. k_max - 1; raises if the ladder is not increasing."""
    if k_max < 1:
        raise ValueError(f"k_max must be >= 1, got {k_max}")
    table = []
    prev = -math.inf
    for k in range(k_max):
        gk = find_level_crossing(family, k)
        if gk <= prev:
            raise ValueError(f"crossing ladder not strictly increasing at k={k}: {gk} <= {prev}")
        table.append((k, gk))
        prev = gk
    return table


def excitation_staircase(family: ModelFamily, g_grid) -> list[tuple[float, int]]:
    """(g, kstar) along an ascending coupling grid."""
    g_grid = np.asarray(g_grid, dtype=np.float64)
    if np.any(np.diff(g_grid) < 0):
        raise ValueError("g_grid must be ascending")
    out = []
    for g in g_grid:
        params = family.at(float(g))
        energies = kernels.scan_lowest(
            params.omega_c, params.delta, params.lam, params.M, suggested_k_max(params)
        )
        out.append((float(g), int(np.argmin(energies))))
    return out
