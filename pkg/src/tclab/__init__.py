"""tclab: a desk-scale laboratory for the Tavis-Cummings phase transition.

Sector-resolved spectra and level crossings, closed-form asymptotics,
Dicke-mixture correlation measures (QCD, rescaled QCD, ED), pairwise
entanglement and PPT separability, plus a brute-force reference path
and a CLI for reproducible sweep datasets.
"""

from .asymptotics import (
    approx_crossing,
    approx_energy,
    approx_kstar,
    approx_weights,
    energy_E1_closed,
    mixing_angle_beta1,
    mixing_angle_betak,
)
from .correlations import (
    DickeMixture,
    a_matrix_eigenvalues,
    correlation_report,
    dicke_state_vector,
    ed_pure,
    ed_pure_dicke,
    ground_mixture,
    naive_qcd,
    pauli_dicke_element,
    purity,
    qcd,
    qcd_crossover,
    reduce_to_dicke_mixture,
    rescaled_qcd,
)
from .entanglement import (
    concurrence,
    entanglement_bounds,
    entanglement_report,
    pair_reduction,
    ppt_check,
    ppt_entangled,
    total_two_tangle,
)
from .kernels import backend_name
from .model import ModelFamily, ModelParams, build_sector_hamiltonian, make_params, sector_dim
from .spectral import (
    GroundState,
    SectorEigenpair,
    crossing_table,
    excitation_staircase,
    find_level_crossing,
    global_ground,
    lowest_eigenpair,
    sector_ground_energy,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "backend_name",
    "ModelParams",
    "ModelFamily",
    "make_params",
    "sector_dim",
    "build_sector_hamiltonian",
    "SectorEigenpair",
    "GroundState",
    "lowest_eigenpair",
    "sector_ground_energy",
    "global_ground",
    "find_level_crossing",
    "crossing_table",
    "excitation_staircase",
    "energy_E1_closed",
    "mixing_angle_beta1",
    "mixing_angle_betak",
    "approx_energy",
    "approx_weights",
    "approx_crossing",
    "approx_kstar",
    "DickeMixture",
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
    "pair_reduction",
    "concurrence",
    "total_two_tangle",
    "ppt_check",
    "ppt_entangled",
    "entanglement_bounds",
    "entanglement_report",
]
