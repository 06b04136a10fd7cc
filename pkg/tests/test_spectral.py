import math

import numpy as np
import pytest

from tclab import asymptotics, spectral
from tclab.model import ModelFamily, ModelParams, build_sector_hamiltonian, make_params
from tclab.spectral import (
    BracketError,
    crossing_table,
    excitation_staircase,
    find_level_crossing,
    global_ground,
    lowest_eigenpair,
    sector_ground_energy,
)


class TestLowestEigenpair:
    def test_scalar_sector(self):
        p = ModelParams.from_dimensionless(1.0, 10.0, 1.0, 8)
        pair = lowest_eigenpair(build_sector_hamiltonian(p, 0))
        assert pair.energy == -40.0
        np.testing.assert_array_equal(pair.amplitudes, [1.0])

    def test_two_level_closed_form(self):
        # dense 2x2: eigenvalues 0.5 +- sqrt(delta^2/4 + lam^2); lower is -5
        p = make_params(1.0, 10.0, math.sqrt(10.0), 1)
        pair = lowest_eigenpair(build_sector_hamiltonian(p, 1))
        assert pair.energy == pytest.approx(-5.0, abs=1e-12)

    @pytest.mark.parametrize("g", [0.0, 0.2, 1.0, 3.0, 5.0])
    def test_matches_first_multiplet_closed_form(self, g):
        p = ModelParams.from_dimensionless(1.0, 10.0, g, 8)
        pair = lowest_eigenpair(build_sector_hamiltonian(p, 1))
        assert abs(pair.energy - asymptotics.energy_E1_closed(p)) < 1e-10

    @pytest.mark.parametrize("M,k,g", [(8, 5, 1.3), (8, 80, 2.0), (3, 7, 0.4), (9, 200, 4.0)])
    def test_normalization_residual_positivity(self, M, k, g):
        p = ModelParams.from_dimensionless(1.0, 10.0, g, M)
        h = build_sector_hamiltonian(p, k)
        pair = lowest_eigenpair(h)
        a = pair.amplitudes
        assert abs(np.sum(a * a) - 1.0) < 1e-12
        dense = h.as_dense()
        residual = np.linalg.norm(dense @ a - pair.energy * a)
        assert residual <= 1e-10 * np.linalg.norm(dense)
        if p.lam > 0:
            assert np.all(a > 0.0)  # negative off-diagonals give a Perron vector


class TestSectorGroundEnergy:
    @pytest.mark.parametrize("g", [0.0, 0.5, 1.0, 4.0])
    def test_vacuum_energy_independent_of_g(self, g):
        p = ModelParams.from_dimensionless(1.0, 10.0, g, 8)
        assert sector_ground_energy(p, 0) == -40.0

    def test_first_sector_at_transition(self):
        p = ModelParams.from_dimensionless(1.0, 10.0, 1.0, 8)
        assert sector_ground_energy(p, 1) == pytest.approx(-40.0, abs=1e-10)

    def test_decoupled_sector_minimum(self):
        p = ModelParams.from_dimensionless(1.0, 10.0, 0.0, 8)
        assert sector_ground_energy(p, 2) == pytest.approx(-38.0, abs=1e-12)


class TestGlobalGround:
    def test_below_transition(self):
        gs = global_ground(ModelParams.from_dimensionless(1.0, 10.0, 0.5, 8))
        assert gs.kstar == 0
        assert gs.eigenpair.energy == -40.0

    def test_superradiant_sector_index(self):
        gs = global_ground(ModelParams.from_dimensionless(1.0, 10.0, 2.0, 8))
        assert abs(gs.kstar - 80) <= 2

    def test_just_past_transition(self):
        gs = global_ground(ModelParams.from_dimensionless(1.0, 10.0, 1.01, 2))
        assert gs.kstar >= 1

    def test_variational_bound(self):
        for g in (0.0, 0.9, 1.5, 3.0):
            p = ModelParams.from_dimensionless(1.0, 10.0, g, 5)
            gs = global_ground(p)
            assert gs.eigenpair.energy <= -p.omega_z * p.M / 2 + 1e-12

    def test_warns_when_window_too_small(self):
        p = ModelParams.from_dimensionless(1.0, 10.0, 2.0, 8)
        with pytest.warns(UserWarning, match="window"):
            global_ground(p, k_max=5)

    def test_scan_window_recorded(self):
        p = ModelParams.from_dimensionless(1.0, 10.0, 1.4, 4)
        gs = global_ground(p)
        assert gs.k_max == spectral.suggested_k_max(p)
        assert gs.kstar < gs.k_max


class TestFindLevelCrossing:
    def test_first_crossing_at_unity(self, fam8):
        assert find_level_crossing(fam8, 0) == pytest.approx(1.0, abs=1e-9)

    def test_single_atom_algebraic_crossing(self):
        fam = ModelFamily(1.0, 10.0, 1)
        assert find_level_crossing(fam, 0) == pytest.approx(1.0, abs=1e-9)

    def test_high_k_near_closed_form(self, fam8):
        g80 = find_level_crossing(fam8, 80)
        assert abs(g80 - 2.047723423694257) / 2.047723423694257 < 0.01

    def test_explicit_failure_names_k_and_bracket(self, fam8):
        with pytest.raises(BracketError, match="k=3"):
            find_level_crossing(fam8, 3, bracket=(4.0, 5.0))

    def test_invalid_bracket(self, fam8):
        with pytest.raises(ValueError):
            find_level_crossing(fam8, 1, bracket=(2.0, 1.0))


class TestCrossingTable:
    def test_single_entry(self, fam8):
        table = crossing_table(fam8, 1)
        assert len(table) == 1
        assert table[0][0] == 0
        assert table[0][1] == pytest.approx(1.0, abs=1e-9)

    def test_fifty_crossings_increasing_and_bounded(self, fam8):
        table = crossing_table(fam8, 50)
        g = np.array([row[1] for row in table])
        assert np.all(np.diff(g) > 0)
        upper = asymptotics.approx_crossing(fam8, 50) * 1.05
        assert g[0] >= 1.0 - 1e-9
        assert np.all(g <= upper)

    def test_large_eta_crossings_pinned_near_unity(self):
        fam = ModelFamily(1.0, 100.0, 2)
        table = crossing_table(fam, 5)
        g = np.array([row[1] for row in table])
        assert np.all((g >= 1.0 - 1e-9) & (g <= 1.15))

    def test_rejects_bad_kmax(self, fam8):
        with pytest.raises(ValueError):
            crossing_table(fam8, 0)


class TestExcitationStaircase:
    def test_flat_below_transition(self, fam8):
        stairs = excitation_staircase(fam8, np.linspace(0.05, 0.95, 10))
        assert all(k == 0 for _, k in stairs)

    def test_height_matches_prediction(self, fam8):
        stairs = excitation_staircase(fam8, [3.0])
        assert abs(stairs[0][1] - 180) / 180 <= 0.05

    def test_monotone_staircase(self, fam8):
        grid = np.linspace(0.5, 3.0, 60)
        ks = np.array([k for _, k in excitation_staircase(fam8, grid)])
        assert np.all(np.diff(ks) >= 0)

    def test_collapse_over_system_sizes(self):
        for M in range(2, 10):
            fam = ModelFamily(1.0, 10.0, M)
            (_, kstar), = excitation_staircase(fam, [4.0])
            assert abs(kstar / M - 40.0) / 40.0 <= 0.05

    def test_rejects_descending_grid(self, fam8):
        with pytest.raises(ValueError):
            excitation_staircase(fam8, [2.0, 1.0])


def test_tie_at_exact_crossing_resolves_to_smaller_k():
    # M=1 at g=1: E_0 = E_1 exactly; the scan must report k*=0
    gs = global_ground(ModelParams.from_dimensionless(1.0, 10.0, 1.0, 1))
    assert gs.kstar == 0


def test_spacing_product_stays_bounded(fam8):
    # coarse version of the spacing law (the acceptance suite runs k to 200)
    ks = np.arange(20, 41)
    g = [find_level_crossing(fam8, int(k)) for k in np.append(ks, 41)]
    prod = np.diff(g) * np.sqrt(ks * 10.0 * 8)
    assert prod.max() < 2.0
