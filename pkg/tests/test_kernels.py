import numpy as np
import pytest
from scipy.linalg import eigh_tridiagonal

from tclab import _scan_py, kernels
from tclab.model import ModelParams, build_sector_hamiltonian

try:
    from tclab import _scan

    HAVE_COMPILED = True
except ImportError:
    HAVE_COMPILED = False

BACKENDS = [_scan_py] + ([_scan] if HAVE_COMPILED else [])


def scipy_lowest(diag, offdiag):
    if len(diag) == 1:
        return float(diag[0])
    return float(eigh_tridiagonal(diag, offdiag, select="i", select_range=(0, 0))[0][0])


@pytest.mark.parametrize("impl", BACKENDS, ids=lambda m: m.__name__.rsplit(".", 1)[-1])
class TestAgainstLapack:
    @pytest.mark.parametrize(
        "eta,g,M,k_max",
        [
            (10.0, 0.0, 8, 30),
            (10.0, 0.5, 8, 30),
            (10.0, 2.0, 8, 300),
            (10.0, 5.0, 9, 200),
            (2.0, 1.2, 3, 60),
            (100.0, 1.01, 2, 25),
            (1.0, 1.0, 5, 40),
        ],
    )
    def test_scan_matches_lapack(self, impl, eta, g, M, k_max):
        p = ModelParams.from_dimensionless(1.0, eta, g, M)
        ours = impl.scan_lowest(p.omega_c, p.delta, p.lam, M, k_max)
        assert ours.shape == (k_max + 1,)
        for k in range(k_max + 1):
            h = build_sector_hamiltonian(p, k)
            ref = scipy_lowest(h.diag, h.offdiag)
            scale = max(1.0, np.abs(h.diag).max() + (np.abs(h.offdiag).max() if len(h.offdiag) else 0.0))
            assert abs(ours[k] - ref) < 1e-12 * scale, f"k={k}"

    def test_lowest_value_scalar(self, impl):
        assert impl.lowest_value(np.array([-40.0]), np.array([])) == -40.0

    def test_lowest_value_matches_lapack(self, impl):
        rng = np.random.default_rng(7)
        for dim in (2, 3, 5, 9, 13):
            d = rng.normal(size=dim) * 10
            e = rng.normal(size=dim - 1) * 3
            ref = scipy_lowest(d, e)
            assert abs(impl.lowest_value(d, e) - ref) < 1e-12 * (np.abs(d).max() + np.abs(e).max())

    def test_lowest_value_rejects_length_mismatch(self, impl):
        with pytest.raises(ValueError):
            impl.lowest_value(np.array([1.0, 2.0]), np.array([]))

    def test_scan_small_windows(self, impl):
        p = ModelParams.from_dimensionless(1.0, 10.0, 1.0, 8)
        out = impl.scan_lowest(p.omega_c, p.delta, p.lam, p.M, 0)
        assert out.shape == (1,)
        assert out[0] == -40.0  # vacuum sector is exact

    def test_deterministic(self, impl):
        p = ModelParams.from_dimensionless(1.0, 10.0, 1.7, 6)
        a = impl.scan_lowest(p.omega_c, p.delta, p.lam, p.M, 120)
        b = impl.scan_lowest(p.omega_c, p.delta, p.lam, p.M, 120)
        assert np.array_equal(a, b)

    def test_accepts_readonly_arrays(self, impl):
        p = ModelParams.from_dimensionless(1.0, 10.0, 1.5, 4)
        h = build_sector_hamiltonian(p, 9)
        assert not h.diag.flags.writeable
        val = impl.lowest_value(h.diag, h.offdiag)
        assert np.isfinite(val)


@pytest.mark.skipif(not HAVE_COMPILED, reason="compiled extension not built")
class TestBackendTwins:
    @pytest.mark.parametrize(
        "eta,g,M,k_max",
        [(10.0, 2.0, 8, 400), (10.0, 0.3, 9, 50), (2.0, 1.05, 2, 80), (10.0, 5.0, 9, 1200)],
    )
    def test_bitwise_identical_scans(self, eta, g, M, k_max):
        p = ModelParams.from_dimensionless(1.0, eta, g, M)
        a = _scan.scan_lowest(p.omega_c, p.delta, p.lam, M, k_max)
        b = _scan_py.scan_lowest(p.omega_c, p.delta, p.lam, M, k_max)
        assert np.array_equal(a, b)

    def test_bitwise_identical_single(self):
        rng = np.random.default_rng(3)
        for dim in (2, 4, 9):
            d = rng.normal(size=dim) * 50
            e = rng.normal(size=dim - 1)
            assert _scan.lowest_value(d, e) == _scan_py.lowest_value(d, e)


def test_selected_backend_exposed():
    assert kernels.backend_name() in ("compiled", "pure")
    p = ModelParams.from_dimensionless(1.0, 10.0, 1.0, 4)
    out = kernels.scan_lowest(p.omega_c, p.delta, p.lam, p.M, 10)
    assert out.shape == (11,)


def test_lambda_zero_scan_hits_diagonal_minima():
    p = ModelParams.from_dimensionless(1.0, 10.0, 0.0, 8)
    out = kernels.scan_lowest(p.omega_c, p.delta, p.lam, p.M, 12)
    for k in range(13):
        h = build_sector_hamiltonian(p, k)
        assert abs(out[k] - h.diag.min()) < 1e-12
