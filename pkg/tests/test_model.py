import numpy as np
import pytest

from spinosc.fullspace import TruncatedSpace, assemble_full
from spinosc.model import ModelParams, adjoint_block, build_block, sigma_z_residual

FIG = dict(alpha=5.0, homega=1.0)


def test_build_block_decoupled_limit():
    block = build_block(ModelParams(5, 1, 0), 0)
    assert np.allclose(block, [[2.5, 0.0], [0.0, -1.5]], rtol=0, atol=1e-15)


def test_build_block_reference_point():
    block = build_block(ModelParams(5, 1, 1), 0)
    assert np.allclose(block, [[2.5, 1.0], [-1.0, -1.5]], rtol=0, atol=1e-15)


def test_build_block_higher_subspace_matches_fullspace_rows():
    # n = 3 block lives on basis indices (2*3, 2*4 + 1) of the assembled matrix.
    block = build_block(ModelParams(5, 1, 1), 3)
    assert np.allclose(block, [[5.5, 2.0], [-2.0, 1.5]], rtol=0, atol=1e-15)
    h = assemble_full(ModelParams(5, 1, 1), TruncatedSpace(5))
    embedded = h[np.ix_([6, 9], [6, 9])]
    assert np.allclose(block, embedded, rtol=0, atol=1e-15)


def test_adjoint_block_flips_coupling():
    m = np.array([[2.5, 1.0], [-1.0, -1.5]], dtype=complex)
    assert np.allclose(adjoint_block(m), [[2.5, -1.0], [1.0, -1.5]], rtol=0, atol=1e-15)


def test_adjoint_block_hermitian_fixed_point():
    m = build_block(ModelParams(5, 1, 0), 2)
    assert np.allclose(adjoint_block(m), m, rtol=0, atol=1e-15)


def test_adjoint_block_conjugates_imaginary_entries():
    m = np.array([[0.0, 1.0j], [1.0j, 0.0]])
    assert np.allclose(adjoint_block(m), [[0.0, -1.0j], [-1.0j, 0.0]], rtol=0, atol=1e-15)


@pytest.mark.parametrize("bad", [dict(homega=0.0), dict(homega=-1.0), dict(mu=-0.5)])
def test_params_validation(bad):
    kwargs = dict(alpha=5.0, homega=1.0, mu=0.0)
    kwargs.update(bad)
    with pytest.raises(ValueError):
        ModelParams(**kwargs)


def test_params_rejects_non_finite():
    with pytest.raises(ValueError):
        ModelParams(float("nan"), 1.0, 0.0)
    with pytest.raises(ValueError):
        ModelParams(5.0, float("inf"), 0.0)


def test_delta_is_exact_difference():
    params = ModelParams(5.0, 1.0, 0.3)
    assert params.delta == 1.0 - 5.0


@pytest.mark.parametrize("n", [-1, 1.5, "2", True])
def test_subspace_index_validation(n):
    with pytest.raises(ValueError):
        build_block(ModelParams(5, 1, 1), n)


@pytest.mark.parametrize("mu", [0.0, 0.5, 1.0, 2.0, 3.7])
@pytest.mark.parametrize("n", [0, 1, 4, 9])
def test_trace_and_offdiagonal_structure(mu, n):
    params = ModelParams(**FIG, mu=mu)
    block = build_block(params, n)
    assert np.trace(block).real == pytest.approx((2 * n + 1) * params.homega, rel=1e-15)
    coupling = mu * np.sqrt(n + 1.0)
    assert block[0, 1] == pytest.approx(coupling, rel=1e-15)
    assert block[1, 0] == pytest.approx(-coupling, rel=1e-15)


@pytest.mark.parametrize("alpha", [-3.0, 0.0, 1.0, 5.0])
@pytest.mark.parametrize("mu", [0.0, 1.0, 3.0])
@pytest.mark.parametrize("n", [0, 2, 5])
def test_sigma_z_residual_vanishes(alpha, mu, n):
    params = ModelParams(alpha, 1.0, mu)
    h_norm = np.linalg.norm(build_block(params, n))
    assert sigma_z_residual(params, n) < 1e-12 * (1.0 + h_norm)


def test_sigma_z_residual_exact_in_hermitian_limit():
    assert sigma_z_residual(ModelParams(5, 1, 0), 3) == 0.0


def test_mu_zero_block_is_hermitian():
    block = build_block(ModelParams(5, 1, 0), 4)
    assert np.array_equal(block, adjoint_block(block))
