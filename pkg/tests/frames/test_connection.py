import pytest
import numpy as np
from hyland.frames import (
    TAU,
    build_connection,
    maurer_cartan,
    flatness_residual,
    untwist_connection,
    gauge_matrix
)

def spectral_samples(n:int =8) -> np.ndarray:
    phases = 2 * np.pi * np.arange(n) / n
    return np.concatenate([np.exp(1j * phases), 0.5 * np.exp(1j * (phases + np.pi / n))])

def perturbed(m, amplitude:float =1e-2):
    x = m.grid.z.real
    return m.with_u(m.u + amplitude * np.sin(2 * np.pi * x / m.grid.Lx))

def test_connection_shape(connection, profile):
    assert connection.is_twisted()
    assert connection.max_trace() < 1e-14
    for c in connection.coefficients().values():
        assert c.shape == profile.grid.shape + (2, 2)

@pytest.mark.parametrize("lam", spectral_samples())
def test_flat_for_solutions(connection, lam):
    assert flatness_residual(connection, lam) < 1e-8

@pytest.mark.parametrize("lam", [1.0, 0.5j, np.exp(-1.0)])
def test_perturbation_breaks_flatness(profile, lam):
    c = build_connection(perturbed(profile))
    assert flatness_residual(c, lam) > 1e-4

@pytest.mark.parametrize("phase", [0.0, 0.7, 2.0, np.pi])
def test_real_form_on_circle(connection, phase):
    assert connection.reality_defect(np.exp(1j * phase)) < 1e-12

def test_not_real_inside_disk(connection):
    assert connection.reality_defect(0.5) > 1e-2

def test_twisted_symmetry(connection):
    # alpha^{-lambda} = tau alpha^lambda tau
    for a, b in zip(connection.evaluate(-0.3 + 0.2j), connection.evaluate(0.3 - 0.2j)):
        assert np.allclose(a, TAU @ b @ TAU, atol=1e-14)

def test_maurer_cartan_is_trace_free(connection):
    mc = maurer_cartan(connection, 0.4j)
    assert np.abs(np.trace(mc, axis1=-2, axis2=-1)).max() < 1e-10

@pytest.mark.parametrize("mu", [0.3, 0.2 + 0.4j, -0.5j, np.exp(0.3j)])
def test_untwisting_is_a_gauge(constant_data, mu):
    c = build_connection(constant_data)
    untwisted = untwist_connection(c)
    assert untwisted.untwisted
    d = gauge_matrix(mu)
    d_inv = np.linalg.inv(d)
    for direct, entry in zip(c.evaluate(mu), untwisted.evaluate(mu ** 2)):
        assert np.abs(d_inv @ direct @ d - entry).max() < 1e-12

def test_untwisted_has_integer_powers(connection):
    untwisted = untwist_connection(connection)
    # the lambda^-1 part is strictly lower, the lambda part strictly upper triangular
    assert np.abs(untwisted.A_minus[..., 0, :]).max() == 0
    assert np.abs(untwisted.B_plus[..., 1, :]).max() == 0
    with pytest.raises(ValueError):
        untwist_connection(untwisted)

def test_upper_convention(connection):
    mu = 0.3 + 0.1j
    untwisted = untwist_connection(connection, convention='upper')
    d = gauge_matrix(mu, convention='upper')
    for direct, entry in zip(connection.evaluate(mu), untwisted.evaluate(mu ** 2)):
        assert np.abs(np.linalg.inv(d) @ direct @ d - entry).max() < 1e-12
