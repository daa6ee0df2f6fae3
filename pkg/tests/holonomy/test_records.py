import pytest
import numpy as np
from hyland.holonomy import (
    HolonomyRecord,
    sign_class,
    principal_sqrt,
    frame_holonomy_at_sqrt_q,
    compare_holonomy,
    fixed_point_distance
)

M = np.array([[2.0, 1.0 + 1j], [1j, 0.5 + 0.5j]])
M = M / np.sqrt(np.linalg.det(M))

def test_sign_class():
    assert np.allclose(sign_class(-M), sign_class(M))
    assert np.isclose(np.linalg.det(sign_class(M)), 1.0)
    assert np.allclose(sign_class(-np.eye(2)), np.eye(2))

def test_principal_sqrt():
    assert np.isclose(principal_sqrt(-1.0), 1j)
    assert np.isclose(principal_sqrt(np.exp(-2 + 1j)), np.exp(-1 + 0.5j))

def test_compare_holonomy():
    g = np.array([[1.0, 0.3j], [0.2, 1.06j]])
    g = g / np.sqrt(np.linalg.det(g))
    a = HolonomyRecord('x', M, mu=0.5)
    b = HolonomyRecord('x', g @ (-M) @ np.linalg.inv(g), mu=0.5, source='dev')
    # conjugate records share the trace but move the fixed points
    assert compare_holonomy(a, b, conjugation_invariant=True) < 1e-12
    assert compare_holonomy(a, b) > 1e-3
    assert np.isclose(compare_holonomy(a, b), fixed_point_distance(a, b))
    assert compare_holonomy(a, a) < 1e-12
    with pytest.raises(ValueError):
        compare_holonomy(a, HolonomyRecord('y', M, mu=0.5))

def test_compare_holonomy_separates_equal_traces():
    # parabolics and the identity all have trace 2
    parabolic = HolonomyRecord('x', np.array([[1.0, 1.0], [0.0, 1.0]]), mu=0.5)
    identity = HolonomyRecord('x', np.eye(2), mu=0.5, source='dev')
    lower = HolonomyRecord('x', np.array([[1.0, 0.0], [1.0, 1.0]]), mu=0.5, source='dev')
    for other in (identity, lower):
        assert compare_holonomy(parabolic, other, conjugation_invariant=True) < 1e-12
        assert compare_holonomy(parabolic, other) > 0.5

def test_frame_holonomy_rejects_outside_disk(coarse_connection):
    with pytest.raises(ValueError):
        frame_holonomy_at_sqrt_q(coarse_connection, 1.5)
    with pytest.raises(ValueError):
        frame_holonomy_at_sqrt_q(coarse_connection, 0.0)

def test_frame_holonomy_on_circle(coarse_connection):
    record = frame_holonomy_at_sqrt_q(coarse_connection, 1j)
    assert np.isclose(record.mu, np.exp(0.25j * np.pi))
    assert np.isclose(np.linalg.det(record.matrix), 1.0)
    # unitary for SU(1, 1) frames on the unit circle
    E1 = np.diag([1.0, -1.0])
    assert np.allclose(record.matrix.conj().T @ E1 @ record.matrix, E1, atol=1e-10)
