import pytest
import numpy as np
from scipy.linalg import expm
from hyland.algebra import (
    E0, E1, E2, E3,
    dagger,
    det2,
    inv2,
    normalize_sl2,
    from_coordinates,
    to_coordinates,
    minkowski_inner,
    UnitTangent,
    project_to_h3,
    unit_tangent_of_frame,
    hyperbolic_distance,
    to_poincare_ball
)

def random_sl2(rng:np.random.Generator, n:int =None) -> np.ndarray:
    shape = (2, 2) if n is None else (n, 2, 2)
    m = rng.normal(size=shape) + 1j * rng.normal(size=shape)
    return normalize_sl2(m)

@pytest.mark.parametrize("basis, norm", [
    (E0, -1.0),
    (E1, 1.0),
    (E2, 1.0),
    (E3, 1.0)
])
def test_basis_signature(basis, norm):
    assert np.isclose(minkowski_inner(basis, basis), norm)
    # <xi, xi> = -det xi
    assert np.isclose(minkowski_inner(basis, basis), -det2(basis).real)

def test_basis_orthogonal():
    basis = (E0, E1, E2, E3)
    for i in range(4):
        for j in range(i + 1, 4):
            assert np.isclose(minkowski_inner(basis[i], basis[j]), 0.0)

def test_coordinates_invert():
    xi = np.array([[1.5, 0.3, -0.2, 0.7], [2.0, -1.0, 0.5, 0.1]])
    assert np.allclose(to_coordinates(from_coordinates(xi)), xi)
    assert np.allclose(from_coordinates(xi), dagger(from_coordinates(xi)))

def test_inverse_and_normalization():
    rng = np.random.default_rng(0)
    m = rng.normal(size=(5, 2, 2)) + 1j * rng.normal(size=(5, 2, 2))
    assert np.allclose(inv2(m) @ m, np.eye(2))
    assert np.allclose(det2(normalize_sl2(m)), 1.0)

def test_frame_gives_unit_tangent():
    rng = np.random.default_rng(1)
    g = random_sl2(rng, 10)
    t = unit_tangent_of_frame(g)
    t.check()
    assert np.allclose(t.x, project_to_h3(g))

def test_unit_tangent_check_rejects():
    with pytest.raises(ValueError):
        UnitTangent(x=2.0 * E0, v=E1).check()
    with pytest.raises(ValueError):
        UnitTangent(x=E0, v=E0).check()
    with pytest.raises(ValueError):
        UnitTangent(x=-E0, v=E1).check()

@pytest.mark.parametrize("t", [0.0, 1e-6, 0.5, 3.0])
def test_distance_along_geodesic(t):
    x = project_to_h3(expm(0.5 * t * E1))
    assert np.isclose(hyperbolic_distance(E0, x), t, rtol=1e-8, atol=1e-14)

def test_distance_is_isometry_invariant():
    rng = np.random.default_rng(2)
    x, y = project_to_h3(random_sl2(rng, 2))
    g = random_sl2(rng)
    d = hyperbolic_distance(x, y)
    assert np.isclose(hyperbolic_distance(g @ x @ dagger(g), g @ y @ dagger(g)), d)

def test_poincare_ball():
    assert np.allclose(to_poincare_ball(E0), 0.0)
    rng = np.random.default_rng(3)
    x = project_to_h3(random_sl2(rng, 20))
    assert np.all(np.linalg.norm(to_poincare_ball(x), axis=-1) < 1.0)
