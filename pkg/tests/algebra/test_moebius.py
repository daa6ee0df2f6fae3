import pytest
import numpy as np
from hyland.algebra import (
    CP1Point,
    MoebiusMap,
    chordal_distance,
    geodesic_endpoints,
    columns,
    unit_tangent_of_frame,
    moebius_apply,
    moebius_fit,
    three_point_map,
    fit_residual,
    conjugation_distance,
    normalize_sl2
)
from hyland.errors import DegenerateConfiguration

@pytest.fixture
def rng():
    return np.random.default_rng(7)

def random_points(rng, n:int) -> CP1Point:
    return CP1Point(rng.normal(size=(n, 2)) + 1j * rng.normal(size=(n, 2)))

def test_cp1_normalization():
    p = CP1Point(np.array([2j, 2.0]))
    assert np.isclose(np.linalg.norm(p.w), 1.0)
    assert np.isclose(p.w[0].imag, 0.0) and p.w[0].real > 0
    # scaling does not change the point
    assert np.isclose(chordal_distance(p, CP1Point(np.array([-3.0, 3j]))), 0.0)

def test_affine_coordinate():
    p = CP1Point(np.array([[1.0 + 1j, 2.0], [1.0, 0.0]]))
    z = p.affine()
    assert np.isclose(z[0], 0.5 + 0.5j)
    assert np.isinf(z[1])

def test_cp1_rejects_zero():
    with pytest.raises(ValueError):
        CP1Point(np.zeros(2))

@pytest.mark.parametrize("a, b, d", [
    ([1, 0], [0, 1], 1.0),
    ([1, 0], [1, 0], 0.0),
    ([1, 1], [1, -1], 1.0)
])
def test_chordal_distance(a, b, d):
    assert np.isclose(chordal_distance(CP1Point(np.array(a)), CP1Point(np.array(b))), d)

def test_geodesic_endpoints_are_columns(rng):
    g = normalize_sl2(rng.normal(size=(4, 2, 2)) + 1j * rng.normal(size=(4, 2, 2)))
    line = geodesic_endpoints(unit_tangent_of_frame(g))
    expected = columns(g)
    assert np.allclose(chordal_distance(line.endpoint_plus, expected.endpoint_plus), 0.0, atol=1e-10)
    assert np.allclose(chordal_distance(line.endpoint_minus, expected.endpoint_minus), 0.0, atol=1e-10)
    line.check()

def test_three_point_map(rng):
    src, dst = random_points(rng, 3), random_points(rng, 3)
    m = three_point_map(src, dst)
    assert fit_residual(m, src, dst) < 1e-12

def test_fit_recovers_map(rng):
    m = MoebiusMap(rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2)))
    src = random_points(rng, 40)
    fit = moebius_fit(src, moebius_apply(m, src))
    assert fit_residual(fit, src, moebius_apply(m, src)) < 1e-12
    assert min(np.abs(fit.matrix - m.matrix).max(), np.abs(fit.matrix + m.matrix).max()) < 1e-8
    assert conjugation_distance(fit.matrix, m.matrix) < 1e-10

def test_fit_with_noisy_targets(rng):
    m = MoebiusMap(rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2)))
    src = random_points(rng, 20)
    dst = moebius_apply(m, src)
    noisy = CP1Point(dst.w + 1e-8 * (rng.normal(size=(20, 2)) + 1j * rng.normal(size=(20, 2))))
    assert fit_residual(m, src, noisy) < 1e-7
    fit = moebius_fit(src, noisy)
    assert conjugation_distance(fit.matrix, m.matrix) < 1e-6
    assert fit_residual(fit, src, dst) < 1e-6

def test_fit_rejects_coincident_points():
    src = CP1Point(np.tile(np.array([1.0, 0.5]), (5, 1)))
    with pytest.raises(DegenerateConfiguration):
        moebius_fit(src, src)

def test_fit_requires_three_pairs(rng):
    src = random_points(rng, 2)
    with pytest.raises(DegenerateConfiguration):
        moebius_fit(src, src)

def test_composition_and_inverse(rng):
    a = MoebiusMap(rng.normal(size=(2, 2)) + 1j)
    b = MoebiusMap(rng.normal(size=(2, 2)) - 1j)
    p = random_points(rng, 5)
    ab = moebius_apply(a @ b, p)
    assert np.allclose(chordal_distance(ab, moebius_apply(a, moebius_apply(b, p))), 0.0, atol=1e-12)
    assert np.allclose(chordal_distance(moebius_apply(a.inverse(), moebius_apply(a, p)), p), 0.0, atol=1e-12)

def test_fixed_points(rng):
    m = MoebiusMap(np.array([[2.0, 1.0], [0.0, 0.5]]))
    fixed = m.fixed_points()
    assert np.allclose(chordal_distance(moebius_apply(m, fixed), fixed), 0.0, atol=1e-12)

def test_conjugation_distance(rng):
    a = normalize_sl2(rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2)))
    g = normalize_sl2(rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2)))
    assert conjugation_distance(a, g @ a @ np.linalg.inv(g)) < 1e-12
    assert conjugation_distance(a, -a) < 1e-12
