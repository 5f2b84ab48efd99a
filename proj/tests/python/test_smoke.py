import math

import numpy as np
import pytest

import gzmat


REF = np.array([[1, 2], [3, 4]], dtype=complex)


def test_phi_reference():
    values = gzmat.phi(REF)
    assert np.allclose(values, [1, -2, 5])


def test_invert_phi_reference():
    x = gzmat.invert_phi([1, -2, 5])
    assert np.allclose(x, [[1, 6], [1, 4]])
    assert np.allclose(gzmat.phi(x), [1, -2, 5])


def test_invert_with_subdiag_keeps_coordinates():
    x = gzmat.invert_phi_with_subdiag([1, -2, 5], [2.0])
    assert np.isclose(x[1, 0], 2.0)
    assert np.allclose(gzmat.phi(x), [1, -2, 5])


def test_flow_reference():
    y = gzmat.flow(REF, 1, 1, 1.0)
    assert np.isclose(y[0, 1], 2 * math.e)
    assert np.isclose(y[1, 0], 3 / math.e)
    assert np.isclose(y[0, 0], 1.0) and np.isclose(y[1, 1], 4.0)


def test_act_matches_flow_composition():
    rng = np.random.default_rng(5)
    x = rng.normal(size=(3, 3)) * 0.4 + 1j * rng.normal(size=(3, 3)) * 0.4
    levels = [[0.3 + 0.1j], [0.2 - 0.4j, -0.1 + 0.2j]]
    y = gzmat.act(x, levels)
    z = gzmat.flow(x, 1, 1, levels[0][0])
    z = gzmat.flow(z, 1, 2, levels[1][0])
    z = gzmat.flow(z, 2, 2, levels[1][1])
    assert np.allclose(y, z, atol=1e-8)
    assert np.allclose(gzmat.phi(y), gzmat.phi(x), atol=1e-8)


def test_regularity():
    assert gzmat.is_strongly_regular(REF)
    assert gzmat.orbit_dim(REF) == gzmat.d(1)
    diag = np.diag([1.0 + 0j, 2.0, 3.0])
    assert not gzmat.is_strongly_regular(diag)
    assert gzmat.orbit_dim(diag) == 0


def test_normal_form_roundtrip():
    canonical, levels = gzmat.normal_form(REF)
    section_t = gzmat.invert_phi(gzmat.phi(REF)).T
    assert np.allclose(canonical, section_t, atol=1e-8)
    assert np.allclose(gzmat.act(REF, levels), canonical, atol=1e-8)


def test_beta_roundtrip():
    u = gzmat.beta(REF)
    assert np.isclose(u[0, 1], 2.0)
    back = gzmat.beta_inverse(gzmat.phi(REF), u)
    assert np.allclose(back, REF, atol=1e-8)


def test_symmetric_fiber_reference_tower():
    r = math.sqrt(2.0)
    # Tower {0}, {-1, 1}, {-r, 0, r} in coordinates.
    values = [0, -1, 0, 0, -2, 0]
    members = gzmat.symmetric_fiber(values)
    assert len(members) == 8
    assert sum(1 for m in members if m["jacobi"]) == 4
    x_ref = np.array([[0, 1, 0], [1, 0, 1], [0, 1, 0]], dtype=complex)
    best = min(np.abs(m["matrix"] - x_ref).max() for m in members)
    assert best < 1e-10
    assert [m["sign_index"] for m in members] == list(range(8))


def test_symmetric_fiber_rejects_shared_spectrum():
    with pytest.raises(gzmat.DomainError):
        gzmat.symmetric_fiber([1, 2, 3])  # diag(1,2): levels share 1


def test_jacobi_bridge():
    j = gzmat.jacobi_matrix([-1.0, 0.0, 1.0], [0.25, 0.5, 0.25], 3)
    assert np.isclose(j[0, 1], 1 / math.sqrt(2.0))
    assert gzmat.verify_monic_match([-1.0, 0.0, 1.0], [0.25, 0.5, 0.25], 2)
    eigs = np.sort(np.linalg.eigvals(j).real)
    assert np.allclose(eigs, [-1, 0, 1], atol=1e-10)


def test_tower_ordering():
    levels = gzmat.tower(REF)
    assert len(levels) == 2
    assert np.isclose(levels[0][0], 1.0)
    assert levels[1][0].real < levels[1][1].real


def test_exact_commutativity():
    assert gzmat.verify_gz_commutativity(2)
    assert gzmat.verify_gz_commutativity(3)


def test_selftest_small():
    results = gzmat.selftest(seed=7, n_max=2)
    assert len(results) == 12
    assert all(r["pass"] for r in results)
