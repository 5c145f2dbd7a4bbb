import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from e2class.core import I2, SIGMA, J, Subspace, dagger, expm2, ortho_complement, phi, phi_inv, rotation
from e2class.errors import BadDimension, IllConditioned, SingularMatrix, ZeroSubspace
from e2class.lorentz import lorentz_of
from e2class.orbits import (
    EtaType, OrbitClass, canonical_subspace, canonicalize_line, canonicalize_plane,
    classify_vector, eta_type_of, in_connected_stabilizer, stabilizer_membership,
    stabilizer_residual,
)

from conftest import random_gl, random_sym


@pytest.mark.parametrize("u, cls", [
    ((0, 0, 0), OrbitClass.PRESENT),
    ((0, 0, 1), OrbitClass.FUTURE),
    ((0, 0, -1), OrbitClass.PAST),
    ((1, 0, 1), OrbitClass.FUTURE_CONE),
    ((0, -1, -1), OrbitClass.PAST_CONE),
    ((0, 1, 0), OrbitClass.ELSEWHERE),
])
def test_classify_vector_representatives(u, cls):
    assert classify_vector(np.array(u, dtype=float)) is cls


def test_orbit_class_invariant_under_group(rng):
    for _ in range(300):
        u = rng.normal(size=3)
        m = lorentz_of(random_gl(rng))
        assert classify_vector(m @ u) is classify_vector(u)
    for base in ((1, 0, 1), (-1, 0, -1)):
        u = np.array(base, dtype=float)
        for _ in range(50):
            assert classify_vector(lorentz_of(random_gl(rng)) @ u) is classify_vector(u)


@pytest.mark.parametrize("sigma, et", [
    (SIGMA[1], EtaType.POS), (-SIGMA[1], EtaType.POS), (SIGMA[0], EtaType.NULL),
    (SIGMA[-1], EtaType.NEG), ([[5, 3], [3, 5]], EtaType.POS), ([[1, 2], [2, 1]], EtaType.NEG),
])
def test_eta_type(sigma, et):
    assert eta_type_of(np.array(sigma, dtype=float)) is et


def test_eta_type_gray_band_and_zero():
    with pytest.raises(IllConditioned):
        eta_type_of(np.diag([1.0, 5e-9]))
    assert eta_type_of(np.diag([1.0, 5e-10])) is EtaType.NULL
    assert eta_type_of(np.diag([1.0, 5e-8])) is EtaType.POS
    with pytest.raises(ZeroSubspace):
        eta_type_of(np.zeros((2, 2)))


def test_canonicalize_line_examples():
    c = canonicalize_line(Subspace.span([SIGMA[1]]))
    assert c.eta_type is EtaType.POS and np.allclose(c.conjugator, I2) and c.scale == pytest.approx(1)

    c = canonicalize_line(np.array([[0.0, 0.0], [0.0, 1.0]]))
    assert c.eta_type is EtaType.NULL
    assert np.allclose(c.conjugator, rotation(np.pi / 2))
    assert c.scale == pytest.approx(1)
    assert np.allclose(dagger(rotation(np.pi / 2), np.diag([0.0, 1.0])), SIGMA[0])

    sigma = np.array([[5.0, 3.0], [3.0, 5.0]])
    c = canonicalize_line(sigma)
    assert c.eta_type is EtaType.POS and c.scale == pytest.approx(1)
    # eigen-oracle: the square root squares back to sigma
    assert np.allclose(c.conjugator @ c.conjugator, sigma)
    assert np.allclose(dagger(c.conjugator, sigma), I2)


def test_canonicalize_line_rejects():
    with pytest.raises(BadDimension):
        canonicalize_line(Subspace.span([SIGMA[1], SIGMA[0]]))
    with pytest.raises(ZeroSubspace):
        canonicalize_line(np.zeros((2, 2)))


@given(st.integers(0, 2**32 - 1))
@settings(max_examples=100)
def test_canonicalize_line_random(seed):
    rng = np.random.default_rng(seed)
    sigma = random_sym(rng)
    try:
        c = canonicalize_line(sigma)
    except IllConditioned:
        return
    assert c.residual < 1e-8
    image = dagger(c.conjugator, sigma)
    assert Subspace.span([image]).distance(canonical_subspace(c.eta_type)) < 1e-8


@pytest.mark.parametrize("eta", [1, 0, -1])
def test_canonicalize_plane_round_trip(rng, eta):
    target = canonical_subspace(eta, plane=True)
    for _ in range(50):
        plane = target.act(random_gl(rng))
        c = canonicalize_plane(plane)
        assert c.eta_type is EtaType(eta)
        assert c.residual < 1e-8
        assert plane.act(c.conjugator).distance(target) < 1e-8


def test_canonicalize_plane_examples():
    c = canonicalize_plane(ortho_complement(Subspace.span([SIGMA[1]])))
    assert c.eta_type is EtaType.POS and np.allclose(c.conjugator, I2)
    plane = Subspace.span([SIGMA[1], np.diag([1.0, -1.0])])
    c = canonicalize_plane(plane)
    assert c.eta_type is EtaType.NEG
    assert plane.act(c.conjugator).distance(canonical_subspace(-1, plane=True)) < 1e-12
    with pytest.raises(BadDimension):
        canonicalize_plane(Subspace.span([SIGMA[1]]))


def test_stabilizer_examples():
    g = np.exp(0.4) * rotation(1.3)
    assert stabilizer_membership(EtaType.POS, g)
    assert stabilizer_membership(EtaType.NULL, np.array([[2.0, 0.0], [-3.0, 0.5]]))
    assert stabilizer_membership(EtaType.NEG, rotation(np.pi / 2))
    assert not in_connected_stabilizer(EtaType.NEG, rotation(np.pi / 2))
    assert in_connected_stabilizer(EtaType.NEG, np.diag([2.0, 3.0]))
    assert not stabilizer_membership(EtaType.NULL, np.array([[1.0, 1.0], [0.0, 1.0]]))
    assert not stabilizer_membership(EtaType.POS, np.diag([1.0, 2.0]))
    with pytest.raises(SingularMatrix):
        stabilizer_membership(EtaType.POS, np.zeros((2, 2)))


def test_stabilizer_from_generators(rng):
    for _ in range(100):
        g = expm2(rng.uniform(-1, 1) * I2 + rng.uniform(-3, 3) * J)
        assert stabilizer_residual(EtaType.POS, g) < 1e-12
        assert in_connected_stabilizer(EtaType.POS, g)


def test_classify_vector_tracks_phi():
    assert classify_vector(phi_inv(phi([0.5, 0.0, 0.5]))) is OrbitClass.FUTURE_CONE
