import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from e2class.catalog import DUAL, CanonicalLabel, GroupSpec, catalog, entry
from e2class.classifier import Certificate, classify, invariants, verify
from e2class.core import I2, SIGMA, J, Subalgebra, Subspace, X, ortho_complement
from e2class.errors import DimensionOutOfScope, IllConditioned, NotClosed, NotInvariant

from conftest import random_gl

GRID = {
    "alpha": (0.0, 0.5, 1.0, 2.0),
    "lambda": (-1.0, -0.5, 0.0, 0.5, 1.0, 2.0),
    "beta": (-1.0, -0.5, 0.0, 0.5, 1.0),
}


def random_params(e, rng):
    ranges = {"alpha": (0, 3), "lambda": (-3, 3), "beta": (-1, 1)}
    return {n: float(rng.uniform(*ranges[n])) for n in e.param_names}


def grid_points(e):
    names = e.param_names
    for values in itertools.product(*(GRID[n] for n in names)):
        yield dict(zip(names, values))


def test_full_stabilizer_of_identity_line():
    spec = GroupSpec.from_generators([I2], [I2, [[0, -1], [1, 0]]])
    label, cert = classify(spec)
    assert label.id == "L3.1" and label.params == {}
    assert np.array_equal(cert.conjugator, I2)


def test_scalar_dilations_on_null_line():
    label, _ = classify(GroupSpec.from_generators([SIGMA[0]], [I2]))
    assert label.id == "L2.6"


def test_rotations_on_identity_line():
    label, _ = classify(GroupSpec.from_generators([I2], [[[0, -1], [1, 0]]]))
    assert label.id == "L2.2"


def test_random_conjugate_of_diag_beta(rng):
    spec = entry("L2.7").spec({"beta": 0.5})
    for _ in range(20):
        label, cert = classify(spec.conjugate(random_gl(rng, 50)))
        assert label.id == "L2.7"
        assert label.params["beta"] == pytest.approx(0.5, abs=1e-6)
        assert max(cert.residual_sigma, cert.residual_h) < 1e-8


@pytest.mark.parametrize("e", catalog(), ids=lambda e: e.id)
def test_round_trip(e, rng):
    for _ in range(30):
        p = random_params(e, rng)
        spec = e.spec(p or None).conjugate(random_gl(rng, 100))
        label, cert = classify(spec)
        assert label.id == e.id
        for k in p:
            assert label.params[k] == pytest.approx(p[k], rel=1e-6, abs=1e-6)
        assert max(cert.residual_sigma, cert.residual_h) < 1e-8
        assert verify(spec, label, cert).passed


@pytest.mark.parametrize("e", catalog(), ids=lambda e: e.id)
def test_catalog_inputs_keep_identity(e):
    label, cert = classify(e.spec())
    assert label.id == e.id
    assert np.array_equal(cert.conjugator, I2)


def test_sign_of_alpha_is_absorbed():
    # I + alpha J and I - alpha J are conjugate by LAMBDA
    for sigma in ([I2], [[[1, 0], [0, -1]], [[0, 1], [1, 0]]]):
        for gen in (I2 + 0.7 * J, I2 - 0.7 * J):
            label, _ = classify(GroupSpec.from_generators(sigma, [gen]))
            assert label.params["alpha"] == pytest.approx(0.7)


def test_errors():
    full = [np.diag([1.0, 0.0]), np.diag([0.0, 1.0]), [[0, 1], [1, 0]]]
    with pytest.raises(DimensionOutOfScope):
        classify(GroupSpec.from_generators(full, [I2]))
    with pytest.raises(NotInvariant):
        classify(GroupSpec(Subspace.span([I2]), Subalgebra.span([X])))
    with pytest.raises(NotClosed):
        classify(GroupSpec(Subspace.span([I2]), Subalgebra.span([X, J])))
    with pytest.raises(IllConditioned):
        classify(GroupSpec.from_generators([np.diag([1.0, 5e-9])], [I2]))


def test_verify_detects_tampering(rng):
    spec = entry("L2.7").spec({"beta": 0.5}).conjugate(random_gl(rng, 20))
    label, cert = classify(spec)
    g = cert.conjugator.copy()
    g[1, 0] += 0.1
    report = verify(spec, label, Certificate(g, 0.0, 0.0))
    assert not report.passed and max(report.residual_sigma, report.residual_h) > 1e-3


def test_every_label_has_a_failing_tamper(rng):
    # a perturbed conjugator may stay in the normalizer of the representative
    # (for L5.1 every upper triangular change does), so ask for one failing entry
    for e in catalog():
        spec = e.spec().conjugate(random_gl(rng, 20))
        label, cert = classify(spec)
        worst = 0.0
        for i, j in itertools.product(range(2), range(2)):
            g = cert.conjugator.copy()
            g[i, j] += 0.1 * np.linalg.norm(g)
            r = verify(spec, label, Certificate(g, 0.0, 0.0))
            worst = max(worst, r.residual_sigma, r.residual_h)
        assert worst > 1e-3, e.id


def test_verify_detects_wrong_label():
    spec = entry("L3.5").spec()
    label, cert = classify(spec)
    assert verify(spec, label, cert).passed
    wrong = CanonicalLabel("L3.6", 3, {})
    report = verify(spec, wrong, cert)
    assert not report.passed and report.residual_h > 0.1


def test_verify_reports_instead_of_raising():
    spec = entry("L2.7").spec()
    assert not verify(spec, CanonicalLabel("L2.7", 2, {"beta": 3.0}), Certificate(I2, 0, 0)).passed
    assert not verify(spec, CanonicalLabel("L2.7", 2, {"beta": 0.5}), Certificate(np.zeros((2, 2)), 0, 0)).passed
    assert not verify(spec, CanonicalLabel("L3.7", 3, {"lambda": 0.5}), Certificate(I2, 0, 0)).passed


def test_invariants_examples():
    v = invariants(entry("L3.3").spec())
    assert (v.dim_sigma, v.eta_inertia, v.dim_h, v.dim_derived, v.dim_traceless) == (2, (0, 2, 0), 1, 0, 1)
    assert invariants(entry("L2.1").spec({"alpha": 0.0})).dim_traceless == 0
    assert invariants(entry("L2.2").spec()).dim_traceless == 1
    assert invariants(entry("L5.1").spec()).dim_derived == 1


@pytest.mark.parametrize("eta, line, plane", [
    (1, (1, 0, 0), (0, 2, 0)), (0, (0, 0, 1), (0, 1, 1)), (-1, (0, 1, 0), (1, 1, 0)),
])
def test_eta_inertia(eta, line, plane, rng):
    e = next(x for x in catalog() if x.eta_type.value == eta and not x.plane)
    d = entry(DUAL[e.id])
    for _ in range(10):
        g = random_gl(rng, 50)
        assert invariants(e.spec().conjugate(g)).eta_inertia == line
        assert invariants(d.spec().conjugate(g)).eta_inertia == plane


def test_invariants_are_conjugation_invariant(rng):
    for e in catalog():
        spec = e.spec()
        ref = invariants(spec)
        for _ in range(5):
            assert invariants(spec.conjugate(random_gl(rng, 100))).close_to(ref)


def test_invariant_vectors_separate_the_grid():
    seen = []
    for e in catalog():
        for p in grid_points(e):
            seen.append((e.id, p, invariants(e.spec(p or None))))
    for (ia, pa, va), (ib, pb, vb) in itertools.combinations(seen, 2):
        assert not va.close_to(vb), (ia, pa, ib, pb)


def test_certificate_completeness(rng):
    entries = catalog()
    for _ in range(1000):
        e = entries[rng.integers(len(entries))]
        spec = e.spec(random_params(e, rng) or None).conjugate(random_gl(rng, 100))
        label, cert = classify(spec)
        assert verify(spec, label, cert).passed


@pytest.mark.parametrize("e", catalog(), ids=lambda e: e.id)
def test_duality_symmetry(e, rng):
    for _ in range(10):
        p = random_params(e, rng)
        spec = e.spec(p or None).conjugate(random_gl(rng, 50))
        twin = GroupSpec(ortho_complement(spec.sigma), spec.h.transpose())
        label, _ = classify(twin)
        assert label.id == DUAL[e.id]
        for k in p:
            assert label.params[k] == pytest.approx(p[k], rel=1e-6, abs=1e-6)


@given(st.integers(0, 2**32 - 1))
@settings(max_examples=200, deadline=None)
def test_classification_is_conjugation_invariant(seed):
    rng = np.random.default_rng(seed)
    entries = catalog()
    e = entries[rng.integers(len(entries))]
    spec = e.spec(random_params(e, rng) or None).conjugate(random_gl(rng, 30))
    a, _ = classify(spec)
    b, _ = classify(spec.conjugate(random_gl(rng, 30)))
    assert a.id == b.id
    for k in a.params:
        assert a.params[k] == pytest.approx(b.params[k], rel=1e-6, abs=1e-6)
