import numpy as np
import pytest

from e2class.catalog import entry, representatives
from e2class.classifier import Certificate, classify, verify
from e2class.core import LAMBDA, expm2
from e2class.oracle import SearchConfig, conjugate, group_distance, search_conjugator

from conftest import random_gl


def random_small_conjugator(rng, radius=0.8):
    m = rng.normal(size=(2, 2))
    m -= np.trace(m) / 2 * np.eye(2)
    m *= radius * rng.uniform(0.2, 1) / np.linalg.norm(m)
    g = expm2(m)
    return g @ LAMBDA if rng.random() < 0.5 else g


def test_config_validation():
    with pytest.raises(ValueError):
        SearchConfig(restarts=0)
    with pytest.raises(ValueError):
        SearchConfig(step_scale=-1)
    c = SearchConfig()
    assert (c.restarts, c.steps_per_restart, c.step_scale, c.accept_tol) == (200, 500, 0.3, 1e-6)


def test_group_distance_examples(rng):
    a = entry("L2.4").spec()
    assert group_distance(a, a) == 0
    # same Sigma; the unit algebra generators X and (I + X)/sqrt(3) have
    # cosine 1/sqrt(3), so the projector distance is sqrt(2) * sqrt(2/3)
    assert group_distance(a, entry("L2.5").spec()) == pytest.approx(2 / np.sqrt(3))
    spec = entry("L3.12").spec({"beta": 0.3}).conjugate(random_gl(rng))
    _, cert = classify(spec)
    assert group_distance(conjugate(spec, cert.conjugator), entry("L3.12").spec({"beta": 0.3})) < 1e-8


def test_group_distance_is_a_pseudometric(rng):
    specs = [spec.conjugate(random_gl(rng, 10)) for _, spec in representatives()]
    specs = [s for s in specs if s.sigma.dim == 1 and s.h.dim == 1]
    for a in specs[:5]:
        for b in specs[:5]:
            assert group_distance(a, b) == pytest.approx(group_distance(b, a))
            for c in specs[:5]:
                assert group_distance(a, c) <= group_distance(a, b) + group_distance(b, c) + 1e-12


def test_identity_found_at_step_zero():
    a = entry("L3.5").spec()
    r = search_conjugator(a, a, SearchConfig(restarts=3, steps_per_restart=1))
    assert r.restart == 0 and np.array_equal(r.conjugator, np.eye(2)) and r.distance < 1e-15


def test_finds_random_conjugates(rng):
    found = 0
    trials = 40
    reps = representatives()
    for i in range(trials):
        _, b = reps[rng.integers(len(reps))]
        a = b.conjugate(random_small_conjugator(rng))
        r = search_conjugator(a, b, SearchConfig(seed=i))
        if r.conjugator is not None:
            found += 1
            assert group_distance(conjugate(a, r.conjugator), b) < 1e-6
    assert found >= 0.95 * trials


def test_sound_results_pass_verify(rng):
    e = entry("L2.3")
    b = e.spec({"lambda": -0.5})
    a = b.conjugate(random_small_conjugator(rng))
    r = search_conjugator(a, b, SearchConfig(seed=1))
    assert r.conjugator is not None
    rep = verify(a, e.label({"lambda": -0.5}), Certificate(r.conjugator, 0, 0))
    assert rep.residual_sigma + rep.residual_h < SearchConfig().accept_tol


def test_plane_groups_are_not_conjugate():
    r = search_conjugator(entry("L3.5").spec(), entry("L3.6").spec())
    assert r.conjugator is None and r.distance > 0.05


def test_different_dimensions_short_circuit():
    r = search_conjugator(entry("L3.1").spec(), entry("L3.2").spec())
    assert r.conjugator is None and r.distance >= 1


def test_deterministic_for_fixed_seed():
    a, b = entry("L2.1").spec({"alpha": 1.0}), entry("L2.2").spec()
    cfg = SearchConfig(restarts=20, steps_per_restart=50, seed=7)
    assert search_conjugator(a, b, cfg) == search_conjugator(a, b, cfg)


@pytest.mark.slow
def test_no_cross_label_conjugacy_at_scaled_budget():
    reps = representatives()
    cfg = SearchConfig(restarts=50, seed=3)
    for (la, a) in reps:
        for (lb, b) in reps:
            if la.id == lb.id:
                continue
            r = search_conjugator(a, b, cfg)
            assert r.conjugator is None, (la.id, lb.id)
            assert r.distance > 0.05, (la.id, lb.id, r.distance)
