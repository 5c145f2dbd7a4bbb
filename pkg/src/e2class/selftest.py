"""Small seeded property suites, run by ``e2class selftest``."""

import numpy as np

from .catalog import catalog, catalog_json, golden_catalog_text
from .classifier import classify, verify
from .core import DEFAULT_TOL, ETA_FORM, dagger, inner, phi, phi_inv
from .lorentz import iwasawa_sl2, lorentz_of
from .orbits import classify_vector

__all__ = ["SUITES", "run_selftest"]


def _unimodular(rng, cond_max=50.0):
    while True:
        g = rng.normal(size=(2, 2))
        d = np.linalg.det(g)
        if d > 0.05 and np.linalg.cond(g) < cond_max:
            return g / np.sqrt(d)


def _representation(rng, n):
    worst = 0.0
    for _ in range(n):
        g, h = _unimodular(rng), _unimodular(rng)
        worst = max(worst, np.max(np.abs(lorentz_of(g @ h) - lorentz_of(g) @ lorentz_of(h))))
    return worst < 1e-9, f"max |L(gh) - L(g)L(h)| = {worst:.2e}"


def _lorentz_form(rng, n):
    worst, future = 0.0, True
    for _ in range(n):
        m = lorentz_of(_unimodular(rng))
        worst = max(worst, np.max(np.abs(m.T @ ETA_FORM @ m - ETA_FORM)))
        future &= m[2, 2] > 0
    return worst < 1e-9 and future, f"max form defect {worst:.2e}"


def _iwasawa(rng, n):
    worst = 0.0
    for _ in range(n):
        g = _unimodular(rng)
        worst = max(worst, np.max(np.abs(iwasawa_sl2(g).matrix() - g)))
    return worst < 1e-10, f"max recomposition error {worst:.2e}"


def _orbits(rng, n):
    for _ in range(n):
        v = rng.normal(size=3)
        c = classify_vector(v)
        w = phi_inv(dagger(_unimodular(rng), phi(v)))
        if classify_vector(w * rng.uniform(0.5, 2)) is not c:
            return False, f"orbit changed for {v}"
    return True, f"{n} trajectories"


def _round_trip(rng, n):
    bad = 0
    for e in catalog():
        for _ in range(n):
            p = {k: {"alpha": rng.uniform(0, 2), "lambda": rng.uniform(-2, 2),
                     "beta": rng.uniform(-1, 1)}[k] for k in e.param_names}
            spec = e.spec(p or None).conjugate(_unimodular(rng))
            label, cert = classify(spec)
            ok = label.id == e.id and all(abs(label.params[k] - p[k]) < 1e-6 for k in p)
            bad += not (ok and verify(spec, label, cert).passed)
    return bad == 0, f"{bad} failures over {26 * n} conjugates"


def _duality(rng, n):
    worst = 0.0
    for _ in range(n):
        h = _unimodular(rng)
        s = rng.normal(size=(2, 2))
        t = rng.normal(size=(2, 2))
        s, t = s + s.T, t + t.T
        worst = max(worst, abs(inner(dagger(h.T, t), s) - inner(dagger(h, s), t)))
    return worst < 1e-10, f"max pairing defect {worst:.2e}"


def _golden(rng, n):
    return catalog_json() == golden_catalog_text(), "table matches catalog.json"


SUITES = {
    "representation": _representation,
    "lorentz-form": _lorentz_form,
    "iwasawa": _iwasawa,
    "orbits": _orbits,
    "round-trip": _round_trip,
    "duality": _duality,
    "golden-catalog": _golden,
}


def run_selftest(seed=0, n=20, tol=DEFAULT_TOL):
    """``[(suite, passed, detail)]``; deterministic for a fixed ``seed``."""
    out = []
    for i, (name, fn) in enumerate(SUITES.items()):
        rng = np.random.default_rng([seed, i])
        passed, detail = fn(rng, n)
        out.append((name, bool(passed), detail))
    return out
