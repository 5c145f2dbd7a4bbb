"""Brute-force conjugacy search, independent of the classifier.

The search minimises ``group_distance(conjugate(a, g), b)`` over
``g = expm2(M) @ LAMBDA**k`` by random perturbation of ``M``. ``M`` ranges
over traceless matrices of Frobenius norm at most ``max_log_norm``: scalars
act trivially on both spans, and without a bound the infimum over the whole
group is not attained. Orbits of the action are not closed. For instance
``span{I, Y}`` conjugated by ``[[1, 0], [b, 1]]`` tends to ``span{I, X}``
as ``b`` grows, so an unbounded search would report two inequivalent groups
at distance zero.
"""

from dataclasses import dataclass

import numpy as np

from .core import DEFAULT_TOL, I2, LAMBDA, expm2, phi, phi_inv

__all__ = ["SearchConfig", "SearchResult", "group_distance", "conjugate", "search_conjugator"]

# traceless basis, orthonormal for the entrywise inner product
_SL2 = np.array([
    [[1.0, 0.0], [0.0, -1.0]],
    [[0.0, 1.0], [0.0, 0.0]],
    [[0.0, 0.0], [1.0, 0.0]],
]) / np.array([np.sqrt(2), 1.0, 1.0])[:, None, None]


@dataclass(frozen=True)
class SearchConfig:
    restarts: int = 200
    steps_per_restart: int = 500
    step_scale: float = 0.3
    seed: int = 0
    accept_tol: float = 1e-6
    max_log_norm: float = 1.0

    def __post_init__(self):
        if self.restarts < 1 or self.steps_per_restart < 1:
            raise ValueError("restarts and steps_per_restart must be positive")
        if not (self.step_scale > 0 and self.accept_tol > 0 and self.max_log_norm > 0):
            raise ValueError("step_scale, accept_tol and max_log_norm must be positive")

    def scaled(self, restarts):
        return SearchConfig(restarts, self.steps_per_restart, self.step_scale, self.seed,
                            self.accept_tol, self.max_log_norm)


@dataclass(frozen=True)
class SearchResult:
    conjugator: object  # ndarray or None
    distance: float
    restart: int


def conjugate(spec, g, tol=DEFAULT_TOL):
    return spec.conjugate(g, tol)


def group_distance(a, b):
    """Sum of projector distances of the ``Sigma`` spans and the algebra spans.

    Spans of different dimension are at distance at least 1.
    """
    return _span_dist(a.sigma.basis, b.sigma.basis) + _span_dist(a.h.basis, b.h.basis)


def _span_dist(u, v):
    pu = u.T @ u
    pv = v.T @ v
    return float(np.linalg.norm(pu - pv))


def _orthonormal_batch(rows):
    """Batched QR of ``(n, k, m)`` row stacks; returns orthonormal row bases."""
    q, _ = np.linalg.qr(np.swapaxes(rows, 1, 2))
    return np.swapaxes(q, 1, 2)


def _batch_distance(a, pb_sigma, pb_h, g):
    """Distance of ``a`` conjugated by each ``g[i]`` to the target projectors."""
    n = len(g)
    det = g[:, 0, 0] * g[:, 1, 1] - g[:, 0, 1] * g[:, 1, 0]
    gi = np.empty_like(g)
    gi[:, 0, 0], gi[:, 1, 1] = g[:, 1, 1] / det, g[:, 0, 0] / det
    gi[:, 0, 1], gi[:, 1, 0] = -g[:, 0, 1] / det, -g[:, 1, 0] / det

    s = phi(a.sigma.basis)  # (k, 2, 2)
    s_img = np.einsum("nji,kjl,nlm->nkim", gi, s, gi)  # g^{-T} s g^{-1}
    vs = phi_inv(s_img.reshape(-1, 2, 2)).reshape(n, len(s), 3)
    h = a.h.basis.reshape(-1, 2, 2)
    h_img = np.einsum("nij,kjl,nlm->nkim", g, h, gi).reshape(n, len(h), 4)
    qs = _orthonormal_batch(vs)
    qh = _orthonormal_batch(h_img)
    ps = np.einsum("nki,nkj->nij", qs, qs)
    ph = np.einsum("nki,nkj->nij", qh, qh)
    return (np.linalg.norm(ps - pb_sigma, axis=(1, 2))
            + np.linalg.norm(ph - pb_h, axis=(1, 2)))


def _clip(m, bound):
    norm = np.linalg.norm(m, axis=1, keepdims=True)
    return m * np.minimum(1.0, bound / np.maximum(norm, 1e-300))


def _matrices(coords, k):
    g = expm2(np.einsum("ni,ijk->njk", coords, _SL2))
    flip = k.astype(bool)
    g[flip] = g[flip] @ LAMBDA
    return g


def search_conjugator(a, b, cfg=SearchConfig(), tol=DEFAULT_TOL):
    """Randomised search for ``g`` with ``conjugate(a, g) = b``.

    Restarts run side by side; restart ``r`` draws from its own generator
    seeded by ``(cfg.seed, r)`` and restart 0 starts at the identity. Each
    step perturbs ``M`` by a Gaussian of the current step size, keeps the
    move if the distance drops, and grows or shrinks the step accordingly.
    A failed search returns ``conjugator=None`` with the best distance found.
    """
    if a.sigma.dim != b.sigma.dim or a.h.dim != b.h.dim:
        return SearchResult(None, group_distance(a, b), -1)
    n, steps = cfg.restarts, cfg.steps_per_restart
    # every restart draws its whole stream up front from its own generator
    start, noise, flips, k = [], [], [], []
    for r in range(n):
        rng = np.random.default_rng([cfg.seed, r])
        start.append(rng.uniform(-1, 1, 3))
        k.append(rng.integers(0, 2))
        noise.append(rng.normal(size=(steps, 3)))
        flips.append(rng.random(steps) < 0.05)
    coords = _clip(np.array(start), cfg.max_log_norm)
    k = np.array(k)
    coords[0], k[0] = 0.0, 0
    noise = np.stack(noise, axis=1)
    flips = np.stack(flips, axis=1)
    pb_s = b.sigma.basis.T @ b.sigma.basis
    pb_h = b.h.basis.T @ b.h.basis
    dist = _batch_distance(a, pb_s, pb_h, _matrices(coords, k))
    step = np.full(n, cfg.step_scale)
    for i in range(steps):
        if dist.min() < cfg.accept_tol:
            break
        trial = _clip(coords + noise[i] * step[:, None], cfg.max_log_norm)
        # an occasional flip of the discrete factor
        kt = np.where(flips[i], 1 - k, k)
        d = _batch_distance(a, pb_s, pb_h, _matrices(trial, kt))
        better = d < dist
        coords[better], k[better], dist[better] = trial[better], kt[better], d[better]
        step = np.where(better, step * 1.5, step * 0.8)
        # restart exhausted steps at the initial scale
        step = np.where(step < 1e-12, cfg.step_scale, np.minimum(step, 2 * cfg.max_log_norm))
    best = int(np.argmin(dist))
    g = _matrices(coords[best:best + 1], k[best:best + 1])[0]
    exact = group_distance(conjugate(a, g, tol), b)
    if exact < cfg.accept_tol:
        return SearchResult(g, exact, best)
    return SearchResult(None, float(min(exact, dist[best])), best)


def identity_distance(a, b):
    """Distance at ``g = I``; restart 0 of every search starts here."""
    return group_distance(conjugate(a, I2), b)
