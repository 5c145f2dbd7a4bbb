"""Classification of class-E_2 groups up to GL(2, R) conjugation.

``classify`` runs three steps:

1. move ``Sigma`` to ``span(sigma_eta)`` or ``sigma_eta^perp``;
2. move the algebra, which now sits in the stabilizer algebra, to a normal
   form by a second conjugator that fixes the canonical ``Sigma``;
3. read the label off ``(eta, line or plane, family)``.

Plane inputs are handled on the line side by transposing the algebra; a
conjugator ``g'`` found there becomes ``g'^{-T}`` on the plane side.
"""

from dataclasses import dataclass, field

import numpy as np

from .catalog import CanonicalLabel, entry, lookup
from .core import (
    DEFAULT_TOL,
    ETA_FORM,
    I2,
    LAMBDA,
    bracket,
    det2,
    inv2,
    phi_inv,
)
from .errors import DimensionOutOfScope, E2Error, NotClosed, NotInvariant
from .orbits import canonicalize_line, canonicalize_plane
from .subalgebras import (
    Family,
    check_invariance,
    closure_residual,
    normalize,
)

__all__ = [
    "Certificate", "InvariantVector", "VerifyReport",
    "classify", "verify", "invariants",
]


@dataclass(frozen=True)
class Certificate:
    """A conjugator carrying the input onto the catalog representative."""

    conjugator: np.ndarray
    residual_sigma: float
    residual_h: float


@dataclass(frozen=True)
class InvariantVector:
    dim_sigma: int
    eta_inertia: tuple
    dim_h: int
    dim_derived: int
    dim_traceless: int
    family: str
    params: dict = field(default_factory=dict)

    def discrete(self):
        return (self.dim_sigma, self.eta_inertia, self.dim_h, self.dim_derived,
                self.dim_traceless, self.family)

    def close_to(self, other, param_tol=DEFAULT_TOL.param_tol):
        if self.discrete() != other.discrete() or set(self.params) != set(other.params):
            return False
        return all(abs(self.params[k] - other.params[k]) <= param_tol * max(1.0, abs(self.params[k]))
                   for k in self.params)


@dataclass(frozen=True)
class VerifyReport:
    passed: bool
    residual_sigma: float
    residual_h: float
    messages: tuple = ()

    def to_dict(self):
        return {
            "passed": self.passed,
            "residuals": {"sigma": self.residual_sigma, "h": self.residual_h},
            "messages": list(self.messages),
        }


def _check_spec(spec, tol):
    if spec.sigma.dim == 3:
        raise DimensionOutOfScope("Sigma is all of Sym(2, R); only lines and planes are classified")
    worst, pair = closure_residual(spec.h)
    if worst > tol.residual:
        raise NotClosed(f"bracket of basis elements {pair} leaves the span by {worst:.3g}",
                        pair=pair, residual=worst)
    if not check_invariance(spec.sigma, spec.h, tol):
        raise NotInvariant("the algebra does not preserve Sigma")


def _residuals(spec, label, g, tol):
    rep = entry(label.id).spec(label.params, tol)
    image = spec.conjugate(g, tol)
    return image.sigma.distance(rep.sigma), image.h.distance(rep.h)


def _clean_params(family, params):
    out = dict(params)
    if "beta" in out:
        out["beta"] = float(np.clip(out["beta"], -1.0, 1.0))
    if "alpha" in out:
        out["alpha"] = abs(out["alpha"])
    return out


def _pipeline(spec, tol):
    plane = spec.sigma.dim == 2
    canon = canonicalize_plane(spec.sigma, tol) if plane else canonicalize_line(spec.sigma, tol)
    g1 = canon.conjugator
    pushed = spec.h.conjugate(g1, tol)
    if plane:
        nf = normalize(canon.eta_type, pushed.transpose(), tol)
        g2 = inv2(nf.conjugator, tol).T
    else:
        nf = normalize(canon.eta_type, pushed, tol)
        g2 = nf.conjugator
        if nf.family is Family.ROT_DIL:
            # the listed generator is I - alpha J; LAMBDA maps I + alpha J onto it
            g2 = LAMBDA @ g2
    e = lookup(canon.eta_type, plane, nf.family)
    params = _clean_params(nf.family, nf.params)
    return CanonicalLabel(e.id, e.dim, params), g2 @ g1


def classify(spec, tol=DEFAULT_TOL):
    """Label and certificate of a class-E_2 group.

    Raises ``DimensionOutOfScope`` if ``Sigma`` is three-dimensional,
    ``NotClosed``/``NotInvariant`` for invalid specs and ``IllConditioned``
    when the sign type of ``Sigma`` cannot be decided.
    """
    _check_spec(spec, tol)
    label, g = _pipeline(spec, tol)
    rs, rh = _residuals(spec, label, g, tol)
    # inputs already in canonical position keep the identity
    rs0, rh0 = _residuals(spec, label, I2, tol)
    if max(rs0, rh0) <= tol.residual:
        g, rs, rh = I2.copy(), rs0, rh0
    return label, Certificate(g, rs, rh)


def verify(spec, label, cert, tol=DEFAULT_TOL):
    """Recompute the certificate residuals from scratch.

    Never raises for bad certificates; problems are listed in the report.
    """
    msgs = []
    try:
        e = entry(label.id)
        params = e.check_params(label.params)
        if e.dim != spec.dim:
            msgs.append(f"dimension {spec.dim} does not match {label.id} ({e.dim})")
        g = np.asarray(cert.conjugator, dtype=float)
        if g.shape != (2, 2) or abs(det2(g)) <= tol.det_floor:
            return VerifyReport(False, np.inf, np.inf, tuple(msgs + ["conjugator is singular"]))
        rs, rh = _residuals(spec, CanonicalLabel(e.id, e.dim, params), g, tol)
    except E2Error as exc:
        return VerifyReport(False, np.inf, np.inf, tuple(msgs + [str(exc)]))
    if not rs < tol.residual:
        msgs.append(f"Sigma residual {rs:.3g} exceeds {tol.residual:.3g}")
    if not rh < tol.residual:
        msgs.append(f"algebra residual {rh:.3g} exceeds {tol.residual:.3g}")
    return VerifyReport(not msgs, float(rs), float(rh), tuple(msgs))


def _inertia(sigma, tol):
    b = phi_inv(np.asarray(sigma.generators))
    gram = b @ ETA_FORM @ b.T
    mu = np.linalg.eigvalsh(gram)
    cut = tol.rank
    return (int(np.sum(mu > cut)), int(np.sum(mu < -cut)), int(np.sum(np.abs(mu) <= cut)))


def _rank(mats, tol):
    if not len(mats):
        return 0
    s = np.linalg.svd(np.asarray(mats).reshape(len(mats), 4), compute_uv=False)
    return int(np.sum(s > tol.rank * max(1.0, s[0])))


def invariants(spec, tol=DEFAULT_TOL):
    """Conjugation invariants of a spec.

    The discrete part is computed without the classifier: the signature of
    the Lorentz form on ``Sigma`` and three dimensions attached to the
    algebra. ``family`` and ``params`` come from :func:`classify`.
    """
    gens = spec.h.generators
    brackets = [bracket(gens[i], gens[j]) for i in range(len(gens)) for j in range(i + 1, len(gens))]
    traces = np.array([np.trace(a) for a in gens])
    traceless = spec.h.dim - (1 if np.linalg.norm(traces) > tol.residual else 0)
    label, _ = classify(spec, tol)
    family = entry(label.id).family.value
    return InvariantVector(
        dim_sigma=spec.sigma.dim,
        eta_inertia=_inertia(spec.sigma, tol),
        dim_h=spec.h.dim,
        dim_derived=_rank(brackets, tol),
        dim_traceless=traceless,
        family=family,
        params=dict(label.params),
    )
