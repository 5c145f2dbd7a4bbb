"""Orbits of ``R+ x O+(2, 1)`` on R^3 and canonical conjugators for lines
and planes of symmetric matrices.

A line ``span(sigma)`` is carried to one of the three representatives
``sigma_1 = I``, ``sigma_0 = diag(1, 0)``, ``sigma_-1 = [[0, 1], [1, 0]]``
according to the sign of ``det(sigma)``; a plane is carried to
``sigma_eta^perp`` through its orthogonal complement.
"""

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .core import (
    DEFAULT_TOL,
    SIGMA,
    Subspace,
    dagger,
    det2,
    eta,
    inv2,
    ortho_complement,
    phi_inv,
    rotation,
)
from .errors import BadDimension, IllConditioned, SingularMatrix, ZeroSubspace

__all__ = [
    "OrbitClass", "EtaType", "LineCanon", "classify_vector", "eta_type_of",
    "canonical_subspace", "canonicalize_line", "canonicalize_plane",
    "stabilizer_residual", "stabilizer_membership", "in_connected_stabilizer",
]


class OrbitClass(Enum):
    PRESENT = "Present"
    FUTURE = "Future"
    PAST = "Past"
    FUTURE_CONE = "FutureCone"
    PAST_CONE = "PastCone"
    ELSEWHERE = "Elsewhere"


class EtaType(Enum):
    POS = 1
    NULL = 0
    NEG = -1

    @property
    def label(self):
        return {1: "Pos", 0: "Null", -1: "Neg"}[self.value]


# |eta| below this fraction of |u|^2 counts as the light cone. Null vectors
# pushed through a few well-conditioned group elements drift to ~1e-11;
# a looser band would swallow generic vectors that a boost has pressed
# towards the cone, since |u|^2 is not invariant.
CONE_BAND = 1e-10


def classify_vector(u, tol=DEFAULT_TOL):
    """Orbit of ``u`` under positive scalings and orthochronous Lorentz maps."""
    u = np.asarray(u, dtype=float)
    n2 = float(u @ u)
    if n2 <= tol.det_floor ** 2:
        return OrbitClass.PRESENT
    e = float(eta(u))
    if abs(e) < CONE_BAND * (1 + n2):
        return OrbitClass.FUTURE_CONE if u[2] > 0 else OrbitClass.PAST_CONE
    if e < 0:
        return OrbitClass.ELSEWHERE
    return OrbitClass.FUTURE if u[2] > 0 else OrbitClass.PAST


# inside [rank, _GRAY * rank) the eigenvalue ratio is too close to the
# null threshold to call
_GRAY = 10.0


def eta_type_of(sigma, tol=DEFAULT_TOL):
    """Sign type of the line spanned by a nonzero symmetric matrix.

    The decision is made on the eigenvalue ratio ``|mu_min| / |mu_max|``,
    which is invariant under rescaling the generator.
    """
    mu = np.linalg.eigvalsh(np.asarray(sigma, dtype=float))
    big = np.max(np.abs(mu))
    if big <= tol.det_floor:
        raise ZeroSubspace("zero generator")
    ratio = np.min(np.abs(mu)) / big
    if ratio < tol.rank:
        return EtaType.NULL
    if ratio < _GRAY * tol.rank:
        raise IllConditioned(f"eigenvalue ratio {ratio:.3g} is too close to the null band")
    return EtaType.POS if mu[0] * mu[1] > 0 else EtaType.NEG


def canonical_subspace(eta_type, plane=False):
    """``span(sigma_eta)`` or its orthogonal complement."""
    line = Subspace.span([SIGMA[EtaType(eta_type).value]])
    return ortho_complement(line) if plane else line


@dataclass(frozen=True)
class LineCanon:
    """Result of canonicalising a line or plane.

    ``dagger(conjugator, sigma) = scale * sigma_eta`` for the (sign
    normalised) line generator; for planes ``scale`` is 1 and the relation
    holds between spans. ``residual`` is the projector distance between the
    image span and the representative span.
    """

    eta_type: EtaType
    conjugator: np.ndarray
    scale: float
    residual: float


def _sign_normalise(sigma, tol):
    v = phi_inv(sigma)
    n = np.linalg.norm(v)
    for c in (v[2], v[0], v[1]):
        if abs(c) > tol.rank * n:
            return sigma if c > 0 else -sigma
    return sigma


def _line_generator(line, tol):
    if isinstance(line, Subspace):
        if line.dim != 1:
            raise BadDimension(f"expected a line, got dim {line.dim}")
        return line.generators[0]
    s = np.asarray(line, dtype=float)
    if s.shape != (2, 2):
        raise BadDimension(f"expected a 2x2 symmetric matrix, got shape {s.shape}")
    if np.linalg.norm(s) <= tol.rank:
        raise ZeroSubspace("zero generator")
    return (s + s.T) / 2


def canonicalize_line(line, tol=DEFAULT_TOL):
    """Find ``g`` with ``dagger(g, sigma)`` proportional to ``sigma_eta``.

    ``line`` is a one-dimensional :class:`Subspace` or a raw symmetric
    matrix; a raw matrix is used as given (after sign normalisation), a
    subspace through its unit generator.
    """
    sigma = _sign_normalise(_line_generator(line, tol), tol)
    et = eta_type_of(sigma, tol)
    mu, q = np.linalg.eigh(sigma)
    if et is EtaType.POS:
        # symmetric square root; sigma is positive definite after normalising
        g = q @ np.diag(np.sqrt(mu)) @ q.T
    elif et is EtaType.NULL:
        k = q[:, int(np.argmin(np.abs(mu)))]
        if k[0] < 0 or (k[0] == 0 and k[1] < 0):
            k = -k
        # rotate the kernel direction onto e2
        g = rotation(np.pi / 2 - np.arctan2(k[1], k[0]))
    else:
        q = q[:, ::-1]  # positive eigenvalue first
        mu = mu[::-1]
        if np.linalg.det(q) < 0:
            q[:, 1] = -q[:, 1]
        g = rotation(np.pi / 4) @ np.diag(np.sqrt(np.abs(mu))) @ q.T
    image = dagger(g, sigma, tol)
    target = SIGMA[et.value]
    scale = float(np.sum(image * target) / np.sum(target * target))
    residual = float(np.linalg.norm(image - scale * target) / np.linalg.norm(image))
    return LineCanon(et, g, scale, residual)


def canonicalize_plane(plane, tol=DEFAULT_TOL):
    """Find ``g`` with ``dagger(g, plane) = sigma_eta^perp`` as spans.

    If ``g0`` canonicalises the orthogonal line then ``g = g0^{-T}`` does
    the plane, because ``(dagger(g, S))^perp = dagger(g^{-T}, S^perp)``.
    """
    if plane.dim != 2:
        raise BadDimension(f"expected a plane, got dim {plane.dim}")
    c = canonicalize_line(ortho_complement(plane, tol), tol)
    g = inv2(c.conjugator, tol).T
    residual = plane.act(g, tol).distance(canonical_subspace(c.eta_type, plane=True))
    return LineCanon(c.eta_type, g, 1.0, residual)


def stabilizer_residual(eta_type, g, tol=DEFAULT_TOL):
    """Relative distance of ``dagger(g, sigma_eta)`` from ``span(sigma_eta)``."""
    target = SIGMA[EtaType(eta_type).value]
    v = phi_inv(dagger(g, target, tol))
    u = phi_inv(target)
    u = u / np.linalg.norm(u)
    return float(np.linalg.norm(v - (u @ v) * u) / np.linalg.norm(v))


def stabilizer_membership(eta_type, g, tol=DEFAULT_TOL):
    """Whether ``g`` maps ``span(sigma_eta)`` to itself.

    This is the full stabilizer in GL(2, R); use
    :func:`in_connected_stabilizer` for the identity component.
    """
    if abs(det2(g)) <= tol.det_floor:
        raise SingularMatrix("stabilizer test needs an invertible matrix")
    return stabilizer_residual(eta_type, g, tol) <= tol.residual


def in_connected_stabilizer(eta_type, g, tol=DEFAULT_TOL):
    """Membership in the identity component ``H_eta`` of the stabilizer."""
    g = np.asarray(g, dtype=float)
    if not stabilizer_membership(eta_type, g, tol):
        return False
    et = EtaType(eta_type)
    if et is EtaType.POS:
        return bool(det2(g) > 0)
    cut = tol.residual * np.linalg.norm(g)
    return bool(g[0, 0] > cut and g[1, 1] > cut)
