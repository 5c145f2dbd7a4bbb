"""The projective Lorentz representation of GL(2, R) on R^3.

``lorentz_of(g)`` is the matrix of ``v -> phi_inv(dagger(g, phi(v)))`` in the
coordinates ``(x, y, t)``. Its kernel is ``{+I, -I}``, scalars map to
``lambda**-2 * I``, and the image is ``R+ x O+(2, 1)``.
"""

from dataclasses import dataclass

import numpy as np

from .core import DEFAULT_TOL, ETA_FORM, det2, inv2, phi, phi_inv, rotation
from .errors import NotUnimodular

__all__ = [
    "IwasawaSL2", "lorentz_of", "iwasawa_sl2", "iwasawa_factor",
    "lorentz_iwasawa", "is_orthochronous_scaled",
]

_BASIS = np.eye(3)


def lorentz_of(g, tol=DEFAULT_TOL):
    """3x3 matrix of the dagger action of ``g`` in Lorentz coordinates."""
    gi = inv2(g, tol)
    images = gi.T @ phi(_BASIS) @ gi
    return phi_inv(images).T


@dataclass(frozen=True)
class IwasawaSL2:
    """Parameters of ``g = N(t) A(s) K(theta)``.

    ``N(t) = [[1, 0], [t, 1]]``, ``A(s) = diag(e^{s/2}, e^{-s/2})`` and
    ``K(theta)`` is the rotation by ``theta / 2``. ``theta`` lies in
    ``[0, 4 pi)`` so that every element of SL(2, R), not only its image in
    PSL(2, R), is reached.
    """

    t: float
    s: float
    theta: float

    def matrix(self):
        return (iwasawa_factor("N", self.t) @ iwasawa_factor("A", self.s)
                @ iwasawa_factor("K", self.theta))


def iwasawa_factor(kind, param):
    """The SL(2, R) shear, dilation or half-angle rotation."""
    if kind == "N":
        return np.array([[1.0, 0.0], [param, 1.0]])
    if kind == "A":
        return np.diag([np.exp(param / 2), np.exp(-param / 2)])
    if kind == "K":
        return rotation(param / 2)
    raise ValueError(f"unknown Iwasawa factor {kind!r}")


def iwasawa_sl2(g, tol=DEFAULT_TOL):
    """Decompose a unimodular ``g`` as shear * dilation * rotation.

    The split is ``g = L Q`` with ``L`` lower triangular, positive diagonal,
    and ``Q`` orthogonal, obtained by Gram-Schmidt on the rows of ``g``.
    """
    g = np.asarray(g, dtype=float)
    d = det2(g)
    if abs(d - 1) >= tol.residual:
        raise NotUnimodular(f"det g = {d!r} differs from 1")
    r0 = g[0]
    l11 = float(np.hypot(r0[0], r0[1]))
    q0 = r0 / l11
    q1 = np.array([-q0[1], q0[0]])  # completes q0 to a rotation
    l21 = float(g[1] @ q0)
    s = 2 * np.log(l11)
    t = l21 / l11
    half = np.arctan2(q1[0], q0[0])  # rotation angle theta/2 of Q = [[c, -s], [s, c]]
    theta = float(np.mod(2 * half, 4 * np.pi))
    return IwasawaSL2(t=t, s=float(s), theta=theta)


def lorentz_iwasawa(kind, param):
    """Lorentz image of one Iwasawa factor of SL(2, R).

    * ``"K"`` gives the rotation by ``param`` in the ``(x, y)`` plane,
    * ``"A"`` a boost in the ``(x, t)`` plane with ``cosh`` on the diagonal,
    * ``"N"`` the parabolic element fixing ``(1, 0, 1)``.
    """
    return lorentz_of(iwasawa_factor(kind, param))


def is_orthochronous_scaled(m, tol=DEFAULT_TOL):
    """Whether ``m`` is a positive multiple of an orthochronous Lorentz matrix."""
    m = np.asarray(m, dtype=float)
    q = m.T @ ETA_FORM @ m
    rho2 = q[2, 2]
    if not rho2 > 0:
        return False
    if np.max(np.abs(q - rho2 * ETA_FORM)) > tol.residual * rho2:
        return False
    return bool(m[2, 2] > 0)
