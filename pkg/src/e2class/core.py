"""Symmetric 2x2 matrices, the Lorentz coordinates on them, and the
GL(2,R) action ``h . sigma = h^{-T} sigma h^{-1}``.

Conventions
-----------
* A symmetric matrix (``Sym2``) is a ``(2, 2)`` float array, a group or
  algebra element (``Mat2``) likewise; a Lorentz vector (``Vec3``) is a
  length-3 array ordered ``(x, y, t)`` with time last.
* ``phi(x, y, t) = [[t + x, y], [y, t - x]]`` is an isometry from
  Euclidean R^3 onto Sym(2, R) with the inner product ``tr(s t) / 2``, so
  Lorentz coordinates double as orthonormal coordinates on Sym(2, R).
"""

from dataclasses import dataclass

import numpy as np

from .errors import (
    BadDimension,
    NegativeDeterminant,
    SingularMatrix,
    ZeroAlgebra,
    ZeroSubspace,
)

__all__ = [
    "Tolerances", "DEFAULT_TOL", "Subspace", "Subalgebra",
    "I2", "J", "X", "Y", "Z", "LAMBDA", "QUARTER_TURN", "ETA_FORM", "SIGMA",
    "rotation", "phi", "phi_inv", "inner", "eta", "dagger",
    "dagger_derivative", "bracket", "ad", "inv2", "det2",
    "ortho_complement", "expm2", "langlands_factor",
    "projector", "projector_distance",
]


@dataclass(frozen=True)
class Tolerances:
    """Numerical thresholds shared by every decision in the package.

    ``rank`` is relative: a singular value counts as nonzero when it exceeds
    ``rank * max(1, largest singular value)``.
    """

    rank: float = 1e-9
    residual: float = 1e-8
    det_floor: float = 1e-12
    param_tol: float = 1e-6

    def __post_init__(self):
        for name in ("rank", "residual", "det_floor", "param_tol"):
            if not getattr(self, name) > 0:
                raise ValueError(f"tolerance {name!r} must be strictly positive")


DEFAULT_TOL = Tolerances()

I2 = np.eye(2)
# rotation generator taken from the symplectic form at block size 1
J = np.array([[0.0, 1.0], [-1.0, 0.0]])
X = np.array([[0.0, 0.0], [1.0, 0.0]])
Y = np.array([[0.0, 0.0], [0.0, 1.0]])
Z = np.array([[1.0, 0.0], [0.0, 0.0]])
LAMBDA = np.diag([1.0, -1.0])
QUARTER_TURN = np.array([[0.0, -1.0], [1.0, 0.0]])
ETA_FORM = np.diag([-1.0, -1.0, 1.0])

# line representatives, keyed by the sign of the Lorentz form
SIGMA = {
    1: np.eye(2),
    0: np.array([[1.0, 0.0], [0.0, 0.0]]),
    -1: np.array([[0.0, 1.0], [1.0, 0.0]]),
}


def rotation(theta):
    """Counter-clockwise rotation ``[[cos, -sin], [sin, cos]]``."""
    c, s = np.cos(theta), np.sin(theta)
    return np.array([[c, -s], [s, c]])


def det2(m):
    m = np.asarray(m, dtype=float)
    return m[..., 0, 0] * m[..., 1, 1] - m[..., 0, 1] * m[..., 1, 0]


def inv2(m, tol=DEFAULT_TOL):
    """Closed-form inverse of an invertible 2x2 matrix."""
    m = np.asarray(m, dtype=float)
    d = det2(m)
    if abs(d) <= tol.det_floor:
        raise SingularMatrix(f"|det| = {abs(d):.3g} is below the floor {tol.det_floor:g}")
    return np.array([[m[1, 1], -m[0, 1]], [-m[1, 0], m[0, 0]]]) / d


def phi(v):
    """Lorentz coordinates ``(x, y, t)`` to the symmetric matrix they name."""
    v = np.asarray(v, dtype=float)
    x, y, t = v[..., 0], v[..., 1], v[..., 2]
    out = np.empty(v.shape[:-1] + (2, 2))
    out[..., 0, 0] = t + x
    out[..., 0, 1] = y
    out[..., 1, 0] = y
    out[..., 1, 1] = t - x
    return out


def phi_inv(sigma):
    """Inverse of :func:`phi`; the off-diagonal entry is read from ``[0, 1]``."""
    s = np.asarray(sigma, dtype=float)
    p, q, r = s[..., 0, 0], s[..., 0, 1], s[..., 1, 1]
    return np.stack([(p - r) / 2, q, (p + r) / 2], axis=-1)


def inner(sigma, tau):
    """Half-trace inner product on Sym(2, R)."""
    return 0.5 * float(np.trace(np.asarray(sigma) @ np.asarray(tau)))


def eta(v):
    """Lorentz form ``t^2 - x^2 - y^2``; equals ``det(phi(v))``."""
    v = np.asarray(v, dtype=float)
    return v[..., 2] ** 2 - v[..., 0] ** 2 - v[..., 1] ** 2


def dagger(h, sigma, tol=DEFAULT_TOL):
    """Left action of ``h`` in GL(2, R) on symmetric matrices: ``h^{-T} sigma h^{-1}``."""
    hi = inv2(h, tol)
    return hi.T @ np.asarray(sigma, dtype=float) @ hi


def dagger_derivative(a, sigma):
    """Derivative of ``s -> dagger(exp(s a), sigma)`` at ``s = 0``."""
    a = np.asarray(a, dtype=float)
    sigma = np.asarray(sigma, dtype=float)
    return -(a.T @ sigma + sigma @ a)


def bracket(a, b):
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    return a @ b - b @ a


def ad(g, a, tol=DEFAULT_TOL):
    """Adjoint action ``g a g^{-1}``."""
    return np.asarray(g, dtype=float) @ np.asarray(a, dtype=float) @ inv2(g, tol)


def projector(basis):
    """Orthogonal projector onto the row span of an orthonormal ``basis``."""
    b = np.asarray(basis, dtype=float)
    return b.T @ b


def projector_distance(basis_a, basis_b):
    """Frobenius distance between the orthogonal projectors of two spans.

    Both arguments are orthonormal row bases of subspaces of the same space.
    The value is zero iff the spans coincide and at least
    ``sqrt(|dim a - dim b|)`` otherwise.
    """
    return float(np.linalg.norm(projector(basis_a) - projector(basis_b)))


def _orthonormal_rows(vectors, tol):
    """Reduce a list of vectors to an orthonormal basis of their span.

    The rank is decided from singular values; the basis itself comes from
    Gram-Schmidt in input order so that already-clean generator lists (for
    instance ``X, Y``) come back unchanged up to normalisation.
    """
    m = np.atleast_2d(np.asarray(vectors, dtype=float))
    if m.size == 0:
        return m.reshape(0, m.shape[-1] if m.ndim == 2 else 0)
    _, s, vt = np.linalg.svd(m, full_matrices=False)
    cut = tol.rank * max(1.0, s[0])
    rank = int(np.sum(s > cut))
    basis = []
    for v in m:
        w = v.copy()
        for _ in range(2):  # re-orthogonalise once for stability
            for b in basis:
                w -= (b @ w) * b
        n = np.linalg.norm(w)
        if n > cut:
            basis.append(w / n)
    if len(basis) != rank:
        return vt[:rank]
    return np.array(basis).reshape(rank, m.shape[1])


@dataclass(frozen=True, eq=False)
class Subspace:
    """A nonzero linear subspace of Sym(2, R).

    ``basis`` holds orthonormal Lorentz coordinates, one row per generator;
    ``generators`` are the corresponding symmetric matrices.
    """

    basis: np.ndarray

    @classmethod
    def span(cls, generators, tol=DEFAULT_TOL):
        gens = np.asarray(generators, dtype=float).reshape(-1, 2, 2)
        coords = phi_inv((gens + np.swapaxes(gens, -1, -2)) / 2)
        basis = _orthonormal_rows(coords, tol) if len(coords) else coords
        if len(basis) == 0:
            raise ZeroSubspace("generators span the zero subspace")
        return cls(basis)

    @classmethod
    def from_coords(cls, coords, tol=DEFAULT_TOL):
        basis = _orthonormal_rows(np.asarray(coords, dtype=float).reshape(-1, 3), tol)
        if len(basis) == 0:
            raise ZeroSubspace("coordinates span the zero subspace")
        return cls(basis)

    @property
    def dim(self):
        return len(self.basis)

    @property
    def generators(self):
        return tuple(phi(self.basis))

    def distance(self, other):
        return projector_distance(self.basis, other.basis)

    def residual(self, sigma):
        """Norm of the part of ``sigma`` orthogonal to the subspace."""
        v = phi_inv(sigma)
        return float(np.linalg.norm(v - self.basis.T @ (self.basis @ v)))

    def act(self, g, tol=DEFAULT_TOL):
        """Image under the dagger action of ``g``."""
        gi = inv2(g, tol)
        return Subspace.span([gi.T @ s @ gi for s in self.generators], tol)

    def __repr__(self):
        return f"Subspace(dim={self.dim}, generators={[s.tolist() for s in self.generators]})"


@dataclass(frozen=True, eq=False)
class Subalgebra:
    """A nonzero linear subspace of gl(2, R) with an orthonormal basis.

    The basis is orthonormal for the entrywise inner product. Construction
    through :meth:`span` does not check bracket closure; see
    :func:`e2class.subalgebras.validate_subalgebra`.
    """

    basis: np.ndarray

    @classmethod
    def span(cls, generators, tol=DEFAULT_TOL):
        gens = np.asarray(generators, dtype=float).reshape(-1, 4)
        basis = _orthonormal_rows(gens, tol) if len(gens) else gens
        if len(basis) == 0:
            raise ZeroAlgebra("generators span the zero algebra")
        return cls(basis)

    @property
    def dim(self):
        return len(self.basis)

    @property
    def generators(self):
        return tuple(self.basis.reshape(-1, 2, 2))

    def distance(self, other):
        return projector_distance(self.basis, other.basis)

    def residual(self, a):
        v = np.asarray(a, dtype=float).reshape(4)
        return float(np.linalg.norm(v - self.basis.T @ (self.basis @ v)))

    def conjugate(self, g, tol=DEFAULT_TOL):
        """Image under ``a -> g a g^{-1}``."""
        g = np.asarray(g, dtype=float)
        gi = inv2(g, tol)
        return Subalgebra.span([g @ a @ gi for a in self.generators], tol)

    def transpose(self):
        return Subalgebra(np.swapaxes(self.basis.reshape(-1, 2, 2), -1, -2).reshape(-1, 4))

    def __repr__(self):
        return f"Subalgebra(dim={self.dim}, generators={[a.tolist() for a in self.generators]})"


def ortho_complement(sub, tol=DEFAULT_TOL):
    """Orthogonal complement in Sym(2, R) of a line or a plane."""
    if sub.dim not in (1, 2):
        raise BadDimension(f"orthogonal complement needs dim 1 or 2, got {sub.dim}")
    _, _, vt = np.linalg.svd(sub.basis, full_matrices=True)
    return Subspace.from_coords(vt[sub.dim:], tol)


# below this |det| of the (scaled) traceless part the closed form is replaced
# by its Taylor expansion
_EXPM_BRANCH = 1e-12


def expm2(a, s=1.0):
    """``exp(s a)`` for 2x2 real matrices via the closed form.

    ``a`` may carry leading batch dimensions; ``s`` broadcasts against them.
    Write ``s a = s tau I + C`` with ``C`` traceless. Then ``C^2 = -det(C) I``
    and ``exp(C)`` is ``cos``/``cosh``/linear in ``C`` according to the sign
    of ``det(C)``.
    """
    a = np.asarray(a, dtype=float)
    s = np.asarray(s, dtype=float)
    tau = (a[..., 0, 0] + a[..., 1, 1]) / 2
    c = a - tau[..., None, None] * np.eye(2)
    c = s[..., None, None] * c
    st = s * tau
    d = det2(c)
    small = np.abs(d) < _EXPM_BRANCH
    w = np.sqrt(np.abs(d))
    wsafe = np.where(small, 1.0, w)
    c0 = np.where(d > 0, np.cos(w), np.cosh(w))
    c1 = np.where(d > 0, np.sin(wsafe) / wsafe, np.sinh(wsafe) / wsafe)
    c0 = np.where(small, 1 - d / 2 + d * d / 24, c0)
    c1 = np.where(small, 1 - d / 6 + d * d / 120, c1)
    out = c0[..., None, None] * np.eye(2) + c1[..., None, None] * c
    return np.exp(st)[..., None, None] * out


def langlands_factor(sigma, h, tol=DEFAULT_TOL):
    """Split ``(sigma, h)`` as ``(sigma, m, a)`` with ``h = a m``, ``det m = 1``, ``a > 0``.

    Raises
    ------
    NegativeDeterminant
        If ``det h < 0``; such elements have no factorisation with ``a > 0``.
    SingularMatrix
        If ``|det h|`` is below ``tol.det_floor``.
    """
    h = np.asarray(h, dtype=float)
    d = det2(h)
    if abs(d) <= tol.det_floor:
        raise SingularMatrix(f"|det| = {abs(d):.3g} is below the floor")
    if d < 0:
        raise NegativeDeterminant(f"det h = {d:.6g} < 0 admits no factor a > 0")
    a = float(np.sqrt(d))
    return np.asarray(sigma, dtype=float), h / a, a
