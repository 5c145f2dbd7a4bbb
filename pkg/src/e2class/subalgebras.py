"""Lie subalgebras of the three stabilizer algebras and their normal forms.

Line-side stabilizer algebras, with the bases used for coordinates:

* ``h_1  = span{I, J}``      (scalars plus rotations)
* ``h_0  = span{I, X, Y}``   (lower triangular matrices)
* ``h_-1 = span{Z, Y}``      (diagonal matrices)

Each ``normalize_in_*`` function returns a conjugator that preserves
``span(sigma_eta)`` and carries the input algebra onto a normal form, together
with the continuous parameter of that form.
"""

from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .core import (
    DEFAULT_TOL,
    I2,
    LAMBDA,
    QUARTER_TURN,
    Subalgebra,
    J,
    X,
    Y,
    Z,
    bracket,
    dagger_derivative,
)
from .errors import NotClosed, NotContained, UnrecognizedSubalgebra, ZeroAlgebra
from .orbits import EtaType

__all__ = [
    "Family", "SubalgNormalForm", "validate_subalgebra", "closure_residual",
    "check_invariance", "stabilizer_algebra", "normal_form_generators",
    "normalize_in_h1", "normalize_in_h0", "normalize_in_hneg1", "normalize",
]


class Family(str, Enum):
    FULL_H1 = "Full-H1"
    SO2 = "SO2"
    ROT_DIL = "Rot-Dil"
    FULL_H0 = "Full-H0"
    DIAG_LAMBDA = "Diag-lambda"
    SHEAR = "Shear"
    DIL_SHEAR = "Dil-Shear"
    SCALAR = "Scalar"
    PLANE_LAMBDA = "Plane-lambda"
    PLANE_IY = "Plane-IY"
    PLANE_IX = "Plane-IX"
    FULL_HNEG1 = "Full-Hneg1"
    DIAG_BETA = "Diag-beta"


@dataclass(frozen=True)
class SubalgNormalForm:
    eta_type: EtaType
    family: Family
    params: dict
    conjugator: np.ndarray
    residual: float
    algebra: Subalgebra = field(repr=False, default=None)


def closure_residual(alg):
    """Largest out-of-span norm of a bracket of two basis elements, with its pair."""
    worst, pair = 0.0, None
    gens = alg.generators
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            r = alg.residual(bracket(gens[i], gens[j]))
            if r > worst:
                worst, pair = r, (i, j)
    return worst, pair


def validate_subalgebra(generators, tol=DEFAULT_TOL):
    """Reduce ``generators`` to an orthonormal basis and check bracket closure.

    Raises
    ------
    ZeroAlgebra
        If the generators span zero.
    NotClosed
        If some bracket of basis elements leaves the span by more than
        ``tol.residual``.
    """
    gens = list(generators)
    if not gens:
        raise ZeroAlgebra("empty generator list")
    alg = Subalgebra.span(gens, tol)
    worst, pair = closure_residual(alg)
    if worst > tol.residual:
        raise NotClosed(
            f"bracket of basis elements {pair} leaves the span by {worst:.3g}",
            pair=pair, residual=worst,
        )
    return alg


def check_invariance(sigma, alg, tol=DEFAULT_TOL):
    """Whether every element of ``alg`` infinitesimally preserves ``sigma``."""
    for a in alg.generators:
        for s in sigma.generators:
            if sigma.residual(dagger_derivative(a, s)) > tol.residual:
                return False
    return True


_BASES = {
    EtaType.POS: np.array([I2, J]),
    EtaType.NULL: np.array([I2, X, Y]),
    EtaType.NEG: np.array([Z, Y]),
}
_PINV = {k: np.linalg.pinv(v.reshape(len(v), 4).T) for k, v in _BASES.items()}


def stabilizer_algebra(eta_type, transposed=False):
    """Lie algebra of the connected stabilizer of ``span(sigma_eta)``.

    With ``transposed`` the transposes are returned; these stabilize the
    orthogonal plane ``sigma_eta^perp``.
    """
    b = _BASES[EtaType(eta_type)]
    if transposed:
        b = np.swapaxes(b, -1, -2)
    return Subalgebra.span(b)


def normal_form_generators(eta_type, family, params=None):
    """Generators of the line-side normal form of ``family``."""
    p = params or {}
    fam = Family(family)
    table = {
        Family.FULL_H1: lambda: [I2, J],
        Family.SO2: lambda: [J],
        Family.ROT_DIL: lambda: [I2 + p["alpha"] * J],
        Family.FULL_H0: lambda: [I2, X, Y],
        Family.DIAG_LAMBDA: lambda: [p["lambda"] * I2 + Y],
        Family.SHEAR: lambda: [X],
        Family.DIL_SHEAR: lambda: [I2 + X],
        Family.SCALAR: lambda: [I2],
        Family.PLANE_LAMBDA: lambda: [X, p["lambda"] * I2 + Y],
        Family.PLANE_IY: lambda: [I2, Y],
        Family.PLANE_IX: lambda: [I2, X],
        Family.FULL_HNEG1: lambda: [Z, Y],
        Family.DIAG_BETA: lambda: [Z + p["beta"] * Y],
    }
    return [np.asarray(m, dtype=float) for m in table[fam]()]


def _coords(alg, et, tol):
    """Coordinates of the basis of ``alg`` in the basis of ``h_eta``."""
    vecs = alg.basis
    c = vecs @ _PINV[et].T
    back = c @ _BASES[et].reshape(-1, 4)
    res = float(np.max(np.linalg.norm(vecs - back, axis=1)))
    if res > tol.residual:
        raise NotContained(f"algebra leaves h_{et.value} by {res:.3g}")
    if alg.dim > len(_BASES[et]):
        raise NotContained(f"dim {alg.dim} exceeds dim h_{et.value}")
    return c


def _finish(et, family, params, g, alg, tol):
    target = Subalgebra.span(normal_form_generators(et, family, params), tol)
    image = alg.conjugate(g, tol)
    return SubalgNormalForm(et, family, params, g, image.distance(target), target)


def normalize_in_h1(alg, tol=DEFAULT_TOL):
    """Normal form inside ``h_1 = R I + so(2)``.

    A line ``x I + a J`` with ``x != 0`` becomes ``I + alpha J`` with
    ``alpha >= 0``; conjugation by ``LAMBDA`` flips the sign of ``J``.
    """
    et = EtaType.POS
    c = _coords(alg, et, tol)
    if alg.dim == 2:
        return _finish(et, Family.FULL_H1, {}, I2, alg, tol)
    x, a = c[0] / np.linalg.norm(c[0])
    if abs(x) <= tol.residual:
        return _finish(et, Family.SO2, {}, I2, alg, tol)
    alpha = a / x
    g = LAMBDA if alpha < 0 else I2
    return _finish(et, Family.ROT_DIL, {"alpha": abs(float(alpha))}, g, alg, tol)


def _unit_lower(b):
    return np.array([[1.0, 0.0], [b, 1.0]])


def normalize_in_h0(alg, tol=DEFAULT_TOL):
    """Normal form inside the lower triangular algebra ``h_0``.

    One-dimensional algebras are points ``[c_I : c_X : c_Y]`` of the
    projective plane; two-dimensional ones are read off from the normal
    vector ``n`` of the plane in the same coordinates: ``n_I != 0`` means
    non-abelian (``<X, lambda I + Y>``), otherwise the plane contains ``I``.
    """
    et = EtaType.NULL
    c = _coords(alg, et, tol)
    z = tol.residual
    if alg.dim == 3:
        return _finish(et, Family.FULL_H0, {}, I2, alg, tol)
    if alg.dim == 1:
        ci, cx, cy = c[0] / np.linalg.norm(c[0])
        if abs(cy) > z:
            # h (l I + m X + Y) h^-1 = l I + (m - b) X + Y for h = [[1, 0], [b, 1]]
            return _finish(et, Family.DIAG_LAMBDA, {"lambda": float(ci / cy)},
                           _unit_lower(cx / cy), alg, tol)
        if abs(cx) > z:
            if abs(ci) <= z:
                return _finish(et, Family.SHEAR, {}, I2, alg, tol)
            # diag(1, d) X diag(1, d)^-1 = d X; the sign of d supplies LAMBDA
            return _finish(et, Family.DIL_SHEAR, {}, np.diag([1.0, ci / cx]), alg, tol)
        return _finish(et, Family.SCALAR, {}, I2, alg, tol)
    n = np.cross(c[0], c[1])
    n = n / np.linalg.norm(n)
    ni, nx, ny = n
    if abs(ni) > z:
        if abs(nx) > z:
            raise UnrecognizedSubalgebra(f"plane with normal {n} is not a subalgebra")
        return _finish(et, Family.PLANE_LAMBDA, {"lambda": float(-ny / ni)}, I2, alg, tol)
    if abs(nx) > z:
        return _finish(et, Family.PLANE_IY, {}, _unit_lower(-ny / nx), alg, tol)
    return _finish(et, Family.PLANE_IX, {}, I2, alg, tol)


def normalize_in_hneg1(alg, tol=DEFAULT_TOL):
    """Normal form inside the diagonal algebra: ``diag(1, beta)``, ``|beta| <= 1``.

    The quarter turn swaps the diagonal entries and preserves
    ``span(sigma_-1)``.
    """
    et = EtaType.NEG
    c = _coords(alg, et, tol)
    if alg.dim == 2:
        return _finish(et, Family.FULL_HNEG1, {}, I2, alg, tol)
    p, q = c[0]
    g = I2
    if abs(q) > abs(p):
        p, q = q, p
        g = QUARTER_TURN
    return _finish(et, Family.DIAG_BETA, {"beta": float(q / p)}, g, alg, tol)


def normalize(eta_type, alg, tol=DEFAULT_TOL):
    et = EtaType(eta_type)
    return {
        EtaType.POS: normalize_in_h1,
        EtaType.NULL: normalize_in_h0,
        EtaType.NEG: normalize_in_hneg1,
    }[et](alg, tol)
