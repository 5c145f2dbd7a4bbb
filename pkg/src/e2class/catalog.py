"""The 26 canonical groups and the data types that describe a group.

A group ``Sigma x| H`` in the class E_2 is given by a :class:`GroupSpec`:
a line or plane ``Sigma`` of symmetric matrices and the Lie algebra of the
connected group ``H``. Catalog entries are ordered as the list they
transcribe (5-d, then 4-d, 3-d, 2-d groups) and labelled positionally.

Parameterised entries store their Lie algebra generators as templates whose
entries are numbers or the strings ``"alpha"``, ``"-alpha"``, ``"lambda"``,
``"lambda+1"`` and ``"beta"``.
"""

import json
import math
import warnings
from dataclasses import dataclass
from importlib import resources

import numpy as np

from .core import (
    DEFAULT_TOL,
    Subalgebra,
    Subspace,
    det2,
    dagger,
    expm2,
)
from .errors import BadParams, NotInvariant
from .orbits import EtaType
from .subalgebras import Family, check_invariance, validate_subalgebra

__all__ = [
    "GroupSpec", "CanonicalLabel", "CatalogEntry", "catalog", "entry",
    "lookup", "representatives", "catalog_json", "DUAL",
    "compose", "embed", "sample_group", "contains",
]


@dataclass(frozen=True, eq=False)
class GroupSpec:
    """``Sigma x| exp(h)`` given by its two spans."""

    sigma: Subspace
    h: Subalgebra

    @classmethod
    def from_generators(cls, sigma_generators, h_generators, tol=DEFAULT_TOL, check=True):
        """Build and validate a spec.

        Raises ``ZeroSubspace``/``ZeroAlgebra`` for empty spans, ``NotClosed``
        if the algebra is not bracket closed and ``NotInvariant`` if it does
        not preserve ``Sigma``.
        """
        sigma = Subspace.span(sigma_generators, tol)
        h = validate_subalgebra(h_generators, tol) if check else Subalgebra.span(h_generators, tol)
        spec = cls(sigma, h)
        if check and not check_invariance(sigma, h, tol):
            raise NotInvariant("the algebra does not preserve Sigma")
        return spec

    @classmethod
    def from_dict(cls, data, tol=DEFAULT_TOL, check=True):
        return cls.from_generators(data["sigma_generators"], data["h_generators"], tol, check)

    def to_dict(self):
        return {
            "sigma_generators": [s.tolist() for s in self.sigma.generators],
            "h_generators": [a.tolist() for a in self.h.generators],
        }

    @property
    def dim(self):
        return self.sigma.dim + self.h.dim

    def conjugate(self, g, tol=DEFAULT_TOL):
        """``g (Sigma x| H) g^-1 = dagger(g, Sigma) x| g H g^-1``."""
        return GroupSpec(self.sigma.act(g, tol), self.h.conjugate(g, tol))

    def dual(self):
        """The twin group ``Sigma^perp x| H^T``."""
        from .core import ortho_complement

        return GroupSpec(ortho_complement(self.sigma), self.h.transpose())

    def distance(self, other):
        if self.sigma.dim != other.sigma.dim or self.h.dim != other.h.dim:
            return math.inf
        return self.sigma.distance(other.sigma) + self.h.distance(other.h)


@dataclass(frozen=True)
class CanonicalLabel:
    id: str
    dim_total: int
    params: dict


_PARAM_SCHEMA = {
    "alpha": {"min": 0.0, "max": None, "default": 0.5},
    "lambda": {"min": None, "max": None, "default": 0.5},
    "beta": {"min": -1.0, "max": 1.0, "default": 0.5},
}


def _eval_entry(e, params):
    if not isinstance(e, str):
        return float(e)
    sign = -1.0 if e.startswith("-") else 1.0
    body = e.lstrip("-")
    name, _, shift = body.partition("+")
    return sign * params[name] + (float(shift) if shift else 0.0)


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    eta_type: EtaType
    plane: bool
    family: Family
    sigma_generators: tuple
    h_generators: tuple
    param_names: tuple = ()

    @property
    def dim(self):
        return len(self.sigma_generators) + len(self.h_generators)

    @property
    def params_schema(self):
        return {n: dict(_PARAM_SCHEMA[n]) for n in self.param_names}

    def default_params(self):
        return {n: _PARAM_SCHEMA[n]["default"] for n in self.param_names}

    def check_params(self, params):
        params = dict(params or {})
        if set(params) != set(self.param_names):
            raise BadParams(f"{self.id} takes parameters {list(self.param_names)}, got {sorted(params)}")
        for n, v in params.items():
            if not isinstance(v, (int, float)) or not math.isfinite(v):
                raise BadParams(f"parameter {n} must be a finite number")
            lo, hi = _PARAM_SCHEMA[n]["min"], _PARAM_SCHEMA[n]["max"]
            if (lo is not None and v < lo) or (hi is not None and v > hi):
                raise BadParams(f"parameter {n}={v} outside [{lo}, {hi}]")
        return {n: float(v) for n, v in params.items()}

    def h_matrices(self, params=None):
        p = self.check_params(self.default_params() if params is None else params)
        return [np.array([[_eval_entry(e, p) for e in row] for row in m]) for m in self.h_generators]

    def spec(self, params=None, tol=DEFAULT_TOL):
        return GroupSpec(Subspace.span(self.sigma_generators, tol),
                         Subalgebra.span(self.h_matrices(params), tol))

    def label(self, params=None):
        p = self.check_params(self.default_params() if params is None else params)
        return CanonicalLabel(self.id, self.dim, p)

    def to_json(self):
        return {
            "id": self.id,
            "dim": self.dim,
            "sigma_generators": [list(map(list, m)) for m in self.sigma_generators],
            "h_generators": [list(map(list, m)) for m in self.h_generators],
            "params_schema": self.params_schema,
        }


# symmetric generators of the six canonical subspaces
_S1 = (((1, 0), (0, 1)),)
_S1P = (((1, 0), (0, -1)), ((0, 1), (1, 0)))
_S0 = (((1, 0), (0, 0)),)
_S0P = (((0, 1), (1, 0)), ((0, 0), (0, 1)))
_SN = (((0, 1), (1, 0)),)
_SNP = (((1, 0), (0, 0)), ((0, 0), (0, 1)))

# algebra generators, written to match the displayed groups
_EI = ((1, 0), (0, 1))
_ROT = ((0, -1), (1, 0))
_ROTDIL = ((1, "-alpha"), ("alpha", 1))
_DZ = ((1, 0), (0, 0))
_DY = ((0, 0), (0, 1))
_LOW = ((0, 0), (1, 0))
_UP = ((0, 1), (0, 0))
_DLAM = (("lambda", 0), (0, "lambda+1"))
_DBETA = ((1, 0), (0, "beta"))

_POS, _NULL, _NEG = EtaType.POS, EtaType.NULL, EtaType.NEG
F = Family

_ENTRIES = (
    # 5-d
    CatalogEntry("L5.1", _NULL, True, F.FULL_H0, _S0P, (_DZ, _DY, _UP)),
    # 4-d
    CatalogEntry("L4.1", _POS, True, F.FULL_H1, _S1P, (_EI, _ROT)),
    CatalogEntry("L4.2", _NULL, False, F.FULL_H0, _S0, (_DZ, _DY, _LOW)),
    CatalogEntry("L4.3", _NULL, True, F.PLANE_LAMBDA, _S0P, (_DLAM, _UP), ("lambda",)),
    CatalogEntry("L4.4", _NULL, True, F.PLANE_IY, _S0P, (_DZ, _DY)),
    CatalogEntry("L4.5", _NULL, True, F.PLANE_IX, _S0P, (_EI, _UP)),
    CatalogEntry("L4.6", _NEG, True, F.FULL_HNEG1, _SNP, (_DZ, _DY)),
    # 3-d
    CatalogEntry("L3.1", _POS, False, F.FULL_H1, _S1, (_EI, _ROT)),
    CatalogEntry("L3.2", _POS, True, F.ROT_DIL, _S1P, (_ROTDIL,), ("alpha",)),
    CatalogEntry("L3.3", _POS, True, F.SO2, _S1P, (_ROT,)),
    CatalogEntry("L3.4", _NULL, False, F.PLANE_LAMBDA, _S0, (_DLAM, _LOW), ("lambda",)),
    CatalogEntry("L3.5", _NULL, False, F.PLANE_IY, _S0, (_DZ, _DY)),
    CatalogEntry("L3.6", _NULL, False, F.PLANE_IX, _S0, (_EI, _LOW)),
    CatalogEntry("L3.7", _NULL, True, F.DIAG_LAMBDA, _S0P, (_DLAM,), ("lambda",)),
    CatalogEntry("L3.8", _NULL, True, F.SHEAR, _S0P, (_UP,)),
    CatalogEntry("L3.9", _NULL, True, F.DIL_SHEAR, _S0P, (((1, 1), (0, 1)),)),
    CatalogEntry("L3.10", _NULL, True, F.SCALAR, _S0P, (_EI,)),
    CatalogEntry("L3.11", _NEG, False, F.FULL_HNEG1, _SN, (_DZ, _DY)),
    CatalogEntry("L3.12", _NEG, True, F.DIAG_BETA, _SNP, (_DBETA,), ("beta",)),
    # 2-d
    CatalogEntry("L2.1", _POS, False, F.ROT_DIL, _S1, (_ROTDIL,), ("alpha",)),
    CatalogEntry("L2.2", _POS, False, F.SO2, _S1, (_ROT,)),
    CatalogEntry("L2.3", _NULL, False, F.DIAG_LAMBDA, _S0, (_DLAM,), ("lambda",)),
    CatalogEntry("L2.4", _NULL, False, F.SHEAR, _S0, (_LOW,)),
    CatalogEntry("L2.5", _NULL, False, F.DIL_SHEAR, _S0, (((1, 0), (1, 1)),)),
    CatalogEntry("L2.6", _NULL, False, F.SCALAR, _S0, (_EI,)),
    CatalogEntry("L2.7", _NEG, False, F.DIAG_BETA, _SN, (_DBETA,), ("beta",)),
)

_BY_ID = {e.id: e for e in _ENTRIES}
_BY_KEY = {(e.eta_type, e.plane, e.family): e for e in _ENTRIES}

# label <-> label of the twin group Sigma^perp x| H^T
DUAL = {}
for _e in _ENTRIES:
    DUAL[_e.id] = _BY_KEY[(_e.eta_type, not _e.plane, _e.family)].id


def catalog():
    """All 26 entries in list order."""
    return _ENTRIES


def entry(label_id):
    try:
        return _BY_ID[label_id]
    except KeyError:
        raise BadParams(f"unknown label {label_id!r}") from None


def lookup(eta_type, plane, family):
    return _BY_KEY[(EtaType(eta_type), bool(plane), Family(family))]


def representatives(params=None):
    """``(CanonicalLabel, GroupSpec)`` for every entry at default (or given) parameters."""
    out = []
    for e in _ENTRIES:
        p = {n: v for n, v in (params or {}).items() if n in e.param_names} or None
        if p is not None and set(p) != set(e.param_names):
            p = None
        out.append((e.label(p), e.spec(p)))
    return out


def catalog_json():
    """Canonical serialisation of the catalog, byte-stable across runs."""
    return json.dumps([e.to_json() for e in _ENTRIES], indent=2) + "\n"


def golden_catalog_text():
    return resources.files("e2class").joinpath("data/catalog.json").read_text()


def compose(a, b, tol=DEFAULT_TOL):
    """Product law ``(s, h)(s', h') = (s + dagger(h, s'), h h')``."""
    (s1, h1), (s2, h2) = a, b
    return s1 + dagger(h1, s2, tol), np.asarray(h1) @ np.asarray(h2)


def embed(element, tol=DEFAULT_TOL):
    """4x4 symplectic matrix ``[[h, 0], [s h, h^{-T}]]`` of ``(s, h)``."""
    s, h = element
    h = np.asarray(h, dtype=float)
    out = np.zeros((4, 4))
    out[:2, :2] = h
    out[2:, :2] = np.asarray(s) @ h
    out[2:, 2:] = np.linalg.inv(h).T
    return out


def sample_group(label, n, seed=0, tol=DEFAULT_TOL):
    """``n`` pseudo-random elements ``(sigma, h)`` of a catalog group.

    ``sigma`` is a Gaussian combination of the generators of ``Sigma`` and
    ``h = exp(A)`` for ``A`` uniform in the unit cube of the algebra
    coordinates.
    """
    e = entry(label.id)
    gens = e.h_matrices(label.params)
    sig = np.array(e.sigma_generators, dtype=float)
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(n):
        s = np.tensordot(rng.normal(size=len(sig)), sig, axes=1)
        a = np.tensordot(rng.uniform(-1, 1, size=len(gens)), np.array(gens), axes=1)
        out.append((s, expm2(a)))
    return out


def contains(label, element, tol=DEFAULT_TOL):
    """Residual of ``element = (sigma, h)`` against membership in the group.

    ``sigma`` is tested against the span of ``Sigma``; ``h`` by a
    least-squares fit of ``exp`` over the algebra coordinates, started from
    the projected matrix logarithm and its shifts by full turns of any
    rotation direction. Returns the larger of the two relative residuals.
    """
    from scipy.linalg import logm
    from scipy.optimize import least_squares

    e = entry(label.id)
    spec = e.spec(label.params, tol)
    s, h = element
    s = np.asarray(s, dtype=float)
    h = np.asarray(h, dtype=float)
    ns = np.linalg.norm(s)
    rs = spec.sigma.residual(s) / ns if ns > 0 else 0.0
    if det2(h) <= 0:
        return max(rs, math.inf)
    basis = spec.h.basis
    with warnings.catch_warnings():
        # only a starting point; the fit below refines it
        warnings.simplefilter("ignore", RuntimeWarning)
        log = np.real(logm(h)).reshape(4)
    c0 = basis @ log

    def f(c):
        return (expm2((c @ basis).reshape(2, 2)) - h).ravel()

    # exp(2 pi R) = I for the quarter-turn generator R, so logarithms differ
    # by whole turns along it
    turn = basis @ (2 * np.pi * np.array([0.0, -1.0, 1.0, 0.0]))
    starts = [c0]
    if np.linalg.norm(turn) > 1e-9:
        starts += [c0 + k * turn for k in (-1, 1, -2, 2, -3, 3)]
    best = math.inf
    for c in starts:
        r = least_squares(f, c, xtol=1e-15, ftol=1e-15, gtol=1e-15)
        best = min(best, float(np.linalg.norm(r.fun)))
        if best < 1e-13 * np.linalg.norm(h):
            break
    return max(rs, best / np.linalg.norm(h))
