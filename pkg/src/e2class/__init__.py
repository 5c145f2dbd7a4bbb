"""Classification of the groups ``Sigma x| H`` inside the maximal parabolic
subgroup of Sp(2, R) up to GL(2, R) conjugation."""

from .catalog import (
    DUAL,
    CanonicalLabel,
    CatalogEntry,
    GroupSpec,
    catalog,
    compose,
    contains,
    embed,
    entry,
    representatives,
    sample_group,
)
from .classifier import Certificate, InvariantVector, VerifyReport, classify, invariants, verify
from .core import (
    DEFAULT_TOL,
    Subalgebra,
    Subspace,
    Tolerances,
    dagger,
    expm2,
    langlands_factor,
    ortho_complement,
    phi,
    phi_inv,
)
from .errors import (
    BadDimension,
    BadParams,
    DimensionOutOfScope,
    E2Error,
    IllConditioned,
    NegativeDeterminant,
    NotClosed,
    NotContained,
    NotInvariant,
    NotUnimodular,
    SingularMatrix,
    UnrecognizedSubalgebra,
    ZeroAlgebra,
    ZeroSubspace,
)
from .lorentz import IwasawaSL2, iwasawa_sl2, lorentz_iwasawa, lorentz_of
from .oracle import SearchConfig, group_distance, search_conjugator
from .orbits import EtaType, OrbitClass, canonicalize_line, canonicalize_plane, classify_vector
from .subalgebras import Family, normalize, validate_subalgebra

__all__ = [
    "BadDimension",
    "BadParams",
    "CanonicalLabel",
    "CatalogEntry",
    "Certificate",
    "DEFAULT_TOL",
    "DUAL",
    "DimensionOutOfScope",
    "E2Error",
    "EtaType",
    "Family",
    "GroupSpec",
    "IllConditioned",
    "InvariantVector",
    "IwasawaSL2",
    "NegativeDeterminant",
    "NotClosed",
    "NotContained",
    "NotInvariant",
    "NotUnimodular",
    "OrbitClass",
    "SearchConfig",
    "SingularMatrix",
    "Subalgebra",
    "Subspace",
    "Tolerances",
    "UnrecognizedSubalgebra",
    "VerifyReport",
    "ZeroAlgebra",
    "ZeroSubspace",
    "canonicalize_line",
    "canonicalize_plane",
    "catalog",
    "classify",
    "classify_vector",
    "compose",
    "contains",
    "dagger",
    "embed",
    "entry",
    "expm2",
    "group_distance",
    "invariants",
    "iwasawa_sl2",
    "langlands_factor",
    "lorentz_iwasawa",
    "lorentz_of",
    "normalize",
    "ortho_complement",
    "phi",
    "phi_inv",
    "representatives",
    "sample_group",
    "search_conjugator",
    "validate_subalgebra",
    "verify",
]

__version__ = "0.1.0"
