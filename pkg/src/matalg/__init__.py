"""Exact analysis of matrix algebras over Q, GF(p), GF(p^k) and rational quaternions."""

__version__ = "0.1.0"

from .errors import (
    CapExceeded,
    DimensionMismatch,
    DomainMismatch,
    HypothesisViolation,
    InconclusiveError,
    InputError,
    MatalgError,
    RankOneNotFound,
    SingularMatrix,
)
from .quaternion import HQ, Quaternion
from .scalars.fields import QQ, ExtensionField, PrimeField
from .verdict import Verdict
from .linalg import Matrix, Subspace
from .closure import close, semigroup_close, ideal_close, power_chain, is_nilpotent_algebra
from .module_structure import commutant, composition_chain, is_irreducible, triangularize, hyperinvariant_check
from .theorems import (
    burnside_certify,
    burnside_field_audit,
    counterexample_algebra,
    semigroup_ideal_audit,
    wedderburn_matrix_verify,
    wedderburn_verify,
)
