"""Local quiver settings of formally smooth algebras.

From one global setting ``(Q_A, alpha_A)`` this package classifies simple
dimension vectors, computes Ext dimensions between simples and rebuilds the
local quiver of any semisimple representation type. A finite-field oracle
checks these formulas on random representations.
"""
from ._kernels import BACKEND
from .exceptions import DimensionError, DomainError, InconsistencyError, QuiverError
from .local import (
    LocalQuiverSetting,
    SemisimpleType,
    ext_between_simples,
    local_quiver,
    total_dimension,
)
from .quiver import (
    Quiver,
    euler_form,
    euler_matrix,
    is_oriented_cycle,
    is_strongly_connected,
    support,
    vertex_simple,
)
from .semigroup import (
    AlgebraSetting,
    AmbientVector,
    builtin_curve,
    builtin_hereditary_order,
    builtin_numerical_semigroup,
    builtin_path_algebra,
    builtin_psl2z,
    decompose,
    describe_B,
    is_simp,
    westbury_check,
)
from .simple import check_simple, enumerate_simple_dimvecs, is_simple_dimvec

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "AlgebraSetting",
    "AmbientVector",
    "DimensionError",
    "DomainError",
    "InconsistencyError",
    "LocalQuiverSetting",
    "Quiver",
    "QuiverError",
    "SemisimpleType",
    "builtin_curve",
    "builtin_hereditary_order",
    "builtin_numerical_semigroup",
    "builtin_path_algebra",
    "builtin_psl2z",
    "check_simple",
    "decompose",
    "describe_B",
    "enumerate_simple_dimvecs",
    "euler_form",
    "euler_matrix",
    "ext_between_simples",
    "is_oriented_cycle",
    "is_simp",
    "is_simple_dimvec",
    "is_strongly_connected",
    "local_quiver",
    "support",
    "total_dimension",
    "vertex_simple",
    "westbury_check",
]
