"""qpv: exact verification of coloured-partition identities.

Truncated multivariate q-series, difference-condition partition
enumeration, recurrence engines, and infinite-product expansion, all with
exact integer arithmetic, cross-checked coefficient by coefficient.
"""

from .errors import (
    ConfigurationError,
    FormalDivergenceError,
    InvalidDilationError,
    MatrixInconsistencyError,
    NonInvertibleError,
    QpvError,
    TruncationExceededError,
)
from .series import (
    DEFAULT_VARS,
    Monomial,
    Series,
    invert_unit,
    monomial,
    pochhammer,
    series_from_json,
    series_to_json,
    substitute,
)

__version__ = "0.1.0"
