"""Exception types shared across the package."""


class QpvError(Exception):
    """Base class for all qpv errors."""


class ConfigurationError(QpvError):
    """Incompatible or invalid inputs: mismatched variable sets, bad
    truncations, malformed case/system descriptions."""


class NonInvertibleError(QpvError):
    """Series inversion requested for a series whose q-constant slice is
    not the unit +-1."""


class FormalDivergenceError(QpvError):
    """An infinite product whose factors do not tend to 1 in the q-adic
    sense (base with q-degree 0) cannot be expanded formally."""


class InvalidDilationError(QpvError):
    """A substitution q -> q^r with variable offsets would map a stored
    monomial to a negative q-power."""


class TruncationExceededError(QpvError):
    """A coefficient beyond the truncation bound was requested.  Raised
    instead of silently returning 0."""


class MatrixInconsistencyError(ConfigurationError):
    """A dilated difference matrix has a negative entry, i.e. the dilation
    inverts the order of an adjacency the base matrix allows."""
