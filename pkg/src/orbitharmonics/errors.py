"""Exception hierarchy shared across the package."""


class OrbitHarmonicsError(Exception):
    """Base class for all package errors."""


class ValidationError(OrbitHarmonicsError):
    """Structural data failed an invariant; the message names the violation."""


class InconsistencyError(OrbitHarmonicsError):
    """A construction that is guaranteed for genuine inputs failed.

    Raised e.g. when the support-function induction meets an edge whose sum
    cannot be made zero, which signals that the input does not come from an
    actual symmetric space.
    """


class ModeError(OrbitHarmonicsError):
    """An operation was applied to a hypergraph in the wrong field mode."""


class CrossCheckError(OrbitHarmonicsError):
    """Two redundant computations of the same quantity disagreed.

    This always indicates bad catalog data or an internal bug, never a
    legitimate mathematical outcome.
    """


class SchemaError(OrbitHarmonicsError):
    """Serialized data did not match the expected schema."""


class CatalogError(OrbitHarmonicsError):
    """A catalog entry failed its self-verification; names entry and field."""
