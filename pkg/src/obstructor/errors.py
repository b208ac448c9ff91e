"""Exception hierarchy shared across the engine."""


class ObstructorError(Exception):
    """Base class for all errors raised by this package."""


class RingMismatchError(ObstructorError):
    """Operands live over different coefficient rings or presentations."""


class DegreeOverflowError(ObstructorError):
    """A product escaped the presentation's degree cutoff in strict mode."""


class MixedDegreeError(ObstructorError):
    """A homogeneous-degree query was made on an inhomogeneous element."""


class PresentationError(ObstructorError):
    """Invalid generator data or inconsistent presentation."""


class BocksteinDataError(ObstructorError):
    """No Bockstein image is recorded for a generator appearing in the input."""


class UnclassifiableObstructionError(ObstructorError):
    """A nonzero obstruction class matched no Bockstein image; catalog gap."""


class CatalogError(ObstructorError):
    """Malformed or unsupported catalog data."""


class CatalogMismatchError(ObstructorError):
    """Engine-derived order disagrees with the closed form; catalog bug."""


class GroupSpecError(ObstructorError):
    """Group-spec parse or validation failure, with input position."""

    def __init__(self, message: str, position: int = 0):
        super().__init__(message)
        self.message = message
        self.position = position
