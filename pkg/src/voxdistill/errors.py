"""Exception taxonomy shared across the package.

Each CLI-visible failure class carries a stable numeric code so command
output stays machine readable.
"""


class VoxdistillError(Exception):
    """Base class for all package errors."""

    code = 1


class InputError(VoxdistillError, ValueError):
    """A caller violated an operation precondition."""

    code = 5


class BehindCameraError(InputError):
    """Projection requested for a point with non-positive camera depth."""

    code = 5


class ConfigError(VoxdistillError):
    """Configuration failed validation or contained unknown keys."""

    code = 2


class FormatError(VoxdistillError):
    """A binary artifact had a bad magic, version, or structure."""

    code = 3


class DigestMismatchError(VoxdistillError):
    """A manifest digest no longer matches the artifact on disk."""

    code = 4


class TrainingDivergedError(VoxdistillError):
    """The training loss exceeded the divergence guard."""

    code = 6


class ContractViolationError(VoxdistillError):
    """Internal API misuse, e.g. a stale backward cache."""

    code = 7


class InsufficientMatchesError(VoxdistillError):
    """Too few correspondences for the requested geometric solver."""

    code = 8


class DegenerateGeometryError(VoxdistillError):
    """The correspondence geometry does not constrain the solver."""

    code = 9
