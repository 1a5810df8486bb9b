"""Exception types shared across the package."""


class FsagpError(Exception):
    """Base class for all package errors."""


class DomainError(FsagpError):
    """Invalid input: out-of-range coordinates, dimension mismatch, bad config."""


class NumericalError(FsagpError):
    """A factorization failed even after jitter retries.

    The message names the offending factor so a caller (or the CLI) can
    report which matrix went bad.
    """


class StaleWorkspaceError(FsagpError):
    """A cached likelihood workspace was used with parameters it was not built from."""


class SimulationSizeError(DomainError):
    """Requested simulation exceeds the dense-sampling cap."""
