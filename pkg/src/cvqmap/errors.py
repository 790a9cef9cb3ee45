"""Exception hierarchy shared across the package."""


class CvqmapError(Exception):
    """Base class for all package errors."""


class InvalidInputError(CvqmapError):
    """Raised on non-finite or malformed numerical input."""


class DomainError(CvqmapError):
    """Raised when arguments lie outside the physical parameter region."""


class OutOfRegionError(DomainError):
    """Raised when entropic parameters violate the physical-entangled region."""


class NoSolutionError(DomainError):
    """Raised when an inverse coordinate map has no solution."""


class DegenerateResourceError(DomainError):
    """Raised when the steady-state normalization z is not strictly positive."""


class IntegrationError(CvqmapError):
    """Raised when the master-equation integrator fails to meet tolerance."""
