"""Exception types shared across the analysis modules."""


class AmpFsiError(Exception):
    """Base class for all package errors."""


class DegenerateInput(AmpFsiError):
    """Polynomial degenerates to degree zero after trimming."""


class DegenerateQuartic(AmpFsiError):
    """Leading coefficient of the spatial-eigenvalue polynomial vanishes."""


class ContourTooClose(AmpFsiError):
    """A zero or pole lies on (or numerically on) the integration contour."""

    def __init__(self, message, min_abs=None, where=None):
        super().__init__(message)
        self.min_abs = min_abs
        self.where = where


class SingularSystem(AmpFsiError):
    """The variational interface system cannot be solved for z_f."""


class SingularFluidBC(AmpFsiError):
    """The 3x3 fluid boundary-condition system is singular at this A."""


class AmbiguousRoot(AmpFsiError):
    """Both solid spatial roots sit on the unit circle (CFL violation)."""


class NoConvergence(AmpFsiError):
    """Iterative root search failed to converge."""


class ContinuationLost(AmpFsiError):
    """A root branch could not be tracked during continuation."""


class OutOfDomain(AmpFsiError):
    """Field evaluation requested outside the physical domain."""
