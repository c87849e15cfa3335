"""Exception hierarchy shared by all modules.

Two branches matter to callers: ``ValidationError`` covers rejected input
(bad graphs, mismatched vectors, unusable horizons) and maps to CLI exit
code 2; ``NumericalFailure`` covers breakdowns inside the linear algebra
and maps to exit code 3.
"""


class OpinionFlowError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(OpinionFlowError):
    """Input rejected before any computation was attempted."""


class DimensionMismatch(ValidationError):
    """A vector or matrix does not match the node count of the graph."""


class InvalidHorizon(ValidationError):
    """The switching time of a two-stage control must be positive."""


class IncompleteAssignment(ValidationError):
    """A cluster assignment does not cover nodes 1..n exactly."""


class NotStable(ValidationError):
    """A steady state was requested for a configuration that drifts."""


class NumericalFailure(OpinionFlowError):
    """A numerical routine failed to produce a usable result."""


class EigensolverFailure(NumericalFailure):
    """The eigenvalue solver did not converge."""


class DegenerateNullSpace(NumericalFailure):
    """Left/right null-space bases could not be biorthogonalized."""


class SolverFailure(NumericalFailure):
    """A linear solve produced no usable solution."""


class ExpmFailure(NumericalFailure):
    """Matrix-exponential propagation produced a non-finite result."""
