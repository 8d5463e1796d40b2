"""Exception types shared across the package."""


class NonliftError(Exception):
    """Base class for all domain errors raised by this package."""


class InvalidParameterError(NonliftError):
    """A parameter is outside its documented domain (non-prime p, bad k, ...)."""


class UnsupportedDimensionError(NonliftError):
    """Ambient dimension outside the supported range."""


class DegenerateSpanError(NonliftError):
    """Coincident points span no line."""


class NotAProjectivePointError(NonliftError):
    """No unit coordinate, so the vector defines no projective point."""


class IndeterminateSpanError(NonliftError):
    """Both points reduce to the same residue point; the joining line is not unique."""


class IndeterminateIntersectionError(NonliftError):
    """Both lines reduce to the same residue line; the intersection is not unique."""


class UndecidableCollinearityError(NonliftError):
    """All three residues coincide, so the determinant test decides nothing."""


class DegeneratePlaneError(NonliftError):
    """The three points have collinear residues and span no unique plane."""


class MissingAssignmentError(NonliftError):
    """The point map is not total."""


class BudgetExceededError(NonliftError):
    """Search aborted after exhausting its node budget."""

    def __init__(self, nodes_explored, budget, message=None):
        super().__init__(
            message
            or f"search budget exceeded: {nodes_explored} nodes explored, budget {budget}"
        )
        self.nodes_explored = nodes_explored
        self.budget = budget


class InvalidBlowupError(NonliftError):
    """Center dimension and codimension do not fit the ambient class."""
