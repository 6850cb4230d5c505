"""Exception types shared across the package."""


class QBranchError(ValueError):
    """Base class for all qbranch errors."""


class ZeroBase(QBranchError):
    """Evaluation of a Laurent polynomial at q = 0."""


class ZeroPoint(QBranchError):
    """A Schur evaluation point is 0 while the signature has negative parts."""


class LengthMismatch(QBranchError):
    """Signature lengths are inconsistent with the requested operation."""


class LevelMismatch(QBranchError):
    """Graph levels are inconsistent with the requested operation."""


class NotProbability(QBranchError):
    """A vector that must be a probability vector is not one."""


class ZeroMass(QBranchError):
    """An up-transition walk reached a vertex of zero measure."""


class GraphMismatch(QBranchError):
    """Two objects live on different branching graphs."""


class WindowTooLarge(QBranchError):
    """A requested finite window exceeds the configured vertex cap."""
