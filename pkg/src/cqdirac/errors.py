"""Exception types shared across the package."""


class CQError(Exception):
    """Base class for all domain errors."""


class NotInvertible(CQError):
    """The element is null (vanishing quadric) and has no inverse."""


class NotMinkowski(CQError):
    """The value is not a purely imaginary complex quaternion."""


class BadRotor(CQError):
    """The rotor fails the unit condition omega * quat_conj(omega) = 1."""


class BadDirection(CQError):
    """The axis is not a real unit imaginary quaternion."""


class UnsupportedField(CQError):
    """The field is outside the closed analytic family."""


class OffShell(CQError):
    """The momentum does not satisfy the mass-shell relation."""


class MasslessUnsupported(CQError):
    """Solution construction requires a strictly positive mass."""


class ZeroState(CQError):
    """The state amplitude is zero."""


class NotNormal(CQError):
    """The element fails sigma * complex_conj(quat_conj(sigma)) = 1."""


class NotInSubspace(CQError):
    """The amplitude does not lie in the expected spin subspace."""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class IncommensurateMomenta(CQError):
    """Plane-wave phases do not close over the periodic box."""
