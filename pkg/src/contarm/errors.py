"""Exception types raised by the kinematics routines."""


class KinematicsError(Exception):
    """Base class for all errors raised by ``contarm``."""


class ConfigError(KinematicsError, ValueError):
    """Malformed or inconsistent arm geometry / configuration file."""


class PhiOutOfRange(KinematicsError):
    """Bending angle exceeds the configured limit ``phi_max``."""

    def __init__(self, phi: float, phi_max: float):
        self.phi = phi
        self.phi_max = phi_max
        super().__init__(f"bending angle phi={phi:.12g} rad exceeds phi_max={phi_max:.12g} rad")


class XiOutOfRange(KinematicsError, ValueError):
    """Backbone coordinate outside [0, 1]."""


class BadSampleCount(KinematicsError, ValueError):
    """Requested number of samples is too small."""


class Unreachable(KinematicsError):
    """Target tip position is not on the reachable surface."""

    def __init__(self, residual: float, tol: float):
        self.residual = residual
        self.tol = tol
        super().__init__(f"target unreachable: residual {residual:.6g} m exceeds tolerance {tol:.3g} m")


class DegenerateInput(KinematicsError, ValueError):
    """Input outside the domain of a closed-form expression."""


class SpecInvalid(KinematicsError, ValueError):
    """Inconsistent path specification."""


class EmptyInput(KinematicsError, ValueError):
    """An operation that needs at least one element received none."""
