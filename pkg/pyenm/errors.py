# Copyright © 2026 The PyENM developers
#
#  This software is distributed under the open-source license Modified BSD.

"""PyENM exceptions.

Every error derives from :class:`PyENMError` and from the closest builtin
exception, so callers can catch either.

"""


class PyENMError(Exception):
    """Base class of all PyENM errors."""


########################
#  States
########################

class BlochOutOfBall(PyENMError, ValueError):
    """Raised when a Bloch vector has a norm larger than one."""


class NotAState(PyENMError, ValueError):
    """Raised when a matrix is not a valid density matrix."""


class NotXState(PyENMError, ValueError):
    """Raised when a two-qubit state has entries outside the X pattern."""


class MarginalNotMixed(PyENMError, ValueError):
    """Raised when the A marginal of an X-state is not maximally mixed."""


########################
#  Dynamics
########################

class NonHermitianGamma(PyENMError, ValueError):
    """Raised when a decoherence matrix is not Hermitian or not finite."""


class IntegratorDiverged(PyENMError, RuntimeError):
    """Raised when the ODE integrator fails to reach the end of the grid."""


class SingularIntermediateMap(PyENMError, RuntimeError):
    """Raised when an intermediate map cannot be formed because M_s is singular."""


class QuadratureFailed(PyENMError, RuntimeError):
    """Raised when a rate integral does not reach the requested accuracy."""


class InfeasibleRates(PyENMError, ValueError):
    """Raised when rates admit no completely positive dynamics."""


class OptimizerFailed(PyENMError, RuntimeError):
    """Raised when a numerical minimization does not converge."""


########################
#  Metrology
########################

class SingularPureState(PyENMError, ValueError):
    """Raised when the Fisher information diverges on a pure state."""


class ZeroInformation(PyENMError, ArithmeticError):
    """Raised when a Cramer-Rao bound is requested for a vanishing Fisher information."""


########################
#  Command line
########################

class ConfigError(PyENMError, ValueError):
    """Raised on invalid command-line flags or parameter files."""


class VerificationFailed(PyENMError, RuntimeError):
    """Raised when at least one property check fails."""

    def __init__(self, failures):
        self.failures = list(failures)
        super().__init__('{} check(s) failed: {}'.format(
            len(self.failures), ', '.join(self.failures)))
