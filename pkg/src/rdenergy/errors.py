"""Exception types raised across the package."""


class RDEnergyError(Exception):
    """Base class for all errors raised by rdenergy."""


class DisconnectedGraph(RDEnergyError):
    pass


class NoSuchEdge(RDEnergyError):
    pass


class NotSymmetric(RDEnergyError):
    pass


class InvalidBlockSpec(RDEnergyError):
    """A block specification violates one of the structural hypotheses.

    The message names the violated condition.
    """


class InternalInconsistency(RDEnergyError):
    pass


class PreconditionViolated(RDEnergyError, ValueError):
    pass
