from direction_space.exception import DirectionSpaceError


class OracleHorizonExceeded(DirectionSpaceError):
    """The orbit count needs a hull larger than the oracle can scan."""


class IncompatibleInstances(DirectionSpaceError):
    """A handle or element does not belong to the instance it is used with."""


class DepthInfeasible(DirectionSpaceError):
    """The finite quotient at the requested depth is too large to enumerate."""
