from direction_space.exception import DirectionSpaceError


class InvalidIsometry(DirectionSpaceError):
    """A map fails to be an adjacency-preserving bijection on the scanned ball."""


class NotHyperbolic(DirectionSpaceError):
    """The operation needs a hyperbolic isometry."""


class ConvergenceCheckFailed(DirectionSpaceError):
    """A truncated orbit does not pass the convergence-at-infinity proxy, the horizon is too small."""


class AxisNotFoundWithinHorizon(DirectionSpaceError):
    """The concatenated orbit path is not geodesic or not translated inside the window."""


class HorizonTooSmall(DirectionSpaceError):
    """A property could not be certified on the scanned window."""


class ColoringDegenerate(DirectionSpaceError):
    """No power within bounds gives a proper edge colouring of the near-axis set."""


class Incompatible(DirectionSpaceError):
    """The maps of an inverse system do not compose consistently."""
