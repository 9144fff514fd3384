from direction_space.exception import DirectionSpaceError


class Unreachable(DirectionSpaceError):
    """No path of length at most the horizon joins the two vertices."""

    def __init__(self, horizon: int, message: str = ""):
        self.horizon = horizon
        super().__init__(message or f"no path within horizon {horizon}")


class EmptySample(DirectionSpaceError):
    """A hyperbolicity scan was asked to run over no vertices."""


class NotGeodesic(DirectionSpaceError):
    """A path is not a shortest path between its endpoints."""


class EndpointMismatch(DirectionSpaceError):
    """Two paths that must share endpoints and length do not."""
