from direction_space.exception import DirectionSpaceError


class NotTowardsInfinity(DirectionSpaceError):
    """The element has scale 1 and does not move towards infinity."""


class Inconclusive(DirectionSpaceError):
    """Neither a bounded ray distance nor monotone growth was certified on the window."""
