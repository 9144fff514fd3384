class DirectionSpaceError(Exception):
    """Base class of every error raised by a computation."""
