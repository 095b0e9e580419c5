"""Exception hierarchy shared by the core modules."""


class BaxteriseError(Exception):
    """Base class for every error raised by baxterise."""

    pass
