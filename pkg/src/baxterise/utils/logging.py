"""Diagnostic logging setup."""

import logging

from rich.console import Console
from rich.logging import RichHandler

_HANDLER_NAME = "baxterise-rich"


def configure_logging(level: str = "WARNING") -> None:
    """Route ``baxterise.*`` loggers to stderr through a single Rich handler.

    Calling it again only changes the level.
    """
    root = logging.getLogger("baxterise")
    root.setLevel(level.upper())

    # Already configured
    if any(h.get_name() == _HANDLER_NAME for h in root.handlers):
        return

    handler = RichHandler(
        console=Console(stderr=True),
        show_time=False,
        show_path=False,
        markup=False,
    )
    handler.set_name(_HANDLER_NAME)
    handler.setFormatter(logging.Formatter("%(name)s: %(message)s"))
    root.addHandler(handler)
