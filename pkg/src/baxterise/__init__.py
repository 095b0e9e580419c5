"""baxterise: exact verification of two-parameter Baxterisations."""

try:
    from importlib.metadata import version

    __version__ = version("baxterise")
except Exception:
    __version__ = "dev"
