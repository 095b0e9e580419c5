"""Entry point for the baxterise package when run as a module."""

from baxterise.cli import app

if __name__ == "__main__":
    app()
