"""Utility modules for baxterise."""
