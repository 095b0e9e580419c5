"""Helpers shared by the verify and scan commands."""
