"""Exact algebra behind the baxterise commands."""
