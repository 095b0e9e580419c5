"""Test module for baxterise."""
