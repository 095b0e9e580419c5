"""Commands module for baxterise."""
