"""Shell completion for baxterise."""
