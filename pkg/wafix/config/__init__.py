"""Run configuration for wafix."""
