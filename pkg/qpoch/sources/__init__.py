"""Partial-sum producers, one per scaling regime."""
