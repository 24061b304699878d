"""Asymptotic expansions: symbolic coefficients and their numeric evaluation."""
