"""Flat-file persistence of results."""
