"""Precision handling, arithmetic kernels and the error hierarchy."""
