"""Gamma-product identity for the q-Pochhammer logarithm and its checks."""
