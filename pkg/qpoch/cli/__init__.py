"""Command-line layer: request parsing, dependency wiring and commands."""
