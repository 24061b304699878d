"""Special functions evaluated at caller-specified precision."""
