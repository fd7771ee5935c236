"""Command-line tools for polyrep."""
