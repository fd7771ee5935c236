"""polyrep: polynomial representations of simple polytopes."""

__version__ = "0.1.0"
