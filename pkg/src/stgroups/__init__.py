"""Exact classification toolkit for compact subgroups of USp(6)."""

__version__ = "0.1.0"
