"""Signed Young permutation modules over odd prime characteristic."""

__version__ = "0.1.0"
