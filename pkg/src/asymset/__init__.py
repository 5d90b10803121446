"""Oblivious linear compression of sets with a decoder-side prior."""

__version__ = "0.1.0"
