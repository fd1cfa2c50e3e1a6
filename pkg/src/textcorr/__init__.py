"""Automatic detection and correction of word-level errors in text."""

__version__ = "0.1.0"
