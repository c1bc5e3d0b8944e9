"""Shared exception types and the default resource cap."""

DEFAULT_LIMIT = 1_000_000


class ParseError(ValueError):
    """Input text does not match the word or monomial grammar."""


class LimitError(RuntimeError):
    """An enumeration would exceed the configured element cap."""
