"""Exceptions for broken internal guarantees (as opposed to rejected inputs)."""

from __future__ import annotations


class InternalInvariantError(RuntimeError):
    """A result failed its own self-check; this is a bug, not a verdict on the input."""


class StructureViolationError(InternalInvariantError):
    """The orientation rule hit a colourful graph it is not designed for."""

    def __init__(self, violation):
        self.violation = violation
        super().__init__(f"structural assumption failed: {violation}")
