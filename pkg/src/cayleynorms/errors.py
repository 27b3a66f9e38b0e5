"""Shared exception types."""


class CapacityError(RuntimeError):
    """An exact computation would exceed its configured size cap."""


class GroupAxiomError(ValueError):
    """A would-be group table violates a group axiom."""
