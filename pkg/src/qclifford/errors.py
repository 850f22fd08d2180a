"""Exception types raised across the package."""
from __future__ import annotations


class GraphFormatError(ValueError):
    """Malformed graph text, family spec or element word."""


class DisconnectedGraphError(ValueError):
    """An operation that needs a connected graph was given a disconnected one."""


class SpinPreconditionError(ValueError):
    """The graph cannot carry the left-regular spin representation."""
