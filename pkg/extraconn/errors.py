"""
Exception types shared across extraconn.

Malformed input is always a ``ValueError`` subclass so callers (and the CLI)
can treat it uniformly; a refused computation is a ``RuntimeError``.
Each class defines ``__reduce__`` so it survives the trip back from a batch
worker process.
"""

from __future__ import annotations


class BudgetExceeded(RuntimeError):
    """A computation was refused because the graph order exceeds its bound."""

    def __init__(self, what: str, order: int, limit: int, hint: str = ""):
        self.what = what
        self.order = order
        self.limit = limit
        self.hint = hint
        message = f"{what} refused: order {order} exceeds budget {limit}"
        super().__init__(f"{message}; {hint}" if hint else message)

    def __reduce__(self):
        return type(self), (self.what, self.order, self.limit, self.hint)


class DisconnectedGraphError(ValueError):
    """A connectivity operation was given a disconnected graph."""


class Graph6Error(ValueError):
    """Malformed graph6 text; ``position`` is the 0-based byte offset."""

    def __init__(self, message: str, position: int, line: int | None = None):
        self.message = message
        self.position = position
        self.line = line
        where = f"line {line}, byte {position}" if line is not None else f"byte {position}"
        super().__init__(f"graph6 error at {where}: {message}")

    def __reduce__(self):
        return type(self), (self.message, self.position, self.line)

    def at_line(self, line: int) -> "Graph6Error":
        return Graph6Error(self.message, self.position, line)


class EdgeListError(ValueError):
    """Malformed edge-list text; ``line`` is 1-based."""

    def __init__(self, message: str, line: int):
        self.message = message
        self.line = line
        super().__init__(f"edge list error at line {line}: {message}")

    def __reduce__(self):
        return type(self), (self.message, self.line)
