"""Exceptions raised by the solver.

Every structural failure means the input graph is not P5-free. Where the
failing configuration pins one down, the error carries an induced P5 as
``certificate`` (a 5-tuple of vertices in path order).
"""

from __future__ import annotations


class NotP5Free(Exception):
    def __init__(self, message: str, certificate: tuple[int, ...] | None = None) -> None:
        super().__init__(message)
        self.certificate = certificate


class NoLemma1Vertex(NotP5Free):
    """No vertex of X' is adjacent to the whole of Y'."""


class HDisconnected(NotP5Free):
    """The dependency-carrying part of two dynamic blocks is disconnected."""


class TwoCrossingComponents(NotP5Free):
    """Two components of G(P) see components of G(Q) in crossed patterns."""


class ClaimViolated(NotP5Free):
    """No vertex of P touches every component of H(Q) while dominating all but one."""


class BudgetExceeded(RuntimeError):
    def __init__(self, limit: int) -> None:
        super().__init__(f"instance budget of {limit} exceeded")
        self.limit = limit


class GraphNotConnected(ValueError):
    pass
