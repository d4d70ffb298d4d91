"""
Mycielskian construction.

μ(G) has the fixed id layout: originals ``0..n-1``, twins ``n..2n-1``
(``n+i`` is the twin of ``i``) and the root ``2n``.  Cut sets in μ(G) are
therefore readable directly from their ids.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any

from ..errors import BudgetExceeded
from ..models import Graph, VertexSet

logger = logging.getLogger(__name__)

ROLE_ORIGINAL = "original"
ROLE_TWIN = "twin"
ROLE_ROOT = "root"

DEFAULT_ITERATE_MAX_ORDER = 10_000


@dataclass(frozen=True)
class MycielskiLabel:
    """Role bookkeeping for the vertices of μ(G) built from an order-n graph."""

    base_order: int

    @property
    def order(self) -> int:
        return 2 * self.base_order + 1

    @property
    def root(self) -> int:
        return 2 * self.base_order

    def _check(self, v: int) -> None:
        if not 0 <= v < self.order:
            raise ValueError(f"Vertex {v} is not in μ(G) of order {self.order}")

    def role(self, v: int) -> str:
        self._check(v)
        if v < self.base_order:
            return ROLE_ORIGINAL
        if v < self.root:
            return ROLE_TWIN
        return ROLE_ROOT

    def original_of(self, v: int) -> int:
        """Index in G of an original or twin vertex."""
        if self.role(v) == ROLE_ROOT:
            raise ValueError("The root has no counterpart in G")
        return v % self.base_order

    def twin_of(self, v: int) -> int:
        """x -> x' and x' -> x."""
        role = self.role(v)
        if role == ROLE_ORIGINAL:
            return v + self.base_order
        if role == ROLE_TWIN:
            return v - self.base_order
        raise ValueError("The root has no twin")

    def describe(self, v: int) -> str:
        """Human label: ``"3"`` for an original, ``"3'"`` for its twin, ``"u"`` for the root."""
        role = self.role(v)
        if role == ROLE_ROOT:
            return "u"
        return f"{self.original_of(v)}'" if role == ROLE_TWIN else str(v)

    def originals(self) -> VertexSet:
        return VertexSet(self.order, (1 << self.base_order) - 1)

    def twins(self) -> VertexSet:
        return VertexSet(self.order, ((1 << self.base_order) - 1) << self.base_order)

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for JSON serialization."""
        return {
            "base_order": self.base_order,
            "root": self.root,
            "labels": [self.describe(v) for v in range(self.order)],
        }


def mycielskian(G: Graph) -> tuple[Graph, MycielskiLabel]:
    """Build μ(G) and its label map.

    Edges: every edge ij of G, the cross edges i~(n+j) and j~(n+i), and
    every twin joined to the root.  Result has 2n+1 vertices and 3m+n edges.
    """
    n = G.n
    if n < 1:
        raise ValueError("The Mycielskian needs a graph with at least one vertex")
    root = 2 * n
    rows = [0] * (2 * n + 1)
    for i, row in enumerate(G.adjacency):
        # original i keeps its neighbours and gains their twins
        rows[i] = row | (row << n)
        # twin n+i sees the originals adjacent to i, plus the root
        rows[n + i] = row | (1 << root)
    rows[root] = ((1 << n) - 1) << n
    return Graph(2 * n + 1, tuple(rows)), MycielskiLabel(n)


def twin_set(label: MycielskiLabel, F: VertexSet) -> VertexSet:
    """F' = {n+i : i in F} as a vertex set of μ(G).

    *F* may be over the universe of G (order n) or of μ(G); either way it
    must only contain originals.
    """
    n = label.base_order
    if F.n not in (n, label.order):
        raise ValueError(
            f"Vertex set universe {F.n} matches neither G ({n}) nor μ(G) ({label.order})"
        )
    if F.mask >> n:
        stray = [v for v in F if v >= n]
        raise ValueError(f"twin_set expects originals only, got {stray}")
    return VertexSet(label.order, F.mask << n)


def twin_inverse(label: MycielskiLabel, twins: VertexSet) -> VertexSet:
    """Map a set of twins back to the originals of G (universe n)."""
    n = label.base_order
    if twins.n != label.order:
        raise ValueError(f"Expected a vertex set of μ(G) (order {label.order}), got {twins.n}")
    if twins.mask & ~label.twins().mask:
        raise ValueError("twin_inverse expects twins only")
    return VertexSet(n, twins.mask >> n)


def lift(label: MycielskiLabel, F: VertexSet) -> VertexSet:
    """Embed a vertex set of G as the same originals inside μ(G)."""
    if F.n != label.base_order:
        raise ValueError(f"Expected a vertex set of G (order {label.base_order}), got {F.n}")
    return VertexSet(label.order, F.mask)


def iterate_mycielskian(G: Graph, k: int, max_order: int = DEFAULT_ITERATE_MAX_ORDER) -> Graph:
    """μᵏ(G); k = 0 returns G unchanged.

    The order after k steps is ``2^k (n+1) - 1``; exceeding *max_order*
    raises :class:`BudgetExceeded` before any construction happens.
    """
    if k < 0:
        raise ValueError(f"Iteration count must be non-negative, got {k}")
    final_order = (G.n + 1) * (1 << k) - 1
    if final_order > max_order:
        raise BudgetExceeded(f"μ^{k}", final_order, max_order)
    for step in range(k):
        G, _ = mycielskian(G)
        logger.debug("μ step %d: n=%d m=%d", step + 1, G.n, G.m)
    return G
