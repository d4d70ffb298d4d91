"""
Exact vertex connectivity and g-extra connectivity.

``vertex_connectivity`` follows the classical definition (a cut leaves the
graph disconnected *or trivial*, so K_n gives n-1) and is computed with
unit-capacity vertex splitting and augmenting paths.

``extra_connectivity`` searches subsets by increasing size, each size in
lexicographic order, so the first g-extra cut found is the
lexicographically smallest minimum one.  The ``naive`` method starts at
size 0 and is the oracle; the ``pruned`` method starts at κ(G) and only
applies filters that cannot discard a valid cut, so both return identical
outcomes.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any

from networkx.algorithms.connectivity import (
    build_auxiliary_node_connectivity,
    local_node_connectivity,
)
from networkx.algorithms.flow import build_residual_network, edmonds_karp

from ..errors import BudgetExceeded, DisconnectedGraphError
from ..models import Graph, VertexSet, remove_and_split

logger = logging.getLogger(__name__)

METHOD_NAIVE = "naive"
METHOD_PRUNED = "pruned"
METHODS = (METHOD_NAIVE, METHOD_PRUNED)

# Largest order each method accepts unless the caller overrides it.
DEFAULT_MAX_ORDER = {METHOD_NAIVE: 12, METHOD_PRUNED: 20}


# =============================================================================
# Result types
# =============================================================================


@dataclass(frozen=True)
class ExtraCutCertificate:
    """A g-extra cut together with the sizes of the components it leaves."""

    g: int
    cut: VertexSet
    component_sizes: tuple[int, ...]

    @property
    def value(self) -> int:
        return len(self.cut)

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for JSON serialization."""
        return {
            "g": self.g,
            "value": self.value,
            "cut": self.cut.to_list(),
            "component_sizes": list(self.component_sizes),
        }


@dataclass(frozen=True)
class SolveOutcome:
    """Found(certificate) or NotFound (``certificate is None``).

    ``candidates_checked`` is search bookkeeping and does not take part in
    equality, so naive and pruned outcomes compare equal when they agree.
    """

    g: int
    certificate: ExtraCutCertificate | None
    method: str = field(default=METHOD_PRUNED, compare=False)
    candidates_checked: int = field(default=0, compare=False)

    @property
    def found(self) -> bool:
        return self.certificate is not None

    @property
    def value(self) -> int | None:
        return self.certificate.value if self.certificate else None

    @property
    def cut(self) -> VertexSet | None:
        return self.certificate.cut if self.certificate else None

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for JSON serialization."""
        return {
            "g": self.g,
            "method": self.method,
            "found": self.found,
            "value": self.value,
            "cut": self.certificate.cut.to_list() if self.certificate else None,
            "component_sizes": list(self.certificate.component_sizes) if self.certificate else None,
            "candidates_checked": self.candidates_checked,
        }


# =============================================================================
# Vertex connectivity
# =============================================================================


def _require_connected(G: Graph) -> None:
    if not G.is_connected():
        raise DisconnectedGraphError(f"Graph of order {G.n} is not connected")


def vertex_connectivity(G: Graph) -> int:
    """κ(G) for a connected graph with n >= 2.

    Uses the minimum-degree vertex v: some minimum cut either misses v, and
    then separates v from a non-neighbour, or contains v, and then separates
    two non-adjacent neighbours of v.  Each local value is a unit-capacity
    max flow on the vertex-split auxiliary digraph.
    """
    if G.n < 2:
        raise ValueError("Vertex connectivity needs at least two vertices")
    _require_connected(G)
    if G.is_complete():
        return G.n - 1

    nxG = G.to_networkx()
    aux = build_auxiliary_node_connectivity(nxG)
    residual = build_residual_network(aux, "capacity")

    def local(s: int, t: int, cutoff: int) -> int:
        return local_node_connectivity(
            nxG, s, t, flow_func=edmonds_karp, auxiliary=aux, residual=residual, cutoff=cutoff
        )

    degrees = G.degree_sequence()
    v = min(range(G.n), key=degrees.__getitem__)
    kappa = degrees[v]
    for w in range(G.n):
        if w != v and not G.has_edge(v, w):
            kappa = min(kappa, local(v, w, kappa))
    for x, y in combinations(G.neighbors(v).members, 2):
        if not G.has_edge(x, y):
            kappa = min(kappa, local(x, y, kappa))
    return kappa


# =============================================================================
# g-extra cuts
# =============================================================================


def is_g_extra_cut(G: Graph, S: VertexSet, g: int) -> bool:
    """True iff ``G - S`` has at least two components, each of order >= g+1."""
    if g < 0:
        raise ValueError(f"g must be non-negative, got {g}")
    components = remove_and_split(G, S)
    return len(components) >= 2 and all(len(c) >= g + 1 for c in components)


def certify(G: Graph, S: VertexSet, g: int) -> ExtraCutCertificate:
    """Build a certificate for *S*, raising ``ValueError`` if it is not a g-extra cut."""
    if not is_g_extra_cut(G, S, g):
        raise ValueError(f"{S!r} is not a {g}-extra cut")
    sizes = sorted(len(c) for c in remove_and_split(G, S))
    return ExtraCutCertificate(g=g, cut=S, component_sizes=tuple(sizes))


def _split_if_extra(G: Graph, removed: int, threshold: int) -> list[int] | None:
    """Component masks of ``G - removed`` when it is a cut with all parts >= threshold."""
    comps = G.component_masks(removed)
    if len(comps) >= 2 and all(c.bit_count() >= threshold for c in comps):
        return comps
    return None


def _split_if_extra_pruned(G: Graph, removed: int, threshold: int) -> list[int] | None:
    """Same answer as :func:`_split_if_extra`, with early exits.

    The first component is grown on its own: if it covers everything left
    the set is not a cut, and if it is smaller than *threshold* the set
    cannot qualify.  Only then are the other components computed.
    """
    adjacency = G.adjacency
    remaining = G.full_mask & ~removed
    if not remaining:
        return None
    comp = frontier = remaining & -remaining
    while frontier:
        low = frontier & -frontier
        frontier ^= low
        grow = adjacency[low.bit_length() - 1] & remaining & ~comp
        comp |= grow
        frontier |= grow
    if comp == remaining or comp.bit_count() < threshold:
        return None
    return _split_if_extra(G, removed, threshold)


def extra_connectivity(
    G: Graph, g: int, method: str = METHOD_PRUNED, max_order: int | None = None
) -> SolveOutcome:
    """κ_g(G) with a lexicographically smallest minimum witness.

    Sizes run up to ``n - 2(g+1)``: beyond that two components of order
    g+1 cannot both survive.  Raises :class:`BudgetExceeded` when the order
    is above *max_order* (default per method), ``DisconnectedGraphError``
    for a disconnected graph and ``ValueError`` for a negative g or an
    unknown method.
    """
    if method not in METHODS:
        raise ValueError(f"Unknown method {method!r}. Available: {', '.join(METHODS)}")
    if g < 0:
        raise ValueError(f"g must be non-negative, got {g}")
    limit = DEFAULT_MAX_ORDER[method] if max_order is None else max_order
    if G.n > limit:
        raise BudgetExceeded(f"{method} κ_{g} search", G.n, limit)
    _require_connected(G)

    threshold = g + 1
    upper = G.n - 2 * threshold
    if upper < 0:
        return SolveOutcome(g=g, certificate=None, method=method)

    if method == METHOD_NAIVE:
        lower, check = 0, _split_if_extra
    else:
        # No set smaller than κ(G) disconnects G.
        lower, check = vertex_connectivity(G), _split_if_extra_pruned

    checked = 0
    for size in range(lower, upper + 1):
        logger.debug("%s κ_%d search: trying size %d (n=%d)", method, g, size, G.n)
        for combo in combinations(range(G.n), size):
            removed = 0
            for v in combo:
                removed |= 1 << v
            checked += 1
            comps = check(G, removed, threshold)
            if comps is not None:
                cert = ExtraCutCertificate(
                    g=g,
                    cut=VertexSet(G.n, removed),
                    component_sizes=tuple(sorted(c.bit_count() for c in comps)),
                )
                return SolveOutcome(
                    g=g, certificate=cert, method=method, candidates_checked=checked
                )
    return SolveOutcome(g=g, certificate=None, method=method, candidates_checked=checked)
