"""
Core graph types for extraconn.

``Graph`` is an immutable simple undirected graph on the dense ids
``0..n-1``; adjacency rows and vertex sets are integer bitmasks so the
subset searches in :mod:`extraconn.services.connectivity` stay cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

import networkx as nx
import numpy as np

from .errors import BudgetExceeded


def _bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of *mask* in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# =============================================================================
# VertexSet
# =============================================================================


@dataclass(frozen=True)
class VertexSet:
    """A subset of ``{0..n-1}`` stored as a bitmask."""

    n: int
    mask: int = 0

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"Universe size must be non-negative, got {self.n}")
        if self.mask < 0 or self.mask >> self.n:
            raise ValueError(f"Vertex set mask {self.mask:#x} has members outside 0..{self.n - 1}")

    @classmethod
    def from_iterable(cls, n: int, members: Iterable[int]) -> "VertexSet":
        """Build a set from explicit member ids (range-checked)."""
        mask = 0
        for v in members:
            if not 0 <= v < n:
                raise ValueError(f"Vertex {v} out of range for order {n}")
            mask |= 1 << v
        return cls(n, mask)

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        return cls(n, (1 << n) - 1)

    @property
    def members(self) -> tuple[int, ...]:
        """Members in increasing order."""
        return tuple(_bits(self.mask))

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __iter__(self) -> Iterator[int]:
        return _bits(self.mask)

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and 0 <= v < self.n and bool(self.mask >> v & 1)

    def __bool__(self) -> bool:
        return self.mask != 0

    def _check_universe(self, other: "VertexSet") -> None:
        if other.n != self.n:
            raise ValueError(f"Vertex sets over different universes ({self.n} vs {other.n})")

    def __or__(self, other: "VertexSet") -> "VertexSet":
        self._check_universe(other)
        return VertexSet(self.n, self.mask | other.mask)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        self._check_universe(other)
        return VertexSet(self.n, self.mask & other.mask)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        self._check_universe(other)
        return VertexSet(self.n, self.mask & ~other.mask)

    def complement(self) -> "VertexSet":
        return VertexSet(self.n, ((1 << self.n) - 1) & ~self.mask)

    def sort_key(self) -> tuple[int, ...]:
        """Lexicographic key over the sorted member list."""
        return self.members

    def to_list(self) -> list[int]:
        return list(self.members)

    def __repr__(self) -> str:
        return f"VertexSet({{{', '.join(map(str, self.members))}}}, n={self.n})"


# =============================================================================
# Graph
# =============================================================================


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph.

    ``adjacency[v]`` is the bitmask of neighbours of ``v``. Instances should
    be made with :func:`build_graph` (or the ``from_*`` constructors), which
    validate the input; ``__post_init__`` re-checks the structural invariants
    so a hand-built instance cannot be asymmetric or carry loops.
    """

    n: int
    adjacency: tuple[int, ...]

    def __post_init__(self):
        if len(self.adjacency) != self.n:
            raise ValueError(f"Adjacency has {len(self.adjacency)} rows for order {self.n}")
        for v, row in enumerate(self.adjacency):
            if row < 0 or row >> self.n:
                raise ValueError(f"Row {v} references vertices outside 0..{self.n - 1}")
            if row >> v & 1:
                raise ValueError(f"Self-loop at vertex {v}")
            for w in _bits(row):
                if not self.adjacency[w] >> v & 1:
                    raise ValueError(f"Asymmetric adjacency between {v} and {w}")
        # Handshake lemma: every edge is counted from both ends.
        if sum(row.bit_count() for row in self.adjacency) % 2:
            raise ValueError("Degree sum is odd")

    # --- Size ---------------------------------------------------------------

    @property
    def m(self) -> int:
        """Number of edges."""
        return sum(row.bit_count() for row in self.adjacency) // 2

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def vertices(self) -> VertexSet:
        return VertexSet.full(self.n)

    # --- Adjacency queries --------------------------------------------------

    def neighbors(self, v: int) -> VertexSet:
        return VertexSet(self.n, self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    def degrees(self) -> np.ndarray:
        """Degree of every vertex, indexed by id."""
        counts = (row.bit_count() for row in self.adjacency)
        return np.fromiter(counts, dtype=np.int64, count=self.n)

    def degree_sequence(self) -> list[int]:
        """Degrees listed by vertex id (not sorted)."""
        return self.degrees().tolist()

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` pairs with ``u < v``, in lexicographic order."""
        return [
            (u, v) for u in range(self.n) for v in _bits(self.adjacency[u] >> (u + 1) << (u + 1))
        ]

    # --- Structure ----------------------------------------------------------

    def component_masks(self, removed: int = 0) -> list[int]:
        """Components of ``G - removed`` as bitmasks, ordered by minimum id."""
        remaining = self.full_mask & ~removed
        out = []
        while remaining:
            seed = remaining & -remaining
            comp = frontier = seed
            while frontier:
                low = frontier & -frontier
                frontier ^= low
                grow = self.adjacency[low.bit_length() - 1] & remaining & ~comp
                comp |= grow
                frontier |= grow
            out.append(comp)
            remaining &= ~comp
        return out

    def is_connected(self) -> bool:
        """True when the graph has exactly one component (n >= 1)."""
        return self.n >= 1 and len(self.component_masks()) == 1

    def has_triangle(self) -> bool:
        """Brute-force triangle scan over edges."""
        return any(self.adjacency[u] & self.adjacency[v] for u, v in self.edges())

    def is_complete(self) -> bool:
        full = self.full_mask
        return all(row | (1 << v) == full for v, row in enumerate(self.adjacency))

    # --- Conversions --------------------------------------------------------

    def to_networkx(self) -> nx.Graph:
        G = nx.Graph()
        G.add_nodes_from(range(self.n))
        G.add_edges_from(self.edges())
        return G

    @classmethod
    def from_networkx(cls, G: nx.Graph) -> "Graph":
        """Relabel nodes to ``0..n-1`` in sorted order and build a Graph."""
        order = {node: i for i, node in enumerate(sorted(G.nodes()))}
        return build_graph(len(order), [(order[u], order[v]) for u, v in G.edges()])

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


# =============================================================================
# Operations
# =============================================================================


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a validated :class:`Graph`.

    Self-loops, duplicate pairs (in either orientation) and out-of-range
    ids are rejected with ``ValueError``; edge order does not matter.
    """
    if n < 0:
        raise ValueError(f"Order must be non-negative, got {n}")
    rows = [0] * n
    for pair in edges:
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"Edge {pair!r} has an id out of range 0..{n - 1}")
        if u == v:
            raise ValueError(f"Self-loop at vertex {u}")
        if rows[u] >> v & 1:
            raise ValueError(f"Duplicate edge {pair!r}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def min_degree(G: Graph) -> int:
    """δ(G)."""
    if G.n == 0:
        raise ValueError("Minimum degree is undefined for the empty graph")
    return int(G.degrees().min())


def set_neighborhood(G: Graph, X: VertexSet) -> VertexSet:
    """N_G(X): vertices outside X adjacent to some member of X."""
    _check_subset(G, X)
    mask = 0
    for x in X:
        mask |= G.adjacency[x]
    return VertexSet(G.n, mask & ~X.mask)


def remove_and_split(G: Graph, S: VertexSet) -> list[VertexSet]:
    """Connected components of ``G - S``, ordered by their minimum id."""
    _check_subset(G, S)
    return [VertexSet(G.n, comp) for comp in G.component_masks(S.mask)]


def are_isomorphic(G: Graph, H: Graph, max_order: int = 12) -> bool:
    """Isomorphism test for small graphs (VF2 via networkx)."""
    for graph in (G, H):
        if graph.n > max_order:
            raise BudgetExceeded("isomorphism test", graph.n, max_order)
    if G.n != H.n or G.m != H.m:
        return False
    if not np.array_equal(np.sort(G.degrees()), np.sort(H.degrees())):
        return False
    return nx.is_isomorphic(G.to_networkx(), H.to_networkx())


def _check_subset(G: Graph, X: VertexSet) -> None:
    if X.n != G.n:
        raise ValueError(f"Vertex set universe {X.n} does not match graph order {G.n}")
