"""
Random and exhaustive graph generation.

Both generators visit the pairs ``(i, j)``, ``i < j``, in lexicographic
order.  Random graphs draw one ``rng.random()`` per pair from
``numpy.random.default_rng(seed)`` (PCG64) and keep the pair when the draw
is below ``p``.  Labeled enumeration walks the edge masks ``0 .. 2^C(n,2)-1``
in increasing order, bit k standing for the k-th pair.
"""

from __future__ import annotations

import logging
from itertools import combinations
from typing import Iterator

import numpy as np

from ..errors import BudgetExceeded
from ..models import Graph

logger = logging.getLogger(__name__)

DEFAULT_ENUMERATE_MAX_ORDER = 6


def _pairs(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(n), 2))


def _graph_from_pair_mask(n: int, pairs: list[tuple[int, int]], mask: int) -> Graph:
    rows = [0] * n
    k = 0
    while mask:
        if mask & 1:
            i, j = pairs[k]
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        mask >>= 1
        k += 1
    return Graph(n, tuple(rows))


def gen_random(n: int, p: float, seed: int) -> Graph:
    """G(n, p) with a seeded, platform-independent stream."""
    if n < 0:
        raise ValueError(f"Order must be non-negative, got {n}")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"Edge probability must lie in [0, 1], got {p}")
    pairs = _pairs(n)
    rng = np.random.default_rng(seed)
    draws = rng.random(len(pairs))
    mask = 0
    for k in np.flatnonzero(draws < p):
        mask |= 1 << int(k)
    return _graph_from_pair_mask(n, pairs, mask)


def gen_random_connected(n: int, p: float, seed: int, max_tries: int = 1000) -> tuple[Graph, int]:
    """First connected G(n, p) sample at seeds ``seed, seed+1, ...``.

    Returns the graph and the seed that produced it, so fixtures can be
    reproduced with :func:`gen_random` alone.
    """
    for offset in range(max_tries):
        G = gen_random(n, p, seed + offset)
        if G.is_connected():
            return G, seed + offset
    raise ValueError(f"No connected G({n}, {p}) within {max_tries} seeds from {seed}")


def enumerate_labeled_connected(
    n: int, max_order: int = DEFAULT_ENUMERATE_MAX_ORDER
) -> Iterator[Graph]:
    """Every labeled connected simple graph on n vertices, exactly once.

    Larger orders are refused; feed externally generated graph6 files
    through :func:`extraconn.services.graph6.read_graph6_stream` instead.
    """
    if n < 1:
        raise ValueError(f"Enumeration needs n >= 1, got {n}")
    if n > max_order:
        raise BudgetExceeded(
            "built-in enumeration",
            n,
            max_order,
            hint=f"supply a graph6 corpus instead (e.g. `geng -c {n}`)",
        )
    pairs = _pairs(n)
    total = 1 << len(pairs)
    logger.info("Enumerating %d labeled candidates on %d vertices", total, n)
    for mask in range(total):
        # Fewer than n-1 edges cannot connect n vertices.
        if mask.bit_count() < n - 1:
            continue
        G = _graph_from_pair_mask(n, pairs, mask)
        if G.is_connected():
            yield G
