"""
Interconnection-network and Mycielski families.

Hypercube ids are coordinate bit patterns.  The Petersen graph uses the
outer 5-cycle ``0..4``, spokes ``i ~ i+5`` and the inner pentagram
``5+i ~ 5+(i+2) mod 5``.
"""

from __future__ import annotations

from ..models import Graph, build_graph
from . import GraphFamily, register_family


@register_family
class Hypercube(GraphFamily):
    """Q_d: ids are d-bit words, adjacent when they differ in one bit."""

    @property
    def name(self) -> str:
        return "hypercube"

    @property
    def parameters(self) -> tuple[str, ...]:
        return ("d",)

    @property
    def description(self) -> str:
        return "hypercube Q_d on bit patterns (d >= 1)"

    def validate(self, params):
        super().validate(params)
        if params[0] < 1:
            raise ValueError(f"hypercube needs d >= 1, got {params[0]}")

    def build(self, params) -> Graph:
        (d,) = params
        n = 1 << d
        edges = [(v, v ^ (1 << b)) for v in range(n) for b in range(d) if not v >> b & 1]
        return build_graph(n, edges)


@register_family
class Petersen(GraphFamily):
    """The Petersen graph."""

    @property
    def name(self) -> str:
        return "petersen"

    @property
    def description(self) -> str:
        return "Petersen graph (10 vertices, 3-regular, girth 5)"

    def build(self, params) -> Graph:
        outer = [(i, (i + 1) % 5) for i in range(5)]
        spokes = [(i, i + 5) for i in range(5)]
        inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        return build_graph(10, outer + spokes + inner)


@register_family
class Mycielski(GraphFamily):
    """μᵏ(K₂): k=0 is K₂, k=1 is C₅, k=2 the Grötzsch graph."""

    @property
    def name(self) -> str:
        return "mycielski"

    @property
    def parameters(self) -> tuple[str, ...]:
        return ("k",)

    @property
    def description(self) -> str:
        return "iterated Mycielskian of K_2 (k >= 0)"

    def validate(self, params):
        super().validate(params)
        if params[0] < 0:
            raise ValueError(f"mycielski needs k >= 0, got {params[0]}")

    def build(self, params) -> Graph:
        from ..services.mycielskian import iterate_mycielskian

        (k,) = params
        return iterate_mycielskian(build_graph(2, [(0, 1)]), k)


@register_family
class Grotzsch(GraphFamily):
    """The Grötzsch graph, μ²(K₂)."""

    @property
    def name(self) -> str:
        return "grotzsch"

    @property
    def description(self) -> str:
        return "Grotzsch graph, mycielski:2 (11 vertices, triangle-free)"

    def build(self, params) -> Graph:
        return Mycielski().build((2,))
