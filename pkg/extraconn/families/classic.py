"""
Elementary families: paths, cycles, complete and complete bipartite
graphs, stars.

Paths and cycles use consecutive ids (``i ~ i+1``); the bipartite families
put the first part at ``0..a-1``.
"""

from __future__ import annotations

from itertools import combinations

from ..models import Graph, build_graph
from . import GraphFamily, register_family


@register_family
class Path(GraphFamily):
    """P_n on ``0 - 1 - ... - n-1``."""

    @property
    def name(self) -> str:
        return "path"

    @property
    def parameters(self) -> tuple[str, ...]:
        return ("n",)

    @property
    def description(self) -> str:
        return "path of order n (n >= 1)"

    def validate(self, params):
        super().validate(params)
        if params[0] < 1:
            raise ValueError(f"path needs n >= 1, got {params[0]}")

    def build(self, params) -> Graph:
        (n,) = params
        return build_graph(n, [(i, i + 1) for i in range(n - 1)])


@register_family
class Cycle(GraphFamily):
    """C_n on ``0 - 1 - ... - n-1 - 0``."""

    @property
    def name(self) -> str:
        return "cycle"

    @property
    def parameters(self) -> tuple[str, ...]:
        return ("n",)

    @property
    def description(self) -> str:
        return "cycle of length n (n >= 3)"

    def validate(self, params):
        super().validate(params)
        if params[0] < 3:
            raise ValueError(f"cycle needs n >= 3, got {params[0]}")

    def build(self, params) -> Graph:
        (n,) = params
        return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


@register_family
class Complete(GraphFamily):
    """K_n."""

    @property
    def name(self) -> str:
        return "complete"

    @property
    def parameters(self) -> tuple[str, ...]:
        return ("n",)

    @property
    def description(self) -> str:
        return "complete graph K_n (n >= 1)"

    def validate(self, params):
        super().validate(params)
        if params[0] < 1:
            raise ValueError(f"complete needs n >= 1, got {params[0]}")

    def build(self, params) -> Graph:
        (n,) = params
        return build_graph(n, combinations(range(n), 2))


@register_family
class CompleteBipartite(GraphFamily):
    """K_{a,b} with parts ``0..a-1`` and ``a..a+b-1``."""

    @property
    def name(self) -> str:
        return "complete_bipartite"

    @property
    def parameters(self) -> tuple[str, ...]:
        return ("a", "b")

    @property
    def description(self) -> str:
        return "complete bipartite K_{a,b} (a, b >= 1)"

    def validate(self, params):
        super().validate(params)
        if min(params) < 1:
            raise ValueError(f"complete_bipartite needs a, b >= 1, got {params}")

    def build(self, params) -> Graph:
        a, b = params
        return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


@register_family
class Star(GraphFamily):
    """K_{1,k}: centre 0, leaves ``1..k``."""

    @property
    def name(self) -> str:
        return "star"

    @property
    def parameters(self) -> tuple[str, ...]:
        return ("k",)

    @property
    def description(self) -> str:
        return "star K_{1,k} with centre 0 (k >= 1)"

    def validate(self, params):
        super().validate(params)
        if params[0] < 1:
            raise ValueError(f"star needs k >= 1, got {params[0]}")

    def build(self, params) -> Graph:
        (k,) = params
        return build_graph(k + 1, [(0, i) for i in range(1, k + 1)])
