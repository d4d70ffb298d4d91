"""
Tests for the graph family registry and named families.
"""

import pytest

from extraconn import families
from extraconn.families import (
    FamilySpec,
    GraphFamily,
    available_families,
    family_help,
    gen_named,
    get_family,
    register_family,
)
from extraconn.models import build_graph


class TestRegistry:
    """Tests for family registration and lookup."""

    def test_builtin_families_registered(self):
        names = available_families()
        for name in (
            "path",
            "cycle",
            "complete",
            "complete_bipartite",
            "star",
            "hypercube",
            "petersen",
            "mycielski",
            "grotzsch",
        ):
            assert name in names

    def test_unknown_family(self):
        with pytest.raises(ValueError, match="Unknown family"):
            get_family("wheel")

    def test_lookup_is_case_insensitive(self):
        assert get_family("Cycle").name == "cycle"

    def test_register_custom_family(self, monkeypatch):
        """A decorated subclass becomes available by name."""
        monkeypatch.setattr(families, "_REGISTRY", dict(families._REGISTRY))

        @register_family
        class TestTriangle(GraphFamily):
            @property
            def name(self):
                return "test_triangle"

            def build(self, params):
                return build_graph(3, [(0, 1), (1, 2), (0, 2)])

        assert "test_triangle" in available_families()
        assert gen_named("test_triangle").m == 3

    def test_help_lists_usage(self):
        text = family_help()
        assert "cycle:n" in text
        assert "complete_bipartite:a,b" in text


class TestFamilySpec:
    """Tests for the ``name:params`` grammar."""

    def test_parse_with_params(self):
        spec = FamilySpec.parse("complete_bipartite:2,3")
        assert spec == FamilySpec("complete_bipartite", (2, 3))
        assert str(spec) == "complete_bipartite:2,3"

    def test_parse_bare_name(self):
        assert str(FamilySpec.parse(" Petersen ")) == "petersen"

    def test_non_integer_params(self):
        with pytest.raises(ValueError, match="integers"):
            FamilySpec.parse("cycle:six")

    def test_wrong_arity(self):
        with pytest.raises(ValueError, match="takes"):
            FamilySpec.parse("cycle:3,4")

    def test_invalid_range(self):
        """cycle needs at least three vertices."""
        with pytest.raises(ValueError, match="n >= 3"):
            gen_named("cycle:2")


class TestFamilies:
    """Tests for the canonical family members."""

    def test_path(self):
        G = gen_named("path:5")
        assert (G.n, G.m) == (5, 4)
        assert G.edges() == [(0, 1), (1, 2), (2, 3), (3, 4)]

    def test_cycle(self):
        """C6 is 2-regular with six edges."""
        G = gen_named("cycle:6")
        assert (G.n, G.m) == (6, 6)
        assert G.degree_sequence() == [2] * 6

    def test_complete(self):
        G = gen_named("complete:5")
        assert G.m == 10
        assert G.is_complete()

    def test_complete_bipartite(self):
        G = gen_named("complete_bipartite:2,3")
        assert (G.n, G.m) == (5, 6)
        assert not G.has_edge(0, 1)
        assert G.has_edge(0, 2)

    def test_star(self):
        G = gen_named("star:4")
        assert G.degree_sequence() == [4, 1, 1, 1, 1]

    def test_hypercube(self):
        """Q3 has 8 vertices, 12 edges and is 3-regular."""
        G = gen_named("hypercube:3")
        assert (G.n, G.m) == (8, 12)
        assert G.degree_sequence() == [3] * 8

    def test_petersen(self, petersen):
        """10 vertices, 15 edges, 3-regular, girth 5."""
        assert (petersen.n, petersen.m) == (10, 15)
        assert petersen.degree_sequence() == [3] * 10
        assert not petersen.has_triangle()
        # No 4-cycles: two vertices never share two neighbours.
        for u in range(10):
            for v in range(u + 1, 10):
                assert (petersen.adjacency[u] & petersen.adjacency[v]).bit_count() <= 1
        assert all(petersen.has_edge(i, (i + 1) % 5) for i in range(5))

    def test_mycielski_series(self):
        """k = 0, 1, 2 give K2, C5 and the Grötzsch graph."""
        assert (gen_named("mycielski:0").n, gen_named("mycielski:0").m) == (2, 1)
        c5 = gen_named("mycielski:1")
        assert (c5.n, c5.m) == (5, 5)
        assert c5.degree_sequence() == [2] * 5
        grotzsch = gen_named("grotzsch")
        assert (grotzsch.n, grotzsch.m) == (11, 20)
        assert grotzsch == gen_named("mycielski:2")
        assert not grotzsch.has_triangle()
