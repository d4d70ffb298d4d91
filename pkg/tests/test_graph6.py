"""
Tests for graph6 and edge-list interchange.
"""

import io

import networkx as nx
import pytest

from extraconn.errors import EdgeListError, Graph6Error
from extraconn.families import gen_named
from extraconn.models import build_graph
from extraconn.services.graph6 import (
    decode_graph6,
    encode_graph6,
    read_edge_list,
    read_graph6_records,
    read_graph6_stream,
    write_edge_list,
)


class TestGraph6Codec:
    """Tests for single-line graph6 encoding and decoding."""

    def test_decode_k2(self):
        G = decode_graph6("A_")
        assert (G.n, G.edges()) == (2, [(0, 1)])

    def test_decode_k3(self):
        assert decode_graph6("Bw") == gen_named("complete:3")

    def test_encode_small(self):
        assert encode_graph6(gen_named("complete:2")) == "A_"
        assert encode_graph6(gen_named("complete:3")) == "Bw"
        assert encode_graph6(build_graph(1, [])) == "@"

    def test_matches_networkx(self, random_graphs):
        """Decoding inverts encoding and keeps networkx's byte layout."""
        for _, G in random_graphs[:50]:
            expected = nx.to_graph6_bytes(G.to_networkx(), header=False).strip().decode()
            assert encode_graph6(G) == expected
            assert decode_graph6(expected) == G

    def test_isolated_vertices_kept(self):
        """Edgeless bodies still produce every vertex."""
        G = decode_graph6("D??")
        assert (G.n, G.m) == (5, 0)
        assert decode_graph6("?") == build_graph(0, [])

    def test_medium_order_prefix(self):
        """Order 63 needs the four-byte ``~`` prefix."""
        G = gen_named("cycle:63")
        text = encode_graph6(G)
        assert text.startswith("~??~")
        assert decode_graph6(text) == G

    def test_header_and_whitespace_ignored(self):
        assert decode_graph6(">>graph6<<A_\n") == decode_graph6("A_")

    def test_bytes_input(self):
        assert decode_graph6(b"Bw") == gen_named("complete:3")

    def test_truncated(self):
        with pytest.raises(Graph6Error, match="truncated") as info:
            decode_graph6("A")
        assert info.value.position == 1

    def test_trailing_data(self):
        with pytest.raises(Graph6Error, match="trailing"):
            decode_graph6("A_?")

    def test_out_of_range_byte(self):
        with pytest.raises(Graph6Error, match="printable") as info:
            decode_graph6("A !")
        assert info.value.position == 1

    def test_nonzero_padding(self):
        """K2 has one data bit; the other five must be zero."""
        with pytest.raises(Graph6Error, match="padding"):
            decode_graph6("A`")

    def test_empty(self):
        with pytest.raises(Graph6Error):
            decode_graph6("")


class TestGraph6Stream:
    """Tests for multi-line graph6 input."""

    def test_two_lines(self):
        assert list(read_graph6_stream("A_\nBw\n")) == [
            gen_named("complete:2"),
            gen_named("complete:3"),
        ]

    def test_blank_lines_and_header(self):
        records = list(read_graph6_records(">>graph6<<\n\nA_\n\nBw\n"))
        assert [line for line, _ in records] == [3, 5]

    def test_header_prefix_on_first_line(self):
        assert len(list(read_graph6_stream(b">>graph6<<A_\nBw\n"))) == 2

    def test_binary_stream(self):
        source = io.BytesIO(b"A_\nBw\n")
        assert [G.n for G in read_graph6_stream(source)] == [2, 3]

    def test_empty_stream(self):
        assert list(read_graph6_stream("")) == []

    def test_malformed_line_reports_line_number(self):
        with pytest.raises(Graph6Error) as info:
            list(read_graph6_stream("A_\nB\n"))
        assert info.value.line == 2
        assert "line 2" in str(info.value)


class TestEdgeList:
    """Tests for the ``n m`` + ``u v`` format."""

    def test_parse(self):
        G = read_edge_list("# path\n4 3\n0 1\n1 2\n\n2 3  # last\n")
        assert G == gen_named("path:4")

    def test_write_then_read(self, petersen):
        text = write_edge_list(petersen)
        assert text.splitlines()[0] == "10 15"
        assert read_edge_list(text) == petersen

    def test_stream_input(self):
        assert read_edge_list(io.StringIO("2 1\n0 1\n")).m == 1

    def test_isolated_vertices(self):
        G = read_edge_list("3 0\n")
        assert (G.n, G.m) == (3, 0)

    def test_missing_header(self):
        with pytest.raises(EdgeListError, match="header"):
            read_edge_list("")

    def test_edge_count_mismatch(self):
        with pytest.raises(EdgeListError, match="declares 2"):
            read_edge_list("3 2\n0 1\n")

    def test_out_of_range(self):
        with pytest.raises(EdgeListError) as info:
            read_edge_list("3 1\n0 3\n")
        assert info.value.line == 2

    def test_self_loop(self):
        with pytest.raises(EdgeListError, match="self-loop"):
            read_edge_list("3 1\n1 1\n")

    def test_duplicate(self):
        with pytest.raises(EdgeListError, match="duplicate"):
            read_edge_list("3 2\n0 1\n1 0\n")

    def test_garbage(self):
        with pytest.raises(EdgeListError, match="two integers"):
            read_edge_list("3 1\n0 x\n")
