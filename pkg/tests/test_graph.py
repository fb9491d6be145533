import pytest
from hypothesis import given
from hypothesis import strategies as st

from dflag import (
    BitVector,
    DirectedGraph,
    DuplicateEdgeError,
    LoopError,
    ParseError,
    VertexRangeError,
    dump_flag_file,
    intersect_all,
    load_edge_list,
    load_flag_file,
)

from conftest import SPHERE_ARC_EDGES


class TestBitVector:
    def test_bitwise_and(self):
        # 0111 & 1101 = 0101 as binary literals
        a = BitVector(4, 0b1101)
        b = BitVector(4, 0b0111)
        assert (a & b).bits == 0b0101

    def test_intersect_identity(self):
        x = BitVector(6, 0b101100)
        assert intersect_all([x]) == x

    def test_intersect_with_complement_is_empty(self):
        x = BitVector(6, 0b101100)
        assert intersect_all([x, x.complement()]).bits == 0

    def test_intersect_rejects_empty_and_mismatch(self):
        with pytest.raises(ValueError):
            intersect_all([])
        with pytest.raises(ValueError):
            intersect_all([BitVector(3), BitVector(4)])

    def test_bits_beyond_length_rejected(self):
        with pytest.raises(ValueError):
            BitVector(2, 0b100)

    def test_ones_and_count(self):
        v = BitVector.from_indices(10, [0, 3, 9])
        assert list(v.ones()) == [0, 3, 9]
        assert v.count() == 3
        assert v.get(3) and not v.get(4)

    @given(st.lists(st.integers(0, 31), max_size=20), st.permutations(range(4)))
    def test_intersect_order_independent(self, indices, perm):
        rows = [
            BitVector.from_indices(32, indices[i::4]) for i in range(4)
        ]
        shuffled = [rows[i] for i in perm]
        assert intersect_all(rows) == intersect_all(shuffled)


class TestFlagFormat:
    def test_smallest_clique(self):
        g = load_flag_file("dim 0\n0 0 0\ndim 1\n0 1\n1 2\n0 2")
        assert g.n == 3
        assert sorted(g.edges()) == [(0, 1), (0, 2), (1, 2)]
        assert g.edge_weights is None

    def test_reciprocal_weighted_pair(self):
        g = load_flag_file("dim 0\n0 0\ndim 1\n0 1 0.5\n1 0 0.7")
        assert g.n == 2
        assert g.edge_weights == {(0, 1): 0.5, (1, 0): 0.7}

    def test_fixture_out_degrees(self, sphere_arc_path):
        g = load_flag_file(sphere_arc_path.read_text())
        assert g.n == 5
        assert [row.count() for row in g.out_rows] == [1, 3, 1, 1, 2]
        assert sorted(g.edges()) == sorted(SPHERE_ARC_EDGES)

    def test_crlf_and_comments(self):
        g = load_flag_file("# header\r\ndim 0\r\n0 0\r\ndim 1\r\n0 1  # an edge\r\n")
        assert g.n == 2 and list(g.edges()) == [(0, 1)]

    def test_errors_carry_line_numbers(self):
        with pytest.raises(ParseError) as err:
            load_flag_file("dim 0\n0 0\ndim 1\n0 one")
        assert err.value.line == 4
        with pytest.raises(VertexRangeError):
            load_flag_file("dim 0\n0 0\ndim 1\n0 5")
        with pytest.raises(DuplicateEdgeError):
            load_flag_file("dim 0\n0 0\ndim 1\n0 1\n0 1")
        with pytest.raises(LoopError):
            load_flag_file("dim 0\n0 0\ndim 1\n1 1")

    def test_rejects_non_finite_weights(self):
        with pytest.raises(ParseError):
            load_flag_file("dim 0\n0 nan\ndim 1\n0 1")
        with pytest.raises(ParseError):
            load_flag_file("dim 0\n0 0\ndim 1\n0 1 inf")

    def test_rejects_mixed_weighting(self):
        with pytest.raises(ParseError):
            load_flag_file("dim 0\n0 0 0\ndim 1\n0 1 0.5\n1 2")

    def test_missing_headers(self):
        with pytest.raises(ParseError):
            load_flag_file("0 0\n0 1")
        with pytest.raises(ParseError):
            load_flag_file("dim 0\n0 0\n0 1")

    def test_round_trip(self, sphere_arc_path):
        text = sphere_arc_path.read_text()
        g = load_flag_file(text)
        assert load_flag_file(dump_flag_file(g)) == g
        weighted = load_flag_file("dim 0\n1 2\ndim 1\n0 1 0.5\n1 0 0.7")
        assert load_flag_file(dump_flag_file(weighted)) == weighted


class TestEdgeList:
    def test_directed_pair(self):
        g = load_edge_list("0 1\n1 0", directed=True)
        assert g.n == 2 and sorted(g.edges()) == [(0, 1), (1, 0)]

    def test_symmetrization(self):
        g = load_edge_list("0 1\n1 0", directed=False)
        assert g.n == 2 and list(g.edges()) == [(0, 1)]

    def test_id_compaction(self):
        g = load_edge_list("7 9\n9 12", directed=True)
        assert g.n == 3 and sorted(g.edges()) == [(0, 1), (1, 2)]

    def test_undirected_same_orientation_repeat_is_duplicate(self):
        with pytest.raises(DuplicateEdgeError):
            load_edge_list("0 1\n0 1", directed=False)

    def test_undirected_weight_conflict(self):
        with pytest.raises(DuplicateEdgeError):
            load_edge_list("0 1 0.5\n1 0 0.7", directed=False)
        g = load_edge_list("0 1 0.5\n1 0 0.5", directed=False)
        assert g.edge_weights == {(0, 1): 0.5}


class TestTranspose:
    def test_in_rows_match_out_rows(self):
        g = DirectedGraph.from_edges(5, SPHERE_ARC_EDGES)
        for v in range(g.n):
            for w in range(g.n):
                assert g.out_rows[v].get(w) == g.in_rows[w].get(v)

    def test_no_loops_enforced(self):
        with pytest.raises(LoopError):
            DirectedGraph.from_edges(2, [(1, 1)])
