import numpy as np
import pytest

from dflag import (
    FiltrationSpec,
    PrimeField,
    build_matrix,
    build_store,
    cofaces,
    sort_columns,
)
from dflag.coboundary import SparseColumn
from dflag.oracle import oracle_enumerate

from conftest import er_digraph, reciprocal_pair, sphere_with_arc, three_clique


def dense(matrix):
    a = np.zeros((matrix.num_rows, len(matrix.columns)), dtype=np.int64)
    for j, col in enumerate(matrix.columns):
        for r, c in col.entries:
            a[r, j] = c
    return a


class TestCofaces:
    def test_three_clique_end_insertion(self):
        g = three_clique()
        assert cofaces(g, (0, 1)) == [(2, (0, 1, 2))]

    def test_three_clique_middle_insertion(self):
        g = three_clique()
        assert cofaces(g, (0, 2)) == [(1, (0, 1, 2))]

    def test_fixture_initial_insertions(self, sphere_arc_graph):
        assert cofaces(sphere_arc_graph, (2, 3)) == [
            (0, (1, 2, 3)),
            (0, (4, 2, 3)),
        ]

    @pytest.mark.parametrize("seed", range(5))
    def test_completeness_against_brute_force(self, seed):
        g = er_digraph(10, 0.35, seed=seed)
        simplices = oracle_enumerate(g)
        by_dim = {}
        for s in simplices:
            by_dim.setdefault(len(s) - 1, set()).add(s)
        for d in sorted(by_dim):
            if d + 1 not in by_dim:
                continue
            # brute force: tau is a coface of s iff deleting one position gives s
            expected = {
                (s, t)
                for s in by_dim[d]
                for t in by_dim[d + 1]
                if any(t[:i] + t[i + 1 :] == s for i in range(len(t)))
            }
            produced = {
                (s, t) for s in by_dim[d] for _, t in cofaces(g, s)
            }
            assert produced == expected


class TestBuildMatrix:
    def test_three_clique_signs(self):
        g = three_clique()
        store = build_store(g)
        over2 = build_matrix(g, store, 1, field=PrimeField(2))
        assert [col.entries for col in over2.columns] == [[(0, 1)], [(0, 1)], [(0, 1)]]
        over3 = build_matrix(g, store, 1, field=PrimeField(3))
        # d(0,1,2) = (1,2) - (0,2) + (0,1)
        assert [col.entries for col in over3.columns] == [[(0, 1)], [(0, 2)], [(0, 1)]]

    def test_reciprocal_pair_empty_columns(self):
        g = reciprocal_pair()
        store = build_store(g)
        matrix = build_matrix(g, store, 1)
        assert matrix.num_rows == 0
        assert all(col.entries == [] for col in matrix.columns)

    @pytest.mark.parametrize("q", [2, 3, 5])
    @pytest.mark.parametrize("seed", range(4))
    def test_chain_identity(self, q, seed):
        g = er_digraph(12, 0.3, seed=seed)
        store = build_store(g)
        f = PrimeField(q)
        for k in range(max(store.top_dim, 1)):
            a = dense(build_matrix(g, store, k, field=f))
            b = dense(build_matrix(g, store, k + 1, field=f))
            assert not (b @ a % q).any()

    @pytest.mark.parametrize("q", [2, 3])
    def test_equals_transposed_boundary_oracle(self, q):
        # independent boundary matrix straight from the alternating sum
        g = sphere_with_arc()
        store = build_store(g)
        f = PrimeField(q)
        for k in range(store.top_dim):
            cb = dense(build_matrix(g, store, k, field=f))
            cells = store.simplices(k + 1)
            faces = store.simplices(k)
            face_id = {s: i for i, s in enumerate(faces)}
            boundary = np.zeros((len(faces), len(cells)), dtype=np.int64)
            for j, t in enumerate(cells):
                for i in range(len(t)):
                    sign = 1 if i % 2 == 0 else q - 1
                    boundary[face_id[t[:i] + t[i + 1 :]], j] = sign
            assert (cb == boundary.T).all()

    def test_filtration_values_attached(self):
        g = er_digraph(8, 0.4, seed=2, max_weight=6)
        store = build_store(g)
        spec = FiltrationSpec("edge-max")
        matrix = build_matrix(g, store, 1, spec=spec)
        for col in matrix.columns:
            s = store.simplices(1)[col.simplex_id]
            assert col.filtration == g.edge_weights[s]


class TestSortColumns:
    def column(self, sid, filtration, rows):
        return SparseColumn(sid, filtration, [(r, 1) for r in rows])

    def test_fewest_entries_first(self):
        cols = [
            self.column(0, 0.0, [0, 1, 2]),
            self.column(1, 0.0, [4]),
            self.column(2, 0.0, [1, 3]),
        ]
        assert sort_columns(cols) == [1, 2, 0]

    def test_larger_pivot_first(self):
        cols = [
            self.column(0, 0.0, [1, 4]),
            self.column(1, 0.0, [2, 9]),
        ]
        assert sort_columns(cols) == [1, 0]

    def test_empty_columns_lead(self):
        cols = [
            self.column(0, 0.0, [3]),
            self.column(1, 0.0, []),
            self.column(2, 0.0, [1, 2]),
        ]
        assert sort_columns(cols)[0] == 1

    def test_filtration_dominates_everything(self):
        cols = [
            self.column(0, 1.0, []),
            self.column(1, 0.0, [0, 1, 2, 3]),
        ]
        assert sort_columns(cols) == [1, 0]

    def test_gap_breaks_pivot_ties(self):
        wide = self.column(0, 0.0, [0, 9])   # gap 9
        tight = self.column(1, 0.0, [8, 9])  # gap 1
        # the wide-gap column leads regardless of its list position
        assert sort_columns([tight, wide]) == [1, 0]
        assert sort_columns([wide, tight]) == [0, 1]

    def test_single_entry_gap_is_maximal(self):
        lone = self.column(0, 0.0, [9])      # gap counts as 10
        wide = self.column(1, 0.0, [0, 9])   # gap 9
        assert sort_columns([wide, lone]) == [1, 0]

    def test_sorted_filtration_invariant(self):
        g = er_digraph(10, 0.4, seed=8, max_weight=7)
        store = build_store(g)
        matrix = build_matrix(g, store, 1, spec=FiltrationSpec("edge-max"))
        values = [matrix.columns[j].filtration for j in matrix.order]
        assert values == sorted(values)
