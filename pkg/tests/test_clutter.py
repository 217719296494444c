"""Clutter parsing, validation and incidence matrices."""

import json

import numpy as np
import pytest

from toriccode import Clutter, ClutterError, incidence, load_clutter, parse_clutter, uniformity


class TestParse:
    def test_dict_form(self):
        C = parse_clutter({"n": 3, "edges": [[3, 2], [1, 2]]})
        assert C.n == 3
        # edge order preserved (it fixes t1..ts), vertices sorted within an edge
        assert C.edges == ((2, 3), (1, 2))
        assert C.s == 2

    def test_text_form_infers_n(self):
        C = parse_clutter("1 2\n# a comment\n2 3\n\n3 4\n")
        assert C.n == 4
        assert C.edges == ((1, 2), (2, 3), (3, 4))

    def test_singleton_edge_allowed(self):
        C = parse_clutter({"n": 2, "edges": [[1], [2]]})
        assert C.edges == ((1,), (2,))

    def test_one_edge_rejected(self):
        # s >= 2 so that the ambient projective space exists
        with pytest.raises(ClutterError):
            parse_clutter({"n": 2, "edges": [[1, 2]]})

    def test_out_of_range_vertex(self):
        with pytest.raises(ClutterError):
            parse_clutter({"n": 2, "edges": [[1, 2], [2, 3]]})
        with pytest.raises(ClutterError):
            parse_clutter({"n": 2, "edges": [[0, 1], [1, 2]]})

    def test_duplicate_edge(self):
        with pytest.raises(ClutterError):
            parse_clutter({"n": 3, "edges": [[1, 2], [2, 1], [2, 3]]})

    def test_repeated_vertex_in_edge(self):
        with pytest.raises(ClutterError):
            parse_clutter({"n": 3, "edges": [[1, 1], [2, 3]]})

    def test_containment_violates_clutter_property(self):
        with pytest.raises(ClutterError):
            parse_clutter({"n": 3, "edges": [[1, 2], [1, 2, 3]]})

    def test_isolated_vertex_warns(self):
        with pytest.warns(UserWarning):
            parse_clutter({"n": 4, "edges": [[1, 2], [2, 3]]})

    def test_missing_keys(self):
        with pytest.raises(ClutterError):
            parse_clutter({"edges": [[1, 2], [2, 3]]})
        with pytest.raises(ClutterError):
            parse_clutter({"n": 3})

    def test_vectors_property(self):
        C = parse_clutter({"n": 3, "edges": [[1, 2], [2, 3]]})
        assert C.vectors == ((1, 1, 0), (0, 1, 1))


class TestLoad:
    def test_load_json(self, tmp_path):
        f = tmp_path / "c.json"
        f.write_text(json.dumps({"n": 3, "edges": [[1, 2], [2, 3], [1, 3]]}))
        assert load_clutter(str(f)).s == 3

    def test_load_text(self, tmp_path):
        f = tmp_path / "c.txt"
        f.write_text("1 2\n2 3\n")
        assert load_clutter(str(f)).edges == ((1, 2), (2, 3))

    def test_load_bad_json(self, tmp_path):
        f = tmp_path / "bad.json"
        f.write_text("{oops")
        with pytest.raises(ClutterError):
            load_clutter(str(f))


class TestIncidence:
    def test_triangle_matrix(self, triangle):
        A = incidence(triangle).A
        assert A.shape == (3, 3)
        expect = np.array([[1, 1, 0], [1, 0, 1], [0, 1, 1]])
        # column j is the characteristic vector of edge j
        assert np.array_equal(A, expect[:, [0, 1, 2]][[0, 1, 2]]) or np.array_equal(
            A.T.tolist(), [list(v) for v in triangle.vectors]
        )
        assert all(tuple(A[:, j]) == triangle.vectors[j] for j in range(3))

    def test_distinct_columns_enforced(self):
        from toriccode import IncidenceMatrix

        with pytest.raises(ValueError):
            IncidenceMatrix(np.array([[1, 1], [1, 1]]))
        with pytest.raises(ValueError):
            IncidenceMatrix(np.array([[0, 2], [1, 1]]))

    def test_uniformity(self, battery):
        uni, size = uniformity(battery["K4"])
        assert uni and size == 2
        # edges {1,2} and {3}: valid clutter, not uniform
        mixed = parse_clutter({"n": 3, "edges": [[1, 2], [3]]})
        assert uniformity(mixed) == (False, None)


class TestImmutability:
    def test_frozen(self, triangle):
        with pytest.raises(Exception):
            triangle.n = 5

    def test_equality(self):
        a = parse_clutter({"n": 3, "edges": [[1, 2], [2, 3]]})
        b = parse_clutter("1 2\n2 3\n")
        assert a == b
