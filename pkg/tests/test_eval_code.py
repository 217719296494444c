"""Code construction, Hilbert data, degree bounds."""

import numpy as np
import pytest

from conftest import oracle_torus_h_vector
from toriccode import (
    code,
    enumerate_X,
    evaluation_matrix,
    field_from_q,
    h_vector,
    hilbert_function,
    make_field,
    monomials,
    projective_torus,
    regularity,
    singleton_bound,
)
from toriccode.eval_code import exponent_matrix, monomial_count, reduced_exponents


class TestMonomialOrder:
    def test_s3_d2_descending_revlex(self):
        names = [str(m) for m in monomials(3, 2)]
        assert names == ["t1^2", "t1*t2", "t2^2", "t1*t3", "t2*t3", "t3^2"]

    def test_t1_first_ts_last(self):
        E = exponent_matrix(4, 3)
        assert list(E[0]) == [3, 0, 0, 0]
        assert list(E[-1]) == [0, 0, 0, 3]

    def test_counts(self):
        for s, d in [(2, 5), (3, 4), (5, 2)]:
            assert len(exponent_matrix(s, d)) == monomial_count(s, d)

    def test_degree_zero(self):
        E = exponent_matrix(3, 0)
        assert E.shape == (1, 3) and not E.any()

    def test_str_of_constant(self):
        assert str(monomials(2, 0)[0]) == "1"


class TestReducedExponents:
    @pytest.mark.parametrize("s,d,q", [(3, 4, 3), (4, 6, 4), (2, 9, 5), (3, 1, 9)])
    def test_matches_explicit_reduction(self, s, d, q):
        direct = np.unique(exponent_matrix(s, d) % (q - 1), axis=0)
        assert np.array_equal(reduced_exponents(s, d, q), direct)

    def test_large_s_small_grid(self):
        # grid path: 10 variables over GF(4)
        got = reduced_exponents(10, 18, 4)
        assert got.shape[1] == 10
        sums = got.sum(axis=1)
        assert np.all(sums % 3 == 0) and np.all(sums <= 18)
        assert len(np.unique(got, axis=0)) == len(got)


class TestEvaluation:
    def test_torus_s2_q3_matrix(self):
        # T = {(1:1), (1:2)}; degree-1 monomials t1, t2
        F = make_field(3, 1)
        T = projective_torus(2, F)
        M = evaluation_matrix(T, 1)
        assert M.shape == (2, 2)
        cols = sorted(tuple(int(x) for x in col) for col in M.T)
        assert cols == [(1, 1), (1, 2)]

    def test_code_dimensions_triangle_gf9(self, triangle):
        X = enumerate_X(triangle, make_field(3, 2))
        expect = [3, 6, 10, 15, 21, 28, 36, 43, 49, 54, 58, 61, 63, 64]
        got = [hilbert_function(X, d) for d in range(1, 15)]
        assert got == expect

    def test_code_object(self, k4):
        X = enumerate_X(k4, make_field(3, 1))
        cd = code(X, 1)
        assert cd.length == 8 and cd.dimension == 6
        assert cd.generator.shape == (6, 8)
        # generator rows must be independent: rref of G keeps 6 pivots
        from toriccode._linalg import rank as gf_rank

        assert gf_rank(cd.field, cd.generator) == 6

    def test_dimension_equals_hilbert(self, battery):
        F = make_field(3, 1)
        for C in (battery["C4"], battery["star4"]):
            X = enumerate_X(C, F)
            for d in (1, 2):
                assert code(X, d).dimension == hilbert_function(X, d)

    def test_d0_and_negative(self, triangle):
        X = enumerate_X(triangle, make_field(3, 1))
        assert hilbert_function(X, 0) == 1
        with pytest.raises(ValueError):
            hilbert_function(X, -1)
        with pytest.raises(ValueError):
            code(X, 0)


class TestRegularityAndHVector:
    def test_triangle_gf9(self, triangle):
        X = enumerate_X(triangle, make_field(3, 2))
        assert regularity(X) == 14
        assert h_vector(X) == oracle_torus_h_vector(3, 9)

    def test_k4(self, k4):
        X3 = enumerate_X(k4, make_field(3, 1))
        assert regularity(X3) == 2
        assert h_vector(X3) == [1, 5, 2]
        X4 = enumerate_X(k4, make_field(2, 2))
        assert regularity(X4) == 3
        assert h_vector(X4) == [1, 5, 13, 8]

    @pytest.mark.parametrize("s,q", [(2, 3), (2, 5), (3, 4), (4, 3)])
    def test_torus_closed_forms(self, s, q):
        T = projective_torus(s, field_from_q(q))
        assert regularity(T) == (s - 1) * (q - 2)
        assert h_vector(T) == oracle_torus_h_vector(s, q)

    def test_h_vector_sums_to_size(self, battery):
        F = make_field(3, 1)
        for C in battery.values():
            X = enumerate_X(C, F)
            assert sum(h_vector(X)) == len(X)

    def test_monotone_until_regularity(self, k4):
        X = enumerate_X(k4, make_field(2, 2))
        r = regularity(X)
        vals = [hilbert_function(X, d) for d in range(r + 2)]
        assert all(a < b for a, b in zip(vals[: r + 1], vals[1 : r + 1]))
        assert vals[r] == len(X) and vals[r + 1] == len(X)
        assert hilbert_function(X, r - 1) < len(X)


class TestSingleton:
    def test_k4_gf3_values(self, k4):
        X = enumerate_X(k4, make_field(3, 1))
        assert [singleton_bound(X, d) for d in (1, 2, 3)] == [3, 1, 1]

    def test_k4_gf4_values(self, k4):
        X = enumerate_X(k4, make_field(2, 2))
        assert [singleton_bound(X, d) for d in range(1, 7)] == [22, 9, 1, 1, 1, 1]

    def test_triangle_gf9_values(self, triangle):
        X = enumerate_X(triangle, make_field(3, 2))
        expect = [62, 59, 55, 50, 44, 37, 29, 22, 16, 11, 7, 4, 2, 1]
        assert [singleton_bound(X, d) for d in range(1, 15)] == expect
