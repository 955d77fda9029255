from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st
from strategies import int_matrices, points, polynomials, rationals

from wonderlie.polyalg import (
    GradedLinearSystem,
    InfeasibilityCertificate,
    LinearSolution,
    PolyMatrix,
    Polynomial,
    RankNotCertified,
    bareiss_rank,
    certificate_holds,
    generic_rank,
    graded_kernel_basis,
    inverse,
    matmul,
    monomials,
    nullspace,
    rank,
    rank_mod_p,
    residual,
    solve_or_certify,
)
from wonderlie.polyalg.polymatrix import random_point


def x(i, n=3):
    return Polynomial.variable(n, i)


class TestPolynomial:
    def test_display_and_degree(self):
        p = x(0) * x(0) + x(1).scale(3)
        assert str(p) == "x0^2 + 3*x1"
        assert p.degree == 2
        assert Polynomial.zero(3).degree == -1

    def test_floats_refused(self):
        with pytest.raises(TypeError):
            Polynomial(1, {(1,): 0.5})
        with pytest.raises(TypeError):
            x(0) + 0.25

    def test_fraction_coefficients_normalize(self):
        p = Polynomial(1, {(1,): Fraction(4, 2)})
        assert p.coefficient((1,)) == 2 and isinstance(p.coefficient((1,)), int)

    def test_mismatched_variable_counts(self):
        with pytest.raises(ValueError):
            x(0, 2) + x(0, 3)

    def test_evaluate_exact(self):
        p = x(0).scale(Fraction(1, 3)) * x(1) - 1
        assert p.evaluate([Fraction(3, 2), 4, 0]) == 1

    def test_exact_division(self):
        a = x(0) + x(1)
        b = x(0) - x(2).scale(2)
        assert (a * b).exact_div(b) == a

    def test_monomial_count(self):
        assert len(monomials(3, 4)) == 15
        assert len(monomials(6, 2)) == 21

    @given(polynomials(), polynomials(), polynomials())
    def test_ring_axioms(self, a, b, c):
        assert (a + b) * c == a * c + b * c
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a - a == Polynomial.zero(3)

    @given(polynomials(), polynomials(), st.integers(0, 2))
    def test_leibniz(self, a, b, i):
        assert (a * b).diff(i) == a.diff(i) * b + a * b.diff(i)

    @given(polynomials(), polynomials(), points(3))
    def test_evaluation_is_a_homomorphism(self, a, b, v):
        assert (a * b).evaluate(v) == a.evaluate(v) * b.evaluate(v)
        assert (a + b).evaluate(v) == a.evaluate(v) + b.evaluate(v)

    @given(polynomials(), st.lists(st.lists(st.integers(-3, 3), min_size=2, max_size=2), min_size=3, max_size=3),
           points(2))
    def test_compose_linear_matches_evaluation(self, p, A, w):
        v = [sum(a * b for a, b in zip(row, w)) for row in A]
        assert p.compose_linear(A).evaluate(w) == p.evaluate(v)

    @given(polynomials())
    def test_homogeneous_split_sums_back(self, p):
        total = Polynomial.zero(3)
        for d, part in p.homogeneous_components().items():
            assert part.is_homogeneous() and part.degree == d
            total = total + part
        assert total == p

    @given(polynomials())
    def test_json_roundtrip(self, p):
        assert Polynomial.from_json(p.to_json()) == p

    @given(polynomials(coeffs=st.integers(-5, 5)))
    def test_against_sympy_expansion(self, p):
        s = sympy.symbols("x0:3")
        expr = sum(c * sympy.Mul(*[v ** e for v, e in zip(s, exps)]) for exps, c in p.terms())
        sq = sympy.Poly(sympy.expand(expr ** 2), *s)
        mine = p * p
        assert {m: int(c) for m, c in sq.terms() if c} == {m: c for m, c in mine.terms()}


class TestLinalg:
    @given(int_matrices())
    def test_rank_matches_sympy(self, m):
        assert rank(m) == sympy.Matrix(m).rank()

    @given(int_matrices())
    def test_nullspace_vectors_are_killed(self, m):
        ns = nullspace(m)
        assert len(ns) == len(m[0]) - rank(m)
        for v in ns:
            assert all(sum(a * b for a, b in zip(row, v)) == 0 for row in m)

    @given(int_matrices(max_rows=8, max_cols=5, lo=-50, hi=50))
    def test_mod_p_rank_never_exceeds_exact(self, m):
        rows = [{j: v for j, v in enumerate(r) if v} for r in m]
        assert rank_mod_p(rows, len(m[0])) <= rank(m)
        assert rank_mod_p(rows, len(m[0]), 3) <= rank(m)

    def test_inverse(self):
        a = [[2, 1], [Fraction(1, 2), 3]]
        assert matmul(a, inverse(a)) == [[1, 0], [0, 1]]
        with pytest.raises(ValueError):
            inverse([[1, 2], [2, 4]])

    @given(int_matrices(max_rows=5, max_cols=4), st.lists(rationals, min_size=5, max_size=5))
    def test_solve_or_certify(self, m, b):
        b = b[: len(m)]
        system = GradedLinearSystem(len(m[0]), [{j: v for j, v in enumerate(r) if v} for r in m], b)
        out = solve_or_certify(system)
        if isinstance(out, LinearSolution):
            assert not any(residual(system, out.x))
        else:
            assert isinstance(out, InfeasibilityCertificate)
            assert certificate_holds(system, out)
            # independent oracle: the augmented rank jumps
            aug = [list(r) + [c] for r, c in zip(m, b)]
            assert sympy.Matrix(aug).rank() > sympy.Matrix(m).rank()


class TestPolyMatrix:
    def test_bareiss_matches_generic_rank(self):
        a, b = x(0, 2), x(1, 2)
        m = PolyMatrix([[a, b], [a * a, a * b]], 2)
        assert bareiss_rank(m) == 1
        assert generic_rank(m, seed=3).rank == 1

    def test_graded_kernel(self):
        a, b = x(0, 2), x(1, 2)
        m = PolyMatrix([[a, b]], 2)
        ker = graded_kernel_basis(m, 1)
        assert len(ker) == 1
        assert m.annihilates(ker[0])

    def test_uncertified_rank_raises(self):
        # 7x7 rank-deficient with no low-degree kernel and no hints
        n = 7
        v = [Polynomial.variable(n, i) for i in range(n)]
        rows = [[v[i] ** 3 * v[j] for j in range(n)] for i in range(n)]
        with pytest.raises(RankNotCertified):
            generic_rank(PolyMatrix(rows, n), seed=0, max_kernel_degree=0, bareiss_limit=0)

    def test_hint_must_be_in_kernel(self):
        a = x(0, 1)
        m = PolyMatrix([[a, a], [a, a]], 1)
        with pytest.raises(ValueError):
            generic_rank(m, hints=[[a, a]], max_kernel_degree=-1, bareiss_limit=0)

    def test_random_point_in_range(self):
        import random

        p = random_point(random.Random(1), 50)
        assert all(-10 <= t <= 10 for t in p)
