from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from wonderlie.covariants import PolyMap, apply_phi, is_equivariant
from wonderlie.invariants import (
    InvarianceError,
    InvariantSet,
    ZeroComponentError,
    algebraically_independent,
    bihomogeneous_covariant,
    catalog_invariants,
    check_three_wonderful,
    doubled_invariants,
    generic_matrix,
    jacobian_rank,
    matrix_power_covariants,
    matrix_powers,
    pair_invariants,
    pfaffian,
    poly_trace,
    trace_power_invariants,
)
from wonderlie.lie import adjoint, coadjoint, coordinates_solver, get_algebra, get_pair, sl
from wonderlie.lie.strata_data import coadjoint_strata
from wonderlie.polyalg import Polynomial


def conjugate(g, x, t, s):
    """Coordinates of ``u X u^-1`` for a product of elementary matrices ``u``."""
    X = sympy.zeros(*sympy.Matrix(g.realization[0]).shape)
    for c, b in zip(x, g.realization):
        X += c * sympy.Matrix(b)
    n = X.shape[0]
    u = sympy.eye(n)
    u[0, n - 1] = t
    w = sympy.eye(n)
    w[n - 1, 0] = s
    m = u * w
    Y = m * X * m.inv()
    return coordinates_solver(g.realization)([[Fraction(str(Y[r, c])) for c in range(n)] for r in range(n)])


class TestInvariance:
    @given(st.sampled_from(["sl2", "sl3", "gl2"]), st.lists(st.integers(-3, 3), min_size=9, max_size=9),
           st.integers(-3, 3), st.integers(-3, 3))
    def test_group_conjugation_oracle(self, name, vals, t, s):
        g = get_algebra(name)
        invs = trace_power_invariants(g, range(1 if name.startswith("gl") else 2, 4))
        x = vals[: g.dim]
        y = conjugate(g, x, t, s)
        for f in invs.generators:
            assert f.evaluate(y) == f.evaluate(x)

    def test_sl2_casimir(self):
        (f,) = catalog_invariants("sl2").generators
        # coadjoint coordinates dual to (e, h, f): proportional to h^2 + 4ef read through the form
        assert f == Polynomial(3, {(1, 0, 1): 2, (0, 2, 0): Fraction(1, 2)})

    def test_non_invariant_rejected(self):
        with pytest.raises(InvarianceError):
            InvariantSet(coadjoint(sl(2)), (Polynomial.variable(3, 0),), "bogus")

    @pytest.mark.parametrize("name,degrees", [
        ("sl3", (2, 3)), ("sp4", (2, 4)), ("gl2", (1, 2)), ("so5", (2, 4)), ("so6", (2, 4, 3)), ("abelian2", (1, 1)),
        ("sl2-ltimes-sl2", (2, 2)), ("sl3-ltimes-sl3", (2, 3, 2, 3)),
    ])
    def test_catalog_degrees_and_independence(self, name, degrees):
        invs = catalog_invariants(name)
        assert invs.degrees == degrees
        assert algebraically_independent(invs)

    def test_pfaffian_squares_to_determinant(self):
        a = [[0, 1, 2, 3], [-1, 0, 4, 5], [-2, -4, 0, 6], [-3, -5, -6, 0]]
        assert pfaffian(a) ** 2 == sympy.Matrix(a).det()
        assert pfaffian(a) == 1 * 6 - 2 * 5 + 3 * 4

    def test_dependent_set_detected(self):
        (f,) = catalog_invariants("sl2").generators
        dup = InvariantSet(coadjoint(sl(2)), (f, f * f), "dup")
        assert jacobian_rank(dup) == 1 and not algebraically_independent(dup)

    def test_doubling_needs_coadjoint_invariants(self):
        g = get_algebra("sl2-ltimes-sl2")
        adj = trace_power_invariants(sl(2), [2])
        with pytest.raises(ValueError):
            doubled_invariants(InvariantSet(adjoint(sl(2)), adj.generators, "adjoint"), g)


class TestWonderful:
    @pytest.mark.parametrize("name,ind", [
        ("sl2", 1), ("sl3", 2), ("sp4", 2),
        ("sl2-ltimes-sl2", 2), ("sl3-ltimes-sl3", 4), ("sp4-ltimes-sp4", 4),
    ])
    def test_asserted(self, name, ind):
        g = get_algebra(name)
        rep = check_three_wonderful(g, catalog_invariants(name), coadjoint_strata(g))
        assert rep.overall == "asserted" and rep.index == ind
        assert 2 * sum(rep.degrees) == g.dim + ind

    def test_without_strata_inconclusive(self):
        rep = check_three_wonderful(sl(2), catalog_invariants("sl2"))
        assert rep.overall == "inconclusive" and rep.poly_count_ok and rep.degree_sum_ok

    def test_missing_generator_refuted(self):
        g = get_algebra("sl3")
        (f2, _) = catalog_invariants("sl3").generators
        rep = check_three_wonderful(g, InvariantSet(coadjoint(g), (f2,), "partial"), coadjoint_strata(g))
        assert rep.overall == "refuted"


class TestPairCovariants:
    def test_trace_square_component_vanishes(self):
        pair = get_pair("sl4-pair")
        sq = poly_trace(matrix_powers(generic_matrix(pair.ambient), 2)[1])
        with pytest.raises(ZeroComponentError):
            bihomogeneous_covariant(sq, pair)

    def test_toy_pair_has_no_covariant(self):
        pair = get_pair("sl2-pair")
        cube = poly_trace(matrix_powers(generic_matrix(pair.ambient), 3)[2])
        with pytest.raises(ZeroComponentError):
            bihomogeneous_covariant(cube, pair)
        assert matrix_power_covariants(pair) == []

    @pytest.mark.parametrize("name,count", [("sl3-pair", 1), ("sl4-pair", 1), ("sl5-pair", 2), ("sl6-pair", 2)])
    def test_matrix_powers(self, name, count):
        pair = get_pair(name)
        Fs = matrix_power_covariants(pair)
        assert len(Fs) == count
        iso = pair.isotropy_representation()
        for i, F in enumerate(Fs, start=1):
            assert F.degree == 2 * i
            assert apply_phi(iso, F).is_zero()
            assert is_equivariant(F, iso, adjoint(iso.algebra))

    def test_cube_trace_gives_three_times_square(self):
        pair = get_pair("sl4-pair")
        cube = poly_trace(matrix_powers(generic_matrix(pair.ambient), 3)[2])
        (F,) = matrix_power_covariants(pair)
        B = bihomogeneous_covariant(cube, pair)
        assert B == F.times(Polynomial.constant(F.source_dim, 3))

    def test_pair_invariants(self):
        invs = pair_invariants(get_pair("sl5-pair"))
        assert invs.degrees == (2, 4) and algebraically_independent(invs)

    def test_wrong_space_rejected(self):
        with pytest.raises(ValueError):
            bihomogeneous_covariant(Polynomial.variable(3, 0), get_pair("sl4-pair"))


def test_mixed_map_not_equivariant():
    g = sl(2)
    x = [Polynomial.variable(3, i) for i in range(3)]
    F = PolyMap.of([x[0] * x[0], x[1], x[2]])
    assert not is_equivariant(F, adjoint(g), adjoint(g))
