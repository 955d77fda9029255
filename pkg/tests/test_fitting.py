from fractions import Fraction
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from wonderlie.covariants import PolyMap
from wonderlie.fitting import (
    MomentData,
    MomentError,
    OrbitDataError,
    Partition,
    PartitionError,
    centralizer_dim_bruteforce,
    centralizer_dim_sl,
    chain_diagrams,
    fiber_dimension_check,
    graded_null_cone,
    image_closure_dim,
    inequality_case1,
    inequality_case2,
    is_orthogonal_partition,
    kappa_residuals,
    kappa_vanishing_check,
    moment_map,
    only_origin,
    orthogonal_partitions,
    pair_partition_data,
    parse_partition,
    partitions,
    pfaffian_gradient_vanishes,
    pfaffian_vanishing_rule,
    strata_check,
    strata_check_direct,
)
from wonderlie.invariants import catalog_invariants, matrix_power_covariants, pair_invariants
from wonderlie.lie import adjoint, coadjoint, get_algebra, get_pair, pair_case, sl
from wonderlie.polyalg import Polynomial


def partition_counts(n):
    # independent count via the generating-function recursion
    p = [1] + [0] * n
    for k in range(1, n + 1):
        for m in range(k, n + 1):
            p[m] += p[m - k]
    return p[n]


class TestPartitions:
    def test_basics(self):
        p = Partition.of(3, 1, 1)
        assert p.total == 5 and p.dual().parts == (3, 1, 1)
        assert Partition.of(4, 1).is_subregular() and Partition.of(5).is_regular()
        assert parse_partition("(3,2,1)") == Partition.of(3, 2, 1)
        assert p.label() == "(3,1,1)"

    def test_parse_sorts_parts(self):
        assert parse_partition("(1,2)") == Partition.of(2, 1)

    @pytest.mark.parametrize("bad", ["(0)", "x", "()"])
    def test_parse_errors(self, bad):
        with pytest.raises(PartitionError):
            parse_partition(bad)

    @pytest.mark.parametrize("n", range(1, 11))
    def test_enumeration_count(self, n):
        assert len(list(partitions(n))) == partition_counts(n)

    @given(st.integers(1, 12).flatmap(lambda n: st.sampled_from(list(partitions(n)))))
    def test_dual_is_an_involution(self, p):
        assert p.dual().dual() == p and p.dual().total == p.total

    @pytest.mark.parametrize("n", range(2, 7))
    def test_centralizer_matches_bruteforce(self, n):
        for p in partitions(n):
            assert centralizer_dim_sl(p) == centralizer_dim_bruteforce(p)

    def test_centralizer_extremes(self):
        assert centralizer_dim_sl(Partition.of(7)) == 6
        assert centralizer_dim_sl(Partition.of(*[1] * 5)) == 24


class TestInequalities:
    @pytest.mark.parametrize("n", [4, 6, 8])
    def test_case1(self, n):
        for p in partitions(n):
            if p.is_regular():
                continue
            lhs, ok = inequality_case1(p)
            assert ok and lhs >= 0
            if p.is_subregular():
                assert lhs == 0

    def test_case1_zero_set(self):
        zeros = {p.label() for n in (4, 6, 8) for p in partitions(n)
                 if not p.is_regular() and inequality_case1(p)[0] == 0}
        assert zeros == {"(3,1)", "(2,2)", "(5,1)", "(4,2)", "(7,1)", "(6,2)"}

    @pytest.mark.parametrize("n", [5, 7, 9])
    def test_case2_fails_exactly_at_subregular(self, n):
        bad = [p for p in partitions(n) if not p.is_regular() and not inequality_case2(p)[1]]
        assert bad == [Partition.of(n - 1, 1)]
        assert inequality_case2(bad[0])[0] < 0

    def test_domain_errors(self):
        with pytest.raises(PartitionError):
            inequality_case1(Partition.of(4))
        with pytest.raises(PartitionError):
            inequality_case1(Partition.of(3, 2))
        with pytest.raises(PartitionError):
            inequality_case2(Partition.of(2, 2))

    def test_exact_value(self):
        # dual of (2,2) is (2,2): 1/2 (1 + 1) + 0 - 1 = 0
        assert inequality_case1(Partition.of(2, 2))[0] == Fraction(0)
        # dual of (4,1) is (2,1,1,1): 1/2 + 1 - 5/2
        assert inequality_case2(Partition.of(4, 1))[0] == Fraction(-1)


class TestPfaffianRule:
    def test_orthogonal_partitions(self):
        assert [p.label() for p in orthogonal_partitions(4)] == ["(3,1)", "(2,2)", "(1,1,1,1)"]
        assert not is_orthogonal_partition(Partition.of(2, 1, 1))

    @pytest.mark.parametrize("n", [4, 6])
    def test_rule_matches_symbolic_gradient(self, n):
        for p in orthogonal_partitions(n):
            assert pfaffian_vanishing_rule(p) == pfaffian_gradient_vanishes(p), p

    @pytest.mark.slow
    def test_rule_matches_symbolic_gradient_8(self):
        for p in orthogonal_partitions(8):
            assert pfaffian_vanishing_rule(p) == pfaffian_gradient_vanishes(p), p


class TestNullCone:
    def test_chain_counts(self):
        assert len(chain_diagrams(1, 1)) == 3
        assert len(chain_diagrams(2, 2)) == 10

    @pytest.mark.parametrize("name", ["sl3-pair", "sl4-pair", "sl5-pair"])
    def test_orbits_are_nilpotent_and_balanced(self, name):
        pair = get_pair(name)
        invs = pair_invariants(pair)
        n0, n1 = len(pair.g0_indices), len(pair.g1_indices)
        orbits = graded_null_cone(pair)
        assert orbits[0].orbit_dim == n1 - pair.rank_ce
        for o in orbits:
            assert all(f.evaluate(o.representative) == 0 for f in invs.generators)
            assert o.centralizer_dim + o.orbit_dim == n0
            # centralizers in g0 and g1 differ by dim g0 - dim g1
            cz = centralizer_dim_sl(o.partition)
            assert 2 * o.centralizer_dim == cz + (n0 - n1)

    @pytest.mark.parametrize("name", ["sl4-pair", "sl6-pair", "sl5-pair"])
    def test_partition_formula_matches_orbits(self, name):
        pair = get_pair(name)
        kind, _ = pair_case(pair)
        Fs = matrix_power_covariants(pair)
        rep = strata_check(Fs, graded_null_cone(pair), len(Fs), rep=pair.isotropy_representation())
        regular_dim = max(o["orbit_dim"] for o in rep.orbits)
        for row, o in zip(rep.orbits, sorted(graded_null_cone(pair), key=lambda o: o.label)):
            if row["orbit_dim"] == regular_dim:
                continue
            assert row["margin"] == pair_partition_data(o.partition, kind)["margin"]


class TestStrata:
    def test_only_origin(self):
        x, y = Polynomial.variable(2, 0), Polynomial.variable(2, 1)
        assert only_origin([x, y])
        assert not only_origin([x * y])
        assert only_origin([x * x, y * y * y])

    def test_sl2_double_direct(self):
        invs = catalog_invariants("sl2-ltimes-sl2")
        Fs = [PolyMap.of(g, 6) for g in invs.gradients()]
        rep = strata_check_direct(Fs)
        assert [(s.dim_lower, s.dim_upper) for s in rep.strata] == [(3, 3), (0, 0)]
        assert rep.overall == "pass" and rep.f_d_verdict == "pass"

    @pytest.mark.parametrize("name,verdict,failing", [
        ("sl4-pair", "pass", set()), ("sl6-pair", "pass", set()),
        ("sl3-pair", "fail", {"(2,1)"}), ("sl5-pair", "fail", {"(4,1)"}),
        ("sl2-pair", "pass", set()),
    ])
    def test_pairs(self, name, verdict, failing):
        pair = get_pair(name)
        Fs = matrix_power_covariants(pair)
        orbits = graded_null_cone(pair)
        rep = strata_check(Fs, orbits, len(Fs), rep=pair.isotropy_representation(),
                           invariants=pair_invariants(pair).generators)
        assert rep.overall == verdict
        parts = {o.partition.label() for o in orbits if o.label in rep.failing}
        assert parts == failing
        assert rep.f_d_verdict == ("pass" if verdict == "pass" else "not-established")

    def test_orbit_data_validation(self):
        pair = get_pair("sl4-pair")
        Fs = matrix_power_covariants(pair)
        iso = pair.isotropy_representation()
        o = graded_null_cone(pair)[0]
        with pytest.raises(OrbitDataError):
            strata_check(Fs, [{"label": "x", "representative": o.representative, "centralizer_dim": 5}], 1, rep=iso)
        with pytest.raises(OrbitDataError):
            strata_check(Fs, [{"label": "x", "representative": [1] * 8}], 1, rep=iso,
                         invariants=pair_invariants(pair).generators)
        with pytest.raises(OrbitDataError):
            strata_check(Fs, [], 1)
        with pytest.raises(OrbitDataError):
            strata_check(Fs, [{"label": "x", "representative": o.representative}], 2, rep=iso)
        with pytest.raises(OrbitDataError):
            strata_check(Fs, [{"label": "x", "representative": o.representative}], 1)


class TestMoment:
    def test_moment_map_pairing(self):
        rep = adjoint(sl(2))
        # <mu, e_i> = <[e_i, v], xi>; ad_e(e) = 0 and [f, h] = 2f
        assert moment_map(rep, [1, 0, 0], [0, 0, 1]) == [0, 0, 0]
        assert moment_map(rep, [0, 1, 0], [0, 0, 1]) == [0, 0, 2]
        with pytest.raises(MomentError):
            moment_map(rep, [1], [1])

    @pytest.mark.parametrize("name", ["sl2", "sl3", "sp4", "sl2-ltimes-sl2", "gl2"])
    def test_kappa_vanishes_coadjoint(self, name):
        rep = coadjoint(get_algebra(name))
        Fs = [PolyMap.of(g, rep.space_dim) for g in catalog_invariants(name).gradients()]
        assert all(r.is_zero() for r in kappa_residuals(MomentData(rep, tuple(Fs))))

    @pytest.mark.parametrize("name", ["sl3-pair", "sl4-pair", "sl5-pair"])
    def test_kappa_vanishes_pairs(self, name):
        pair = get_pair(name)
        data = MomentData(pair.isotropy_representation(), tuple(matrix_power_covariants(pair)))
        assert kappa_vanishing_check(data)["verdict"] == "pass"

    def test_non_kernel_generator_flagged(self):
        rep = adjoint(sl(2))
        out = kappa_vanishing_check(MomentData(rep, (PolyMap.constant(3, [1, 0, 0]),)))
        assert out["verdict"] == "fail"

    @pytest.mark.parametrize("rep,expected,hints", [
        (adjoint(sl(2)), 5, ()),
        (coadjoint(get_algebra("sl2-ltimes-sl2")), 10, ()),
    ])
    def test_image_closure_dim(self, rep, expected, hints):
        out = image_closure_dim(rep, hints=hints)
        assert out["dim"] == expected and out["verdict"] == "pass"

    @pytest.mark.parametrize("name,dim", [("sl4-pair", 14), ("sl5-pair", 22), ("sl3-pair", 7)])
    def test_image_closure_dim_pairs(self, name, dim):
        pair = get_pair(name)
        Fs = matrix_power_covariants(pair)
        out = image_closure_dim(pair.isotropy_representation(), hints=Fs)
        assert out["dim"] == dim and out["verdict"] == "pass"
        assert dim == len(pair.g1_indices) + len(pair.g0_indices) - len(Fs)

    @pytest.mark.parametrize("name,verdict", [("sl4-pair", "pass"), ("sl5-pair", "fail")])
    def test_fibre_bound(self, name, verdict):
        pair = get_pair(name)
        Fs = matrix_power_covariants(pair)
        iso = pair.isotropy_representation()
        report = strata_check(Fs, graded_null_cone(pair), len(Fs), rep=iso)
        assert fiber_dimension_check(MomentData(iso, tuple(Fs)), report)["verdict"] == verdict

    def test_fibre_bound_direct(self):
        g = get_algebra("sl2-ltimes-sl2")
        Fs = tuple(PolyMap.of(v, 6) for v in catalog_invariants(g.name).gradients())
        out = fiber_dimension_check(MomentData(coadjoint(g), Fs), strata_check_direct(Fs))
        assert out["verdict"] == "pass"


def test_binomial_sanity():
    assert comb(9, 5) == 126
