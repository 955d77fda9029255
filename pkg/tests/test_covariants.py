import random
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from wonderlie.covariants import (
    DegreeCertificate,
    DimensionError,
    PolyMap,
    adjoint_field,
    annihilates_invariants,
    apply_phi,
    apply_psi,
    apply_tau,
    certificate_is_valid,
    dixmier_decompose,
    euler_field,
    free_module_prediction,
    graded_kernel,
    is_equivariant,
    kernel_module_rank,
    vf_apply,
)
from wonderlie.invariants import catalog_invariants
from wonderlie.lie import adjoint, coadjoint, get_algebra, sl
from wonderlie.polyalg import Polynomial


def rep_of(name):
    return coadjoint(get_algebra(name))


class TestPolyMap:
    def test_degree_kinds(self):
        assert PolyMap.zero(2, 2).degree == -1
        assert PolyMap.identity(2).degree == 1
        x = Polynomial.variable(2, 0)
        assert PolyMap.of([x, x * x]).degree == "mixed"

    def test_json_roundtrip(self):
        F = PolyMap.random(random.Random(0), 3, 2, 2)
        assert PolyMap.from_json(F.to_json()) == F

    def test_dimension_checks(self):
        with pytest.raises(DimensionError):
            PolyMap.identity(2) + PolyMap.identity(3)
        with pytest.raises(DimensionError):
            apply_phi(adjoint(sl(2)), PolyMap.identity(2))


class TestMaps:
    @given(st.integers(0, 10_000), st.integers(0, 2))
    def test_phi_is_module_linear(self, seed, d):
        rep = rep_of("sl2")
        rng = random.Random(seed)
        F = PolyMap.random(rng, 3, 3, d)
        p = Polynomial.linear([rng.randint(-3, 3) for _ in range(3)])
        assert apply_phi(rep, F.times(p)) == apply_phi(rep, F).times(p)

    @given(st.integers(0, 10_000))
    def test_sign_relations(self, seed):
        # coadjoint: psi = -phi; adjoint: tau = -phi
        rng = random.Random(seed)
        g = get_algebra("sl3")
        F = PolyMap.random(rng, 8, 8, 1)
        assert apply_psi(coadjoint(g), F) == -apply_phi(coadjoint(g), F)
        assert apply_tau(adjoint(g), F) == -apply_phi(adjoint(g), F)

    def test_adjoint_fields_are_images(self):
        rep = rep_of("sl3")
        for i in range(8):
            X = adjoint_field(rep, [int(i == j) for j in range(8)])
            assert dixmier_decompose(rep, X).status == "found"


class TestKernel:
    def test_sl2_adjoint_dims(self):
        rep = adjoint(sl(2))
        assert [len(graded_kernel("phi", rep, d)) for d in range(1, 5)] == [1, 3, 6, 10]

    def test_double_dims(self):
        rep = rep_of("sl2-ltimes-sl2")
        dims = [len(graded_kernel("phi", rep, d)) for d in range(1, 5)]
        assert dims == [2 * comb(d - 1 + 5, 5) for d in range(1, 5)]

    @pytest.mark.parametrize("name", ["sl3", "sp4"])
    def test_free_on_invariant_gradients(self, name):
        rep = rep_of(name)
        gens = [d - 1 for d in catalog_invariants(name).degrees]
        for d in range(0, 4):
            assert len(graded_kernel("phi", rep, d)) == free_module_prediction(rep.space_dim, gens, d)

    def test_psi_and_phi_kernels_agree_on_coadjoint(self):
        rep = rep_of("sl3")
        for d in range(3):
            assert len(graded_kernel("psi", rep, d)) == len(graded_kernel("phi", rep, d))

    def test_prediction_formula(self):
        assert free_module_prediction(3, [1], 4) == 10
        assert free_module_prediction(6, [1, 1], 3) == 2 * comb(7, 5)
        assert free_module_prediction(4, [2, 5], 1) == 0

    @pytest.mark.parametrize("name,m", [("sl2", 1), ("sl3", 2), ("sl2-ltimes-sl2", 2)])
    def test_module_rank(self, name, m):
        assert kernel_module_rank(rep_of(name)) == m

    def test_generator_is_equivariant_and_generates(self):
        g = sl(2)
        rep = adjoint(g)
        (F,) = graded_kernel("phi", rep, 1)
        assert is_equivariant(F, rep, rep)
        multiples = [F.times(Polynomial.variable(3, i)) for i in range(3)]
        assert all(apply_phi(rep, M).is_zero() for M in multiples)
        assert len(graded_kernel("phi", rep, 2)) == len(multiples)

    def test_random_map_is_not_equivariant(self):
        g = sl(2)
        F = PolyMap.random(random.Random(5), 3, 3, 2)
        assert not is_equivariant(F, adjoint(g), adjoint(g))


class TestDixmier:
    @given(st.sampled_from(["sl2", "sl2-ltimes-sl2", "gl2"]), st.integers(0, 3), st.integers(0, 10_000))
    def test_roundtrip(self, name, d, seed):
        rep = rep_of(name)
        F = PolyMap.random(random.Random(seed), rep.space_dim, rep.dim_g, d)
        X = apply_phi(rep, F)
        res = dixmier_decompose(rep, X)
        assert res.status == "found"
        assert apply_phi(rep, res.witness) == X

    @given(st.sampled_from(["sl2", "sl3", "sl2-ltimes-sl2"]), st.integers(0, 3), st.integers(0, 10_000))
    def test_images_kill_invariants(self, name, d, seed):
        rep = rep_of(name)
        F = PolyMap.random(random.Random(seed), rep.space_dim, rep.dim_g, d)
        assert annihilates_invariants(apply_phi(rep, F), catalog_invariants(name).generators)

    def test_euler_field_certificate(self):
        rep = adjoint(sl(2))
        E = euler_field(3)
        res = dixmier_decompose(rep, E)
        assert res.status == "infeasible"
        assert all(certificate_is_valid(rep, E, c) for c in res.certificate)
        casimir = catalog_invariants("sl2").generators[0]
        assert vf_apply(E, casimir) == casimir.scale(2)

    def test_tampered_certificate_rejected(self):
        rep = adjoint(sl(2))
        E = euler_field(3)
        cert = dixmier_decompose(rep, E).certificate[0]
        key = next(iter(cert.y))
        bad = DegreeCertificate(cert.degree, {**cert.y, key: cert.y[key] + 1}, cert.value)
        zero = DegreeCertificate(cert.degree, {}, 0)
        assert not certificate_is_valid(rep, E, bad) or not certificate_is_valid(rep, E, zero)
        assert not certificate_is_valid(rep, E, zero)

    def test_degree_cap_reports_pending(self):
        rep = rep_of("sl2")
        F = PolyMap.random(random.Random(1), 3, 3, 3)
        res = dixmier_decompose(rep, apply_phi(rep, F), max_degree=1)
        assert res.status == "not_found_up_to_degree" and res.pending_degrees == (3,)

    def test_wrong_size_field(self):
        with pytest.raises(DimensionError):
            dixmier_decompose(rep_of("sl2"), euler_field(4))
