import json
from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st
from strategies import points

from wonderlie.lie import (
    LieAlgebra,
    LieAlgebraError,
    Representation,
    RepresentationError,
    SchemaError,
    StrataData,
    StrataError,
    Stratum,
    adjoint,
    block_pair,
    bracket,
    coadjoint,
    from_matrices,
    get_algebra,
    get_pair,
    index,
    load_algebra,
    load_orbit_data,
    orbit_dim,
    regular_locus_codim_bound,
    semidirect_double,
    sl,
    stabilizer,
)
from wonderlie.invariants import catalog_coadjoint_gradients
from wonderlie.lie.io import dump_algebra
from wonderlie.lie.strata_data import adjoint_strata, coadjoint_strata

CATALOG = ["sl2", "sl3", "gl2", "sp4", "so5", "so6", "abelian2", "sl2-ltimes-sl2", "sl3-ltimes-sl3"]


class TestStructure:
    def test_sl2_relations(self):
        g = sl(2)
        e, h, f = (g.basis_vector(i) for i in range(3))
        assert g.bracket(h, e) == [2, 0, 0]
        assert g.bracket(h, f) == [0, 0, -2]
        assert g.bracket(e, f) == [0, 1, 0]

    @pytest.mark.parametrize("name", CATALOG)
    def test_catalog_is_a_lie_algebra(self, name):
        g = get_algebra(name)
        assert g.check_antisymmetry()
        assert not g.jacobi_violations()

    @pytest.mark.parametrize("name", [n for n in CATALOG if not n.startswith("abelian")])
    def test_invariant_form(self, name):
        g = get_algebra(name)
        assert g.form_is_invariant(g.invariant_form)
        assert sympy.Matrix(g.invariant_form).det() != 0

    def test_killing_form_of_sl2(self):
        k = sl(2).killing_form()
        assert k[1][1] == 8 and k[0][2] == 4 and k[0][0] == 0

    def test_jacobi_violation_detected(self):
        # antisymmetric but not Jacobi: [e0,e1]=e2, [e1,e2]=e0, [e0,e2]=e0
        consts = {(0, 1, 2): 1, (1, 0, 2): -1, (1, 2, 0): 1, (2, 1, 0): -1, (0, 2, 0): 1, (2, 0, 0): -1}
        g = LieAlgebra.from_constants("bad", 3, consts)
        with pytest.raises(LieAlgebraError):
            g.validate()

    def test_not_closed_basis(self):
        e = [[0, 1], [0, 0]]
        with pytest.raises(LieAlgebraError):
            from_matrices("bad", [e, [[0, 0], [1, 0]]])

    @pytest.mark.parametrize("name", ["sl2", "sp4"])
    def test_double_bracket(self, name):
        q = get_algebra(name)
        g = semidirect_double(q)
        n = q.dim
        x = [Fraction(i + 1, 2) for i in range(n)]
        y = [3 - i for i in range(n)]
        assert bracket(g, x + [0] * n, [0] * n + y) == [0] * n + q.bracket(x, y)
        assert bracket(g, [0] * n + x, [0] * n + y) == [0] * (2 * n)
        assert g == get_algebra(f"{name}-ltimes-{name}")

    def test_unknown_names(self):
        with pytest.raises(KeyError):
            get_algebra("e8")
        with pytest.raises(KeyError):
            get_pair("sl1-pair")


class TestRepresentations:
    @pytest.mark.parametrize("name", ["sl2", "sp4", "sl2-ltimes-sl2", "gl2"])
    def test_homomorphism(self, name):
        g = get_algebra(name)
        assert not adjoint(g).homomorphism_violations()
        assert not coadjoint(g).homomorphism_violations()

    def test_isotropy_representation(self):
        pair = get_pair("sl4-pair")
        iso = pair.isotropy_representation()
        assert (iso.dim_g, iso.space_dim) == (7, 8)
        assert not iso.homomorphism_violations()

    def test_bad_matrices(self):
        with pytest.raises(RepresentationError):
            Representation.from_matrices(sl(2), [[[1]], [[0]], [[0]]]).validate()  # not a homomorphism

    @given(points(3))
    def test_adjoint_stabilizer_contains_point(self, v):
        g = sl(2)
        st_ = stabilizer(adjoint(g), v)
        assert st_.dim + st_.orbit_dim == 3
        if any(v):
            assert st_.dim == 1
            assert all(not any(g.bracket(v, s)) for s in st_.stabilizer_basis)

    @given(st.sampled_from(["sl3", "sp4", "sl2-ltimes-sl2"]), st.integers(0, 10))
    def test_coadjoint_is_dual(self, name, seed):
        # <x.xi, y> = -<xi, [x, y]>
        import random

        g = get_algebra(name)
        rng = random.Random(seed)
        x, y, xi = ([rng.randint(-3, 3) for _ in range(g.dim)] for _ in range(3))
        lhs = sum(a * b for a, b in zip(coadjoint(g).act(x, xi), y))
        rhs = -sum(a * b for a, b in zip(xi, g.bracket(x, y)))
        assert lhs == rhs


class TestIndex:
    @pytest.mark.parametrize("name,expected", [
        ("sl2", 1), ("sl3", 2), ("sp4", 2), ("gl2", 2), ("so5", 2), ("abelian3", 3),
        ("sl2-ltimes-sl2", 2), ("sl3-ltimes-sl3", 4), ("sp4-ltimes-sp4", 4),
    ])
    def test_index(self, name, expected):
        assert index(get_algebra(name)) == expected

    @pytest.mark.parametrize("name", ["sl2", "sl3", "sp4"])
    def test_index_doubles(self, name):
        assert index(get_algebra(f"{name}-ltimes-{name}")) == 2 * index(get_algebra(name))


class TestCodim:
    @pytest.mark.parametrize("name", ["sl2", "sl3", "gl2"])
    def test_adjoint_strata_give_codim_three(self, name):
        g = get_algebra(name)
        bound = regular_locus_codim_bound(adjoint(g), adjoint_strata(g))
        assert bound.exact and bound.value == 3

    def test_sp4_needs_its_degree_three_covariant(self):
        g = get_algebra("sp4")
        bound = regular_locus_codim_bound(coadjoint(g), coadjoint_strata(g), hints=catalog_coadjoint_gradients(g))
        assert bound.exact and bound.value == 3

    def test_cover_gives_lower_bound(self):
        g = get_algebra("sl2-ltimes-sl2")
        bound = regular_locus_codim_bound(coadjoint(g), coadjoint_strata(g))
        assert bound.status == "lower-bound" and bound.value == 3 and not bound.exact

    def test_abelian_is_infinite(self):
        g = get_algebra("abelian2")
        bound = regular_locus_codim_bound(coadjoint(g), coadjoint_strata(g))
        assert bound.value is None and bound.at_least(100)

    def test_regular_representative_rejected(self):
        g = sl(2)
        with pytest.raises(StrataError):
            regular_locus_codim_bound(adjoint(g), StrataData((Stratum("h", (0, 1, 0), 2),)))

    def test_wrong_orbit_claim_rejected(self):
        g = sl(2)
        with pytest.raises(StrataError):
            regular_locus_codim_bound(adjoint(g), StrataData((Stratum("zero", (0, 0, 0), 0, 2),)))

    def test_monte_carlo_never_certifies(self):
        bound = regular_locus_codim_bound(adjoint(sl(2)), mode="monte-carlo", samples=5)
        assert bound.status == "inconclusive"

    def test_orbit_dims(self):
        assert orbit_dim(adjoint(sl(3)), [0] * 8) == 0


class TestIO:
    def test_roundtrip(self, tmp_path):
        pair = get_pair("sl3-pair")
        path = tmp_path / "a.json"
        path.write_text(json.dumps(dump_algebra(pair.ambient, pair), indent=1))
        g, p = load_algebra(path)
        assert g.constants() == pair.ambient.constants()
        assert p.grading == pair.grading

    def test_bad_json_has_location(self, tmp_path):
        path = tmp_path / "a.json"
        path.write_text('{"name": "x",\n "dim": 2,,\n}')
        with pytest.raises(SchemaError, match="line 2"):
            load_algebra(path)

    def test_bad_entry_has_line(self, tmp_path):
        path = tmp_path / "a.json"
        path.write_text('{"name": "x", "dim": 2, "structure_constants": [\n  [0, 1, 1, 1, 1],\n  [1, 0, 1, -1, 1],\n  [0, 5, 1, 1, 1]\n]}')
        with pytest.raises(SchemaError, match=r"structure_constants\[2\] \(line 4\)"):
            load_algebra(path)

    def test_jacobi_failure_is_schema_error(self, tmp_path):
        consts = [[0, 1, 2, 1, 1], [1, 0, 2, -1, 1], [1, 2, 0, 1, 1], [2, 1, 0, -1, 1], [0, 2, 0, 1, 1], [2, 0, 0, -1, 1]]
        path = tmp_path / "a.json"
        path.write_text(json.dumps({"name": "bad", "dim": 3, "structure_constants": consts}))
        with pytest.raises(SchemaError, match="Jacobi"):
            load_algebra(path)

    def test_incompatible_grading(self, tmp_path):
        data = dump_algebra(sl(2))
        data["grading"] = [1, 1, 0]
        path = tmp_path / "a.json"
        path.write_text(json.dumps(data))
        with pytest.raises(SchemaError, match="grading"):
            load_algebra(path)

    def test_orbit_records(self, tmp_path):
        path = tmp_path / "o.json"
        path.write_text(json.dumps([{"label": "a", "representative": [1, "1/2", {"num": "3", "den": "4"}]},
                                    {"label": "b", "partition": [3, 1], "orbit_dim": 4}]))
        recs = load_orbit_data(path)
        assert recs[0].representative == (1, Fraction(1, 2), Fraction(3, 4))
        assert recs[1].partition == (3, 1) and recs[1].orbit_dim == 4

    @pytest.mark.parametrize("bad", [
        [{"partition": [1]}], [{"label": "a"}], [{"label": "a", "partition": [1, 2]}],
        [{"label": "a", "partition": [2], "orbit_dim": -1}], {"label": "a"},
    ])
    def test_orbit_schema_errors(self, tmp_path, bad):
        path = tmp_path / "o.json"
        path.write_text(json.dumps(bad))
        with pytest.raises(SchemaError):
            load_orbit_data(path)


def test_block_pair_grading():
    pair = block_pair(2, 3)
    assert pair.is_compatible()
    assert (len(pair.g0_indices), len(pair.g1_indices)) == (12, 12)
    assert pair.rank_ce == 2
