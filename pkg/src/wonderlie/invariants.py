"""Invariant polynomials for catalog cases and the checks built on them.

Every invariant set is verified on construction: each generator must be
killed by all the linear vector fields ``v -> rho(e_i) v``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .covariants import PolyMap, adjoint_field, apply_phi, is_equivariant, vf_apply
from .lie.algebra import LieAlgebra, coordinates_solver
from .lie.catalog import SymmetricPair, covariant_count, get_algebra
from .lie.regular import CodimBound, StrataData, index_certificate, regular_locus_codim_bound
from .lie.representation import Representation, adjoint, coadjoint
from .polyalg.linalg import inverse, rank
from .polyalg.polymatrix import PolyMatrix, generic_rank
from .polyalg.polynomial import Polynomial, variables


class InvarianceError(ValueError):
    pass


class ZeroComponentError(ValueError):
    pass


def is_invariant(rep: Representation, f: Polynomial) -> bool:
    """``X{f} = 0`` for the linear field of every basis element."""
    for i in range(rep.dim_g):
        if not vf_apply(adjoint_field(rep, rep.algebra.basis_vector(i)), f).is_zero():
            return False
    return True


@dataclass(frozen=True)
class InvariantSet:
    rep: Representation
    generators: tuple[Polynomial, ...]
    provenance: str
    verified: bool = field(default=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        for n, f in enumerate(self.generators):
            if f.num_vars != self.rep.space_dim:
                raise InvarianceError(f"generator {n} has {f.num_vars} variables, expected {self.rep.space_dim}")
            if not is_invariant(self.rep, f):
                raise InvarianceError(f"{self.provenance}: generator {n} is not invariant")
        object.__setattr__(self, "verified", True)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(f.degree for f in self.generators)

    def __len__(self) -> int:
        return len(self.generators)

    def gradients(self) -> list[list[Polynomial]]:
        return [f.gradient() for f in self.generators]

    def to_json(self) -> dict:
        return {"representation": self.rep.name, "provenance": self.provenance,
                "degrees": list(self.degrees), "generators": [f.to_json() for f in self.generators]}


# -- matrix helpers with polynomial entries ---------------------------------
def generic_matrix(g: LieAlgebra, num_vars: int | None = None, indices: Sequence[int] | None = None):
    """``sum_i v_i X_i`` over the realization; ``indices`` restricts to a subset of the basis."""
    if g.realization is None:
        raise ValueError(f"{g.name} has no matrix realization")
    idx = list(range(g.dim)) if indices is None else list(indices)
    nv = len(idx) if num_vars is None else num_vars
    xs = variables(nv)
    size = len(g.realization[0])
    out = [[Polynomial.zero(nv) for _ in range(size)] for _ in range(size)]
    for a, i in enumerate(idx):
        m = g.realization[i]
        for r in range(size):
            for s in range(size):
                if m[r][s]:
                    out[r][s] = out[r][s] + xs[a].scale(m[r][s])
    return out


def poly_matmul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    nv = a[0][0].num_vars
    out = []
    for r in range(n):
        row = []
        for s in range(m):
            acc = Polynomial.zero(nv)
            for t in range(k):
                if a[r][t] and b[t][s]:
                    acc = acc + a[r][t] * b[t][s]
            row.append(acc)
        out.append(row)
    return out


def poly_trace(a) -> Polynomial:
    acc = a[0][0]
    for i in range(1, len(a)):
        acc = acc + a[i][i]
    return acc


def matrix_powers(m, top: int) -> list:
    """``[m, m^2, ..., m^top]``."""
    out = [m]
    for _ in range(top - 1):
        out.append(poly_matmul(out[-1], m))
    return out


def pfaffian(a):
    """Pfaffian of a skew-symmetric matrix (rational or polynomial entries)."""
    n = len(a)
    if n % 2:
        raise ValueError("Pfaffian needs an even-sized matrix")

    def rec(idx: tuple[int, ...]):
        if not idx:
            return 1
        i, rest = idx[0], idx[1:]
        total = 0
        for pos, j in enumerate(rest):
            entry = a[i][j]
            if entry:
                sub = rec(rest[:pos] + rest[pos + 1:])
                term = entry * sub
                total = total + term if pos % 2 == 0 else total - term
        return total

    return rec(tuple(range(n)))


def _to_dual(g: LieAlgebra, polys: Sequence[Polynomial]) -> list[Polynomial]:
    # f on g  ->  f o B^{-1} on g*, using the invariant form B
    if g.invariant_form is None:
        raise ValueError(f"{g.name} has no invariant form")
    binv = inverse(g.invariant_form)
    return [f.compose_linear(binv) for f in polys]


def trace_power_invariants(g: LieAlgebra, degrees: Sequence[int], *, dual: bool = False) -> InvariantSet:
    """``v -> tr(M(v)^k)`` for the generic matrix ``M(v)`` of the realization.

    With ``dual=True`` the polynomials are moved to ``g*`` through the
    invariant form and checked against the coadjoint action.
    """
    m = generic_matrix(g)
    pw = matrix_powers(m, max(degrees))
    polys = [poly_trace(pw[k - 1]) for k in degrees]
    if dual:
        return InvariantSet(coadjoint(g), tuple(_to_dual(g, polys)), "trace-power")
    return InvariantSet(adjoint(g), tuple(polys), "trace-power")


def pfaffian_invariant(g: LieAlgebra, form: Sequence[Sequence]) -> Polynomial:
    """``Pf(B X)`` for ``X`` in ``so(B)``; ``B X`` is skew for such ``X``."""
    m = generic_matrix(g)
    nv = g.dim
    size = len(m)
    bx = [[sum((m[t][s].scale(form[r][t]) for t in range(size) if form[r][t]), Polynomial.zero(nv))
           for s in range(size)] for r in range(size)]
    return pfaffian(bx)


def _catalog_degrees(name: str) -> tuple[str, int, list[int]]:
    import re

    kind, n = re.match(r"^([a-z]+)(\d+)$", name).groups()
    n = int(n)
    if kind == "sl":
        return kind, n, list(range(2, n + 1))
    if kind == "gl":
        return kind, n, list(range(1, n + 1))
    if kind == "sp":
        return kind, n, list(range(2, n + 1, 2))
    if kind == "so":
        return kind, n, list(range(2, n - 1 if n % 2 == 0 else n, 2))
    return kind, n, []


@lru_cache(maxsize=None)
def catalog_invariants(name: str) -> InvariantSet:
    """Basic invariants on the coadjoint module of a catalog algebra."""
    g = get_algebra(name)
    if "-ltimes-" in name:
        return doubled_invariants(catalog_invariants(name.partition("-ltimes-")[0]), g)
    kind, n, degrees = _catalog_degrees(name)
    if kind == "abelian":
        return InvariantSet(coadjoint(g), tuple(variables(g.dim)), "linear")
    polys = []
    if degrees:
        pw = matrix_powers(generic_matrix(g), max(degrees))
        polys = [poly_trace(pw[k - 1]) for k in degrees]
    if kind == "so" and n % 2 == 0:
        anti = [[1 if i + j == n - 1 else 0 for j in range(n)] for i in range(n)]
        polys.append(pfaffian_invariant(g, anti))
    return InvariantSet(coadjoint(g), tuple(_to_dual(g, polys)), "trace-power" if kind != "so" or n % 2 else "trace-power+pfaffian")


def catalog_coadjoint_gradients(g: LieAlgebra) -> list[list[Polynomial]]:
    try:
        invs = catalog_invariants(g.name)
    except (KeyError, AttributeError, ValueError):
        return []
    if invs.rep.algebra.constants() != g.constants():
        return []
    return invs.gradients()


def doubled_invariants(q_invs: InvariantSet, g: LieAlgebra) -> InvariantSet:
    """Two invariants of ``(q ⋉ q)*`` per invariant ``f`` of ``q*``.

    With ``xi = (alpha, beta)`` (``beta`` dual to the abelian ideal):
    ``f(beta)`` and ``sum_k alpha_k df/dbeta_k (beta)``.
    """
    q = q_invs.rep.algebra
    n = q.dim
    if g.dim != 2 * n:
        raise ValueError("target algebra is not a double of the source")
    if q_invs.rep.action_matrices != coadjoint(q).action_matrices:
        raise ValueError("doubling needs invariants of the coadjoint module")
    first, second = [], []
    for f in q_invs.generators:
        fb = f.extend(2 * n, offset=n)
        pol = Polynomial.zero(2 * n)
        for k in range(n):
            dk = fb.diff(n + k)
            if dk:
                pol = pol + dk * Polynomial.variable(2 * n, k)
        first.append(fb)
        second.append(pol)
    try:
        return InvariantSet(coadjoint(g), tuple(first + second), "doubled")
    except InvarianceError as exc:
        raise InvarianceError(f"construction mismatch with the doubling rule: {exc}") from None


def jacobian_polymatrix(invs: InvariantSet) -> PolyMatrix:
    return PolyMatrix([f.gradient() for f in invs.generators], invs.rep.space_dim)


def jacobian_rank(invs: InvariantSet, *, seed: int = 0) -> int:
    if not invs.generators:
        return 0
    return generic_rank(jacobian_polymatrix(invs), seed=seed).rank


def algebraically_independent(invs: InvariantSet, *, seed: int = 0) -> bool:
    return jacobian_rank(invs, seed=seed) == len(invs)


def differentials_independent_at(invs: InvariantSet, v: Sequence) -> bool:
    if not invs.generators:
        return True
    grads = [[p.evaluate(v) for p in f.gradient()] for f in invs.generators]
    return rank(grads, invs.rep.space_dim) == len(invs)


@dataclass(frozen=True)
class WonderfulReport:
    codim_verdict: str
    poly_count_ok: bool
    degree_sum_ok: bool
    overall: str
    index: int
    degrees: tuple[int, ...]
    codim: CodimBound | None = None
    n: int = 3

    def to_json(self) -> dict:
        return {"codim_verdict": self.codim_verdict, "poly_count_ok": self.poly_count_ok,
                "degree_sum_ok": self.degree_sum_ok, "overall": self.overall, "index": self.index,
                "degrees": list(self.degrees), "n": self.n,
                "codim": self.codim.to_json() if self.codim is not None else None}


def check_three_wonderful(g: LieAlgebra, invs: InvariantSet, strata: StrataData | None = None,
                          *, seed: int = 0, n: int = 3) -> WonderfulReport:
    """Codim-``n`` regular locus, ``l = ind g`` independent generators, degree sum ``(dim g + ind g)/2``."""
    rep = coadjoint(g)
    if invs.rep.action_matrices != rep.action_matrices:
        raise ValueError("invariants must live on the coadjoint module of g")
    grads = invs.gradients()
    ind = g.dim - index_certificate(g, seed=seed, hints=grads).rank
    codim = None
    if strata is None:
        codim_verdict = "inconclusive"
    else:
        codim = regular_locus_codim_bound(rep, strata, seed=seed, hints=grads)
        if codim.status == "inconclusive":
            codim_verdict = "inconclusive"
        elif codim.at_least(n):
            codim_verdict = "pass"
        else:
            # a lower bound below n does not refute the property
            codim_verdict = "fail" if codim.exact else "inconclusive"
    count_ok = len(invs) == ind and algebraically_independent(invs, seed=seed)
    degree_ok = 2 * sum(invs.degrees) == g.dim + ind
    if codim_verdict == "pass" and count_ok and degree_ok:
        overall = "asserted"
    elif codim_verdict == "fail" or not degree_ok or not count_ok:
        overall = "refuted"
    else:
        overall = "inconclusive"
    return WonderfulReport(codim_verdict, count_ok, degree_ok, overall, ind, invs.degrees, codim, n)


# -- symmetric pairs ----------------------------------------------------------
def _g0_form_inverse(pair: SymmetricPair):
    form = pair.ambient.invariant_form
    i0 = pair.g0_indices
    return inverse([[form[a][b] for b in i0] for a in i0])


def bihomogeneous_covariant(f: Polynomial, pair: SymmetricPair, *, verify: bool = True) -> PolyMap:
    """Degree-(1, deg f - 1) part of ``f`` read as a map ``g1 -> g0``.

    ``f`` lives on ``g`` (ambient coordinates). Its part linear in the
    ``g0`` coordinates is a map ``g1 -> g0*``, moved to ``g0`` with the
    restricted invariant form.
    """
    g = pair.ambient
    if f.num_vars != g.dim:
        raise ValueError("f must be a polynomial on the ambient algebra")
    i0, i1 = pair.g0_indices, pair.g1_indices
    in0 = set(i0)
    terms = {}
    for e, c in f.as_dict().items():
        if sum(e[i] for i in i0) == 1:
            terms[e] = c
    part = Polynomial(g.dim, terms)
    if part.is_zero():
        raise ZeroComponentError("the degree-(1, d-1) component is identically zero")
    # restrict each g0-derivative to g1 coordinates
    n1 = len(i1)
    dual = []
    for a in i0:
        d = part.diff(a)
        dual.append(Polynomial(n1, {tuple(e[i] for i in i1): c for e, c in d.as_dict().items()
                                    if not any(e[i] for i in in0)}))
    binv = _g0_form_inverse(pair)
    comps = []
    for r in range(len(i0)):
        acc = Polynomial.zero(n1)
        for s in range(len(i0)):
            if binv[r][s]:
                acc = acc + dual[s].scale(binv[r][s])
        comps.append(acc)
    F = PolyMap(n1, len(i0), tuple(comps))
    if verify:
        iso = pair.isotropy_representation()
        if not is_equivariant(F, iso, adjoint(iso.algebra)):
            raise InvarianceError("extracted covariant is not g0-equivariant")
        if not apply_phi(iso, F).is_zero():
            raise InvarianceError("extracted covariant is not in the kernel")
    return F


def matrix_power_covariants(pair: SymmetricPair, count: int | None = None, *, verify: bool = True) -> list[PolyMap]:
    """``v -> v^{2i} - tr(v^{2i})/N I`` for ``i = 1..count``, as maps ``g1 -> g0``."""
    g = pair.ambient
    if g.realization is None or pair.blocks is None:
        raise ValueError("matrix powers need a block-graded matrix realization")
    if count is None:
        count = covariant_count(pair)
    i0, i1 = pair.g0_indices, pair.g1_indices
    n1 = len(i1)
    size = len(g.realization[0])
    m = generic_matrix(g, n1, i1)
    coords = coordinates_solver(g.realization)
    out = []
    if count <= 0:
        return out
    sq = poly_matmul(m, m)
    cur = sq
    iso = pair.isotropy_representation() if verify else None
    for i in range(1, count + 1):
        if i > 1:
            cur = poly_matmul(cur, sq)
        tr = poly_trace(cur).scale(Fraction(1, size))
        shifted = [[cur[r][s] - tr if r == s else cur[r][s] for s in range(size)] for r in range(size)]
        vec = coords(shifted)
        if any(not (vec[j] == 0 or (isinstance(vec[j], Polynomial) and vec[j].is_zero())) for j in i1):
            raise ValueError("matrix power left g0; realization mismatch")
        comps = tuple(vec[j] if isinstance(vec[j], Polynomial) else Polynomial.constant(n1, vec[j]) for j in i0)
        F = PolyMap(n1, len(i0), comps)
        if verify and not apply_phi(iso, F).is_zero():
            raise InvarianceError(f"matrix power {2 * i} is not in the kernel")
        out.append(F)
    return out


def pair_invariants(pair: SymmetricPair) -> InvariantSet:
    """``tr(v^{2i})`` for ``i = 1..rank`` on ``g1``, checked against the isotropy action."""
    if pair.rank_ce is None:
        raise ValueError("pair rank is unknown")
    iso = pair.isotropy_representation()
    i1 = pair.g1_indices
    m = generic_matrix(pair.ambient, len(i1), i1)
    if pair.rank_ce == 0:
        return InvariantSet(iso, (), "trace-power")
    pw = matrix_powers(m, 2 * pair.rank_ce)
    return InvariantSet(iso, tuple(poly_trace(pw[2 * i - 1]) for i in range(1, pair.rank_ce + 1)), "trace-power")


__all__ = [
    "InvarianceError",
    "InvariantSet",
    "WonderfulReport",
    "ZeroComponentError",
    "algebraically_independent",
    "bihomogeneous_covariant",
    "catalog_coadjoint_gradients",
    "catalog_invariants",
    "check_three_wonderful",
    "differentials_independent_at",
    "doubled_invariants",
    "generic_matrix",
    "is_invariant",
    "jacobian_rank",
    "matrix_power_covariants",
    "pair_invariants",
    "pfaffian",
    "pfaffian_invariant",
    "trace_power_invariants",
]
