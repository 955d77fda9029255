"""Polynomial maps between modules and the three module maps built from an action.

For a representation ``rho`` of ``g`` on ``V``:

* ``apply_phi``: ``F: V -> g``  gives ``v -> rho(F(v)) v``;
* ``apply_psi``: ``F: V -> V*`` gives ``v -> (x -> <rho(x) v, F(v)>)``;
* ``apply_tau``: ``F: g -> V``  gives ``x -> rho(x) F(x)``.

All three are linear over the polynomial ring of their source and raise
degree by one, so kernels and preimages are found degree by degree with
exact linear algebra.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .lie.representation import Representation
from .polyalg.linalg import GradedLinearSystem, InfeasibilityCertificate, solve_or_certify
from .polyalg.polymatrix import PolyMatrix, generic_rank, graded_kernel_basis, kernel_system, vector_from_coefficients
from .polyalg.polynomial import Polynomial, as_rational, monomials


class DimensionError(ValueError):
    pass


@dataclass(frozen=True)
class PolyMap:
    """A polynomial map ``k^source_dim -> k^target_dim``."""

    source_dim: int
    target_dim: int
    components: tuple[Polynomial, ...]

    def __post_init__(self):
        comps = tuple(self.components)
        object.__setattr__(self, "components", comps)
        if len(comps) != self.target_dim:
            raise DimensionError(f"{len(comps)} components for target dimension {self.target_dim}")
        for p in comps:
            if p.num_vars != self.source_dim:
                raise DimensionError(f"component in {p.num_vars} variables, expected {self.source_dim}")

    @classmethod
    def of(cls, components: Sequence[Polynomial], source_dim: int | None = None) -> "PolyMap":
        comps = tuple(components)
        if source_dim is None:
            source_dim = comps[0].num_vars
        return cls(source_dim, len(comps), comps)

    @classmethod
    def zero(cls, source_dim: int, target_dim: int) -> "PolyMap":
        return cls(source_dim, target_dim, tuple(Polynomial.zero(source_dim) for _ in range(target_dim)))

    @classmethod
    def constant(cls, source_dim: int, vector: Sequence) -> "PolyMap":
        return cls(source_dim, len(vector), tuple(Polynomial.constant(source_dim, c) for c in vector))

    @classmethod
    def identity(cls, n: int) -> "PolyMap":
        return cls(n, n, tuple(Polynomial.variable(n, i) for i in range(n)))

    @classmethod
    def random(cls, rng: random.Random, source_dim: int, target_dim: int, degree: int,
               density: float = 0.5, bound: int = 5) -> "PolyMap":
        """Random homogeneous map; every component keeps at least one term."""
        monos = monomials(source_dim, degree)
        comps = []
        for _ in range(target_dim):
            terms = {}
            for m in monos:
                if rng.random() < density:
                    c = rng.randint(-bound, bound)
                    if c:
                        terms[m] = c
            if not terms:
                terms[rng.choice(monos)] = rng.choice([-1, 1]) * rng.randint(1, bound)
            comps.append(Polynomial(source_dim, terms))
        return cls(source_dim, target_dim, tuple(comps))

    @property
    def degree(self) -> int | str:
        """Common total degree, ``-1`` for the zero map, or ``"mixed"``."""
        degs = set()
        for p in self.components:
            if not p.is_zero():
                if not p.is_homogeneous():
                    return "mixed"
                degs.add(p.degree)
        if not degs:
            return -1
        return degs.pop() if len(degs) == 1 else "mixed"

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self.components)

    def homogeneous_components(self) -> dict[int, "PolyMap"]:
        degs = sorted({d for p in self.components for d in p.homogeneous_components()})
        return {d: PolyMap(self.source_dim, self.target_dim,
                           tuple(p.homogeneous_component(d) for p in self.components)) for d in degs}

    def evaluate(self, point: Sequence) -> list:
        return [p.evaluate(point) for p in self.components]

    def __add__(self, other: "PolyMap") -> "PolyMap":
        self._check(other)
        return PolyMap(self.source_dim, self.target_dim, tuple(a + b for a, b in zip(self.components, other.components)))

    def __sub__(self, other: "PolyMap") -> "PolyMap":
        self._check(other)
        return PolyMap(self.source_dim, self.target_dim, tuple(a - b for a, b in zip(self.components, other.components)))

    def __neg__(self) -> "PolyMap":
        return PolyMap(self.source_dim, self.target_dim, tuple(-a for a in self.components))

    def times(self, p) -> "PolyMap":
        """Multiply every component by a polynomial or scalar."""
        return PolyMap(self.source_dim, self.target_dim, tuple(a * p for a in self.components))

    def _check(self, other: "PolyMap") -> None:
        if (self.source_dim, self.target_dim) != (other.source_dim, other.target_dim):
            raise DimensionError("maps have different shapes")

    def to_json(self) -> dict:
        return {"source_dim": self.source_dim, "target_dim": self.target_dim,
                "components": [p.to_json() for p in self.components]}

    @classmethod
    def from_json(cls, data) -> "PolyMap":
        comps = tuple(Polynomial.from_json(c) for c in data["components"])
        return cls(int(data["source_dim"]), int(data["target_dim"]), comps)


def _orbit_columns(rep: Representation) -> list[list[Polynomial]]:
    # column i: rho(e_i) v as linear polynomials in v
    n = rep.space_dim
    return [[Polynomial.linear(m[r]) if any(m[r]) else Polynomial.zero(n) for r in range(n)]
            for m in rep.action_matrices]


def _sum_products(pairs: Iterable[tuple[Polynomial, Polynomial]], n: int) -> Polynomial:
    acc = Polynomial.zero(n)
    for a, b in pairs:
        if a and b:
            acc = acc + a * b
    return acc


def apply_phi(rep: Representation, F: PolyMap) -> PolyMap:
    if F.source_dim != rep.space_dim or F.target_dim != rep.dim_g:
        raise DimensionError(f"phi needs a map V -> g ({rep.space_dim} -> {rep.dim_g})")
    cols = _orbit_columns(rep)
    n = rep.space_dim
    out = [_sum_products(((F.components[i], cols[i][r]) for i in range(rep.dim_g)), n) for r in range(n)]
    return PolyMap(n, n, tuple(out))


def apply_psi(rep: Representation, F: PolyMap) -> PolyMap:
    if F.source_dim != rep.space_dim or F.target_dim != rep.space_dim:
        raise DimensionError(f"psi needs a map V -> V* ({rep.space_dim} -> {rep.space_dim})")
    cols = _orbit_columns(rep)
    n = rep.space_dim
    out = [_sum_products(zip(cols[i], F.components), n) for i in range(rep.dim_g)]
    return PolyMap(n, rep.dim_g, tuple(out))


def tau_polymatrix(rep: Representation) -> PolyMatrix:
    """``T(x) = sum_i x_i rho(e_i)`` with entries linear in ``x``."""
    n, k = rep.space_dim, rep.dim_g
    return PolyMatrix([[Polynomial.linear([rep.action_matrices[i][r][s] for i in range(k)]) for s in range(n)]
                       for r in range(n)], k)


def apply_tau(rep: Representation, F: PolyMap) -> PolyMap:
    if F.source_dim != rep.dim_g or F.target_dim != rep.space_dim:
        raise DimensionError(f"tau needs a map g -> V ({rep.dim_g} -> {rep.space_dim})")
    return PolyMap(rep.dim_g, rep.space_dim, tuple(tau_polymatrix(rep).apply(F.components)))


_KINDS = ("phi", "psi", "tau")


def kernel_polymatrix(kind: str, rep: Representation) -> PolyMatrix:
    if kind == "phi":
        return rep.action_polymatrix()
    if kind == "psi":
        return rep.action_polymatrix().transpose()
    if kind == "tau":
        return tau_polymatrix(rep)
    raise ValueError(f"map kind must be one of {_KINDS}, got {kind!r}")


def graded_kernel(kind: str, rep: Representation, degree: int) -> list[PolyMap]:
    """Basis of the homogeneous degree-``degree`` part of the kernel."""
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    mat = kernel_polymatrix(kind, rep)
    return [PolyMap.of(v, mat.num_vars) for v in graded_kernel_basis(mat, degree)]


def free_module_prediction(num_vars: int, generator_degrees: Sequence[int], degree: int) -> int:
    """Dimension in ``degree`` of a free module with the given generator degrees."""
    return sum(len(monomials(num_vars, degree - d)) for d in generator_degrees if degree >= d)


def kernel_module_rank(rep: Representation, *, seed: int = 0, hints: Sequence = ()) -> int:
    """``dim g`` minus the generic rank of ``v -> rho(.) v``."""
    hint_vecs = [h.components if isinstance(h, PolyMap) else h for h in hints]
    return rep.dim_g - generic_rank(rep.action_polymatrix(), seed=seed, hints=hint_vecs).rank


def adjoint_field(rep: Representation, x0: Sequence) -> PolyMap:
    """The linear vector field ``v -> rho(x0) v``."""
    return apply_phi(rep, PolyMap.constant(rep.space_dim, x0))


def euler_field(n: int) -> PolyMap:
    return PolyMap.identity(n)


def vf_apply(X: PolyMap, f: Polynomial) -> Polynomial:
    """``X{f} = sum_i X_i * df/dv_i``."""
    if X.source_dim != X.target_dim or f.num_vars != X.source_dim:
        raise DimensionError("vector field and polynomial live on different spaces")
    return _sum_products(((X.components[i], f.diff(i)) for i in range(X.target_dim)), X.source_dim)


def annihilates_invariants(X: PolyMap, invariants: Sequence[Polynomial]) -> bool:
    return all(vf_apply(X, f).is_zero() for f in invariants)


def is_equivariant(F: PolyMap, source: Representation, target: Representation) -> bool:
    """Infinitesimal equivariance ``dF_v(rho_s(x) v) = rho_t(x) F(v)`` on basis ``x``."""
    if source.algebra.dim != target.algebra.dim:
        raise DimensionError("representations of different algebras")
    if F.source_dim != source.space_dim or F.target_dim != target.space_dim:
        raise DimensionError("map does not go between these modules")
    n = source.space_dim
    grads = [p.gradient() for p in F.components]
    src_cols = _orbit_columns(source)
    for i in range(source.algebra.dim):
        field_i = src_cols[i]
        tm = target.action_matrices[i]
        for r in range(target.space_dim):
            lhs = _sum_products(zip(grads[r], field_i), n)
            rhs = Polynomial.zero(n)
            for s, c in enumerate(tm[r]):
                if c:
                    rhs = rhs + F.components[s].scale(c)
            if lhs != rhs:
                return False
    return True


# -- Dixmier decomposition --------------------------------------------------
@dataclass(frozen=True)
class DegreeCertificate:
    """Exact proof that one homogeneous part of ``X`` is not in the image.

    ``y`` maps ``(output coordinate, monomial)`` to a multiplier; the
    combination kills every column of the coefficient system but not ``X``.
    """

    degree: int
    y: dict
    value: object

    def to_json(self) -> dict:
        def fr(x):
            f = Fraction(x)
            return {"num": str(f.numerator), "den": str(f.denominator)}

        return {"degree": self.degree, "value": fr(self.value),
                "y": [[r, list(m), fr(c)] for (r, m), c in sorted(self.y.items())]}


@dataclass(frozen=True)
class DecompositionResult:
    status: str  # "found" | "infeasible" | "not_found_up_to_degree"
    witness: PolyMap | None
    certificate: tuple[DegreeCertificate, ...] = ()
    degree_searched: int = -1
    pending_degrees: tuple[int, ...] = field(default=())

    def to_json(self) -> dict:
        return {"status": self.status, "degree_searched": self.degree_searched,
                "witness": self.witness.to_json() if self.witness is not None else None,
                "certificate": [c.to_json() for c in self.certificate],
                "pending_degrees": list(self.pending_degrees)}


def _phi_system(rep: Representation, X: PolyMap, degree: int):
    """Coefficient system for ``apply_phi(F) = X`` with ``F`` homogeneous of ``degree``."""
    mat = rep.action_polymatrix()
    if degree >= 0:
        rows, row_index, monos = kernel_system(mat, degree)
        nunk = mat.ncols * len(monos)
    else:
        rows, row_index, monos, nunk = [], {}, (), 0
    rows = [dict(r) for r in rows]
    keys = [None] * len(rows)
    for k, idx in row_index.items():
        keys[idx] = k
    rhs = [0] * len(rows)
    for r, comp in enumerate(X.components):
        for e, c in comp.as_dict().items():
            key = (r, e)
            idx = row_index.get(key)
            if idx is None:
                idx = row_index[key] = len(rows)
                rows.append({})
                keys.append(key)
                rhs.append(0)
            rhs[idx] = c
    return GradedLinearSystem(nunk, rows, rhs), keys, monos


def dixmier_decompose(rep: Representation, X: PolyMap, max_degree: int | None = None) -> DecompositionResult:
    """Find ``F: V -> g`` with ``apply_phi(rep, F) = X``, or prove none exists.

    Each homogeneous part of ``X`` of degree ``e`` is matched by a part of
    ``F`` of degree ``e - 1``. Parts needing ``F`` beyond ``max_degree`` are
    left undecided.
    """
    n = rep.space_dim
    if X.source_dim != n or X.target_dim != n:
        raise DimensionError(f"X must be a vector field on a {n}-dimensional space")
    parts = X.homogeneous_components()
    if max_degree is None:
        max_degree = max(parts, default=1) - 1
    witness = PolyMap.zero(n, rep.dim_g)
    certs, pending = [], []
    searched = -1
    for e, part in sorted(parts.items()):
        if part.is_zero():
            continue
        d = e - 1
        if d > max_degree:
            pending.append(d)
            continue
        searched = max(searched, d)
        system, keys, monos = _phi_system(rep, part, d)
        out = solve_or_certify(system)
        if isinstance(out, InfeasibilityCertificate):
            y = {keys[i]: c for i, c in out.y.items()}
            certs.append(DegreeCertificate(d, y, out.value([as_rational(b) for b in system.rhs])))
            continue
        comps = vector_from_coefficients(out.x, rep.dim_g, n, monos)
        witness = witness + PolyMap(n, rep.dim_g, tuple(comps))
    if certs:
        return DecompositionResult("infeasible", None, tuple(certs), searched, tuple(pending))
    if pending:
        return DecompositionResult("not_found_up_to_degree", None, (), max_degree, tuple(pending))
    if apply_phi(rep, witness) != X:  # pragma: no cover - exact solve guarantees this
        raise ArithmeticError("witness does not reproduce the input")
    return DecompositionResult("found", witness, (), searched)


def certificate_is_valid(rep: Representation, X: PolyMap, cert: DegreeCertificate) -> bool:
    """Re-derive the system for ``cert.degree`` and check ``y A = 0``, ``y b != 0``."""
    part = X.homogeneous_components().get(cert.degree + 1)
    if part is None:
        return False
    system, keys, _ = _phi_system(rep, part, cert.degree)
    pos = {k: i for i, k in enumerate(keys)}
    acc: dict[int, object] = {}
    val = 0
    rows = system.sparse_rows()
    for key, c in cert.y.items():
        i = pos.get(key)
        if i is None:
            return False
        for j, a in rows[i].items():
            acc[j] = acc.get(j, 0) + c * a
        val += c * system.rhs[i]
    return all(v == 0 for v in acc.values()) and val != 0
