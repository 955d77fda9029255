"""Representations of Lie algebras on finite-dimensional rational spaces."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..polyalg.linalg import commutator, nullspace, rank
from ..polyalg.polymatrix import PolyMatrix
from ..polyalg.polynomial import Polynomial, Rational, as_rational
from .algebra import LieAlgebra


class RepresentationError(ValueError):
    pass


@dataclass(frozen=True)
class Representation:
    """``rho(e_i)`` for each basis element of ``algebra``, acting on ``k^space_dim``."""

    algebra: LieAlgebra
    space_dim: int
    action_matrices: tuple[tuple[tuple[Rational, ...], ...], ...]
    name: str = ""

    def __post_init__(self):
        if len(self.action_matrices) != self.algebra.dim:
            raise RepresentationError("need one action matrix per basis element")
        for m in self.action_matrices:
            if len(m) != self.space_dim or any(len(r) != self.space_dim for r in m):
                raise RepresentationError(f"action matrices must be {self.space_dim}x{self.space_dim}")

    @classmethod
    def from_matrices(cls, algebra: LieAlgebra, matrices, name: str = "") -> "Representation":
        mats = tuple(tuple(tuple(as_rational(x) for x in row) for row in m) for m in matrices)
        n = len(mats[0]) if mats else 0
        return cls(algebra, n, mats, name)

    @property
    def dim_g(self) -> int:
        return self.algebra.dim

    def matrix_of(self, x: Sequence) -> list[list[Rational]]:
        """``rho(x)`` for a g-vector ``x``."""
        n = self.space_dim
        out = [[0] * n for _ in range(n)]
        for c, m in zip(x, self.action_matrices):
            if c:
                for r in range(n):
                    row = m[r]
                    for s in range(n):
                        if row[s]:
                            out[r][s] += c * row[s]
        return [[as_rational(v) for v in row] for row in out]

    def act(self, x: Sequence, v: Sequence) -> list[Rational]:
        if len(x) != self.dim_g or len(v) != self.space_dim:
            raise RepresentationError("dimension mismatch")
        out = [0] * self.space_dim
        for c, m in zip(x, self.action_matrices):
            if c:
                for r in range(self.space_dim):
                    out[r] += c * sum(a * b for a, b in zip(m[r], v) if a)
        return [as_rational(t) for t in out]

    def orbit_map_matrix(self, v: Sequence) -> list[list[Rational]]:
        """Matrix of ``x -> rho(x) v``: column ``i`` is ``rho(e_i) v``."""
        cols = []
        for m in self.action_matrices:
            cols.append([as_rational(sum(a * b for a, b in zip(row, v) if a)) for row in m])
        return [list(r) for r in zip(*cols)]

    def action_polymatrix(self) -> PolyMatrix:
        """``M(v)`` with ``M(v)[:, i] = rho(e_i) v`` and entries linear in ``v``."""
        n = self.space_dim
        entries = []
        for r in range(n):
            row = []
            for m in self.action_matrices:
                row.append(Polynomial.linear(m[r]))
            entries.append(row)
        return PolyMatrix(entries, n)

    def homomorphism_violations(self) -> list[tuple[int, int]]:
        bad = []
        g = self.algebra
        for i in range(g.dim):
            for j in range(i + 1, g.dim):
                lhs = self.matrix_of(g.bracket(g.basis_vector(i), g.basis_vector(j)))
                if lhs != commutator(self.action_matrices[i], self.action_matrices[j]):
                    bad.append((i, j))
        return bad

    def validate(self) -> None:
        bad = self.homomorphism_violations()
        if bad:
            raise RepresentationError(f"not a representation: bracket fails on basis pairs {bad[:3]}")


def adjoint(g: LieAlgebra) -> Representation:
    return Representation.from_matrices(g, [g.ad_matrix(i) for i in range(g.dim)], f"ad {g.name}")


def coadjoint(g: LieAlgebra) -> Representation:
    """Dual-basis action: ``rho*(e_i)[k][m] = -c_{i k m}``."""
    mats = []
    for i in range(g.dim):
        m = [[0] * g.dim for _ in range(g.dim)]
        for k in range(g.dim):
            for mm, c in g.structure.get((i, k), {}).items():
                m[k][mm] = -c
        mats.append(m)
    return Representation.from_matrices(g, mats, f"coad {g.name}")


def trivial(g: LieAlgebra, space_dim: int) -> Representation:
    z = [[0] * space_dim for _ in range(space_dim)]
    return Representation.from_matrices(g, [z] * g.dim, f"trivial^{space_dim} {g.name}")


@dataclass(frozen=True)
class StabilizerData:
    point: tuple
    stabilizer_basis: tuple[tuple[Rational, ...], ...]
    orbit_dim: int

    @property
    def dim(self) -> int:
        return len(self.stabilizer_basis)


def stabilizer(rep: Representation, v: Sequence) -> StabilizerData:
    if len(v) != rep.space_dim:
        raise RepresentationError(f"point must have length {rep.space_dim}")
    v = tuple(as_rational(x) for x in v)
    mat = rep.orbit_map_matrix(v)
    basis = nullspace(mat, rep.dim_g)
    data = StabilizerData(v, tuple(tuple(b) for b in basis), rep.dim_g - len(basis))
    if data.orbit_dim + data.dim != rep.dim_g:  # pragma: no cover - rank-nullity
        raise ArithmeticError("rank-nullity violated")
    return data


def orbit_dim(rep: Representation, v: Sequence) -> int:
    return rank(rep.orbit_map_matrix(v), rep.dim_g)

