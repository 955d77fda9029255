"""Finite-dimensional Lie algebras given by exact structure constants."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from ..polyalg.linalg import GradedLinearSystem, LinearSolution, commutator, solve_or_certify
from ..polyalg.polynomial import Rational, as_rational

Vector = Sequence[Rational]
Matrix = tuple[tuple[Rational, ...], ...]


class LieAlgebraError(ValueError):
    pass


def _freeze(matrix: Sequence[Sequence]) -> Matrix:
    return tuple(tuple(as_rational(x) for x in row) for row in matrix)


@dataclass(frozen=True, eq=False)
class LieAlgebra:
    """``[e_i, e_j] = sum_k c[i, j][k] e_k`` over the rationals.

    ``structure`` is stored sparsely as ``{(i, j): {k: c_ijk}}``. Optional
    extras: ``realization`` (basis matrices, when the algebra comes from a
    matrix algebra) and ``invariant_form`` (a nondegenerate ad-invariant
    symmetric form used to identify the algebra with its dual).
    """

    name: str
    dim: int
    structure: Mapping[tuple[int, int], Mapping[int, Rational]]
    basis_names: tuple[str, ...] = ()
    realization: tuple[Matrix, ...] | None = field(default=None, repr=False, compare=False)
    invariant_form: Matrix | None = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if self.dim <= 0:
            raise LieAlgebraError("dimension must be positive")
        if not self.basis_names:
            object.__setattr__(self, "basis_names", tuple(f"e{i}" for i in range(self.dim)))

    @classmethod
    def from_constants(cls, name: str, dim: int, constants, **kw) -> "LieAlgebra":
        """Build from ``{(i, j, k): c}`` or an iterable of ``(i, j, k, c)``."""
        items = constants.items() if isinstance(constants, Mapping) else ((t[:3], t[3]) for t in constants)
        structure: dict[tuple[int, int], dict[int, Rational]] = {}
        for (i, j, k), c in items:
            c = as_rational(c)
            if not all(0 <= t < dim for t in (i, j, k)):
                raise LieAlgebraError(f"index ({i}, {j}, {k}) out of range for dimension {dim}")
            if c:
                structure.setdefault((i, j), {})[k] = c
        return cls(name, dim, structure, **kw)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return (self.name, self.dim) == (other.name, other.dim) and self.constants() == other.constants()

    def __hash__(self) -> int:
        return hash((self.name, self.dim, len(self.structure)))

    def constant(self, i: int, j: int, k: int) -> Rational:
        return self.structure.get((i, j), {}).get(k, 0)

    def constants(self) -> list[tuple[int, int, int, Rational]]:
        return sorted((i, j, k, c) for (i, j), row in self.structure.items() for k, c in row.items())

    def bracket(self, x: Vector, y: Vector) -> list[Rational]:
        if len(x) != self.dim or len(y) != self.dim:
            raise LieAlgebraError(f"vectors must have length {self.dim}")
        out: list[Rational] = [0] * self.dim
        for (i, j), row in self.structure.items():
            xy = x[i] * y[j]
            if xy:
                for k, c in row.items():
                    out[k] += c * xy
        return [as_rational(v) for v in out]

    def basis_vector(self, i: int) -> list[int]:
        v = [0] * self.dim
        v[i] = 1
        return v

    def ad_matrix(self, i: int) -> list[list[Rational]]:
        """Matrix of ``ad(e_i)``: column ``m`` holds ``[e_i, e_m]``."""
        m = [[0] * self.dim for _ in range(self.dim)]
        for j in range(self.dim):
            for k, c in self.structure.get((i, j), {}).items():
                m[k][j] = c
        return m

    def is_abelian(self) -> bool:
        return not self.structure

    def check_antisymmetry(self) -> bool:
        for (i, j), row in self.structure.items():
            other = self.structure.get((j, i), {})
            if any(other.get(k, 0) != -c for k, c in row.items()):
                return False
            if any(row.get(k, 0) != -c for k, c in other.items()):
                return False
        return True

    def jacobi_violations(self) -> list[tuple[int, int, int]]:
        """Triples (i, j, k) where the Jacobi identity fails."""
        bad = []
        n = self.dim
        for i in range(n):
            ei = self.basis_vector(i)
            for j in range(i + 1, n):
                ej = self.basis_vector(j)
                eij = self.bracket(ei, ej)
                for k in range(j + 1, n):
                    ek = self.basis_vector(k)
                    t1 = self.bracket(eij, ek)
                    t2 = self.bracket(self.bracket(ej, ek), ei)
                    t3 = self.bracket(self.bracket(ek, ei), ej)
                    if any(a + b + c for a, b, c in zip(t1, t2, t3)):
                        bad.append((i, j, k))
        return bad

    def validate(self) -> None:
        if not self.check_antisymmetry():
            raise LieAlgebraError(f"{self.name}: structure constants are not antisymmetric")
        bad = self.jacobi_violations()
        if bad:
            raise LieAlgebraError(f"{self.name}: Jacobi identity fails on {bad[:3]}")

    def killing_form(self) -> list[list[Rational]]:
        ads = [self.ad_matrix(i) for i in range(self.dim)]
        n = self.dim
        return [[as_rational(sum(ads[i][a][b] * ads[j][b][a] for a in range(n) for b in range(n)))
                 for j in range(n)] for i in range(n)]

    def form_is_invariant(self, form: Sequence[Sequence]) -> bool:
        """``B([x, y], z) + B(y, [x, z]) = 0`` on all basis triples."""
        n = self.dim
        for x in range(n):
            ad = self.ad_matrix(x)
            for y in range(n):
                for z in range(n):
                    lhs = sum(ad[k][y] * form[k][z] for k in range(n)) + sum(form[y][k] * ad[k][z] for k in range(n))
                    if lhs:
                        return False
        return True


def coordinates_solver(basis: Sequence[Sequence[Sequence]]):
    """Return ``coords(X)`` expressing a matrix in the span of ``basis``.

    Works for matrices with rational or polynomial entries (the map is a
    fixed linear functional on the flattened entries).
    """
    flat = [[x for row in b for x in row] for b in basis]
    n = len(basis)
    size = len(flat[0])
    functionals = []
    for k in range(n):
        rhs = [1 if i == k else 0 for i in range(n)]
        out = solve_or_certify(GradedLinearSystem(size, flat, rhs))
        if not isinstance(out, LinearSolution):
            raise LieAlgebraError("basis matrices are linearly dependent")
        functionals.append({i: v for i, v in enumerate(out.x) if v})

    def coords(matrix):
        entries = [x for row in matrix for x in row]
        vec = []
        for fn in functionals:
            acc = 0
            for i, c in fn.items():
                e = entries[i]
                if e:
                    acc = e * c + acc
            vec.append(acc if not isinstance(acc, (int, Fraction)) else as_rational(acc))
        return vec

    def check(matrix) -> bool:
        vec = coords(matrix)
        rebuilt = [[sum(c * b[r][s] for c, b in zip(vec, basis)) for s in range(len(matrix[0]))] for r in range(len(matrix))]
        return all(as_rational(a) == as_rational(b) for ra, rb in zip(matrix, rebuilt) for a, b in zip(ra, rb))

    coords.check = check
    return coords


def from_matrices(name: str, basis: Sequence[Sequence[Sequence]], names: Sequence[str] = (), invariant_form=None) -> LieAlgebra:
    """Derive structure constants from a basis of matrices closed under commutators."""
    basis = [_freeze(b) for b in basis]
    coords = coordinates_solver(basis)
    constants = {}
    for i, a in enumerate(basis):
        for j, b in enumerate(basis):
            if i == j:
                continue
            comm = commutator(a, b)
            if not coords.check(comm):
                raise LieAlgebraError(f"{name}: basis is not closed under the bracket")
            for k, c in enumerate(coords(comm)):
                if c:
                    constants[(i, j, k)] = c
    return LieAlgebra.from_constants(name, len(basis), constants, basis_names=tuple(names),
                                     realization=tuple(basis), invariant_form=invariant_form)


def semidirect_double(q: LieAlgebra) -> LieAlgebra:
    """``q ⋉ q`` with the second copy an abelian ideal.

    Basis: ``(e_i, 0)`` for ``i < n`` then ``(0, e_i)``. Bracket
    ``[(x1, y1), (x2, y2)] = ([x1, x2], [x1, y2] + [y1, x2])``.
    """
    n = q.dim
    constants = {}
    for (i, j), row in q.structure.items():
        for k, c in row.items():
            constants[(i, j, k)] = c
            constants[(i, n + j, n + k)] = c
            constants[(n + i, j, n + k)] = c
    names = tuple(f"{s}'" for s in q.basis_names) + tuple(f"{s}''" for s in q.basis_names)
    form = None
    if q.invariant_form is not None:
        b = q.invariant_form
        form = tuple(
            tuple((b[i % n][j % n] if (i < n) != (j < n) else 0) for j in range(2 * n)) for i in range(2 * n)
        )
    return LieAlgebra.from_constants(f"{q.name}-ltimes-{q.name}", 2 * n, constants,
                                     basis_names=names, invariant_form=form)


def subalgebra(g: LieAlgebra, indices: Sequence[int], name: str | None = None) -> LieAlgebra:
    """Subalgebra spanned by a subset of basis vectors (must be closed)."""
    pos = {b: a for a, b in enumerate(indices)}
    constants = {}
    for a, i in enumerate(indices):
        for b, j in enumerate(indices):
            for k, c in g.structure.get((i, j), {}).items():
                if k not in pos:
                    raise LieAlgebraError("basis subset is not closed under the bracket")
                constants[(a, b, pos[k])] = c
    names = tuple(g.basis_names[i] for i in indices)
    real = tuple(g.realization[i] for i in indices) if g.realization else None
    return LieAlgebra.from_constants(name or f"{g.name}[0]", len(indices), constants,
                                     basis_names=names, realization=real)
