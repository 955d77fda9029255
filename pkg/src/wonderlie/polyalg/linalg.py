"""Exact linear algebra over the rationals.

Matrices are lists of rows. Large, structured systems (the per-degree
coefficient systems) are passed around as sparse rows ``{col: value}``;
both forms reduce through the same fraction-free integer kernel.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Mapping, Sequence

from . import _kernels
from .polynomial import Rational, as_rational

SparseRow = Mapping[int, Rational]


def _int_row(row: SparseRow) -> dict[int, int]:
    items = [(k, as_rational(v)) for k, v in row.items() if v]
    if not items:
        return {}
    m = lcm(*(Fraction(v).denominator for _, v in items))
    return {k: int(v * m) for k, v in items}


def dense_to_sparse(matrix: Sequence[Sequence]) -> list[dict[int, Rational]]:
    return [{j: as_rational(v) for j, v in enumerate(row) if v} for row in matrix]


def _ncols(matrix: Sequence[Sequence], ncols: int | None) -> int:
    if ncols is not None:
        return ncols
    return len(matrix[0]) if matrix else 0


def rref_sparse(rows: Sequence[SparseRow], ncols: int) -> list[tuple[int, dict[int, int]]]:
    """Reduced echelon form as ``[(pivot_col, integer_row)]``."""
    return _kernels.rref([_int_row(r) for r in rows], ncols)


def rank_sparse(rows: Sequence[SparseRow], ncols: int) -> int:
    return _kernels.echelon_rank([_int_row(r) for r in rows], ncols)


# largest prime below 2**31, so products fit in 64 bits
PRIME = 2147483647


def rank_mod_p(rows: Sequence[SparseRow], ncols: int, p: int = PRIME) -> int:
    """Rank of the reduction mod ``p``; never exceeds the rational rank.

    Denominators divisible by ``p`` raise ``ZeroDivisionError``.
    """
    reduced = []
    for row in rows:
        r = {}
        for k, v in row.items():
            f = Fraction(v)
            x = f.numerator * pow(f.denominator, -1, p) % p
            if x:
                r[k] = x
        reduced.append(r)
    return _kernels.rank_mod_p(reduced, ncols, p)


def rank(matrix: Sequence[Sequence], ncols: int | None = None) -> int:
    if not matrix:
        return 0
    return rank_sparse(dense_to_sparse(matrix), _ncols(matrix, ncols))


def nullspace_sparse(rows: Sequence[SparseRow], ncols: int) -> list[list[Rational]]:
    """Basis of ``{x : A x = 0}``, one vector per free column (ascending).

    Each vector has a 1 in its free column and zeros in the other free
    columns, so the basis is the canonical reduced-echelon one.
    """
    pivots = rref_sparse(rows, ncols)
    pivot_cols = {c for c, _ in pivots}
    basis = []
    for f in range(ncols):
        if f in pivot_cols:
            continue
        v: list[Rational] = [0] * ncols
        v[f] = 1
        for c, row in pivots:
            a = row.get(f)
            if a:
                v[c] = as_rational(Fraction(-a, row[c]))
        basis.append(v)
    return basis


def nullspace(matrix: Sequence[Sequence], ncols: int | None = None) -> list[list[Rational]]:
    n = _ncols(matrix, ncols)
    return nullspace_sparse(dense_to_sparse(matrix), n)


def left_nullspace(matrix: Sequence[Sequence]) -> list[list[Rational]]:
    return nullspace(transpose(matrix), len(matrix))


# -- small dense helpers ----------------------------------------------------
def transpose(matrix: Sequence[Sequence]) -> list[list]:
    if not matrix:
        return []
    return [list(col) for col in zip(*matrix)]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list[Rational]]:
    bt = transpose(b)
    return [[as_rational(sum(x * y for x, y in zip(row, col))) for col in bt] for row in a]


def matvec(a: Sequence[Sequence], v: Sequence) -> list[Rational]:
    return [as_rational(sum(x * y for x, y in zip(row, v))) for row in a]


def identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zeros(rows: int, cols: int) -> list[list[int]]:
    return [[0] * cols for _ in range(rows)]


def commutator(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list[Rational]]:
    ab = matmul(a, b)
    ba = matmul(b, a)
    return [[as_rational(x - y) for x, y in zip(r1, r2)] for r1, r2 in zip(ab, ba)]


def inverse(matrix: Sequence[Sequence]) -> list[list[Rational]]:
    n = len(matrix)
    cols = []
    for j in range(n):
        e = [0] * n
        e[j] = 1
        out = solve_or_certify(GradedLinearSystem(n, matrix, e))
        if not isinstance(out, LinearSolution):
            raise ValueError("matrix is singular")
        cols.append(out.x)
    return transpose(cols)


# -- linear systems ---------------------------------------------------------
@dataclass(frozen=True)
class GradedLinearSystem:
    """``A x = b`` with ``unknown_dim`` unknowns.

    ``constraint_matrix`` may be dense (list of rows) or sparse
    (list of ``{col: value}``).
    """

    unknown_dim: int
    constraint_matrix: Sequence
    rhs: Sequence

    def sparse_rows(self) -> list[dict[int, Rational]]:
        rows = list(self.constraint_matrix)
        if rows and not isinstance(rows[0], Mapping):
            return dense_to_sparse(rows)
        return [dict(r) for r in rows]


@dataclass(frozen=True)
class LinearSolution:
    x: tuple[Rational, ...]


@dataclass(frozen=True)
class InfeasibilityCertificate:
    """Row combination ``y`` with ``y.A = 0`` and ``y.b != 0`` (sparse)."""

    y: dict[int, Rational]

    def value(self, rhs: Sequence) -> Rational:
        return as_rational(sum(c * rhs[i] for i, c in self.y.items()))


def _solve_sparse(rows: list[dict], rhs: Sequence, n: int) -> tuple[Rational, ...] | None:
    aug = []
    for r, b in zip(rows, rhs):
        row = dict(r)
        if b:
            row[n] = b
        aug.append(row)
    pivots = rref_sparse(aug, n + 1)
    x: list[Rational] = [0] * n
    for c, row in pivots:
        if c == n:
            return None
        x[c] = as_rational(Fraction(row.get(n, 0), row[c]))
    return tuple(x)


def solve_or_certify(system: GradedLinearSystem) -> LinearSolution | InfeasibilityCertificate:
    """Exact solution (free variables set to 0) or an infeasibility certificate."""
    rows = system.sparse_rows()
    rhs = [as_rational(b) for b in system.rhs]
    if len(rhs) != len(rows):
        raise ValueError(f"{len(rows)} equations but {len(rhs)} right-hand sides")
    n = system.unknown_dim
    x = _solve_sparse(rows, rhs, n)
    if x is not None:
        return LinearSolution(x)
    # y with A^T y = 0 and b.y = 1; consistent exactly when A x = b is not
    m = len(rows)
    cols: list[dict[int, Rational]] = [{} for _ in range(n)]
    for i, r in enumerate(rows):
        for j, v in r.items():
            if v:
                cols[j][i] = v
    t_rows = cols + [{i: b for i, b in enumerate(rhs) if b}]
    t_rhs = [0] * n + [1]
    y = _solve_sparse(t_rows, t_rhs, m)
    if y is None:  # pragma: no cover - contradicts the alternative theorem
        raise ArithmeticError("neither a solution nor a certificate was found")
    return InfeasibilityCertificate({i: v for i, v in enumerate(y) if v})


def residual(system: GradedLinearSystem, x: Sequence) -> list[Rational]:
    out = []
    for r, b in zip(system.sparse_rows(), system.rhs):
        out.append(as_rational(sum(v * x[j] for j, v in r.items()) - as_rational(b)))
    return out


def certificate_holds(system: GradedLinearSystem, cert: InfeasibilityCertificate) -> bool:
    acc: dict[int, Rational] = {}
    rows = system.sparse_rows()
    for i, c in cert.y.items():
        for j, v in rows[i].items():
            acc[j] = acc.get(j, 0) + c * v
    return all(v == 0 for v in acc.values()) and cert.value([as_rational(b) for b in system.rhs]) != 0
