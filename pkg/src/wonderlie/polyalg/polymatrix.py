"""Matrices with polynomial entries: graded kernels and certified generic rank.

The generic rank of ``M(x)`` is the rank over the rational function field.
It is pinned down from both sides without sampling:

* lower bound: exact rank of ``M(p)`` at a rational point ``p``;
* upper bound: polynomial kernel vectors that are linearly independent at
  ``p`` (hence over the function field), or fraction-free elimination over
  the polynomial ring for small matrices.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .linalg import nullspace_sparse, rank
from .polynomial import Polynomial, monomials


class RankNotCertified(ArithmeticError):
    pass


class PolyMatrix:
    __slots__ = ("entries", "nrows", "ncols", "num_vars")

    def __init__(self, entries: Sequence[Sequence[Polynomial]], num_vars: int | None = None):
        self.entries = tuple(tuple(row) for row in entries)
        self.nrows = len(self.entries)
        self.ncols = len(self.entries[0]) if self.entries else 0
        if num_vars is None:
            if not self.nrows or not self.ncols:
                raise ValueError("num_vars required for an empty matrix")
            num_vars = self.entries[0][0].num_vars
        self.num_vars = num_vars
        for row in self.entries:
            if len(row) != self.ncols:
                raise ValueError("ragged matrix")
            for p in row:
                if p.num_vars != num_vars:
                    raise ValueError("entries live in different polynomial rings")

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix([list(c) for c in zip(*self.entries)], self.num_vars)

    def evaluate(self, point: Sequence) -> list[list]:
        return [[p.evaluate(point) for p in row] for row in self.entries]

    def apply(self, vector: Sequence[Polynomial]) -> list[Polynomial]:
        if len(vector) != self.ncols:
            raise ValueError(f"vector of length {len(vector)} for {self.ncols} columns")
        out = []
        for row in self.entries:
            acc = Polynomial.zero(self.num_vars)
            for p, q in zip(row, vector):
                if p and q:
                    acc = acc + p * q
            out.append(acc)
        return out

    def annihilates(self, vector: Sequence[Polynomial]) -> bool:
        return all(p.is_zero() for p in self.apply(vector))


def kernel_system(matrix: PolyMatrix, degree: int):
    """Sparse coefficient system for ``M K = 0`` with ``K`` homogeneous of ``degree``.

    Unknown ``c * len(monos) + k`` is the coefficient of ``monos[k]`` in
    ``K[c]``. Rows are keyed by ``(output row, monomial)``.
    """
    n = matrix.num_vars
    monos = monomials(n, degree)
    nm = len(monos)
    row_index: dict[tuple, int] = {}
    rows: list[dict[int, object]] = []
    for r, mrow in enumerate(matrix.entries):
        for c, entry in enumerate(mrow):
            for e, a in entry.as_dict().items():
                for k, nu in enumerate(monos):
                    key = (r, tuple(x + y for x, y in zip(e, nu)))
                    idx = row_index.get(key)
                    if idx is None:
                        idx = row_index[key] = len(rows)
                        rows.append({})
                    col = c * nm + k
                    v = rows[idx].get(col, 0) + a
                    if v:
                        rows[idx][col] = v
                    else:
                        rows[idx].pop(col, None)
    return rows, row_index, monos


def vector_from_coefficients(coeffs: Sequence, ncomp: int, num_vars: int, monos) -> list[Polynomial]:
    nm = len(monos)
    out = []
    for c in range(ncomp):
        terms = {monos[k]: coeffs[c * nm + k] for k in range(nm) if coeffs[c * nm + k]}
        out.append(Polynomial(num_vars, terms))
    return out


def graded_kernel_basis(matrix: PolyMatrix, degree: int) -> list[list[Polynomial]]:
    """Basis of the degree-``degree`` homogeneous solutions of ``M K = 0``."""
    if degree < 0:
        return []
    rows, _, monos = kernel_system(matrix, degree)
    ncols = matrix.ncols * len(monos)
    basis = nullspace_sparse(rows, ncols)
    return [vector_from_coefficients(v, matrix.ncols, matrix.num_vars, monos) for v in basis]


def bareiss_rank(matrix: PolyMatrix) -> int:
    """Rank over the function field by fraction-free elimination.

    Full pivoting; the pivot is the nonzero entry of lowest total degree,
    ties broken by term count then position. Cost grows quickly with the
    size of the matrix, so this is meant for small inputs.
    """
    a = [list(row) for row in matrix.entries]
    m, n = matrix.nrows, matrix.ncols
    prev = Polynomial.constant(matrix.num_vars, 1)
    r = 0
    for k in range(min(m, n)):
        best = None
        for i in range(k, m):
            for j in range(k, n):
                p = a[i][j]
                if p:
                    key = (p.degree, len(p), i, j)
                    if best is None or key < best[0]:
                        best = (key, i, j)
        if best is None:
            break
        _, pi, pj = best
        a[k], a[pi] = a[pi], a[k]
        for row in a:
            row[k], row[pj] = row[pj], row[k]
        piv = a[k][k]
        for i in range(k + 1, m):
            aik = a[i][k]
            for j in range(k + 1, n):
                num = piv * a[i][j] - aik * a[k][j]
                a[i][j] = num.exact_div(prev) if num else num
            a[i][k] = Polynomial.zero(matrix.num_vars)
        prev = piv
        r += 1
    return r


def random_point(rng: random.Random, n: int, bound: int = 10) -> tuple[int, ...]:
    return tuple(rng.randint(-bound, bound) for _ in range(n))


@dataclass(frozen=True)
class RankCertificate:
    rank: int
    point: tuple
    method: str
    kernel: tuple = field(default=(), repr=False)

    def to_json(self) -> dict:
        return {"rank": self.rank, "point": [str(x) for x in self.point], "method": self.method,
                "kernel_vectors": len(self.kernel)}


def _rank_at(vectors: Iterable[Sequence[Polynomial]], point) -> int:
    mat = [[p.evaluate(point) for p in v] for v in vectors]
    return rank(mat) if mat else 0


def generic_rank(
    matrix: PolyMatrix,
    *,
    seed: int = 0,
    hints: Sequence[Sequence[Polynomial]] = (),
    max_kernel_degree: int = 2,
    bareiss_limit: int = 6,
) -> RankCertificate:
    """Exact rank of ``matrix`` over the function field, with its certificate."""
    rng = random.Random(seed)
    n = matrix.num_vars
    best_rank, best_point = -1, None
    for _ in range(3):
        p = random_point(rng, n)
        rk = rank(matrix.evaluate(p), matrix.ncols) if matrix.nrows else 0
        if rk > best_rank:
            best_rank, best_point = rk, p
    r = best_rank
    if r == min(matrix.nrows, matrix.ncols):
        return RankCertificate(r, best_point, "full")
    need = matrix.ncols - r
    found: list[list[Polynomial]] = []
    for h in hints:
        h = list(h)
        if not matrix.annihilates(h):
            raise ValueError("hint vector is not in the kernel")
        found.append(h)
    if _rank_at(found, best_point) >= need:
        return RankCertificate(r, best_point, "kernel", tuple(tuple(v) for v in found))
    for d in range(max_kernel_degree + 1):
        found.extend(graded_kernel_basis(matrix, d))
        if _rank_at(found, best_point) >= need:
            return RankCertificate(r, best_point, "kernel", tuple(tuple(v) for v in found))
    if max(matrix.nrows, matrix.ncols) <= bareiss_limit:
        return RankCertificate(bareiss_rank(matrix), best_point, "bareiss")
    raise RankNotCertified(
        f"rank {r} at a sample point but only {_rank_at(found, best_point)} of {need} "
        f"kernel vectors found up to degree {max_kernel_degree}"
    )
