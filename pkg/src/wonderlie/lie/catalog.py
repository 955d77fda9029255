"""Classical matrix algebras, doubles and block symmetric pairs.

Structure constants are always derived from the matrix realizations below,
never typed in by hand.

* ``sl_n``: ``E_ij`` (i < j, lex order), then ``H_i = E_ii - E_{i+1,i+1}``,
  then ``E_ji`` in the same order as the upper block. For ``sl_2`` this is
  ``(e, h, f)``.
* ``gl_n``: ``E_ij`` row-major.
* ``so_n``: preserves the antidiagonal form; basis ``E_ij - E_{n-1-j,n-1-i}``
  for ``i + j < n - 1``.
* ``sp_2n``: preserves ``J = [[0, I], [-I, 0]]``; blocks ``[[A, B], [C, -A^T]]``
  with basis ``A = E_ij``, then symmetric ``B``, then symmetric ``C``.

The invariant form attached to each is the trace form ``tr(XY)``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from ..polyalg.polynomial import as_rational
from .algebra import LieAlgebra, LieAlgebraError, from_matrices, semidirect_double, subalgebra
from .representation import Representation


def matrix_unit(n: int, i: int, j: int) -> list[list[int]]:
    m = [[0] * n for _ in range(n)]
    m[i][j] = 1
    return m


def _lin(n: int, *terms) -> list[list]:
    """Sum of ``coef * E_ij`` given as ``(coef, i, j)`` triples."""
    m = [[0] * n for _ in range(n)]
    for c, i, j in terms:
        m[i][j] += c
    return m


def trace_form(basis: Sequence[Sequence[Sequence]]) -> tuple[tuple, ...]:
    k = len(basis)
    n = len(basis[0])

    def tr_prod(a, b):
        return as_rational(sum(a[r][s] * b[s][r] for r in range(n) for s in range(n) if a[r][s]))

    return tuple(tuple(tr_prod(basis[i], basis[j]) for j in range(k)) for i in range(k))


def sl_basis(n: int) -> tuple[list, list[str]]:
    upper = [(i, j) for i in range(n) for j in range(i + 1, n)]
    basis, names = [], []
    for i, j in upper:
        basis.append(matrix_unit(n, i, j))
        names.append(f"E{i}{j}")
    for i in range(n - 1):
        basis.append(_lin(n, (1, i, i), (-1, i + 1, i + 1)))
        names.append(f"H{i}")
    for i, j in upper:
        basis.append(matrix_unit(n, j, i))
        names.append(f"E{j}{i}")
    if n == 2:
        names = ["e", "h", "f"]
    return basis, names


def gl_basis(n: int) -> tuple[list, list[str]]:
    return [matrix_unit(n, i, j) for i in range(n) for j in range(n)], [f"E{i}{j}" for i in range(n) for j in range(n)]


def so_basis(n: int) -> tuple[list, list[str]]:
    basis, names = [], []
    for i in range(n):
        for j in range(n):
            if i + j < n - 1:
                basis.append(_lin(n, (1, i, j), (-1, n - 1 - j, n - 1 - i)))
                names.append(f"X{i}{j}")
    return basis, names


def sp_basis(n2: int) -> tuple[list, list[str]]:
    if n2 % 2:
        raise LieAlgebraError("sp needs an even size")
    n = n2 // 2
    basis, names = [], []
    for i in range(n):
        for j in range(n):
            basis.append(_lin(n2, (1, i, j), (-1, n + j, n + i)))
            names.append(f"A{i}{j}")
    for i in range(n):
        for j in range(i, n):
            basis.append(_lin(n2, (1, i, n + j), (1, j, n + i)) if i != j else _lin(n2, (1, i, n + i)))
            names.append(f"B{i}{j}")
    for i in range(n):
        for j in range(i, n):
            basis.append(_lin(n2, (1, n + i, j), (1, n + j, i)) if i != j else _lin(n2, (1, n + i, i)))
            names.append(f"C{i}{j}")
    return basis, names


def _matrix_algebra(name: str, basis, names) -> LieAlgebra:
    return from_matrices(name, basis, names, invariant_form=trace_form(basis))


@lru_cache(maxsize=None)
def sl(n: int) -> LieAlgebra:
    if n < 2:
        raise LieAlgebraError("sl_n needs n >= 2")
    return _matrix_algebra(f"sl{n}", *sl_basis(n))


@lru_cache(maxsize=None)
def gl(n: int) -> LieAlgebra:
    return _matrix_algebra(f"gl{n}", *gl_basis(n))


@lru_cache(maxsize=None)
def so(n: int) -> LieAlgebra:
    if n < 3:
        raise LieAlgebraError("so_n needs n >= 3")
    return _matrix_algebra(f"so{n}", *so_basis(n))


@lru_cache(maxsize=None)
def sp(n2: int) -> LieAlgebra:
    return _matrix_algebra(f"sp{n2}", *sp_basis(n2))


@lru_cache(maxsize=None)
def abelian(n: int) -> LieAlgebra:
    # trivial form: identity, so the dual identification is the coordinate one
    ident = tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
    return LieAlgebra(f"abelian{n}", n, {}, invariant_form=ident)


_SIMPLE = {"sl": sl, "gl": gl, "so": so, "sp": sp, "abelian": abelian}
_NAME = re.compile(r"^(sl|gl|so|sp|abelian)(\d+)$")


def get_algebra(name: str) -> LieAlgebra:
    """Look up a catalog algebra: ``sl3``, ``sp4``, ``abelian1``, ``sl2-ltimes-sl2`` ..."""
    if "-ltimes-" in name:
        left, _, right = name.partition("-ltimes-")
        if left != right:
            raise KeyError(f"only doubles q-ltimes-q are supported, got {name!r}")
        return _double(left)
    m = _NAME.match(name)
    if not m:
        raise KeyError(f"unknown algebra {name!r}")
    return _SIMPLE[m.group(1)](int(m.group(2)))


@lru_cache(maxsize=None)
def _double(name: str) -> LieAlgebra:
    return semidirect_double(get_algebra(name))


# -- symmetric pairs --------------------------------------------------------
@dataclass(frozen=True)
class SymmetricPair:
    """A Z/2-grading ``g = g0 + g1`` given by per-basis-vector degrees."""

    ambient: LieAlgebra
    grading: tuple[int, ...]
    rank_ce: int | None = None
    name: str = ""
    blocks: tuple[int, int] | None = None

    def __post_init__(self):
        if len(self.grading) != self.ambient.dim or set(self.grading) - {0, 1}:
            raise LieAlgebraError("grading must assign 0 or 1 to every basis vector")

    @property
    def g0_indices(self) -> tuple[int, ...]:
        return tuple(i for i, d in enumerate(self.grading) if d == 0)

    @property
    def g1_indices(self) -> tuple[int, ...]:
        return tuple(i for i, d in enumerate(self.grading) if d == 1)

    def grading_violations(self) -> list[tuple[int, int, int]]:
        bad = []
        for (i, j), row in self.ambient.structure.items():
            want = (self.grading[i] + self.grading[j]) % 2
            for k in row:
                if self.grading[k] != want:
                    bad.append((i, j, k))
        return bad

    def is_compatible(self) -> bool:
        return not self.grading_violations()

    def g0(self) -> LieAlgebra:
        return subalgebra(self.ambient, self.g0_indices, f"{self.name or self.ambient.name}[0]")

    def isotropy_representation(self) -> Representation:
        """``g0`` acting on ``g1`` (coordinates in the ``g1`` basis vectors)."""
        g = self.ambient
        i1 = self.g1_indices
        pos = {b: a for a, b in enumerate(i1)}
        mats = []
        for i in self.g0_indices:
            m = [[0] * len(i1) for _ in i1]
            for a, j in enumerate(i1):
                for k, c in g.structure.get((i, j), {}).items():
                    m[pos[k]][a] = c
            mats.append(m)
        return Representation.from_matrices(self.g0(), mats, f"isotropy {self.name}")

    def split_vector(self, x: Sequence) -> tuple[list, list]:
        return [x[i] for i in self.g0_indices], [x[i] for i in self.g1_indices]

    def embed_g1(self, v: Sequence) -> list:
        out = [0] * self.ambient.dim
        for a, i in enumerate(self.g1_indices):
            out[i] = v[a]
        return out

    def embed_g0(self, v: Sequence) -> list:
        out = [0] * self.ambient.dim
        for a, i in enumerate(self.g0_indices):
            out[i] = v[a]
        return out


@lru_cache(maxsize=None)
def block_pair(p: int, q: int) -> SymmetricPair:
    """``(sl_{p+q}, s(gl_p + gl_q))``: ``g1`` is the two off-diagonal blocks."""
    n = p + q
    g = sl(n)
    basis, _ = sl_basis(n)
    grading = []
    for b in basis:
        off = any(b[r][s] for r in range(n) for s in range(n) if (r < p) != (s < p))
        grading.append(1 if off else 0)
    return SymmetricPair(g, tuple(grading), min(p, q), f"sl{n}-pair", (p, q))


_PAIR = re.compile(r"^sl(\d+)-pair$")


def get_pair(name: str) -> SymmetricPair:
    """``slN-pair`` is the block pair with ``p = N // 2`` and ``q = N - p``."""
    m = _PAIR.match(name)
    if not m:
        raise KeyError(f"unknown symmetric pair {name!r}")
    n = int(m.group(1))
    if n < 2:
        raise KeyError(f"unknown symmetric pair {name!r}")
    return block_pair(n // 2, n - n // 2)


def pair_case(pair: SymmetricPair) -> tuple[str, int]:
    """``("even", n)`` for ``p = q = n`` and ``("odd", n)`` for ``q = p + 1 = n + 1``."""
    if pair.blocks is None:
        raise ValueError("pair does not come from a block grading")
    p, q = pair.blocks
    if p == q:
        return "even", p
    if q == p + 1:
        return "odd", p
    raise ValueError(f"blocks {pair.blocks} are neither equal nor adjacent")


def covariant_count(pair: SymmetricPair) -> int:
    """Rank of the kernel module for the block pairs: ``n - 1`` (even) or ``n`` (odd)."""
    kind, n = pair_case(pair)
    return n - 1 if kind == "even" else n
