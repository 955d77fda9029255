"""Explicit nilpotent representatives: Jordan matrices, graded chains, orthogonal forms."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..lie.algebra import coordinates_solver
from ..lie.catalog import SymmetricPair, sl
from ..lie.representation import adjoint, stabilizer
from ..polyalg.linalg import nullspace
from ..polyalg.polynomial import Polynomial
from .partitions import Partition, is_orthogonal_partition


def jordan_matrix(p: Partition) -> list[list[int]]:
    """Block-diagonal nilpotent Jordan matrix with ones on the superdiagonal."""
    n = p.total
    m = [[0] * n for _ in range(n)]
    start = 0
    for k in p.parts:
        for t in range(k - 1):
            m[start + t][start + t + 1] = 1
        start += k
    return m


def centralizer_dim_bruteforce(p: Partition) -> int:
    """``dim`` of the kernel of ``ad(J)`` on ``sl_N``, by exact nullspace."""
    g = sl(p.total)
    x = coordinates_solver(g.realization)(jordan_matrix(p))
    return stabilizer(adjoint(g), x).dim


# -- graded representatives for block pairs ---------------------------------
Chain = tuple[int, int]  # (length, parity of the first vector)


def chain_diagrams(p: int, q: int) -> list[tuple[Chain, ...]]:
    """All multisets of alternating chains filling ``p`` even and ``q`` odd slots.

    These label the nilpotent orbits of ``S(GL_p x GL_q)`` on the
    off-diagonal blocks.
    """
    n = p + q
    kinds = [(k, s) for k in range(n, 0, -1) for s in (0, 1)]
    out = []

    def even_count(k: int, s: int) -> int:
        return (k + 1) // 2 if s == 0 else k // 2

    def rec(idx: int, left: int, evens: int, acc: list):
        if left == 0:
            if evens == p:
                out.append(tuple(acc))
            return
        for j in range(idx, len(kinds)):
            k, s = kinds[j]
            if k <= left:
                e = even_count(k, s)
                if evens + e <= p:
                    acc.append((k, s))
                    rec(j, left - k, evens + e, acc)
                    acc.pop()

    rec(0, n, 0, [])
    return out


def diagram_partition(diagram: tuple[Chain, ...]) -> Partition:
    return Partition.of(*(k for k, _ in diagram))


def diagram_label(diagram: tuple[Chain, ...]) -> str:
    chains = []
    for k, s in diagram:
        chains.append("".join("ab"[(s + t) % 2] for t in range(k)))
    return "[" + " ".join(chains) + "]"


def diagram_matrix(p: int, q: int, diagram: tuple[Chain, ...]) -> list[list[int]]:
    """Matrix sending each chain vector to the next; even slots are ``0..p-1``."""
    n = p + q
    free = [list(range(p)), list(range(p, n))]
    m = [[0] * n for _ in range(n)]
    for k, s in diagram:
        idx = []
        for t in range(k):
            idx.append(free[(s + t) % 2].pop(0))
        for a, b in zip(idx, idx[1:]):
            m[b][a] = 1
    return m


@dataclass(frozen=True)
class GradedOrbit:
    label: str
    partition: Partition
    representative: tuple  # coordinates in the g1 basis
    centralizer_dim: int  # dim of the stabilizer in g0
    orbit_dim: int


@lru_cache(maxsize=None)
def graded_null_cone(pair: SymmetricPair) -> tuple[GradedOrbit, ...]:
    """Nilpotent ``G0``-orbits in ``g1`` with exact stabilizer dimensions."""
    if pair.blocks is None:
        raise ValueError("graded null cone is only generated for block pairs")
    p, q = pair.blocks
    g = pair.ambient
    coords = coordinates_solver(g.realization)
    iso = pair.isotropy_representation()
    out = []
    for diagram in chain_diagrams(p, q):
        x = coords(diagram_matrix(p, q, diagram))
        if any(x[i] for i in pair.g0_indices):
            raise ArithmeticError("chain matrix is not in g1")  # pragma: no cover
        v = tuple(x[i] for i in pair.g1_indices)
        st = stabilizer(iso, v)
        part = diagram_partition(diagram)
        out.append(GradedOrbit(f"{part.label()}{diagram_label(diagram)}", part, v, st.dim, st.orbit_dim))
    out.sort(key=lambda o: (-o.orbit_dim, o.label))
    return tuple(out)


# -- orthogonal representatives ---------------------------------------------
def orthogonal_form(p: Partition) -> tuple[list[list[int]], list[list[int]]]:
    """Symmetric form ``B`` and nilpotent ``u`` in ``so(B)`` of Jordan type ``p``.

    Odd part ``k``: one chain with ``B(u_i, u_j) = (-1)^i [i + j = k - 1]``.
    Even parts come in pairs of chains ``u, w`` with the same rule between
    ``u`` and ``w`` and zero within each chain.
    """
    if not is_orthogonal_partition(p):
        raise ValueError(f"{p} is not an orthogonal partition")
    n = p.total
    B = [[0] * n for _ in range(n)]
    u = [[0] * n for _ in range(n)]
    start = 0
    counts: dict[int, int] = {}
    for k in p.parts:
        counts[k] = counts.get(k, 0) + 1
    for k in sorted(counts, reverse=True):
        mult = counts[k]
        if k % 2:
            blocks = [(start + j * k,) for j in range(mult)]
        else:
            blocks = [(start + 2 * j * k, start + (2 * j + 1) * k) for j in range(mult // 2)]
        for blk in blocks:
            for base in blk:
                for t in range(k - 1):
                    u[base + t + 1][base + t] = 1
            a, b = (blk[0], blk[0]) if len(blk) == 1 else blk
            for i in range(k):
                j = k - 1 - i
                B[a + i][b + j] = (-1) ** i
                B[b + j][a + i] = (-1) ** i
        start += k * mult
    return B, u


def so_form_basis(B: list[list[int]]) -> list[list[list]]:
    """Basis of ``{X : X^T B + B X = 0}`` as matrices."""
    n = len(B)
    rows = []
    for r in range(n):
        for s in range(n):
            # (X^T B + B X)[r][s] = sum_t X[t][r] B[t][s] + B[r][t] X[t][s]
            row = [0] * (n * n)
            for t in range(n):
                row[t * n + r] += B[t][s]
                row[t * n + s] += B[r][t]
            rows.append(row)
    return [[vec[i * n:(i + 1) * n] for i in range(n)] for vec in nullspace(rows, n * n)]


def _pf(a):
    from ..invariants import pfaffian

    return pfaffian(a)


def pfaffian_gradient_vanishes(p: Partition) -> bool:
    """Whether ``d(Pf(B X))`` vanishes at the representative ``u`` of type ``p``.

    The derivative along each basis direction ``Y`` of ``so(B)`` is the
    linear coefficient of ``t -> Pf(B (u + t Y))``.
    """
    B, u = orthogonal_form(p)
    n = len(B)
    t = Polynomial.variable(1, 0)
    one = Polynomial.constant(1, 1)
    for Y in so_form_basis(B):
        path = [[one.scale(u[r][s]) + t.scale(Y[r][s]) for s in range(n)] for r in range(n)]
        bx = [[sum((path[k][s].scale(B[r][k]) for k in range(n) if B[r][k]), Polynomial.zero(1))
               for s in range(n)] for r in range(n)]
        pf = _pf(bx)
        if isinstance(pf, Polynomial) and pf.coefficient((1,)) != 0:
            return False
    return True
