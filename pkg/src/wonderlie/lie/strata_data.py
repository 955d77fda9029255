"""Non-regular loci of catalog algebras, as orbit-family strata.

Adjoint strata are listed as matrices; coadjoint strata are obtained by
pushing them through the invariant form ``x -> B(x, .)``, which is an
isomorphism of modules and so preserves orbit dimensions.

For a double ``q ⋉ q`` a point ``(alpha, beta)`` of the dual is regular as
soon as ``beta`` (the component dual to the abelian ideal) is regular in
``q*``. So ``{beta non-regular} x q*`` covers the non-regular locus, and
the strata of ``q*`` lifted this way give a lower bound on the codimension.
"""
from __future__ import annotations

from ..polyalg.linalg import matvec
from .algebra import LieAlgebra, coordinates_solver
from .catalog import _lin, get_algebra
from .regular import StrataData, Stratum

# (label, matrix as (coef, i, j) triples, orbit_dim, family_dim)
_ADJOINT = {
    "sl2": (2, [("zero", (), 0, 0)]),
    "sl3": (3, [
        ("diag(1,1,-2)", ((1, 0, 0), (1, 1, 1), (-2, 2, 2)), 4, 1),
        ("nilpotent (2,1)", ((1, 0, 1),), 4, 0),
        ("zero", (), 0, 0),
    ]),
    "sp4": (4, [
        ("diag(1,0,-1,0)", ((1, 0, 0), (-1, 2, 2)), 6, 1),
        ("diag(1,1,-1,-1)", ((1, 0, 0), (1, 1, 1), (-1, 2, 2), (-1, 3, 3)), 6, 1),
        ("nilpotent (2,2)", ((1, 0, 2), (1, 1, 3)), 6, 0),
        ("nilpotent (2,1,1)", ((1, 0, 2),), 4, 0),
        ("zero", (), 0, 0),
    ]),
    "gl2": (2, [("scalar", ((1, 0, 0), (1, 1, 1)), 0, 1)]),
}


def has_strata(name: str) -> bool:
    base = name.partition("-ltimes-")[0]
    return base in _ADJOINT or base.startswith("abelian")


def adjoint_strata(g: LieAlgebra) -> StrataData:
    if g.name.startswith("abelian"):
        # every orbit is a point: nothing is non-regular
        return StrataData((), True, "exact", "abelian")
    if g.name not in _ADJOINT:
        raise KeyError(f"no strata data for {g.name}")
    size, rows = _ADJOINT[g.name]
    coords = coordinates_solver(g.realization)
    strata = []
    for label, terms, od, fam in rows:
        x = coords(_lin(size, *terms))
        strata.append(Stratum(label, tuple(x), od + fam, od))
    return StrataData(tuple(strata), True, "exact")


def coadjoint_strata(g: LieAlgebra) -> StrataData:
    if "-ltimes-" in g.name:
        q = get_algebra(g.name.partition("-ltimes-")[0])
        base = coadjoint_strata(q)
        n = q.dim
        lifted = tuple(
            Stratum(f"{s.label} x q*", (0,) * n + tuple(s.representative), s.stratum_dim + n)
            for s in base.strata
        )
        return StrataData(lifted, base.complete, "cover", "non-regular ideal component times q*")
    adj = adjoint_strata(g)
    form = g.invariant_form
    strata = tuple(
        Stratum(s.label, tuple(matvec(form, s.representative)), s.stratum_dim, s.orbit_dim)
        for s in adj.strata
    )
    return StrataData(strata, adj.complete, adj.kind, adj.note)
