"""Index, generic stabilizers and the codimension of the non-regular locus."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Sequence

from ..polyalg.polymatrix import RankCertificate, generic_rank, random_point
from ..polyalg.polynomial import Polynomial
from .algebra import LieAlgebra
from .representation import Representation, coadjoint, orbit_dim


def generic_orbit_certificate(rep: Representation, *, seed: int = 0, hints: Sequence = ()) -> RankCertificate:
    """Certified generic rank of ``v -> (x -> rho(x) v)``, i.e. the maximal orbit dimension.

    Hints are polynomial maps ``K: V -> g`` with ``rho(K(v)) v = 0``.
    """
    return generic_rank(rep.action_polymatrix(), seed=seed, hints=hints)


def generic_stabilizer_dim(rep: Representation, *, seed: int = 0, hints: Sequence = ()) -> int:
    return rep.dim_g - generic_orbit_certificate(rep, seed=seed, hints=hints).rank


def default_hints(g: LieAlgebra) -> list[list[Polynomial]]:
    # gradients of known coadjoint invariants lie in the generic stabilizer
    from ..invariants import catalog_coadjoint_gradients

    return catalog_coadjoint_gradients(g)


def index(g: LieAlgebra, *, seed: int = 0, hints: Sequence | None = None) -> int:
    """``dim g`` minus the rank of ``P(xi)_ij = sum_k c_ijk xi_k`` over ``k(xi)``."""
    if hints is None:
        hints = default_hints(g)
    return generic_stabilizer_dim(coadjoint(g), seed=seed, hints=hints)


def index_certificate(g: LieAlgebra, *, seed: int = 0, hints: Sequence | None = None) -> RankCertificate:
    if hints is None:
        hints = default_hints(g)
    return generic_orbit_certificate(coadjoint(g), seed=seed, hints=hints)


# -- strata and codimension -------------------------------------------------
@dataclass(frozen=True)
class Stratum:
    """A piece of the non-regular locus swept by a family of orbits.

    ``stratum_dim`` is the dimension of the union (orbit dimension plus the
    dimension of the family of orbits). ``orbit_dim``, when given, is
    checked against an exact computation at ``representative``.
    """

    label: str
    representative: tuple
    stratum_dim: int
    orbit_dim: int | None = None


@dataclass(frozen=True)
class StrataData:
    """Strata covering ``V \\ V_reg``.

    ``kind == "exact"``: the strata are the non-regular locus, so the
    resulting codimension is exact. ``kind == "cover"``: the union only
    contains the non-regular locus, so it gives a lower bound.
    """

    strata: tuple[Stratum, ...]
    complete: bool = True
    kind: str = "exact"
    note: str = ""


@dataclass(frozen=True)
class CodimBound:
    """``value`` is None when the non-regular locus is empty (codimension infinite)."""

    value: int | None
    exact: bool
    status: str  # "exact" | "lower-bound" | "inconclusive"
    max_orbit_dim: int
    checked: tuple = field(default=(), repr=False)

    def at_least(self, n: int) -> bool:
        return self.value is None or self.value >= n

    def to_json(self) -> dict:
        return {"codim": "infinite" if self.value is None else self.value, "status": self.status,
                "max_orbit_dim": self.max_orbit_dim,
                "strata": [dict(s) for s in self.checked]}


class StrataError(ValueError):
    pass


def regular_locus_codim_bound(
    rep: Representation,
    strata: StrataData | None = None,
    *,
    mode: str = "exact",
    seed: int = 0,
    hints: Sequence = (),
    samples: int = 20,
) -> CodimBound:
    """Codimension of the set of points whose orbit is not of maximal dimension.

    In ``exact`` mode every stratum representative is checked to be
    non-regular with the claimed orbit dimension. ``monte-carlo`` mode can
    only confirm that random points are regular; it never certifies a bound
    beyond the trivial one.
    """
    cert = generic_orbit_certificate(rep, seed=seed, hints=hints)
    r = cert.rank
    n = rep.space_dim
    if mode == "monte-carlo":
        rng = random.Random(seed)
        hits = sum(orbit_dim(rep, random_point(rng, n)) == r for _ in range(samples))
        return CodimBound(1 if r > 0 else None, False, "inconclusive", r,
                          ({"label": "samples", "regular": hits, "total": samples},))
    if mode != "exact":
        raise ValueError(f"unknown mode {mode!r}")
    if strata is None or (not strata.strata and not strata.complete):
        raise StrataError("exact mode needs strata data for the non-regular locus")
    checked = []
    top = -1
    for s in strata.strata:
        if len(s.representative) != n:
            raise StrataError(f"stratum {s.label}: representative has the wrong length")
        od = orbit_dim(rep, s.representative)
        if od >= r:
            raise StrataError(f"stratum {s.label}: representative is regular (orbit dim {od})")
        if s.orbit_dim is not None and s.orbit_dim != od:
            raise StrataError(f"stratum {s.label}: claimed orbit dim {s.orbit_dim}, computed {od}")
        if s.stratum_dim < od:
            raise StrataError(f"stratum {s.label}: stratum dim {s.stratum_dim} below orbit dim {od}")
        checked.append({"label": s.label, "orbit_dim": od, "stratum_dim": s.stratum_dim})
        top = max(top, s.stratum_dim)
    if not strata.complete:
        # listed strata only bound the codimension from above
        return CodimBound(1 if r > 0 else None, False, "inconclusive", r, tuple(checked))
    value = None if top < 0 else n - top
    exact = strata.kind == "exact"
    return CodimBound(value, exact, "exact" if exact else "lower-bound", r, tuple(checked))
