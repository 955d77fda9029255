"""Rank-drop strata of a family of covariants and the Fitting-type conditions.

For maps ``F_1..F_m: V -> g`` put
``X_i = {v : dim span(F_1(v), .., F_m(v)) <= m - i}``. Condition ``(F_d)``
asks ``dim X_i <= dim V - i - d`` for all ``i >= 1``.

Two routes are implemented:

* null-cone route: from finitely many orbits in the null cone, check the
  per-orbit inequalities ``span + dim g_v = 2m`` (regular orbits) and
  ``span + dim g_v >= 2m + 1`` (the rest); equivalently
  ``codim_N X_i(N) >= i + 1``. This implies ``(F_2)``.
* direct route: bound ``dim X_i`` from both sides. Below by linear
  subspaces on which some ``F_j`` vanish (linear ``F`` only); above by
  showing a random linear subspace of codimension ``k`` meets ``X_i`` only
  at the origin, via a full Macaulay matrix of the restricted minors.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Sequence

from ..covariants import PolyMap
from ..lie.representation import Representation, stabilizer
from ..polyalg.linalg import nullspace, rank, rank_mod_p, rank_sparse
from ..polyalg.polynomial import Polynomial, monomials


class OrbitDataError(ValueError):
    pass


@dataclass(frozen=True)
class StratumVerdict:
    i: int
    label: str
    dim_lower: int
    dim_upper: int
    bound: int  # required: dim X_i <= bound
    verdict: str

    @property
    def exact(self) -> bool:
        return self.dim_lower == self.dim_upper

    @property
    def empty(self) -> bool:
        return self.dim_upper < 0

    def to_json(self) -> dict:
        return {"i": self.i, "label": self.label, "dim": self.dim_upper if self.exact else None,
                "dim_lower": self.dim_lower, "dim_upper": self.dim_upper,
                "exact": self.exact, "empty": self.empty, "required_max": self.bound, "verdict": self.verdict}


@dataclass(frozen=True)
class StrataReport:
    route: str
    m: int
    d: int
    ambient_dim: int  # dim V (direct route) or dim N (null-cone route)
    strata: tuple[StratumVerdict, ...]
    orbits: tuple[dict, ...] = ()
    overall: str = "inconclusive"
    f_d_verdict: str = "inconclusive"
    failing: tuple[str, ...] = ()
    notes: tuple[str, ...] = field(default=())

    def to_json(self) -> dict:
        return {"route": self.route, "m": self.m, "d": self.d, "ambient_dim": self.ambient_dim,
                "strata": [s.to_json() for s in self.strata], "orbits": [dict(o) for o in self.orbits],
                "overall": self.overall, "f_d_verdict": self.f_d_verdict,
                "failing": list(self.failing), "notes": list(self.notes)}


def span_dim_at(Fs: Sequence[PolyMap], v: Sequence) -> int:
    if not Fs:
        return 0
    return rank([F.evaluate(v) for F in Fs], Fs[0].target_dim)


def _field(rec, name):
    return getattr(rec, name, None) if not isinstance(rec, dict) else rec.get(name)


# -- null-cone route -----------------------------------------------------------
def strata_check(Fs: Sequence[PolyMap], nullcone_orbits: Sequence, m: int, *,
                 rep: Representation | None = None, invariants: Sequence[Polynomial] = (),
                 d: int = 2) -> StrataReport:
    """Check the orbit form of ``codim_N X_i(N) >= i + 1`` over a finite orbit list.

    Every record needs ``label`` and ``representative``; ``centralizer_dim``
    (``dim g_v``) is required unless ``rep`` is given, in which case it is
    recomputed, and a claimed value must match. With ``invariants`` given,
    each representative must be a common zero (lie in the null cone).
    """
    if len(Fs) != m:
        raise OrbitDataError(f"{len(Fs)} covariants supplied for m = {m}")
    if not nullcone_orbits:
        raise OrbitDataError("no null-cone orbits supplied")
    rows = []
    for rec in nullcone_orbits:
        label = _field(rec, "label")
        v = _field(rec, "representative")
        if label is None or v is None:
            raise OrbitDataError(f"orbit record {label!r} needs a label and a representative")
        cz = _field(rec, "centralizer_dim")
        od = _field(rec, "orbit_dim")
        if rep is not None:
            st = stabilizer(rep, v)
            if cz is not None and cz != st.dim:
                raise OrbitDataError(f"orbit {label}: claimed centralizer dim {cz}, computed {st.dim}")
            if od is not None and od != st.orbit_dim:
                raise OrbitDataError(f"orbit {label}: claimed orbit dim {od}, computed {st.orbit_dim}")
            cz, od = st.dim, st.orbit_dim
        if cz is None or od is None:
            raise OrbitDataError(f"orbit {label}: centralizer_dim and orbit_dim are required without a representation")
        for f in invariants:
            if f.evaluate(v) != 0:
                raise OrbitDataError(f"orbit {label}: representative is not in the null cone")
        rows.append({"label": label, "orbit_dim": od, "centralizer_dim": cz, "span_dim": span_dim_at(Fs, v)})
    dim_n = max(r["orbit_dim"] for r in rows)
    failing = []
    for r in rows:
        regular = r["orbit_dim"] == dim_n
        total = r["span_dim"] + r["centralizer_dim"]
        if regular:
            r["condition"] = "regular: span + dim g_v = 2m"
            ok = total == 2 * m
        else:
            r["condition"] = "non-regular: span + dim g_v >= 2m + 1"
            ok = total >= 2 * m + 1
        r["margin"] = total - (2 * m if regular else 2 * m + 1)
        r["verdict"] = "pass" if ok else "fail"
        if not ok:
            failing.append(r["label"])
    strata = []
    for i in range(1, m + 1):
        members = [r["orbit_dim"] for r in rows if r["span_dim"] <= m - i]
        top = max(members) if members else -1
        bound = dim_n - i - 1
        verdict = "pass" if top <= bound else "fail"
        strata.append(StratumVerdict(i, f"X_{i}(N)", top, top, bound, verdict))
    club = all(s.verdict == "pass" for s in strata)
    per_orbit = not failing
    notes = []
    if club != per_orbit:  # pragma: no cover - the two forms are equivalent for finitely many orbits
        notes.append("orbit-wise and stratum-wise forms disagree")
    overall = "pass" if club and per_orbit else "fail"
    rows.sort(key=lambda r: r["label"])
    return StrataReport("null-cone", m, d, dim_n, tuple(strata), tuple(rows), overall,
                        "pass" if overall == "pass" else "not-established", tuple(sorted(failing)), tuple(notes))


# -- direct route ----------------------------------------------------------------
def _minors(mat: list[list[Polynomial]], size: int, num_vars: int) -> list[Polynomial]:
    """All ``size x size`` minors of a (rows x cols) polynomial matrix."""
    nr, nc = len(mat), len(mat[0])
    out = []
    for rs in combinations(range(nr), size):
        for cs in combinations(range(nc), size):
            sub = [[mat[r][c] for c in cs] for r in rs]
            det = _det(sub, num_vars)
            if not det.is_zero():
                out.append(det)
    return out


def _det(a: list[list[Polynomial]], nv: int) -> Polynomial:
    n = len(a)
    if n == 1:
        return a[0][0]
    total = Polynomial.zero(nv)
    for j in range(n):
        if a[0][j]:
            minor = [row[:j] + row[j + 1:] for row in a[1:]]
            term = a[0][j] * _det(minor, nv)
            total = total + term if j % 2 == 0 else total - term
    return total


def macaulay_size(num_vars: int, delta: int) -> int:
    """Column count of the Macaulay matrix used by :func:`only_origin`."""
    return comb(num_vars * delta, num_vars - 1) if num_vars else 1


def only_origin(polys: Sequence[Polynomial]) -> bool:
    """Sufficient test that homogeneous ``polys`` have no common zero but 0.

    Checks that the ideal contains every monomial of degree
    ``N (delta - 1) + 1``; if it does, any common zero is 0.
    """
    polys = [p for p in polys if not p.is_zero()]
    if not polys:
        return False
    nv = polys[0].num_vars
    if nv == 0:
        return True
    delta = max(p.degree for p in polys)
    D = nv * (delta - 1) + 1
    cols = {m: i for i, m in enumerate(monomials(nv, D))}
    rows = []
    for p in polys:
        for mult in monomials(nv, D - p.degree):
            rows.append({cols[tuple(a + b for a, b in zip(e, mult))]: c for e, c in p.as_dict().items()})
    # full rank mod p already forces full rank over Q
    if rank_mod_p(rows, len(cols)) == len(cols):
        return True
    if len(cols) <= 200:
        return rank_sparse(rows, len(cols)) == len(cols)
    return False


def _linear_matrix(F: PolyMap) -> list[list]:
    return [[p.coefficient(tuple(1 if t == j else 0 for t in range(F.source_dim))) for j in range(F.source_dim)]
            for p in F.components]


def stratum_dimension_bounds(Fs: Sequence[PolyMap], i: int, *, seed: int = 0, tries: int = 2,
                             budget: int = 2000, target_dim: int | None = None) -> tuple[int, int]:
    """Exact-arithmetic lower and upper bounds for ``dim X_i``.

    The slice test starts at ``target_dim`` (the bound being checked, when
    given), moves down while it keeps succeeding and up when it fails.
    Slices whose Macaulay matrix would exceed ``budget`` columns are not
    tried, so the upper bound can be loose for nonlinear generators.
    """
    m = len(Fs)
    n = Fs[0].source_dim
    target = Fs[0].target_dim
    size = m - i + 1
    lower = 0
    if all(F.degree in (1, -1) for F in Fs):
        mats = [_linear_matrix(F) for F in Fs]
        for k in range(i, m + 1):
            for S in combinations(range(m), k):
                rows = [row for j in S for row in mats[j]]
                lower = max(lower, len(nullspace(rows, n)))
    cols = [[F.components[r] for F in Fs] for r in range(target)]
    minors = _minors(cols, size, n) if size <= min(m, target) else []
    if not minors:
        return lower, n
    if any(p.degree == 0 for p in minors):
        return -1, -1  # a nonzero constant minor: the stratum is empty
    rng = random.Random(seed * 1009 + i)
    delta = max(p.degree for p in minors)

    def meets_only_origin(k: int) -> bool:
        if macaulay_size(n - k, delta) > budget:
            return False
        for _ in range(tries):
            A = [[rng.randint(-3, 3) for _ in range(n - k)] for _ in range(n)]
            if only_origin([p.compose_linear(A) for p in minors]):
                return True
        return False

    start = min(max(lower, target_dim if target_dim is not None else lower), n - 1)
    if start < 0:
        return lower, n
    if meets_only_origin(start):
        upper = start
        while upper > lower and meets_only_origin(upper - 1):
            upper -= 1
        return lower, upper
    for k in range(start + 1, n):
        if meets_only_origin(k):
            return lower, k
    return lower, n


def strata_check_direct(Fs: Sequence[PolyMap], *, d: int = 2, seed: int = 0) -> StrataReport:
    """Decide ``dim X_i <= dim V - i - d`` for every ``i >= 1`` from dimension bounds."""
    if not Fs:
        return StrataReport("direct", 0, d, 0, (), overall="pass", f_d_verdict="pass",
                            notes=("no covariants: the condition is vacuous",))
    m = len(Fs)
    n = Fs[0].source_dim
    strata = []
    failing = []
    for i in range(1, m + 1):
        bound = n - i - d
        lo, hi = stratum_dimension_bounds(Fs, i, seed=seed, target_dim=bound)
        if hi <= bound or hi < 0:
            verdict = "pass"
        elif lo > bound:
            verdict = "fail"
            failing.append(f"X_{i}")
        else:
            verdict = "inconclusive"
        strata.append(StratumVerdict(i, f"X_{i}", lo, hi, bound, verdict))
    verdicts = {s.verdict for s in strata}
    overall = "fail" if "fail" in verdicts else ("inconclusive" if "inconclusive" in verdicts else "pass")
    return StrataReport("direct", m, d, n, tuple(strata), (), overall, overall, tuple(failing))
