"""Named check-suites composed from the library, producing deterministic reports."""
from __future__ import annotations

import json
import os
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import __version__
from .covariants import (
    PolyMap,
    adjoint_field,
    annihilates_invariants,
    apply_phi,
    certificate_is_valid,
    dixmier_decompose,
    euler_field,
    free_module_prediction,
    graded_kernel,
    kernel_module_rank,
)
from .fitting import (
    MomentData,
    Partition,
    fiber_dimension_check,
    graded_null_cone,
    image_closure_dim,
    inequality_case1,
    inequality_case2,
    kappa_vanishing_check,
    span_dim_at,
    strata_check,
    strata_check_direct,
)
from .invariants import (
    InvariantSet,
    algebraically_independent,
    bihomogeneous_covariant,
    catalog_invariants,
    check_three_wonderful,
    differentials_independent_at,
    generic_matrix,
    matrix_power_covariants,
    matrix_powers,
    pair_invariants,
    poly_trace,
)
from .lie import (
    LieAlgebra,
    Representation,
    Stratum,
    StrataData,
    SymmetricPair,
    adjoint,
    coadjoint,
    get_algebra,
    get_pair,
    index,
    load_algebra,
    load_orbit_data,
    pair_case,
    stabilizer,
)
from .lie.regular import generic_orbit_certificate
from .lie.strata_data import coadjoint_strata, has_strata
from .polyalg.linalg import rank
from .polyalg.polymatrix import random_point
from .polyalg.polynomial import monomials

SCHEMA_VERSION = "1"
SUITES = ("wonderful", "dixmier", "kernel", "fitting", "symmetric-pair", "moment")
VERDICTS = ("pass", "fail", "inconclusive")
# largest coefficient system (unknowns) the kernel suite will set up per degree
KERNEL_BUDGET = 40000


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class SuiteConfig:
    algebra: str
    suite: str
    max_degree: int = 4
    seed: int = 0
    orbit_data: str | None = None
    output: str | None = None

    def __post_init__(self):
        if self.suite not in SUITES:
            raise ConfigError(f"unknown suite {self.suite!r}; choose from {', '.join(SUITES)}")
        if not isinstance(self.max_degree, int) or self.max_degree < 1:
            raise ConfigError("max_degree must be an integer >= 1")
        if not isinstance(self.seed, int) or isinstance(self.seed, bool):
            raise ConfigError("seed must be an integer")
        if self.orbit_data is not None and not os.path.exists(self.orbit_data):
            raise ConfigError(f"orbit data file {self.orbit_data!r} does not exist")


@dataclass(frozen=True)
class CheckRecord:
    name: str
    verdict: str
    anchor: str
    payload: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.verdict not in VERDICTS:
            raise ValueError(f"bad verdict {self.verdict!r}")

    def to_json(self) -> dict:
        return {"name": self.name, "verdict": self.verdict, "anchor": self.anchor, "payload": self.payload}


@dataclass(frozen=True)
class CheckReport:
    suite: str
    algebra: str
    seed: int
    max_degree: int
    records: tuple[CheckRecord, ...]
    tool_version: str = __version__
    conventions: dict = field(default_factory=dict)

    @property
    def failed(self) -> bool:
        return any(r.verdict == "fail" for r in self.records)

    @property
    def has_inconclusive(self) -> bool:
        return any(r.verdict == "inconclusive" for r in self.records)

    @property
    def exit_code(self) -> int:
        return 1 if self.failed else 0

    def record(self, name: str) -> CheckRecord:
        for r in self.records:
            if r.name == name:
                return r
        raise KeyError(name)

    def to_json(self) -> dict:
        counts = {v: sum(r.verdict == v for r in self.records) for v in VERDICTS}
        return {"schema_version": SCHEMA_VERSION, "tool_version": self.tool_version,
                "suite": self.suite, "algebra": self.algebra, "seed": self.seed,
                "max_degree": self.max_degree, "records": [r.to_json() for r in self.records],
                "conventions": self.conventions,
                "summary": {**counts, "inconclusive_flag": self.has_inconclusive,
                            "overall": "fail" if self.failed else "pass"}}

    def dumps(self) -> str:
        return json.dumps(jsonable(self.to_json()), sort_keys=True, indent=2) + "\n"

    def text(self) -> str:
        lines = [f"suite {self.suite} on {self.algebra} (seed {self.seed}, max degree {self.max_degree})"]
        for r in self.records:
            lines.append(f"  {r.verdict.upper():<12} {r.name}  [{r.anchor}]")
        s = self.to_json()["summary"]
        lines.append(f"{s['pass']} pass, {s['fail']} fail, {s['inconclusive']} inconclusive: {s['overall']}")
        return "\n".join(lines) + "\n"


def rat(x) -> dict:
    f = Fraction(x)
    return {"num": str(f.numerator), "den": str(f.denominator)}


def jsonable(obj):
    """Normalize a payload: Fractions become ``{num, den}``, tuples become lists."""
    if isinstance(obj, Fraction):
        return rat(obj)
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if isinstance(obj, Partition):
        return list(obj.parts)
    return obj


# -- targets ------------------------------------------------------------------
@dataclass(frozen=True)
class Target:
    label: str
    algebra: LieAlgebra
    pair: SymmetricPair | None
    source: str  # "catalog" | "file"

    @property
    def rep(self) -> Representation:
        return self.pair.isotropy_representation() if self.pair is not None else coadjoint(self.algebra)


def resolve_target(name: str) -> Target:
    if name.endswith(".json") or os.path.sep in name:
        if not os.path.exists(name):
            raise ConfigError(f"algebra file {name!r} does not exist")
        g, pair = load_algebra(name)
        return Target(g.name, g, pair, "file")
    if name.endswith("-pair"):
        pair = get_pair(name)
        return Target(name, pair.ambient, pair, "catalog")
    return Target(name, get_algebra(name), None, "catalog")


def target_invariants(t: Target) -> InvariantSet | None:
    if t.pair is not None:
        if t.pair.rank_ce is None or t.algebra.realization is None:
            return None
        return pair_invariants(t.pair)
    try:
        invs = catalog_invariants(t.algebra.name)
    except (KeyError, AttributeError, ValueError):
        return None
    if invs.rep.algebra.constants() != t.algebra.constants():
        return None
    return invs


def kernel_generators(t: Target, invs: InvariantSet | None) -> list[PolyMap] | None:
    """Free generators of the kernel of ``v -> (x -> x.v)``, when known."""
    if t.pair is not None:
        if t.pair.blocks is None or t.algebra.realization is None:
            return None
        return matrix_power_covariants(t.pair)
    if invs is None:
        return None
    # gradients of coadjoint invariants are maps g* -> g
    return [PolyMap.of(g, t.rep.space_dim) for g in invs.gradients()]


def generator_degrees(t: Target, invs: InvariantSet | None) -> list[int] | None:
    if t.pair is not None:
        Fs = kernel_generators(t, invs)
        return None if Fs is None else [F.degree for F in Fs]
    if invs is None:
        return None
    return [d - 1 for d in invs.degrees]


def _verdict(ok: bool | None) -> str:
    return "inconclusive" if ok is None else ("pass" if ok else "fail")


# -- suites -----------------------------------------------------------------
def suite_dixmier(t: Target, cfg: SuiteConfig) -> list[CheckRecord]:
    rep = t.rep
    invs = target_invariants(t)
    rng = random.Random(cfg.seed)
    top = min(3, cfg.max_degree)
    statuses, degrees, annihilated = [], [], []
    for k in range(20):
        d = k % (top + 1)
        F = PolyMap.random(rng, rep.space_dim, rep.dim_g, d)
        X = apply_phi(rep, F)
        res = dixmier_decompose(rep, X, max_degree=cfg.max_degree)
        ok = res.status == "found" and apply_phi(rep, res.witness) == X
        statuses.append(res.status if ok or res.status != "found" else "mismatch")
        degrees.append(d)
        if invs is not None:
            annihilated.append(annihilates_invariants(X, invs.generators))
    out = [CheckRecord("dixmier-roundtrip", _verdict(all(s == "found" for s in statuses)),
                       "fields x -> F(x).x are exactly recovered from their image",
                       {"samples": len(statuses), "degrees": degrees, "statuses": statuses})]
    out.append(CheckRecord(
        "forward-annihilation", _verdict(all(annihilated) if invs is not None else None),
        "every field x -> F(x).x kills the basic invariants",
        {"samples": len(annihilated), "invariant_degrees": list(invs.degrees) if invs else None}))
    # linear fields from the algebra itself
    fields_ok = []
    for i in range(rep.dim_g):
        X = adjoint_field(rep, [1 if j == i else 0 for j in range(rep.dim_g)])
        res = dixmier_decompose(rep, X, max_degree=cfg.max_degree)
        fields_ok.append(res.status == "found")
    out.append(CheckRecord("adjoint-fields", _verdict(all(fields_ok)),
                           "basis vector fields lie in the image of degree 0 maps",
                           {"count": len(fields_ok)}))
    E = euler_field(rep.space_dim)
    res = dixmier_decompose(rep, E, max_degree=cfg.max_degree)
    kills = annihilates_invariants(E, invs.generators) if invs is not None else None
    payload = {"status": res.status, "annihilates_invariants": kills,
               "certificate": [c.to_json() for c in res.certificate]}
    if invs is None or not any(d > 0 for d in invs.degrees):
        verdict = "inconclusive"
    else:
        valid = res.status == "infeasible" and all(certificate_is_valid(rep, E, c) for c in res.certificate)
        payload["certificate_valid"] = valid
        verdict = _verdict(valid and kills is False)
    out.append(CheckRecord("euler-field-certificate", verdict,
                           "a field not killing invariants has an exact infeasibility certificate", payload))
    return out


def suite_kernel(t: Target, cfg: SuiteConfig) -> list[CheckRecord]:
    rep = t.rep
    invs = target_invariants(t)
    Fs = kernel_generators(t, invs)
    gdeg = generator_degrees(t, invs)
    n = rep.space_dim
    rows, skipped = [], []
    for d in range(1, cfg.max_degree + 1):
        if rep.dim_g * len(monomials(n, d)) > KERNEL_BUDGET:
            skipped.append(d)
            continue
        dim = len(graded_kernel("phi", rep, d))
        pred = free_module_prediction(n, gdeg, d) if gdeg is not None else None
        rows.append({"degree": d, "dim": dim, "predicted": pred})
    ok = None if gdeg is None or not rows else all(r["dim"] == r["predicted"] for r in rows)
    out = [CheckRecord("kernel-graded-dims", _verdict(ok),
                       "graded kernel dimensions match a free module on the known generators",
                       {"num_vars": n, "generator_degrees": gdeg, "degrees": rows, "skipped_degrees": skipped})]
    if Fs is None:
        out.append(CheckRecord("kernel-rank", "inconclusive", "generic kernel rank equals the generator count",
                               {"reason": "no kernel generators known"}))
        return out
    m = kernel_module_rank(rep, seed=cfg.seed, hints=Fs)
    out.append(CheckRecord("kernel-rank", _verdict(m == len(Fs)),
                           "generic kernel rank equals the generator count", {"rank": m, "generators": len(Fs)}))
    in_kernel = all(apply_phi(rep, F).is_zero() for F in Fs)
    rng = random.Random(cfg.seed)
    comm = stab = True
    for _ in range(3):
        v = random_point(rng, n)
        vals = [F.evaluate(v) for F in Fs]
        stab = stab and all(not any(rep.act(x, v)) for x in vals)
        comm = comm and all(not any(rep.algebra.bracket(a, b)) for i, a in enumerate(vals) for b in vals[i + 1:])
    out.append(CheckRecord("generators-stabilize", _verdict(in_kernel and stab),
                           "generator values lie in the stabilizer of the point",
                           {"symbolic": in_kernel, "at_random_points": stab}))
    out.append(CheckRecord("generic-stabilizer-commutative", _verdict(comm),
                           "generator values commute at generic points", {"points": 3}))
    return out


def _strata_report(t: Target, cfg: SuiteConfig, invs, Fs):
    if t.pair is not None:
        if cfg.orbit_data:
            orbits = load_orbit_data(cfg.orbit_data)
        else:
            orbits = graded_null_cone(t.pair)
        return strata_check(Fs, orbits, len(Fs), rep=t.rep, invariants=invs.generators if invs else ())
    return strata_check_direct(Fs, d=2, seed=cfg.seed)


def _orbit_partition(t: Target, label: str):
    for o in graded_null_cone(t.pair):
        if o.label == label:
            return o.partition
    return None


def suite_fitting(t: Target, cfg: SuiteConfig) -> list[CheckRecord]:
    invs = target_invariants(t)
    Fs = kernel_generators(t, invs)
    if Fs is None:
        return [CheckRecord("fitting-strata", "inconclusive", "rank-drop strata of the kernel generators",
                            {"reason": "no kernel generators known"})]
    report = _strata_report(t, cfg, invs, Fs)
    payload = report.to_json()
    payload["strata_dims"] = [s.dim_upper if s.exact else None for s in report.strata]
    if t.pair is not None and not cfg.orbit_data and t.pair.blocks is not None:
        payload["failing_partitions"] = sorted({_orbit_partition(t, lab).label() for lab in report.failing})
    name = "orbit-inequalities" if report.route == "null-cone" else "fitting-strata"
    anchor = ("codim of each rank-drop stratum of the null cone exceeds its index"
              if report.route == "null-cone" else "dim X_i <= dim V - i - 2 for the rank-drop strata")
    out = [CheckRecord(name, report.overall, anchor, payload)]
    f2 = report.f_d_verdict
    out.append(CheckRecord("fitting-F2", "pass" if f2 == "pass" else "inconclusive",
                           "Fitting condition with d = 2 on the kernel module",
                           {"verdict": f2, "route": report.route}))
    if t.pair is not None and t.pair.blocks is not None and not cfg.orbit_data:
        out.append(_partition_crosscheck(t, report))
    return out


def _partition_crosscheck(t: Target, report) -> CheckRecord:
    """Failing orbits must be exactly those whose partition violates the closed-form inequality."""
    kind, _ = pair_case(t.pair)
    N = sum(t.pair.blocks)
    fn = inequality_case1 if kind == "even" else inequality_case2
    negative = []
    values = {}
    seen = set()
    for o in graded_null_cone(t.pair):
        p = o.partition
        if p.is_regular() or p.label() in seen:
            continue
        seen.add(p.label())
        lhs, ok = fn(p)
        values[p.label()] = rat(lhs)
        if not ok:
            negative.append(p.label())
    failing = sorted({_orbit_partition(t, lab).label() for lab in report.failing})
    return CheckRecord("partition-inequality", _verdict(sorted(negative) == failing),
                       "closed-form partition inequality agrees with the orbit computation",
                       {"N": N, "case": kind, "lhs": values, "negative": sorted(negative),
                        "failing_orbit_partitions": failing})


def suite_moment(t: Target, cfg: SuiteConfig) -> list[CheckRecord]:
    rep = t.rep
    invs = target_invariants(t)
    Fs = kernel_generators(t, invs)
    if Fs is None:
        return [CheckRecord("kappa-vanishing", "inconclusive", "generators vanish on the moment-map graph",
                            {"reason": "no kernel generators known"})]
    data = MomentData(rep, tuple(Fs))
    kv = kappa_vanishing_check(data)
    out = [CheckRecord("kappa-vanishing", kv["verdict"], "generators vanish on the moment-map graph", kv)]
    icd = image_closure_dim(rep, seed=cfg.seed, hints=Fs)
    out.append(CheckRecord("image-closure-dim", icd["verdict"],
                           "image closure has dimension dim V + dim g - m", icd))
    fib = fiber_dimension_check(data, _strata_report(t, cfg, invs, Fs))
    out.append(CheckRecord("fiber-dimension", fib["verdict"],
                           "fibres over the rank-drop strata stay below the generic dimension", fib))
    return out


def suite_wonderful(t: Target, cfg: SuiteConfig) -> list[CheckRecord]:
    if t.pair is not None:
        raise ConfigError("the wonderful suite runs on a Lie algebra, not a symmetric pair")
    g = t.algebra
    invs = target_invariants(t)
    if invs is None:
        return [CheckRecord("three-wonderful", "inconclusive", "codim-3 regular locus with free invariants",
                            {"reason": "no basic invariants known"})]
    strata = None
    if cfg.orbit_data:
        recs = load_orbit_data(cfg.orbit_data)
        strata = StrataData(tuple(Stratum(r.label, r.representative, r.stratum_dim, r.orbit_dim)
                                  for r in recs if r.representative is not None and r.stratum_dim is not None),
                            True, "exact", "supplied by the caller")
    elif t.source == "catalog" and has_strata(g.name):
        strata = coadjoint_strata(g)
    rep = check_three_wonderful(g, invs, strata, seed=cfg.seed)
    out = [
        CheckRecord("codim-3", rep.codim_verdict, "non-regular locus of g* has codimension >= 3",
                    {"codim": rep.codim.to_json() if rep.codim else None,
                     "strata_kind": strata.kind if strata else None}),
        CheckRecord("invariant-count", _verdict(rep.poly_count_ok),
                    "ind g algebraically independent basic invariants", {"index": rep.index, "count": len(invs)}),
        CheckRecord("degree-sum", _verdict(rep.degree_sum_ok), "sum of degrees is (dim g + ind g)/2",
                    {"degrees": list(rep.degrees), "dim": g.dim, "index": rep.index}),
        CheckRecord("three-wonderful", {"asserted": "pass", "refuted": "fail"}.get(rep.overall, "inconclusive"),
                    "codim-3 regular locus with free invariants", {"overall": rep.overall}),
    ]
    rng = random.Random(cfg.seed)
    cert = generic_orbit_certificate(coadjoint(g), seed=cfg.seed, hints=invs.gradients())
    indep = []
    while len(indep) < 5:
        xi = random_point(rng, g.dim)
        if stabilizer(coadjoint(g), xi).orbit_dim == cert.rank:
            indep.append(differentials_independent_at(invs, xi))
    out.append(CheckRecord("differentials-independent", _verdict(all(indep)),
                           "invariant differentials are independent at regular points", {"points": len(indep)}))
    if "-ltimes-" in g.name:
        q = get_algebra(g.name.partition("-ltimes-")[0])
        iq = index(q, seed=cfg.seed)
        out.append(CheckRecord("index-doubling", _verdict(rep.index == 2 * iq), "ind(q x q) = 2 ind(q)",
                               {"index_q": iq, "index_double": rep.index}))
    return out


def suite_symmetric_pair(t: Target, cfg: SuiteConfig) -> list[CheckRecord]:
    pair = t.pair
    if pair is None:
        raise ConfigError("the symmetric-pair suite needs a graded algebra (e.g. sl4-pair)")
    g = t.algebra
    iso = pair.isotropy_representation()
    ad = adjoint(g)
    out = [CheckRecord("grading-compatible", _verdict(pair.is_compatible()), "[g_i, g_j] lies in g_{i+j}",
                       {"violations": pair.grading_violations()[:5]})]
    n0, n1 = len(pair.g0_indices), len(pair.g1_indices)
    rng = random.Random(cfg.seed)
    points = [("random", random_point(rng, n1)) for _ in range(2)]
    if pair.blocks is not None and g.realization is not None:
        points += [(o.label, list(o.representative)) for o in graded_null_cone(pair)]
    rows = []
    for label, v in points:
        c0 = stabilizer(iso, v).dim
        c = stabilizer(ad, pair.embed_g1(v)).dim
        rows.append({"point": label, "g0_v": c0, "g1_v": c - c0, "ok": n0 - n1 == c0 - (c - c0)})
    # the identity needs g1 self-dual as a g0-module: a nondegenerate invariant form
    form = g.invariant_form if g.invariant_form is not None else g.killing_form()
    nondegenerate = rank(form) == g.dim
    ok = all(r["ok"] for r in rows)
    verdict = _verdict(ok) if nondegenerate or ok else "inconclusive"
    payload = {"points": rows, "nondegenerate_form": nondegenerate}
    if verdict == "inconclusive":
        payload["reason"] = "no nondegenerate invariant form, identity not expected"
    out.append(CheckRecord("centralizer-balance", verdict, "dim g0 - dim g1 = dim g0_v - dim g1_v", payload))
    invs = target_invariants(t)
    Fs = kernel_generators(t, invs)
    if invs is None or Fs is None:
        out.append(CheckRecord("rank", "inconclusive", "generic orbit codimension equals the rank",
                               {"reason": "pair data incomplete"}))
        return out
    cert = generic_orbit_certificate(iso, seed=cfg.seed, hints=[F.components for F in Fs])
    out.append(CheckRecord("rank", _verdict(n1 - cert.rank == pair.rank_ce),
                           "generic orbit codimension equals the rank",
                           {"generic_orbit_dim": cert.rank, "rank": pair.rank_ce}))
    out.append(CheckRecord("invariants-free", _verdict(len(invs) == pair.rank_ce and algebraically_independent(invs)),
                           "rank-many independent invariants on g1", {"degrees": list(invs.degrees)}))
    if pair.blocks is not None:
        N = sum(pair.blocks)
        regular = any(o.partition.parts == (N,) for o in graded_null_cone(pair))
        out.append(CheckRecord("nilpotent-regular", _verdict(regular), "g1 meets the regular nilpotent orbit", {"N": N}))
    # odd trace powers give the same covariants as even matrix powers
    big = matrix_powers(generic_matrix(g), 2 * len(Fs) + 1)
    ratios = []
    for i, F in enumerate(Fs, start=1):
        B = bihomogeneous_covariant(poly_trace(big[2 * i]), pair)
        ratios.append(_proportional(B, F))
    out.append(CheckRecord("odd-trace-covariants", _verdict(all(r not in (None, 0) for r in ratios)),
                           "linear-in-g0 part of tr(x^(2i+1)) is a multiple of v^(2i) projected",
                           {"ratios": [rat(r) if r is not None else None for r in ratios]}))
    spans = [span_dim_at(Fs, random_point(rng, n1)) for _ in range(2)]
    out.append(CheckRecord("generic-span", _verdict(max(spans) == len(Fs)),
                           "generators are independent at a generic point", {"spans": spans, "m": len(Fs)}))
    return out


def _proportional(A: PolyMap, B: PolyMap):
    """``c`` with ``A = c B``, or None."""
    ratio = None
    for a, b in zip(A.components, B.components):
        da, db = a.as_dict(), b.as_dict()
        if set(da) != set(db):
            return None
        for e, c in da.items():
            r = Fraction(c) / Fraction(db[e])
            if ratio is None:
                ratio = r
            elif r != ratio:
                return None
    return ratio


_RUNNERS: dict[str, Callable[[Target, SuiteConfig], list[CheckRecord]]] = {
    "dixmier": suite_dixmier,
    "kernel": suite_kernel,
    "fitting": suite_fitting,
    "moment": suite_moment,
    "wonderful": suite_wonderful,
    "symmetric-pair": suite_symmetric_pair,
}


def conventions(t: Target) -> dict:
    """Basis and identification choices the verdicts depend on."""
    g = t.algebra
    return jsonable({
        "basis": list(g.basis_names),
        "structure_constants": "standard matrix realization" if g.realization is not None else t.source,
        "dual_identification": "trace form tr(XY)" if g.invariant_form is not None else None,
        "invariant_form": [list(row) for row in g.invariant_form] if g.invariant_form is not None else None,
        "fixed_space": "V^x read as the annihilator {v : x.v = 0}",
        "monomial_order": "grlex",
    })


def run_suite(cfg: SuiteConfig) -> CheckReport:
    t = resolve_target(cfg.algebra)
    records = _RUNNERS[cfg.suite](t, cfg)
    records = sorted(records, key=lambda r: r.name)
    records = tuple(CheckRecord(r.name, r.verdict, r.anchor, jsonable(r.payload)) for r in records)
    return CheckReport(cfg.suite, t.label, cfg.seed, cfg.max_degree, records, conventions=conventions(t))


__all__ = [
    "SCHEMA_VERSION",
    "SUITES",
    "CheckRecord",
    "CheckReport",
    "ConfigError",
    "SuiteConfig",
    "Target",
    "jsonable",
    "resolve_target",
    "run_suite",
]
