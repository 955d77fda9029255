"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 3]

Each workload is fed identical inputs to both backends and the results are
compared before timing is reported.
"""
import argparse
import random
import time

from wonderlie.covariants import kernel_polymatrix
from wonderlie.lie import coadjoint, get_algebra
from wonderlie.polyalg import _pykernels
from wonderlie.polyalg.linalg import PRIME, _int_row
from wonderlie.polyalg.polymatrix import kernel_system
from wonderlie.polyalg.polynomial import Polynomial

try:
    from wonderlie.polyalg import _ckernels
except ImportError:
    _ckernels = None


def kernel_rows(name, degree):
    rows, _, _ = kernel_system(kernel_polymatrix("phi", coadjoint(get_algebra(name))), degree)
    ncols = max((k for r in rows for k in r), default=-1) + 1
    return [_int_row(r) for r in rows], ncols


def random_poly(rng, n, degree, terms):
    return Polynomial(n, {tuple(rng.randint(0, degree) for _ in range(n)): rng.randint(-9, 9) for _ in range(terms)})


def workloads(rng):
    rows, ncols = kernel_rows("sl3", 3)
    yield "echelon_rank sl3 kernel deg 3", "echelon_rank", (rows, ncols)
    rows, ncols = kernel_rows("sl2-ltimes-sl2", 3)
    yield "rref sl2xsl2 kernel deg 3", "rref", (rows, ncols)
    a, b = random_poly(rng, 6, 4, 60), random_poly(rng, 6, 4, 60)
    yield "mul_terms 60x60 terms", "mul_terms", (dict(a.as_dict()), dict(b.as_dict()))
    dense = [{k: rng.randrange(PRIME) for k in range(300) if rng.random() < 0.2} for _ in range(900)]
    yield "rank_mod_p 900x300", "rank_mod_p", (dense, 300, PRIME)


def best_of(fn, args, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t)
    return best, out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    if _ckernels is None:
        print("compiled kernels not built; run `pip install -e . --no-build-isolation`")
    rng = random.Random(args.seed)
    print(f"{'workload':34} {'python':>10} {'cython':>10} {'speedup':>8}")
    for label, name, wargs in workloads(rng):
        tp, rp = best_of(getattr(_pykernels, name), wargs, args.repeat)
        if _ckernels is None:
            print(f"{label:34} {tp:10.4f} {'-':>10} {'-':>8}")
            continue
        tc, rc = best_of(getattr(_ckernels, name), wargs, args.repeat)
        if rp != rc:
            raise SystemExit(f"{label}: backends disagree")
        print(f"{label:34} {tp:10.4f} {tc:10.4f} {tp / tc:7.1f}x")


if __name__ == "__main__":
    main()
