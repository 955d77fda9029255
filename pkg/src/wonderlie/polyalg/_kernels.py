"""Select the compiled kernels when available, else the pure-Python ones.

Set ``WONDERLIE_PURE_PYTHON=1`` to force the fallback (used by the
benchmark and by the kernel-equivalence tests).
"""
import os

BACKEND = "python"

if os.environ.get("WONDERLIE_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from ._ckernels import echelon_rank, mul_terms, rank_mod_p, rref  # noqa: F401

        BACKEND = "cython"
    except ImportError:  # extension not built
        pass

if BACKEND == "python":
    from ._pykernels import echelon_rank, mul_terms, rank_mod_p, rref  # noqa: F401
