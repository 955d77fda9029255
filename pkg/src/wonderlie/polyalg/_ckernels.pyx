# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the hot loops in ``_pykernels``.

Values stay Python integers / Fractions (exactness first); the gain comes
from typed loop indices and avoiding interpreter dispatch in the inner loops.
"""
from math import gcd

from libc.stdlib cimport calloc, free, malloc
from libc.string cimport memset


def mul_terms(dict a, dict b):
    cdef dict out = {}
    cdef tuple ea, eb
    cdef Py_ssize_t i, n
    cdef list buf
    for ea, ca in a.items():
        n = len(ea)
        for eb, cb in b.items():
            buf = [0] * n
            for i in range(n):
                buf[i] = <object>ea[i] + <object>eb[i]
            e = tuple(buf)
            v = out.get(e)
            if v is None:
                out[e] = ca * cb
            else:
                out[e] = v + ca * cb
    return {e: c for e, c in out.items() if c}


cdef dict _normalize(dict row):
    g = gcd(*row.values())
    if g != 1:
        for k in row:
            row[k] //= g
    return row


cdef dict _combine(dict target, dict pivot, object col):
    a = target[col]
    b = pivot[col]
    g = gcd(a, b)
    fa = b // g
    fb = a // g
    if fa < 0:
        fa = -fa
        fb = -fb
    cdef dict out
    if fa == 1:
        out = dict(target)
    else:
        out = {}
        for k, v in target.items():
            out[k] = fa * v
    for k, v in pivot.items():
        nv = out.get(k, 0) - fb * v
        if nv:
            out[k] = nv
        else:
            out.pop(k, None)
    if out:
        _normalize(out)
    return out


cdef list _forward(list rows_in, Py_ssize_t ncols):
    cdef list rows = [_normalize(dict(r)) for r in rows_in if r]
    cdef dict col_rows = {}
    cdef Py_ssize_t idx, c, i, p, best_len
    cdef dict r, prow, old, new
    cdef set alive
    cdef list pivots = []
    cdef list cand
    for idx in range(len(rows)):
        r = rows[idx]
        for k in r:
            s = col_rows.get(k)
            if s is None:
                col_rows[k] = {idx}
            else:
                s.add(idx)
    alive = set(range(len(rows)))
    for c in range(ncols):
        s = col_rows.get(c)
        if not s:
            continue
        cand = [i for i in s if i in alive]
        if not cand:
            continue
        p = -1
        best_len = 0
        for i in cand:
            if p < 0 or len(<dict>rows[i]) < best_len or (len(<dict>rows[i]) == best_len and i < p):
                p = i
                best_len = len(<dict>rows[i])
        alive.discard(p)
        prow = rows[p]
        for i in cand:
            if i == p:
                continue
            old = rows[i]
            new = _combine(old, prow, c)
            for k in old:
                if k not in new:
                    (<set>col_rows[k]).discard(i)
            for k in new:
                if k not in old:
                    s2 = col_rows.get(k)
                    if s2 is None:
                        col_rows[k] = {i}
                    else:
                        s2.add(i)
            rows[i] = new
            if not new:
                alive.discard(i)
        pivots.append((c, prow))
    return pivots


def echelon_rank(list rows, Py_ssize_t ncols):
    return len(_forward(rows, ncols))


def rref(list rows, Py_ssize_t ncols):
    cdef list pivots = _forward(rows, ncols)
    cdef dict index = {}
    cdef Py_ssize_t j, i
    cdef dict prow, old, new, row
    for j in range(len(pivots)):
        row = pivots[j][1]
        for k in row:
            s = index.get(k)
            if s is None:
                index[k] = {j}
            else:
                s.add(j)
    for j in range(len(pivots) - 1, -1, -1):
        c, prow = pivots[j]
        for i in sorted(index.get(c, ())):
            if i >= j:
                continue
            old = pivots[i][1]
            new = _combine(old, prow, c)
            for k in old:
                if k not in new:
                    (<set>index[k]).discard(i)
            for k in new:
                if k not in old:
                    s2 = index.get(k)
                    if s2 is None:
                        index[k] = {i}
                    else:
                        s2.add(i)
            pivots[i] = (pivots[i][0], new)
    out = []
    for c, row in pivots:
        if row[c] < 0:
            row = {k: -v for k, v in row.items()}
        out.append((c, row))
    return out


def rank_mod_p(list rows, Py_ssize_t ncols, long long p):
    """Rank over GF(p), ``p < 2**31``; pivot rows are kept dense in C arrays."""
    cdef long long *piv = <long long *>calloc(ncols * ncols if ncols else 1, sizeof(long long))
    cdef char *has = <char *>calloc(ncols if ncols else 1, sizeof(char))
    cdef long long *buf = <long long *>malloc((ncols if ncols else 1) * sizeof(long long))
    cdef Py_ssize_t c, k, found = 0
    cdef long long x, inv, y
    cdef dict row
    if piv == NULL or has == NULL or buf == NULL:
        free(piv); free(has); free(buf)
        raise MemoryError()
    try:
        for row in rows:
            memset(buf, 0, ncols * sizeof(long long))
            for key, val in row.items():
                buf[<Py_ssize_t>key] = <long long>(val % p)
            for c in range(ncols):
                x = buf[c]
                if x == 0:
                    continue
                if has[c]:
                    for k in range(c, ncols):
                        y = piv[c * ncols + k]
                        if y:
                            buf[k] = (buf[k] - x * y) % p
                            if buf[k] < 0:
                                buf[k] += p
                else:
                    inv = pow(x, p - 2, p)
                    for k in range(c, ncols):
                        piv[c * ncols + k] = (buf[k] * inv) % p
                    has[c] = 1
                    found += 1
                    break
            if found == ncols:
                break
    finally:
        free(piv)
        free(has)
        free(buf)
    return found
