"""Pure-Python versions of the hot loops.

Kept line-for-line parallel with ``_ckernels.pyx``; the two must return
identical results on identical input.
"""
from math import gcd


def mul_terms(a, b):
    out = {}
    get = out.get
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple([x + y for x, y in zip(ea, eb)])
            out[e] = get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c}


def _normalize(row):
    g = gcd(*row.values())
    if g != 1:
        for k in row:
            row[k] //= g
    return row


def _combine(target, pivot, col):
    """Return ``fa*target - fb*pivot`` with the entry at ``col`` cancelled."""
    a = target[col]
    b = pivot[col]
    g = gcd(a, b)
    fa = b // g
    fb = a // g
    if fa < 0:
        fa, fb = -fa, -fb
    out = {}
    if fa == 1:
        out.update(target)
    else:
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


def _forward(rows, ncols):
    rows = [_normalize(dict(r)) for r in rows if r]
    col_rows = {}
    for idx, r in enumerate(rows):
        for c in r:
            col_rows.setdefault(c, set()).add(idx)
    alive = set(range(len(rows)))
    pivots = []
    for c in range(ncols):
        cand = col_rows.get(c)
        if not cand:
            continue
        cand = [i for i in cand if i in alive]
        if not cand:
            continue
        # sparsest row first, then lowest original index
        p = min(cand, key=lambda i: (len(rows[i]), i))
        alive.discard(p)
        prow = rows[p]
        for i in cand:
            if i == p:
                continue
            old = rows[i]
            new = _combine(old, prow, c)
            for k in old:
                if k not in new:
                    col_rows[k].discard(i)
            for k in new:
                if k not in old:
                    col_rows.setdefault(k, set()).add(i)
            rows[i] = new
            if not new:
                alive.discard(i)
        pivots.append((c, prow))
    return pivots


def echelon_rank(rows, ncols):
    return len(_forward(rows, ncols))


def rref(rows, ncols):
    """Fraction-free Gauss-Jordan over the integers.

    ``rows`` is a list of sparse integer rows ``{col: value}``. Returns
    ``[(pivot_col, row), ...]`` sorted by pivot column; each row has unit
    content, a positive pivot entry, and no entries in other pivot columns.
    """
    pivots = _forward(rows, ncols)
    index = {}
    for j, (c, row) in enumerate(pivots):
        for k in row:
            index.setdefault(k, set()).add(j)
    for j in range(len(pivots) - 1, -1, -1):
        c, prow = pivots[j]
        for i in sorted(index.get(c, ())):
            if i >= j:
                continue
            old = pivots[i][1]
            new = _combine(old, prow, c)
            for k in old:
                if k not in new:
                    index[k].discard(i)
            for k in new:
                if k not in old:
                    index.setdefault(k, set()).add(i)
            pivots[i] = (pivots[i][0], new)
    out = []
    for c, row in pivots:
        if row[c] < 0:
            row = {k: -v for k, v in row.items()}
        out.append((c, row))
    return out


def rank_mod_p(rows, ncols, p):
    """Rank over GF(p) of integer sparse rows already reduced mod ``p``."""
    pivots = {}
    for row in rows:
        r = {k: v for k, v in row.items() if v}
        while r:
            c = min(r)
            piv = pivots.get(c)
            if piv is None:
                inv = pow(r[c], -1, p)
                pivots[c] = {k: v * inv % p for k, v in r.items()}
                break
            f = r[c]
            for k, v in piv.items():
                x = (r.get(k, 0) - f * v) % p
                if x:
                    r[k] = x
                else:
                    r.pop(k, None)
        if len(pivots) == ncols:
            break
    return len(pivots)
