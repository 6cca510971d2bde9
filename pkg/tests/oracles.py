"""Brute-force oracles over Fractions, independent of the flint-backed code.

Everything here works on plain lists of Fractions so that a bug in the
library's linear algebra cannot hide behind the same bug in the oracle.
"""
from fractions import Fraction


def to_frac(m):
    """flint matrix -> list of lists of Fractions (rationals only)."""
    return [[Fraction(str(m[i, j])) for j in range(m.ncols())] for i in range(m.nrows())]


def rank(rows):
    rows = [list(r) for r in rows if r]
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r


def nullspace(rows, ncols):
    """Basis of {v : rows . v = 0} as a list of vectors."""
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    out = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for k, pc in enumerate(pivots):
            v[pc] = -rows[k][fc]
        out.append(v)
    return out


def matmul(a, b):
    if not a:
        return []
    n = len(b[0]) if b else 0
    return [[sum((a[i][k] * b[k][j] for k in range(len(b))), Fraction(0)) for j in range(n)] for i in range(len(a))]


def actions(x):
    return [to_frac(m) for m in x.action]


_HOM_CACHE = {}


def _key(x):
    return (id(x.algebra), x.dim, tuple(str(m) for m in x.action))


def hom_basis(x, y):
    """All F (dim x by dim y) with X_i F = F Y_i for every algebra basis element."""
    key = (_key(x), _key(y))
    if key not in _HOM_CACHE:
        _HOM_CACHE[key] = _hom_basis(x, y)
    return _HOM_CACHE[key]


def _hom_basis(x, y):
    ax, ay = actions(x), actions(y)
    p, q = x.dim, y.dim
    n = p * q
    eqs = []
    for xa, ya in zip(ax, ay):
        for i in range(p):
            for j in range(q):
                row = [Fraction(0)] * n
                # (X F)_{ij} = sum_k X_ik F_kj ; (F Y)_{ij} = sum_k F_ik Y_kj
                for k in range(p):
                    row[k * q + j] += xa[i][k]
                for k in range(q):
                    row[i * q + k] -= ya[k][j]
                eqs.append(row)
    return [[v[i * q:(i + 1) * q] for i in range(p)] for v in nullspace(eqs, n)] if n else []


def hom_dim(x, y):
    if x.dim == 0 or y.dim == 0:
        return 0
    return len(hom_basis(x, y))


def ext1_dim(x, y):
    """dim Ext^1(X, Y) as cocycles modulo coboundaries.

    An extension 0 -> Y -> E -> X -> 0 of right modules has action
    [[X_a, delta_a], [0, Y_a]] on row vectors; multiplicativity reads
    delta_{ab} = X_a delta_b + delta_a Y_b, and coboundaries are
    delta_a = X_a h - h Y_a.
    """
    a = x.algebra
    p, q, n = x.dim, y.dim, a.dim
    if p == 0 or q == 0:
        return 0
    ax, ay = actions(x), actions(y)
    block = p * q
    nvars = n * block

    def var(k, i, j):
        return k * block + i * q + j

    eqs = []
    for s in range(n):
        for t in range(n):
            coeffs = [Fraction(str(c)) for c in a.product_coords(s, t)]
            for i in range(p):
                for j in range(q):
                    row = [Fraction(0)] * nvars
                    for k, c in enumerate(coeffs):
                        if c:
                            row[var(k, i, j)] += c
                    for k in range(p):
                        row[var(t, k, j)] -= ax[s][i][k]
                    for k in range(q):
                        row[var(s, i, k)] -= ay[t][k][j]
                    eqs.append(row)
    z = len(nullspace(eqs, nvars))
    cob = []
    for hi in range(p):
        for hj in range(q):
            vec = [Fraction(0)] * nvars
            for s in range(n):
                for i in range(p):
                    vec[var(s, i, hj)] += ax[s][i][hi]
                for j in range(q):
                    vec[var(s, hi, j)] -= ay[s][hj][j]
            cob.append(vec)
    return z - rank(cob)


def contravariant_hom_exact(xs, maps, tests):
    """Exactness of 0 -> Hom(X^{n+1}, Y) -> ... -> Hom(X^0, Y) for every Y,
    where maps[k]: X^k -> X^{k+1}; recomputed from scratch."""
    mats = [to_frac(f.matrix) for f in maps]
    for y in tests:
        bases = [hom_basis(x, y) if x.dim and y.dim else [] for x in xs]
        ranks = []
        for k, m in enumerate(mats):
            imgs = [sum(matmul(m, phi), []) for phi in bases[k + 1]]
            ranks.append(rank(imgs) if imgs and imgs[0] else 0)
        n = len(maps) - 1
        if ranks[n] != len(bases[n + 1]):
            return False
        for k in range(1, n + 1):
            if len(bases[k]) - ranks[k - 1] != ranks[k]:
                return False
    return True


def covariant_hom_exact(xs, maps, tests):
    """Exactness of 0 -> Hom(Y, X^0) -> ... -> Hom(Y, X^{n+1}), maps[k]: X^k -> X^{k+1}."""
    mats = [to_frac(f.matrix) for f in maps]
    for y in tests:
        bases = [hom_basis(y, x) if x.dim and y.dim else [] for x in xs]
        ranks = []
        for k, m in enumerate(mats):
            imgs = [sum(matmul(phi, m), []) for phi in bases[k]]
            ranks.append(rank(imgs) if imgs and imgs[0] else 0)
        n = len(maps) - 1
        if ranks[0] != len(bases[0]):
            return False
        for k in range(1, n + 1):
            if len(bases[k]) - ranks[k] != ranks[k - 1]:
                return False
    return True
