"""Small exact linear algebra over the rationals.

Matrices are tuples of tuples of Fractions (rows).  Everything here is
deterministic and exact; no floats.
"""

from __future__ import annotations

from fractions import Fraction


def mat(rows):
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


def zeros(r, c):
    return tuple(tuple(Fraction(0) for _ in range(c)) for _ in range(r))


def identity(n):
    return tuple(tuple(Fraction(1 if i == j else 0) for j in range(n))
                 for i in range(n))


def shape(a):
    return len(a), (len(a[0]) if a else 0)


def matmul(a, b):
    ra, ca = shape(a)
    rb, cb = shape(b)
    if ca != rb:
        raise ValueError("shape mismatch in matmul")
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(ca))
                       for j in range(cb)) for i in range(ra))


def madd(a, b):
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mscale(c, a):
    c = Fraction(c)
    return tuple(tuple(c * x for x in row) for row in a)


def transpose(a):
    r, c = shape(a)
    return tuple(tuple(a[i][j] for i in range(r)) for j in range(c))


def hstack(blocks):
    blocks = [b for b in blocks if shape(b)[1] > 0 or shape(b)[0] > 0]
    if not blocks:
        return ()
    r = len(blocks[0])
    return tuple(tuple(x for b in blocks for x in b[i]) for i in range(r))


def vstack(blocks):
    return tuple(row for b in blocks for row in b)


def block_diag(blocks):
    rows = sum(shape(b)[0] for b in blocks)
    cols = sum(shape(b)[1] for b in blocks)
    out = [[Fraction(0)] * cols for _ in range(rows)]
    ro = co = 0
    for b in blocks:
        br, bc = shape(b)
        for i in range(br):
            for j in range(bc):
                out[ro + i][co + j] = b[i][j]
        ro += br
        co += bc
    return tuple(tuple(row) for row in out)


def kron(a, b):
    """Kronecker product; basis order (i, j) with the first factor major."""
    ra, ca = shape(a)
    rb, cb = shape(b)
    out = [[Fraction(0)] * (ca * cb) for _ in range(ra * rb)]
    for i in range(ra):
        for j in range(ca):
            if a[i][j] == 0:
                continue
            for p in range(rb):
                for q in range(cb):
                    out[i * rb + p][j * cb + q] = a[i][j] * b[p][q]
    return tuple(tuple(row) for row in out)


def permutation_matrix(perm):
    """Matrix sending basis vector e_j to e_{perm[j]}."""
    n = len(perm)
    out = [[Fraction(0)] * n for _ in range(n)]
    for j, i in enumerate(perm):
        out[i][j] = Fraction(1)
    return tuple(tuple(row) for row in out)


def rref(a):
    """Reduced row echelon form; returns (R, pivot column list)."""
    r, c = shape(a)
    m = [list(row) for row in a]
    pivots = []
    pr = 0
    for pc in range(c):
        pivot_row = None
        for i in range(pr, r):
            if m[i][pc] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        m[pr], m[pivot_row] = m[pivot_row], m[pr]
        pv = m[pr][pc]
        m[pr] = [x / pv for x in m[pr]]
        for i in range(r):
            if i != pr and m[i][pc] != 0:
                f = m[i][pc]
                m[i] = [x - f * y for x, y in zip(m[i], m[pr])]
        pivots.append(pc)
        pr += 1
        if pr == r:
            break
    return tuple(tuple(row) for row in m), pivots


def rank(a):
    if shape(a)[0] == 0 or shape(a)[1] == 0:
        return 0
    return len(rref(a)[1])


def is_invertible(a):
    r, c = shape(a)
    return r == c and rank(a) == r


def inverse(a):
    r, c = shape(a)
    if r != c:
        raise ValueError("not square")
    aug, pivots = rref(hstack([a, identity(r)]))
    if pivots != list(range(r)):
        raise ValueError("singular matrix")
    return tuple(row[r:] for row in aug)


def nullspace(a):
    """Basis of the kernel, as columns collected into a matrix (c x k)."""
    r, c = shape(a)
    if r == 0:
        return identity(c)
    R, pivots = rref(a)
    free = [j for j in range(c) if j not in pivots]
    basis = []
    for fj in free:
        v = [Fraction(0)] * c
        v[fj] = Fraction(1)
        for i, pj in enumerate(pivots):
            v[pj] = -R[i][fj]
        basis.append(tuple(v))
    return transpose(tuple(basis)) if basis else zeros(c, 0)


def solve(a, b):
    """One solution x of a x = b (b a column matrix), or None."""
    r, c = shape(a)
    aug, pivots = rref(hstack([a, b])) if r else (None, [])
    if r == 0:
        return zeros(c, shape(b)[1])
    if any(p >= c for p in pivots):
        return None
    bc = shape(b)[1]
    x = [[Fraction(0)] * bc for _ in range(c)]
    for i, pj in enumerate(pivots):
        for j in range(bc):
            x[pj][j] = aug[i][c + j]
    return tuple(tuple(row) for row in x)
