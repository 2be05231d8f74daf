"""Dense matrices over the exact scalar field.

Plain list-of-list matrices with Scalar entries; enough linear algebra for
R-matrix checks and representation work (multiply, Kronecker product,
Gauss-Jordan inverse).  No numerics.
"""

from __future__ import annotations

from .scalars import ONE, ZERO, Scalar


class Singular(ArithmeticError):
    pass


def zeros(rows, cols=None):
    cols = rows if cols is None else cols
    return [[ZERO for _ in range(cols)] for _ in range(rows)]


def eye(n):
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def mneg(a):
    return [[-x for x in row] for row in a]


def madd(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def msub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def smul(c, a):
    c = Scalar(c)
    return [[c * x for x in row] for row in a]


def mmul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    out = zeros(n, m)
    for i in range(n):
        ra = a[i]
        ro = out[i]
        for t in range(k):
            x = ra[t]
            if not x:
                continue
            rb = b[t]
            for j in range(m):
                if rb[j]:
                    ro[j] = ro[j] + x * rb[j]
    return out


def kron(a, b):
    p, q = len(b), len(b[0])
    out = []
    for ra in a:
        for rb in b:
            out.append([x * y for x in ra for y in rb])
    return out


def transpose(a):
    return [list(col) for col in zip(*a)]


def meq(a, b):
    return len(a) == len(b) and all(ra == rb for ra, rb in zip(a, b))


def is_zero(a):
    return all(not x for row in a for x in row)


def nullspace(a):
    """Basis of the right kernel, by row reduction over the fraction field."""
    if not a:
        return []
    rows = [list(r) for r in a]
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pc = rows[r][c]
        rows[r] = [x / pc for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for c in free:
        v = [ZERO] * ncols
        v[c] = ONE
        for i, pc in enumerate(pivots):
            v[pc] = -rows[i][c]
        basis.append(v)
    return basis


def inv(a):
    """Gauss-Jordan inverse over the fraction field."""
    n = len(a)
    work = [list(row) + list(erow) for row, erow in zip(a, eye(n))]
    for col in range(n):
        piv = next((r for r in range(col, n) if work[r][col]), None)
        if piv is None:
            raise Singular("matrix is singular over the scalar field")
        work[col], work[piv] = work[piv], work[col]
        pc = work[col][col]
        work[col] = [x / pc for x in work[col]]
        for r in range(n):
            if r != col and work[r][col]:
                f = work[r][col]
                work[r] = [x - f * y for x, y in zip(work[r], work[col])]
    return [row[n:] for row in work]
