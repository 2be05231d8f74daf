"""R-matrix toolkit: braid-equation checks, Hecke condition, superization.

An RMatrix is an n^2 x n^2 matrix of exact scalars with the composite-index
convention M[(a-1)n+b-1][(c-1)n+d-1] = R^a_c^b_d, i.e. rows are the upper
index pair (a,b), columns the lower pair (c,d).  A grading p marks basis
directions odd; the super checks carry the corresponding sign factors
explicitly.
"""

from __future__ import annotations

import json
from itertools import product

from . import smat
from .scalars import ONE, ZERO, Scalar, parse, qvar, render


class UnknownName(KeyError):
    pass


class NotSuperizable(ValueError):
    pass


class NullDegreeViolated(ValueError):
    pass


class RMatrix:
    def __init__(self, n, entries, grading=None, name=""):
        self.n = n
        self.name = name
        self.m = [[Scalar(x) for x in row] for row in entries]
        if len(self.m) != n * n or any(len(r) != n * n for r in self.m):
            raise ValueError(f"need a {n * n}x{n * n} entry grid")
        self.p = tuple(grading) if grading is not None else (0,) * n
        if len(self.p) != n:
            raise ValueError("grading length must equal the dimension")
        smat.inv(self.m)  # invertibility is part of the contract
        if self.is_super and not null_degree_check(self):
            raise NullDegreeViolated(f"{name or 'R'} is not even under {self.p}")

    @property
    def is_super(self):
        return any(self.p)

    def entry(self, a, c, b, d):
        """R^a_c^b_d with 1-based indices."""
        n = self.n
        return self.m[(a - 1) * n + b - 1][(c - 1) * n + d - 1]

    def inverse_matrix(self):
        return smat.inv(self.m)

    def __eq__(self, other):
        if not isinstance(other, RMatrix):
            return NotImplemented
        return self.n == other.n and self.p == other.p and smat.meq(self.m, other.m)

    def __repr__(self):
        return f"RMatrix({self.name or 'anon'}, n={self.n}, p={self.p})"


# -- embeddings into three legs -------------------------------------------

def _embed3(R: RMatrix, legs):
    n = R.n
    N = n ** 3
    out = smat.zeros(N)
    i, j = legs  # 0-based pair of acted-on legs
    spec = [k for k in range(3) if k not in legs]
    k = spec[0]
    for a, b, s in product(range(n), repeat=3):
        row3 = [0, 0, 0]
        row3[i], row3[j], row3[k] = a, b, s
        for c, d in product(range(n), repeat=2):
            x = R.m[a * n + b][c * n + d]
            if not x:
                continue
            col3 = [0, 0, 0]
            col3[i], col3[j], col3[k] = c, d, s
            out[row3[0] * n * n + row3[1] * n + row3[2]][
                col3[0] * n * n + col3[1] * n + col3[2]] = x
    return out


def qybe_check(R: RMatrix) -> bool:
    """R12 R13 R23 = R23 R13 R12, exactly."""
    r12 = _embed3(R, (0, 1))
    r13 = _embed3(R, (0, 2))
    r23 = _embed3(R, (1, 2))
    lhs = smat.mmul(smat.mmul(r12, r13), r23)
    rhs = smat.mmul(smat.mmul(r23, r13), r12)
    return smat.meq(lhs, rhs)


def null_degree_check(R: RMatrix) -> bool:
    n, p = R.n, R.p
    for a, b, c, d in product(range(1, n + 1), repeat=4):
        if (p[a - 1] + p[b - 1] - p[c - 1] - p[d - 1]) % 2 and R.entry(a, c, b, d):
            return False
    return True


def sybe_check(R: RMatrix) -> bool:
    """Graded braid relation with explicit sign factors."""
    if not null_degree_check(R):
        raise NullDegreeViolated("SYBE requires the null-degree condition")
    n = R.n
    p = [0] + list(R.p)  # 1-based
    rng = range(1, n + 1)
    for i, j, a, b, c, d in product(rng, repeat=6):
        lhs = ZERO
        for e, f, k in product(rng, repeat=3):
            x = R.entry(b, e, a, f)
            if not x:
                continue
            y = R.entry(i, k, f, c)
            if not y:
                continue
            z = R.entry(k, j, e, d)
            if not z:
                continue
            t = x * y * z
            if (p[e] * (p[f] + p[c])) % 2:
                t = -t
            lhs = lhs + t
        rhs = ZERO
        for pp, r, s in product(rng, repeat=3):
            x = R.entry(i, pp, b, r)
            if not x:
                continue
            y = R.entry(pp, j, a, s)
            if not y:
                continue
            z = R.entry(r, d, s, c)
            if not z:
                continue
            t = x * y * z
            if (p[r] * (p[s] + p[a])) % 2:
                t = -t
            rhs = rhs + t
        if lhs != rhs:
            return False
    return True


def permutation_matrix(n):
    N = n * n
    out = smat.zeros(N)
    for a, b in product(range(n), repeat=2):
        out[a * n + b][b * n + a] = ONE
    return out


def hecke_check(R: RMatrix) -> bool:
    """(PR - q)(PR + 1/q) = 0."""
    q = qvar()
    n = R.n
    pr = smat.mmul(permutation_matrix(n), R.m)
    idm = smat.eye(n * n)
    lhs = smat.mmul(smat.msub(pr, smat.smul(q, idm)),
                    smat.madd(pr, smat.smul(ONE / q, idm)))
    return smat.is_zero(lhs)


def hecke_identity_check(R: RMatrix) -> bool:
    """Contracted form: R^f_k^e_l R^l_i^k_j = (q - 1/q) R^f_i^e_j + delta delta."""
    q = qvar()
    n = R.n
    rng = range(1, n + 1)
    for f, e, i, j in product(rng, repeat=4):
        s = ZERO
        for k, l in product(rng, repeat=2):
            x = R.entry(f, k, e, l)
            if x:
                y = R.entry(l, i, k, j)
                if y:
                    s = s + x * y
        want = (q - ONE / q) * R.entry(f, i, e, j)
        if f == j and e == i:
            want = want + ONE
        if s != want:
            return False
    return True


# -- superization ----------------------------------------------------------

def superizable_grading_search(R: RMatrix):
    """All index gradings under which R is even (exhaustive over 2^n)."""
    n = R.n
    support = [(a, b, c, d) for a, b, c, d in product(range(1, n + 1), repeat=4)
               if R.entry(a, c, b, d)]
    found = []
    for bits in product((0, 1), repeat=n):
        ok = all((bits[a - 1] + bits[b - 1] - bits[c - 1] - bits[d - 1]) % 2 == 0
                 for a, b, c, d in support)
        if ok:
            found.append(bits)
    return found


def superize_r(R: RMatrix, p) -> RMatrix:
    """Flip the sign of entries with both upper indices odd and flag super."""
    n = R.n
    p = tuple(p)
    out = smat.zeros(n * n)
    for a, b in product(range(1, n + 1), repeat=2):
        for c, d in product(range(1, n + 1), repeat=2):
            x = R.entry(a, c, b, d)
            if not x:
                continue
            if (p[a - 1] + p[b - 1] - p[c - 1] - p[d - 1]) % 2:
                raise NotSuperizable(f"entry R^{a}_{c}^{b}_{d} violates grading {p}")
            if p[a - 1] and p[b - 1]:
                x = -x
            out[(a - 1) * n + b - 1][(c - 1) * n + d - 1] = x
    return RMatrix(n, out, grading=p, name=(R.name + "-super") if R.name else "")


# -- catalog ---------------------------------------------------------------

def _glnm(n, m):
    q = qvar()
    d = n + m
    p = [0] * n + [1] * m
    out = smat.zeros(d * d)
    for i in range(1, d + 1):
        diag = q if i <= n else -ONE / q
        out[(i - 1) * d + i - 1][(i - 1) * d + i - 1] = diag
        for j in range(1, d + 1):
            if i == j:
                continue
            sign = -ONE if (p[i - 1] and p[j - 1]) else ONE
            out[(i - 1) * d + j - 1][(i - 1) * d + j - 1] = sign
            if j > i:
                out[(i - 1) * d + j - 1][(j - 1) * d + i - 1] = q - ONE / q
    return out, p


def catalog(name, n=None, m=None) -> RMatrix:
    """Built-in R-matrices by name.

    ac / super_ac: the 4x4 Alexander-Conway solution and its super form.
    omega / super_omega: the exterior-calculus relative and its super form.
    glnm / super_glnm (params n, m): the non-standard gl(n|m) family.
    std_gl (param n): the standard Hecke solution for GL_q(n).
    identity (param n).
    """
    q = qvar()
    w = q - ONE / q
    if name == "ac":
        return RMatrix(2, [[q, 0, 0, 0], [0, ONE, w, 0],
                           [0, 0, ONE, 0], [0, 0, 0, -ONE / q]], name="ac")
    if name == "super_ac":
        return superize_r(catalog("ac"), (0, 1))
    if name == "omega":
        return RMatrix(2, [[q, 0, 0, 0], [0, q, w, 0],
                           [0, 0, ONE / q, 0], [0, 0, 0, -ONE / q]], name="omega")
    if name == "super_omega":
        return superize_r(catalog("omega"), (0, 1))
    if name == "glnm":
        ent, p = _glnm(n, m)
        return RMatrix(n + m, ent, name=f"gl({n}|{m})")
    if name == "super_glnm":
        return superize_r(catalog("glnm", n=n, m=m), [0] * n + [1] * m)
    if name == "std_gl":
        ent, _ = _glnm(n, 0)
        return RMatrix(n, ent, name=f"std_gl({n})")
    if name == "identity":
        return RMatrix(n, smat.eye(n * n), name="identity")
    raise UnknownName(name)


# -- serialization ---------------------------------------------------------

def rmatrix_to_json(R: RMatrix) -> str:
    entries = []
    for i, row in enumerate(R.m):
        for j, x in enumerate(row):
            if x:
                entries.append([i, j, render(x)])
    return json.dumps({"n": R.n, "grading": list(R.p), "name": R.name,
                       "entries": entries}, indent=1)


def rmatrix_from_json(text: str) -> RMatrix:
    data = json.loads(text)
    n = data["n"]
    ent = smat.zeros(n * n)
    for i, j, s in data["entries"]:
        ent[i][j] = parse(s)
    return RMatrix(n, ent, grading=data.get("grading"), name=data.get("name", ""))
