"""Two-dimensional representations and evaluated universal R-matrices.

The catalog enveloping algebra has a family of 2-dimensional irreducibles
labelled by a pair of weights.  On integer labels every Cartan exponential
in the universal R-matrix, the ribbon element and the twisting cocycle has
even integer eigenvalue exponents, so all of them evaluate to exact +-q^k
diagonal matrices and every identity can be checked with no numerics.

Families ("standard", "omega", "super", "super-omega") pair a coproduct
with its universal R-matrix; the omega forms are the cocycle twists of the
standard ones and the super forms live over the graded presentation.
"""

from __future__ import annotations

from itertools import product

from . import smat
from .algebras import uq_hopf, uq_omega_hopf, uqgl11_hopf, uqgl11_omega_hopf, \
    uq_presentation
from .gtensor import SUPER
from .hopfcore import antipode, coproduct, counit
from .ncalg import Element
from .report import CheckReport
from .rmatlab import RMatrix, permutation_matrix
from .scalars import ONE, ZERO, Scalar, indet, qvar, sign_pow


class DegenerateLabel(ValueError):
    pass


class NonIntegerLabel(TypeError):
    pass


class NoIntertwiner(ArithmeticError):
    pass


FAMILIES = ("standard", "omega", "super", "super-omega")


def _families():
    return {
        "standard": (uq_hopf, False),
        "omega": (uq_omega_hopf, False),
        "super": (uqgl11_hopf, True),
        "super-omega": (uqgl11_omega_hopf, True),
    }


class RepLabel:
    """Weight pair (m1, m2) or a symbolic pair of invertible scalars.

    Integer labels set lam1 = q^m1 and lam2 = (-1)^m2 q^m2.  The label is
    degenerate (the representation fails to be irreducible) exactly when
    (lam1 lam2)^2 = 1; construction refuses that case.
    """

    def __init__(self, m1, m2):
        self.m1, self.m2 = int(m1), int(m2)
        q = qvar()
        self.lam1 = q ** self.m1
        self.lam2 = sign_pow(self.m2) * q ** self.m2
        self.gsign = sign_pow(self.m2)
        self._guard()

    @classmethod
    def symbolic(cls, lam1, lam2, gsign=ONE):
        lab = object.__new__(cls)
        lab.m1 = lab.m2 = None
        lab.lam1, lab.lam2 = Scalar(lam1), Scalar(lam2)
        lab.gsign = Scalar(gsign)
        lab._guard()
        return lab

    @property
    def integral(self):
        return self.m1 is not None

    def _guard(self):
        if (self.lam1 * self.lam2) ** 2 == ONE:
            raise DegenerateLabel(f"(lam1 lam2)^2 = 1 at {self}")

    def __eq__(self, other):
        if not isinstance(other, RepLabel):
            return NotImplemented
        return self.lam1 == other.lam1 and self.lam2 == other.lam2

    def __repr__(self):
        if self.integral:
            return f"RepLabel({self.m1}, {self.m2})"
        return f"RepLabel.symbolic({self.lam1}, {self.lam2})"


def _aslabel(lab):
    if isinstance(lab, RepLabel):
        return lab
    m1, m2 = lab
    return RepLabel(m1, m2)


def _diag(*entries):
    n = len(entries)
    out = smat.zeros(n)
    for i, x in enumerate(entries):
        out[i][i] = Scalar(x)
    return out


class Rep:
    """A 2-dimensional representation, verified against every rewrite rule.

    Basis vectors carry Cartan weights: K1 acts by diag(lam1, lam1/q), K2
    by diag(lam2, -q lam2), and the involution by diag(1,-1) up to the
    overall sign (-1)^m2 on integer labels.  graded=True produces the same
    matrices over the graded presentation with basis parity (0, 1).
    """

    def __init__(self, label, graded=False):
        self.label = _aslabel(label)
        self.graded = bool(graded)
        self.pres = uq_presentation(graded=self.graded)
        q = qvar()
        l1, l2 = self.label.lam1, self.label.lam2
        gsc = self.label.gsign
        c = (l1 * l2 - ONE / (l1 * l2)) / (q - ONE / q)
        self.images = {
            "K1": _diag(l1, l1 / q), "K1i": _diag(ONE / l1, q / l1),
            "K2": _diag(l2, -q * l2), "K2i": _diag(ONE / l2, -ONE / (q * l2)),
            "g": _diag(gsc, -gsc),
            "Xp": [[ZERO, c], [ZERO, ZERO]],
            "Xm": [[ZERO, ZERO], [ONE, ZERO]],
        }
        self.dim = 2
        self.p = (0, 1) if self.graded else (0, 0)
        if self.label.integral:
            self.h1 = (2 * self.label.m1, 2 * self.label.m1 - 2)
            self.h2 = (2 * self.label.m2, 2 * self.label.m2 + 2)
        else:
            self.h1 = self.h2 = None
        self._verify()

    def _wmat(self, word):
        m = smat.eye(self.dim)
        for x in word:
            m = smat.mmul(m, self.images[x])
        return m

    def _verify(self):
        for lhs, rhs in self.pres.rules.items():
            want = smat.zeros(self.dim)
            for w, c in rhs.items():
                want = smat.madd(want, smat.smul(c, self._wmat(w)))
            if not smat.meq(self._wmat(lhs), want):
                raise ValueError(f"rule {lhs} fails in representation {self.label}")

    def evaluate(self, e: Element):
        if e.pres is not self.pres:
            raise ValueError("element not over this representation's algebra")
        out = smat.zeros(self.dim)
        for w, c in e.terms.items():
            out = smat.madd(out, smat.smul(c, self._wmat(w)))
        return out

    def __repr__(self):
        return f"Rep({self.label}, graded={self.graded})"


def rep_build(label, graded=False) -> Rep:
    return Rep(label, graded=graded)


# -- evaluation contexts ----------------------------------------------------

class _Ev:
    """What R-matrix evaluation needs from a leg: dimension, Cartan weights
    per basis vector, basis parity, and an Element -> matrix map."""

    __slots__ = ("dim", "h1", "h2", "p", "elem")

    def __init__(self, dim, h1, h2, p, elem):
        self.dim, self.h1, self.h2, self.p, self.elem = dim, h1, h2, p, elem


def _ev_atom(rep: Rep) -> _Ev:
    if rep.h1 is None:
        raise NonIntegerLabel(f"{rep.label} has no integer Cartan weights")
    return _Ev(rep.dim, list(rep.h1), list(rep.h2), rep.p, rep.evaluate)


def _gkron(a, b, deg_b, pa):
    """Matrix of a (x) b with the Koszul sign (-1)^(deg_b * parity of the
    first-leg basis vector passed)."""
    da, db = len(a), len(b)
    out = smat.zeros(da * db)
    for i in range(da):
        for k in range(da):
            x = a[i][k]
            if not x:
                continue
            if deg_b and pa[k]:
                x = -x
            for j in range(db):
                row = out[i * db + j]
                for l in range(db):
                    if b[j][l]:
                        row[k * db + l] = x * b[j][l]
    return out


def _tensor_image(t, evA: _Ev, evB: _Ev, h):
    pres, sup = h.pres, h.mode == SUPER
    out = smat.zeros(evA.dim * evB.dim)
    for (w1, w2), c in t.terms.items():
        m = _gkron(evA.elem(pres.monomial(w1)), evB.elem(pres.monomial(w2)),
                   pres.degree(w2) if sup else 0, evA.p)
        out = smat.madd(out, smat.smul(c, m))
    return out


def _ev_tensor(a: _Ev, b: _Ev, h) -> _Ev:
    """The tensor product representation through the coproduct of h."""
    def elem(e):
        return _tensor_image(coproduct(e, h), a, b, h)
    h1 = [x + y for x in a.h1 for y in b.h1]
    h2 = [x + y for x in a.h2 for y in b.h2]
    p = tuple((x + y) % 2 for x in a.p for y in b.p)
    return _Ev(a.dim * b.dim, h1, h2, p, elem)


def _delta_mat(x: Element, evA: _Ev, evB: _Ev, h, flip=False):
    t = coproduct(x, h)
    if flip:
        t = t.flip()
    return _tensor_image(t, evA, evB, h)


# -- the four R-matrix families --------------------------------------------

def _tail_pair(pres, which):
    """The nilpotent tail legs of the universal R-matrix, as Elements."""
    if which == "standard":
        return pres.word("K2", "Xp"), pres.word("K2i", "Xm"), 0
    if which == "omega":
        return (pres.word("K2", "Xp"),
                pres.word("K2i", "g", "K1i") * pres.word("K2i", "Xm"), 0)
    if which == "super":
        return (pres.word("g", "K2", "Xp"),
                pres.word("K2i", "g") * pres.word("Xm", "g"), 1)
    if which == "super-omega":
        return (pres.word("g", "K2", "Xp"),
                pres.word("K2i", "K2i", "K1i") * pres.word("Xm", "g"), 1)
    raise KeyError(f"unknown family {which!r}")


def _pref_entry(which, h1a, h2a, h1b, h2b) -> Scalar:
    q = qvar()
    if which == "standard":
        return sign_pow((h2a * h2b) // 4) * q ** ((h1a * h1b - h2a * h2b) // 4)
    if which == "omega":
        return sign_pow((h2a * h2b) // 4) * q ** (((h1a - h2a) * (h1b + h2b)) // 4)
    nha, nna = (h1a + h2a) // 2, h2a // 2
    nhb, nnb = (h1b + h2b) // 2, h2b // 2
    if which == "super":
        return q ** (-(nha * nnb + nna * nhb))
    if which == "super-omega":
        return q ** (-2 * nna * nhb)
    raise KeyError(f"unknown family {which!r}")


def _r_matrix(evA: _Ev, evB: _Ev, which):
    h, _ = _families()[which]
    pres = h().pres
    e1, e2, deg2 = _tail_pair(pres, which)
    q = qvar()
    d = evA.dim * evB.dim
    tail = smat.madd(smat.eye(d), smat.smul(
        ONE - q * q, _gkron(evA.elem(e1), evB.elem(e2), deg2, evA.p)))
    pref = smat.zeros(d)
    for s in range(evA.dim):
        for t in range(evB.dim):
            i = s * evB.dim + t
            pref[i][i] = _pref_entry(which, evA.h1[s], evA.h2[s],
                                     evB.h1[t], evB.h2[t])
    return smat.mmul(pref, tail)


def universal_r_eval(lab1, lab2, which="standard") -> RMatrix:
    """The universal R-matrix in a pair of integer-labelled representations."""
    hfun, graded = _families()[which]
    r1 = rep_build(lab1, graded=graded)
    r2 = rep_build(lab2, graded=graded)
    m = _r_matrix(_ev_atom(r1), _ev_atom(r2), which)
    return RMatrix(2, m, grading=(0, 1) if graded else None,
                   name=f"{which}@{r1.label},{r2.label}")


# -- embeddings into three legs with mixed dimensions ----------------------

def _flatten(idx, dims):
    return (idx[0] * dims[1] + idx[1]) * dims[2] + idx[2]


def _embed_pair(M, dims, ps, legs):
    """Embed a two-leg operator matrix into three graded legs.

    The sign is the Koszul cost of moving each operator factor past the
    spectator leg; the factor's parity is read off entrywise from the row
    and column indices of its leg (legal because every matrix here is even).
    """
    i, j = legs
    k = ({0, 1, 2} - set(legs)).pop()
    out = smat.zeros(dims[0] * dims[1] * dims[2])
    for ri, rj in product(range(dims[i]), range(dims[j])):
        for ci, cj in product(range(dims[i]), range(dims[j])):
            x = M[ri * dims[j] + rj][ci * dims[j] + cj]
            if not x:
                continue
            # parity of the operator factors acting on legs i and j
            di = (ps[i][ri] + ps[i][ci]) % 2
            dj = (ps[j][rj] + ps[j][cj]) % 2
            cross = ((di if i > k else 0) + (dj if j > k else 0)) % 2
            for s in range(dims[k]):
                y = -x if (cross and ps[k][s]) else x
                row, col = [0, 0, 0], [0, 0, 0]
                row[i], row[j], row[k] = ri, rj, s
                col[i], col[j], col[k] = ci, cj, s
                out[_flatten(row, dims)][_flatten(col, dims)] = y
    return out


def quasitriangularity_check(lab1, lab2, lab3, which="standard") -> CheckReport:
    """Coproduct intertwining, both hexagon identities and the braid
    equation for the evaluated R-matrix on three integer labels."""
    hfun, graded = _families()[which]
    h = hfun()
    pres = h.pres
    evs = [_ev_atom(rep_build(l, graded=graded)) for l in (lab1, lab2, lab3)]
    ev1, ev2, ev3 = evs
    rep = CheckReport(f"quasitriangular:{which}")

    r12 = _r_matrix(ev1, ev2, which)
    for gs in pres.gens:
        x = pres.gen(gs.name)
        lhs = smat.mmul(_delta_mat(x, ev1, ev2, h, flip=True), r12)
        rhs = smat.mmul(r12, _delta_mat(x, ev1, ev2, h))
        rep.record(smat.meq(lhs, rhs), ("intertwine", gs.name))

    dims = [e.dim for e in evs]
    ps = [e.p for e in evs]
    r12e = _embed_pair(r12, dims, ps, (0, 1))
    r13 = _embed_pair(_r_matrix(ev1, ev3, which), dims, ps, (0, 2))
    r23 = _embed_pair(_r_matrix(ev2, ev3, which), dims, ps, (1, 2))
    t12 = _ev_tensor(ev1, ev2, h)
    t23 = _ev_tensor(ev2, ev3, h)
    rep.record(smat.meq(_r_matrix(t12, ev3, which), smat.mmul(r13, r23)),
               ("hexagon", "delta-leg1"))
    rep.record(smat.meq(_r_matrix(ev1, t23, which), smat.mmul(r13, r12e)),
               ("hexagon", "delta-leg2"))
    lhs = smat.mmul(smat.mmul(r12e, r13), r23)
    rhs = smat.mmul(smat.mmul(r23, r13), r12e)
    rep.record(smat.meq(lhs, rhs), ("braid", "three-legs"))
    return rep


# -- ribbon structure -------------------------------------------------------

def _ribbon_pref(rep: Rep):
    q = qvar()
    return _diag(*[sign_pow(rep.h2[s] // 2)
                   * q ** (-(rep.h1[s] ** 2 - rep.h2[s] ** 2) // 4)
                   for s in range(rep.dim)])


def ribbon_data(label) -> dict:
    """Evaluated Drinfeld element u, its antipode image, the central square
    z = u S(u), the square-distinguishing group-like r and the ribbon nu."""
    r = rep_build(label)
    pres = r.pres
    q = qvar()
    w2 = ONE - q * q
    fe = pres.word("K2i", "Xm") * pres.word("K2", "Xp")
    ef = pres.word("K2", "Xp") * pres.word("K2i", "Xm")
    tail_u = pres.one() + pres.word("K1i", "K2i") * fe * w2
    tail_su = pres.one() + ef * pres.word("K1", "K2") * w2
    tail_z = pres.one() + (pres.word("K1", "K2") * ef
                           + pres.word("K1i", "K2i") * fe) * w2
    pref = _ribbon_pref(r)
    u = smat.mmul(pref, r.evaluate(tail_u))
    su = smat.mmul(pref, r.evaluate(tail_su))
    z = smat.mmul(smat.mmul(pref, pref), r.evaluate(tail_z))
    nu = smat.mmul(pref, r.evaluate(pres.word("K1", "K2") * tail_u))
    return {"rep": r, "pref": pref, "tail_u": tail_u, "u": u, "su": su,
            "z": z, "nu": nu, "r": r.evaluate(pres.word("K1i", "K1i", "K2i", "K2i"))}


def ribbon_check(label) -> CheckReport:
    """The ribbon axioms for nu and the properties of u, z and r at one
    integer label (both tensor legs carry the same label)."""
    data = ribbon_data(label)
    r = data["rep"]
    h = uq_hopf()
    pres = r.pres
    q = qvar()
    rep = CheckReport(f"ribbon:{r.label}")

    u, su, z, nu = data["u"], data["su"], data["z"], data["nu"]
    uinv = smat.inv(u)
    for gs in pres.gens:
        x = pres.gen(gs.name)
        conj = smat.mmul(smat.mmul(u, r.evaluate(x)), uinv)
        rep.record(smat.meq(conj, r.evaluate(antipode(antipode(x, h), h))),
                   ("u-implements-S2", gs.name))
        rep.record(smat.meq(smat.mmul(nu, r.evaluate(x)),
                            smat.mmul(r.evaluate(x), nu)),
                   ("nu-central", gs.name))
        s4 = antipode(antipode(antipode(antipode(x, h), h), h), h)
        rep.record(s4 == x, ("S4-identity", gs.name))

    rep.record(smat.meq(smat.mmul(u, su), z), ("z-is-uSu",))
    rep.record(smat.meq(smat.mmul(nu, nu), z), ("nu-squared",))
    rep.record(smat.meq(data["r"], _diag(*[q ** (-(r.h1[s] + r.h2[s]))
                                           for s in range(r.dim)])),
               ("r-grouplike-weights",))
    rep.record(smat.meq(smat.mmul(data["r"], r.evaluate(
        pres.word("K1", "K1", "K2", "K2"))), smat.eye(r.dim)),
        ("r-inverse-of-casimir-square",))

    # S(nu) = nu through the antihomomorphism; the diagonal prefactor is
    # S-invariant because the antipode negates both Cartan weights
    s_tail = antipode(pres.word("K1", "K2") * data["tail_u"], h)
    rep.record(smat.meq(smat.mmul(r.evaluate(s_tail), data["pref"]), nu),
               ("S-fixes-nu",))
    rep.record(counit(pres.word("K1", "K2") * data["tail_u"], h) == ONE,
               ("counit-nu",))

    # Delta nu = (R21 R)^-1 (nu (x) nu), both legs at this label
    ev = _ev_atom(r)
    rmat = _r_matrix(ev, ev, "standard")
    perm = permutation_matrix(r.dim)
    r21 = smat.mmul(smat.mmul(perm, rmat), perm)
    cross = smat.zeros(r.dim * r.dim)
    for s in range(r.dim):
        for t in range(r.dim):
            i = s * r.dim + t
            cross[i][i] = q ** (-(r.h1[s] * r.h1[t] - r.h2[s] * r.h2[t]) // 2)
    lhs = smat.mmul(smat.mmul(smat.kron(data["pref"], data["pref"]), cross),
                    _delta_mat(pres.word("K1", "K2") * data["tail_u"], ev, ev, h))
    rhs = smat.mmul(smat.inv(smat.mmul(r21, rmat)), smat.kron(nu, nu))
    rep.record(smat.meq(lhs, rhs), ("delta-nu",))
    return rep


# -- decomposition of tensor products --------------------------------------

def tensor_decompose(lab1=None, lab2=None):
    """Split the tensor square of two generic representations.

    Defaults to the fully symbolic pair (lam1, lam2) and (mu1, mu2).
    Returns the two constituent labels and an invertible intertwiner T with
    Delta(x) T = T (pi_1 + pi_2)(x) for every generator.  Raises
    NoIntertwiner when the commutant construction fails.
    """
    if lab1 is None:
        lab1 = RepLabel.symbolic(indet("lam1"), indet("lam2"))
    if lab2 is None:
        lab2 = RepLabel.symbolic(indet("mu1"), indet("mu2"))
    lab1, lab2 = _aslabel(lab1), _aslabel(lab2)
    q = qvar()
    out1 = RepLabel.symbolic(lab1.lam1 * lab2.lam1, lab1.lam2 * lab2.lam2,
                             gsign=lab1.gsign * lab2.gsign)
    out2 = RepLabel.symbolic(lab1.lam1 * lab2.lam1 / q,
                             -q * lab1.lam2 * lab2.lam2,
                             gsign=-lab1.gsign * lab2.gsign)
    h = uq_hopf()
    pres = h.pres
    r1, r2 = Rep(lab1), Rep(lab2)
    t1, t2 = Rep(out1), Rep(out2)

    def big(x):
        t = coproduct(x, h)
        out = smat.zeros(4)
        for (w1, w2), c in t.terms.items():
            out = smat.madd(out, smat.smul(
                c, smat.kron(r1.evaluate(pres.monomial(w1)),
                             r2.evaluate(pres.monomial(w2)))))
        return out

    def blk(x):
        a, b = t1.evaluate(x), t2.evaluate(x)
        out = smat.zeros(4)
        for i in range(2):
            for j in range(2):
                out[i][j] = a[i][j]
                out[i + 2][j + 2] = b[i][j]
        return out

    rows = []
    for gs in pres.gens:
        x = pres.gen(gs.name)
        a, b = big(x), blk(x)
        for i in range(4):
            for j in range(4):
                row = [ZERO] * 16
                for k in range(4):
                    row[k * 4 + j] = row[k * 4 + j] + a[i][k]
                for l in range(4):
                    row[i * 4 + l] = row[i * 4 + l] - b[l][j]
                rows.append(row)
    basis = smat.nullspace(rows)
    if not basis:
        raise NoIntertwiner("the intertwiner space is zero")
    for coeffs in ([ONE], [ONE, ONE], [ONE, -ONE], [ONE, Scalar(2)],
                   [ZERO, ONE], [ONE, qvar()]):
        if len(coeffs) > len(basis):
            continue
        vec = [ZERO] * 16
        for c, v in zip(coeffs, basis):
            vec = [x + c * y for x, y in zip(vec, v)]
        t = [vec[i * 4:(i + 1) * 4] for i in range(4)]
        try:
            smat.inv(t)
        except smat.Singular:
            continue
        for gs in pres.gens:
            x = pres.gen(gs.name)
            if not smat.meq(smat.mmul(big(x), t), smat.mmul(t, blk(x))):
                raise NoIntertwiner(f"candidate fails to intertwine {gs.name}")
        return out1, out2, t
    raise NoIntertwiner("no invertible element found in the intertwiner space")


# -- cocycle twisting -------------------------------------------------------

def _chi(evA: _Ev, evB: _Ev, super_side, swap=False):
    q = qvar()
    d = evA.dim * evB.dim
    out = smat.zeros(d)
    for s in range(evA.dim):
        for t in range(evB.dim):
            if super_side:
                e = ((evB.h2[t] // 2) * ((evA.h1[s] + evA.h2[s]) // 2) if swap
                     else (evA.h2[s] // 2) * ((evB.h1[t] + evB.h2[t]) // 2))
            else:
                e = ((evB.h2[t] * (evA.h1[s] + evA.h2[s])) // 4 if swap
                     else (evA.h2[s] * (evB.h1[t] + evB.h2[t])) // 4)
            out[s * evB.dim + t][s * evB.dim + t] = q ** e
    return out


def _diag_inv(m):
    out = smat.zeros(len(m))
    for i in range(len(m)):
        out[i][i] = ONE / m[i][i]
    return out


def twist_check(lab1, lab2, lab3, super_side=False) -> CheckReport:
    """The diagonal cocycle chi: counital 2-cocycle identity, conjugation
    of the coproduct, and the twisted R-matrix computed two ways."""
    which0, which1 = ("super", "super-omega") if super_side \
        else ("standard", "omega")
    hfun0, graded = _families()[which0]
    hfun1, _ = _families()[which1]
    h0, h1 = hfun0(), hfun1()
    pres = h0.pres
    evs = [_ev_atom(rep_build(l, graded=graded)) for l in (lab1, lab2, lab3)]
    ev1, ev2, ev3 = evs
    rep = CheckReport(f"twist:{which1}")

    dims = [e.dim for e in evs]
    ps = [e.p for e in evs]
    c12 = _chi(ev1, ev2, super_side)
    lhs = smat.mmul(_embed_pair(c12, dims, ps, (0, 1)),
                    _chi(_ev_tensor(ev1, ev2, h0), ev3, super_side))
    rhs = smat.mmul(_embed_pair(_chi(ev2, ev3, super_side), dims, ps, (1, 2)),
                    _chi(ev1, _ev_tensor(ev2, ev3, h0), super_side))
    rep.record(smat.meq(lhs, rhs), ("cocycle",))

    c12i = _diag_inv(c12)
    for gs in pres.gens:
        x = pres.gen(gs.name)
        twisted = smat.mmul(smat.mmul(c12, _delta_mat(x, ev1, ev2, h0)), c12i)
        rep.record(smat.meq(twisted, _delta_mat(x, ev1, ev2, h1)),
                   ("conjugated-coproduct", gs.name))

    r0 = _r_matrix(ev1, ev2, which0)
    r1m = _r_matrix(ev1, ev2, which1)
    c21 = _chi(ev1, ev2, super_side, swap=True)
    rep.record(smat.meq(r1m, smat.mmul(smat.mmul(c21, r0), c12i)),
               ("twisted-R",))
    return rep
