"""Quantum exterior algebras of Hecke type and their hidden symmetries.

Omega_q(R) is generated by coordinates x_1..x_n (even) and forms
dx_1..dx_n (odd) with exchange relations driven by a Hecke R-matrix:

    x_i x_j  =  1/q  x_b x_a R^a_i^b_j,
    dx_i x_j =    q  x_b dx_a R^a_i^b_j,
    dx_i dx_j = -q  dx_b dx_a R^a_i^b_j.

The module compiles these into rewrite rules, carries the exterior
differential, and implements two right actions mixing x and dx: the
bosonic one of the twisted enveloping algebra (H1, H2, X+-) and the super
one of its gl(1|1) counterpart (h, N, eta, eta+).  Both are stored on
generators and extended through the (super-)covariance identity, whose
coproduct legs act by scalars on generators.  The left coaction of the
2x2 super matrix quantum group on (x, dx) is checked by direct rewriting
in the graded tensor algebra.
"""

from __future__ import annotations

from itertools import product

from .ncalg import Element, GeneratorSymbol, Presentation, compile_relations
from .report import CheckReport
from .rmatlab import RMatrix, hecke_check
from .scalars import ONE, Scalar, qvar


class NotHecke(ValueError):
    pass


class UnknownActor(KeyError):
    pass


class ExteriorAlgebra:
    """Compiled presentation of Omega_q(R) for a Hecke R-matrix."""

    def __init__(self, R: RMatrix, name=""):
        if not hecke_check(R):
            raise NotHecke(f"{R.name or 'R'} fails the Hecke condition")
        self.R = R
        self.n = R.n
        self.name = name or f"omega({R.name or 'R'})"
        n = self.n
        q = qvar()
        gens = [GeneratorSymbol(f"x{i}") for i in range(1, n + 1)] + \
               [GeneratorSymbol(f"dx{i}", degree=1) for i in range(1, n + 1)]
        rel = []
        for i, j in product(range(1, n + 1), repeat=2):
            xx, dxx, dxdx = {}, {}, {}
            for a, b in product(range(1, n + 1), repeat=2):
                c = R.entry(a, i, b, j)
                if not c:
                    continue
                for d, w, f in ((xx, (f"x{b}", f"x{a}"), ONE / q),
                                (dxx, (f"x{b}", f"dx{a}"), q),
                                (dxdx, (f"dx{b}", f"dx{a}"), -q)):
                    d[w] = d.get(w, Scalar(0)) + f * c
            rel.append(({(f"x{i}", f"x{j}"): ONE}, xx))
            rel.append(({(f"dx{i}", f"x{j}"): ONE}, dxx))
            rel.append(({(f"dx{i}", f"dx{j}"): ONE}, dxdx))
        self.pres = compile_relations(gens, rel, name=self.name,
                                      sample_budget=40)
        self._check_differential()

    def x(self, i) -> Element:
        return self.pres.gen(f"x{i}")

    def dx(self, i) -> Element:
        return self.pres.gen(f"dx{i}")

    def _check_differential(self):
        """d must send every rewrite rule to zero, making it well defined."""
        for lhs, rhs in self.pres.rules.items():
            img = self._d_word(lhs)
            for w, c in rhs.items():
                img = img - self._d_word(w) * c
            if img:
                raise ValueError(f"differential not defined on rule {lhs}")

    def _d_word(self, w) -> Element:
        pres = self.pres
        out = pres.zero()
        sign = ONE
        for k, letter in enumerate(w):
            if not letter.startswith("dx"):
                out = out + pres.monomial(
                    w[:k] + ("d" + letter,) + w[k + 1:], sign)
            if pres.by_name[letter].degree:
                sign = -sign
        return out

    def differential(self, e: Element) -> Element:
        """The exterior derivative, by the graded Leibniz rule."""
        if e.pres is not self.pres:
            raise ValueError("element not over this exterior algebra")
        out = self.pres.zero()
        for w, c in e.terms.items():
            out = out + self._d_word(w) * c
        return out

    def __repr__(self):
        return f"ExteriorAlgebra({self.name}, n={self.n})"


def omega_build(R: RMatrix) -> ExteriorAlgebra:
    return ExteriorAlgebra(R)


# -- right actions ----------------------------------------------------------

class ActionTable:
    """Right action of a rank-one symmetry algebra on Omega_q(R).

    Every actor is skew-primitive: its coproduct is h (x) B + A (x) h with
    A, B acting on generators by scalars.  entries maps the actor name to
    its generator images, the two scalar legs, and its parity.
    """

    def __init__(self, omega: ExteriorAlgebra, tag, entries):
        self.omega = omega
        self.tag = tag
        self.entries = entries

    def actors(self):
        return list(self.entries)


def _scalars(omega, on_x, on_dx):
    out = {}
    for i in range(1, omega.n + 1):
        out[f"x{i}"] = Scalar(on_x)
        out[f"dx{i}"] = Scalar(on_dx)
    return out


def bosonic_action(omega: ExteriorAlgebra) -> ActionTable:
    """H1 and H2 act by weight (2 on x / 2 on dx respectively), X+ sends
    coordinates to forms and X- back, with the twisted coproduct legs."""
    pres = omega.pres
    q = qvar()
    one = _scalars(omega, ONE, ONE)
    entries = {
        "H1": {"gen": {f"x{i}": 2 * omega.x(i) for i in range(1, omega.n + 1)}
               | {f"dx{i}": pres.zero() for i in range(1, omega.n + 1)},
               "left": one, "right": one, "deg": 0},
        "H2": {"gen": {f"x{i}": pres.zero() for i in range(1, omega.n + 1)}
               | {f"dx{i}": 2 * omega.dx(i) for i in range(1, omega.n + 1)},
               "left": one, "right": one, "deg": 0},
        "Xp": {"gen": {f"x{i}": omega.dx(i) * (ONE / q)
                       for i in range(1, omega.n + 1)}
               | {f"dx{i}": pres.zero() for i in range(1, omega.n + 1)},
               "left": _scalars(omega, ONE, -ONE / q),
               "right": _scalars(omega, ONE, ONE / q), "deg": 0},
        "Xm": {"gen": {f"x{i}": pres.zero() for i in range(1, omega.n + 1)}
               | {f"dx{i}": q * omega.x(i) for i in range(1, omega.n + 1)},
               "left": _scalars(omega, ONE / q, ONE),
               "right": _scalars(omega, q, -q * q), "deg": 0},
    }
    return ActionTable(omega, "bosonic", entries)


def super_action(omega: ExteriorAlgebra) -> ActionTable:
    """h, N act by weight; the odd pair eta, eta+ exchanges x and dx with
    Koszul signs through the super-covariance identity."""
    pres = omega.pres
    q = qvar()
    one = _scalars(omega, ONE, ONE)
    entries = {
        "h": {"gen": {f"x{i}": omega.x(i) for i in range(1, omega.n + 1)}
              | {f"dx{i}": omega.dx(i) for i in range(1, omega.n + 1)},
              "left": one, "right": one, "deg": 0},
        "N": {"gen": {f"x{i}": pres.zero() for i in range(1, omega.n + 1)}
              | {f"dx{i}": omega.dx(i) for i in range(1, omega.n + 1)},
              "left": one, "right": one, "deg": 0},
        "eta": {"gen": {f"x{i}": omega.dx(i) * (ONE / q)
                        for i in range(1, omega.n + 1)}
                | {f"dx{i}": pres.zero() for i in range(1, omega.n + 1)},
                "left": _scalars(omega, ONE, ONE / q),
                "right": _scalars(omega, ONE, ONE / q), "deg": 1},
        "etap": {"gen": {f"x{i}": pres.zero() for i in range(1, omega.n + 1)}
                 | {f"dx{i}": q * omega.x(i) for i in range(1, omega.n + 1)},
                 "left": _scalars(omega, ONE / q, ONE),
                 "right": _scalars(omega, q, q * q), "deg": 1},
    }
    return ActionTable(omega, "super", entries)


def _act_word(table: ActionTable, entry, w) -> Element:
    pres = table.omega.pres
    if not w:
        return pres.zero()  # counit of every actor vanishes
    head, rest = w[0], w[1:]
    out = pres.monomial((head,), entry["left"][head]) \
        * _act_word(table, entry, rest)
    c = ONE
    for y in rest:
        c = c * entry["right"][y]
    t = entry["gen"][head] * pres.monomial(rest, c)
    if table.tag == "super" and entry["deg"] and pres.degree(rest):
        t = -t
    return out + t


def act(e: Element, actor, table: ActionTable) -> Element:
    """Right action of a named generator, extended through covariance."""
    if actor not in table.entries:
        raise UnknownActor(actor)
    if e.pres is not table.omega.pres:
        raise ValueError("element not over this action's exterior algebra")
    entry = table.entries[actor]
    out = table.omega.pres.zero()
    for w, c in e.terms.items():
        out = out + _act_word(table, entry, w) * c
    return out


def covariance_check(table: ActionTable) -> CheckReport:
    """Every actor maps both sides of every defining rule to equal
    elements: the action descends to Omega_q(R)."""
    rep = CheckReport(f"covariance:{table.omega.name}:{table.tag}")
    pres = table.omega.pres
    for actor, entry in table.entries.items():
        for lhs, rhs in pres.rules.items():
            li = _act_word(table, entry, lhs)
            ri = pres.zero()
            for w, c in rhs.items():
                ri = ri + _act_word(table, entry, w) * c
            rep.record(li == ri, (actor, lhs))
    return rep


# -- matrix super-transformation -------------------------------------------

def _gl_tensor_presentation(omega: ExteriorAlgebra) -> Presentation:
    """The graded tensor algebra of the 2x2 super matrix quantum group
    (alpha, beta, gamma, delta) with Omega_q(R): the two factors
    super-commute."""
    q = qvar()
    gens = [GeneratorSymbol("al"),
            GeneratorSymbol("be", degree=1, nilpotent=True),
            GeneratorSymbol("ga", degree=1, nilpotent=True),
            GeneratorSymbol("de")] + list(omega.pres.gens)
    out = Presentation(gens, name=f"glo(1|1)x{omega.name}",
                       step_cap=omega.pres.step_cap)
    out.add_rule(("be", "al"), {("al", "be"): ONE})
    out.add_rule(("ga", "al"), {("al", "ga"): q * q})
    out.add_rule(("de", "be"), {("be", "de"): ONE})
    out.add_rule(("de", "ga"), {("ga", "de"): ONE / (q * q)})
    out.add_rule(("ga", "be"), {("be", "ga"): -q * q})
    out.add_rule(("de", "al"), {("al", "de"): ONE, ("be", "ga"): ONE - q * q})
    for lhs, rhs in omega.pres.rules.items():
        if lhs in out.rules:
            continue
        out.add_rule(lhs, rhs)
    for y in omega.pres.by_name:
        dy = omega.pres.by_name[y].degree
        for u in ("al", "be", "ga", "de"):
            du = out.by_name[u].degree
            sign = -ONE if (dy and du) else ONE
            out.add_rule((y, u), {(u, y): sign})
    return out


def gl_coaction_check(omega: ExteriorAlgebra) -> CheckReport:
    """The primed generators x' = alpha x + beta dx, dx' = gamma x + delta dx
    satisfy the Omega_q(R) relations inside the graded tensor algebra."""
    rep = CheckReport(f"gl-coaction:{omega.name}")
    pres = _gl_tensor_presentation(omega)
    q = qvar()
    n = omega.n
    xp = {i: pres.word("al", f"x{i}") + pres.word("be", f"dx{i}")
          for i in range(1, n + 1)}
    dxp = {i: pres.word("ga", f"x{i}") + pres.word("de", f"dx{i}")
           for i in range(1, n + 1)}
    for i, j in product(range(1, n + 1), repeat=2):
        xx = xp[i] * xp[j]
        dxx = dxp[i] * xp[j]
        dxdx = dxp[i] * dxp[j]
        for a, b in product(range(1, n + 1), repeat=2):
            c = omega.R.entry(a, i, b, j)
            if not c:
                continue
            xx = xx - xp[b] * xp[a] * (c / q)
            dxx = dxx - xp[b] * dxp[a] * (c * q)
            dxdx = dxdx + dxp[b] * dxp[a] * (c * q)
        rep.record(not xx, ("x-x", i, j))
        rep.record(not dxx, ("dx-x", i, j))
        rep.record(not dxdx, ("dx-dx", i, j))
    return rep
