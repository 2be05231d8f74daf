"""Hopf and super-Hopf structure maps over presented algebras.

A HopfData carries generator images of the coproduct, counit and antipode;
the module extends them (anti)multiplicatively, checks the axioms by exact
rewriting, and implements the superization construction: given a group-like
involution g, the same algebra becomes a super-Hopf algebra with

    new_coproduct(h) = sum h1 * g^(-deg h2) (x) h2,
    new_antipode(h)  = g^(deg h) * S(h),

where the degree of a homogeneous element is read off from the adjoint
action g h g^-1 = (-1)^deg(h) h.  The inverse direction, adjoining g to an
algebra with a chosen index grading, is z2_extend.
"""

from __future__ import annotations

from fractions import Fraction

from .gtensor import BOSONIC, SUPER, TensorElement, apply_to_leg, tensor_mul, unit
from .ncalg import Element, GeneratorSymbol, Presentation, overlap_check
from .report import CheckReport
from .scalars import ONE, ZERO, Scalar

import random


class NoAntipode(Exception):
    pass


class NotInvolutive(Exception):
    pass


class NotGradedCentral(Exception):
    pass


class ActionNotCompatible(Exception):
    pass


class NotInvertible(Exception):
    pass


class HopfData:
    """Generator-level Hopf structure on a Presentation.

    delta maps generator names to arity-2 TensorElements, counit to Scalars,
    antipode (optional) to Elements.  mode selects whether the tensor square
    multiplies with Koszul signs.
    """

    def __init__(self, pres: Presentation, delta, counit, antipode=None,
                 mode=BOSONIC, g=None, name=""):
        self.pres = pres
        self.mode = mode
        self.g = g
        self.name = name or pres.name
        self.delta = dict(delta)
        self.counit_map = {k: Scalar(v) for k, v in counit.items()}
        self.antipode_map = dict(antipode) if antipode is not None else None
        for gsym in pres.gens:
            if gsym.name not in self.delta:
                raise KeyError(f"no coproduct image for generator {gsym.name}")
            if gsym.name not in self.counit_map:
                raise KeyError(f"no counit image for generator {gsym.name}")
            if self.antipode_map is not None and gsym.name not in self.antipode_map:
                raise KeyError(f"no antipode image for generator {gsym.name}")
        if g is not None and g not in pres.index:
            raise KeyError(f"group-like {g} is not a generator")

    # convenience wrappers
    def coproduct(self, e):
        return coproduct(e, self)

    def counit(self, e):
        return counit(e, self)

    def antipode(self, e):
        return antipode(e, self)

    def __repr__(self):
        return f"HopfData({self.name}, mode={self.mode})"


def grouplike_data(pres, names, mode=BOSONIC):
    """Delta/counit/antipode entries for generators that are group-like.

    Covers a name and its inverse partner in one call; the antipode of a
    group-like is its inverse.
    """
    delta, eps, spo = {}, {}, {}
    for n in names:
        gsym = pres.by_name[n]
        delta[n] = TensorElement(pres, 2, {((n,), (n,)): ONE}, mode, normalize=False)
        eps[n] = ONE
        inv = gsym.inverse
        if inv is None:
            raise ValueError(f"group-like {n} has no inverse partner")
        spo[n] = pres.word(inv)
    return delta, eps, spo


# -- multiplicative / antimultiplicative extension -------------------------

def _delta_word(h: HopfData, word) -> TensorElement:
    out = unit(h.pres, 2, h.mode)
    for x in word:
        out = tensor_mul(out, h.delta[x])
    return out


def coproduct(e: Element, h: HopfData) -> TensorElement:
    if e.pres is not h.pres:
        raise ValueError("element not over this Hopf algebra")
    out = TensorElement(h.pres, 2, {}, h.mode, normalize=False)
    for w, c in e.terms.items():
        out = out + _delta_word(h, w) * c
    return out


def _eps_word(h: HopfData, word) -> Scalar:
    c = ONE
    for x in word:
        c = c * h.counit_map[x]
        if not c:
            return ZERO
    return c


def counit(e: Element, h: HopfData) -> Scalar:
    if e.pres is not h.pres:
        raise ValueError("element not over this Hopf algebra")
    c = ZERO
    for w, cw in e.terms.items():
        c = c + cw * _eps_word(h, w)
    return c


def _s_word(h: HopfData, word) -> Element:
    if h.antipode_map is None:
        raise NoAntipode(h.name)
    out = h.pres.one()
    for x in word:
        out = h.antipode_map[x] * out
    if h.mode == SUPER:
        degs = [h.pres.by_name[x].degree for x in word]
        sgn = sum(degs[i] * degs[j] for i in range(len(degs)) for j in range(i + 1, len(degs)))
        if sgn % 2:
            out = -out
    return out


def antipode(e: Element, h: HopfData) -> Element:
    if e.pres is not h.pres:
        raise ValueError("element not over this Hopf algebra")
    out = h.pres.zero()
    for w, c in e.terms.items():
        out = out + _s_word(h, w) * c
    return out


# -- axiom checking --------------------------------------------------------

def _mul_legs(h: HopfData, t: TensorElement) -> Element:
    """Multiplication map on the tensor square (no sign: it is m, not m o tau)."""
    out = h.pres.zero()
    for (w1, w2), c in t.terms.items():
        out = out + h.pres.monomial(w1 + w2, c)
    return out


def _eps_leg(h: HopfData, t: TensorElement, leg: int) -> Element:
    out = h.pres.zero()
    for legs, c in t.terms.items():
        other = legs[1 - leg]
        out = out + h.pres.monomial(other, c * _eps_word(h, legs[leg]))
    return out


def check_hopf_axioms(h: HopfData, word_budget: int = 25, rng=None) -> CheckReport:
    """Coassociativity, counit and antipode laws, and rule compatibility.

    Exhaustive on generators, defining rules and all words of length <= 2;
    plus word_budget random longer words.
    """
    rep = CheckReport(f"hopf-axioms:{h.name}")
    pres = h.pres
    names = [g.name for g in pres.gens]

    # structure maps must descend through every rewrite rule
    for lhs, rhs in pres.rules.items():
        dl = _delta_word(h, lhs)
        dr = TensorElement(pres, 2, {}, h.mode, normalize=False)
        el = _eps_word(h, lhs)
        er = ZERO
        for w, c in rhs.items():
            dr = dr + _delta_word(h, w) * c
            er = er + c * _eps_word(h, w)
        rep.record(dl == dr, ("delta-rule", lhs))
        rep.record(el == er, ("eps-rule", lhs))
        if h.antipode_map is not None:
            sl = _s_word(h, lhs)
            sr = pres.zero()
            for w, c in rhs.items():
                sr = sr + _s_word(h, w) * c
            rep.record(sl == sr, ("antipode-rule", lhs))

    words = [(n,) for n in names] + [(a, b) for a in names for b in names]
    if word_budget:
        rng = rng or random.Random(7)
        for _ in range(word_budget):
            words.append(tuple(rng.choice(names) for _ in range(rng.randint(3, 4))))

    for w in words:
        e = pres.monomial(w)
        if not e:
            continue
        d = coproduct(e, h)
        left = apply_to_leg(d, 0, lambda wd: _delta_word(h, wd), 1)
        right = apply_to_leg(d, 1, lambda wd: _delta_word(h, wd), 1)
        rep.record(left == right, ("coassoc", w))
        rep.record(_eps_leg(h, d, 0) == e, ("counit-left", w))
        rep.record(_eps_leg(h, d, 1) == e, ("counit-right", w))
        if h.antipode_map is not None:
            eps1 = pres.one() * counit(e, h)
            lhs1 = _mul_legs(h, apply_to_leg(d, 0, lambda wd: _s1(h, wd), 0))
            lhs2 = _mul_legs(h, apply_to_leg(d, 1, lambda wd: _s1(h, wd), 0))
            rep.record(lhs1 == eps1, ("antipode-left", w))
            rep.record(lhs2 == eps1, ("antipode-right", w))

    if h.g is not None:
        gels = pres.gen(h.g)
        rep.record(coproduct(gels, h) == TensorElement(
            pres, 2, {((h.g,), (h.g,)): ONE}, h.mode), ("grouplike-delta", h.g))
        rep.record(counit(gels, h) == ONE, ("grouplike-eps", h.g))
        rep.record(gels * gels == pres.one(), ("involutive", h.g))
    return rep


def _s1(h, word):
    e = _s_word(h, word)
    return TensorElement(h.pres, 1, {(w,): c for w, c in e.terms.items()}, h.mode, normalize=False)


# -- superization ----------------------------------------------------------

def g_degrees(pres: Presentation, g: str) -> dict:
    """Z2-degree of each generator from the adjoint action of the involution g."""
    if pres.word(g, g) != pres.one():
        raise NotInvolutive(f"{g}^2 != 1 in {pres.name}")
    ginv = pres.by_name[g].inverse or g
    degs = {}
    for x in pres.by_name:
        conj = pres.word(g, x, ginv)
        if conj == pres.gen(x):
            degs[x] = 0
        elif conj == -pres.gen(x):
            degs[x] = 1
        else:
            raise NotGradedCentral(f"g {x} g^-1 is not +-{x} in {pres.name}")
    return degs


def _regrade(pres: Presentation, degs) -> Presentation:
    gens = [GeneratorSymbol(g.name, degree=degs[g.name], nilpotent=g.nilpotent,
                            inverse=g.inverse, weight=g.weight) for g in pres.gens]
    out = Presentation(gens, name=pres.name + "/super", step_cap=pres.step_cap,
                       unoriented=pres.unoriented)
    for lhs, rhs in pres.rules.items():
        if lhs in out.rules and lhs not in pres.unoriented:
            continue  # structural
        try:
            out.add_rule(lhs, rhs, unoriented=lhs in pres.unoriented)
        except ValueError as exc:
            raise ActionNotCompatible(str(exc)) from None
    return out


def superize(h: HopfData) -> HopfData:
    """Bosonic Hopf algebra with involution g -> super-Hopf algebra.

    Same algebra and counit; coproduct picks up g^(-deg) on the first leg,
    antipode picks up g^deg in front.  Degrees come from g-conjugation.
    """
    if h.g is None:
        raise ValueError("superize needs a distinguished group-like g")
    if h.mode != BOSONIC:
        raise ValueError("superize starts from a bosonic HopfData")
    degs = g_degrees(h.pres, h.g)
    spres = _regrade(h.pres, degs)
    g = h.g

    delta, eps, spo = {}, {}, {} if h.antipode_map is not None else None
    for x in spres.by_name:
        terms = {}
        for (w1, w2), c in h.delta[x].terms.items():
            if spres.degree(w2) % 2:
                w1 = w1 + (g,)  # g^-1 = g
            terms[(w1, w2)] = terms.get((w1, w2), ZERO) + c
        delta[x] = TensorElement(spres, 2, terms, SUPER)
        eps[x] = h.counit_map[x]
        if spo is not None:
            sx = h.antipode_map[x]
            pre = spres.word(g) if degs[x] % 2 else spres.one()
            spo[x] = pre * Element(spres, sx.terms)
    return HopfData(spres, delta, eps, spo, mode=SUPER, g=g, name=h.name + "/super")


def rg_tensor(pres: Presentation, g: str, mode=BOSONIC) -> TensorElement:
    """(1/2)(1 (x) 1 + 1 (x) g + g (x) 1 - g (x) g), its own inverse."""
    half = Scalar(Fraction(1, 2))
    return TensorElement(pres, 2, {
        ((), ()): half, ((), (g,)): half, ((g,), ()): half, ((g,), (g,)): -half,
    }, mode, normalize=False)


# -- Z2-extension ----------------------------------------------------------

def z2_extend(h: HopfData, parity: dict, gname: str = "g") -> HopfData:
    """Adjoin an involution g with g x = (-1)^parity[x] x g for each generator.

    parity maps every generator name to 0 or 1 (inverse partners must agree
    with their partner's parity).  The result is a bosonic Hopf algebra with
    g group-like; compatibility of the sign action with the rules is checked
    by exhaustive overlap resolution.
    """
    pres = h.pres
    if gname in pres.index:
        raise ValueError(f"generator name {gname} already taken")
    for x in pres.by_name:
        if x not in parity:
            raise KeyError(f"no parity for generator {x}")
        inv = pres.by_name[x].inverse
        if inv is not None and parity[x] % 2 != parity[inv] % 2:
            raise ActionNotCompatible(f"parities of {x} and {inv} differ")
    gens = [GeneratorSymbol(gname, inverse=gname)] + list(pres.gens)
    out = Presentation(gens, name=pres.name + f"x{gname}", step_cap=pres.step_cap,
                       unoriented=pres.unoriented)
    for lhs, rhs in pres.rules.items():
        if lhs in out.rules and lhs not in pres.unoriented:
            continue
        out.add_rule(lhs, rhs, unoriented=lhs in pres.unoriented)
    for x in pres.by_name:
        sign = -ONE if parity[x] % 2 else ONE
        out.add_rule((x, gname), {(gname, x): sign})
    chk = overlap_check(out)
    if not chk.ok:
        raise ActionNotCompatible(f"{out.name}: {chk.failures[:3]}")

    delta, eps, spo = {}, {}, {} if h.antipode_map is not None else None
    for x in pres.by_name:
        delta[x] = TensorElement(out, 2, h.delta[x].terms, h.mode)
        eps[x] = h.counit_map[x]
        if spo is not None:
            spo[x] = Element(out, h.antipode_map[x].terms)
    dg, eg, sg = grouplike_data(out, [gname], h.mode)
    delta.update(dg)
    eps.update(eg)
    if spo is not None:
        spo.update(sg)
    return HopfData(out, delta, eps, spo, mode=h.mode, g=gname,
                    name=h.name + f"x{gname}")


# -- isomorphism checking --------------------------------------------------

def hom_image(e: Element, images: dict, target: Presentation) -> Element:
    """Extend a generator map multiplicatively (no signs) and apply it."""
    out = target.zero()
    for w, c in e.terms.items():
        m = target.one()
        for x in w:
            m = m * images[x]
        out = out + m * c
    return out


def theta_iso_check(aR: HopfData, aRbar: HopfData, theta: dict) -> CheckReport:
    """Verify a generator map theta as a coalgebra-respecting algebra map.

    theta sends generator names of aR to Elements of aRbar.  Checks that
    every defining rule of aR maps to zero and that
    (theta (x) theta) o coproduct = coproduct o theta on all generators.
    """
    rep = CheckReport(f"theta:{aR.name}->{aRbar.name}")
    src, tgt = aR.pres, aRbar.pres
    for lhs, rhs in src.rules.items():
        li = hom_image(src.monomial(lhs), theta, tgt)
        ri = tgt.zero()
        for w, c in rhs.items():
            ri = ri + hom_image(src.monomial(w), theta, tgt) * c
        rep.record(li == ri, ("relation", lhs))
    for x in src.by_name:
        lhs_t = _push_tensor(coproduct(src.gen(x), aR), theta, aRbar)
        rhs_t = coproduct(hom_image(src.gen(x), theta, tgt), aRbar)
        rep.record(lhs_t == rhs_t, ("intertwine", x))
    return rep


def _push_tensor(t: TensorElement, theta, target_h: HopfData) -> TensorElement:
    tgt = target_h.pres
    out = TensorElement(tgt, 2, {}, target_h.mode, normalize=False)
    for (w1, w2), c in t.terms.items():
        e1 = hom_image(t.pres.monomial(w1), theta, tgt)
        e2 = hom_image(t.pres.monomial(w2), theta, tgt)
        pair = tensor_mul(
            TensorElement(tgt, 2, {(u, ()): cc for u, cc in e1.terms.items()},
                          target_h.mode, normalize=False),
            TensorElement(tgt, 2, {((), v): cc for v, cc in e2.terms.items()},
                          target_h.mode, normalize=False))
        out = out + pair * c
    return out


# -- centrality ------------------------------------------------------------

def casimir_central_check(h: HopfData, c: Element, anticommuting=()) -> CheckReport:
    """[c, x] = 0 for every generator x, or {c, x} = 0 for listed names."""
    rep = CheckReport(f"central:{h.name}")
    for gsym in h.pres.gens:
        x = h.pres.gen(gsym.name)
        if gsym.name in anticommuting:
            rep.record(c * x + x * c == h.pres.zero(), ("anticommutator", gsym.name))
        else:
            rep.record(c * x - x * c == h.pres.zero(), ("commutator", gsym.name))
    return rep


# -- inversion helper ------------------------------------------------------

def try_invert(e: Element, bound: int = 8) -> Element:
    """Invert unit + nilpotent-correction elements by a geometric series.

    Picks a term whose word consists of invertible generators, peels it off
    as the unit part u, and sums u^-1 (1 - r u^-1 + (r u^-1)^2 - ...) until
    the residual vanishes.  Verifies the two-sided inverse exactly.
    """
    pres = e.pres
    uw = None
    for w in sorted(e.terms, key=pres.order_key):
        if all(pres.by_name[x].inverse is not None for x in w):
            uw = w
            break
    if uw is None:
        raise NotInvertible("no invertible monomial term")
    v0 = pres.monomial(tuple(pres.by_name[x].inverse for x in reversed(uw)),
                       ONE / e.terms[uw])
    r = e - pres.monomial(uw, e.terms[uw])
    y = v0 * r
    power = v0  # (-y)^k * v0, k = 0
    inv = v0
    for _ in range(bound):
        if e * inv == pres.one() and inv * e == pres.one():
            return inv
        power = -(y * power)
        inv = inv + power
    if e * inv == pres.one() and inv * e == pres.one():
        return inv
    raise NotInvertible(f"series did not close within {bound} terms")


def try_invert_tensor(t: TensorElement, bound: int = 8) -> TensorElement:
    """Same geometric-series inversion inside the tensor square."""
    pres = t.pres
    uw = None
    for legs in sorted(t.terms, key=lambda ls: tuple(pres.order_key(w) for w in ls)):
        if all(pres.by_name[x].inverse is not None for w in legs for x in w):
            uw = legs
            break
    if uw is None:
        raise NotInvertible("no invertible tensor monomial term")
    one = unit(pres, t.arity, t.mode)
    v0 = TensorElement(
        pres, t.arity,
        {tuple(tuple(pres.by_name[x].inverse for x in reversed(w)) for w in uw):
         ONE / t.terms[uw]}, t.mode)
    r = t - TensorElement(pres, t.arity, {uw: t.terms[uw]}, t.mode, normalize=False)
    y = tensor_mul(v0, r)
    power = v0
    inv = v0
    for _ in range(bound):
        if tensor_mul(t, inv) == one and tensor_mul(inv, t) == one:
            return inv
        power = -tensor_mul(y, power)
        inv = inv + power
    if tensor_mul(t, inv) == one and tensor_mul(inv, t) == one:
        return inv
    raise NotInvertible(f"series did not close within {bound} terms")
