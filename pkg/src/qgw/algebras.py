"""Built-in catalog of presentations and Hopf data.

One enveloping-type algebra in two Hopf guises (standard and twisted), its
super counterparts, and the family of 2x2 matrix function algebras that the
verification suites exercise.  Exponential generators never appear: the
catalog works with the group-likes K1 = q^(H1/2), K2 = g q^(H2/2) and the
involution g, in which every structure map of interest is a finite word.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .gtensor import BOSONIC, SUPER, TensorElement
from .hopfcore import HopfData, grouplike_data, try_invert, try_invert_tensor, z2_extend
from .ncalg import GeneratorSymbol, Presentation, compile_relations
from .scalars import ONE, Scalar, qvar

HALF = Scalar(Fraction(1, 2))


# -- enveloping side -------------------------------------------------------

def uq_presentation(graded: bool = False) -> Presentation:
    """K1, K2 invertible, g involutive, X+ and X- nilpotent.

    Bosonic by default; graded=True assigns odd degree to X+- (the same
    rules, reread as a superalgebra).
    """
    return _uq_presentation(bool(graded))


@lru_cache(maxsize=None)
def _uq_presentation(graded: bool) -> Presentation:
    q = qvar()
    d = 1 if graded else 0
    gens = [
        GeneratorSymbol("K1i", inverse="K1"),
        GeneratorSymbol("K1", inverse="K1i"),
        GeneratorSymbol("K2i", inverse="K2"),
        GeneratorSymbol("K2", inverse="K2i"),
        GeneratorSymbol("g", inverse="g"),
        GeneratorSymbol("Xp", degree=d, nilpotent=True),
        GeneratorSymbol("Xm", degree=d, nilpotent=True),
    ]
    rel = []
    ks = ["K1i", "K1", "K2i", "K2"]
    for hi in ["K2i", "K2"]:
        for lo in ["K1i", "K1"]:
            rel.append(({(hi, lo): ONE}, {(lo, hi): ONE}))
    for k in ks:
        rel.append(({("g", k): ONE}, {(k, "g"): ONE}))
    comm = {("Xp", "K1"): ONE / q, ("Xp", "K1i"): q,
            ("Xm", "K1"): q, ("Xm", "K1i"): ONE / q,
            ("Xp", "K2"): -q, ("Xp", "K2i"): -ONE / q,
            ("Xm", "K2"): -ONE / q, ("Xm", "K2i"): -q}
    for (x, k), c in comm.items():
        rel.append(({(x, k): ONE}, {(k, x): c}))
    for x in ["Xp", "Xm"]:
        rel.append(({(x, "g"): ONE}, {("g", x): -ONE}))
    c = ONE / (q - ONE / q)
    rel.append(({("Xm", "Xp"): ONE},
                {("Xp", "Xm"): ONE, ("K1", "K2"): -c, ("K1i", "K2i"): c}))
    name = "uq-super" if graded else "uq"
    return compile_relations(gens, rel, name=name, sample_budget=60)


def _tens(pres, terms, mode):
    return TensorElement(pres, 2, terms, mode)


def _uq_grouplike_part(pres, mode):
    return grouplike_data(pres, ["K1i", "K1", "K2i", "K2", "g"], mode)


@lru_cache(maxsize=None)
def uq_hopf() -> HopfData:
    """The standard Hopf structure on the catalog enveloping algebra."""
    pres = uq_presentation()
    q = qvar()
    delta, eps, spo = _uq_grouplike_part(pres, BOSONIC)
    delta["Xp"] = _tens(pres, {(("Xp",), ("K1",)): ONE, (("K2i",), ("Xp",)): ONE}, BOSONIC)
    delta["Xm"] = _tens(pres, {(("Xm",), ("K2",)): ONE, (("K1i",), ("Xm",)): ONE}, BOSONIC)
    eps["Xp"] = eps["Xm"] = Scalar(0)
    spo["Xp"] = pres.monomial(("K1i", "K2", "Xp"), -q)
    spo["Xm"] = pres.monomial(("K1", "K2i", "Xm"), q)
    return HopfData(pres, delta, eps, spo, mode=BOSONIC, g="g", name="uq")


@lru_cache(maxsize=None)
def uq_omega_hopf() -> HopfData:
    """Twisted coproduct and antipode on the same algebra."""
    pres = uq_presentation()
    q = qvar()
    delta, eps, spo = _uq_grouplike_part(pres, BOSONIC)
    delta["Xp"] = _tens(pres, {(("Xp",), ("K2i", "g")): ONE,
                               (("K2i",), ("Xp",)): ONE}, BOSONIC)
    delta["Xm"] = _tens(pres, {(("Xm",), ("K1", "K2", "K2", "g")): ONE,
                               (("K1i",), ("Xm",)): ONE}, BOSONIC)
    eps["Xp"] = eps["Xm"] = Scalar(0)
    spo["Xp"] = pres.monomial(("K2", "K2", "g", "Xp"), -q)
    spo["Xm"] = pres.monomial(("K2i", "K2i", "g", "Xm"), q)
    return HopfData(pres, delta, eps, spo, mode=BOSONIC, g="g", name="uq-omega")


@lru_cache(maxsize=None)
def uqgl11_hopf() -> HopfData:
    """The super-Hopf algebra on the graded presentation, entered directly.

    In the even/odd generator dictionary qh = K1 K2 g, qN = g K2, the odd
    pair is X+ and X- g; the coproduct below is the standard super one
    written back in the K generators.
    """
    pres = uq_presentation(graded=True)
    q = qvar()
    delta, eps, spo = _uq_grouplike_part(pres, SUPER)
    delta["Xp"] = _tens(pres, {(("Xp",), ("K1",)): ONE,
                               (("K2i", "g"), ("Xp",)): ONE}, SUPER)
    delta["Xm"] = _tens(pres, {(("Xm",), ("K2",)): ONE,
                               (("K1i", "g"), ("Xm",)): ONE}, SUPER)
    eps["Xp"] = eps["Xm"] = Scalar(0)
    spo["Xp"] = pres.monomial(("K1i", "K2", "g", "Xp"), -q)
    spo["Xm"] = pres.monomial(("K1", "K2i", "g", "Xm"), q)
    return HopfData(pres, delta, eps, spo, mode=SUPER, g="g", name="uqgl11")


@lru_cache(maxsize=None)
def uqgl11_omega_hopf() -> HopfData:
    """Twisted super coproduct and antipode on the graded presentation."""
    pres = uq_presentation(graded=True)
    q = qvar()
    delta, eps, spo = _uq_grouplike_part(pres, SUPER)
    delta["Xp"] = _tens(pres, {(("Xp",), ("K2i", "g")): ONE,
                               (("K2i", "g"), ("Xp",)): ONE}, SUPER)
    delta["Xm"] = _tens(pres, {(("Xm",), ("K1", "K2", "K2", "g")): ONE,
                               (("K1i", "g"), ("Xm",)): ONE}, SUPER)
    eps["Xp"] = eps["Xm"] = Scalar(0)
    spo["Xp"] = pres.monomial(("K2", "K2", "Xp"), -q)
    spo["Xm"] = pres.monomial(("K2i", "K2i", "Xm"), q)
    return HopfData(pres, delta, eps, spo, mode=SUPER, g="g", name="uqgl11-omega")


def uq_casimirs(pres=None):
    """The group-like square (K1 K2)^2 and the quadratic central element."""
    pres = pres or uq_presentation()
    q = qvar()
    c1sq = pres.monomial(("K1", "K1", "K2", "K2"))
    c2 = pres.monomial(("Xp", "Xm")) \
        + pres.monomial(("K1", "K2"), -HALF / (q - ONE / q)) \
        + pres.monomial(("K1i", "K2i"), HALF / (q - ONE / q))
    return c1sq, c2


# -- function algebra side -------------------------------------------------

def _fa_coeffs(key):
    q = qvar()
    table = {
        # p_ba, p_ca, r_db, r_dc, s, t, odd b/c
        "ac":         (q, q, -ONE / q, -ONE / q, ONE, q - ONE / q, False),
        # The t coefficient here is the one forced by the matrix super
        # coproduct (and by transporting the bosonic algebra through the
        # involution); literature sometimes quotes it with the opposite
        # sign, which differs by the odd-odd reordering of the bc term.
        "gl11":       (q, q, ONE / q, ONE / q, -ONE, ONE / q - q, True),
        "omega":      (ONE, q ** 2, -ONE, -ONE / q ** 2, q ** 2, q ** 2 - ONE, False),
        "gl11omega":  (ONE, q ** 2, ONE, ONE / q ** 2, -q ** 2, ONE - q ** 2, True),
    }
    if key not in table:
        raise KeyError(f"unknown function algebra {key!r}")
    return table[key]


@lru_cache(maxsize=None)
def fa_presentation(key: str, inverses: bool = True) -> Presentation:
    """2x2 quantum matrix algebra from the six commutation coefficients.

    Relations: ba = p_ba ab, ca = p_ca ac, db = r_db bd, dc = r_dc cd,
    cb = s bc, da - ad = t bc, b^2 = c^2 = 0.  With inverses=True the
    generators ai, di are adjoined (see adjoin_inverses for the induced
    rules).
    """
    p_ba, p_ca, r_db, r_dc, s, t, odd = _fa_coeffs(key)
    d = 1 if odd else 0
    gens = [
        GeneratorSymbol("a"),
        GeneratorSymbol("b", degree=d, nilpotent=True),
        GeneratorSymbol("c", degree=d, nilpotent=True),
        GeneratorSymbol("d"),
    ]
    rel = [
        ({("b", "a"): ONE}, {("a", "b"): p_ba}),
        ({("c", "a"): ONE}, {("a", "c"): p_ca}),
        ({("d", "b"): ONE}, {("b", "d"): r_db}),
        ({("d", "c"): ONE}, {("c", "d"): r_dc}),
        ({("c", "b"): ONE}, {("b", "c"): s}),
        ({("d", "a"): ONE}, {("a", "d"): ONE, ("b", "c"): t}),
    ]
    pres = compile_relations(gens, rel, name=f"fa-{key}", sample_budget=60)
    if inverses:
        pres = adjoin_inverses(pres)
    return pres


def adjoin_inverses(pres: Presentation) -> Presentation:
    """Adjoin ai, di to a 2x2 quantum matrix presentation.

    The q-commutation rules for the inverses follow by conjugating the
    defining ones; the three rules involving both d-side and a-side
    inverses pick up nilpotent correction terms that grow word length, so
    they are flagged unoriented (termination is empirical, certified by the
    overlap battery: every correction carries a bc factor and bc squares
    to zero).
    """
    rules = pres.rules
    p_ba = rules[("b", "a")][("a", "b")]
    p_ca = rules[("c", "a")][("a", "c")]
    r_db = rules[("d", "b")][("b", "d")]
    r_dc = rules[("d", "c")][("c", "d")]
    t = rules[("d", "a")].get(("b", "c"), Scalar(0))
    old = {g.name: g for g in pres.gens}
    gens = [
        GeneratorSymbol("ai", inverse="a"),
        GeneratorSymbol("a", inverse="ai"),
        old["b"], old["c"],
        GeneratorSymbol("di", inverse="d"),
        GeneratorSymbol("d", inverse="di"),
    ]
    out = Presentation(gens, name=pres.name + "-inv", step_cap=pres.step_cap)
    for lhs, rhs in rules.items():
        if lhs in out.rules:
            continue
        out.add_rule(lhs, rhs)
    out.add_rule(("b", "ai"), {("ai", "b"): ONE / p_ba})
    out.add_rule(("c", "ai"), {("ai", "c"): ONE / p_ca})
    out.add_rule(("di", "b"), {("b", "di"): ONE / r_db})
    out.add_rule(("di", "c"), {("c", "di"): ONE / r_dc})
    out.add_rule(("d", "ai"),
                 {("ai", "d"): ONE, ("ai", "ai", "b", "c"): -t / (p_ba * p_ca)},
                 unoriented=True)
    out.add_rule(("di", "a"),
                 {("a", "di"): ONE, ("b", "c", "di", "di"): -t / (r_db * r_dc)},
                 unoriented=True)
    out.add_rule(("di", "ai"),
                 {("ai", "di"): ONE,
                  ("ai", "ai", "b", "c", "di", "di"): t / (p_ba * p_ca * r_db * r_dc)},
                 unoriented=True)
    return out


@lru_cache(maxsize=None)
def fa_hopf(key: str) -> HopfData:
    """Matrix coproduct Hopf data on fa_presentation(key, inverses=True)."""
    pres = fa_presentation(key)
    mode = SUPER if pres.by_name["b"].degree else BOSONIC
    delta = {
        "a": _tens(pres, {(("a",), ("a",)): ONE, (("b",), ("c",)): ONE}, mode),
        "b": _tens(pres, {(("a",), ("b",)): ONE, (("b",), ("d",)): ONE}, mode),
        "c": _tens(pres, {(("c",), ("a",)): ONE, (("d",), ("c",)): ONE}, mode),
        "d": _tens(pres, {(("c",), ("b",)): ONE, (("d",), ("d",)): ONE}, mode),
    }
    delta["ai"] = try_invert_tensor(delta["a"])
    delta["di"] = try_invert_tensor(delta["d"])
    eps = {"a": ONE, "d": ONE, "ai": ONE, "di": ONE, "b": Scalar(0), "c": Scalar(0)}
    spo = {
        "a": pres.word("ai") + pres.word("ai", "b", "di", "c", "ai"),
        "b": -pres.word("ai", "b", "di"),
        "c": -pres.word("di", "c", "ai"),
        "d": pres.word("di") + pres.word("di", "c", "ai", "b", "di"),
    }
    spo["ai"] = try_invert(spo["a"])
    spo["di"] = try_invert(spo["d"])
    return HopfData(pres, delta, eps, spo, mode=mode, name=f"fa-{key}")


@lru_cache(maxsize=None)
def fa_z2_hopf(key: str) -> HopfData:
    """Z2-extension of fa_hopf(key) with the column-grading sign action."""
    h = fa_hopf(key)
    parity = {"a": 0, "ai": 0, "b": 1, "c": 1, "d": 0, "di": 0}
    return z2_extend(h, parity)


def theta_map(src_pres: Presentation, tgt: HopfData, col_parity: dict) -> dict:
    """Generator images x -> x g^(column parity) for the twist isomorphism.

    src_pres and the target presentation must share generator names; the
    distinguished g of the target maps to itself and inverse generators to
    the inverses of their partners' images.
    """
    images = {}
    gname = tgt.g
    for gs in src_pres.gens:
        n = gs.name
        if n == gname:
            images[n] = tgt.pres.gen(gname)
        elif n in col_parity:
            e = tgt.pres.gen(n)
            if col_parity[n] % 2:
                e = e * tgt.pres.gen(gname)
            images[n] = e
    for gs in src_pres.gens:
        if gs.name not in images and gs.inverse in images:
            images[gs.name] = try_invert(images[gs.inverse])
    return images
