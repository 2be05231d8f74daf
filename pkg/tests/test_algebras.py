import random

from qgw.algebras import (adjoin_inverses, fa_hopf, fa_presentation,
                          fa_z2_hopf, theta_map, uq_casimirs, uq_hopf,
                          uq_omega_hopf, uq_presentation, uqgl11_hopf,
                          uqgl11_omega_hopf)
from qgw.hopfcore import (casimir_central_check, check_hopf_axioms, coproduct,
                          superize, theta_iso_check)
from qgw.ncalg import overlap_check
from qgw.scalars import ONE, qvar


def test_uq_relations():
    p = uq_presentation()
    q = qvar()
    assert p.word("K2", "K1") == p.word("K1", "K2")
    assert p.word("Xp", "K1") == p.monomial(("K1", "Xp"), ONE / q)
    assert p.word("Xp", "K2") == p.monomial(("K2", "Xp"), -q)
    assert p.word("Xp", "g") == p.monomial(("g", "Xp"), -ONE)
    assert p.word("g", "g") == p.one()
    assert not p.word("Xp", "Xp")
    comm = p.word("Xm", "Xp") - p.word("Xp", "Xm")
    want = (p.word("K1", "K2") - p.word("K1i", "K2i")) * (-ONE / (q - ONE / q))
    assert comm == want


def test_uq_graded_variant_same_rules():
    assert uq_presentation(graded=True).rules == uq_presentation().rules
    assert uq_presentation(graded=True).by_name["Xp"].degree == 1
    assert uq_presentation().by_name["Xp"].degree == 0


def test_uq_presentations_confluent():
    for graded in (False, True):
        rep = overlap_check(uq_presentation(graded))
        assert rep.ok, rep.failures[:3]


def test_casimirs_central():
    h = uq_hopf()
    c1sq, c2 = uq_casimirs()
    assert casimir_central_check(h, c1sq).ok
    assert casimir_central_check(h, c2).ok


def test_all_hopf_catalog_axioms():
    for build in (uq_hopf, uq_omega_hopf, uqgl11_hopf, uqgl11_omega_hopf):
        rep = check_hopf_axioms(build(), rng=random.Random(7))
        assert rep.ok, (build.__name__, rep.failures[:3])


def test_omega_coproduct_differs():
    h, ho = uq_hopf(), uq_omega_hopf()
    assert h.delta["Xp"].terms != ho.delta["Xp"].terms
    assert h.delta["K1"].terms == ho.delta["K1"].terms


def test_superization_matches_direct_entry():
    hs = superize(uq_hopf())
    hg = uqgl11_hopf()
    for x in hg.pres.by_name:
        assert hs.delta[x].terms == hg.delta[x].terms, x
        assert hs.antipode_map[x].terms == hg.antipode_map[x].terms, x
        assert hs.counit_map[x] == hg.counit_map[x], x


def test_fa_relations_rank_two():
    p = fa_presentation("ac")
    q = qvar()
    assert p.word("b", "a") == p.monomial(("a", "b"), q)
    assert p.word("c", "b") == p.word("b", "c")
    assert p.word("d", "b") == p.monomial(("b", "d"), -ONE / q)
    assert not p.word("b", "b")
    da = p.word("d", "a")
    assert da == p.word("a", "d") + p.monomial(("b", "c"), q - ONE / q)


def test_fa_gl11_sign():
    p = fa_presentation("gl11")
    assert p.word("c", "b") == p.monomial(("b", "c"), -ONE)


def test_fa_omega_relations():
    p = fa_presentation("omega")
    q = qvar()
    assert p.word("b", "a") == p.word("a", "b")
    assert p.word("c", "a") == p.monomial(("a", "c"), q * q)
    assert p.word("d", "a") == p.word("a", "d") \
        + p.monomial(("b", "c"), q * q - ONE)


def test_fa_inverses():
    p = fa_presentation("ac")
    assert p.word("a", "ai") == p.one()
    assert p.word("di", "d") == p.one()


def test_adjoin_inverses_no_inverse_flag():
    p = fa_presentation("ac", inverses=False)
    assert "ai" not in p.by_name
    p2 = adjoin_inverses(p)
    assert p2.word("ai", "a") == p2.one()


def test_fa_hopf_axioms():
    for key in ("ac", "gl11", "omega", "gl11omega"):
        rep = check_hopf_axioms(fa_hopf(key), rng=random.Random(5))
        assert rep.ok, (key, rep.failures[:3])


def test_fa_matrix_coproduct():
    h = fa_hopf("ac")
    d = coproduct(h.pres.gen("a"), h)
    assert d.terms == {(("a",), ("a",)): ONE, (("b",), ("c",)): ONE}


def test_theta_isomorphism_rank_two():
    col = {"a": 0, "b": 1, "c": 0, "d": 1, "ai": 0, "di": 1, "g": 0}
    for src, tgt in (("ac", "gl11"), ("omega", "gl11omega")):
        aR = superize(fa_z2_hopf(src))
        aRbar = fa_z2_hopf(tgt)
        th = theta_map(aR.pres, aRbar, col)
        rep = theta_iso_check(aR, aRbar, th)
        assert rep.ok, (src, rep.failures[:3])


def test_theta_map_images():
    aRbar = fa_z2_hopf("gl11")
    col = {"a": 0, "b": 1, "c": 0, "d": 1, "ai": 0, "di": 1, "g": 0}
    th = theta_map(fa_z2_hopf("ac").pres, aRbar, col)
    assert th["a"] == aRbar.pres.gen("a")
    assert th["b"] == aRbar.pres.word("b", "g")
    assert th["g"] == aRbar.pres.gen("g")
