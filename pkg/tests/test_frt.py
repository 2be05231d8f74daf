import pytest

from qgw import smat
from qgw.algebras import fa_hopf, fa_presentation, uq_presentation
from qgw.frt import (NoInverses, OperatorMatrix, ansatz, antipode_matrix,
                     antipode_matrix_check, ar_hopf, build_ar,
                     duality_pairing_check, frt_relation_check, matrix_image,
                     matrix_coproduct_check, pairing_matrices, qdet,
                     qdet_check, qdet_multiplicative_check)
from qgw.rmatlab import catalog
from qgw.scalars import ONE, qvar


def test_ansatz_families_satisfy_exchange_relations():
    cases = (("standard", ("ac",)), ("omega", ("omega",)),
             ("super", ("super_ac",)), ("super-omega", ("super_omega",)))
    for which, spec in cases:
        R = catalog(*spec)
        plus, minus = ansatz(which)
        for L1, L2 in ((plus, plus), (plus, minus), (minus, minus)):
            rep = frt_relation_check(R, L1, L2)
            assert rep.checked == 16
            assert rep.ok, (which, rep.failures[:2])


def test_ansatz_unknown():
    with pytest.raises(KeyError):
        ansatz("nope")


def test_frt_negative_wrong_matrix():
    plus, minus = ansatz("standard")
    rep = frt_relation_check(catalog("omega"), plus, minus)
    assert not rep.ok


def test_build_ar_recovers_catalog_relations():
    p = build_ar(catalog("ac"), names=[["a", "b"], ["c", "d"]])
    ref = fa_presentation("ac", inverses=False)
    assert p.rules == ref.rules


def test_build_ar_super_grading():
    p = build_ar(catalog("super_ac"), names=[["a", "b"], ["c", "d"]])
    assert p.by_name["b"].degree == 1
    assert p.by_name["a"].degree == 0
    ref = fa_presentation("gl11", inverses=False)
    assert p.rules == ref.rules


def test_matrix_coproduct():
    h = fa_hopf("ac")
    t = OperatorMatrix(h.pres, [[h.pres.gen("a"), h.pres.gen("b")],
                                [h.pres.gen("c"), h.pres.gen("d")]], label="t")
    assert matrix_coproduct_check(t, h).ok


def test_antipode_matrix_two_sided_inverse():
    for key, grading in (("ac", None), ("gl11", (0, 1))):
        pres = fa_presentation(key)
        t = OperatorMatrix(pres, [[pres.gen("a"), pres.gen("b")],
                                  [pres.gen("c"), pres.gen("d")]], label="t",
                           grading=grading)
        st = antipode_matrix(t)
        assert antipode_matrix_check(t, st).ok


def test_antipode_matrix_needs_invertible_diagonal():
    pres = fa_presentation("ac", inverses=False)
    t = OperatorMatrix(pres, [[pres.gen("a"), pres.gen("b")],
                              [pres.gen("c"), pres.gen("d")]], label="t")
    with pytest.raises(NoInverses):
        antipode_matrix(t)


def test_qdet_rank_two():
    pres = fa_presentation("ac")
    t = OperatorMatrix(pres, [[pres.gen("a"), pres.gen("b")],
                              [pres.gen("c"), pres.gen("d")]], label="t")
    det = qdet(t)
    # a d^-1 - b d^-1 c d^-1, in normal form
    q = qvar()
    assert det == pres.word("a", "di") + pres.monomial(("b", "c", "di", "di"), q)
    # multiplying back by d^2 gives the quadratic combination
    assert det * pres.word("d", "d") == pres.word("a", "d") \
        + pres.monomial(("b", "c"), q)


def test_qdet_check_families():
    assert qdet_check(fa_hopf("ac")).ok
    assert qdet_check(fa_hopf("gl11")).ok
    assert qdet_check(fa_hopf("gl11omega")).ok


def test_qdet_not_central_bosonic():
    pres = fa_presentation("ac")
    t = OperatorMatrix(pres, [[pres.gen("a"), pres.gen("b")],
                              [pres.gen("c"), pres.gen("d")]], label="t")
    det = qdet(t)
    b = pres.gen("b")
    assert det * b != b * det
    assert det * b + b * det == pres.zero()


def test_qdet_multiplicative():
    assert qdet_multiplicative_check("ac").ok


def test_matrix_image():
    pres = uq_presentation()
    q = qvar()
    images = {"K1": [[q, 0], [0, ONE]], "K2": [[ONE, 0], [0, -q]]}
    img = matrix_image(pres.word("K1", "K2"), images)
    assert smat.meq(img, [[q, 0], [0, -q]])


def test_duality_pairing():
    for spec in (("ac",), ("super_ac",), ("omega",), ("super_omega",)):
        rep = duality_pairing_check(catalog(*spec))
        assert rep.ok, (spec, rep.failures[:2])


def test_pairing_matrices_layout():
    plus, minus = pairing_matrices(catalog("ac"))
    q = qvar()
    # plus[k][l] is the 2x2 scalar matrix of the (k+1, l+1) entry
    assert len(plus) == 2 and len(plus[0][0]) == 2
    assert plus[0][0][0][0] == q
    assert minus[0][0][0][0] == ONE / q


def test_ar_hopf_bialgebra():
    h = ar_hopf(catalog("ac"))
    from qgw.hopfcore import coproduct
    d = coproduct(h.pres.gen("t11"), h)
    assert d.terms == {(("t11",), ("t11",)): ONE, (("t12",), ("t21",)): ONE}
    assert h.antipode_map is None
