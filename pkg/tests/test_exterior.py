import random
from functools import lru_cache

import pytest

from qgw.exterior import (ActionTable, NotHecke, UnknownActor, act,
                          bosonic_action, covariance_check, gl_coaction_check,
                          omega_build, super_action)
from qgw.rmatlab import catalog
from qgw.scalars import ONE, qvar


@lru_cache(maxsize=None)
def omega(*spec):
    return omega_build(catalog(*spec))


def test_not_hecke_rejected():
    with pytest.raises(NotHecke):
        omega_build(catalog("identity", 2))


def test_defining_relations_compiled():
    om = omega("std_gl", 2)
    q = qvar()
    # coordinates q-commute, forms anticommute, squares of forms vanish
    assert om.x(2) * om.x(1) == q * (om.x(1) * om.x(2))
    assert not om.dx(1) * om.dx(1)
    assert om.dx(2) * om.dx(1) == -(om.dx(1) * om.dx(2)) * (ONE / q)


def test_rank_one_edge_case():
    om = omega("std_gl", 1)
    assert not om.dx(1) * om.dx(1)
    assert om.x(1) * om.x(1)  # the coordinate relation is vacuous
    d = om.differential
    assert d(om.x(1) * om.x(1)) == (1 + qvar() ** 2) * om.x(1) * om.dx(1)


def test_differential_leibniz():
    om = omega("std_gl", 2)
    d = om.differential
    x1, x2 = om.x(1), om.x(2)
    assert d(x1 * x2) == d(x1) * x2 + x1 * d(x2)
    w = om.dx(1) * x2
    # graded rule: d(dx1 * x2) = -dx1 * dx2
    assert d(w) == -(om.dx(1) * om.dx(2))


def test_differential_squares_to_zero():
    rng = random.Random(11)
    for spec in (("std_gl", 2), ("ac",)):
        om = omega(*spec)
        d = om.differential
        names = list(om.pres.by_name)
        for _ in range(25):
            w = tuple(rng.choice(names) for _ in range(rng.randint(1, 4)))
            e = om.pres.monomial(w)
            assert not d(d(e)), w


def test_differential_wrong_algebra():
    om2, om3 = omega("std_gl", 2), omega("std_gl", 3)
    with pytest.raises(ValueError):
        om2.differential(om3.x(1))


def test_generator_actions_bosonic():
    om = omega("std_gl", 2)
    t = bosonic_action(om)
    q = qvar()
    assert act(om.x(1), "H1", t) == 2 * om.x(1)
    assert act(om.x(1), "H2", t) == om.pres.zero()
    assert act(om.dx(1), "H2", t) == 2 * om.dx(1)
    assert act(om.x(1), "Xp", t) == om.dx(1) * (ONE / q)
    assert act(om.dx(2), "Xm", t) == q * om.x(2)
    assert act(om.dx(2), "Xp", t) == om.pres.zero()


def test_generator_actions_super():
    om = omega("std_gl", 2)
    t = super_action(om)
    q = qvar()
    assert act(om.x(1), "h", t) == om.x(1)
    assert act(om.x(1), "N", t) == om.pres.zero()
    assert act(om.dx(1), "N", t) == om.dx(1)
    assert act(om.x(2), "eta", t) == om.dx(2) * (ONE / q)
    assert act(om.dx(2), "etap", t) == q * om.x(2)


def test_unknown_actor():
    om = omega("std_gl", 2)
    with pytest.raises(UnknownActor):
        act(om.x(1), "H3", bosonic_action(om))


def test_weight_actors_are_derivations():
    om = omega("std_gl", 2)
    t = bosonic_action(om)
    e = om.x(1) * om.dx(2) * om.x(2)
    assert act(e, "H1", t) == 4 * e
    assert act(e, "H2", t) == 2 * e


def test_covariance_exhaustive():
    for spec in (("std_gl", 2), ("std_gl", 3), ("ac",)):
        om = omega(*spec)
        for table in (bosonic_action(om), super_action(om)):
            rep = covariance_check(table)
            assert rep.ok, (spec, table.tag, rep.failures[:3])


def test_covariance_detects_corruption():
    om = omega("std_gl", 2)
    t = bosonic_action(om)
    bad = ActionTable(om, t.tag, {k: dict(v) for k, v in t.entries.items()})
    bad.entries["Xp"] = dict(bad.entries["Xp"])
    bad.entries["Xp"]["gen"] = dict(bad.entries["Xp"]["gen"])
    bad.entries["Xp"]["gen"]["x1"] = om.dx(1)  # drops the 1/q factor
    rep = covariance_check(bad)
    assert not rep.ok


def test_actions_agree_on_even_elements():
    # on even words the Koszul signs drop out and the super actors match
    # the bosonic ones under the dictionary h=(H1+H2)/2, eta=Xp, etap=Xm/q^?
    om = omega("std_gl", 2)
    bos, sup = bosonic_action(om), super_action(om)
    rng = random.Random(5)
    names = list(om.pres.by_name)
    half = ONE / 2
    found = 0
    for _ in range(40):
        w = tuple(rng.choice(names) for _ in range(rng.randint(0, 4)))
        if om.pres.degree(w):
            continue
        e = om.pres.monomial(w)
        found += 1
        lhs = act(e, "h", sup)
        rhs = (act(e, "H1", bos) + act(e, "H2", bos)) * half
        assert lhs == rhs, w
        assert act(e, "eta", sup) == act(e, "Xp", bos), w
        assert act(e, "etap", sup) == act(e, "Xm", bos), w
    assert found > 5


def test_gl_coaction():
    for spec in (("std_gl", 2), ("std_gl", 3), ("ac",)):
        rep = gl_coaction_check(omega(*spec))
        assert rep.ok, (spec, rep.failures[:3])


def test_action_wrong_algebra():
    om2, om3 = omega("std_gl", 2), omega("std_gl", 3)
    with pytest.raises(ValueError):
        act(om3.x(1), "H1", bosonic_action(om2))
