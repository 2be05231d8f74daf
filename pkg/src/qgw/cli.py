"""Named verification suites with a command line front end.

Every headline identity of the workbench gets a stable check id grouped
into suites (sec2..sec5, engine).  Negative checks are first class: their
expected verdict is "fail-of-property" and the runner treats the failure
as the correct outcome.  Reports are deterministic for a fixed seed and
can be emitted as text or JSON.

Exit codes: 0 all expected verdicts met, 1 at least one mismatch, 2 an
engine error (unexpected exception) occurred.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from dataclasses import dataclass

from . import algebras, exterior, frt, reps, rmatlab, smat
from .hopfcore import (casimir_central_check, check_hopf_axioms, coproduct,
                       superize, theta_iso_check, z2_extend)
from .gtensor import TensorElement
from .ncalg import STATS, overlap_check
from .report import CheckReport
from .rmatlab import catalog, hecke_check, qybe_check, sybe_check
from .scalars import ONE, Scalar, qvar, scalar_eval, sign_pow


class UnknownCheck(KeyError):
    pass


@dataclass
class CheckDescriptor:
    id: str
    suite: str
    anchor: str
    fn: object
    expected: str = "pass"  # or "fail-of-property"
    params: dict = None


# -- small helpers ---------------------------------------------------------

def _bool_report(name, pairs):
    rep = CheckReport(name)
    for ok, what in pairs:
        rep.record(ok, what)
    return rep


def _ac_at(t: Scalar) -> list:
    """The rank two matrix solution with q replaced by an arbitrary unit t."""
    z = Scalar(0)
    return [[t, z, z, z],
            [z, ONE, t - ONE / t, z],
            [z, z, ONE, z],
            [z, z, z, -ONE / t]]


def _label_grid():
    return [(m1, m2) for m1 in (0, 1, -1, 2) for m2 in (0, 1, -1, 2)
            if m1 + m2 != 0]


def _ctx_labels(ctx, default):
    labs = ctx.get("labels")
    if not labs:
        return default
    pairs = [tuple(labs[k:k + 2]) for k in range(0, len(labs), 2)]
    return pairs


# -- section 2 -------------------------------------------------------------

def _chk_hopf_axioms(ctx):
    rep = check_hopf_axioms(algebras.uq_hopf(), rng=ctx["rng"])
    rep.merge(check_hopf_axioms(algebras.uqgl11_hopf(), rng=ctx["rng"]))
    return rep


def _chk_qybe(ctx):
    R = catalog("ac")
    return _bool_report("qybe-ac", [
        (qybe_check(R), "qybe"),
        (hecke_check(R), "hecke"),
        (rmatlab.hecke_identity_check(R), "hecke-identity"),
    ])


def _chk_quasitriangularity(ctx):
    rng = ctx["rng"]
    grid = _label_grid()
    rep = CheckReport("quasitriangularity")
    triples = [tuple(rng.choice(grid) for _ in range(3)) for _ in range(3)]
    for tri in triples:
        rep.merge(reps.quasitriangularity_check(*tri, which="standard"))
    rep.merge(reps.quasitriangularity_check(
        rng.choice(grid), rng.choice(grid), rng.choice(grid), which="super"))
    return rep


def _chk_casimirs(ctx):
    h = algebras.uq_hopf()
    c1sq, c2 = algebras.uq_casimirs()
    rep = casimir_central_check(h, c1sq)
    rep.merge(casimir_central_check(h, c2))
    return rep


def _chk_ribbon(ctx):
    rep = CheckReport("ribbon")
    for lab in _ctx_labels(ctx, [(1, 0), (2, 1), (1, 1), (0, 1)]):
        rep.merge(reps.ribbon_check(lab))
    return rep


def _chk_canonical(ctx):
    q = qvar()
    rep = CheckReport("canonical")
    rep.record(reps.universal_r_eval((1, 0), (1, 0)) == catalog("ac"),
               "fundamental")
    for m1, m2 in _ctx_labels(ctx, [(1, 0), (2, 1), (1, 1), (0, 1)]):
        t = sign_pow(m2) * q ** (m1 + m2)
        pref = q ** ((m1 + m2) * (m1 - m2 - 1))
        want = smat.smul(pref, _ac_at(t))
        got = reps.universal_r_eval((m1, m2), (m1, m2)).m
        rep.record(smat.meq(got, want), ("reparametrized", m1, m2))
    return rep


def _frt_triple(R, plus, minus, name):
    rep = CheckReport(name)
    rep.merge(frt.frt_relation_check(R, plus, plus))
    rep.merge(frt.frt_relation_check(R, plus, minus))
    rep.merge(frt.frt_relation_check(R, minus, minus))
    return rep


def _chk_frt(ctx):
    return _frt_triple(catalog("ac"), *frt.ansatz("standard"), "frt-standard")


def _chk_tensor_decompose(ctx):
    out1, out2, T = reps.tensor_decompose()
    return _bool_report("tensor-decompose", [(T is not None, "intertwiner")])


def _chk_duality(ctx):
    return frt.duality_pairing_check(catalog("ac"))


# -- section 3 -------------------------------------------------------------

def _chk_superizable(ctx):
    R = catalog("ac")
    gradings = rmatlab.superizable_grading_search(R)
    Rbar = rmatlab.superize_r(R, (0, 1))
    return _bool_report("superizable", [
        ((0, 1) in gradings, "grading"),
        (sybe_check(Rbar), "sybe"),
        (Rbar == catalog("super_ac"), "entries"),
    ])


def _hopf_match(a, b, name):
    """Same generators, same structure maps, compared as term dictionaries."""
    rep = CheckReport(name)
    for x in a.pres.by_name:
        rep.record(a.delta[x].terms == b.delta[x].terms, ("delta", x))
        rep.record(a.counit_map[x] == b.counit_map[x], ("counit", x))
        rep.record(a.antipode_map[x].terms == b.antipode_map[x].terms,
                   ("antipode", x))
    return rep


def _chk_superization(ctx):
    rep = _hopf_match(superize(algebras.uq_hopf()), algebras.uqgl11_hopf(),
                      "superization")
    rep.merge(_hopf_match(superize(algebras.uq_omega_hopf()),
                          algebras.uqgl11_omega_hopf(), "superization-omega"))
    return rep


def _chk_super_r(ctx):
    q = qvar()
    got = reps.universal_r_eval((1, 0), (1, 0), which="super")
    want = smat.smul(ONE / q, catalog("super_ac").m)
    return _bool_report("super-r", [(smat.meq(got.m, want), "entries")])


def _chk_super_frt(ctx):
    return _frt_triple(catalog("super_ac"), *frt.ansatz("super"), "frt-super")


def _chk_super_duality(ctx):
    return frt.duality_pairing_check(catalog("super_ac"))


# -- section 4 -------------------------------------------------------------

def _chk_glnm_ybe(ctx):
    rep = CheckReport("glnm-ybe")
    for n, m in ((1, 1), (2, 1), (1, 2), (3, 1), (2, 2), (1, 3)):
        rep.record(qybe_check(catalog("glnm", n, m)), ("qybe", n, m))
        rep.record(sybe_check(catalog("super_glnm", n, m)), ("sybe", n, m))
    return rep


def _theta_2x2(src_key, tgt_key):
    aR = superize(algebras.fa_z2_hopf(src_key))
    aRbar = algebras.fa_z2_hopf(tgt_key)
    col = {"a": 0, "b": 1, "c": 0, "d": 1, "ai": 0, "di": 1, "g": 0}
    return theta_iso_check(aR, aRbar, algebras.theta_map(aR.pres, aRbar, col))


def _chk_theta(ctx):
    rep = _theta_2x2("ac", "gl11")
    rep.merge(_theta_2x2("omega", "gl11omega"))
    p = (0, 0, 1)
    parity = {f"t{i}{j}": (p[i - 1] + p[j - 1]) % 2
              for i in range(1, 4) for j in range(1, 4)}
    col = {f"t{i}{j}": p[j - 1] for i in range(1, 4) for j in range(1, 4)}
    col["g"] = 0
    aR = superize(z2_extend(frt.ar_hopf(catalog("glnm", 2, 1)), parity))
    aRbar = z2_extend(frt.ar_hopf(catalog("super_glnm", 2, 1)), parity)
    rep.merge(theta_iso_check(aR, aRbar,
                              algebras.theta_map(aR.pres, aRbar, col)))
    return rep


def _det_element():
    return algebras.uq_presentation().word("K1", "K2")


def _chk_determinant(ctx):
    h = algebras.uq_hopf()
    pres = h.pres
    q = qvar()
    D = _det_element()
    Dsq = D * D
    rep = casimir_central_check(h, D, anticommuting=("Xp", "Xm"))
    rep.merge(casimir_central_check(h, Dsq))
    want = TensorElement(pres, 2, {(("K1", "K2"), ("K1", "K2")): ONE}, h.mode)
    rep.record(coproduct(D, h) == want, "grouplike")
    for lab, val in (((1, 0), q * q), ((-1, 0), ONE / (q * q))):
        img = reps.rep_build(lab).evaluate(Dsq)
        rep.record(smat.meq(img, smat.smul(val, smat.eye(2))),
                   ("square-image", lab))
    return rep


def _chk_determinant_noncentral(ctx):
    return casimir_central_check(algebras.uq_hopf(), _det_element())


def _chk_superdeterminant(ctx):
    rep = frt.qdet_check(algebras.fa_hopf("gl11"))
    rep.merge(frt.qdet_check(algebras.fa_hopf("gl11omega")))
    return rep


# -- section 5 -------------------------------------------------------------

def _chk_hecke(ctx):
    pairs = []
    for spec in (("ac",), ("omega",), ("std_gl", 2), ("std_gl", 3)):
        pairs.append((hecke_check(catalog(*spec)), spec))
    pairs.append((rmatlab.hecke_identity_check(catalog("omega")),
                  "omega-identity"))
    return _bool_report("hecke", pairs)


def _chk_twisting(ctx):
    rep = reps.twist_check((1, 0), (2, 1), (1, 1), super_side=False)
    rep.record(reps.universal_r_eval((1, 0), (1, 0), which="omega")
               == catalog("omega"), "closed-form")
    return rep


def _chk_super_twisting(ctx):
    return reps.twist_check((1, 0), (2, 1), (1, 1), super_side=True)


def _chk_omega_hopf(ctx):
    rep = check_hopf_axioms(algebras.uq_omega_hopf(), rng=ctx["rng"])
    rep.merge(check_hopf_axioms(algebras.uqgl11_omega_hopf(), rng=ctx["rng"]))
    return rep


def _chk_omega_frt(ctx):
    rep = _frt_triple(catalog("omega"), *frt.ansatz("omega"), "frt-omega")
    rep.merge(_frt_triple(catalog("super_omega"), *frt.ansatz("super-omega"),
                          "frt-super-omega"))
    return rep


def _chk_exterior(ctx):
    rng = ctx["rng"]
    rep = CheckReport("exterior")
    for spec in (("std_gl", 2), ("std_gl", 3), ("ac",)):
        om = exterior.omega_build(catalog(*spec))
        rep.merge(exterior.covariance_check(exterior.bosonic_action(om)))
        rep.merge(exterior.covariance_check(exterior.super_action(om)))
        rep.merge(exterior.gl_coaction_check(om))
        names = list(om.pres.by_name)
        for _ in range(20):
            w = tuple(rng.choice(names) for _ in range(rng.randint(1, 4)))
            e = om.pres.monomial(w)
            rep.record(not om.differential(om.differential(e)), ("d2", w))
    return rep


# -- engine ----------------------------------------------------------------

def _catalog_presentations():
    yield algebras.uq_presentation()
    yield algebras.uq_presentation(graded=True)
    for key in ("ac", "gl11", "omega", "gl11omega"):
        yield algebras.fa_presentation(key)
    yield frt.build_ar(catalog("ac"))


def _chk_overlaps(ctx):
    rep = CheckReport("overlaps")
    for pres in _catalog_presentations():
        r = overlap_check(pres)
        rep.record(r.ok, (pres.name, r.failures[:2]))
    return rep


def _chk_associativity(ctx):
    rep = CheckReport("associativity")
    probes = ctx.get("probes", 60)
    for pres in _catalog_presentations():
        r = overlap_check(pres, sample_budget=probes, rng=ctx["rng"])
        rep.record(r.ok, (pres.name, r.failures[:2]))
    return rep


def _num_mat(m, qc):
    return [[scalar_eval(x, {"q": qc}) for x in row] for row in m]


def _num_mmul(a, b):
    n = len(a)
    return [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)]
            for i in range(n)]


def _chk_numeric(ctx):
    """Re-confirm two exact identities in floating point at a complex q."""
    rng = ctx["rng"]
    qc = ctx.get("q_spot") or complex(0.8 + 0.3 * rng.random(),
                                      0.2 + 0.3 * rng.random())
    rep = CheckReport("numeric-spot")
    got = _num_mat(reps.universal_r_eval((1, 0), (1, 0)).m, qc)
    want = _num_mat(catalog("ac").m, qc)
    err = max(abs(x - y) for rg, rw in zip(got, want) for x, y in zip(rg, rw))
    rep.record(err < 1e-9, ("canonical", qc, err))
    for nm in ("ac", "omega"):
        R = catalog(nm)
        legs = {pair: _num_mat(rmatlab._embed3(R, pair), qc)
                for pair in ((0, 1), (0, 2), (1, 2))}
        lhs = _num_mmul(_num_mmul(legs[(0, 1)], legs[(0, 2)]), legs[(1, 2)])
        rhs = _num_mmul(_num_mmul(legs[(1, 2)], legs[(0, 2)]), legs[(0, 1)])
        err = max(abs(x - y) for ra, rb in zip(lhs, rhs)
                  for x, y in zip(ra, rb))
        rep.record(err < 1e-9, ("qybe", nm, qc, err))
    return rep


# -- catalog ---------------------------------------------------------------

CHECKS = [
    CheckDescriptor("def2.1/hopf-axioms", "sec2",
                    "the twisted enveloping algebras satisfy the Hopf axioms",
                    _chk_hopf_axioms),
    CheckDescriptor("sec2/qybe", "sec2",
                    "the rank two matrix solution satisfies the QYBE",
                    _chk_qybe),
    CheckDescriptor("thm2.2/quasitriangularity", "sec2",
                    "hexagon and intertwining identities in tensor triples",
                    _chk_quasitriangularity),
    CheckDescriptor("sec2/casimirs", "sec2",
                    "the quadratic and group-like-square elements are central",
                    _chk_casimirs),
    CheckDescriptor("prop2.4/ribbon", "sec2",
                    "is a ribbon Hopf algebra",
                    _chk_ribbon),
    CheckDescriptor("prop2.5/canonical", "sec2",
                    "the fundamental representation recovers the matrix "
                    "solution, up to reparametrization for general labels",
                    _chk_canonical),
    CheckDescriptor("sec2/frt", "sec2",
                    "generator matrices satisfy the exchange relations",
                    _chk_frt),
    CheckDescriptor("sec2/tensor-decomposition", "sec2",
                    "a product of two irreducibles splits into two",
                    _chk_tensor_decompose),
    CheckDescriptor("sec2/duality", "sec2",
                    "duality pairing between matrix and enveloping sides",
                    _chk_duality),
    CheckDescriptor("prop3.1/superizable", "sec3",
                    "the rank two solution is superizable with p=(0,1)",
                    _chk_superizable),
    CheckDescriptor("prop3.2/superization", "sec3",
                    "superization reproduces the super quantum group",
                    _chk_superization),
    CheckDescriptor("sec3/super-r", "sec3",
                    "super universal R-matrix in the fundamental "
                    "representation, up to the central normalization",
                    _chk_super_r),
    CheckDescriptor("sec3/super-frt", "sec3",
                    "super generator matrices satisfy the exchange relations",
                    _chk_super_frt),
    CheckDescriptor("sec3/super-duality", "sec3",
                    "graded duality pairing",
                    _chk_super_duality),
    CheckDescriptor("sec4/glnm-ybe", "sec4",
                    "gl(n|m)-type solutions satisfy the (graded) YBE",
                    _chk_glnm_ybe),
    CheckDescriptor("thm4.1/superization-iso", "sec4",
                    "superized matrix algebras are isomorphic to the super "
                    "ones via the involution twist",
                    _chk_theta),
    CheckDescriptor("sec4/determinant", "sec4",
                    "the determinant-like element: group-like, sign "
                    "commutation, central square with images q^(+-2)",
                    _chk_determinant),
    CheckDescriptor("sec4/determinant-noncentral", "sec4",
                    "the determinant-like element itself is not central",
                    _chk_determinant_noncentral,
                    expected="fail-of-property"),
    CheckDescriptor("sec4/superdeterminant", "sec4",
                    "superdeterminants are central and group-like",
                    _chk_superdeterminant),
    CheckDescriptor("sec5/hecke", "sec5",
                    "Hecke condition battery",
                    _chk_hecke),
    CheckDescriptor("prop5.1/twisting", "sec5",
                    "the exterior coproduct is a cocycle twist and the "
                    "twisted R-matrix matches its closed form",
                    _chk_twisting),
    CheckDescriptor("sec5/super-twisting", "sec5",
                    "the super exterior coproduct is a cocycle twist",
                    _chk_super_twisting),
    CheckDescriptor("sec5/omega-hopf", "sec5",
                    "Hopf axioms for the exterior-variant presentations",
                    _chk_omega_hopf),
    CheckDescriptor("sec5/omega-frt", "sec5",
                    "exterior-variant generator matrix exchange relations",
                    _chk_omega_frt),
    CheckDescriptor("prop5.2/exterior", "sec5",
                    "exterior algebras are covariant and carry the hidden "
                    "matrix super-transformation",
                    _chk_exterior),
    CheckDescriptor("engine/overlaps", "engine",
                    "all catalog rewrite systems resolve their overlaps",
                    _chk_overlaps),
    CheckDescriptor("engine/associativity", "engine",
                    "randomized associativity probes",
                    _chk_associativity),
    CheckDescriptor("engine/numeric-spot", "engine",
                    "floating point confirmation at a complex q",
                    _chk_numeric),
]

_BY_ID = {c.id: c for c in CHECKS}
SUITES = {"all": [c.id for c in CHECKS]}
for c in CHECKS:
    SUITES.setdefault(c.suite, []).append(c.id)


def _resolve(suite):
    if suite in SUITES:
        return [_BY_ID[i] for i in SUITES[suite]]
    out = []
    for tok in suite.split(","):
        tok = tok.strip()
        if tok in SUITES:
            out.extend(_BY_ID[i] for i in SUITES[tok])
        elif tok in _BY_ID:
            out.append(_BY_ID[tok])
        else:
            raise UnknownCheck(tok)
    return out


def list_checks(filter_text="") -> str:
    lines = []
    for c in CHECKS:
        if filter_text in c.id or filter_text in c.anchor:
            lines.append(f"{c.id:32s} [{c.expected}] {c.anchor}")
    return "\n".join(lines)


def run(suite="all", format="text", seed=0, q_spotcheck=None, labels=None,
        extra_rmatrix=None, out=None):
    """Execute a suite; returns (results, exit_code)."""
    descs = sorted(_resolve(suite), key=lambda c: c.id)
    results = []
    code = 0
    for c in descs:
        ctx = {"rng": random.Random(seed), "q_spot": q_spotcheck,
               "labels": labels}
        t0 = time.time()
        s0 = STATS["steps"]
        residual = None
        try:
            rep = c.fn(ctx)
            verdict = "pass" if rep.ok else "fail"
            if rep.failures:
                residual = str(rep.failures[0])
        except Exception as exc:  # engine error: report, keep going
            verdict = "error"
            residual = f"{type(exc).__name__}: {exc}"
        row = {"id": c.id, "anchor": c.anchor, "verdict": verdict,
               "millis": int(1000 * (time.time() - t0)),
               "steps": STATS["steps"] - s0}
        if residual is not None:
            row["residual"] = residual
        results.append(row)
        if verdict == "error":
            code = 2
        elif code != 2:
            ok = (verdict == "pass") == (c.expected == "pass")
            if not ok:
                code = 1
    if extra_rmatrix is not None:
        t0 = time.time()
        try:
            R = rmatlab.rmatrix_from_json(extra_rmatrix)
            ok = qybe_check(R) if not R.is_super else sybe_check(R)
            verdict = "pass" if ok else "fail"
            row = {"id": "user/rmatrix", "anchor": "user-supplied R-matrix "
                   "satisfies the (graded) YBE", "verdict": verdict,
                   "millis": int(1000 * (time.time() - t0)), "steps": 0}
            if not ok:
                row["residual"] = "braid relation has a nonzero residual"
                code = max(code, 1)
        except Exception as exc:
            row = {"id": "user/rmatrix", "anchor": "user-supplied R-matrix",
                   "verdict": "error", "residual": f"{type(exc).__name__}: {exc}",
                   "millis": int(1000 * (time.time() - t0)), "steps": 0}
            code = 2
        results.append(row)
    text = _render(results, format)
    print(text, file=out or sys.stdout)
    return results, code


def _render(results, format):
    if format == "json":
        return json.dumps(results, indent=2)
    lines = []
    for r in results:
        line = f"{r['id']:32s} {r['verdict']:5s} {r['millis']:6d} ms " \
               f"{r['steps']:9d} steps"
        if "residual" in r:
            line += f"  {r['residual']}"
        lines.append(line)
    return "\n".join(lines)


def main(argv=None):
    ap = argparse.ArgumentParser(prog="qgw")
    sub = ap.add_subparsers(dest="cmd", required=True)
    rp = sub.add_parser("run", help="execute a check suite")
    rp.add_argument("--suite", default="all")
    rp.add_argument("--format", choices=("text", "json"), default="text")
    rp.add_argument("--seed", type=int, default=0)
    rp.add_argument("--labels", default=None,
                    help="m1,m2[,m1',m2'] integer label override")
    rp.add_argument("--rmatrix", default=None,
                    help="path to a serialized R-matrix to verify")
    rp.add_argument("--q-spot", default=None, help="re,im complex q sample")
    lp = sub.add_parser("list", help="list check descriptors")
    lp.add_argument("filter", nargs="?", default="")
    args = ap.parse_args(argv)

    if args.cmd == "list":
        print(list_checks(args.filter))
        return 0
    labels = None
    if args.labels:
        labels = [int(x) for x in args.labels.split(",")]
    qs = None
    if args.q_spot:
        re_, im_ = (float(x) for x in args.q_spot.split(","))
        qs = complex(re_, im_)
    extra = None
    if args.rmatrix:
        try:
            with open(args.rmatrix) as fh:
                extra = fh.read()
        except OSError as exc:
            print(f"cannot read {args.rmatrix}: {exc}", file=sys.stderr)
            return 2
    try:
        _, code = run(suite=args.suite, format=args.format, seed=args.seed,
                      q_spotcheck=qs, labels=labels, extra_rmatrix=extra)
    except UnknownCheck as exc:
        print(f"unknown check or suite: {exc}", file=sys.stderr)
        return 2
    return code


if __name__ == "__main__":
    sys.exit(main())
