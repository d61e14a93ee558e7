"""Acceptance gate: one test per criterion; a summary line per criterion is
printed at the end of the run (see conftest.py).

Each test gathers its sub-checks into a ``Checks`` list and fails with the
names of every sub-check that did not hold, so a red criterion says why.
"""
import os
import random

import pytest

from hopftwist import builtins, fileformat
from hopftwist.algebra import certify_hopf, check_antipode, dual_hopf
from hopftwist.basis import BasisChange, random_invertible, transport, transport_comodule, transport_hopf
from hopftwist.cli import main
from hopftwist.constructions import (drinfeld_double, kC2, kC2xC2, named_r, regular_comodule, smash_twisting_map,
                                     sweedler_h4)
from hopftwist.field import GF, Q
from hopftwist.invariance import build_isomorphism, check_invariance_hypotheses, derive_twisted_map
from hopftwist.linmap import LinMap, flip, identity
from hopftwist.pipelines import (SQT1, NuTwist, c_deformation, check_auxiliary_relation, check_nu_conditions,
                                 check_nu_inverse_relations, check_sqt, comodule_twist_pipeline,
                                 double_twisting_map, homogenization_pipeline, sqt_double_pipeline, trivial_nu)
from hopftwist.twisting import AXIOM_UNIT_A, TwistingData, build_twisted_product, check_twisting_axioms

import oracles

FIELDS = [Q, GF(5)]
CORPUS = os.path.join(os.path.dirname(__file__), os.pardir, "corpus")


class Checks(list):
    def __call__(self, name, ok):
        self.append((name, bool(ok)))

    def verify(self):
        bad = [n for n, ok in self if not ok]
        assert not bad, "failed: " + "; ".join(bad)


def stage_ok(res, name):
    return any(s.name == name and s.ok for s in res.stages)


def mutated_h4(F):
    """Sweedler H4 with S(x) = +gx."""
    H = sweedler_h4(F)
    trip = [(r, c, (F.neg(v) if c == 2 else v)) for r, c, v in H.antipode.triples()]
    S = LinMap.from_triples(F, (4,), (4,), trip)
    return type(H)(H.algebra, H.coalgebra, S, name="H4 with S(x) = gx")


def test_criterion_1_certification_suite():
    ck = Checks()
    for F in FIELDS:
        for H in (kC2(F), kC2xC2(F), sweedler_h4(F), dual_hopf(sweedler_h4(F))):
            ck(f"{H.name} over {F.name}", certify_hopf(H).ok)
        bad = mutated_h4(F)
        rep = certify_hopf(bad)
        anti = check_antipode(bad)
        ck(f"mutated H4 over {F.name} fails", not rep.ok)
        ck(f"mutated H4 over {F.name} fails only antipode identities",
           set(rep.failed_axioms()) == set(anti.failed_axioms()) and anti.failures)
        ck(f"mutated H4 over {F.name} witness is x", all(f.witness == (2,) for f in anti.failures))
    _, from_file = fileformat.load(os.path.join(CORPUS, "h4_bad_antipode.yaml"))
    ck("corpus mutated H4 fails", not certify_hopf(from_file).ok)
    ck.verify()


def test_criterion_2_twisting_core():
    ck = Checks()
    for F in FIELDS:
        pairs = [(kC2(F).algebra, sweedler_h4(F).algebra), (sweedler_h4(F).algebra, kC2xC2(F).algebra),
                 (dual_hopf(sweedler_h4(F)).algebra, kC2(F).algebra)]
        for A, B in pairs:
            T = TwistingData(A, B, flip(F, B.dim, A.dim))
            if not check_twisting_axioms(T).ok:
                ck(f"flip {A.dim}x{B.dim} over {F.name} certified", False)
                continue
            P = build_twisted_product(T).product
            ck(f"flip {A.dim}x{B.dim} over {F.name} = tensor product",
               oracles.same(F, oracles.table(P), oracles.tensor_table(F, oracles.table(A), oracles.table(B))))
        A, B = pairs[0]
        zero = TwistingData(A, B, LinMap.zero(F, (B.dim, A.dim), (A.dim, B.dim)))
        ck(f"zero map fails the unit axiom over {F.name}", check_twisting_axioms(zero).failed(AXIOM_UNIT_A))

        certified = []
        for H in (kC2(F), sweedler_h4(F)):
            CA = regular_comodule(H)
            certified.append((f"smash {H.name}", TwistingData(CA.A, dual_hopf(H).algebra, smash_twisting_map(CA))))
            certified.append((f"double {H.name}", TwistingData(dual_hopf(H).algebra, H.algebra, double_twisting_map(H))))
        certified.append(("flip kC2 kC2xC2", TwistingData(kC2(F).algebra, kC2xC2(F).algebra, flip(F, 4, 2))))
        for name, T in certified:
            if not check_twisting_axioms(T).ok:
                ck(f"{name} over {F.name} certified", False)
                continue
            P = build_twisted_product(T).product
            ck(f"{name} over {F.name} associative by brute force (dim {P.dim})",
               P.dim <= 16 and oracles.associative(F, oracles.table(P)))
    ck.verify()


def test_criterion_3_trivial_invariance():
    ck = Checks()
    for F in FIELDS:
        for h in ("kC2", "H4"):
            D = builtins.resolve("invariance-data", f"trivial-{h}", F)
            ck(f"{h}/{F.name} hypotheses", check_invariance_hypotheses(D).ok)
            Tp = derive_twisted_map(D)
            ck(f"{h}/{F.name} R' = R", Tp.R == D.T.R)
            n = D.T.A.dim * D.T.B.dim
            cert = build_isomorphism(D, Tp)
            ck(f"{h}/{F.name} phi = id", cert.ok and cert.phi.reshape(dom=(n,), cod=(n,)) == identity(F, (n,)))
    ck.verify()


def _non_square(F, c):
    if F.characteristic:
        return all(F.mul(x, x) != F(c) for x in range(F.characteristic))
    return F(c) < 0


@pytest.mark.parametrize("F,c", [(Q, -1), (GF(5), 2)], ids=["Q,c=-1", "GF5,c=2"])
def test_criterion_4_comodule_twist(F, c):
    ck = Checks()
    N = c_deformation(kC2(F), c)
    ck("nu conditions", check_nu_conditions(N).ok)
    ck("inverse relations for the computed inverse", check_nu_inverse_relations(N).ok)
    res = comodule_twist_pipeline(N)
    for name in ("A_nu associative unital", "A_nu comodule algebra (same coaction)", "R' = R",
                 "isomorphism certified"):
        ck(name, stage_ok(res, name))
    ck("R' equals R entrywise", res.artifacts.get("Rprime") == res.artifacts.get("R"))
    cert = res.certificate
    ck("bijective, unital, multiplicative", cert is not None and cert.bijective and cert.unital and cert.multiplicative)
    t = oracles.table(res.artifacts["A_nu"])
    ck("g*g = c·1", t[1][1] == [F(c), F.zero])
    ck("c is not a square", _non_square(F, c))
    ck("pipeline passes", res.ok)
    ck.verify()


def test_criterion_5_homogenization():
    ck = Checks()
    for F in FIELDS:
        for H in (sweedler_h4(F), kC2(F)):
            CA = regular_comodule(H)
            res = homogenization_pipeline(CA)
            tag = f"{H.name}/{F.name}"
            ck(f"{tag} dim {H.dim ** 2}", res.certificate is not None and res.certificate.source.dim == H.dim ** 2)
            ck(f"{tag} R' closed form", stage_ok(res, "R'(h⊗a) = a(0)⊗S(a(1))h a(2)"))
            ck(f"{tag} A⊗_R' H = A[H]", stage_ok(res, "A⊗_R' H = A[H]"))
            ck(f"{tag} isomorphism", stage_ok(res, "isomorphism certified") and res.certificate is not None)
            ck(f"{tag} A[H] matches brute force",
               oracles.same(F, oracles.table(res.artifacts["A[H]"]), oracles.homogenization_table(F, CA)))
            ck(f"{tag} passes", res.ok)
    ck.verify()


def test_criterion_6_sqt_double():
    ck = Checks()
    for F in FIELDS:
        E = named_r(kC2(F), "triangular")
        ck(f"SQT1-3 over {F.name}", check_sqt(E).ok)
        ck(f"auxiliary relation over {F.name}", check_auxiliary_relation(E).ok)
        res = sqt_double_pipeline(E)
        for name in ("star algebra certified", "invariance hypotheses",
                     "R'(h⊗φ) = h1⇀φ↼S^-1(u1 h3 r1)⊗u2 h2 r2", "phi = g", "f∘g = id", "g∘f = id"):
            ck(f"{name} over {F.name}", stage_ok(res, name))
        ck(f"star product associative by brute force over {F.name}",
           oracles.associative(F, oracles.table(res.artifacts["H*_star"])))
        ck(f"pipeline passes over {F.name}", res.ok)

        bad = check_sqt(named_r(kC2(F), "1xg")).failed(SQT1)
        ck(f"1⊗g fails SQT1 over {F.name}", bad is not None)
        # Δ(1)⊗g = 1⊗1⊗g against 1⊗1⊗g·g = 1⊗1⊗1
        ck(f"1⊗g witness over {F.name}", bad is not None and bad.lhs == {1: F.one} and bad.rhs == {0: F.one})
    D = drinfeld_double(sweedler_h4(Q))
    ck("D(H4) exhaustive associativity (4096 triples)", D.dim == 16 and oracles.associative(Q, oracles.table(D)))
    ck.verify()


def _suite_runs():
    for F in FIELDS:
        for c in (-1, 2, 3, 0):
            yield comodule_twist_pipeline(c_deformation(kC2(F), c))
        for h in ("kC2", "H4", "kC2xC2"):
            yield comodule_twist_pipeline(trivial_nu(regular_comodule(builtins.hopf(h, F))))
        for h in ("kC2", "H4", "kC2xC2", "H4-dual"):
            yield homogenization_pipeline(regular_comodule(builtins.hopf(h, F)))
        yield homogenization_pipeline(builtins.resolve("comodule-algebra", "trivial-H4", F))
        for r in ("trivial", "triangular", "1xg"):
            yield sqt_double_pipeline(named_r(kC2(F), r))
        yield sqt_double_pipeline(named_r(sweedler_h4(F), "trivial"))


def test_criterion_7_implication_ledger():
    ck = Checks()
    runs = list(_suite_runs())
    for res in runs:
        ck(f"{res.pipeline} [{res.instance}]: no conclusion failed after passing hypotheses", not res.violations)
        if res.hypotheses_passed:
            ck(f"{res.pipeline} [{res.instance}]: hypotheses passed so the pipeline passes", res.ok)
    for F in FIELDS:
        for r in ("trivial", "triangular", "1xg"):
            E = named_r(kC2(F), r)
            if check_sqt(E).ok:
                ck(f"SQT ⇒ auxiliary for {r}/{F.name}", check_auxiliary_relation(E).ok)
    ck("suite has passing and failing instances", any(r.ok for r in runs) and any(not r.ok for r in runs))
    ck.verify()


def test_criterion_8_basis_independence():
    ck = Checks()
    N = c_deformation(kC2(Q), -1)
    rng = random.Random(20261019)
    cH = BasisChange(random_invertible(Q, 2, rng))
    cA = BasisChange(random_invertible(Q, 2, rng))
    H2 = transport_hopf(N.CA.H, cH)
    N2 = NuTwist(transport_comodule(N.CA, cA, H2, cH), transport(N.nu, [cH, cA], [cA]), name=N.name)
    ck("the change of basis moves the structure maps", N2.CA.H.mult != N.CA.H.mult or N2.nu != N.nu)
    before, after = comodule_twist_pipeline(N), comodule_twist_pipeline(N2)
    ck("identical verdicts", before.verdicts() == after.verdicts())
    ck("both pass", before.ok and after.ok)
    ck.verify()


def test_criterion_9_cli_round_trip(tmp_path, capsys):
    ck = Checks()
    built = [("double", "builtin:H4", "algebra"),
             ("star-algebra", "builtin:sqt-kC2?r=triangular", "algebra"),
             ("derive-rprime", "builtin:homogenization-H4", "linmap")]
    for i, (what, ref, kind) in enumerate(built):
        first = tmp_path / f"built{i}.yaml"
        ck(f"build {what}", main(["build", what, ref, "--out", str(first)]) == 0)
        text = first.read_text()
        got, obj = fileformat.load(str(first))
        ck(f"{what} parses as {kind}", got == kind)
        second = tmp_path / f"again{i}.yaml"
        fileformat.dump(obj, str(second))
        ck(f"{what} byte-stable", second.read_text() == text)
        v1 = main(["check", kind, str(first)])
        v2 = main(["check", kind, str(second)])
        ck(f"{what} verdict-stable", v1 == v2 == 0)
    ck.verify()
