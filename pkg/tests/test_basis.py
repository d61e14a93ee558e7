import random

import pytest
from hypothesis import given, settings, strategies as st

from hopftwist.algebra import certify_hopf, check_comodule_algebra
from hopftwist.basis import (BasisChange, random_invertible, transport, transport_comodule,
                             transport_hopf)
from hopftwist.constructions import SqtElement, kC2, named_r, regular_comodule, sweedler_h4
from hopftwist.errors import InputError, NotInvertible
from hopftwist.field import GF, Q
from hopftwist.linmap import LinMap, compose
from hopftwist.pipelines import (NuTwist, c_deformation, comodule_twist_pipeline, homogenization_pipeline,
                                 sqt_double_pipeline)


def moved_nu_twist(N, seed):
    F = N.field
    rng = random.Random(seed)
    cH = BasisChange(random_invertible(F, N.CA.H.dim, rng))
    cA = BasisChange(random_invertible(F, N.CA.A.dim, rng))
    H2 = transport_hopf(N.CA.H, cH)
    CA2 = transport_comodule(N.CA, cA, H2, cH)
    return NuTwist(CA2, transport(N.nu, [cH, cA], [cA]), name=N.name), cH


def test_change_of_basis_is_not_the_identity():
    N = c_deformation(kC2(Q), -1)
    N2, cH = moved_nu_twist(N, 7)
    assert N2.CA.H.mult != N.CA.H.mult
    assert certify_hopf(N2.CA.H).ok and check_comodule_algebra(N2.CA).ok


@pytest.mark.parametrize("F,c", [(Q, -1), (GF(5), 2), (Q, 0)], ids=["Q,c=-1", "GF5,c=2", "Q,c=0"])
def test_comodule_twist_verdicts_survive_a_change_of_basis(F, c):
    N = c_deformation(kC2(F), c)
    N2, _ = moved_nu_twist(N, 2024)
    before = comodule_twist_pipeline(N)
    after = comodule_twist_pipeline(N2)
    assert after.verdicts() == before.verdicts()
    assert after.ok == before.ok == (c != 0)


def test_sqt_double_verdicts_survive_a_change_of_basis(field):
    rng = random.Random(11)
    for name in ("triangular", "1xg", "trivial"):
        E = named_r(kC2(field), name)
        c = BasisChange(random_invertible(field, 2, rng))
        H2 = transport_hopf(E.H, c)
        E2 = SqtElement(H2, transport(E.r, [None], [c, c]), name=name)
        assert sqt_double_pipeline(E2).verdicts() == sqt_double_pipeline(E).verdicts()


def test_homogenization_verdicts_survive_a_change_of_basis():
    H = sweedler_h4(GF(5))
    c = BasisChange(random_invertible(GF(5), 4, random.Random(3)))
    H2 = transport_hopf(H, c)
    before = homogenization_pipeline(regular_comodule(H))
    after = homogenization_pipeline(transport_comodule(regular_comodule(H), c, H2, c))
    assert after.verdicts() == before.verdicts() and after.ok


def test_failing_hopf_stays_failing():
    H = sweedler_h4(Q)
    bad = type(H)(H.algebra, H.coalgebra, compose(H.antipode, H.antipode), name="S^2")
    c = BasisChange(random_invertible(Q, 4, random.Random(5)))
    r1, r2 = certify_hopf(bad), certify_hopf(transport_hopf(bad, c))
    assert not r1.ok
    assert sorted(r1.failed_axioms()) == sorted(r2.failed_axioms())


def test_basis_change_must_be_square_and_invertible():
    with pytest.raises(InputError):
        BasisChange(LinMap.from_dense(Q, [[1, 0]]))
    with pytest.raises(NotInvertible):
        BasisChange(LinMap.from_dense(Q, [[1, 1], [1, 1]]))


@settings(max_examples=20)
@given(st.integers(0, 10 ** 6), st.sampled_from([(Q, -1), (GF(5), 2), (GF(7), 3)]))
def test_random_bases_keep_comodule_twist_verdicts(seed, fc):
    F, c = fc
    N = c_deformation(kC2(F), c)
    N2, _ = moved_nu_twist(N, seed)
    assert comodule_twist_pipeline(N2).verdicts() == comodule_twist_pipeline(N).verdicts()
