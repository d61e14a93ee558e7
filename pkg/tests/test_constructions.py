import itertools

import pytest

from hopftwist.algebra import certify_algebra, certify_hopf, dual_hopf, tensor_algebra
from hopftwist.constructions import (FiniteGroup, drinfeld_double, group_algebra, kC2, kC2xC2, named_r,
                                     regular_comodule, smash_product, sweedler_h4, trivial_comodule)
from hopftwist.errors import InputError
from hopftwist.field import Q
from hopftwist.linmap import LinMap, compose, flip, tensor

import oracles


def test_group_validation():
    with pytest.raises(InputError):
        FiniteGroup([[0, 1], [1, 1]])            # not a Latin square
    with pytest.raises(InputError):
        FiniteGroup([[0, 1, 2], [1, 0, 2], [2, 2, 0]])


def test_cyclic_group_algebra(field):
    H = kC2(field)
    g = H.basis(1)
    assert H.algebra.mul(g, g) == H.algebra.one
    c3 = group_algebra(FiniteGroup.cyclic(3), field)
    assert c3.dim == 3 and certify_hopf(c3).ok


def test_klein_four_group_algebra(field):
    H = kC2xC2(field)
    assert H.dim == 4
    assert compose(H.mult, flip(field, 4, 4)) == H.mult                  # commutative
    assert compose(flip(field, 4, 4), H.comult) == H.comult              # cocommutative


def test_smash_with_trivial_coaction_is_tensor_product(field):
    H = sweedler_h4(field)
    A = kC2(field).algebra
    T, S = smash_product(trivial_comodule(A, H))
    assert T.R == flip(field, H.dim, A.dim)
    assert S.mult == tensor_algebra(A, dual_hopf(H).algebra).mult


@pytest.mark.parametrize("builder", [kC2, sweedler_h4], ids=["kC2", "H4"])
def test_smash_product_matches_oracle(field, builder):
    CA = regular_comodule(builder(field))
    _, S = smash_product(CA)
    want = oracles.smash_table(field, CA)
    assert oracles.same(field, oracles.table(S), want)
    assert oracles.associative(field, want)
    assert certify_algebra(S).ok


@pytest.mark.parametrize("builder", [kC2, sweedler_h4], ids=["kC2", "H4"])
def test_double_matches_oracle(field, builder):
    H = builder(field)
    D = drinfeld_double(H)
    assert D.dim == H.dim ** 2
    want = oracles.double_table(field, H)
    assert oracles.same(field, oracles.table(D), want)
    assert oracles.unital(field, want, oracles.unit_vec(D))


def test_double_of_h4_associative_and_noncommutative(field):
    D = drinfeld_double(sweedler_h4(field))
    assert certify_algebra(D).ok
    # 1⊗g and 1⊗x inside D(H4) anticommute rather than commute
    eps = dual_hopf(sweedler_h4(field)).unit
    one_g = tensor(eps, sweedler_h4(field).basis(1)).reshape(cod=(16,))
    one_x = tensor(eps, sweedler_h4(field).basis(2)).reshape(cod=(16,))
    assert D.mul(one_g, one_x) != D.mul(one_x, one_g)


@pytest.mark.parametrize("builder", [kC2, sweedler_h4], ids=["kC2", "H4"])
def test_double_contains_h_and_dual(field, builder):
    H = builder(field)
    Hd = dual_hopf(H)
    D = drinfeld_double(H)
    n = H.dim
    eps, one = Hd.unit, H.unit
    for i, j in itertools.product(range(n), repeat=2):
        # eps⊗H
        x = tensor(eps, H.basis(i)).reshape(cod=(n * n,))
        y = tensor(eps, H.basis(j)).reshape(cod=(n * n,))
        assert D.mul(x, y) == tensor(eps, H.algebra.mul(H.basis(i), H.basis(j))).reshape(cod=(n * n,))
        # H*⊗1
        x = tensor(Hd.basis(i), one).reshape(cod=(n * n,))
        y = tensor(Hd.basis(j), one).reshape(cod=(n * n,))
        assert D.mul(x, y) == tensor(Hd.algebra.mul(Hd.basis(i), Hd.basis(j)), one).reshape(cod=(n * n,))


def test_named_r():
    H = kC2(Q)
    assert named_r(H, "triangular").r_inv is not None
    with pytest.raises(InputError):
        named_r(sweedler_h4(Q), "triangular")
    with pytest.raises(InputError):
        named_r(H, "bogus")


def test_non_invertible_r_rejected():
    from hopftwist.constructions import SqtElement
    H = kC2(Q)
    with pytest.raises(InputError):
        SqtElement(H, LinMap.vector(Q, (2, 2), {(0, 0): 1, (0, 1): 1}))     # 1⊗(1+g)
