"""Change of basis for structure maps.

A change of basis on V is an invertible P whose columns are the new basis
vectors written in old coordinates, so P turns new coordinates into old ones.
A map f: V1⊗...⊗Vk -> W1⊗...⊗Wl becomes (Q1^-1⊗...⊗Ql^-1) f (P1⊗...⊗Pk).
Transporting every structure map of an instance this way gives an isomorphic
instance, so every check must return the same verdict on it.
"""
from __future__ import annotations

import random

from .algebra import Algebra, Coalgebra, ComoduleAlgebra, HopfAlgebra
from .errors import InputError
from .linmap import LinMap, compose_all, identity, invert, rank, tensor


class BasisChange:
    """An invertible P on a space of dimension n, with its inverse cached."""

    def __init__(self, P: LinMap):
        if P.nrows != P.ncols:
            raise InputError("a change of basis must be square")
        self.P = P.reshape(dom=(P.ncols,), cod=(P.nrows,))
        self.P_inv = invert(self.P)
        self.dim = P.ncols

    @classmethod
    def identity(cls, field, n):
        return cls(identity(field, (n,)))


def random_invertible(field, n, rng: random.Random | None = None, spread=3) -> LinMap:
    """A random invertible n x n matrix with small entries (rejection sampling)."""
    rng = rng or random.Random()
    while True:
        rows = [[field(rng.randint(-spread, spread)) for _ in range(n)] for _ in range(n)]
        M = LinMap.from_dense(field, rows)
        if rank(M) == n:
            return M


def transport(f: LinMap, dom: list, cod: list) -> LinMap:
    """Rewrite ``f`` in new bases; ``dom`` and ``cod`` list a BasisChange per tensor factor.

    A factor of dimension 1 (the ground field) may be given as None.
    """
    F = f.field

    def side(changes, inverse):
        mats = []
        for c in changes:
            if c is None:
                mats.append(identity(F, (1,)))
            else:
                mats.append(c.P_inv if inverse else c.P)
        return tensor(*mats)

    out = compose_all(side(cod, True), f, side(dom, False))
    return out.reshape(dom=f.dom, cod=f.cod)


def transport_algebra(A: Algebra, c: BasisChange, labels=None) -> Algebra:
    return Algebra(A.field, A.dim, transport(A.mult, [c, c], [c]), transport(A.unit, [None], [c]),
                   labels or [f"{s}'" for s in A.labels])


def transport_hopf(H: HopfAlgebra, c: BasisChange, name=None) -> HopfAlgebra:
    alg = transport_algebra(H.algebra, c)
    coalg = Coalgebra(H.field, H.dim, transport(H.comult, [c], [c, c]), transport(H.counit, [c], [None]))
    return HopfAlgebra(alg, coalg, transport(H.antipode, [c], [c]), name=name or H.name)


def transport_comodule(CA: ComoduleAlgebra, cA: BasisChange, H_new: HopfAlgebra, cH: BasisChange):
    """Transport A by ``cA``; ``H_new`` must already be H transported by ``cH``."""
    A = transport_algebra(CA.A, cA)
    return ComoduleAlgebra(A, H_new, transport(CA.coaction, [cA], [cA, cH]))
