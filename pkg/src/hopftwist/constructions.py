"""Concrete instances: group algebras, Sweedler's H4, smash products, Drinfeld doubles,
and invertible elements of H (x) H.

``drinfeld_double`` is computed elementwise from structure-constant tables,
deliberately not through :mod:`hopftwist.twisting`, so the two routes can be
compared entrywise.
"""
from __future__ import annotations

import itertools
from collections import defaultdict

from .algebra import (Algebra, Coalgebra, ComoduleAlgebra, HopfAlgebra, dual_hopf, hit_right_map,
                      tensor_algebra)
from .errors import InputError, NotInvertible
from .linmap import LinMap, Wiring, compose, identity, tensor
from .twisting import TwistingData, build_twisted_product, check_twisting_axioms


class FiniteGroup:
    """Finite group given by its Cayley table on indices ``0..n-1``."""

    def __init__(self, table, labels=None):
        table = [list(map(int, row)) for row in table]
        n = len(table)
        if n == 0 or any(len(row) != n for row in table):
            raise InputError("Cayley table must be a nonempty square")
        if any(not 0 <= v < n for row in table for v in row):
            raise InputError("Cayley table entries out of range")
        ident = next((e for e in range(n) if all(table[e][g] == g == table[g][e] for g in range(n))), None)
        if ident is None:
            raise InputError("Cayley table has no identity")
        for a, b, c in itertools.product(range(n), repeat=3):
            if table[table[a][b]][c] != table[a][table[b][c]]:
                raise InputError(f"Cayley table is not associative at {(a, b, c)}")
        inverse = []
        for g in range(n):
            inv = [h for h in range(n) if table[g][h] == ident]
            if len(inv) != 1 or table[inv[0]][g] != ident:
                raise InputError(f"element {g} has no inverse")
            inverse.append(inv[0])
        self.order = n
        self.table = table
        self.identity = ident
        self.inverse = inverse
        self.labels = [str(s) for s in labels] if labels is not None else [f"g{i}" for i in range(n)]

    @classmethod
    def cyclic(cls, n, gen="g"):
        def name(k):
            return "1" if k == 0 else (gen if k == 1 else f"{gen}^{k}")
        return cls([[(a + b) % n for b in range(n)] for a in range(n)], [name(k) for k in range(n)])

    def direct_product(self, other):
        n, m = self.order, other.order
        table = [[self.table[a // m][b // m] * m + other.table[a % m][b % m] for b in range(n * m)]
                 for a in range(n * m)]
        labels = []
        for a in self.labels:
            for b in other.labels:
                labels.append(b if a == "1" else (a if b == "1" else a + b))
        return FiniteGroup(table, labels)


def group_algebra(G: FiniteGroup, F, name=None) -> HopfAlgebra:
    n = G.order
    mult = LinMap.from_triples(F, (n, n), (n,), [(G.table[a][b], a * n + b, 1)
                                                 for a in range(n) for b in range(n)])
    unit = LinMap.vector(F, (n,), {G.identity: 1})
    comult = LinMap.from_triples(F, (n,), (n, n), [(g * n + g, g, 1) for g in range(n)])
    counit = LinMap.from_triples(F, (n,), (1,), [(0, g, 1) for g in range(n)])
    antipode = LinMap.from_triples(F, (n,), (n,), [(G.inverse[g], g, 1) for g in range(n)])
    return HopfAlgebra(Algebra(F, n, mult, unit, G.labels), Coalgebra(F, n, comult, counit), antipode, name=name)


def kC2(F) -> HopfAlgebra:
    return group_algebra(FiniteGroup.cyclic(2), F, name="kC2")


def kC2xC2(F) -> HopfAlgebra:
    G = FiniteGroup.cyclic(2, "a").direct_product(FiniteGroup.cyclic(2, "b"))
    return group_algebra(G, F, name="kC2xC2")


H4_LABELS = ["1", "g", "x", "gx"]


def _h4_index(a, b):
    # g^a x^b, a, b in {0, 1}
    return a + 2 * b


def sweedler_h4(F) -> HopfAlgebra:
    """Sweedler's 4-dimensional Hopf algebra on the basis 1, g, x, gx.

    g^2 = 1, x^2 = 0, xg = -gx; g grouplike, x (1, g)-primitive:
    Delta(x) = x (x) 1 + g (x) x, S(x) = -gx.
    """
    if F.characteristic == 2:
        raise InputError("Sweedler's H4 needs characteristic different from 2")
    trip = []
    for a, b, c, d in itertools.product((0, 1), repeat=4):
        # (g^a x^b)(g^c x^d) = (-1)^(b c) g^(a+c) x^(b+d)
        if b + d > 1:
            continue
        sign = -1 if b * c else 1
        trip.append((_h4_index((a + c) % 2, b + d), _h4_index(a, b) * 4 + _h4_index(c, d), sign))
    mult = LinMap.from_triples(F, (4, 4), (4,), trip)
    unit = LinMap.vector(F, (4,), {0: 1})
    one, g, x, gx = range(4)
    comult = LinMap.from_triples(F, (4,), (4, 4), [
        (one * 4 + one, one, 1),
        (g * 4 + g, g, 1),
        (x * 4 + one, x, 1), (g * 4 + x, x, 1),
        (gx * 4 + g, gx, 1), (one * 4 + gx, gx, 1),
    ])
    counit = LinMap.from_triples(F, (4,), (1,), [(0, one, 1), (0, g, 1)])
    antipode = LinMap.from_triples(F, (4,), (4,), [(one, one, 1), (g, g, 1), (gx, x, -1), (x, gx, 1)])
    return HopfAlgebra(Algebra(F, 4, mult, unit, H4_LABELS), Coalgebra(F, 4, comult, counit), antipode,
                       name="H4")


BUILTIN_HOPF = {"kC2": kC2, "kC2xC2": kC2xC2, "H4": sweedler_h4}


def builtin_hopf(name, F) -> HopfAlgebra:
    try:
        return BUILTIN_HOPF[name](F)
    except KeyError:
        raise InputError(f"unknown built-in Hopf algebra {name!r}; known: {', '.join(BUILTIN_HOPF)}") from None


def regular_comodule(H: HopfAlgebra) -> ComoduleAlgebra:
    """H as a right comodule algebra over itself via Delta."""
    return ComoduleAlgebra(H.algebra, H, H.comult)


def trivial_comodule(A: Algebra, H: HopfAlgebra) -> ComoduleAlgebra:
    """a -> a (x) 1."""
    coaction = tensor(identity(A.field, (A.dim,)), H.unit).reshape(dom=(A.dim,), cod=(A.dim, H.dim))
    return ComoduleAlgebra(A, H, coaction)


# smash product ----------------------------------------------------------------

def smash_twisting_map(CA: ComoduleAlgebra) -> LinMap:
    """R: H* (x) A -> A (x) H*, phi (x) a -> a<0> (x) phi <- a<1>."""
    A, H = CA.A, CA.H
    w = Wiring(CA.field, [H.dim, A.dim])
    w.apply(CA.coaction, at=1)          # phi, a<0>, a<1>
    w.permute((1, 0, 2))                # a<0>, phi, a<1>
    w.apply(hit_right_map(H), at=1)     # a<0>, phi <- a<1>
    return w.map


def smash_product(CA: ComoduleAlgebra):
    """A # H* realized as the twisted tensor product over the smash twisting map.

    Returns ``(twisting data, algebra)``.
    """
    Hd = dual_hopf(CA.H)
    T = TwistingData(CA.A, Hd.algebra, smash_twisting_map(CA))
    check_twisting_axioms(T)
    return T, build_twisted_product(T).product


# elementwise tables -------------------------------------------------------------

def mult_table(A):
    """{(i, j): {k: c}} with e_i e_j = sum_k c e_k."""
    n = A.dim
    out = defaultdict(dict)
    for k, ij, v in A.mult.triples():
        out[divmod(ij, n)][k] = v
    return out


def comult_table(H):
    """{i: {(j, k): c}} with Delta(e_i) = sum c e_j (x) e_k."""
    n = H.dim
    out = defaultdict(dict)
    for jk, i, v in H.comult.triples():
        out[i][divmod(jk, n)] = v
    return out


def _lin_add(F, acc, key, v):
    s = F.add(acc.get(key, F.zero), v)
    if s:
        acc[key] = s
    else:
        acc.pop(key, None)


def drinfeld_double(H: HopfAlgebra) -> Algebra:
    """D(H) on H* (x) H, basis e^i (x) e_j at index i*n + j, with

    (phi (x) h)(phi' (x) h') = phi (h1 -> phi' <- S^-1(h3)) (x) h2 h'.
    """
    F, n = H.field, H.dim
    mt = mult_table(H)
    ct = comult_table(H)
    sinv = {j: H.antipode_inv.column(j) for j in range(n)}
    # Delta^2(e_j) as {(a, b, c): coeff}
    d2 = {}
    for j in range(n):
        acc = {}
        for (p, c), v in ct[j].items():
            for (a, b), w in ct[p].items():
                _lin_add(F, acc, (a, b, c), F.mul(v, w))
        d2[j] = acc

    def times(x: dict, y: dict):
        acc = {}
        for i, u in x.items():
            for j, v in y.items():
                for k, w in mt[(i, j)].items():
                    _lin_add(F, acc, k, F.mul(F.mul(u, v), w))
        return acc

    def dual_product(phi: dict, psi: dict):
        # (phi psi)(e_y) = sum Delta(e_y)_(y1, y2) phi(y1) psi(y2)
        acc = {}
        for y in range(n):
            for (y1, y2), c in ct[y].items():
                if y1 in phi and y2 in psi:
                    _lin_add(F, acc, y, F.mul(c, F.mul(phi[y1], psi[y2])))
        return acc

    def hits(a, k, c):
        # (e_a -> e^k <- S^-1(e_c))(e_x) = e^k(S^-1(e_c) e_x e_a)
        acc = {}
        s = sinv[c]
        for x in range(n):
            coeff = times(times(s, {x: F.one}), {a: F.one}).get(k)
            if coeff:
                acc[x] = coeff
        return acc

    cols = []
    for i, j, k, l in itertools.product(range(n), repeat=4):
        col = {}
        for (a, b, c), v in d2[j].items():
            phi = dual_product({i: F.one}, hits(a, k, c))
            hh = times({b: F.one}, {l: F.one})
            for p, u in phi.items():
                for q, w in hh.items():
                    _lin_add(F, col, p * n + q, F.mul(v, F.mul(u, w)))
        cols.append(col)
    mult = LinMap(F, (n * n, n * n), (n * n,), cols)
    unit = tensor(H.counit.transpose(), H.unit).reshape(cod=(n * n,))
    labels = [f"{a}^*⊗{b}" for a in H.labels for b in H.labels]
    return Algebra(F, n * n, mult, unit, labels)


# elements of H (x) H -----------------------------------------------------------

class SqtElement:
    """Invertible r = r1 (x) r2 in H (x) H; the inverse u1 (x) u2 is computed."""

    def __init__(self, H: HopfAlgebra, r: LinMap, name=None):
        n = H.dim
        if r.ncols != 1 or r.nrows != n * n:
            raise InputError(f"r must be a vector in H⊗H of length {n * n}")
        self.H = H
        self.r = r.reshape(dom=(1,), cod=(n, n))
        HH = tensor_algebra(H.algebra, H.algebra)
        try:
            self.r_inv = HH.inverse(self.r.reshape(cod=(n * n,))).reshape(cod=(n, n))
        except NotInvertible:
            raise InputError("r is not invertible in H⊗H") from None
        self.name = name

    field = property(lambda self: self.H.field)


def triangular_r_kc2(H: HopfAlgebra) -> LinMap:
    """r = 1/2 (1⊗1 + 1⊗g + g⊗1 - g⊗g) on kC2 (basis 1, g)."""
    F = H.field
    h = F.half()
    return LinMap.vector(F, (2, 2), {(0, 0): h, (0, 1): h, (1, 0): h, (1, 1): F.neg(h)})


def named_r(H: HopfAlgebra, name: str) -> SqtElement:
    """Built-in r elements: ``trivial`` (1⊗1), ``triangular`` (kC2 only), ``1xg`` (kC2 only)."""
    F, n = H.field, H.dim
    if name == "trivial":
        r = LinMap.vector(F, (n, n), {(0, 0): 1})
    elif name in ("triangular", "1xg"):
        if H.name != "kC2":
            raise InputError(f"r={name} is only defined for kC2")
        r = triangular_r_kc2(H) if name == "triangular" else LinMap.vector(F, (2, 2), {(0, 1): 1})
    else:
        raise InputError(f"unknown r {name!r}; known: trivial, triangular, 1xg")
    return SqtElement(H, r, name=name)


def quasitriangular_checks(E: SqtElement):
    """The three full quasitriangularity identities, as ``(name, lhs, rhs)``."""
    H, r = E.H, E.r
    F, n = H.field, H.dim
    HHH = tensor_algebra(tensor_algebra(H.algebra, H.algebra), H.algebra)
    one = H.unit

    def emb(order):
        # place r's legs in slots ``order`` of H (x) H (x) H, unit in the third
        w = Wiring(F, [n, n])
        w.insert(one, at=2)
        inv = [0, 0, 0]
        for slot, src in zip(order, (0, 1)):
            inv[slot] = src
        third = ({0, 1, 2} - set(order)).pop()
        inv[third] = 2
        w.permute(inv)
        return compose(w.map, r).reshape(cod=(n * n * n,))

    r13, r23, r12 = emb((0, 2)), emb((1, 2)), emb((0, 1))
    i = identity(F, (n,))
    HH = tensor_algebra(H.algebra, H.algebra)
    tau = Wiring(F, [n, n]).permute((1, 0)).map
    delta_op = compose(tau, H.comult)
    lhs3 = compose(HH.mult, tensor(delta_op, r.reshape(cod=(n * n,))).reshape(cod=(n * n, n * n)))
    rhs3 = compose(HH.mult, tensor(r.reshape(cod=(n * n,)), H.comult).reshape(dom=(n,), cod=(n * n, n * n)))
    return [
        ("(Δ⊗id)(r) = r13 r23", compose(tensor(H.comult, i), r).reshape(cod=(n * n * n,)), HHH.mul(r13, r23)),
        ("(id⊗Δ)(r) = r13 r12", compose(tensor(i, H.comult), r).reshape(cod=(n * n * n,)), HHH.mul(r13, r12)),
        ("Δ^op(h) r = r Δ(h)", lhs3.reshape(dom=(n,)), rhs3.reshape(dom=(n,))),
    ]
