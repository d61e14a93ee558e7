"""Algebras, coalgebras, Hopf algebras and comodule algebras by structure constants.

Each structure map is a :class:`LinMap`; each axiom is checked as an equality
of composites over the whole basis (see :mod:`hopftwist.report`).
"""
from __future__ import annotations

from .errors import Inconsistent, InputError, NotConvolutionInvertible, NotInvertible
from .linmap import LinMap, compose, compose_all, flip, identity, invert, solve_linear, tensor
from .report import Report, check_identities, default_jobs


def _labels(labels, dim, prefix="e"):
    if labels is None:
        return [f"{prefix}{i}" for i in range(dim)]
    labels = [str(s) for s in labels]
    if len(labels) != dim:
        raise InputError(f"{len(labels)} basis labels for dimension {dim}")
    return labels


class Algebra:
    """Associative unital algebra given by ``mult: A(x)A -> A`` and ``unit: k -> A``."""

    def __init__(self, field, dim, mult: LinMap, unit: LinMap, labels=None):
        if mult.field != field or unit.field != field:
            raise InputError("structure maps live over a different field")
        if mult.ncols != dim * dim or mult.nrows != dim:
            raise InputError(f"multiplication must be {dim}x{dim * dim}, got {mult.nrows}x{mult.ncols}")
        if unit.ncols != 1 or unit.nrows != dim:
            raise InputError(f"unit must be a vector of length {dim}")
        self.field = field
        self.dim = dim
        self.mult = mult.reshape(dom=(dim, dim), cod=(dim,))
        self.unit = unit.reshape(dom=(1,), cod=(dim,))
        self.labels = _labels(labels, dim)

    def basis(self, i) -> LinMap:
        return LinMap.vector(self.field, (self.dim,), {i: 1})

    def element(self, coords) -> LinMap:
        return LinMap.vector(self.field, (self.dim,), coords)

    @property
    def one(self) -> LinMap:
        return self.unit

    def mul(self, x: LinMap, y: LinMap) -> LinMap:
        return compose(self.mult, tensor(x, y)).reshape(cod=(self.dim,))

    def left_mult(self, x: LinMap) -> LinMap:
        """The map y -> x y."""
        return compose(self.mult, tensor(x, identity(self.field, (self.dim,)))).reshape(dom=(self.dim,))

    def right_mult(self, x: LinMap) -> LinMap:
        return compose(self.mult, tensor(identity(self.field, (self.dim,)), x)).reshape(dom=(self.dim,))

    def inverse(self, x: LinMap) -> LinMap:
        """Two-sided inverse of an element; raises NotInvertible otherwise."""
        try:
            y = solve_linear(self.left_mult(x), self.unit)
        except Inconsistent:
            raise NotInvertible("element has no right inverse") from None
        y = self.element(y)
        if self.mul(y, x) != self.unit:
            raise NotInvertible("element is only one-sidedly invertible")
        return y

    def __repr__(self):
        return f"Algebra(dim={self.dim}, {self.field!r})"


class Coalgebra:
    def __init__(self, field, dim, comult: LinMap, counit: LinMap):
        if comult.ncols != dim or comult.nrows != dim * dim:
            raise InputError(f"comultiplication must be {dim * dim}x{dim}")
        if counit.ncols != dim or counit.nrows != 1:
            raise InputError(f"counit must be a 1x{dim} functional")
        self.field = field
        self.dim = dim
        self.comult = comult.reshape(dom=(dim,), cod=(dim, dim))
        self.counit = counit.reshape(dom=(dim,), cod=(1,))


class HopfAlgebra:
    """Bialgebra with antipode; the compositional inverse of the antipode is
    computed on construction and a singular antipode is rejected."""

    def __init__(self, algebra: Algebra, coalgebra: Coalgebra, antipode: LinMap, name=None):
        if algebra.dim != coalgebra.dim or algebra.field != coalgebra.field:
            raise InputError("algebra and coalgebra disagree on dimension or field")
        n = algebra.dim
        if antipode.ncols != n or antipode.nrows != n:
            raise InputError(f"antipode must be {n}x{n}")
        self.algebra = algebra
        self.coalgebra = coalgebra
        self.antipode = antipode.reshape(dom=(n,), cod=(n,))
        try:
            self.antipode_inv = invert(self.antipode)
        except NotInvertible as exc:
            raise InputError(f"antipode is not invertible (rank {exc.rank})") from None
        self.name = name

    field = property(lambda self: self.algebra.field)
    dim = property(lambda self: self.algebra.dim)
    mult = property(lambda self: self.algebra.mult)
    unit = property(lambda self: self.algebra.unit)
    comult = property(lambda self: self.coalgebra.comult)
    counit = property(lambda self: self.coalgebra.counit)
    labels = property(lambda self: self.algebra.labels)

    def basis(self, i):
        return self.algebra.basis(i)

    def element(self, coords):
        return self.algebra.element(coords)

    def id(self):
        return identity(self.field, (self.dim,))

    def comult2(self) -> LinMap:
        """h -> h1 (x) h2 (x) h3."""
        return compose(tensor(self.comult, self.id()), self.comult)

    def __repr__(self):
        tag = f" {self.name}" if self.name else ""
        return f"HopfAlgebra{tag}(dim={self.dim}, {self.field!r})"


class ComoduleAlgebra:
    """Right H-comodule algebra ``A`` with coaction ``A -> A (x) H``."""

    def __init__(self, A: Algebra, H: HopfAlgebra, coaction: LinMap):
        if A.field != H.field:
            raise InputError("comodule algebra and Hopf algebra over different fields")
        if coaction.ncols != A.dim or coaction.nrows != A.dim * H.dim:
            raise InputError(f"coaction must be {A.dim * H.dim}x{A.dim}")
        self.A = A
        self.H = H
        self.coaction = coaction.reshape(dom=(A.dim,), cod=(A.dim, H.dim))

    field = property(lambda self: self.A.field)

    def coaction2(self) -> LinMap:
        """a -> a(0) (x) a(1) (x) a(2), computed as (id (x) Delta) o delta."""
        return compose(tensor(identity(self.field, (self.A.dim,)), self.H.comult), self.coaction)


def _as_algebra(X) -> Algebra:
    return X.algebra if isinstance(X, HopfAlgebra) else X


def _as_coalgebra(X) -> Coalgebra:
    return X.coalgebra if isinstance(X, HopfAlgebra) else X


def tensor_algebra(A: Algebra, B: Algebra, labels=None) -> Algebra:
    """Ordinary tensor product algebra A (x) B."""
    F = A.field
    idA, idB = identity(F, (A.dim,)), identity(F, (B.dim,))
    mult = compose(tensor(A.mult, B.mult), tensor(idA, flip(F, B.dim, A.dim), idB))
    if labels is None:
        labels = [f"{a}⊗{b}" for a in A.labels for b in B.labels]
    return Algebra(F, A.dim * B.dim, mult, tensor(A.unit, B.unit), labels)


# checkers -------------------------------------------------------------------

def check_associative(A, jobs=None) -> Report:
    A = _as_algebra(A)
    F, n = A.field, A.dim
    i = identity(F, (n,))
    return check_identities("associativity", [
        ("associativity", lambda: (compose(A.mult, tensor(A.mult, i)), compose(A.mult, tensor(i, A.mult)))),
    ], jobs or default_jobs())


def check_unital(A, jobs=None) -> Report:
    A = _as_algebra(A)
    F, n = A.field, A.dim
    i = identity(F, (n,))
    return check_identities("unitality", [
        ("left unit", lambda: (compose(A.mult, tensor(A.unit, i)).reshape(dom=(n,)), i)),
        ("right unit", lambda: (compose(A.mult, tensor(i, A.unit)).reshape(dom=(n,)), i)),
    ], jobs or default_jobs())


def check_coassociative(C, jobs=None) -> Report:
    C = _as_coalgebra(C)
    i = identity(C.field, (C.dim,))
    return check_identities("coassociativity", [
        ("coassociativity", lambda: (compose(tensor(C.comult, i), C.comult), compose(tensor(i, C.comult), C.comult))),
    ], jobs or default_jobs())


def check_counital(C, jobs=None) -> Report:
    C = _as_coalgebra(C)
    n = C.dim
    i = identity(C.field, (n,))
    return check_identities("counitality", [
        ("left counit", lambda: (compose(tensor(C.counit, i), C.comult).reshape(cod=(n,)), i)),
        ("right counit", lambda: (compose(tensor(i, C.counit), C.comult).reshape(cod=(n,)), i)),
    ], jobs or default_jobs())


def check_bialgebra(H: HopfAlgebra, jobs=None) -> Report:
    F, n = H.field, H.dim
    i = identity(F, (n,))
    mid = tensor(i, flip(F, n, n), i)
    one = identity(F, (1,))
    return check_identities("bialgebra", [
        ("comultiplication is multiplicative", lambda: (
            compose(H.comult, H.mult),
            compose_all(tensor(H.mult, H.mult), mid, tensor(H.comult, H.comult)))),
        ("comultiplication is unital", lambda: (compose(H.comult, H.unit), tensor(H.unit, H.unit))),
        ("counit is multiplicative", lambda: (compose(H.counit, H.mult), tensor(H.counit, H.counit))),
        ("counit is unital", lambda: (compose(H.counit, H.unit), one)),
    ], jobs or default_jobs())


def check_antipode(H: HopfAlgebra, jobs=None) -> Report:
    F, n = H.field, H.dim
    i = identity(F, (n,))
    eta_eps = compose(H.unit, H.counit)
    return check_identities("antipode", [
        ("antipode left", lambda: (compose_all(H.mult, tensor(H.antipode, i), H.comult), eta_eps)),
        ("antipode right", lambda: (compose_all(H.mult, tensor(i, H.antipode), H.comult), eta_eps)),
        ("antipode inverse", lambda: (compose(H.antipode, H.antipode_inv), i)),
    ], jobs or default_jobs())


def certify_hopf(H: HopfAlgebra, jobs=None) -> Report:
    """All five Hopf checkers merged into one report."""
    rep = Report("hopf algebra")
    for check in (check_associative, check_unital, check_coassociative, check_counital,
                  check_bialgebra, check_antipode):
        rep.extend(check(H, jobs))
    return rep


def certify_algebra(A, jobs=None) -> Report:
    rep = Report("algebra")
    rep.extend(check_associative(A, jobs))
    rep.extend(check_unital(A, jobs))
    return rep


def check_comodule_algebra(CA: ComoduleAlgebra, jobs=None) -> Report:
    A, H, d = CA.A, CA.H, CA.coaction
    F = CA.field
    iA, iH = identity(F, (A.dim,)), identity(F, (H.dim,))
    AH = tensor_algebra(A, H.algebra)
    return check_identities("comodule algebra", [
        ("coaction coassociative", lambda: (compose(tensor(d, iH), d), compose(tensor(iA, H.comult), d))),
        ("coaction counital", lambda: (compose(tensor(iA, H.counit), d).reshape(cod=(A.dim,)), iA)),
        ("coaction unital", lambda: (compose(d, A.unit), tensor(A.unit, H.unit))),
        ("coaction multiplicative", lambda: (
            compose(d, A.mult).reshape(cod=(A.dim * H.dim,)), compose(AH.mult, tensor(d, d)))),
    ], jobs or default_jobs())


# duals and regular actions --------------------------------------------------

def dual_hopf(H: HopfAlgebra) -> HopfAlgebra:
    """H* in the dual basis: every structure map is the transpose of its partner."""
    F, n = H.field, H.dim
    labels = [f"{s}^*" for s in H.labels]
    alg = Algebra(F, n, H.comult.transpose(), H.counit.transpose(), labels)
    coalg = Coalgebra(F, n, H.mult.transpose(), H.unit.transpose())
    name = f"{H.name}*" if H.name else None
    return HopfAlgebra(alg, coalg, H.antipode.transpose(), name=name)


def hit_right_map(H: HopfAlgebra) -> LinMap:
    """(phi, h) -> phi <- h on H* (x) H, where (phi <- h)(x) = phi(h x)."""
    n = H.dim
    trip = []
    for (c, ab, v) in H.mult.triples():
        a, b = divmod(ab, n)
        trip.append((b, c * n + a, v))
    return LinMap.from_triples(H.field, (n, n), (n,), trip)


def hit_left_map(H: HopfAlgebra) -> LinMap:
    """(h, phi) -> h -> phi on H (x) H*, where (h -> phi)(x) = phi(x h)."""
    n = H.dim
    trip = []
    for (c, ab, v) in H.mult.triples():
        a, b = divmod(ab, n)
        trip.append((a, b * n + c, v))
    return LinMap.from_triples(H.field, (n, n), (n,), trip)


def harpoon_right(phi: LinMap, h: LinMap, H: HopfAlgebra) -> LinMap:
    """phi <- h: H acting on H* from the right."""
    return compose(hit_right_map(H), tensor(phi, h)).reshape(cod=(H.dim,))


def harpoon_left(h: LinMap, phi: LinMap, H: HopfAlgebra) -> LinMap:
    """h -> phi: H acting on H* from the left."""
    return compose(hit_left_map(H), tensor(h, phi)).reshape(cod=(H.dim,))


# convolution ----------------------------------------------------------------

def end_algebra(field, n, labels=None) -> Algebra:
    """End(V) for dim V = n; basis E_ij (index i*n + j) sends e_j to e_i."""
    trip = []
    for i in range(n):
        for j in range(n):
            for l in range(n):
                trip.append((i * n + l, (i * n + j) * n * n + j * n + l, 1))
    mult = LinMap.from_triples(field, (n * n, n * n), (n * n,), trip)
    unit = LinMap.vector(field, (n * n,), {i * n + i: 1 for i in range(n)})
    if labels is None:
        labels = [f"E{i}{j}" for i in range(n) for j in range(n)]
    return Algebra(field, n * n, mult, unit, labels)


def action_to_end(nu: LinMap, nH: int, nA: int) -> LinMap:
    """Curry ``H (x) A -> A`` into ``H -> End(A)``."""
    trip = []
    for (i, hj, v) in nu.triples():
        h, j = divmod(hj, nA)
        trip.append((i * nA + j, h, v))
    return LinMap.from_triples(nu.field, (nH,), (nA * nA,), trip)


def end_to_action(f: LinMap, nH: int, nA: int) -> LinMap:
    """Inverse of :func:`action_to_end`."""
    trip = []
    for (ij, h, v) in f.triples():
        i, j = divmod(ij, nA)
        trip.append((i, h * nA + j, v))
    return LinMap.from_triples(f.field, (nH, nA), (nA,), trip)


def convolution(f: LinMap, g: LinMap, C, E: Algebra) -> LinMap:
    """(f * g)(h) = f(h1) g(h2)."""
    C = _as_coalgebra(C)
    return compose_all(E.mult, tensor(f, g), C.comult).reshape(dom=(C.dim,), cod=(E.dim,))


def convolution_inverse(f: LinMap, C, E: Algebra) -> LinMap:
    """Two-sided inverse of f in the convolution algebra Hom(C, E).

    Solves ``f * g = unit o counit`` as one exact linear system in the
    ``dim E * dim C`` unknown entries of g, then verifies ``g * f`` as well.
    """
    C = _as_coalgebra(C)
    E = _as_algebra(E)
    F = E.field
    nC, nE = C.dim, E.dim
    target = compose(E.unit, C.counit).reshape(dom=(nC,), cod=(nE,))
    # column (e, h) of the system is f * E_{e,h}, flattened column-major by h
    cols = []
    for e in range(nE):
        for h in range(nC):
            basis_map = LinMap.from_triples(F, (nC,), (nE,), [(e, h, 1)])
            conv = convolution(f, basis_map, C, E)
            cols.append({hh * nE + r: v for hh, col in enumerate(conv.cols) for r, v in col.items()})
    system = LinMap(F, (nE * nC,), (nC * nE,), cols)
    rhs = {hh * nE + r: v for hh, col in enumerate(target.cols) for r, v in col.items()}
    try:
        x = solve_linear(system, rhs)
    except Inconsistent:
        raise NotConvolutionInvertible("f has no right convolution inverse") from None
    g = LinMap.from_triples(F, (nC,), (nE,), [(e, h, x[e * nC + h]) for e in range(nE) for h in range(nC)])
    if convolution(g, f, C, E) != target:
        raise NotConvolutionInvertible("right convolution inverse is not a left inverse")
    return g
