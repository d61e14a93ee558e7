"""Invariance under twisting, as executable engines.

Star products
    Given R: B⊗A -> A⊗B, an action mu: B⊗A -> A (b·a) and rho: A -> A⊗B
    (a -> a(0)⊗a(1)), the product a*a' = a(0)(a(1)·a') is associative with
    the unit of A provided

        rho(1) = 1⊗1,  1·a = a,  a(0)(a(1)·1) = a,
        b·(a*a') = a(0)_R (b_R a(1) · a'),
        rho(a*a') = a(0) a'(0)_R ⊗ a(1)_R a'(1).

Invariance
    Given a twisting map R, a second algebra A' on the space of A with the
    same unit (product a*a'), and rho, lambda: A -> A⊗B (a -> a[0]⊗a[1] for
    lambda) such that rho: A' -> A⊗_R B is an algebra map, lambda(1) = 1⊗1 and

        lambda(aa') = a[0]*(a'_R)[0] ⊗ (a'_R)[1](a[1])_R,
        a(0)[0] ⊗ a(0)[1] a(1) = a⊗1,
        a[0](0) ⊗ a[0](1) a[1] = a⊗1,

    the map R'(b⊗a) = (a(0)_R)[0] ⊗ (a(0)_R)[1] b_R a(1) is a twisting map
    and a⊗b -> a(0)⊗a(1)b is an algebra isomorphism A'⊗_R' B -> A⊗_R B.

Every formula above is mechanized once with :class:`~hopftwist.linmap.Wiring`.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import Algebra, certify_algebra
from .errors import CertificationError, InputError, InternalConsistencyError, NotInvertible
from .linmap import LinMap, Wiring, compose, identity, invert, tensor
from .report import Failure, Report, check_identities, compare, default_jobs
from .twisting import TwistingData, build_twisted_product, check_twisting_axioms, twisted_mult

STAR_RHO_UNIT = "rho(1) = 1⊗1"
STAR_ACTION_UNIT = "1·a = a"
STAR_RIGHT_UNIT = "a(0)(a(1)·1) = a"
STAR_ACTION_COMPAT = "b·(a*a') = a(0)_R(b_R a(1)·a')"
STAR_RHO_MULT = "rho(a*a') = a(0)a'(0)_R ⊗ a(1)_R a'(1)"

INV_RHO_MULT = "rho: A' -> A⊗_R B multiplicative"
INV_RHO_UNIT = "rho(1) = 1⊗1"
INV_LAMBDA_UNIT = "lambda(1) = 1⊗1"
INV_LAMBDA_MULT = "lambda(aa') = a[0]*(a'_R)[0] ⊗ (a'_R)[1](a[1])_R"
INV_RHO_LAMBDA = "a(0)[0] ⊗ a(0)[1]a(1) = a⊗1"
INV_LAMBDA_RHO = "a[0](0) ⊗ a[0](1)a[1] = a⊗1"


def _ensure_twisting(T: TwistingData):
    try:
        T.ensure_certified()
    except CertificationError:
        raise CertificationError("R is not a certified twisting map", T.certificate) from None


# star products ------------------------------------------------------------

class StarData:
    def __init__(self, T: TwistingData, mu: LinMap, rho: LinMap):
        nA, nB = T.A.dim, T.B.dim
        if mu.ncols != nB * nA or mu.nrows != nA:
            raise InputError(f"mu must map {nB}x{nA} -> {nA}")
        if rho.ncols != nA or rho.nrows != nA * nB:
            raise InputError(f"rho must map {nA} -> {nA}x{nB}")
        self.T = T
        self.mu = mu.reshape(dom=(nB, nA), cod=(nA,))
        self.rho = rho.reshape(dom=(nA,), cod=(nA, nB))
        self.report = None

    field = property(lambda self: self.T.field)


def star_mult(S: StarData) -> LinMap:
    """a⊗a' -> a(0)(a(1)·a')."""
    A = S.T.A
    w = Wiring(A.field, [A.dim, A.dim])
    w.apply(S.rho, at=0)        # a(0), a(1), a'
    w.apply(S.mu, at=1)         # a(0), a(1)·a'
    w.apply(A.mult, at=0)
    return w.map


def check_star_hypotheses(S: StarData, jobs=None) -> Report:
    T = S.T
    _ensure_twisting(T)
    A, B, R = T.A, T.B, T.R
    F = A.field
    nA, nB = A.dim, B.dim
    iA = identity(F, (nA,))
    star = star_mult(S)

    def right_unit():
        w = Wiring(F, [nA])
        w.apply(S.rho, at=0)
        w.insert(A.unit, at=2)
        w.apply(S.mu, at=1)
        w.apply(A.mult, at=0)
        return w.map, iA

    def action_compat():
        w = Wiring(F, [nB, nA, nA])
        w.apply(S.rho, at=1)        # b, a(0), a(1), a'
        w.apply(R, at=0)            # a(0)_R, b_R, a(1), a'
        w.apply(B.mult, at=1)       # a(0)_R, b_R a(1), a'
        w.apply(S.mu, at=1)         # a(0)_R, (b_R a(1))·a'
        w.apply(A.mult, at=0)
        return compose(S.mu, tensor(identity(F, (nB,)), star)), w.map

    def rho_mult():
        return compose(S.rho, star), compose(twisted_mult(T), tensor(S.rho, S.rho))

    rep = check_identities("star product hypotheses", [
        (STAR_RHO_UNIT, lambda: (compose(S.rho, A.unit), tensor(A.unit, B.unit))),
        (STAR_ACTION_UNIT, lambda: (compose(S.mu, tensor(B.unit, iA)).reshape(dom=(nA,)), iA)),
        (STAR_RIGHT_UNIT, right_unit),
        (STAR_ACTION_COMPAT, action_compat),
        (STAR_RHO_MULT, rho_mult),
    ], jobs or default_jobs())
    S.report = rep
    return rep


def build_star_algebra(S: StarData, labels=None, jobs=None) -> Algebra:
    """(A, *, 1_A); refuses data whose hypotheses have not passed."""
    if S.report is None or not S.report.ok:
        raise CertificationError("build_star_algebra needs data passing check_star_hypotheses", S.report)
    A = S.T.A
    alg = Algebra(A.field, A.dim, star_mult(S), A.unit, labels or A.labels)
    rep = certify_algebra(alg, jobs)
    if not rep.ok:
        raise InternalConsistencyError("star product is not associative unital although its "
                                       "hypotheses hold", rep)
    return alg


# invariance under twisting ----------------------------------------------

class InvarianceData:
    def __init__(self, T: TwistingData, Aprime: Algebra, rho: LinMap, lam: LinMap):
        A, B = T.A, T.B
        nA, nB = A.dim, B.dim
        if Aprime.dim != nA or Aprime.field != A.field:
            raise InputError("A' must live on the underlying space of A")
        if Aprime.unit != A.unit:
            raise InputError("A' must have the same unit vector as A")
        for name, m in (("rho", rho), ("lambda", lam)):
            if m.ncols != nA or m.nrows != nA * nB:
                raise InputError(f"{name} must map {nA} -> {nA}x{nB}")
        self.T = T
        self.Aprime = Aprime
        self.rho = rho.reshape(dom=(nA,), cod=(nA, nB))
        self.lam = lam.reshape(dom=(nA,), cod=(nA, nB))
        self.report = None

    field = property(lambda self: self.T.field)


@dataclass
class IsoCertificate:
    phi: LinMap
    phi_inv: LinMap | None
    source: Algebra
    target: Algebra
    bijective: bool
    unital: bool
    multiplicative: bool
    report: Report = field(default_factory=lambda: Report("isomorphism"))

    @property
    def ok(self) -> bool:
        return self.bijective and self.unital and self.multiplicative


def check_invariance_hypotheses(D: InvarianceData, jobs=None) -> Report:
    T = D.T
    _ensure_twisting(T)
    cert = certify_algebra(D.Aprime, jobs)
    if not cert.ok:
        raise CertificationError("A' is not an associative unital algebra", cert)
    A, B, R, Ap = T.A, T.B, T.R, D.Aprime
    F = T.field
    nA, nB = A.dim, B.dim
    iA = identity(F, (nA,))
    a_tensor_1 = tensor(iA, B.unit).reshape(dom=(nA,))

    def lambda_mult():
        w = Wiring(F, [nA, nA])
        w.apply(D.lam, at=0)        # a[0], a[1], a'
        w.apply(R, at=1)            # a[0], a'_R, a[1]_R
        w.apply(D.lam, at=1)        # a[0], (a'_R)[0], (a'_R)[1], a[1]_R
        w.apply(Ap.mult, at=0)      # a[0]*(a'_R)[0], ...
        w.apply(B.mult, at=1)       # ..., (a'_R)[1] a[1]_R
        return compose(D.lam, A.mult), w.map

    def rho_then_lambda():
        w = Wiring(F, [nA])
        w.apply(D.rho, at=0)
        w.apply(D.lam, at=0)
        w.apply(B.mult, at=1)
        return w.map, a_tensor_1

    def lambda_then_rho():
        w = Wiring(F, [nA])
        w.apply(D.lam, at=0)
        w.apply(D.rho, at=0)
        w.apply(B.mult, at=1)
        return w.map, a_tensor_1

    rep = check_identities("invariance hypotheses", [
        (INV_RHO_MULT, lambda: (compose(D.rho, Ap.mult), compose(twisted_mult(T), tensor(D.rho, D.rho)))),
        (INV_RHO_UNIT, lambda: (compose(D.rho, A.unit), tensor(A.unit, B.unit))),
        (INV_LAMBDA_UNIT, lambda: (compose(D.lam, A.unit), tensor(A.unit, B.unit))),
        (INV_LAMBDA_MULT, lambda_mult),
        (INV_RHO_LAMBDA, rho_then_lambda),
        (INV_LAMBDA_RHO, lambda_then_rho),
    ], jobs or default_jobs())
    D.report = rep
    return rep


def _require_hypotheses(D: InvarianceData):
    if D.report is None:
        check_invariance_hypotheses(D)
    if not D.report.ok:
        raise CertificationError("invariance hypotheses do not hold", D.report)


def twisted_map_formula(D: InvarianceData) -> LinMap:
    """R'(b⊗a) = (a(0)_R)[0] ⊗ (a(0)_R)[1] b_R a(1), without any certification."""
    T = D.T
    nA, nB = T.A.dim, T.B.dim
    w = Wiring(T.field, [nB, nA])
    w.apply(D.rho, at=1)            # b, a(0), a(1)
    w.apply(T.R, at=0)              # a(0)_R, b_R, a(1)
    w.apply(D.lam, at=0)            # (a(0)_R)[0], (a(0)_R)[1], b_R, a(1)
    w.apply(T.B.mult, at=1)         # ..., (a(0)_R)[1] b_R, a(1)
    w.apply(T.B.mult, at=1)         # ..., (a(0)_R)[1] b_R a(1)
    return w.map


def derive_twisted_map(D: InvarianceData, jobs=None) -> TwistingData:
    """The certified twisting map R': B⊗A' -> A'⊗B."""
    _require_hypotheses(D)
    Tp = TwistingData(D.Aprime, D.T.B, twisted_map_formula(D))
    rep = check_twisting_axioms(Tp, jobs)
    if not rep.ok:
        raise InternalConsistencyError("derived R' is not a twisting map although the hypotheses hold", rep)
    return Tp


def isomorphism_map(D: InvarianceData) -> LinMap:
    """a⊗b -> a(0) ⊗ a(1) b."""
    T = D.T
    w = Wiring(T.field, [T.A.dim, T.B.dim])
    w.apply(D.rho, at=0)
    w.apply(T.B.mult, at=1)
    return w.map


def build_isomorphism(D: InvarianceData, Tprime: TwistingData | None = None, jobs=None) -> IsoCertificate:
    """Certify a⊗b -> a(0)⊗a(1)b as an algebra isomorphism A'⊗_R' B -> A⊗_R B."""
    if Tprime is None:
        Tprime = derive_twisted_map(D, jobs)
    source = build_twisted_product(Tprime, jobs=jobs).product
    target = build_twisted_product(D.T, jobs=jobs).product
    phi = isomorphism_map(D)
    n = source.dim
    try:
        phi_inv = invert(phi)
        bijective = compose(phi, phi_inv) == identity(phi.field, phi.cod) and \
            compose(phi_inv, phi) == identity(phi.field, phi.dom)
    except NotInvertible:
        phi_inv, bijective = None, False
    rep = Report("isomorphism")
    flat = phi.reshape(dom=(n,), cod=(n,))
    for axiom, lhs, rhs in (
        ("phi(1⊗1) = 1⊗1", compose(flat, source.unit), target.unit),
        ("phi(xy) = phi(x)phi(y)", compose(flat, source.mult), compose(target.mult, tensor(flat, flat))),
    ):
        rep.checked.append(axiom)
        bad = compare(axiom, lhs, rhs)
        if bad:
            rep.failures.append(bad)
    rep.checked.append("phi bijective")
    if not bijective:
        rep.failures.append(Failure("phi bijective", (), {}, {}))
    cert = IsoCertificate(phi, phi_inv, source, target, bijective,
                          unital=rep.failed("phi(1⊗1) = 1⊗1") is None,
                          multiplicative=rep.failed("phi(xy) = phi(x)phi(y)") is None, report=rep)
    if not cert.ok:
        raise InternalConsistencyError("a⊗b -> a(0)⊗a(1)b is not an algebra isomorphism although the "
                                       "hypotheses hold", rep)
    return cert
