"""Twisting maps R: B (x) A -> A (x) B and twisted tensor products A (x)_R B.

Writing R(b (x) a) = a_R (x) b_R, a twisting map satisfies

    a_R (x) 1_R = a (x) 1                 R o (unit_B (x) id) = id (x) unit_B
    1_R (x) b_R = 1 (x) b                 R o (id (x) unit_A) = unit_A (x) id
    (aa')_R (x) b_R = a_R a'_r (x) b_Rr   R o (id (x) mult_A) = (mult_A (x) id)(id (x) R)(R (x) id)
    a_R (x) (bb')_R = a_Rr (x) b_r b'_R   R o (mult_B (x) id) = (id (x) mult_B)(R (x) id)(id (x) R)

and then (a (x) b)(a' (x) b') = a a'_R (x) b_R b' is associative with unit 1 (x) 1.
"""
from __future__ import annotations

from dataclasses import dataclass

from .algebra import Algebra, certify_algebra
from .errors import CertificationError, InputError, InternalConsistencyError
from .linmap import LinMap, compose, compose_all, identity, tensor
from .report import Report, check_identities, default_jobs

AXIOM_UNIT_B = "unit axiom a_R⊗1_R = a⊗1"
AXIOM_UNIT_A = "unit axiom 1_R⊗b_R = 1⊗b"
AXIOM_MULT_A = "multiplicativity (aa')_R⊗b_R = a_R a'_r⊗b_Rr"
AXIOM_MULT_B = "multiplicativity a_R⊗(bb')_R = a_Rr⊗b_r b'_R"


class TwistingData:
    """Algebras A, B and a candidate twisting map R: B⊗A -> A⊗B.

    ``certificate`` holds the report of the last :func:`check_twisting_axioms`
    run; constructions downstream refuse data without a passing certificate.
    """

    def __init__(self, A: Algebra, B: Algebra, R: LinMap):
        if A.field != B.field or R.field != A.field:
            raise InputError("twisting data over mixed fields")
        if R.ncols != B.dim * A.dim or R.nrows != A.dim * B.dim:
            raise InputError(f"R must map {B.dim}x{A.dim} -> {A.dim}x{B.dim}")
        self.A = A
        self.B = B
        self.R = R.reshape(dom=(B.dim, A.dim), cod=(A.dim, B.dim))
        self.certificate = None

    field = property(lambda self: self.A.field)

    @property
    def certified(self) -> bool:
        return self.certificate is not None and self.certificate.ok

    def ensure_certified(self):
        if self.certificate is None:
            check_twisting_axioms(self)
        if not self.certificate.ok:
            raise CertificationError("R is not a twisting map", self.certificate)
        return self


@dataclass
class TwistedProduct:
    source: TwistingData
    product: Algebra


def check_twisting_axioms(T: TwistingData, jobs=None) -> Report:
    A, B, R = T.A, T.B, T.R
    F = T.field
    iA, iB = identity(F, (A.dim,)), identity(F, (B.dim,))
    rep = check_identities("twisting map", [
        (AXIOM_UNIT_B, lambda: (compose(R, tensor(B.unit, iA)).reshape(dom=(A.dim,)),
                                tensor(iA, B.unit).reshape(dom=(A.dim,)))),
        (AXIOM_UNIT_A, lambda: (compose(R, tensor(iB, A.unit)).reshape(dom=(B.dim,)),
                                tensor(A.unit, iB).reshape(dom=(B.dim,)))),
        (AXIOM_MULT_A, lambda: (compose(R, tensor(iB, A.mult)),
                                compose_all(tensor(A.mult, iB), tensor(iA, R), tensor(R, iA)))),
        (AXIOM_MULT_B, lambda: (compose(R, tensor(B.mult, iA)),
                                compose_all(tensor(iA, B.mult), tensor(R, iB), tensor(iB, R)))),
    ], jobs or default_jobs())
    T.certificate = rep
    return rep


def twisted_mult(T: TwistingData) -> LinMap:
    """(mult_A (x) mult_B) o (id_A (x) R (x) id_B) on A⊗B⊗A⊗B."""
    A, B = T.A, T.B
    F = T.field
    m = compose(tensor(A.mult, B.mult), tensor(identity(F, (A.dim,)), T.R, identity(F, (B.dim,))))
    n = A.dim * B.dim
    return m.reshape(dom=(n, n), cod=(n,))


def build_twisted_product(T: TwistingData, labels=None, jobs=None) -> TwistedProduct:
    """A (x)_R B; refuses uncertified data and re-verifies the result exhaustively."""
    if not T.certified:
        raise CertificationError("build_twisted_product needs data certified by check_twisting_axioms",
                                 T.certificate)
    A, B = T.A, T.B
    if labels is None:
        labels = [f"{a}⊗{b}" for a in A.labels for b in B.labels]
    prod = Algebra(T.field, A.dim * B.dim, twisted_mult(T), tensor(A.unit, B.unit), labels)
    rep = certify_algebra(prod, jobs)
    if not rep.ok:
        raise InternalConsistencyError("twisted product of a certified twisting map is not an "
                                       "associative unital algebra", rep)
    return TwistedProduct(T, prod)
