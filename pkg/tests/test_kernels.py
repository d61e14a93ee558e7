import os

import pytest
from hypothesis import given, strategies as st

from hopftwist import kernels
from hopftwist.algebra import certify_algebra
from hopftwist.constructions import drinfeld_double, sweedler_h4
from hopftwist.field import GF, Q

from strategies import fields, matrices

BACKENDS = sorted(kernels.available())


def test_compiled_backend_is_default_when_built():
    assert "python" in BACKENDS
    if os.environ.get("HOPFTWIST_PURE", "") not in ("", "0"):
        assert kernels.BACKEND == "python"
    elif "cython" in BACKENDS:
        assert kernels.BACKEND == "cython"


def test_use_switches_and_restores():
    prev = kernels.use("python")
    try:
        assert kernels.BACKEND == "python"
    finally:
        kernels.use(prev)
    assert kernels.BACKEND == prev


def test_unknown_backend():
    with pytest.raises(ValueError):
        kernels.use("fortran")


@pytest.mark.skipif(len(BACKENDS) < 2, reason="compiled kernels not built")
@given(st.data())
def test_backends_agree(data):
    F = data.draw(st.sampled_from([Q, GF(5), GF(2 ** 31 - 1), GF(2 ** 61 - 1)]))
    n, k, m = (data.draw(st.integers(1, 5)) for _ in range(3))
    A = data.draw(matrices(F, n, k))
    B = data.draw(matrices(F, k, m))
    p = F.kernel_modulus
    impls = kernels.available()
    py, cy = impls["python"], impls["cython"]
    assert py.matmul(A.cols, B.cols, n, p) == cy.matmul(A.cols, B.cols, n, p)
    assert py.kron(A.cols, n, B.cols, k, p) == cy.kron(A.cols, n, B.cols, k, p)


@pytest.mark.parametrize("F", [Q, GF(5)], ids=["Q", "GF5"])
def test_backends_give_same_double(F):
    prev = kernels.BACKEND
    try:
        out = {}
        for b in BACKENDS:
            kernels.use(b)
            D = drinfeld_double(sweedler_h4(F))
            out[b] = (D.mult.triples(), certify_algebra(D).ok)
        assert len({repr(v) for v in out.values()}) == 1
    finally:
        kernels.use(prev)
