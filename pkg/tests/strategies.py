"""Hypothesis strategies for exact scalars and small sparse matrices."""
from fractions import Fraction

from hypothesis import strategies as st

from hopftwist.field import GF, Q
from hopftwist.linmap import LinMap

fields = st.sampled_from([Q, GF(5), GF(7), GF(2 ** 31 - 1)])


def scalars(F):
    if F.characteristic:
        return st.integers(0, F.characteristic - 1)
    return st.builds(Fraction, st.integers(-6, 6), st.integers(1, 5))


def nonzero_scalars(F):
    return scalars(F).filter(bool)


@st.composite
def matrices(draw, F, nrows, ncols, density=0.5):
    rows = []
    for _ in range(nrows):
        row = []
        for _ in range(ncols):
            row.append(draw(scalars(F)) if draw(st.floats(0, 1)) < density else 0)
        rows.append(row)
    return LinMap.from_dense(F, rows)


@st.composite
def field_and_matrix(draw, max_dim=4):
    F = draw(fields)
    n = draw(st.integers(1, max_dim))
    m = draw(st.integers(1, max_dim))
    return F, draw(matrices(F, n, m))
