"""The brute-force oracles must themselves be right; check them against the definitions."""
import itertools

from hypothesis import given, strategies as st

from hopftwist.field import GF, Q

import oracles


def dense_associative(F, c):
    n = len(c)
    for i, j, k, m in itertools.product(range(n), repeat=4):
        lhs = sum(c[i][j][x] * c[x][k][m] for x in range(n))
        rhs = sum(c[j][k][x] * c[i][x][m] for x in range(n))
        if oracles.red(F, lhs - rhs):
            return False
    return True


@given(st.integers(1, 3).flatmap(
    lambda n: st.lists(st.integers(0, 2), min_size=n ** 3, max_size=n ** 3).map(lambda v: (n, v))))
def test_associative_agrees_with_the_definition(nv):
    n, v = nv
    F = GF(3)
    c = [[[v[(i * n + j) * n + k] for k in range(n)] for j in range(n)] for i in range(n)]
    assert oracles.associative(F, c) == dense_associative(F, c)


def test_associative_catches_a_non_associative_table():
    # e0 e0 = e1 and e1 e0 = e0: (e0 e0) e0 = e0 but e0 (e0 e0) = e0 e1 = 0
    c = [[[0, 1], [0, 0]], [[1, 0], [0, 0]]]
    assert not oracles.associative(Q, c)


def test_inverse_round_trip():
    M = [[2, 1], [1, 1]]
    inv = oracles.inverse(Q, M)
    assert inv == [[1, -1], [-1, 2]]
    assert oracles.inverse(Q, [[1, 2], [2, 4]]) is None
    assert oracles.inverse(GF(5), [[2, 0], [0, 3]]) == [[3, 0], [0, 2]]
