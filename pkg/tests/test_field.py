from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hopftwist.errors import InputError
from hopftwist.field import GF, Q, Field

from strategies import fields, nonzero_scalars, scalars


def test_names_round_trip():
    assert Q.name == "Q"
    assert GF(5).name == "GF:5"
    assert Field.from_name("GF:7") == GF(7)
    assert Field.from_name("Q") == Q


@pytest.mark.parametrize("bad", ["GF:4", "GF:1", "GF:x", "R", "GF:"])
def test_bad_field_names(bad):
    with pytest.raises(InputError):
        Field.from_name(bad)


def test_parse_rationals():
    assert Q.parse("3") == 3
    assert Q.parse("-1/2") == Fraction(-1, 2)
    assert Q.parse(" 4/6 ") == Fraction(2, 3)
    with pytest.raises(InputError):
        Q.parse("1/0")
    with pytest.raises(InputError):
        Q.parse("0.5")


def test_parse_residues():
    F = GF(5)
    assert F.parse("7") == 2
    assert F.parse("-1") == 4
    with pytest.raises(InputError):
        F.parse("1/2")


def test_half():
    assert Q.half() == Fraction(1, 2)
    assert GF(5).half() == 3
    with pytest.raises(InputError):
        GF(2).half()


def test_inverse_of_zero():
    with pytest.raises(ZeroDivisionError):
        GF(5).inv(0)


@given(st.data())
def test_format_parse_round_trip(data):
    F = data.draw(fields)
    a = F(data.draw(scalars(F)))
    assert F.parse(F.format(a)) == a


@given(st.data())
def test_inverse_is_two_sided(data):
    F = data.draw(fields)
    a = F(data.draw(nonzero_scalars(F)))
    assert F.mul(a, F.inv(a)) == F.one
    assert F.div(a, a) == F.one


@given(st.data())
def test_arithmetic_closes_exactly(data):
    # re-association gives bit-identical canonical scalars
    F = data.draw(fields)
    a, b, c = (F(data.draw(scalars(F))) for _ in range(3))
    assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    assert F.format(F.mul(a, F.add(b, c))) == F.format(F.add(F.mul(a, b), F.mul(a, c)))


def test_primality_matches_sieve():
    from hopftwist.field import _is_prime
    N = 5000
    sieve = [True] * N
    sieve[0] = sieve[1] = False
    for i in range(2, N):
        if sieve[i]:
            for j in range(i * i, N, i):
                sieve[j] = False
    assert [n for n in range(N) if _is_prime(n)] == [n for n in range(N) if sieve[n]]


def test_large_prime_fields():
    assert GF(2 ** 61 - 1).characteristic == 2 ** 61 - 1
    with pytest.raises(InputError):
        GF(2 ** 61 + 1)
    with pytest.raises(InputError):
        GF(561)  # Carmichael number
