"""Exact scalar fields: the rationals and prime fields GF(p).

Scalars are plain Python values: ``Fraction`` over Q, ``int`` in ``0..p-1``
over GF(p).  A :class:`Field` knows how to coerce, combine, parse and print
them; nothing here ever rounds.
"""
from __future__ import annotations

import re
from fractions import Fraction

from .errors import InputError

_RATIONAL = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")
_INTEGER = re.compile(r"^\s*([+-]?\d+)\s*$")


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(n: int) -> bool:
    """Miller-Rabin with the first twelve prime bases (deterministic below 3.3e24)."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Field:
    """Either Q (``p is None``) or GF(p) for a prime ``p``."""

    __slots__ = ("p",)

    def __init__(self, p: int | None = None):
        if p is not None:
            p = int(p)
            if not _is_prime(p):
                raise InputError(f"GF({p}): modulus is not prime")
        self.p = p

    # identity -------------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, Field) and other.p == self.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return "Q" if self.p is None else f"GF({self.p})"

    @property
    def name(self) -> str:
        """Spelling used by the CLI and definition files: ``Q`` or ``GF:p``."""
        return "Q" if self.p is None else f"GF:{self.p}"

    @classmethod
    def from_name(cls, name: str) -> "Field":
        s = name.strip()
        if s.upper() in ("Q", "QQ"):
            return cls()
        m = re.fullmatch(r"(?i)GF[:(]?\s*(\d+)\s*\)?", s)
        if m is None:
            raise InputError(f"unknown field {name!r} (expected Q or GF:<p>)")
        return cls(int(m.group(1)))

    @property
    def characteristic(self) -> int:
        return 0 if self.p is None else self.p

    @property
    def kernel_modulus(self) -> int:
        """Modulus handed to the matrix kernels; 0 means exact rationals."""
        return 0 if self.p is None else self.p

    # arithmetic -----------------------------------------------------------

    @property
    def zero(self):
        return Fraction(0) if self.p is None else 0

    @property
    def one(self):
        return Fraction(1) if self.p is None else 1

    def __call__(self, x):
        """Coerce an int, Fraction or scalar string into this field."""
        if isinstance(x, str):
            return self.parse(x)
        if self.p is None:
            return Fraction(x)
        if isinstance(x, Fraction):
            return self.div(x.numerator % self.p, x.denominator % self.p)
        return int(x) % self.p

    def add(self, a, b):
        return a + b if self.p is None else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.p is None else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.p is None else (a * b) % self.p

    def neg(self, a):
        return -a if self.p is None else (-a) % self.p

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError(f"inverse of zero in {self!r}")
        if self.p is None:
            return 1 / Fraction(a)
        return pow(int(a), -1, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def half(self):
        if self.characteristic == 2:
            raise InputError("1/2 does not exist in characteristic 2")
        return self.inv(self(2))

    # text form ------------------------------------------------------------

    def parse(self, s: str):
        if self.p is None:
            m = _RATIONAL.match(s)
            if m is None:
                raise InputError(f"malformed rational scalar {s!r}")
            den = int(m.group(2)) if m.group(2) is not None else 1
            if den == 0:
                raise InputError(f"zero denominator in scalar {s!r}")
            return Fraction(int(m.group(1)), den)
        m = _INTEGER.match(s)
        if m is None:
            raise InputError(f"malformed GF({self.p}) scalar {s!r}")
        return int(m.group(1)) % self.p

    def format(self, a) -> str:
        if self.p is None:
            a = Fraction(a)
            return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"
        return str(int(a) % self.p)


Q = Field()


def GF(p: int) -> Field:
    return Field(p)
