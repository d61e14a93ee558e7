"""Dimension-aware exact linear maps.

A :class:`LinMap` is a sparse matrix over a :class:`~hopftwist.field.Field`
together with the tensor-factor dimensions of its domain and codomain.  The
basis of ``V (x) W`` is ordered lexicographically with the left factor major,
so basis vector ``(i, j)`` has index ``i * dim W + j``.  Every formula in the
package is translated into indices under this one convention.

Vectors are maps out of the ground field: an element of ``V`` is a LinMap
with ``dom == (1,)``.
"""
from __future__ import annotations

import itertools
import math

from . import kernels
from .errors import Inconsistent, InputError, NotInvertible
from .field import Field


def _prod(factors):
    return math.prod(factors) if factors else 1


def ravel(idx, factors):
    """Basis tuple -> flat index."""
    n = 0
    for i, d in zip(idx, factors):
        n = n * d + i
    return n


def unravel(n, factors):
    """Flat index -> basis tuple."""
    out = []
    for d in reversed(factors):
        n, i = divmod(n, d)
        out.append(i)
    return tuple(reversed(out))


class LinMap:
    __slots__ = ("field", "dom", "cod", "_cols", "_nrows")

    def __init__(self, field: Field, dom, cod, cols):
        dom, cod = tuple(dom) or (1,), tuple(cod) or (1,)
        if any(d < 1 for d in dom + cod):
            raise InputError(f"factor dimensions must be positive: {dom} -> {cod}")
        nrows, ncols = _prod(cod), _prod(dom)
        cols = list(cols)
        if len(cols) != ncols:
            raise InputError(f"expected {ncols} columns for domain {dom}, got {len(cols)}")
        self.field = field
        self.dom = dom
        self.cod = cod
        self._cols = cols
        self._nrows = nrows

    # construction ---------------------------------------------------------

    @classmethod
    def zero(cls, field, dom, cod):
        return cls(field, dom, cod, [{} for _ in range(_prod(dom))])

    @classmethod
    def from_dense(cls, field, rows, dom=None, cod=None):
        rows = [list(r) for r in rows]
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        dom = tuple(dom) if dom is not None else (ncols,)
        cod = tuple(cod) if cod is not None else (nrows,)
        if _prod(dom) != ncols or _prod(cod) != nrows or any(len(r) != ncols for r in rows):
            raise InputError("dense matrix shape does not match factor lists")
        cols = [{} for _ in range(ncols)]
        for i, row in enumerate(rows):
            for j, v in enumerate(row):
                v = field(v)
                if v:
                    cols[j][i] = v
        return cls(field, dom, cod, cols)

    @classmethod
    def from_triples(cls, field, dom, cod, triples):
        """Build from ``(row, col, value)`` triples; repeated positions add up."""
        m = cls.zero(field, dom, cod)
        for r, c, v in triples:
            if not (0 <= r < m._nrows and 0 <= c < len(m._cols)):
                raise InputError(f"entry ({r}, {c}) outside a {m._nrows}x{len(m._cols)} matrix")
            col = m._cols[c]
            s = field.add(col.get(r, field.zero), field(v))
            if s:
                col[r] = s
            else:
                col.pop(r, None)
        return m

    @classmethod
    def from_function(cls, field, dom, cod, fn):
        """``fn(basis tuple) -> {codomain tuple: scalar}`` evaluated on every basis tuple."""
        dom, cod = tuple(dom), tuple(cod)
        cols = []
        for idx in itertools.product(*(range(d) for d in dom)):
            col = {}
            for out, v in fn(idx).items():
                r = ravel(out, cod)
                s = field.add(col.get(r, field.zero), field(v))
                if s:
                    col[r] = s
                else:
                    col.pop(r, None)
            cols.append(col)
        return cls(field, dom, cod, cols)

    @classmethod
    def vector(cls, field, cod, coords):
        """Element of the space with factors ``cod``; coords is a dict or dense list."""
        cod = tuple(cod)
        if isinstance(coords, dict):
            items = coords.items()
        else:
            items = enumerate(coords)
        col = {}
        for k, v in items:
            if isinstance(k, tuple):
                k = ravel(k, cod)
            v = field(v)
            if v:
                col[k] = field.add(col.get(k, field.zero), v)
        return cls(field, (1,), cod, [{k: v for k, v in col.items() if v}])

    # shape ----------------------------------------------------------------

    @property
    def nrows(self):
        return self._nrows

    @property
    def ncols(self):
        return len(self._cols)

    @property
    def cols(self):
        return self._cols

    def column(self, j) -> dict:
        if isinstance(j, tuple):
            j = ravel(j, self.dom)
        return dict(sorted(self._cols[j].items()))

    def entry(self, r, c):
        if isinstance(r, tuple):
            r = ravel(r, self.cod)
        if isinstance(c, tuple):
            c = ravel(c, self.dom)
        return self._cols[c].get(r, self.field.zero)

    def coords(self) -> list:
        """Dense coordinate list of a vector (``ncols == 1``)."""
        if self.ncols != 1:
            raise InputError("coords() is only defined for vectors")
        z = self.field.zero
        col = self._cols[0]
        return [col.get(i, z) for i in range(self._nrows)]

    def to_dense(self):
        z = self.field.zero
        rows = [[z] * self.ncols for _ in range(self._nrows)]
        for j, col in enumerate(self._cols):
            for i, v in col.items():
                rows[i][j] = v
        return rows

    def triples(self):
        """Sorted ``(row, col, value)`` for all nonzero entries."""
        out = []
        for j, col in enumerate(self._cols):
            for i, v in col.items():
                out.append((i, j, v))
        out.sort(key=lambda t: (t[0], t[1]))
        return out

    def nnz(self):
        return sum(len(c) for c in self._cols)

    def reshape(self, dom=None, cod=None):
        """Same matrix, different factor metadata."""
        dom = tuple(dom) if dom is not None else self.dom
        cod = tuple(cod) if cod is not None else self.cod
        if _prod(dom) != self.ncols or _prod(cod) != self._nrows:
            raise InputError(f"cannot reshape {self.dom}->{self.cod} to {dom}->{cod}")
        return LinMap(self.field, dom, cod, self._cols)

    # algebra --------------------------------------------------------------

    def __matmul__(self, other):
        return compose(self, other)

    def _check_same(self, other):
        if not isinstance(other, LinMap):
            return NotImplemented
        if other.field != self.field:
            raise InputError(f"field mismatch: {self.field!r} vs {other.field!r}")
        if other.ncols != self.ncols or other._nrows != self._nrows:
            raise InputError(
                f"shape mismatch: {self._nrows}x{self.ncols} vs {other._nrows}x{other.ncols}")

    def __add__(self, other):
        self._check_same(other)
        F = self.field
        cols = []
        for a, b in zip(self._cols, other._cols):
            c = dict(a)
            for r, v in b.items():
                s = F.add(c.get(r, F.zero), v)
                if s:
                    c[r] = s
                else:
                    c.pop(r, None)
            cols.append(c)
        return LinMap(F, self.dom, self.cod, cols)

    def __neg__(self):
        F = self.field
        return LinMap(F, self.dom, self.cod, [{r: F.neg(v) for r, v in c.items()} for c in self._cols])

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        F = self.field
        c = F(c)
        if not c:
            return LinMap.zero(F, self.dom, self.cod)
        return LinMap(F, self.dom, self.cod, [{r: F.mul(c, v) for r, v in col.items()} for col in self._cols])

    def transpose(self):
        cols = [{} for _ in range(self._nrows)]
        for j, col in enumerate(self._cols):
            for i, v in col.items():
                cols[i][j] = v
        return LinMap(self.field, self.cod, self.dom, cols)

    def __eq__(self, other):
        if not isinstance(other, LinMap):
            return NotImplemented
        return (other.field == self.field and other._nrows == self._nrows
                and other.ncols == self.ncols and other._cols == self._cols)

    __hash__ = None

    def is_zero(self):
        return not any(self._cols)

    def nonzero_columns(self):
        return [j for j, c in enumerate(self._cols) if c]

    def __repr__(self):
        return f"LinMap({self.field!r}, {self.dom}->{self.cod}, nnz={self.nnz()})"


# free functions -------------------------------------------------------------

def identity(field, factors):
    factors = tuple(factors) or (1,)
    n = _prod(factors)
    return LinMap(field, factors, factors, [{i: field.one} for i in range(n)])


def compose(f: LinMap, g: LinMap) -> LinMap:
    """f after g."""
    if f.field != g.field:
        raise InputError(f"field mismatch: {f.field!r} vs {g.field!r}")
    if g.nrows != f.ncols:
        raise InputError(f"cannot compose {f.dom}->{f.cod} after {g.dom}->{g.cod}")
    cols = kernels.matmul(f._cols, g._cols, f.nrows, f.field.kernel_modulus)
    return LinMap(f.field, g.dom, f.cod, cols)


def compose_all(*maps):
    """compose_all(f, g, h) == f @ g @ h."""
    out = maps[-1]
    for m in reversed(maps[:-1]):
        out = compose(m, out)
    return out


def tensor(*maps: LinMap) -> LinMap:
    """Kronecker product with concatenated factor lists."""
    if not maps:
        raise InputError("tensor() needs at least one map")
    out = maps[0]
    for g in maps[1:]:
        if g.field != out.field:
            raise InputError(f"field mismatch: {out.field!r} vs {g.field!r}")
        cols = kernels.kron(out._cols, out.nrows, g._cols, g.nrows, out.field.kernel_modulus)
        out = LinMap(out.field, out.dom + g.dom, out.cod + g.cod, cols)
    return out


def permutation(field, factors, order):
    """Reorder tensor factors: slot k of the output is slot ``order[k]`` of the input."""
    factors = tuple(factors)
    order = tuple(order)
    if sorted(order) != list(range(len(factors))):
        raise InputError(f"{order} is not a permutation of {len(factors)} slots")
    new = tuple(factors[i] for i in order)
    cols = []
    for idx in itertools.product(*(range(d) for d in factors)):
        cols.append({ravel(tuple(idx[i] for i in order), new): field.one})
    return LinMap(field, factors, new, cols)


def flip(field, m, n):
    """tau: V (x) W -> W (x) V with dim V = m, dim W = n."""
    if m < 1 or n < 1:
        raise InputError("flip dimensions must be positive")
    return permutation(field, (m, n), (1, 0))


# exact elimination ----------------------------------------------------------

def _row_reduce(F, rows, ncols):
    """In-place reduced row echelon form on the first ``ncols`` entries of each row.

    Row operations are applied to the full rows, so augmented columns follow.
    Returns the pivot columns.
    """
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = F.inv(rows[r][c])
        rows[r] = [F.mul(inv, v) for v in rows[r]]
        pr = rows[r]
        for i in range(nrows):
            if i != r and rows[i][c]:
                k = rows[i][c]
                rows[i] = [F.sub(a, F.mul(k, b)) for a, b in zip(rows[i], pr)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def rank(f: LinMap) -> int:
    rows = f.to_dense()
    return len(_row_reduce(f.field, rows, f.ncols))


def invert(f: LinMap) -> LinMap:
    """Exact inverse by Gauss-Jordan elimination; domain and codomain swap."""
    if f.nrows != f.ncols:
        raise NotInvertible(f"{f.nrows}x{f.ncols} map is not square", rank=None)
    F = f.field
    n = f.nrows
    dense = f.to_dense()
    rows = [dense[i] + [F.one if j == i else F.zero for j in range(n)] for i in range(n)]
    pivots = _row_reduce(F, rows, n)
    if len(pivots) < n:
        raise NotInvertible(f"map has rank {len(pivots)} < {n}", rank=len(pivots))
    inv_rows = [row[n:] for row in rows]
    return LinMap.from_dense(F, inv_rows, dom=f.cod, cod=f.dom)


def solve_linear(A: LinMap, b):
    """Solve ``A x = b`` exactly; returns x as a dense list (free variables set to 0).

    ``b`` is a dense list, a ``{row: value}`` dict, or a vector LinMap.
    Raises :class:`Inconsistent` carrying y with ``y A = 0`` and ``y b != 0``.
    """
    F = A.field
    m, n = A.nrows, A.ncols
    if isinstance(b, LinMap):
        if b.ncols != 1:
            raise InputError("right-hand side must be a vector")
        b = b.coords()
    elif isinstance(b, dict):
        b = [b.get(i, F.zero) for i in range(m)]
    b = [F(v) for v in b]
    if len(b) != m:
        raise InputError(f"right-hand side has length {len(b)}, expected {m}")
    dense = A.to_dense()
    rows = [dense[i] + [b[i]] + [F.one if j == i else F.zero for j in range(m)] for i in range(m)]
    pivots = _row_reduce(F, rows, n)
    for row in rows[len(pivots):]:
        if row[n]:
            raise Inconsistent("linear system has no solution", certificate=row[n + 1:])
    x = [F.zero] * n
    for row, c in zip(rows, pivots):
        x[c] = row[n]
    return x


# wiring ---------------------------------------------------------------------

class Wiring:
    """Incremental builder for composites acting on a row of tensor slots.

    Each step acts on consecutive slots; the slots are tracked so that a
    Sweedler-notation formula can be written down one leg at a time::

        w = Wiring(F, [nB, nA])            # b (x) a
        w.apply(rho, at=1)                 # b (x) a0 (x) a1
        w.apply(R, at=0)                   # a0_R (x) b_R (x) a1
        w.apply(mult_B, at=1)              # a0_R (x) b_R a1
        m = w.map
    """

    def __init__(self, field, factors):
        self.field = field
        self.factors = list(factors)
        self.map = identity(field, self.factors)

    def _push(self, step, new_factors):
        self.map = compose(step, self.map).reshape(dom=self.map.dom, cod=tuple(new_factors) or (1,))
        self.factors = list(new_factors)
        return self

    def _around(self, f, at, width):
        left, right = self.factors[:at], self.factors[at + width:]
        parts = []
        if left:
            parts.append(identity(self.field, left))
        parts.append(f)
        if right:
            parts.append(identity(self.field, right))
        return tensor(*parts), left, right

    def apply(self, f: LinMap, at=0):
        k = len(f.dom)
        if tuple(self.factors[at:at + k]) != f.dom:
            raise InputError(f"map with domain {f.dom} does not fit slots {self.factors[at:at + k]} at {at}")
        step, left, right = self._around(f, at, k)
        return self._push(step, left + list(f.cod) + right)

    def insert(self, vec: LinMap, at=0):
        """Tensor in a fixed element (a map out of the ground field) at slot ``at``."""
        if vec.ncols != 1:
            raise InputError("insert() takes a vector")
        step, left, right = self._around(vec, at, 0)
        return self._push(step, left + list(vec.cod) + right)

    def contract(self, functional: LinMap, at=0):
        """Apply a functional (a map into the ground field), removing its slots."""
        if functional.nrows != 1:
            raise InputError("contract() takes a functional")
        k = len(functional.dom)
        if tuple(self.factors[at:at + k]) != functional.dom:
            raise InputError(f"functional with domain {functional.dom} does not fit at {at}")
        step, left, right = self._around(functional, at, k)
        return self._push(step, left + right)

    def permute(self, order):
        p = permutation(self.field, self.factors, order)
        return self._push(p, list(p.cod))
