"""Definition files: YAML documents describing one object each.

Top level::

    format: hopftwist/1
    kind: algebra            # see KINDS
    field: Q                 # or GF:5
    ...body...

Linear maps are written sparsely::

    mult:
      dom: [2, 2]
      cod: [2]
      entries: [[row, col, "scalar"], ...]

Scalars are strings ("3", "-1/2") or integers.  Any slot holding an object
may instead hold a reference: ``builtin:NAME`` or a path relative to the
file.  Unknown keys are rejected.  :func:`dumps` writes canonical, byte-stable
output that :func:`loads` reads back to an equal object.
"""
from __future__ import annotations

import os

import yaml

from . import builtins
from .algebra import Algebra, Coalgebra, ComoduleAlgebra, HopfAlgebra
from .constructions import SqtElement
from .errors import InputError
from .field import Field
from .invariance import InvarianceData, StarData
from .linmap import LinMap
from .pipelines import NuTwist
from .twisting import TwistingData

FORMAT = "hopftwist/1"

_BODY = {
    "linmap": {"dom", "cod", "entries"},
    "algebra": {"dim", "labels", "mult", "unit"},
    "hopf": {"name", "dim", "labels", "mult", "unit", "comult", "counit", "antipode"},
    "comodule-algebra": {"algebra", "hopf", "coaction"},
    "twisting-data": {"A", "B", "R"},
    "star-data": {"A", "B", "R", "mu", "rho"},
    "invariance-data": {"A", "B", "R", "Aprime", "rho", "lambda"},
    "nu-twist": {"name", "comodule", "nu"},
    "sqt-element": {"name", "hopf", "r"},
}
_OPTIONAL = {"name", "labels"}
KINDS = tuple(_BODY)
_HEADER = ("format", "kind", "field")


class _Ctx:
    def __init__(self, F: Field, base_dir: str, seen=()):
        self.F = F
        self.base_dir = base_dir
        self.seen = seen


# reading ------------------------------------------------------------------

def load(path: str, field: Field | None = None):
    """Parse a definition file; returns ``(kind, object)``."""
    return _load_file(path, field, ())


def _load_file(path, field, seen):
    path = os.path.abspath(path)
    if path in seen:
        raise InputError(f"circular reference through {path}")
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return _loads(text, os.path.dirname(path), field, seen + (path,), source=path)


def loads(text: str, base_dir: str = ".", field: Field | None = None):
    return _loads(text, base_dir, field, (), source="<string>")


def _loads(text, base_dir, field, seen, source):
    try:
        doc = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        raise InputError(f"{source}: not valid YAML ({exc})") from None
    if not isinstance(doc, dict):
        raise InputError(f"{source}: expected a mapping at top level")
    if doc.get("format") != FORMAT:
        raise InputError(f"{source}: format must be {FORMAT!r}, got {doc.get('format')!r}")
    kind = doc.get("kind")
    if kind not in _BODY:
        raise InputError(f"{source}: unknown kind {kind!r}; expected one of {', '.join(KINDS)}")
    if "field" not in doc:
        raise InputError(f"{source}: missing field")
    F = Field.from_name(str(doc["field"]))
    if field is not None and F != field:
        raise InputError(f"{source}: declared field {F.name} but {field.name} was required")
    body = {k: v for k, v in doc.items() if k not in _HEADER}
    try:
        return kind, _parse(kind, body, _Ctx(F, base_dir, seen))
    except InputError as exc:
        raise InputError(f"{source}: {exc}") from None


def _check_keys(kind, body):
    if not isinstance(body, dict):
        raise InputError(f"{kind}: expected a mapping")
    allowed = _BODY[kind]
    extra = set(body) - allowed
    if extra:
        raise InputError(f"{kind}: unknown keys {sorted(extra)}")
    missing = allowed - _OPTIONAL - set(body)
    if missing:
        raise InputError(f"{kind}: missing keys {sorted(missing)}")


def _ref(kind, value, ctx: _Ctx):
    """Resolve a slot: inline mapping, ``builtin:`` URI or relative path."""
    if isinstance(value, str):
        if value.startswith("builtin:"):
            if kind == "linmap":
                raise InputError("linear maps have no builtins")
            return _coerce(kind, *_builtin(kind, value, ctx.F))
        path = value if os.path.isabs(value) else os.path.join(ctx.base_dir, value)
        got_kind, obj = _load_file(path, ctx.F, ctx.seen)
        return _coerce(kind, got_kind, obj)
    if isinstance(value, dict):
        inner = dict(value)
        got_kind = inner.pop("kind", kind)
        if "field" in inner:
            if Field.from_name(str(inner.pop("field"))) != ctx.F:
                raise InputError(f"inline {got_kind} over a different field")
        inner.pop("format", None)
        if got_kind not in _BODY:
            raise InputError(f"unknown kind {got_kind!r}")
        return _coerce(kind, got_kind, _parse(got_kind, inner, ctx))
    raise InputError(f"{kind}: expected a mapping or a reference, got {type(value).__name__}")


def _builtin(kind, ref, F):
    if kind == "algebra":
        # an algebra slot also accepts Hopf builtins
        return "algebra", builtins.resolve("algebra", ref, F)
    return kind, builtins.resolve(kind, ref, F)


def _coerce(want, got, obj):
    if want == got:
        return obj
    if want == "algebra" and got == "hopf":
        return obj.algebra
    raise InputError(f"expected a {want}, found a {got}")


def _dims(value, what):
    if (not isinstance(value, list) or not value
            or not all(isinstance(d, int) and not isinstance(d, bool) and d > 0 for d in value)):
        raise InputError(f"{what} must be a non-empty list of positive integers")
    return tuple(value)


def _scalar(F, v):
    if isinstance(v, bool) or not isinstance(v, (int, str)):
        raise InputError(f"scalar {v!r} must be a string or an integer")
    return F.parse(str(v))


def _linmap(body, ctx: _Ctx) -> LinMap:
    _check_keys("linmap", body)
    dom, cod = _dims(body["dom"], "dom"), _dims(body["cod"], "cod")
    nr, nc = _size(cod), _size(dom)
    entries = body["entries"] or []
    if not isinstance(entries, list):
        raise InputError("entries must be a list of [row, col, scalar]")
    seen = set()
    trip = []
    for e in entries:
        if not (isinstance(e, list) and len(e) == 3 and all(isinstance(x, int) and not isinstance(x, bool) for x in e[:2])):
            raise InputError(f"bad entry {e!r}; expected [row, col, scalar]")
        r, c, v = e
        if not (0 <= r < nr and 0 <= c < nc):
            raise InputError(f"entry {e!r} outside a {nr}x{nc} matrix")
        if (r, c) in seen:
            raise InputError(f"entry ({r}, {c}) given twice")
        seen.add((r, c))
        trip.append((r, c, _scalar(ctx.F, v)))
    return LinMap.from_triples(ctx.F, dom, cod, trip)


def _size(dims):
    n = 1
    for d in dims:
        n *= d
    return n


def _map(body, ctx, dom, cod, what):
    f = _ref("linmap", body, ctx)
    if f.ncols != _size(dom) or f.nrows != _size(cod):
        raise InputError(f"{what} must be {_size(cod)}x{_size(dom)}, got {f.nrows}x{f.ncols}")
    return f.reshape(dom=dom, cod=cod)


def _labels(body, n):
    labels = body.get("labels")
    if labels is None:
        return None
    if not isinstance(labels, list) or len(labels) != n:
        raise InputError(f"labels must be a list of {n} names")
    return [str(s) for s in labels]


def _dim(body):
    n = body["dim"]
    if not isinstance(n, int) or isinstance(n, bool) or n <= 0:
        raise InputError("dim must be a positive integer")
    return n


def _parse(kind, body, ctx: _Ctx):
    if kind == "linmap":
        return _linmap(body, ctx)
    _check_keys(kind, body)
    F = ctx.F
    if kind == "algebra":
        n = _dim(body)
        return Algebra(F, n, _map(body["mult"], ctx, (n, n), (n,), "mult"),
                       _map(body["unit"], ctx, (1,), (n,), "unit"), _labels(body, n))
    if kind == "hopf":
        n = _dim(body)
        alg = Algebra(F, n, _map(body["mult"], ctx, (n, n), (n,), "mult"),
                      _map(body["unit"], ctx, (1,), (n,), "unit"), _labels(body, n))
        coalg = Coalgebra(F, n, _map(body["comult"], ctx, (n,), (n, n), "comult"),
                          _map(body["counit"], ctx, (n,), (1,), "counit"))
        name = body.get("name")
        return HopfAlgebra(alg, coalg, _map(body["antipode"], ctx, (n,), (n,), "antipode"),
                           name=None if name is None else str(name))
    if kind == "comodule-algebra":
        A = _ref("algebra", body["algebra"], ctx)
        H = _ref("hopf", body["hopf"], ctx)
        return ComoduleAlgebra(A, H, _map(body["coaction"], ctx, (A.dim,), (A.dim, H.dim), "coaction"))
    if kind in ("twisting-data", "star-data", "invariance-data"):
        A = _ref("algebra", body["A"], ctx)
        B = _ref("algebra", body["B"], ctx)
        T = TwistingData(A, B, _map(body["R"], ctx, (B.dim, A.dim), (A.dim, B.dim), "R"))
        if kind == "twisting-data":
            return T
        rho = _map(body["rho"], ctx, (A.dim,), (A.dim, B.dim), "rho")
        if kind == "star-data":
            return StarData(T, _map(body["mu"], ctx, (B.dim, A.dim), (A.dim,), "mu"), rho)
        Ap = _ref("algebra", body["Aprime"], ctx)
        return InvarianceData(T, Ap, rho, _map(body["lambda"], ctx, (A.dim,), (A.dim, B.dim), "lambda"))
    if kind == "nu-twist":
        CA = _ref("comodule-algebra", body["comodule"], ctx)
        nA, nH = CA.A.dim, CA.H.dim
        return NuTwist(CA, _map(body["nu"], ctx, (nH, nA), (nA,), "nu"), name=body.get("name"))
    if kind == "sqt-element":
        H = _ref("hopf", body["hopf"], ctx)
        return SqtElement(H, _map(body["r"], ctx, (1,), (H.dim, H.dim), "r"), name=body.get("name"))
    raise InputError(f"unknown kind {kind!r}")  # pragma: no cover


# writing ------------------------------------------------------------------

def kind_of(obj) -> str:
    for cls, kind in ((LinMap, "linmap"), (HopfAlgebra, "hopf"), (Algebra, "algebra"),
                      (ComoduleAlgebra, "comodule-algebra"), (TwistingData, "twisting-data"),
                      (StarData, "star-data"), (InvarianceData, "invariance-data"),
                      (NuTwist, "nu-twist"), (SqtElement, "sqt-element")):
        if isinstance(obj, cls):
            return kind
    raise TypeError(f"cannot serialize {type(obj).__name__}")


class _Flow(list):
    """A list written inline, e.g. [0, 1, '1/2']."""


def _flow_repr(dumper, data):
    return dumper.represent_sequence("tag:yaml.org,2002:seq", data, flow_style=True)


class _Dumper(yaml.SafeDumper):
    pass


_Dumper.add_representer(_Flow, _flow_repr)


def _body(obj):
    kind = kind_of(obj)
    if kind == "linmap":
        F = obj.field
        return {"dom": _Flow(obj.dom), "cod": _Flow(obj.cod),
                "entries": [_Flow([r, c, F.format(v)]) for r, c, v in obj.triples()]}
    if kind == "algebra":
        return {"dim": obj.dim, "labels": _Flow(obj.labels), "mult": _body(obj.mult), "unit": _body(obj.unit)}
    if kind == "hopf":
        out = {"name": obj.name} if obj.name else {}
        out.update({"dim": obj.dim, "labels": _Flow(obj.labels), "mult": _body(obj.mult),
                    "unit": _body(obj.unit), "comult": _body(obj.comult), "counit": _body(obj.counit),
                    "antipode": _body(obj.antipode)})
        return out
    if kind == "comodule-algebra":
        return {"algebra": _body(obj.A), "hopf": _body(obj.H), "coaction": _body(obj.coaction)}
    if kind in ("twisting-data", "star-data", "invariance-data"):
        T = obj.T if kind != "twisting-data" else obj
        out = {"A": _body(T.A), "B": _body(T.B), "R": _body(T.R)}
        if kind == "star-data":
            out.update({"mu": _body(obj.mu), "rho": _body(obj.rho)})
        elif kind == "invariance-data":
            out.update({"Aprime": _body(obj.Aprime), "rho": _body(obj.rho), "lambda": _body(obj.lam)})
        return out
    if kind == "nu-twist":
        out = {"name": str(obj.name)} if obj.name else {}
        out.update({"comodule": _body(obj.CA), "nu": _body(obj.nu)})
        return out
    out = {"name": str(obj.name)} if obj.name else {}
    out.update({"hopf": _body(obj.H), "r": _body(obj.r)})
    return out


def dumps(obj) -> str:
    """Canonical YAML for ``obj``; equal objects give identical bytes."""
    kind = kind_of(obj)
    F = obj.field
    doc = {"format": FORMAT, "kind": kind, "field": F.name}
    doc.update(_body(obj))
    return yaml.dump(doc, Dumper=_Dumper, sort_keys=False, allow_unicode=True, width=1 << 16)


def dump(obj, path: str):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(obj))
