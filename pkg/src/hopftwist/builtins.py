"""Named built-in instances, addressed as ``builtin:NAME`` or ``builtin:NAME?key=value&...``.

Each object kind has its own namespace.  Names ending in ``-<H>`` take a
built-in Hopf algebra (kC2, kC2xC2, H4, or any of those with ``-dual``).
"""
from __future__ import annotations

import re
from urllib.parse import parse_qsl

from .algebra import dual_hopf
from .constructions import (BUILTIN_HOPF, builtin_hopf, drinfeld_double, named_r, regular_comodule,
                            smash_twisting_map, trivial_comodule)
from .errors import InputError
from .invariance import InvarianceData, StarData
from .linmap import flip, identity, tensor
from .pipelines import (NuTwist, c_deformation, comodule_twist_data, double_twisting_map,
                        homogenization_data, sqt_double_data, sqt_star_data, trivial_nu)
from .twisting import TwistingData


def hopf(name, F):
    if name.endswith("-dual"):
        H = dual_hopf(hopf(name[:-5], F))
        H.name = name
        return H
    return builtin_hopf(name, F)


def _hopf_names():
    return [n for base in BUILTIN_HOPF for n in (base, f"{base}-dual")]


def _trivial_invariance(H):
    """A = A' = B = H, R = flip, rho = lambda = a -> a⊗1."""
    F, n = H.field, H.dim
    A = H.algebra
    one = tensor(identity(F, (n,)), H.unit).reshape(dom=(n,))
    return InvarianceData(TwistingData(A, A, flip(F, n, n)), A, one, one)


def _trivial_star(H):
    """rho(a) = a⊗1 and b·a = eps(b) a, so a*a' = aa'."""
    F, n = H.field, H.dim
    A = H.algebra
    T = TwistingData(A, A, flip(F, n, n))
    mu = tensor(H.counit, identity(F, (n,))).reshape(cod=(n,))
    return StarData(T, mu, tensor(identity(F, (n,)), H.unit).reshape(dom=(n,)))


def _c(params, F):
    if "c" not in params:
        raise InputError("c-deformation needs a parameter c, e.g. builtin:c-deformation-kC2?c=-1")
    return F.parse(params["c"])


# kind -> list of (pattern, builder(F, params, *groups), description)
_TABLE = {
    "hopf": [
        (r"(?P<h>.+)", lambda F, p, h: hopf(h, F), "kC2, kC2xC2, H4 and their duals (NAME-dual)"),
    ],
    "algebra": [
        (r"double-(?P<h>.+)", lambda F, p, h: drinfeld_double(hopf(h, F)), "Drinfeld double D(H)"),
        (r"(?P<h>.+)", lambda F, p, h: hopf(h, F).algebra, "underlying algebra of a Hopf builtin"),
    ],
    "comodule-algebra": [
        (r"regular-(?P<h>.+)", lambda F, p, h: regular_comodule(hopf(h, F)), "H coacting on itself by Δ"),
        (r"trivial-(?P<h>.+)", lambda F, p, h: (lambda H: trivial_comodule(H.algebra, H))(hopf(h, F)),
         "H with a -> a⊗1"),
    ],
    "twisting-data": [
        (r"flip-(?P<h>.+)", lambda F, p, h: (lambda H: TwistingData(H.algebra, H.algebra, flip(F, H.dim, H.dim)))(hopf(h, F)),
         "flip on H⊗H"),
        (r"smash-(?P<h>.+)", lambda F, p, h: (lambda CA: TwistingData(CA.A, dual_hopf(CA.H).algebra, smash_twisting_map(CA)))(regular_comodule(hopf(h, F))),
         "smash twisting of the regular comodule algebra with H*"),
        (r"double-(?P<h>.+)", lambda F, p, h: (lambda H: TwistingData(dual_hopf(H).algebra, H.algebra, double_twisting_map(H)))(hopf(h, F)),
         "twisting map of D(H) on H*⊗H"),
    ],
    "nu-twist": [
        (r"c-deformation-kC2", lambda F, p: c_deformation(hopf("kC2", F), _c(p, F)), "kC2 with nu(g) = diag(1, c); needs ?c="),
        (r"trivial-(?P<h>.+)", lambda F, p, h: trivial_nu(regular_comodule(hopf(h, F))), "nu(h)(a) = eps(h)a"),
    ],
    "sqt-element": [
        (r"(?P<h>.+)", lambda F, p, h: named_r(hopf(h, F), p.get("r", "trivial")),
         "r on H; ?r=trivial|triangular|1xg"),
    ],
    "star-data": [
        (r"sqt-(?P<h>.+)", lambda F, p, h: sqt_star_data(named_r(hopf(h, F), p.get("r", "trivial"))),
         "double action and rho(φ) = φ↼S^-1(r1)⊗r2; ?r="),
        (r"trivial-(?P<h>.+)", lambda F, p, h: _trivial_star(hopf(h, F)), "rho(a) = a⊗1, b·a = eps(b)a"),
    ],
    "invariance-data": [
        (r"trivial-(?P<h>.+)", lambda F, p, h: _trivial_invariance(hopf(h, F)), "rho = lambda = a⊗1, R = flip"),
        (r"homogenization-(?P<h>.+)", lambda F, p, h: homogenization_data(regular_comodule(hopf(h, F))),
         "external homogenization of the regular comodule algebra"),
        (r"comodule-twist-kC2", lambda F, p: comodule_twist_data(c_deformation(hopf("kC2", F), _c(p, F))),
         "c-deformation of kC2; needs ?c="),
        (r"sqt-double-(?P<h>.+)", lambda F, p, h: sqt_double_data(named_r(hopf(h, F), p.get("r", "trivial"))),
         "double of H with the star algebra from r; ?r="),
    ],
}

KINDS = tuple(_TABLE)


def split(ref: str):
    """'builtin:NAME?k=v' -> ('NAME', {'k': 'v'})."""
    body = ref[len("builtin:"):] if ref.startswith("builtin:") else ref
    name, _, query = body.partition("?")
    try:
        params = dict(parse_qsl(query, strict_parsing=True)) if query else {}
    except ValueError:
        raise InputError(f"bad builtin parameters in {ref!r}") from None
    return name, params


def resolve(kind: str, ref: str, F):
    if kind not in _TABLE:
        raise InputError(f"no builtins of kind {kind!r}")
    name, params = split(ref)
    for pattern, build, _ in _TABLE[kind]:
        m = re.fullmatch(pattern, name)
        if m is None:
            continue
        if "h" in m.groupdict() and m["h"] not in _hopf_names():
            continue
        return build(F, params, **m.groupdict())
    raise InputError(f"unknown builtin {kind} {name!r}; see list-builtins")


def catalogue():
    """[(kind, pattern, description)] for display."""
    out = []
    for kind, rows in _TABLE.items():
        for pattern, _, desc in rows:
            shown = re.sub(r"\(\?P<h>\.\+\)", "<H>", pattern)
            out.append((kind, shown, desc))
    return out


def hopf_names():
    return _hopf_names()
