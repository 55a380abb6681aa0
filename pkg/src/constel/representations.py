"""Partial-map models (C_X, I_X, the symmetric inverse monoid), inverse
semigroup recognition, the passage from inverse semigroups to D-inverse
constellations, and the Cayley embedding into partial injections.

A partial map on ``m`` points is a length-``m`` tuple of image points, with
``None`` where undefined.  Maps act on the right: ``x(st) = (xs)t``.
"""
from __future__ import annotations

import itertools
from dataclasses import replace

from .core import (
    DEFAULT_CAP,
    Bundle,
    InputError,
    ResourceError,
    collect,
)
from .constellations import (
    RadiantCandidate,
    check_radiant,
    is_D_inverse,
    is_normal,
    is_right_cancellative,
    with_domain,
)
from .semigroups import check_semigroup

MAX_POINTS = 4


def _check_m(m, cap):
    if m < 0:
        raise InputError("point count must be non-negative")
    if m > cap:
        raise ResourceError(f"{m} points exceeds the cap of {cap}")


def partial_maps(m, injective=False):
    """All partial self-maps of ``m`` points, lexicographic by image
    sequence with undefined last."""
    for img in itertools.product(range(m + 1), repeat=m):
        s = tuple(None if v == m else v for v in img)
        if injective:
            vals = [v for v in s if v is not None]
            if len(vals) != len(set(vals)):
                continue
        yield s


def map_label(s, points=None):
    if points is None:
        return "(" + ",".join("-" if v is None else str(v) for v in s) + ")"
    return "(" + ",".join("-" if v is None else points[v] for v in s) + ")"


def compose(s, t):
    return tuple(None if v is None else t[v] for v in s)


def dom_id(s):
    return tuple(x if v is not None else None for x, v in enumerate(s))


def img_id(s):
    img = {v for v in s if v is not None}
    return tuple(x if x in img else None for x in range(len(s)))


def invert(s):
    out = [None] * len(s)
    for x, v in enumerate(s):
        if v is not None:
            out[v] = x
    return tuple(out)


def constellation_of_maps(maps, kind="constellation", labels=None, points=None,
                          range_map=False, inverse=False):
    """Constellation on a set of partial maps: ``s.t = st`` exactly when
    ``Img(s)`` lies in ``Dom(t)``.  The set must be closed under the defined
    products and the requested unary maps."""
    maps = list(maps)
    index = {s: i for i, s in enumerate(maps)}
    if len(index) != len(maps):
        raise InputError("repeated partial map")

    def look(s, why):
        if s not in index:
            raise InputError(f"not closed under {why}: {map_label(s, points)}")
        return index[s]

    prod = []
    for s in maps:
        row = []
        for t in maps:
            if all(v is None or t[v] is not None for v in s):
                row.append(look(compose(s, t), "products"))
            else:
                row.append(None)
        prod.append(row)
    extra = {"D": tuple(look(dom_id(s), "D") for s in maps)}
    if range_map:
        extra["R"] = tuple(look(img_id(s), "R") for s in maps)
    if inverse:
        extra["inverse"] = tuple(look(invert(s), "inverses") for s in maps)
    if labels is None:
        labels = [map_label(s, points) for s in maps]
    return Bundle(kind, tuple(labels), prod, **extra)


def build_CX(m, cap=MAX_POINTS) -> Bundle:
    _check_m(m, cap)
    return constellation_of_maps(partial_maps(m), "constellation-with-range", range_map=True)


def build_IX(m, cap=MAX_POINTS) -> Bundle:
    _check_m(m, cap)
    return constellation_of_maps(partial_maps(m, injective=True), inverse=True)


def build_symmetric_inverse_monoid(m, cap=MAX_POINTS) -> Bundle:
    _check_m(m, cap)
    maps = list(partial_maps(m, injective=True))
    index = {s: i for i, s in enumerate(maps)}
    prod = [[index[compose(s, t)] for t in maps] for s in maps]
    return Bundle(
        "involuted-semigroup", tuple(map_label(s) for s in maps), prod,
        star=tuple(index[invert(s)] for s in maps),
    )


def is_inverse_semigroup(S: Bundle, cap=DEFAULT_CAP):
    """Each ``a`` has exactly one ``b`` with ``aba = a`` and ``bab = b``.
    On success ``data`` is the map ``a -> a'``."""
    base = check_semigroup(S)
    if not base.passed:
        v = base.violations[0]
        raise InputError(f"not associative: {','.join(v.witness)}")
    t = S.product
    n = S.n
    inv = []

    def found():
        for a in range(n):
            bs = [b for b in range(n) if t[t[a][b]][a] == a and t[t[b][a]][b] == b]
            inv.append(bs[0] if len(bs) == 1 else None)
            if len(bs) != 1:
                yield "inverse", (a, *bs), f"{len(bs)} elements b with aba = a and bab = b"

    rep = collect("inverse-semigroup", S, found(), cap)
    if rep.passed:
        rep = replace(rep, data=tuple(inv))
    return rep


def _semigroup_inverse(S):
    rep = is_inverse_semigroup(S)
    if not rep.passed:
        v = rep.violations[0]
        raise InputError(f"not an inverse semigroup: {','.join(v.witness)} {v.reason}")
    return rep.data


def inv2inv(S: Bundle) -> Bundle:
    """D-inverse constellation of an inverse semigroup: ``s.t = st`` exactly
    when ``stt' = s``; ``D(s) = ss'``."""
    inv = _semigroup_inverse(S)
    t = S.product
    n = S.n
    prod = [[t[s][u] if t[t[s][u]][inv[u]] == s else None for u in range(n)] for s in range(n)]
    return Bundle("constellation", S.elements, prod,
                  D=tuple(t[s][inv[s]] for s in range(n)), inverse=inv)


def inductive_groupoid(S: Bundle) -> Bundle:
    """Ordered groupoid of an inverse semigroup built directly: ``D(s) = ss'``,
    ``R(s) = s's``, ``s∘t = st`` iff ``s's = tt'``, ``s <= t`` iff ``s = ss't``."""
    inv = _semigroup_inverse(S)
    t = S.product
    n = S.n
    D = tuple(t[s][inv[s]] for s in range(n))
    R = tuple(t[inv[s]][s] for s in range(n))
    comp = [[t[s][u] if R[s] == D[u] else None for u in range(n)] for s in range(n)]
    order = frozenset((s, u) for s in range(n) for u in range(n) if t[D[s]][u] == s)
    return Bundle("ordered-groupoid", S.elements, comp, D=D, R=R, inverse=inv, order=order)


def subconstellation(Q: Bundle, subset) -> Bundle:
    """Restriction of ``Q`` to ``subset`` (labels or indices), keeping
    carrier order.  Must be closed under the products and unary maps."""
    Q = with_domain(Q)
    idx = sorted({Q.index(x) if isinstance(x, str) else x for x in subset})
    pos = {x: i for i, x in enumerate(idx)}

    def look(v, why):
        if v not in pos:
            raise InputError(f"subset not closed under {why}: {Q.label(v)}")
        return pos[v]

    prod = [[None if Q.product[x][y] is None else look(Q.product[x][y], "products")
             for y in idx] for x in idx]
    maps = {}
    for f in ("D", "R", "inverse", "star"):
        m = getattr(Q, f)
        if m is not None:
            maps[f] = tuple(look(m[x], f) for x in idx)
    E = None if Q.E is None else frozenset(pos[e] for e in Q.E if e in pos)
    order = None if Q.order is None else frozenset(
        (pos[x], pos[y]) for x, y in Q.order if x in pos and y in pos)
    return Bundle(Q.kind, Q.labels(idx), prod, E=E, order=order, **maps)


def strong_rc_counterexample() -> Bundle:
    """Five partial maps on points x, y, z: right cancellative with range,
    congruence condition holds, yet ``R(f.b) = R(i.b)`` with ``f != i``."""
    f = (0, None, None)
    i = (0, 1, None)
    g = (None, None, 2)
    a = (2, None, None)
    b = (2, 2, None)
    return constellation_of_maps(
        [f, i, g, a, b], "constellation-with-range",
        labels=("f", "i", "g", "a", "b"), range_map=True,
    )


def _generated(seeds, n):
    """Closure of a set of partial injections under defined products,
    domain identities and inverses, in carrier order."""
    have = set(seeds)
    while True:
        new = {u for s in have for u in (dom_id(s), invert(s))}
        new |= {compose(s, u) for s in have for u in have
                if all(v is None or u[v] is not None for v in s)}
        if new <= have:
            break
        have |= new
    return sorted(have, key=lambda s: tuple(n if v is None else v for v in s))


def cayley_radiant(Q: Bundle) -> RadiantCandidate:
    """``s -> rho_s`` with ``x rho_s = x.s``, into the subconstellation of
    partial injections on the carrier of ``Q`` generated by the images."""
    Q = with_domain(Q)
    for rep, what in ((is_normal(Q), "normal"), (is_right_cancellative(Q), "right cancellative")):
        if not rep.passed:
            v = rep.violations[0]
            raise InputError(f"not {what}: {v.axiom} {','.join(v.witness)}")
    dinv = is_D_inverse(Q)
    if dinv.passed and Q.inverse is None:
        Q = Q.evolve(inverse=dinv.data)
    n = Q.n
    t = Q.product
    rho = [tuple(t[x][s] for x in range(n)) for s in range(n)]
    for s, r in enumerate(rho):
        vals = [v for v in r if v is not None]
        if len(vals) != len(set(vals)):
            raise AssertionError(f"right translation by {Q.label(s)} is not injective")
    carrier = _generated(rho, n)
    target = constellation_of_maps(carrier, points=Q.elements, inverse=True)
    pos = {s: i for i, s in enumerate(carrier)}
    return RadiantCandidate(Q, target, tuple(pos[r] for r in rho))


def check_cayley(Q: Bundle, cap=DEFAULT_CAP):
    return check_radiant(cayley_radiant(Q), cap)
