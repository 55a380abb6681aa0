"""Semigroups with a distinguished set of idempotents: E-regularity,
E-inverses, T-normality, (pre-)reducedness, and the pair constellation
I_E(T) with its Nambooripad and Lawson specializations.
"""
from __future__ import annotations

import numpy as np

from .core import (
    DEFAULT_CAP,
    Bundle,
    InputError,
    StructureError,
    collect,
    idempotents,
)
from .constellations import check_constellation, is_D_inverse


def _indices(S: Bundle, xs):
    if xs is None:
        return None
    return frozenset(S.index(x) if isinstance(x, str) else int(x) for x in xs)


def _E(S: Bundle, E=None) -> frozenset:
    E = _indices(S, E)
    if E is not None:
        return E
    return S.E if S.E is not None else idempotents(S)


def _semigroup_violations(S: Bundle):
    n = S.n
    holes = [(x, y) for x in range(n) for y in range(n) if S.product[x][y] is None]
    for w in holes:
        yield "total", w, "product undefined"
    if holes or n == 0:
        return
    A = np.array(S.product, dtype=np.intp)
    left = A[A]
    right = A[np.arange(n)[:, None, None], A[None, :, :]]
    for x, y, z in zip(*np.nonzero(left != right)):
        yield "associativity", (int(x), int(y), int(z)), "(xy)z != x(yz)"
    if S.E is not None:
        for e in sorted(S.E - idempotents(S)):
            yield "E", (e,), "member of E is not idempotent"
    if S.star is not None:
        yield from _involution_violations(S)


def _involution_violations(S: Bundle):
    t, st = S.product, S.star
    for s in range(S.n):
        if st[st[s]] != s:
            yield "involution", (s,), "s** != s"
        for u in range(S.n):
            if st[t[s][u]] != t[st[u]][st[s]]:
                yield "involution", (s, u), "(st)* != t*s*"


def check_semigroup(S: Bundle, cap=DEFAULT_CAP):
    return collect("semigroup", S, _semigroup_violations(S), cap)


def _require_semigroup(S):
    rep = check_semigroup(S, cap=1)
    if not rep.passed:
        v = rep.violations[0]
        raise InputError(f"not a semigroup: {v.axiom} {','.join(v.witness)} {v.reason}")


def E_regular_elements(S: Bundle, E=None) -> frozenset:
    E = _E(S, E)
    t = S.product
    n = S.n
    return frozenset(
        s for s in range(n)
        if any(t[t[s][u]][s] == s and t[s][u] in E and t[u][s] in E for u in range(n))
    )


def E_inverses(S: Bundle, s, E=None) -> frozenset:
    E = _E(S, E)
    s = S.index(s) if isinstance(s, str) else s
    t = S.product
    return frozenset(
        u for u in range(S.n)
        if t[t[s][u]][s] == s and t[t[u][s]][u] == u and t[s][u] in E and t[u][s] in E
    )


def _admissible(S, E, T):
    if not E:
        raise InputError("E is empty")
    if not E <= T:
        raise InputError(f"E not contained in T: {','.join(S.labels(sorted(E - T)))}")
    bad = T - E_regular_elements(S, E)
    if bad:
        raise InputError(f"T not within the E-regular elements: {','.join(S.labels(sorted(bad)))}")


def is_T_normal(S: Bundle, T=None, E=None, cap=DEFAULT_CAP):
    """For ``e`` in E, ``s`` in T and E-inverses ``s'`` of ``s`` in T:
    ``e = ess' = ss'e`` implies ``s'es`` in E.  Witness ``(e, s, s')``."""
    _require_semigroup(S)
    E = _E(S, E)
    T = _indices(S, T) if T is not None else E_regular_elements(S, E)
    _admissible(S, E, T)
    t = S.product

    def found():
        for e in sorted(E):
            for s in sorted(T):
                for s1 in sorted(E_inverses(S, s, E) & T):
                    p = t[s][s1]
                    if t[e][p] == e and t[p][e] == e and t[t[s1][e]][s] not in E:
                        yield "T-normal", (e, s, s1), "e = ess' = ss'e but s'es not in E"

    return collect("T-normal", S, found(), cap)


def _pre_reduced_violations(S, E):
    t = S.product
    for e in sorted(E):
        for f in sorted(E):
            if e == f:
                continue
            if t[e][f] == f and t[f][e] == e:
                yield "pre-reduced", (e, f), "ef = f and fe = e but e != f"
            if t[e][f] == e and t[f][e] == f:
                yield "pre-reduced", (e, f), "ef = e and fe = f but e != f"


def is_pre_reduced(S: Bundle, E=None, cap=DEFAULT_CAP):
    E = _E(S, E)
    return collect("pre-reduced", S, _pre_reduced_violations(S, E), cap)


def is_reduced(S: Bundle, E=None, cap=DEFAULT_CAP):
    """``ef = f`` iff ``fe = f`` over E; a reduced E that is not pre-reduced
    is reported as a derived violation."""
    E = _E(S, E)
    t = S.product

    def found():
        bad = False
        for e in sorted(E):
            for f in sorted(E):
                if (t[e][f] == f) != (t[f][e] == f):
                    bad = True
                    yield "reduced", (e, f), "exactly one of ef = f, fe = f holds"
        if not bad:
            for v in _pre_reduced_violations(S, E):
                yield "derived:reduced-implies-pre-reduced", v[1], v[2]

    return collect("reduced", S, found(), cap)


def _pair_label(S, s, s1):
    return f"({S.label(s)},{S.label(s1)})"


def _I_E_T(S, T, E):
    _require_semigroup(S)
    E = _E(S, E)
    T = _indices(S, T) if T is not None else E_regular_elements(S, E)
    _admissible(S, E, T)
    pairs = [(s, s1) for s in sorted(T) for s1 in sorted(E_inverses(S, s, E) & T)]
    pos = {p: i for i, p in enumerate(pairs)}
    t = S.product
    prod = []
    leaks = []
    for i, (s, s1) in enumerate(pairs):
        row = []
        for j, (u, u1) in enumerate(pairs):
            if t[t[s][u]][u1] == s and t[t[u][u1]][s1] == s1:
                q = (t[s][u], t[u1][s1])
                if q not in pos:
                    leaks.append((i, j, q))
                row.append(pos.get(q))
            else:
                row.append(None)
        prod.append(row)
    labels = tuple(_pair_label(S, *p) for p in pairs)
    D = tuple(pos[(t[s][s1], t[s][s1])] for s, s1 in pairs)
    inv = tuple(pos[(s1, s)] for s, s1 in pairs)
    return Bundle("constellation", labels, prod, D=D, inverse=inv), pairs, leaks


def build_I_E_T(S: Bundle, T=None, E=None) -> Bundle:
    """Pairs ``(s, s')`` of mutually E-inverse elements of T;
    ``(s,s').(t,t') = (st, t's')`` when ``s = stt'`` and ``tt's' = s'``.
    A product landing outside the carrier is left undefined; see
    ``I_E_T_report`` for those cells."""
    return _I_E_T(S, T, E)[0]


def I_E_T_report(S: Bundle, T=None, E=None, cap=DEFAULT_CAP):
    """D-inverse check of I_E(T), with products that leave the carrier
    reported as ``closure`` violations."""
    P, pairs, leaks = _I_E_T(S, T, E)

    def found():
        for i, j, (a, b) in leaks:
            yield "closure", (i, j), f"product ({S.label(a)},{S.label(b)}) is not a pair in I_E(T)"
        if leaks:
            return
        base = check_constellation(P, cap)
        for v in base.violations:
            yield v.axiom, tuple(P.index(w) for w in v.witness), v.reason
        if not base.passed:
            return
        rep = is_D_inverse(P, cap)
        for v in rep.violations:
            yield v.axiom, tuple(P.index(w) for w in v.witness), v.reason
        if rep.passed and rep.data != P.inverse:
            yield "D-inverse", (), "D-inverse is not (s',s)"

    return collect("I_E(T)", P, found(), cap, data=P)


def unique_E_inverses(S: Bundle, T, E=None) -> dict:
    E = _E(S, E)
    out = {}
    for s in sorted(T):
        inv = E_inverses(S, s, E) & T
        if len(inv) != 1:
            raise InputError(f"{S.label(s)} has {len(inv)} E-inverses in T")
        out[s] = next(iter(inv))
    return out


def build_T_constellation(S: Bundle, T=None, E=None) -> Bundle:
    """Carrier T with ``s.t = st`` iff ``stt' = s`` and ``tt's' = s'``."""
    _require_semigroup(S)
    E = _E(S, E)
    T = _indices(S, T) if T is not None else E_regular_elements(S, E)
    _admissible(S, E, T)
    rep = is_pre_reduced(S, E, cap=1)
    if not rep.passed:
        raise InputError(f"E is not pre-reduced: {','.join(rep.violations[0].witness)}")
    inv = unique_E_inverses(S, T, E)
    els = sorted(T)
    pos = {s: i for i, s in enumerate(els)}
    t = S.product
    prod = []
    for s in els:
        row = []
        for u in els:
            ok = t[t[s][u]][inv[u]] == s and t[t[u][inv[u]]][inv[s]] == inv[s]
            if ok and t[s][u] not in pos:
                raise StructureError("product leaves T", S.labels((s, u)))
            row.append(pos[t[s][u]] if ok else None)
        prod.append(row)
    return Bundle(
        "constellation", S.labels(els), prod,
        D=tuple(pos[t[s][inv[s]]] for s in els),
        inverse=tuple(pos[inv[s]] for s in els),
    )


def regular_elements(S: Bundle) -> frozenset:
    return E_regular_elements(S, idempotents(S))


def nambooripad(S: Bundle) -> Bundle:
    """I_E(T) with E all idempotents and T the regular elements."""
    return build_I_E_T(S.evolve(E=None), regular_elements(S), idempotents(S))


def pair_order_formula(S: Bundle, P: Bundle) -> frozenset:
    """``(s,s') <= (t,t')`` iff ``s = ss't``, ``s' = t'ss'`` and
    ``ss' = ss'tt' = tt'ss'``, on the carrier of ``P`` built from ``S``."""
    t = S.product
    pairs = [tuple(S.index(x) for x in lab[1:-1].split(",")) for lab in P.elements]
    out = set()
    for i, (s, s1) in enumerate(pairs):
        e = t[s][s1]
        for j, (u, u1) in enumerate(pairs):
            f = t[u][u1]
            if (t[e][u] == s and t[t[u1][s]][s1] == s1
                    and t[e][f] == e and t[f][e] == e):
                out.add((i, j))
    return frozenset(out)


def partial_isometries(S: Bundle):
    """``(I*(S), E*(S))``; E*(S) is checked reduced and I*(S)-normal."""
    if S.star is None:
        raise InputError("semigroup has no involution")
    _require_semigroup(S)
    t, st = S.product, S.star
    I = frozenset(s for s in range(S.n) if t[t[s][st[s]]][s] == s)
    Es = frozenset(e for e in range(S.n) if st[e] == e and t[e][e] == e)
    for rep in (is_reduced(S, Es, cap=1), is_T_normal(S.evolve(E=None), I, Es, cap=1)):
        if not rep.passed:
            v = rep.violations[0]
            raise StructureError(f"{rep.name} fails for E*(S)", v.witness)
    return I, Es


def lawson(S: Bundle) -> Bundle:
    I, Es = partial_isometries(S)
    return build_T_constellation(S.evolve(E=None), I, Es)
