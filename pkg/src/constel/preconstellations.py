"""Pre-constellations (Const1 and Const2 only): regularity, inverses
without a domain operation, and recovery of D from an inverse
pre-constellation.
"""
from __future__ import annotations

from dataclasses import replace

from .core import DEFAULT_CAP, Bundle, InputError, collect, idempotents
from .constellations import check_constellation, const12_violations, is_D_inverse


def check_pre_constellation(a: Bundle, cap=DEFAULT_CAP):
    return collect("pre-constellation", a, const12_violations(a), cap)


def reduct(a: Bundle) -> Bundle:
    """The bare partial algebra ``(P, .)``."""
    return Bundle("pre-constellation", a.elements, a.product)


def _sandwich(a, x, y):
    """``x.(y.x)`` or ``None``."""
    t = a.product
    yx = t[y][x]
    return None if yx is None else t[x][yx]


def inverses_pre(a: Bundle, s) -> frozenset:
    """``t`` with ``s.(t.s) = s`` and ``t.(s.t) = t``."""
    s = a.index(s) if isinstance(s, str) else s
    return frozenset(
        u for u in range(a.n) if _sandwich(a, s, u) == s and _sandwich(a, u, s) == u
    )


def _require(rep, what):
    if not rep.passed:
        v = rep.violations[0]
        raise InputError(f"not {what}: {v.axiom} {','.join(v.witness)} {v.reason}")


def is_regular_pre(a: Bundle, cap=DEFAULT_CAP):
    """Every ``x`` has ``y`` with ``x = x.(y.x)``; the symmetric-witness
    form (``x = x.(z.x)`` and ``z = z.(x.z)``) is checked to agree."""

    def found():
        for x in range(a.n):
            plain = any(_sandwich(a, x, y) == x for y in range(a.n))
            sym = bool(inverses_pre(a, x))
            if not plain:
                yield "regular", (x,), "no y with x = x.(y.x)"
            if plain != sym:
                yield "derived:symmetric-witness", (x,), "regular witness without a symmetric one"

    return collect("regular", a, found(), cap)


def is_inverse_pre(a: Bundle, cap=DEFAULT_CAP):
    """Every element has exactly one inverse; on success ``data`` is the
    inverse map and ``E(P) = {s.s'}`` is checked."""
    invs = [inverses_pre(a, s) for s in range(a.n)]

    def found():
        for s, inv in enumerate(invs):
            if len(inv) != 1:
                yield "inverse", (s, *sorted(inv)), f"{len(inv)} inverses"
        if all(len(i) == 1 for i in invs):
            inv = [next(iter(i)) for i in invs]
            E = {a.product[s][inv[s]] for s in range(a.n)}
            if E != set(idempotents(a)):
                yield "derived:idempotents", tuple(sorted(E ^ set(idempotents(a)))), "E(P) != {s.s'}"

    rep = collect("inverse", a, found(), cap)
    if rep.passed:
        rep = replace(rep, data=tuple(next(iter(i)) for i in invs))
    return rep


def check_regisinv_condition(a: Bundle, cap=DEFAULT_CAP):
    """Idempotents ``e, f`` with ``e = e.(f.e)`` and ``f = f.(e.f)`` are
    equal; agreement with ``is_inverse_pre`` is checked."""
    _require(is_regular_pre(a, cap=1), "regular")
    E = sorted(idempotents(a))
    inverse = is_inverse_pre(a, cap=1).passed

    def found():
        ok = True
        for i, e in enumerate(E):
            for f in E[i + 1:]:
                if _sandwich(a, e, f) == e and _sandwich(a, f, e) == f:
                    ok = False
                    yield "regisinv", (e, f), "e = e.(f.e) and f = f.(e.f) with e != f"
        if ok != inverse:
            yield "derived:regisinv", (), "idempotent condition disagrees with unique inverses"

    return collect("regisinv", a, found(), cap)


def check_cond12(a: Bundle, cap=DEFAULT_CAP):
    """``e.f`` and ``f.e`` both defined imply equal (idempotents); ``s.e``
    defined implies ``s.e = s``."""
    _require(is_inverse_pre(a, cap=1), "an inverse pre-constellation")
    t = a.product
    E = sorted(idempotents(a))

    def found():
        for i, e in enumerate(E):
            for f in E[i + 1:]:
                if t[e][f] is not None and t[f][e] is not None and t[e][f] != t[f][e]:
                    yield "cond12-1", (e, f), "e.f != f.e"
        for s in range(a.n):
            for e in E:
                if t[s][e] is not None and t[s][e] != s:
                    yield "cond12-2", (s, e), "s.e defined but != s"

    return collect("cond12", a, found(), cap)


def reconstruct_D(a: Bundle) -> Bundle:
    """``D(s) = s.s'`` on an inverse pre-constellation satisfying both
    conditions; the result carries its D-inverse map."""
    _require(check_pre_constellation(a, cap=1), "a pre-constellation")
    rep = is_inverse_pre(a, cap=1)
    _require(rep, "an inverse pre-constellation")
    _require(check_cond12(a, cap=1), "cond12")
    inv = rep.data
    out = Bundle("constellation", a.elements, a.product,
                 D=tuple(a.product[s][inv[s]] for s in range(a.n)), inverse=inv)
    chk = check_constellation(out, cap=1).passed and is_D_inverse(out, cap=1)
    if not chk or chk.data != inv:
        raise AssertionError("reconstructed structure is not D-inverse with the same inverses")
    return out
