"""Constellation axioms, domains, quasiorders, D-regularity, D-inverses,
ranges, cancellativity and radiants.

Equations read with the partial-operation convention used throughout the
package: as a hypothesis, ``u = v`` means both sides are defined and equal;
as a conclusion, both sides must be defined and equal.
"""
from __future__ import annotations

from dataclasses import dataclass, replace

from .core import (
    DEFAULT_CAP,
    Bundle,
    InputError,
    StructureError,
    collect,
    merge,
    right_identities,
)


# ---------------------------------------------------------------------------
# axioms shared with pre-constellations


def const12_violations(a: Bundle):
    t = a.product
    n = a.n
    for x in range(n):
        tx = t[x]
        for y in range(n):
            xy = tx[y]
            ty = t[y]
            for z in range(n):
                yz = ty[z]
                if yz is None:
                    continue
                x_yz = tx[yz]
                if x_yz is not None:
                    if xy is None:
                        yield "Const1", (x, y, z), "x.(y.z) exists but x.y does not"
                    elif t[xy][z] is None:
                        yield "Const1", (x, y, z), "x.(y.z) exists but (x.y).z does not"
                    elif t[xy][z] != x_yz:
                        yield "Const1", (x, y, z), "x.(y.z) != (x.y).z"
                elif xy is not None:
                    yield "Const2", (x, y, z), "x.y and y.z exist but x.(y.z) does not"


def domain_candidates(a: Bundle, x, ri=None):
    """Right identities ``e`` with ``e.x = x``."""
    if ri is None:
        ri = right_identities(a)
    return tuple(e for e in sorted(ri) if a.product[e][x] == x)


def derive_D(a: Bundle) -> tuple:
    """The domain map: ``D(x)`` is the unique right identity ``e`` with
    ``e.x = x``.  Raises :class:`StructureError` naming ``x`` otherwise."""
    ri = right_identities(a)
    out = []
    for x in range(a.n):
        c = domain_candidates(a, x, ri)
        if len(c) != 1:
            raise StructureError(
                f"element {a.label(x)!r} has {len(c)} right identities e with e.x = x",
                a.labels((x, *c)),
            )
        out.append(c[0])
    return tuple(out)


def _const3_violations(a: Bundle):
    ri = right_identities(a)
    derived = []
    for x in range(a.n):
        c = domain_candidates(a, x, ri)
        if not c:
            yield "Const3", (x,), "no right identity e with e.x = x"
        elif len(c) > 1:
            yield "Const3", (x, *c), "several right identities e with e.x = x"
        derived.append(c[0] if len(c) == 1 else None)
    if a.D is not None:
        for x, d in enumerate(derived):
            if d is not None and a.D[x] != d:
                yield "D", (x, a.D[x]), f"supplied D differs from derived D = {a.label(d)}"
    if all(d is not None for d in derived) and set(derived) != set(ri):
        extra = sorted(set(ri) - set(derived))
        yield "derived:RI=D(Q)", tuple(extra), "right identity outside the image of D"


def check_constellation(a: Bundle, cap=DEFAULT_CAP):
    def found():
        yield from const12_violations(a)
        yield from _const3_violations(a)

    return collect("constellation", a, found(), cap)


def domain_map(a: Bundle) -> tuple:
    return a.D if a.D is not None else derive_D(a)


def with_domain(a: Bundle) -> Bundle:
    return a if a.D is not None else a.evolve(D=derive_D(a))


def projections(a: Bundle) -> frozenset:
    return frozenset(domain_map(a))


# ---------------------------------------------------------------------------
# orders


def natural_quasiorder(a: Bundle) -> frozenset:
    """Pairs ``(s, t)`` with ``s = e.t`` for some projection ``e``."""
    D = domain_map(a)
    t = a.product
    P = sorted(set(D))
    return frozenset(
        (s, u) for u in range(a.n) for s in range(a.n) if any(t[e][u] == s for e in P)
    )


def standard_leq(a: Bundle, e, f):
    return a.product[e][f] is not None


def is_normal(a: Bundle, cap=DEFAULT_CAP):
    D = domain_map(a)
    P = sorted(set(D))
    t = a.product

    def found():
        for i, e in enumerate(P):
            for f in P[i + 1 :]:
                if t[e][f] is not None and t[f][e] is not None:
                    yield "normal", (e, f), "e.f and f.e both exist with e != f"
        # the natural quasiorder is a partial order exactly when normal
        q = natural_quasiorder(a)
        antisym = all(s == u or (u, s) not in q for s, u in q)
        if antisym != all(
            t[e][f] is None or t[f][e] is None for i, e in enumerate(P) for f in P[i + 1 :]
        ):
            yield "derived:parnormal", (), "normality and antisymmetry of the natural quasiorder disagree"

    return collect("normal", a, found(), cap)


# ---------------------------------------------------------------------------
# regularity, cancellation, D-inverses


def is_D_regular(a: Bundle, cap=DEFAULT_CAP):
    D = domain_map(a)
    t = a.product

    def found():
        for x in range(a.n):
            if not any(t[x][b] == D[x] for b in range(a.n)):
                yield "D-regular", (x,), "no b with a.b = D(a)"

    return collect("D-regular", a, found(), cap)


def _rc_violations(a: Bundle):
    t = a.product
    n = a.n
    for c in range(n):
        seen = {}
        for x in range(n):
            v = t[x][c]
            if v is None:
                continue
            if v in seen:
                yield "right-cancellative", (seen[v], x, c), "a.c = b.c with a != b"
            else:
                seen[v] = x


def is_right_cancellative(a: Bundle, cap=DEFAULT_CAP):
    return collect("right-cancellative", a, _rc_violations(a), cap)


def D_inverses(a: Bundle, s) -> frozenset:
    D = domain_map(a)
    t = a.product
    return frozenset(u for u in range(a.n) if t[s][u] == D[s] and t[u][s] == D[u])


def is_D_inverse(a: Bundle, cap=DEFAULT_CAP):
    """Every element has exactly one D-inverse.  The existence-plus-normality
    characterisation is computed alongside and any disagreement reported."""
    invs = [D_inverses(a, s) for s in range(a.n)]
    normal = is_normal(a, cap=None)

    def found():
        for s, inv in enumerate(invs):
            if not inv:
                yield "D-inverse", (s,), "no D-inverse"
            elif len(inv) > 1:
                yield "D-inverse", (s, *sorted(inv)), "several D-inverses"
        direct = all(len(i) == 1 for i in invs)
        other = all(invs) and normal.passed
        if direct != other:
            yield "derived:corDinv", (), "unique D-inverses disagree with existence plus normality"

    rep = collect("D-inverse", a, found(), cap)
    if rep.passed:
        rep = replace(rep, data=tuple(next(iter(i)) for i in invs))
    return rep


def D_inverse_map(a: Bundle):
    rep = is_D_inverse(a)
    return rep.data


def with_inverse(a: Bundle) -> Bundle:
    """``a`` with its D-inverse map attached (raises if not D-inverse)."""
    rep = is_D_inverse(a)
    if not rep.passed:
        v = rep.violations[0]
        raise StructureError(f"not D-inverse: {v.reason}", v.witness)
    return with_domain(a).evolve(inverse=rep.data)


# ---------------------------------------------------------------------------
# ranges


def compute_sD(a: Bundle, s) -> frozenset:
    """Projections ``e`` with ``s.e`` defined lying below every projection
    ``f`` for which ``s.f`` is defined (standard quasiorder)."""
    t = a.product
    P = sorted(set(domain_map(a)))
    right = [f for f in P if t[s][f] is not None]
    return frozenset(e for e in right if all(t[e][f] is not None for f in right))


def derive_R(a: Bundle):
    """The range map when every ``s_D`` is a singleton, else ``None``."""
    out = []
    for s in range(a.n):
        sd = compute_sD(a, s)
        if len(sd) != 1:
            return None
        out.append(next(iter(sd)))
    return tuple(out)


def with_range(a: Bundle) -> Bundle:
    """Attach the derived range map; kind becomes constellation-with-range."""
    a = with_domain(a)
    R = derive_R(a)
    if R is None:
        bad = next(s for s in range(a.n) if len(compute_sD(a, s)) != 1)
        raise StructureError("s_D is not a singleton", a.labels((bad,)))
    return a.evolve(kind="constellation-with-range", R=R)


def _range_violations(a: Bundle):
    t = a.product
    n = a.n
    D = domain_map(a)
    R = a.R
    for s in range(n):
        sd = compute_sD(a, s)
        if sd != {R[s]}:
            if len(sd) > 1:
                reason = f"s_D has {len(sd)} elements (standard quasiorder not antisymmetric)"
            elif not sd:
                reason = "s_D is empty"
            else:
                reason = f"s_D = {{{a.label(next(iter(sd)))}}} but R(s) = {a.label(R[s])}"
            yield "range", (s, *sorted(sd)), reason
    for s in range(n):
        for u in range(n):
            st = t[s][u]
            defined = (st is not None, t[s][D[u]] is not None,
                       t[R[s]][D[u]] is not None, t[R[s]][u] is not None)
            if len(set(defined)) > 1:
                yield "Rst", (s, u), "s.t, s.D(t), R(s).D(t), R(s).t not equally defined"
            if st is None:
                continue
            rt = t[R[s]][u]
            if rt is None or R[st] != R[rt]:
                yield "congruence", (s, u), "R(s.t) != R(R(s).t)"
            if t[R[st]][R[u]] is None:
                yield "Rst", (s, u), "R(s.t) not below R(t)"


def check_range(a: Bundle, cap=DEFAULT_CAP):
    """Validate a constellation with range (constellation axioms included)."""
    if a.R is None:
        raise InputError("bundle has no R map")
    base = check_constellation(a, cap)
    if not base.passed:
        return merge("constellation-with-range", base)
    return collect("constellation-with-range", a, _range_violations(a), cap)


def is_left_cancellative_range(a: Bundle, cap=DEFAULT_CAP):
    if a.R is None:
        raise InputError("bundle has no R map")
    t = a.product
    n = a.n
    R = a.R

    def found():
        for x in range(n):
            r = R[x]
            for b in range(n):
                xb = t[x][b]
                if xb is None:
                    continue
                for c in range(b + 1, n):
                    if t[x][c] == xb:
                        rb, rc = t[r][b], t[r][c]
                        if rb is None or rc is None or rb != rc:
                            yield "left-cancellative", (x, b, c), "a.b = a.c but R(a).b != R(a).c"

    return collect("left-cancellative", a, found(), cap)


def is_strongly_right_cancellative(a: Bundle, cap=DEFAULT_CAP):
    if a.R is None:
        raise InputError("bundle has no R map")
    t = a.product
    P = sorted(set(domain_map(a)))
    R = a.R

    def found():
        yield from _rc_violations(a)
        for s in range(a.n):
            for i, e in enumerate(P):
                es = t[e][s]
                if es is None:
                    continue
                for f in P[i + 1 :]:
                    fs = t[f][s]
                    if fs is not None and R[es] == R[fs]:
                        yield "strongly-right-cancellative", (e, f, s), "R(e.s) = R(f.s) with e != f"

    return collect("strongly-right-cancellative", a, found(), cap)


# ---------------------------------------------------------------------------
# radiants


@dataclass(frozen=True)
class RadiantCandidate:
    source: Bundle
    target: Bundle
    map: tuple

    def __post_init__(self):
        m = tuple(self.map)
        if len(m) != self.source.n or any(not 0 <= v < self.target.n for v in m):
            raise InputError("radiant map is not total or has out-of-range images")
        object.__setattr__(self, "map", m)


def check_radiant(c: RadiantCandidate, cap=DEFAULT_CAP):
    """Radiant axioms as violations; flags ``radiant``, ``strong``,
    ``injective``, ``embedding``, ``range-radiant`` and
    ``inverse-preserving`` (``None`` where the needed maps are absent).
    ``data`` maps each failed flag to a witness tuple of source labels."""
    src, tgt, rho = c.source, c.target, c.map
    Ds, Dt = domain_map(src), domain_map(tgt)
    ts, tt = src.product, tgt.product
    n = src.n
    radiant = []
    for x in range(n):
        if Dt[rho[x]] != rho[Ds[x]]:
            radiant.append(("radiant", (x,), "D(x rho) != D(x) rho"))
    strong_w = None
    for x in range(n):
        for y in range(n):
            v = ts[x][y]
            w = tt[rho[x]][rho[y]]
            if v is not None and (w is None or w != rho[v]):
                radiant.append(("radiant", (x, y), "(x.y) rho != (x rho).(y rho)"))
            if v is None and w is not None and strong_w is None:
                strong_w = (x, y)
    witnesses = {}
    flags = {"radiant": not radiant}
    flags["strong"] = flags["radiant"] and strong_w is None
    if strong_w is not None:
        witnesses["strong"] = src.labels(strong_w)
    seen = {}
    inj_w = None
    for x in range(n):
        if rho[x] in seen and inj_w is None:
            inj_w = (seen[rho[x]], x)
        seen.setdefault(rho[x], x)
    flags["injective"] = inj_w is None
    if inj_w is not None:
        witnesses["injective"] = src.labels(inj_w)
    flags["embedding"] = flags["strong"] and flags["injective"]
    if src.R is not None and tgt.R is not None:
        bad = next((x for x in range(n) if tgt.R[rho[x]] != rho[src.R[x]]), None)
        flags["range-radiant"] = flags["radiant"] and bad is None
        if bad is not None:
            witnesses["range-radiant"] = src.labels((bad,))
    else:
        flags["range-radiant"] = None
    if src.inverse is not None and tgt.inverse is not None:
        bad = next((x for x in range(n) if tgt.inverse[rho[x]] != rho[src.inverse[x]]), None)
        flags["inverse-preserving"] = bad is None
        if bad is not None:
            witnesses["inverse-preserving"] = src.labels((bad,))
    else:
        flags["inverse-preserving"] = None
    return collect("radiant", src, iter(radiant), cap, flags=flags, data=witnesses)


def is_radiant(src, tgt, rho, Ds=None, Dt=None) -> bool:
    """Fast boolean radiant test used by exhaustive searches."""
    Ds = Ds or domain_map(src)
    Dt = Dt or domain_map(tgt)
    ts, tt = src.product, tgt.product
    n = src.n
    for x in range(n):
        if Dt[rho[x]] != rho[Ds[x]]:
            return False
        row = ts[x]
        trow = tt[rho[x]]
        for y in range(n):
            v = row[y]
            if v is not None and trow[rho[y]] != rho[v]:
                return False
    return True
