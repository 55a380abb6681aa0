"""Object-free categories and groupoids, ordered categories with
restrictions, ordered and inductive groupoids, and order-preserving functors.
"""
from __future__ import annotations

from .core import (
    DEFAULT_CAP,
    Bundle,
    InputError,
    StructureError,
    collect,
    left_identities,
    merge,
    right_identities,
    transitive_closure,
    _relation_violations,
)
from .constellations import RadiantCandidate


def identities(a: Bundle) -> frozenset:
    return left_identities(a) & right_identities(a)


def _derived_DR(a: Bundle):
    """Unique identities ``e, f`` with ``e∘x`` and ``x∘f`` defined, per
    element; ``None`` entries where not unique."""
    ids = sorted(identities(a))
    t = a.product
    D, R = [], []
    for x in range(a.n):
        ds = [e for e in ids if t[e][x] is not None]
        rs = [f for f in ids if t[x][f] is not None]
        D.append(ds[0] if len(ds) == 1 else None)
        R.append(rs[0] if len(rs) == 1 else None)
    return D, R


def derive_DR(a: Bundle):
    D, R = _derived_DR(a)
    bad = next((x for x in range(a.n) if D[x] is None or R[x] is None), None)
    if bad is not None:
        raise StructureError("element lacks unique identities on both sides", a.labels((bad,)))
    return tuple(D), tuple(R)


def with_DR(a: Bundle) -> Bundle:
    if a.D is not None and a.R is not None:
        return a
    D, R = derive_DR(a)
    return a.evolve(D=a.D or D, R=a.R or R)


def _category_violations(a: Bundle):
    t = a.product
    n = a.n
    for x in range(n):
        for y in range(n):
            xy = t[x][y]
            for z in range(n):
                yz = t[y][z]
                left = None if yz is None else t[x][yz]
                right = None if xy is None else t[xy][z]
                if (left is None) != (right is None):
                    yield "Cat1", (x, y, z), "x∘(y∘z) and (x∘y)∘z not equally defined"
                elif left is not None and left != right:
                    yield "Cat1", (x, y, z), "x∘(y∘z) != (x∘y)∘z"
                if xy is not None and yz is not None and left is None:
                    yield "Cat2", (x, y, z), "x∘y and y∘z exist but x∘(y∘z) does not"
    ids = identities(a)
    D, R = _derived_DR(a)
    for x in range(n):
        ds = [e for e in sorted(ids) if t[e][x] is not None]
        rs = [f for f in sorted(ids) if t[x][f] is not None]
        if not ds or not rs:
            yield "Cat3", (x,), "no identities e, f with e∘x and x∘f defined"
        elif len(ds) > 1 or len(rs) > 1:
            yield "Cat3", (x, *ds, *rs), "identities for x are not unique"
    for name, given, derived in (("D", a.D, D), ("R", a.R, R)):
        if given is None:
            continue
        for x in range(n):
            if derived[x] is not None and given[x] != derived[x]:
                yield name, (x, given[x]), f"supplied {name} differs from the identity {a.label(derived[x])}"
    if any(v is None for v in D + R):
        return
    Dm = a.D or D
    Rm = a.R or R
    for x in range(n):
        for y in range(n):
            xy = t[x][y]
            if (xy is not None) != (Rm[x] == Dm[y]):
                yield "derived:composable", (x, y), "x∘y defined iff R(x) = D(y) fails"
            elif xy is not None and (Dm[xy] != Dm[x] or Rm[xy] != Rm[y]):
                yield "derived:composable", (x, y), "D(x∘y) != D(x) or R(x∘y) != R(y)"
    if set(Dm) != ids or set(Rm) != ids:
        yield "derived:identities", (), "identities differ from the image of D or R"


def check_category(a: Bundle, cap=DEFAULT_CAP):
    return collect("category", a, _category_violations(a), cap)


def _groupoid_violations(a: Bundle):
    if a.inverse is None:
        raise InputError("bundle has no inverse map")
    D, R = a.D, a.R
    t = a.product
    inv = a.inverse
    for s in range(a.n):
        if t[s][inv[s]] != D[s]:
            yield "groupoid", (s, inv[s]), "s∘s' != D(s)"
        if t[inv[s]][s] != R[s]:
            yield "groupoid", (s, inv[s]), "s'∘s != R(s)"


def check_groupoid(a: Bundle, cap=DEFAULT_CAP):
    base = check_category(a, cap)
    if not base.passed:
        return merge("groupoid", base)
    return collect("groupoid", with_DR(a), _groupoid_violations(with_DR(a)), cap)


def order_closure(a: Bundle) -> frozenset:
    return transitive_closure(a.order, a.n)


def restriction(a: Bundle, e, x):
    """``e|x``: the unique ``y <= x`` with ``D(y) = e``."""
    a = with_DR(a)
    if e not in identities(a):
        raise InputError(f"{a.label(e)!r} is not an identity")
    if a.order is None:
        raise InputError("bundle has no order relation")
    order = order_closure(a)
    if (e, a.D[x]) not in order:
        raise InputError(f"{a.label(e)!r} is not below D({a.label(x)})")
    ys = [y for y in range(a.n) if (y, x) in order and a.D[y] == e]
    if len(ys) != 1:
        raise StructureError("restriction is not unique", a.labels((e, x, *ys)))
    return ys[0]


def corestriction(a: Bundle, s, e):
    """``s|e = (e|s')'`` for ``e <= R(s)``."""
    inv = a.inverse
    return inv[restriction(a, e, inv[s])]


def _oc_violations(a: Bundle, order, derived_prefix=""):
    """OC1-OC4 and OC8(i) on a category with D, R and a closed order."""
    n = a.n
    t = a.product
    D, R = a.D, a.R
    for v in _relation_violations(order, n):
        if v[0] == "antisymmetry":
            yield "OC1", v[1], v[2]
    pre = derived_prefix
    below = {x: [y for y in range(n) if (y, x) in order] for x in range(n)}
    for x, y in sorted(order):
        if (D[x], D[y]) not in order or (R[x], R[y]) not in order:
            yield pre + "OC2", (x, y), "x <= y but D(x) !<= D(y) or R(x) !<= R(y)"
        if x != y and D[x] == D[y] and R[x] == R[y]:
            yield pre + "OC4", (x, y), "distinct comparable elements in one hom-set"
    pairs = sorted(order)
    for x1, x2 in pairs:
        for y1, y2 in pairs:
            p1 = t[x1][y1]
            p2 = t[x2][y2]
            if p1 is not None and p2 is not None and (p1, p2) not in order:
                yield "OC3", (x1, y1, x2, y2), "x1∘y1 !<= x2∘y2"
    ids = sorted(set(D))
    for x in range(n):
        for e in ids:
            if (e, D[x]) not in order:
                continue
            ys = [y for y in below[x] if D[y] == e]
            if len(ys) != 1:
                yield "OC8i", (e, x, *ys), f"{len(ys)} elements y <= x with D(y) = e"


def check_ordered_category(a: Bundle, cap=DEFAULT_CAP):
    if a.order is None:
        raise InputError("bundle has no order relation")
    base = check_category(a, cap)
    if not base.passed:
        return merge("ordered-category", base)
    a = with_DR(a)
    return collect("ordered-category", a, _oc_violations(a, order_closure(a)), cap)


def check_ordered_groupoid(a: Bundle, cap=DEFAULT_CAP):
    if a.order is None:
        raise InputError("bundle has no order relation")
    base = check_groupoid(a, cap)
    if not base.passed:
        return merge("ordered-groupoid", base)
    a = with_DR(a)
    order = order_closure(a)

    def found():
        inv = a.inverse
        for x, y in sorted(order):
            if (inv[x], inv[y]) not in order:
                yield "OG1", (x, y), "x <= y but x' !<= y'"
        ocs = list(_oc_violations(a, order, derived_prefix="derived:"))
        yield from ocs
        if ocs:
            return
        # corestriction s|e = (e|s')' lies below s and has range e
        ids = sorted(set(a.D))
        for s in range(a.n):
            for e in ids:
                if (e, a.R[s]) not in order:
                    continue
                r = [y for y in range(a.n) if (y, inv[s]) in order and a.D[y] == e]
                c = inv[r[0]]
                if (c, s) not in order or a.R[c] != e:
                    yield "derived:corestriction", (s, e), "s|e !<= s or R(s|e) != e"

    return collect("ordered-groupoid", a, found(), cap)


def is_inductive(a: Bundle, cap=DEFAULT_CAP):
    """Identities form a meet-semilattice under the order."""
    a = with_DR(a)
    order = order_closure(a)
    ids = sorted(set(a.D))

    def found():
        for i, e in enumerate(ids):
            for f in ids[i + 1 :]:
                lower = [g for g in ids if (g, e) in order and (g, f) in order]
                glb = [g for g in lower if all((h, g) in order for h in lower)]
                if len(glb) != 1:
                    yield "inductive", (e, f), "no greatest lower bound among identities"

    return collect("inductive", a, found(), cap)


def check_order_preserving_functor(c: RadiantCandidate, cap=DEFAULT_CAP):
    src, tgt = with_DR(c.source), with_DR(c.target)
    rho = c.map
    n = src.n
    ts, tt = src.product, tgt.product
    functor = []
    for x in range(n):
        if tgt.D[rho[x]] != rho[src.D[x]]:
            functor.append(("functor", (x,), "D(x) rho != D(x rho)"))
        if tgt.R[rho[x]] != rho[src.R[x]]:
            functor.append(("functor", (x,), "R(x) rho != R(x rho)"))
        for y in range(n):
            v = ts[x][y]
            if v is not None and tt[rho[x]][rho[y]] != rho[v]:
                functor.append(("functor", (x, y), "(x∘y) rho != x rho ∘ y rho"))
    so = order_closure(src) if src.order is not None else frozenset((i, i) for i in range(n))
    to = order_closure(tgt) if tgt.order is not None else frozenset((i, i) for i in range(tgt.n))
    bad = [("order-preserving", (x, y), "x <= y but x rho !<= y rho")
           for x, y in sorted(so) if (rho[x], rho[y]) not in to]
    flags = {"functor": not functor, "order-preserving": not bad}
    return collect("order-preserving-functor", src, iter(functor + bad), cap, flags=flags)
