"""Constellations with range <-> ordered categories with restrictions, and
D-inverse constellations <-> ordered groupoids.

All conversions keep the carrier and its label order, so round trips can be
compared literally.
"""
from __future__ import annotations

from .core import DEFAULT_CAP, Bundle, InputError, collect, serialize_bundle
from .constellations import (
    check_range,
    is_D_inverse,
    natural_quasiorder,
    with_domain,
)
from .ordered import (
    check_ordered_category,
    check_ordered_groupoid,
    order_closure,
    with_DR,
)


def _require(report, what):
    if not report.passed:
        v = report.violations[0]
        raise InputError(f"input is not {what}: {v.axiom} {','.join(v.witness)} {v.reason}")


def C_of(q: Bundle) -> Bundle:
    """Derived ordered category: ``s∘t = s.t`` exactly when ``R(s) = D(t)``,
    ordered by the natural order."""
    q = with_domain(q)
    _require(check_range(q), "a constellation with range")
    t = q.product
    D, R = q.D, q.R
    n = q.n
    comp = [[t[s][u] if R[s] == D[u] else None for u in range(n)] for s in range(n)]
    return Bundle(
        "ordered-category", q.elements, comp, D=D, R=R,
        inverse=q.inverse, star=q.star, E=q.E, order=natural_quasiorder(q),
    )


def _restriction_table(c: Bundle, order):
    """``res[e][x] = e|x`` for identities ``e <= D(x)``."""
    n = c.n
    below = {x: [y for y in range(n) if (y, x) in order] for x in range(n)}
    res = {}
    for x in range(n):
        for y in below[x]:
            res[c.D[y], x] = y
    return res


def Q_of(c: Bundle, kind="constellation-with-range") -> Bundle:
    """Constellation with range: ``s.t = s∘(R(s)|t)`` when ``R(s) <= D(t)``."""
    c = with_DR(c)
    _require(check_ordered_category(c), "an ordered category with restrictions")
    order = order_closure(c)
    res = _restriction_table(c, order)
    t = c.product
    D, R = c.D, c.R
    n = c.n
    prod = [
        [t[s][res[R[s], u]] if (R[s], D[u]) in order else None for u in range(n)]
        for s in range(n)
    ]
    return Bundle(kind, c.elements, prod, D=D, R=R, inverse=c.inverse, star=c.star, E=c.E)


def to_ordered_groupoid(q: Bundle) -> Bundle:
    """Attach ``R(s) = D(s')`` and the inverse map, then pass to the derived
    ordered category."""
    q = with_domain(q)
    rep = is_D_inverse(q)
    _require(rep, "a D-inverse constellation")
    inv = rep.data
    withr = q.evolve(kind="constellation-with-range", R=tuple(q.D[inv[s]] for s in range(q.n)), inverse=inv)
    return C_of(withr).evolve(kind="ordered-groupoid")


def from_ordered_groupoid(g: Bundle) -> Bundle:
    """The D-inverse constellation of an ordered groupoid (carrying the
    groupoid inverse as its D-inverse map)."""
    g = with_DR(g)
    _require(check_ordered_groupoid(g), "an ordered groupoid")
    q = Q_of(g.evolve(kind="ordered-category"), kind="constellation").evolve(R=None)
    rep = is_D_inverse(q)
    if not rep.passed or rep.data != g.inverse:
        raise AssertionError("groupoid inverse is not the D-inverse of the derived constellation")
    return q


def roundtrip_check(a: Bundle, cap=DEFAULT_CAP):
    """Literal equality of the double conversion with the input.  Omitted
    D/R maps are filled in from the product and an order given by
    generating pairs is compared through its transitive closure."""
    if a.order is not None:
        a = with_DR(a).evolve(order=order_closure(a))
    else:
        a = with_domain(a)
    if a.kind == "constellation-with-range":
        back = Q_of(C_of(a))
    elif a.kind == "ordered-category":
        back = C_of(Q_of(a))
    elif a.kind == "ordered-groupoid":
        back = to_ordered_groupoid(from_ordered_groupoid(a))
    elif a.kind == "constellation":
        back = from_ordered_groupoid(to_ordered_groupoid(a))
    else:
        raise InputError(f"no round trip for kind {a.kind}")
    x, y = serialize_bundle(a), serialize_bundle(back)

    def found():
        if x != y:
            diff = next(i for i, (p, q) in enumerate(zip(x + " ", y + " ")) if p != q)
            yield "1to1", (), f"round trip differs at byte {diff}"

    return collect("roundtrip", a, found(), cap, data=back)
