import math

import pytest

from common import left_zero, semilattice, twochain, z2
from constel import (
    InputError,
    ResourceError,
    build_CX,
    build_IX,
    build_symmetric_inverse_monoid,
    cayley_radiant,
    check_range,
    inv2inv,
    is_D_inverse,
    is_right_cancellative,
    make_bundle,
    serialize_bundle,
)
from constel.core import idempotents
from constel.representations import (
    check_cayley,
    inductive_groupoid,
    is_inverse_semigroup,
    partial_maps,
)
from constel.semigroups import check_semigroup


def test_CX_examples():
    cx1 = build_CX(1)
    assert cx1.elements == ("(0)", "(-)")
    assert cx1.product[0][1] is None  # 1 . empty undefined
    cx2 = build_CX(2)
    assert cx2.n == 9 and check_range(cx2).passed
    assert not is_right_cancellative(cx2).passed
    cx0 = build_CX(0)
    assert cx0.n == 1 and is_D_inverse(cx0).passed


def test_caps():
    with pytest.raises(ResourceError):
        build_CX(5)
    with pytest.raises(ResourceError):
        build_IX(5)
    with pytest.raises(InputError):
        build_IX(-1)


@pytest.mark.parametrize("m", range(5))
def test_IX_count_formula(m):
    assert build_IX(m).n == sum(math.comb(m, k) ** 2 * math.factorial(k) for k in range(m + 1))


def test_CX_count():
    for m in range(4):
        assert build_CX(m).n == (m + 1) ** m


def test_IX_examples():
    ix = build_IX(2)
    assert ix.n == 7
    rep = is_D_inverse(ix)
    assert rep.passed and rep.data == ix.inverse
    s, t = ix.index("(0,-)"), ix.index("(0,1)")
    assert ix.label(ix.product[s][t]) == "(0,-)"
    assert ix.product[ix.inverse[t]][ix.inverse[s]] is None
    assert build_IX(0).n == 1 and is_D_inverse(build_IX(0)).passed


def test_partial_map_order():
    assert list(partial_maps(1)) == [(0,), (None,)]
    assert list(partial_maps(2, injective=True))[:3] == [(0, 1), (0, None), (1, 0)]


def test_symmetric_inverse_monoid():
    S = build_symmetric_inverse_monoid(2)
    assert S.n == 7 and len(idempotents(S)) == 4
    assert check_semigroup(S).passed  # associativity and (fg)* = g*f*
    assert is_inverse_semigroup(S).passed


def test_is_inverse_semigroup_examples():
    rep = is_inverse_semigroup(left_zero("semigroup"))
    assert not rep.passed and rep.first().witness == ("a", "a", "b")
    rep = is_inverse_semigroup(z2("semigroup"))
    assert rep.passed and rep.data == (0, 1)
    nonassoc = make_bundle("semigroup", ["a", "b"], [["b", "a"], ["a", "a"]])
    with pytest.raises(InputError):
        is_inverse_semigroup(nonassoc)


def test_inv2inv_examples():
    S = build_symmetric_inverse_monoid(2)
    assert serialize_bundle(inv2inv(S)) == serialize_bundle(build_IX(2))
    assert inv2inv(z2("semigroup")).product == z2().product
    q = inv2inv(semilattice())
    assert q.product == ((0, None), (1, 1))  # 1.0 undefined, 0.1 = 0
    assert is_D_inverse(q).passed


def test_inv2inv_rejects_non_inverse():
    with pytest.raises(InputError):
        inv2inv(left_zero("semigroup"))


def test_cayley_twochain():
    c = cayley_radiant(twochain())
    tgt = c.target
    assert tgt.label(c.map[0]) == "(e,-)"
    assert tgt.label(c.map[1]) == "(e,f)"
    rep = check_cayley(twochain())
    assert rep.flags["embedding"] and rep.flags["inverse-preserving"]


def test_cayley_z2_transposition():
    c = cayley_radiant(z2())
    assert c.target.label(c.map[1]) == "(a,1)"
    assert check_cayley(z2()).flags["embedding"]


def test_cayley_gates():
    with pytest.raises(InputError):
        cayley_radiant(left_zero())  # not normal
    with pytest.raises(InputError):
        cayley_radiant(build_CX(2))  # not right cancellative


def test_esn_direct_construction():
    g = inductive_groupoid(build_symmetric_inverse_monoid(2))
    assert g.kind == "ordered-groupoid" and len(set(g.D)) == 4
