import itertools

import pytest

from common import left_zero, twochain, z2
from constel import (
    InputError,
    ParseError,
    ResourceError,
    build_IX,
    canonical_form,
    find_isomorphism,
    make_bundle,
    parse_bundle,
    serialize_bundle,
)
from constel.core import (
    canonical_form_bruteforce,
    canonical_form_with_perm,
    check_partial_order,
    idempotents,
    is_isomorphism,
    product,
    relabel,
    right_identities,
)
from constel.constellations import natural_quasiorder
from constel.enumeration import iter_structures


def labels(a, idx):
    return set(a.labels(idx))


def test_product_twochain():
    a = twochain()
    assert a.label(product(a, 0, 1)) == "e"
    assert product(a, 1, 0) is None


def test_product_left_zero():
    a = left_zero("semigroup")
    assert a.label(product(a, a.index("a"), a.index("b"))) == "a"


def test_product_index_out_of_range():
    with pytest.raises(InputError):
        product(twochain(), 0, 2)


def test_idempotents():
    assert labels(twochain(), idempotents(twochain())) == {"e", "f"}
    assert labels(z2(), idempotents(z2())) == {"1"}
    ix = build_IX(2)
    assert labels(ix, idempotents(ix)) == {"(0,1)", "(0,-)", "(-,1)", "(-,-)"}


def test_right_identities():
    assert labels(left_zero(), right_identities(left_zero())) == {"a", "b"}
    assert labels(z2(), right_identities(z2())) == {"1"}
    assert labels(twochain(), right_identities(twochain())) == {"e", "f"}


def test_find_isomorphism_identity_on_z2():
    assert find_isomorphism(z2(), z2()) == (0, 1)


def test_find_isomorphism_twochain_vs_left_zero_absent():
    assert find_isomorphism(twochain(), left_zero()) is None


def test_find_isomorphism_relabeled_IX():
    ix = build_IX(2)
    perm = (3, 6, 0, 5, 1, 4, 2)
    b = relabel(ix, perm)
    phi = find_isomorphism(ix, b)
    assert phi is not None and is_isomorphism(ix, b, phi)
    # relabel puts old element perm[i] at position i; the inverse relabeling is
    # an isomorphism, and phi may differ from it only by an automorphism of I_X
    expected = [perm.index(x) for x in range(ix.n)]
    assert is_isomorphism(ix, b, expected)
    swap = [expected.index(phi[x]) for x in range(ix.n)]
    assert is_isomorphism(ix, ix, swap)


def test_find_isomorphism_kind_mismatch():
    with pytest.raises(InputError):
        find_isomorphism(z2(), z2("semigroup"))


def test_canonical_form_idempotent_and_relabeling_invariant():
    ix = build_IX(2)
    c = canonical_form(ix)
    assert serialize_bundle(canonical_form(c)) == serialize_bundle(c)
    b = relabel(ix, (6, 5, 4, 3, 2, 1, 0))
    assert serialize_bundle(canonical_form(b)) == serialize_bundle(c)


def test_canonical_form_order_one_unique():
    forms = {serialize_bundle(canonical_form(b)) for b in iter_structures("constellation", 1)}
    assert len(forms) == 1


def test_canonical_form_matches_bruteforce_on_IX():
    ix = build_IX(2)
    assert serialize_bundle(canonical_form(ix)) == serialize_bundle(canonical_form_bruteforce(ix))


def test_canonical_form_cap():
    with pytest.raises(ResourceError):
        canonical_form(build_IX(3))  # 34 elements


def test_partial_order_checks():
    assert check_partial_order({(0, 0), (1, 1), (0, 1)}, ["e", "f"]).passed
    rep = check_partial_order({(0, 0), (1, 1), (0, 1), (1, 0)}, ["e", "f"])
    assert rep.first("antisymmetry").witness == ("e", "f")
    lz = left_zero()
    rep = check_partial_order(natural_quasiorder(lz), lz)
    assert "antisymmetry" in rep.axioms()


def test_serialize_parse_round_trip_z2():
    a = z2()
    text = serialize_bundle(a)
    assert parse_bundle(text) == a
    assert text == ('{"kind": "constellation", "elements": ["1", "a"], '
                    '"product": [["1", "a"], ["a", "1"]]}')


def test_parse_unknown_cell_is_parse_error():
    with pytest.raises(ParseError):
        parse_bundle('{"kind": "semigroup", "elements": ["a"], "product": [["b"]]}')


def test_parse_short_D_is_input_error():
    text = '{"kind": "constellation", "elements": ["a", "b"], "product": [["a", null], [null, "b"]], "D": ["a"]}'
    with pytest.raises(InputError) as exc:
        parse_bundle(text)
    assert not isinstance(exc.value, ParseError)


def test_parse_malformed_reports_position():
    with pytest.raises(ParseError) as exc:
        parse_bundle('{"kind": \n  oops}')
    assert exc.value.line == 2


def test_order_gets_reflexive_closure_on_load():
    a = parse_bundle('{"kind": "ordered-category", "elements": ["e", "f"], '
                     '"product": [["e", null], [null, "f"]], "order": [["e", "f"]]}')
    assert a.order == {(0, 0), (1, 1), (0, 1)}


def test_empty_carrier_accepted():
    a = make_bundle("constellation", [], [])
    assert parse_bundle(serialize_bundle(a)) == a
    assert idempotents(a) == frozenset()


@pytest.mark.parametrize("kind", ["constellation", "ordered-groupoid", "semigroup"])
def test_canonical_form_isomorphic_via_perm(kind):
    for a in iter_structures(kind, 3):
        c, perm = canonical_form_with_perm(a)
        assert is_isomorphism(a, c, [perm.index(i) for i in range(a.n)])


def test_find_isomorphism_preserves_definedness_exhaustively():
    a = build_IX(2)
    b = relabel(a, (1, 0, 2, 3, 4, 5, 6))
    phi = find_isomorphism(a, b)
    for x, y in itertools.product(range(a.n), repeat=2):
        v, w = a.product[x][y], b.product[phi[x]][phi[y]]
        assert (v is None) == (w is None)
        if v is not None:
            assert phi[v] == w
