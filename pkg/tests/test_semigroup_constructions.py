import json

import pytest

from common import fixture, left_zero, semilattice, twochain, z2
from constel import (
    InputError,
    build_symmetric_inverse_monoid,
    find_isomorphism,
    is_D_inverse,
    parse_bundle,
)
from constel.core import idempotents
from constel.enumeration import iter_structures
from constel.semigroups import (
    E_inverses,
    E_regular_elements,
    I_E_T_report,
    build_I_E_T,
    build_T_constellation,
    is_T_normal,
    lawson,
    nambooripad,
    is_pre_reduced,
    is_reduced,
    partial_isometries,
    unique_E_inverses,
)


def labels(S, xs):
    return set(S.labels(sorted(xs)))


def iso(a, b):
    """Isomorphic as bare partial tables."""
    strip = dict(D=None, R=None, inverse=None, star=None, E=None, order=None)
    return find_isomorphism(a.evolve(**strip), b.evolve(kind=a.kind, **strip)) is not None


def case_of(case):
    return parse_bundle(json.dumps(case["semigroup"]))


def sim2():
    return build_symmetric_inverse_monoid(2)


def test_E_regular_examples():
    Z = z2("semigroup")
    assert labels(Z, E_regular_elements(Z, {0})) == {"1", "a"}
    L = semilattice()
    assert labels(L, E_regular_elements(L)) == {"1", "0"}
    lz = left_zero("semigroup")
    assert labels(lz, E_regular_elements(lz, {0})) == {"a"}


def test_E_inverses_examples():
    Z = z2("semigroup")
    assert labels(Z, E_inverses(Z, "a", {0})) == {"a"}
    L = semilattice()
    assert labels(L, E_inverses(L, "0")) == {"0"}
    S = sim2()
    for s in range(S.n):
        assert S.star[s] in E_inverses(S, s, frozenset(idempotents(S)))


def test_T_normal_full_idempotents():
    for n in range(1, 4):
        for S in iter_structures("semigroup", n):
            assert is_T_normal(S, T=E_regular_elements(S)).passed


def test_T_normal_partial_isometries():
    S = sim2()
    I, Es = partial_isometries(S)
    assert is_T_normal(S, I, Es).passed


def test_T_normal_fixture_witness():
    case = fixture("invconsteg.json")["non_T_normal"][0]
    S = case_of(case)
    rep = is_T_normal(S, case["T"], case["E"])
    assert not rep.passed
    assert rep.first("T-normal").witness == tuple(case["witness"])


def test_T_normal_input_errors():
    Z = z2("semigroup")
    with pytest.raises(InputError):
        is_T_normal(Z, T=["1"], E=["1", "a"])  # a is not idempotent
    L = left_zero("semigroup")
    with pytest.raises(InputError):
        is_T_normal(L, T=["a", "b"], E=["a"])  # b is not {a}-regular


def test_reduced_examples():
    S = sim2()
    _, Es = partial_isometries(S)
    assert is_reduced(S, Es).passed and is_pre_reduced(S, Es).passed
    lz = left_zero("semigroup")
    rep = is_pre_reduced(lz, {0, 1})
    assert rep.first().witness == ("a", "b")
    assert rep.first().reason.startswith("ef = e and fe = f")
    assert is_pre_reduced(lz, {0}).passed and is_reduced(lz, {0}).passed


def test_I_E_T_z2():
    P = build_I_E_T(z2("semigroup"), E=["1"])
    assert P.n == 2 and iso(P, z2())
    assert is_D_inverse(P).passed


def test_I_E_T_semilattice():
    L = semilattice()
    P = build_I_E_T(L)
    assert P.elements == ("(1,1)", "(0,0)")
    assert P.label(P.product[1][0]) == "(0,0)"
    assert P.product[0][1] is None
    assert iso(P, twochain())


def test_I_E_T_non_T_normal_fixtures_fail():
    for case in fixture("invconsteg.json")["non_T_normal"]:
        S = case_of(case)
        rep = I_E_T_report(S, case["T"], case["E"])
        assert not rep.passed


def test_I_E_T_closure_gap_fixtures():
    # T-normal triples whose pair carrier is not closed under the product
    for case in fixture("invconsteg.json")["closure_gaps"]:
        S = case_of(case)
        assert is_T_normal(S, case["T"], case["E"]).passed
        rep = I_E_T_report(S, case["T"], case["E"])
        v = rep.first("closure")
        assert v is not None and v.witness == tuple(case["witness"])


def test_I_E_T_projections_are_diagonal():
    for n in range(1, 4):
        for S in iter_structures("semigroup", n):
            P = nambooripad(S)
            E = sorted(idempotents(S))
            assert set(P.D) == {P.index(f"({S.label(e)},{S.label(e)})") for e in E}


def test_T_constellation_examples():
    Z = z2("semigroup")
    assert iso(build_T_constellation(Z, E=["1"]), z2())
    L = semilattice()
    T = build_T_constellation(L)
    assert iso(T, twochain())
    assert iso(T, build_I_E_T(L))
    with pytest.raises(InputError):
        build_T_constellation(left_zero("semigroup"), E=["a", "b"])


def test_T_constellation_matches_pairs():
    for n in range(1, 4):
        for S in iter_structures("semigroup", n):
            E = frozenset(idempotents(S))
            if not is_pre_reduced(S, E).passed:
                continue
            T = E_regular_elements(S, E)
            inv = unique_E_inverses(S, T, E)
            Tc, P = build_T_constellation(S), nambooripad(S)
            phi = tuple(P.index(f"({S.label(s)},{S.label(inv[s])})") for s in sorted(T))
            assert iso(Tc, P)
            for i in range(Tc.n):
                for j in range(Tc.n):
                    p = Tc.product[i][j]
                    assert P.product[phi[i]][phi[j]] == (None if p is None else phi[p])


def test_inverse_of_product_law_fails_somewhere():
    # s.t defined while t'.s' is not
    Q = lawson(sim2())
    inv = Q.inverse
    found = [(Q.label(s), Q.label(t)) for s in range(Q.n) for t in range(Q.n)
             if Q.product[s][t] is not None and Q.product[inv[t]][inv[s]] is None]
    assert found


def test_nambooripad_examples():
    P = nambooripad(sim2())
    assert is_D_inverse(P).passed and len(set(P.D)) == 4
    assert iso(nambooripad(z2("semigroup")), z2())
    P = nambooripad(left_zero("semigroup"))
    assert P.elements == ("(a,a)", "(a,b)", "(b,a)", "(b,b)")
    assert is_D_inverse(P).passed


def test_partial_isometries_examples():
    S = sim2()
    I, Es = partial_isometries(S)
    assert len(I) == 7 and Es == frozenset(idempotents(S))
    G = z2("semigroup", star=["1", "a"])
    I, Es = partial_isometries(G)
    assert I == {0, 1} and Es == {0}
    with pytest.raises(InputError):
        partial_isometries(z2("semigroup"))


def test_lawson_pipeline():
    Q = lawson(sim2())
    assert Q.n == 7 and is_D_inverse(Q).passed
    # s.t = st iff s t t* = s
    S = sim2()
    t, st = S.product, S.star
    for i, s in enumerate(Q.elements):
        for j, u in enumerate(Q.elements):
            a, b = S.index(s), S.index(u)
            assert (Q.product[i][j] is not None) == (t[t[a][b]][st[b]] == a)
