"""Property tests: invariants that must hold on every instance, driven by
hypothesis over random tables and relabeled enumerated structures."""
from hypothesis import given, settings, strategies as st

from constel import (
    build_IX,
    canonical_form,
    check_constellation,
    find_isomorphism,
    is_D_inverse,
    is_normal,
    make_bundle,
    parse_bundle,
    serialize_bundle,
)
from constel.core import canonical_form_bruteforce, canonical_key, is_isomorphism, relabel
from constel.constellations import natural_quasiorder
from constel.enumeration import iter_structures
from constel.preconstellations import check_pre_constellation, reconstruct_D, reduct
from constel.representations import inv2inv

SETTINGS = settings(max_examples=150, deadline=None)

CONSTELLATIONS = [q for n in range(1, 5) for q in iter_structures("constellation", n)]
D_INVERSE = [q for n in range(1, 5) for q in iter_structures("d-inverse-constellation", n)]
ORDERED = [g for n in range(1, 5) for g in iter_structures("ordered-groupoid", n)]
INVERSE_SEMIGROUPS = [s for n in range(1, 5) for s in iter_structures("inverse-semigroup", n)]


@st.composite
def partial_tables(draw, max_n=4):
    n = draw(st.integers(1, max_n))
    cell = st.one_of(st.none(), st.integers(0, n - 1))
    rows = draw(st.lists(st.lists(cell, min_size=n, max_size=n), min_size=n, max_size=n))
    labels = [chr(ord("a") + i) for i in range(n)]
    table = [[None if c is None else labels[c] for c in r] for r in rows]
    maps = {}
    if draw(st.booleans()):
        maps["D"] = [labels[i] for i in draw(st.lists(st.integers(0, n - 1), min_size=n, max_size=n))]
    if draw(st.booleans()):
        maps["E"] = sorted({labels[i] for i in draw(st.lists(st.integers(0, n - 1), max_size=n))})
    if draw(st.booleans()):
        pairs = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=3))
        maps["order"] = [[labels[x], labels[y]] for x, y in pairs]
    return make_bundle("pre-constellation", labels, table, **maps)


def relabeled(pool):
    @st.composite
    def draw_one(draw):
        a = draw(st.sampled_from(pool))
        perm = draw(st.permutations(range(a.n)))
        names = draw(st.lists(st.text("xyzuvw", min_size=1, max_size=3),
                              min_size=a.n, max_size=a.n, unique=True))
        return a, relabel(a, perm, labels=tuple(names)), tuple(perm)

    return draw_one()


@SETTINGS
@given(partial_tables())
def test_canonical_form_matches_bruteforce(a):
    assert serialize_bundle(canonical_form(a)) == serialize_bundle(canonical_form_bruteforce(a))


@SETTINGS
@given(partial_tables(), st.data())
def test_canonical_key_is_isomorphism_invariant(a, data):
    perm = data.draw(st.permutations(range(a.n)))
    b = relabel(a, perm)
    assert canonical_key(a) == canonical_key(b)
    assert serialize_bundle(canonical_form(a)) == serialize_bundle(canonical_form(b))
    phi = find_isomorphism(a, b)
    assert phi is not None and is_isomorphism(a, b, phi)


@SETTINGS
@given(partial_tables())
def test_parse_serialize_roundtrip(a):
    text = serialize_bundle(a)
    b = parse_bundle(text)
    assert b == a and serialize_bundle(b) == text


@SETTINGS
@given(partial_tables(), st.data())
def test_checker_verdicts_are_label_independent(a, data):
    perm = data.draw(st.permutations(range(a.n)))
    b = relabel(a, perm)
    assert check_pre_constellation(a).passed == check_pre_constellation(b).passed
    plain = a.evolve(D=None, kind="constellation")
    assert check_constellation(plain).passed == check_constellation(relabel(plain, perm)).passed


@SETTINGS
@given(relabeled(CONSTELLATIONS))
def test_domain_laws_on_relabeled_constellations(case):
    _, q, _ = case
    assert check_constellation(q).passed
    t, D = q.product, q.D
    for s in range(q.n):
        assert t[D[s]][s] == s
        for u in range(q.n):
            # s.t exists iff s.D(t) exists, and then D(s.t) = D(s)
            assert (t[s][u] is None) == (t[s][D[u]] is None)
            if t[s][u] is not None:
                assert D[t[s][u]] == D[s]


@SETTINGS
@given(relabeled(CONSTELLATIONS))
def test_quasiorder_and_normality_transport(case):
    a, q, perm = case
    assert is_normal(a).passed == is_normal(q).passed
    rel_a = natural_quasiorder(a)
    inv = {p: i for i, p in enumerate(perm)}
    assert natural_quasiorder(q) == {(inv[x], inv[y]) for x, y in rel_a}


@SETTINGS
@given(relabeled(D_INVERSE))
def test_D_inverse_laws(case):
    _, q, _ = case
    rep = is_D_inverse(q)
    assert rep.passed
    inv, t, D = rep.data, q.product, q.D
    for s in range(q.n):
        assert inv[inv[s]] == s
        assert t[s][inv[s]] == D[s]
        for u in range(q.n):
            st_, ts = t[s][u], t[inv[u]][inv[s]]
            if st_ is not None and ts is not None:
                assert inv[st_] == ts


@SETTINGS
@given(relabeled(D_INVERSE))
def test_reduct_reconstruct_on_relabeled(case):
    _, q, _ = case
    back = reconstruct_D(reduct(q))
    assert back.D == q.D and back.inverse == q.inverse


@SETTINGS
@given(relabeled(ORDERED))
def test_ordered_groupoid_order_is_partial_order(case):
    _, g, _ = case
    order = g.order | {(x, x) for x in range(g.n)}
    for x, y in order:
        assert (y, x) not in order or x == y
        for y2, z in order:
            if y2 == y:
                assert (x, z) in order


@SETTINGS
@given(relabeled(INVERSE_SEMIGROUPS))
def test_inv2inv_is_D_inverse(case):
    _, S, _ = case
    assert is_D_inverse(inv2inv(S)).passed


def _as_map(label):
    return tuple(None if v == "-" else int(v) for v in label[1:-1].split(","))


@SETTINGS
@given(st.data())
def test_IX_product_is_composition(data):
    ix = build_IX(3)
    s = data.draw(st.integers(0, ix.n - 1))
    u = data.draw(st.integers(0, ix.n - 1))
    f, g = _as_map(ix.elements[s]), _as_map(ix.elements[u])
    # f then g: defined exactly when the image of f lies in the domain of g
    img = {v for v in f if v is not None}
    dom = {x for x, v in enumerate(g) if v is not None}
    p = ix.product[s][u]
    if img <= dom:
        comp = tuple(None if v is None else g[v] for v in f)
        assert p is not None and _as_map(ix.elements[p]) == comp
    else:
        assert p is None
