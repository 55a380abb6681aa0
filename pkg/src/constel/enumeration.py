"""Exhaustive generation of small structures up to isomorphism.

Every generator produces labeled candidates that cover each isomorphism
class at least once; candidates are then deduplicated by canonical key and
emitted as canonical forms sorted by their serialized text.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from functools import lru_cache

from .core import (
    DEFAULT_CAP,
    Bundle,
    InputError,
    ResourceError,
    StructureError,
    canonical_form,
    canonical_key,
    collect,
    serialize_bundle,
    transitive_closure,
)
from .constellations import (
    check_constellation,
    check_range,
    derive_D,
    derive_R,
    is_D_inverse,
    is_D_regular,
    is_left_cancellative_range,
    is_normal,
    is_right_cancellative,
    is_strongly_right_cancellative,
)
from .correspondence import from_ordered_groupoid, to_ordered_groupoid
from .ordered import check_ordered_category, check_ordered_groupoid, is_inductive
from .preconstellations import check_cond12, is_inverse_pre, is_regular_pre
from .representations import is_inverse_semigroup

UNK = -2
UNDEF = -1

CAPS = {
    "constellation": 5,
    "d-inverse-constellation": 5,
    "constellation-with-range": 5,
    "semigroup": 4,
    "inverse-semigroup": 4,
    "involuted-semigroup": 4,
    "pre-constellation": 4,
    "category": 5,
    "groupoid": 5,
    "ordered-category": 4,
    "ordered-groupoid": 5,
}
ENUM_KINDS = tuple(CAPS)


# ---------------------------------------------------------------------------
# partial-table consistency (Const1/Const2, which for total tables is
# associativity); UNK cells are unknown, UNDEF cells undefined


def _triple_ok(T, x, y, z):
    yz = T[y][z]
    if yz < 0:
        return True
    xy = T[x][y]
    xyz = T[x][yz]
    if xyz >= 0:
        if xy == UNDEF:
            return False
        if xy >= 0:
            v = T[xy][z]
            if v == UNDEF or (v >= 0 and v != xyz):
                return False
    elif xyz == UNDEF and xy >= 0:
        return False
    return True


def _cell_ok(T, n, a, b):
    """All triples whose evaluation reads cell ``(a, b)``."""
    for z in range(n):
        if not _triple_ok(T, a, b, z):
            return False
    for x in range(n):
        if not _triple_ok(T, x, a, b):
            return False
    for y in range(n):
        row = T[y]
        for z in range(n):
            if row[z] == b and not _triple_ok(T, a, y, z):
                return False
    for x in range(n):
        row = T[x]
        for y in range(n):
            if row[y] == a and not _triple_ok(T, x, y, b):
                return False
    return True


def _all_ok(T, n):
    return all(_triple_ok(T, x, y, z) for x in range(n) for y in range(n) for z in range(n))


def _fill(T, n, free, rng=None):
    """Backtrack over ``free`` cells ``(a, b, values)``; yields completed
    tables (the same list object, mutated in place)."""
    order = list(free)
    if rng is not None:
        order = [(a, b, rng.sample(vals, len(vals))) for a, b, vals in order]

    def rec(i):
        if i == len(order):
            yield T
            return
        a, b, vals = order[i]
        for v in vals:
            T[a][b] = v
            if _cell_ok(T, n, a, b):
                yield from rec(i + 1)
        T[a][b] = UNK

    yield from rec(0)


def _product(T):
    return tuple(tuple(None if v < 0 else v for v in row) for row in T)


# ---------------------------------------------------------------------------
# generic cell backtracking: semigroups and pre-constellations


def _cell_search(n, partial, rng=None):
    values = ([UNDEF] if partial else []) + list(range(n))
    T = [[UNK] * n for _ in range(n)]
    free = [(a, b, values) for a in range(n) for b in range(n)]
    if rng is not None:
        rng.shuffle(free)
    for t in _fill(T, n, free, rng):
        yield _product(t)


# ---------------------------------------------------------------------------
# constellations: projections 0..k-1 carrying a quasiorder, D nondecreasing
# on the rest, right-definedness given by an up-set of projections


@lru_cache(maxsize=None)
def labeled_posets(k):
    """All partial orders on ``k`` labeled points (reflexive pairs included)."""
    pairs = list(itertools.combinations(range(k), 2))
    refl = frozenset((i, i) for i in range(k))
    out = []
    for states in itertools.product((0, 1, 2), repeat=len(pairs)):
        rel = set(refl)
        for (i, j), st in zip(pairs, states):
            if st == 1:
                rel.add((i, j))
            elif st == 2:
                rel.add((j, i))
        if all((a, d) in rel for a, b in rel for c, d in rel if b == c):
            out.append(frozenset(rel))
    return tuple(out)


def _compositions(k):
    """Nonincreasing block sizes summing to ``k``."""
    def rec(rest, top):
        if rest == 0:
            yield ()
        for size in range(min(rest, top), 0, -1):
            for tail in rec(rest - size, size):
                yield (size,) + tail
    return list(rec(k, k))


@lru_cache(maxsize=None)
def quasiorders(k):
    """Quasiorders on ``k`` points, one per isomorphism class: a partition
    into contiguous blocks with a partial order on the blocks."""
    seen = {}
    for sizes in _compositions(k):
        block = [b for b, size in enumerate(sizes) for _ in range(size)]
        for po in labeled_posets(len(sizes)):
            rel = frozenset((i, j) for i in range(k) for j in range(k) if (block[i], block[j]) in po)
            key = min(
                tuple(sorted((p[i], p[j]) for i, j in rel))
                for p in itertools.permutations(range(k))
            )
            seen.setdefault(key, rel)
    return tuple(seen[k_] for k_ in sorted(seen))


def _upsets(k, q):
    out = []
    for mask in range(1 << k):
        s = frozenset(i for i in range(k) if mask >> i & 1)
        if all(j in s for i in s for j in range(k) if (i, j) in q):
            out.append(s)
    return out


def _constellations(n, rng=None):
    for k in range(1, n + 1):
        m = n - k
        for q in quasiorders(k):
            ups = _upsets(k, q)
            up_of = [frozenset(j for j in range(k) if (i, j) in q) for i in range(k)]
            for Dn in itertools.combinations_with_replacement(range(k), m):
                D = tuple(range(k)) + Dn
                for Us in itertools.product(ups, repeat=m):
                    U = up_of + list(Us)
                    T = [[UNK] * n for _ in range(n)]
                    free = []
                    for x in range(n):
                        for t in range(n):
                            if D[t] not in U[x]:
                                T[x][t] = UNDEF
                            elif t < k:
                                T[x][t] = x
                            elif x == D[t]:
                                T[x][t] = t
                            else:
                                free.append((x, t, [v for v in range(n) if D[v] == D[x]]))
                    if not _all_ok(T, n):
                        continue
                    for t in _fill(T, n, free, rng):
                        yield _product(t), D


# ---------------------------------------------------------------------------
# categories: identities 0..k-1, arrows sorted by (D, R)


def _categories(n, rng=None):
    for k in range(1, n + 1):
        m = n - k
        homs = [(d, r) for d in range(k) for r in range(k)]
        for arrows in itertools.combinations_with_replacement(homs, m):
            D = tuple(range(k)) + tuple(d for d, _ in arrows)
            R = tuple(range(k)) + tuple(r for _, r in arrows)
            T = [[UNK] * n for _ in range(n)]
            free = []
            for x in range(n):
                for y in range(n):
                    if R[x] != D[y]:
                        T[x][y] = UNDEF
                    elif x < k:
                        T[x][y] = y
                    elif y < k:
                        T[x][y] = x
                    else:
                        free.append((x, y, [v for v in range(n) if D[v] == D[x] and R[v] == R[y]]))
            if any(not vals for _, _, vals in free):
                continue
            for t in _fill(T, n, free, rng):
                yield _product(t), D, R


def _groupoid_inverse(prod, D, R):
    n = len(prod)
    inv = []
    for x in range(n):
        ys = [y for y in range(n) if prod[x][y] == D[x] and prod[y][x] == R[x]]
        if len(ys) != 1:
            return None
        inv.append(ys[0])
    return tuple(inv)


def _orders_on(c: Bundle, rng=None):
    """Orders making category ``c`` an ordered category with restrictions,
    built from a poset on identities and a choice of restrictions."""
    n = c.n
    D, R = c.D, c.R
    ids = sorted(set(D))
    k = len(ids)
    for poset in labeled_posets(k):
        base = frozenset((ids[i], ids[j]) for i, j in poset)
        slots = []
        for x in range(n):
            if x in ids:
                continue
            for e in ids:
                if e != D[x] and (e, D[x]) in base:
                    cands = [y for y in range(n) if D[y] == e and (R[y], R[x]) in base]
                    slots.append((x, cands))
        if any(not c_ for _, c_ in slots):
            continue
        choices = [c_ for _, c_ in slots]
        if rng is not None:
            choices = [rng.sample(c_, len(c_)) for c_ in choices]
        for pick in itertools.product(*choices):
            rel = set(base) | {(x, x) for x in range(n)}
            rel |= {(y, x) for (x, _), y in zip(slots, pick)}
            rel = frozenset(rel)
            if transitive_closure(rel, n) != rel:
                continue
            yield rel


# ---------------------------------------------------------------------------
# raw candidate streams per kind


def _raw(kind, n, rng):
    if kind in ("constellation", "d-inverse-constellation", "constellation-with-range"):
        for prod, D in _constellations(n, rng):
            b = Bundle("constellation", tuple(map(str, range(n))), prod, D=D)
            if kind == "constellation":
                yield b
            elif kind == "d-inverse-constellation":
                rep = is_D_inverse(b, cap=1)
                if rep.passed:
                    yield b.evolve(inverse=rep.data)
            else:
                R = derive_R(b)
                if R is not None:
                    b = b.evolve(kind="constellation-with-range", R=R)
                    if check_range(b, cap=1).passed:
                        yield b
    elif kind in ("semigroup", "inverse-semigroup"):
        for prod in _cell_search(n, False, rng):
            b = Bundle("semigroup", tuple(map(str, range(n))), prod)
            if kind == "semigroup" or is_inverse_semigroup(b, cap=1).passed:
                yield b
    elif kind == "involuted-semigroup":
        for s in enumerate_structures(EnumerationTask("semigroup", n)).bundles:
            t = s.product
            for perm in itertools.permutations(range(n)):
                if all(perm[perm[x]] == x for x in range(n)) and all(
                    perm[t[x][y]] == t[perm[y]][perm[x]] for x in range(n) for y in range(n)
                ):
                    yield s.evolve(kind="involuted-semigroup", star=perm)
    elif kind == "pre-constellation":
        for prod in _cell_search(n, True, rng):
            yield Bundle("pre-constellation", tuple(map(str, range(n))), prod)
    elif kind in ("category", "groupoid"):
        for prod, D, R in _categories(n, rng):
            b = Bundle("category", tuple(map(str, range(n))), prod, D=D, R=R)
            if kind == "category":
                yield b
            else:
                inv = _groupoid_inverse(prod, D, R)
                if inv is not None:
                    yield b.evolve(kind="groupoid", inverse=inv)
    elif kind in ("ordered-category", "ordered-groupoid"):
        base = "category" if kind == "ordered-category" else "groupoid"
        for c in enumerate_structures(EnumerationTask(base, n)).bundles:
            for rel in _orders_on(c, rng):
                b = c.evolve(kind=kind, order=rel)
                if check_ordered_category(b.evolve(kind="ordered-category"), cap=1).passed:
                    if kind == "ordered-category":
                        yield b
                    elif check_ordered_groupoid(b, cap=1).passed:
                        yield b
    else:
        raise InputError(f"cannot enumerate kind {kind!r}")


# ---------------------------------------------------------------------------
# named requirements


def _rep(fn):
    return lambda b: fn(b, cap=1).passed


def _has_range(b):
    if b.R is None:
        R = derive_R(b)
        if R is None:
            return False
        b = b.evolve(kind="constellation-with-range", R=R)
    return check_range(b, cap=1).passed


def _semilattice_projections(b):
    return is_inductive(to_ordered_groupoid(b), cap=1).passed


REQUIREMENTS = {
    "normal": _rep(is_normal),
    "d-regular": _rep(is_D_regular),
    "d-inverse": _rep(is_D_inverse),
    "right-cancellative": _rep(is_right_cancellative),
    "range": _has_range,
    "left-cancellative": lambda b: _has_range(b) and is_left_cancellative_range(
        b if b.R else b.evolve(kind="constellation-with-range", R=derive_R(b)), cap=1).passed,
    "strongly-right-cancellative": lambda b: _has_range(b) and is_strongly_right_cancellative(
        b if b.R else b.evolve(kind="constellation-with-range", R=derive_R(b)), cap=1).passed,
    "not-d-inverse": lambda b: not is_D_inverse(b, cap=1).passed,
    "inductive": _rep(is_inductive),
    "semilattice-projections": _semilattice_projections,
    "regular": _rep(is_regular_pre),
    "inverse": _rep(is_inverse_pre),
    "cond12": lambda b: is_inverse_pre(b, cap=1).passed and check_cond12(b, cap=1).passed,
    "inverse-semigroup": _rep(is_inverse_semigroup),
    "constellation": lambda b: _is_constellation(b),
}


def _is_constellation(b):
    try:
        D = derive_D(b)
    except StructureError:
        return False
    return check_constellation(b.evolve(D=D), cap=1).passed


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EnumerationTask:
    kind: str
    order: int
    require: tuple = ()
    count_only: bool = False
    limit: int | None = None
    seed: int | None = None  # permutes the search order; result must not change


@dataclass(frozen=True)
class EnumerationResult:
    task: EnumerationTask
    count: int
    bundles: tuple = field(repr=False)
    truncated: bool = False


@lru_cache(maxsize=64)
def _classes(kind, n, seed):
    rng = None if seed is None else random.Random(seed)
    reps = {}
    for b in _raw(kind, n, rng):
        key = canonical_key(b)
        if key not in reps:
            reps[key] = b
    forms = [canonical_form(b) for b in reps.values()]
    forms.sort(key=serialize_bundle)
    return tuple(forms)


def enumerate_structures(task: EnumerationTask) -> EnumerationResult:
    kind, n = task.kind, task.order
    if kind not in CAPS:
        raise InputError(f"cannot enumerate kind {kind!r}; known: {', '.join(ENUM_KINDS)}")
    if n < 0:
        raise InputError("order must be non-negative")
    if n > CAPS[kind]:
        raise ResourceError(f"order {n} exceeds the cap of {CAPS[kind]} for {kind}")
    for r in task.require:
        if r not in REQUIREMENTS:
            raise InputError(f"unknown requirement {r!r}; known: {', '.join(sorted(REQUIREMENTS))}")
    if n == 0:
        forms = (_empty(kind),)
    else:
        forms = _classes(kind, n, task.seed)
    out = [b for b in forms if all(REQUIREMENTS[r](b) for r in task.require)]
    count = len(out)
    truncated = task.limit is not None and count > task.limit
    if truncated:
        out = out[: task.limit]
    return EnumerationResult(task, count, () if task.count_only else tuple(out), truncated)


def _empty(kind):
    maps = {}
    if kind in ("constellation", "d-inverse-constellation", "constellation-with-range",
                "category", "groupoid", "ordered-category", "ordered-groupoid"):
        maps["D"] = ()
    if kind in ("constellation-with-range", "category", "groupoid", "ordered-category", "ordered-groupoid"):
        maps["R"] = ()
    if kind in ("d-inverse-constellation", "groupoid", "ordered-groupoid"):
        maps["inverse"] = ()
    if kind == "involuted-semigroup":
        maps["star"] = ()
    if kind.startswith("ordered"):
        maps["order"] = frozenset()
    bkind = {"d-inverse-constellation": "constellation", "inverse-semigroup": "semigroup"}.get(kind, kind)
    return Bundle(bkind, (), (), **maps)


def iter_structures(kind, n, *require):
    return enumerate_structures(EnumerationTask(kind, n, tuple(require))).bundles


def count_structures(kind, n, *require):
    return enumerate_structures(EnumerationTask(kind, n, tuple(require), count_only=True)).count


def dual_count_check(n, cap=DEFAULT_CAP):
    """D-inverse constellations and ordered groupoids of order ``n`` are
    matched one-to-one by the conversions, on canonical keys."""
    cons = iter_structures("d-inverse-constellation", n)
    ogs = iter_structures("ordered-groupoid", n)
    og_keys = {canonical_key(g): g for g in ogs}
    con_keys = {canonical_key(q): q for q in cons}
    image = [canonical_key(to_ordered_groupoid(q)) for q in cons]
    back = [canonical_key(from_ordered_groupoid(g)) for g in ogs]

    def found():
        if len(cons) != len(ogs):
            yield "count", (), f"{len(cons)} D-inverse constellations vs {len(ogs)} ordered groupoids"
        if len(set(image)) != len(image):
            yield "injective", (), "two constellations map to isomorphic groupoids"
        for q, k in zip(cons, image):
            if k not in og_keys:
                yield "image", (), f"image of {serialize_bundle(q)} not among the ordered groupoids"
        for g, k in zip(ogs, back):
            if k not in con_keys:
                yield "preimage", (), f"{serialize_bundle(g)} has no matching constellation"

    empty = Bundle("pre-constellation", (), ())
    return collect("dual-count", empty, found(), cap,
                   data={"d-inverse-constellations": len(cons), "ordered-groupoids": len(ogs)})
