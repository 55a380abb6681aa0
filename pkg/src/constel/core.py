"""Finite carriers, partial operation tables, reports, serialization and
isomorphism machinery shared by every structure kind.

Elements are addressed by index ``0..n-1``; labels only appear at the I/O
boundary.  An undefined product is stored as ``None`` in the table.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from functools import lru_cache
from itertools import permutations
from typing import Any, Iterable, Iterator, Sequence

import numpy as np

KINDS = (
    "semigroup",
    "pre-constellation",
    "constellation",
    "constellation-with-range",
    "category",
    "groupoid",
    "ordered-category",
    "ordered-groupoid",
    "involuted-semigroup",
)

MAP_FIELDS = ("D", "R", "inverse", "star")

DEFAULT_CAP = 100
CANONICAL_MAX = 8


class ConstelError(Exception):
    """Base class for errors raised by this package."""


class InputError(ConstelError, ValueError):
    pass


class ParseError(InputError):
    def __init__(self, msg, line=None, col=None):
        self.line, self.col = line, col
        if line is not None:
            msg = f"{msg} (line {line}, column {col})"
        super().__init__(msg)


class ResourceError(ConstelError):
    """A requested size exceeds a configured cap."""


class StructureError(ConstelError):
    """The input does not satisfy a structural precondition."""

    def __init__(self, msg, witness=()):
        super().__init__(msg)
        self.witness = tuple(witness)


def _closure_reflexive(order, n):
    return frozenset(order) | {(i, i) for i in range(n)}


@dataclass(frozen=True)
class Bundle:
    """A finite partial algebra together with whatever extra data its kind
    carries (domain/range/inverse/involution maps, an idempotent subset, an
    order relation).
    """

    kind: str
    elements: tuple
    product: tuple
    D: tuple | None = None
    R: tuple | None = None
    inverse: tuple | None = None
    star: tuple | None = None
    E: frozenset | None = None
    order: frozenset | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InputError(f"unknown kind {self.kind!r}")
        elements = tuple(self.elements)
        if len(set(elements)) != len(elements):
            raise InputError("element labels are not unique")
        object.__setattr__(self, "elements", elements)
        n = len(elements)
        table = tuple(tuple(row) for row in self.product)
        if len(table) != n or any(len(row) != n for row in table):
            raise InputError(f"product table is not {n}x{n}")
        for row in table:
            for v in row:
                if v is not None and not (isinstance(v, int) and 0 <= v < n):
                    raise InputError(f"table entry {v!r} out of range")
        object.__setattr__(self, "product", table)
        for name in MAP_FIELDS:
            m = getattr(self, name)
            if m is None:
                continue
            m = tuple(m)
            if len(m) != n:
                raise InputError(f"map {name} has length {len(m)}, expected {n}")
            if any(not (isinstance(v, int) and 0 <= v < n) for v in m):
                raise InputError(f"map {name} has an out-of-range image")
            object.__setattr__(self, name, m)
        if self.E is not None:
            E = frozenset(self.E)
            if any(not 0 <= e < n for e in E):
                raise InputError("E contains an out-of-range element")
            object.__setattr__(self, "E", E)
        if self.order is not None:
            order = frozenset((int(a), int(b)) for a, b in self.order)
            if any(not (0 <= a < n and 0 <= b < n) for a, b in order):
                raise InputError("order relation mentions an out-of-range element")
            object.__setattr__(self, "order", _closure_reflexive(order, n))

    @property
    def n(self):
        return len(self.elements)

    def mul(self, x, y):
        return self.product[x][y]

    def label(self, i):
        return self.elements[i]

    def labels(self, idx: Iterable[int]) -> tuple:
        return tuple(self.elements[i] for i in idx)

    def index(self, label):
        try:
            return self.elements.index(label)
        except ValueError:
            raise InputError(f"unknown element {label!r}") from None

    def evolve(self, **changes) -> "Bundle":
        return replace(self, **changes)

    def leq(self, a, b):
        return (a, b) in self.order


def make_bundle(kind, elements, product, **maps) -> Bundle:
    """Build a bundle from label-valued data: cells and map images are labels
    (``None`` for an undefined cell), ``E`` a collection of labels and
    ``order`` a collection of label pairs.
    """
    elements = tuple(elements)
    pos = {lab: i for i, lab in enumerate(elements)}

    def idx(lab):
        if lab not in pos:
            raise InputError(f"unknown element {lab!r}")
        return pos[lab]

    table = [[None if c is None else idx(c) for c in row] for row in product]
    kw = {}
    for name in MAP_FIELDS:
        if maps.get(name) is not None:
            kw[name] = tuple(idx(v) for v in maps[name])
    if maps.get("E") is not None:
        kw["E"] = frozenset(idx(v) for v in maps["E"])
    if maps.get("order") is not None:
        kw["order"] = frozenset((idx(a), idx(b)) for a, b in maps["order"])
    return Bundle(kind, elements, table, **kw)


# ---------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class Violation:
    axiom: str
    witness: tuple
    reason: str

    def line(self):
        return f"{self.axiom}\t{','.join(self.witness)}\t{self.reason}"


@dataclass(frozen=True)
class CheckReport:
    """Verdict of a check with every violation found (up to ``cap``).

    ``flags`` holds named boolean properties for checks that compute several
    at once (radiants, functors); ``data`` carries a by-product such as the
    inverse map of a D-inverse constellation.
    """

    name: str
    violations: tuple = ()
    flags: dict = field(default_factory=dict)
    data: Any = None
    truncated: bool = False

    @property
    def passed(self):
        return not self.violations

    def __bool__(self):
        return self.passed

    def axioms(self):
        return {v.axiom for v in self.violations}

    def first(self, axiom=None):
        for v in self.violations:
            if axiom is None or v.axiom == axiom:
                return v
        return None

    def to_text(self):
        head = f"{'PASS' if self.passed else 'FAIL'}\t{self.name}"
        lines = [head]
        lines += [v.line() for v in self.violations]
        if self.truncated:
            lines.append("...\t\tviolation cap reached")
        for k, v in self.flags.items():
            lines.append(f"flag\t{k}\t{v}")
        return "\n".join(lines)

    def to_dict(self):
        return {
            "check": self.name,
            "verdict": "pass" if self.passed else "fail",
            "violations": [
                {"axiom": v.axiom, "witness": list(v.witness), "reason": v.reason}
                for v in self.violations
            ],
            "flags": dict(self.flags),
        }


def collect(name, bundle, found: Iterable, cap=DEFAULT_CAP, flags=None, data=None):
    """Turn ``(axiom, witness-indices, reason)`` triples into a report."""
    out = []
    truncated = False
    for axiom, witness, reason in found:
        if cap is not None and len(out) >= cap:
            truncated = True
            break
        out.append(Violation(axiom, bundle.labels(witness), reason))
    return CheckReport(name, tuple(out), dict(flags or {}), data, truncated)


def merge(name, *reports, flags=None, data=None):
    vs = tuple(v for r in reports for v in r.violations)
    return CheckReport(name, vs, dict(flags or {}), data, any(r.truncated for r in reports))


# ---------------------------------------------------------------------------
# basic table queries


def _table(a):
    return a.product if isinstance(a, Bundle) else a


def product(a, x, y):
    """``x·y`` in the table of ``a``, or ``None`` when undefined."""
    t = _table(a)
    n = len(t)
    if not (0 <= x < n and 0 <= y < n):
        raise InputError(f"element index out of range: ({x}, {y}) with n={n}")
    return t[x][y]


def idempotents(a) -> frozenset:
    t = _table(a)
    return frozenset(e for e in range(len(t)) if t[e][e] == e)


def right_identities(a) -> frozenset:
    t = _table(a)
    n = len(t)
    return frozenset(
        e for e in range(n) if all(t[x][e] is None or t[x][e] == x for x in range(n))
    )


def left_identities(a) -> frozenset:
    t = _table(a)
    n = len(t)
    return frozenset(
        e for e in range(n) if all(t[e][x] is None or t[e][x] == x for x in range(n))
    )


def is_total(a):
    return all(v is not None for row in _table(a) for v in row)


# ---------------------------------------------------------------------------
# relations


def transitive_closure(pairs, n):
    m = np.zeros((n, n), dtype=bool)
    for a, b in pairs:
        m[a, b] = True
    m |= np.eye(n, dtype=bool)
    for k in range(n):
        m |= m[:, k : k + 1] & m[k : k + 1, :]
    return frozenset(zip(*map(lambda v: v.tolist(), np.nonzero(m))))


def _relation_violations(pairs, n):
    rel = set(pairs)
    for a in range(n):
        if (a, a) not in rel:
            yield "reflexivity", (a,), "element not related to itself"
    for a, b in sorted(rel):
        if a < b and (b, a) in rel:
            yield "antisymmetry", (a, b), "a <= b and b <= a with a != b"
    succ = {}
    for a, b in rel:
        succ.setdefault(a, set()).add(b)
    for a, b in sorted(rel):
        for c in sorted(succ.get(b, ())):
            if (a, c) not in rel:
                yield "transitivity", (a, b, c), "a <= b <= c but not a <= c"


def check_partial_order(pairs, elements, cap=DEFAULT_CAP) -> CheckReport:
    """Reflexivity, antisymmetry and transitivity of a relation given as a
    set of index pairs over ``elements`` (a label sequence or a bundle)."""
    if isinstance(elements, Bundle):
        carrier = elements
    else:
        labels = tuple(elements)
        carrier = _Labels(labels)
    return collect("partial-order", carrier, _relation_violations(pairs, len(carrier.elements)), cap)


@dataclass(frozen=True)
class _Labels:
    elements: tuple

    def labels(self, idx):
        return tuple(self.elements[i] for i in idx)


# ---------------------------------------------------------------------------
# serialization


def serialize_bundle(a: Bundle) -> str:
    """Deterministic one-line JSON text of ``a``."""
    lab = a.elements
    obj = {"kind": a.kind, "elements": list(lab)}
    obj["product"] = [[None if v is None else lab[v] for v in row] for row in a.product]
    for name in MAP_FIELDS:
        m = getattr(a, name)
        if m is not None:
            obj[name] = [lab[v] for v in m]
    if a.E is not None:
        obj["E"] = [lab[e] for e in sorted(a.E)]
    if a.order is not None:
        obj["order"] = [[lab[x], lab[y]] for x, y in sorted(a.order) if x != y]
    return json.dumps(obj, ensure_ascii=False, separators=(", ", ": "))


def parse_bundle(text: str) -> Bundle:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(obj, dict):
        raise ParseError("top level value must be an object")
    for key in ("kind", "elements", "product"):
        if key not in obj:
            raise ParseError(f"missing key {key!r}")
    unknown = set(obj) - {"kind", "elements", "product", *MAP_FIELDS, "E", "order"}
    if unknown:
        raise ParseError(f"unexpected keys {sorted(unknown)}")
    elements = obj["elements"]
    if not isinstance(elements, list) or not all(isinstance(x, str) for x in elements):
        raise ParseError("'elements' must be a list of strings")
    pos = {lab: i for i, lab in enumerate(elements)}
    if len(pos) != len(elements):
        raise InputError("element labels are not unique")

    def idx(lab, where):
        if not isinstance(lab, str) or lab not in pos:
            raise ParseError(f"{where}: unknown element {lab!r}")
        return pos[lab]

    rows = obj["product"]
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise ParseError("'product' must be a list of rows")
    n = len(elements)
    if len(rows) != n or any(len(r) != n for r in rows):
        raise InputError(f"product table must be {n}x{n}")
    table = [
        [None if c is None else idx(c, f"product[{i}][{j}]") for j, c in enumerate(r)]
        for i, r in enumerate(rows)
    ]
    kw = {}
    for name in MAP_FIELDS:
        if name in obj:
            m = obj[name]
            if not isinstance(m, list):
                raise ParseError(f"{name!r} must be a list")
            if len(m) != n:
                raise InputError(f"map {name} has length {len(m)}, expected {n}")
            kw[name] = tuple(idx(v, f"{name}[{i}]") for i, v in enumerate(m))
    if "E" in obj:
        if not isinstance(obj["E"], list):
            raise ParseError("'E' must be a list")
        kw["E"] = frozenset(idx(v, "E") for v in obj["E"])
    if "order" in obj:
        pairs = obj["order"]
        if not isinstance(pairs, list) or not all(
            isinstance(p, list) and len(p) == 2 for p in pairs
        ):
            raise ParseError("'order' must be a list of pairs")
        kw["order"] = frozenset((idx(a, "order"), idx(b, "order")) for a, b in pairs)
    if obj["kind"] not in KINDS:
        raise ParseError(f"unknown kind {obj['kind']!r}")
    return Bundle(obj["kind"], tuple(elements), table, **kw)


def load_bundle(path) -> Bundle:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    try:
        return parse_bundle(text)
    except ParseError as exc:
        raise ParseError(f"{path}: {exc}") from None


def save_bundle(a: Bundle, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_bundle(a) + "\n")


# ---------------------------------------------------------------------------
# isomorphism


def _signature(a: Bundle):
    return tuple(getattr(a, f) is not None for f in (*MAP_FIELDS, "E", "order"))


def relabel(a: Bundle, perm: Sequence[int], labels=None) -> Bundle:
    """The copy of ``a`` whose element ``i`` is the old element ``perm[i]``."""
    n = a.n
    inv = [0] * n
    for i, p in enumerate(perm):
        inv[p] = i
    t = a.product
    table = [
        [None if (v := t[perm[i]][perm[j]]) is None else inv[v] for j in range(n)]
        for i in range(n)
    ]
    kw = {}
    for name in MAP_FIELDS:
        m = getattr(a, name)
        if m is not None:
            kw[name] = tuple(inv[m[perm[i]]] for i in range(n))
    if a.E is not None:
        kw["E"] = frozenset(inv[e] for e in a.E)
    if a.order is not None:
        kw["order"] = frozenset((inv[x], inv[y]) for x, y in a.order)
    if labels is None:
        labels = tuple(a.elements[p] for p in perm)
    return Bundle(a.kind, tuple(labels), table, **kw)


def find_isomorphism(a: Bundle, b: Bundle):
    """A bijection ``phi`` (tuple, index of ``a`` -> index of ``b``)
    preserving the table with its definedness pattern and every present map,
    subset and relation; ``None`` if there is none."""
    if a.kind != b.kind:
        raise InputError(f"kind mismatch: {a.kind} vs {b.kind}")
    n = a.n
    if n != b.n or _signature(a) != _signature(b):
        return None
    maps = [(getattr(a, f), getattr(b, f)) for f in MAP_FIELDS if getattr(a, f) is not None]
    ta, tb = a.product, b.product

    def inv_a(x):
        # cheap invariants used to restrict candidate images
        row = ta[x]
        return (
            sum(v is not None for v in row),
            sum(ta[y][x] is not None for y in range(n)),
            ta[x][x] is None,
            ta[x][x] == x,
            a.E is not None and x in a.E,
            tuple(m[x] == x for m, _ in maps),
        )

    def inv_b(x):
        row = tb[x]
        return (
            sum(v is not None for v in row),
            sum(tb[y][x] is not None for y in range(n)),
            tb[x][x] is None,
            tb[x][x] == x,
            b.E is not None and x in b.E,
            tuple(m[x] == x for _, m in maps),
        )

    ka = [inv_a(x) for x in range(n)]
    kb = [inv_b(x) for x in range(n)]
    if sorted(ka) != sorted(kb):
        return None
    phi = [-1] * n
    used = [False] * n

    def consistent(x):
        # all constraints among assigned elements that involve x
        for y in range(x + 1):
            for p, q in ((x, y), (y, x)):
                v = ta[p][q]
                w = tb[phi[p]][phi[q]]
                if v is None:
                    if w is not None:
                        return False
                elif w is None:
                    return False
                elif v <= x:
                    if phi[v] != w:
                        return False
                elif used[w]:
                    return False
        for ma, mb in maps:
            v = ma[x]
            if v <= x and phi[v] != mb[phi[x]]:
                return False
            for y in range(x):
                if ma[y] == x and mb[phi[y]] != phi[x]:
                    return False
        if a.order is not None:
            for y in range(x + 1):
                if ((x, y) in a.order) != ((phi[x], phi[y]) in b.order):
                    return False
                if ((y, x) in a.order) != ((phi[y], phi[x]) in b.order):
                    return False
        return True

    def rec(x):
        if x == n:
            return True
        for c in range(n):
            if used[c] or kb[c] != ka[x]:
                continue
            phi[x] = c
            used[c] = True
            if consistent(x) and rec(x + 1):
                return True
            used[c] = False
        phi[x] = -1
        return False

    if not rec(0):
        return None
    phi = tuple(phi)
    # final exhaustive confirmation
    return phi if is_isomorphism(a, b, phi) else None


def is_isomorphism(a: Bundle, b: Bundle, phi: Sequence[int]) -> bool:
    n = a.n
    if sorted(phi) != list(range(n)) or b.n != n:
        return False
    for x in range(n):
        for y in range(n):
            v = a.product[x][y]
            w = b.product[phi[x]][phi[y]]
            if (v is None) != (w is None) or (v is not None and phi[v] != w):
                return False
    for name in MAP_FIELDS:
        ma, mb = getattr(a, name), getattr(b, name)
        if (ma is None) != (mb is None):
            return False
        if ma is not None and any(phi[ma[x]] != mb[phi[x]] for x in range(n)):
            return False
    if (a.E is None) != (b.E is None):
        return False
    if a.E is not None and {phi[e] for e in a.E} != set(b.E):
        return False
    if (a.order is None) != (b.order is None):
        return False
    if a.order is not None and {(phi[x], phi[y]) for x, y in a.order} != set(b.order):
        return False
    return True


# ---------------------------------------------------------------------------
# canonical form
#
# With labels "0".."n-1" (one character each while n <= 10) and a fixed set of
# present fields, the serialized text of a relabeling compares bytewise exactly
# as the integer sequence below compares lexicographically: a defined cell
# '"d"' sorts before 'null' ('"' < 'n'), and every list has the same length
# for all relabelings of one structure.


@lru_cache(maxsize=None)
def _perm_arrays(n):
    perms = np.array(list(permutations(range(n))), dtype=np.int64).reshape(-1, n)
    inv = np.argsort(perms, axis=1)
    return perms, inv


def canonical_keys(a: Bundle):
    """Integer keys of all relabelings of ``a``; row ``k`` belongs to
    ``perms[k]``.  Returns ``(keys, perms)``."""
    n = a.n
    perms, inv = _perm_arrays(n)
    m = len(perms)
    undef = n
    t = np.array([[undef if v is None else v for v in row] for row in a.product], dtype=np.int64).reshape(n, n)
    inv_ext = np.concatenate([inv, np.full((m, 1), undef, dtype=np.int64)], axis=1)
    rows = np.arange(m)[:, None]
    cells = t[perms[:, :, None], perms[:, None, :]].reshape(m, n * n)
    parts = [inv_ext[rows, cells]]
    for name in MAP_FIELDS:
        mp = getattr(a, name)
        if mp is not None:
            mp = np.asarray(mp, dtype=np.int64).reshape(n)
            parts.append(inv[rows, mp[perms]])
    if a.E is not None:
        es = np.asarray(sorted(a.E), dtype=np.int64)
        parts.append(np.sort(inv[:, es], axis=1) if len(es) else np.zeros((m, 0), np.int64))
    if a.order is not None:
        pairs = np.asarray(sorted(p for p in a.order if p[0] != p[1]), dtype=np.int64).reshape(-1, 2)
        codes = inv[:, pairs[:, 0]] * n + inv[:, pairs[:, 1]]
        parts.append(np.sort(codes, axis=1))
    return np.concatenate(parts, axis=1), perms


def canonical_key(a: Bundle) -> bytes:
    """Key identifying the isomorphism class of ``a`` (among bundles of the
    same kind and field layout)."""
    if a.n == 0:
        return b""
    keys, _ = canonical_keys(a)
    best = keys[np.lexsort(keys.T[::-1])[0]]
    return best.astype(np.int16).tobytes()


def canonical_form_with_perm(a: Bundle):
    n = a.n
    if n > CANONICAL_MAX:
        raise ResourceError(f"canonical form supports at most {CANONICAL_MAX} elements, got {n}")
    if n == 0:
        return a.evolve(elements=()), ()
    keys, perms = canonical_keys(a)
    k = np.lexsort(keys.T[::-1])[0]
    perm = tuple(int(p) for p in perms[k])
    return relabel(a, perm, labels=tuple(str(i) for i in range(n))), perm


def canonical_form(a: Bundle) -> Bundle:
    """The least relabeling of ``a`` (labels ``"0".."n-1"``) in the byte
    order of the serialized text."""
    return canonical_form_with_perm(a)[0]


def canonical_form_bruteforce(a: Bundle) -> Bundle:
    """Literal minimisation of serialized text over all relabelings; slow,
    kept as an independent check of :func:`canonical_form`."""
    labels = tuple(str(i) for i in range(a.n))
    best = None
    for perm in permutations(range(a.n)):
        b = relabel(a, perm, labels=labels)
        s = serialize_bundle(b)
        if best is None or s.encode() < best[0]:
            best = (s.encode(), b)
    return best[1] if best else a


def iter_pairs(n) -> Iterator[tuple]:
    for x in range(n):
        for y in range(n):
            yield x, y
