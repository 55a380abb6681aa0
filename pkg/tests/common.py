"""Small named structures used across the test modules."""
import json
import os

from constel import make_bundle

FIXTURES = os.path.join(os.path.dirname(os.path.abspath(__file__)), "fixtures")


def fixture(name):
    with open(os.path.join(FIXTURES, name), encoding="utf-8") as fh:
        return json.load(fh)


def frozen_count(kind, order):
    for row in fixture("counts.json"):
        if row["kind"] == kind and row["order"] == order:
            return row["count"]
    raise KeyError((kind, order))


def twochain(kind="constellation", **maps):
    """Poset e <= f as a constellation: x.y = x exactly when x <= y."""
    return make_bundle(kind, ["e", "f"], [["e", "e"], [None, "f"]], **maps)


def z2(kind="constellation", **maps):
    return make_bundle(kind, ["1", "a"], [["1", "a"], ["a", "1"]], **maps)


def left_zero(kind="constellation", **maps):
    return make_bundle(kind, ["a", "b"], [["a", "a"], ["b", "b"]], **maps)


def semilattice(kind="semigroup", **maps):
    """{1, 0} under min."""
    return make_bundle(kind, ["1", "0"], [["1", "0"], ["0", "0"]], **maps)


def one(kind="constellation", **maps):
    return make_bundle(kind, ["x"], [["x"]], **maps)


def monogenic_nonregular():
    """{1, a, a2} with a^3 = a^2."""
    return make_bundle("semigroup", ["1", "a", "a2"],
                       [["1", "a", "a2"], ["a", "a2", "a2"], ["a2", "a2", "a2"]])
