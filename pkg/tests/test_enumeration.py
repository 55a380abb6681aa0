import itertools
import json
import os
import subprocess
import sys

import pytest

from common import fixture, frozen_count
from constel import (
    InputError,
    ResourceError,
    canonical_form,
    find_isomorphism,
    is_D_inverse,
    serialize_bundle,
)
from constel.cli import CHECKERS
from constel.enumeration import (
    CAPS,
    EnumerationTask,
    count_structures,
    dual_count_check,
    enumerate_structures,
    iter_structures,
)
from constel.representations import is_inverse_semigroup

HERE = os.path.dirname(os.path.abspath(__file__))
ROWS = [(r["kind"], r["order"]) for r in fixture("counts.json")]


@pytest.mark.parametrize("kind,n", ROWS)
def test_counts_match_fixtures(kind, n):
    assert count_structures(kind, n) == frozen_count(kind, n)


def test_counts_match_live_oracle():
    out = subprocess.run([sys.executable, os.path.join(HERE, "oracle.py"), "3"],
                         capture_output=True, text=True, check=True).stdout
    for kind, count in json.loads(out).items():
        assert count_structures(kind, 3) == count


def test_spec_examples():
    assert count_structures("constellation", 1) == 1
    assert count_structures("semigroup", 2) == frozen_count("semigroup", 2) == 5
    assert count_structures("d-inverse-constellation", 2) == count_structures("ordered-groupoid", 2)


def _kind_check(kind, b):
    if kind == "d-inverse-constellation":
        return CHECKERS["constellation"](b, 1).passed and is_D_inverse(b, 1).passed
    if kind == "inverse-semigroup":
        return CHECKERS["semigroup"](b, 1).passed and is_inverse_semigroup(b, 1).passed
    return CHECKERS[kind](b, 1).passed


@pytest.mark.parametrize("kind", sorted(CAPS))
def test_emitted_bundles_pass_their_kind_check(kind):
    for n in range(1, 5):
        for b in iter_structures(kind, n):
            assert _kind_check(kind, b), serialize_bundle(b)


@pytest.mark.parametrize("kind", sorted(CAPS))
def test_no_two_emitted_bundles_isomorphic(kind):
    for n in range(1, 4):
        bs = iter_structures(kind, n)
        for a, b in itertools.combinations(bs, 2):
            assert find_isomorphism(a, b) is None


def test_emitted_are_canonical_and_sorted():
    for kind in ("constellation", "ordered-groupoid", "semigroup"):
        bs = iter_structures(kind, 3)
        assert all(serialize_bundle(canonical_form(b)) == serialize_bundle(b) for b in bs)
        assert [serialize_bundle(b) for b in bs] == sorted(serialize_bundle(b) for b in bs)


@pytest.mark.parametrize("kind", ["constellation", "category", "ordered-groupoid",
                                  "semigroup", "pre-constellation"])
def test_seed_permuted_search_gives_identical_sets(kind):
    n = 3
    base = enumerate_structures(EnumerationTask(kind, n)).bundles
    for seed in (1, 7):
        other = enumerate_structures(EnumerationTask(kind, n, seed=seed)).bundles
        assert [serialize_bundle(b) for b in other] == [serialize_bundle(b) for b in base]


def test_requirements_filter_and_limit():
    all3 = count_structures("constellation", 3)
    dinv = count_structures("constellation", 3, "d-inverse")
    assert dinv == count_structures("d-inverse-constellation", 3)
    assert dinv + count_structures("constellation", 3, "not-d-inverse") == all3
    res = enumerate_structures(EnumerationTask("constellation", 3, limit=5))
    assert res.truncated and len(res.bundles) == 5 and res.count == all3
    res = enumerate_structures(EnumerationTask("constellation", 3, count_only=True))
    assert res.bundles == () and res.count == all3


def test_order_zero():
    assert count_structures("constellation", 0) == 1


@pytest.mark.parametrize("n", range(1, 5))
def test_dual_count_check(n):
    rep = dual_count_check(n)
    assert rep.passed, rep.to_text()
    assert rep.data["d-inverse-constellations"] == rep.data["ordered-groupoids"]


def test_errors():
    with pytest.raises(ResourceError):
        count_structures("semigroup", 5)
    with pytest.raises(InputError):
        count_structures("magma", 2)
    with pytest.raises(InputError):
        count_structures("constellation", 2, "shiny")
    with pytest.raises(InputError):
        count_structures("constellation", -1)
