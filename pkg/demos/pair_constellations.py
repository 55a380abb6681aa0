"""Pair constellations I_E(T) built from small semigroups: the search for
triples where T-normality and the D-inverse property part ways."""
import argparse
from itertools import combinations

from constel.core import idempotents
from constel.enumeration import iter_structures
from constel.semigroups import E_regular_elements, I_E_T_report, is_T_normal


def subsets(xs, lo=1):
    xs = sorted(xs)
    for k in range(lo, len(xs) + 1):
        yield from (frozenset(c) for c in combinations(xs, k))


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--order", type=int, default=4)
    args = p.parse_args()
    tally = {}
    for S in iter_structures("semigroup", args.order):
        for E in subsets(idempotents(S)):
            for T in subsets(E_regular_elements(S, E)):
                if not E <= T:
                    continue
                normal = is_T_normal(S, T, E, cap=1).passed
                rep = I_E_T_report(S, T, E, cap=1)
                why = "closed" if rep.passed else rep.violations[0].axiom
                key = (normal, rep.passed, why)
                if key not in tally:
                    print(f"first {key}: S={[list(r) for r in S.product]} E={sorted(E)} T={sorted(T)}")
                tally[key] = tally.get(key, 0) + 1
    for (normal, dinv, why), k in sorted(tally.items()):
        print(f"T-normal={normal!s:5} D-inverse={dinv!s:5} ({why}): {k}")


if __name__ == "__main__":
    main()
