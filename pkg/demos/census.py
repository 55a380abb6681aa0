"""Counts of small structures up to isomorphism, and the bijection between
D-inverse constellations and ordered groupoids."""
import argparse

from constel.enumeration import CAPS, count_structures, dual_count_check

KINDS = ("semigroup", "constellation", "d-inverse-constellation",
         "ordered-groupoid", "constellation-with-range", "category")


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-order", type=int, default=3)
    args = p.parse_args()
    orders = range(1, args.max_order + 1)
    print(f"{'kind':28}" + "".join(f"{n:>7}" for n in orders))
    for kind in KINDS:
        counts = [count_structures(kind, n) if n <= CAPS[kind] else None for n in orders]
        print(f"{kind:28}" + "".join(f"{'-' if c is None else c:>7}" for c in counts))
    for n in orders:
        if n > CAPS["ordered-groupoid"]:
            break
        rep = dual_count_check(n)
        print(f"order {n}: bijection {'holds' if rep.passed else 'FAILS'} {rep.data}")


if __name__ == "__main__":
    main()
