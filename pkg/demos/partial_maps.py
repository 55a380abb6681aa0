"""Partial maps on two points: C_X, I_X, and what the checkers say."""
from constel import build_CX, build_IX, is_D_inverse, is_right_cancellative
from constel.constellations import with_range
from constel.correspondence import C_of


def main():
    cx = build_CX(2)
    print(f"C_X on 2 points: {cx.n} partial maps")
    rep = is_right_cancellative(cx)
    print("right cancellative?", rep.passed, "- first witness:", rep.violations[0].witness)

    ix = build_IX(2)
    print(f"\nI_X on 2 points: {ix.n} partial injections")
    rep = is_D_inverse(ix)
    for s, t in enumerate(rep.data):
        print(f"  {ix.label(s):8} D = {ix.label(ix.D[s]):8} inverse = {ix.label(t)}")

    # the associated ordered category keeps only the composable pairs
    c = C_of(with_range(ix))
    kept = sum(v is not None for row in c.product for v in row)
    total = sum(v is not None for row in ix.product for v in row)
    print(f"\nproducts defined: {total} in I_X, {kept} in its ordered category")


if __name__ == "__main__":
    main()
