"""Normalizing a scrambled algebra back onto its canonical model.

Takes the canonical ideal of a stretched algebra, hides it behind a
random invertible change of coordinates, and then recovers the shape
parameters (h, s, tau) together with a certified witness map.
"""

from fractions import Fraction

from artinlocal import (
    IdealPresentation,
    StretchedParams,
    build_quotient,
    make_stretched,
    normalize,
    random_invertible_map,
    row_space_equal,
)
from artinlocal.scalars import QQ, Scalar


def main():
    params = StretchedParams(3, 4, 2, (Scalar(QQ, QQ.rfrom(Fraction(4))),))
    pres = make_stretched(params)
    print("canonical stretched ideal (h=3, s=4, tau=2):")
    for g in pres.gens:
        print(f"  {g!r}")

    phi = random_invertible_map(3, QQ, 8, 5)
    moved = IdealPresentation([phi.apply(g) for g in pres.gens])
    print("\nafter a random invertible change of coordinates:")
    for g in moved.gens:
        print(f"  {g!r}")

    kind, got, witness = normalize(moved, seed=0)
    print(f"\nnormalizer verdict: {kind}, h={got.h}, s={got.s}, tau={got.tau}")
    model = make_stretched(got)
    back = IdealPresentation([witness.apply(g) for g in model.gens])
    D = build_quotient(moved).D
    print(f"witness certified by row-space equality at degree {D}: "
          f"{row_space_equal(back, moved, D)}")


if __name__ == "__main__":
    main()
