"""Numerical semigroups and the generator counts of monomial curves.

The defining ideal of the monomial curve (t^n1, ..., t^nk) has as many
minimal generators as the minimal presentation of the value semigroup.
Two famous curves show that the general bounds are sharp: one breaks the
Gorenstein equality at e = h + 5, the other breaks the non-Gorenstein
upper bound at e = h + 4.
"""

import json

from artinlocal import (
    check_rgs,
    kernel_min_gens,
    min_presentation_size,
    semigroup_invariants,
    semigroup_report,
)


def main():
    print("A symmetric curve that escapes the Gorenstein equality:")
    S = semigroup_invariants([8, 10, 12, 15])
    print(f"  <8,10,12,15>: symmetric = {S.is_symmetric()}, "
          f"v = {min_presentation_size(S)} (the equality would demand 5)")

    print("\nA curve breaking the upper bound at e = h + 4:")
    S = semigroup_invariants([7, 8, 10, 19])
    v = min_presentation_size(S)
    print(f"  <7,8,10,19>: e = {S.multiplicity}, h = {S.h}, v = {v}")
    print(f"  C(h+1,2) = 6 < v = {v} <= C(h+1,2) + 1 = 7")
    print(f"  window report: {json.dumps(check_rgs(S)['windows'])}")

    print("\nThe combinatorial count agrees with exact linear algebra on")
    print("the binomial kernel:")
    for gens in ([3, 4, 5], [3, 5, 7], [4, 6, 9], [5, 7, 9]):
        S = semigroup_invariants(gens)
        print(f"  <{','.join(map(str, gens))}>: graph count = "
              f"{min_presentation_size(S)}, kernel count = "
              f"{kernel_min_gens(S)}")

    print("\nFull JSON report for one curve:")
    print(json.dumps(semigroup_report([7, 8, 10, 19]), indent=2))


if __name__ == "__main__":
    main()
