"""A quick tour of the exact invariants of an Artinian quotient.

Builds a couple of small quotient algebras, prints their Hilbert
functions, socles, and minimal generator counts, and shows how the ideal
of leading forms can need more generators than the ideal itself.
"""

from artinlocal import (
    IdealPresentation,
    algebra_report,
    build_quotient,
    leading_forms,
    min_gens,
    parse_poly,
)
from artinlocal.scalars import QQ


def pres(*texts, nvars=2):
    return IdealPresentation([parse_poly(t, nvars, QQ) for t in texts])


def main():
    print("A node with a tangency: I = (x1*x2, x2^2 - x1^3)")
    p = pres("x1*x2", "x2^2 - x1^3")
    A = build_quotient(p)
    print(f"  Hilbert function: {A.hf}")
    print(f"  length {A.length}, socle degree {A.socle_degree}, "
          f"Cohen-Macaulay type {A.cm_type}")
    print(f"  minimal generators of I: {min_gens(p)}")
    data = leading_forms(p)
    print(f"  minimal generators of the leading-form ideal: {data.v_star}")
    print("  The leading forms x1*x2, x2^2 do not cut out the right")
    print("  Hilbert function on their own; a hidden degree-4 generator")
    print(f"  appears: new generators by degree = "
          f"{ {d: c for d, c in data.new_gens.items() if c} }")

    print()
    print("A monomial complete intersection: I = (x1^2, x2^3)")
    A = build_quotient(pres("x1^2", "x2^3"))
    print(f"  report: {algebra_report(A)}")


if __name__ == "__main__":
    main()
