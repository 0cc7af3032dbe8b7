"""Binomial calculus for Hilbert functions and generator-count bounds.

Implements the i-binomial ("Macaulay") expansion, the shift operator
n -> n^<i>, admissibility of candidate Hilbert functions, lex-segment ideals
realizing an admissible Hilbert function, and the two generator-count bounds
for an Artinian quotient of multiplicity e and embedding dimension h:

    lower:  C(h+2, 2) - e  <=  v(I)
    upper:  v(I) <= C(h+t-1, t) - r + r^<t>

where t is the unique integer with C(h+t-1, t-1) <= e < C(h+t, t) and
r = e - C(h+t-1, t-1).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .polynomials import Polynomial, monomials_of_degree
from .quotient import IdealPresentation
from .scalars import QQ


def binomial_expansion(n: int, i: int):
    """The i-binomial expansion of n >= 1: pairs (n_j, j) with
    n = sum C(n_j, j), n_i > n_{i-1} > ... >= j for each term."""
    if n < 1 or i < 1:
        raise ValueError("need n >= 1 and i >= 1")
    out = []
    j = i
    rest = n
    while rest > 0 and j >= 1:
        nj = j
        while comb(nj + 1, j) <= rest:
            nj += 1
        out.append((nj, j))
        rest -= comb(nj, j)
        j -= 1
    if rest:
        raise ArithmeticError("binomial expansion failed")
    return out


def macaulay_shift(n: int, i: int) -> int:
    """n^<i>: replace each C(n_j, j) in the i-binomial expansion by
    C(n_j + 1, j + 1).  By convention 0^<i> = 0."""
    if n == 0:
        return 0
    return sum(comb(nj + 1, j + 1) for nj, j in binomial_expansion(n, i))


def t_and_r(e: int, h: int):
    """The unique t >= 2 with C(h+t-1, t-1) <= e < C(h+t, t), and the
    remainder r = e - C(h+t-1, t-1).  Requires e >= h+1 (so I in n^2)."""
    if h < 1 or e < h + 1:
        raise ValueError("need h >= 1 and e >= h + 1")
    t = 2
    while not (comb(h + t - 1, t - 1) <= e < comb(h + t, t)):
        t += 1
        if t > e + 2:
            raise ArithmeticError("no admissible t found")
    return t, e - comb(h + t - 1, t - 1)


def erv_upper(e: int, h: int) -> int:
    """Upper bound for the number of minimal generators of any ideal with
    multiplicity e and embedding dimension h."""
    t, r = t_and_r(e, h)
    return comb(h + t - 1, t) - r + macaulay_shift(r, t) if r else comb(h + t - 1, t)


def lower_bound(e: int, h: int) -> int:
    """Lower bound C(h+2, 2) - e for the number of minimal generators."""
    return comb(h + 2, 2) - e


def hf_admissible(hf) -> bool:
    """Macaulay's growth criterion for the Hilbert function of a standard
    graded (equivalently, the associated graded of a local) algebra."""
    hf = list(hf)
    if not hf or hf[0] != 1:
        return False
    if any(v < 0 for v in hf):
        return False
    for j in range(1, len(hf) - 1):
        if hf[j] == 0:
            if any(hf[j:]):
                return False
            break
        if hf[j + 1] > macaulay_shift(hf[j], j):
            return False
    return True


def _lex_key(m):
    """Sort key for the lexicographic order with x1 > x2 > ... ."""
    return m


def lex_segment(hf, nvars=None):
    """The lex-segment ideal with the given Hilbert function.

    Returns an IdealPresentation over QQ whose generators are the minimal
    monomial generators.  Raises ValueError for inadmissible input.
    """
    hf = list(hf)
    if not hf_admissible(hf):
        raise ValueError(f"inadmissible Hilbert function {hf}")
    h = hf[1] if len(hf) > 1 else 0
    if nvars is None:
        nvars = h
    if nvars < h or (len(hf) > 1 and h == 0):
        raise ValueError("embedding dimension exceeds variable count")
    if nvars == 0:
        raise ValueError("need at least one variable")
    s = len(hf) - 1
    segments = {0: set()}
    for j in range(1, s + 2):
        monos = sorted(monomials_of_degree(nvars, j), key=_lex_key, reverse=True)
        want = len(monos) - (hf[j] if j <= s else 0)
        seg = set(monos[:want])
        # closure under multiplication by variables
        for m in segments[j - 1]:
            for i in range(nvars):
                mm = tuple(e + (1 if k == i else 0) for k, e in enumerate(m))
                if mm not in seg:
                    raise ValueError("Hilbert function not realizable lex-segment")
        segments[j] = seg
    gens = []
    for j in range(1, s + 2):
        grown = set()
        for m in segments[j - 1]:
            for i in range(nvars):
                grown.add(tuple(e + (1 if k == i else 0) for k, e in enumerate(m)))
        born = sorted(segments[j] - grown, key=_lex_key, reverse=True)
        for m in born:
            gens.append(Polynomial(nvars, QQ, {m: QQ.rone}))
    return IdealPresentation(gens, nvars, QQ)


@dataclass
class BoundReport:
    e: int
    h: int
    t: int
    r: int
    lower: int
    upper: int

    def as_dict(self):
        return {
            "schema": 1,
            "e": self.e,
            "h": self.h,
            "t": self.t,
            "r": self.r,
            "lower": self.lower,
            "upper": self.upper,
        }

    def markdown_row(self) -> str:
        return (
            f"| {self.e} | {self.h} | {self.t} | {self.r} "
            f"| {self.lower} | {self.upper} |"
        )


def bound_report(e: int, h: int) -> BoundReport:
    t, r = t_and_r(e, h)
    return BoundReport(e, h, t, r, lower_bound(e, h), erv_upper(e, h))
