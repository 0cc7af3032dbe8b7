"""Numerical semigroups and minimal presentations of monomial curves.

A numerical semigroup S = <n1, ..., nk> (gcd 1) is the value semigroup of
the monomial curve (t^n1, ..., t^nk); the minimal presentation size of S
equals the minimal number of generators of the defining ideal of the curve.
That number is computed combinatorially from factorization graphs, and
cross-checked on small instances by a graded linear-algebra oracle on the
binomial kernel.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .errors import GcdNotOne, NonMinimalGenerators
from .linalg import rank_dense
from .scalars import QQ


def _apery_set(gens):
    """Minimal semigroup element in each residue class mod the multiplicity.

    Shortest-path search on the residue graph: from residue r one can step
    to (r + n_i) mod n1 at cost n_i.
    """
    n1 = gens[0]
    dist = [None] * n1
    dist[0] = 0
    heap = [(0, 0)]
    while heap:
        d, r = heapq.heappop(heap)
        if dist[r] is not None and d > dist[r]:
            continue
        for n in gens:
            r2 = (r + n) % n1
            d2 = d + n
            if dist[r2] is None or d2 < dist[r2]:
                dist[r2] = d2
                heapq.heappush(heap, (d2, r2))
    return tuple(dist)


def _representable(target, gens):
    """Is target a non-negative integer combination of gens?"""
    reach = [False] * (target + 1)
    reach[0] = True
    for v in range(1, target + 1):
        for n in gens:
            if n <= v and reach[v - n]:
                reach[v] = True
                break
    return reach[target]


@dataclass(frozen=True)
class NumericalSemigroup:
    """A numerical semigroup given by its minimal generators.

    Derived data: multiplicity e = n1, embedding dimension k, h = k - 1,
    the Apery set with respect to n1, and the Frobenius number.
    """

    gens: tuple
    apery: tuple
    frobenius: int

    @property
    def multiplicity(self):
        return self.gens[0]

    @property
    def embdim(self):
        return len(self.gens)

    @property
    def h(self):
        return len(self.gens) - 1

    def __contains__(self, x):
        if x < 0:
            return False
        return self.apery[x % self.gens[0]] <= x

    def is_symmetric(self):
        """Symmetric about the Frobenius number; equivalently the semigroup
        ring is Gorenstein."""
        F = self.frobenius
        if F < 0:
            return True
        return all((x in self) != (F - x in self) for x in range(F + 1))

    def factorizations(self, m):
        """All exponent vectors u with sum(u_i * n_i) = m."""
        out = []
        k = len(self.gens)

        def rec(i, rest, prefix):
            if i == k - 1:
                q, r = divmod(rest, self.gens[i])
                if r == 0:
                    out.append(prefix + (q,))
                return
            n = self.gens[i]
            for c in range(rest // n + 1):
                rec(i + 1, rest - c * n, prefix + (c,))

        if m >= 0:
            rec(0, m, ())
        return out


def semigroup_invariants(gens) -> NumericalSemigroup:
    """Validate a generating list and package the basic invariants.

    Raises GcdNotOne if the generators are not coprime overall and
    NonMinimalGenerators if some generator lies in the semigroup generated
    by the others (or is repeated).
    """
    gens = tuple(sorted(int(n) for n in gens))
    if not gens or gens[0] < 1:
        raise ValueError("generators must be positive integers")
    if math.gcd(*gens) != 1:
        raise GcdNotOne(f"gcd of {gens} is {math.gcd(*gens)}")
    if len(set(gens)) != len(gens):
        raise NonMinimalGenerators("repeated generator")
    if len(gens) > 1:
        for i, n in enumerate(gens):
            others = gens[:i] + gens[i + 1:]
            if _representable(n, others):
                raise NonMinimalGenerators(
                    f"{n} is generated by the remaining elements"
                )
    apery = _apery_set(gens)
    assert all(d is not None for d in apery) and len(apery) == gens[0]
    frobenius = max(apery) - gens[0]
    return NumericalSemigroup(gens, apery, frobenius)


# ----------------------------------------------------- factorization graphs


@dataclass(frozen=True)
class FactorizationGraph:
    """Factorizations of one element, with edges between factorizations
    whose supports share a coordinate; the component count drives the
    minimal-presentation calculus."""

    element: int
    factorizations: tuple
    components: int


def factorization_graph(S: NumericalSemigroup, m) -> FactorizationGraph:
    facs = S.factorizations(m)
    n = len(facs)
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i, j in combinations(range(n), 2):
        if any(facs[i][t] and facs[j][t] for t in range(len(S.gens))):
            parent[find(i)] = find(j)
    comps = len({find(i) for i in range(n)}) if n else 0
    return FactorizationGraph(m, tuple(facs), comps)


def betti_search_bound(S: NumericalSemigroup) -> int:
    """Upper end of the element range scanned for disconnected
    factorization graphs: F(S) + 2 * max generator.  Conservative; its
    adequacy is cross-checked against the kernel oracle on small
    instances."""
    return S.frobenius + 2 * S.gens[-1]


def min_presentation_size(S: NumericalSemigroup) -> int:
    """Minimal number of relations presenting S; equals the minimal number
    of generators v(I) of the defining ideal of the monomial curve.

    Each element m whose factorization graph has c(m) components
    contributes c(m) - 1 relations.
    """
    if S.embdim == 1:
        return 0
    total = 0
    for m in range(2 * S.gens[0], betti_search_bound(S) + 1):
        if m not in S:
            continue
        g = factorization_graph(S, m)
        if g.components > 1:
            total += g.components - 1
    return total


def kernel_min_gens(S: NumericalSemigroup, bound=None) -> int:
    """Brute-force oracle: minimal generators of the binomial kernel ideal,
    counted degreewise in the grading by semigroup value.

    In S-degree m the kernel is spanned by differences of factorizations of
    m; the part already generated in lower degrees is spanned by the images
    of the degree m - n_i differences under multiplication by the i-th
    variable.  The new-generator count in degree m is the difference of the
    two ranks.  Quadratic in the factorization counts; intended for small
    multiplicities only.
    """
    if S.embdim == 1:
        return 0
    if bound is None:
        bound = betti_search_bound(S)
    k = len(S.gens)
    total = 0
    for m in range(2 * S.gens[0], bound + 1):
        if m not in S:
            continue
        facs = S.factorizations(m)
        t = len(facs)
        if t <= 1:
            continue
        index = {f: i for i, f in enumerate(facs)}
        rows = []
        for i in range(k):
            below = S.factorizations(m - S.gens[i])
            if len(below) < 2:
                continue
            base = tuple(
                c + (1 if j == i else 0) for j, c in enumerate(below[0])
            )
            for u in below[1:]:
                shifted = tuple(
                    c + (1 if j == i else 0) for j, c in enumerate(u)
                )
                row = [QQ.rzero] * t
                row[index[shifted]] = QQ.rone
                row[index[base]] = QQ.rfrom(-1)
                rows.append(row)
        total += (t - 1) - rank_dense(rows, QQ)
    return total


# ----------------------------------------------------------- bound windows


def check_rgs(S: NumericalSemigroup) -> dict:
    """Evaluate the generator-count bound windows for the monomial curve.

    With e the multiplicity and h = embdim - 1, the windows are:
    (R1) h+2 <= e <= h+3:  C(h+2,2) - e <= v <= C(h+1,2);
    (R2) Gorenstein and h+2 <= e <= h+4:  v = C(h+1,2) - 1;
    (R3) e = h+4:  C(h+2,2) - e <= v <= C(h+1,2) + 1.
    When e = h+1 (minimal multiplicity) the classical equality
    v = C(h+1,2) is reported instead.
    """
    e = S.multiplicity
    h = S.h
    v = min_presentation_size(S)
    symmetric = S.is_symmetric()
    report = {
        "gens": list(S.gens),
        "e": e,
        "h": h,
        "frobenius": S.frobenius,
        "symmetric": symmetric,
        "v": v,
        "windows": {},
        "violations": [],
    }
    if h >= 1 and e == h + 1:
        ok = v == math.comb(h + 1, 2)
        report["windows"]["minimal_multiplicity"] = {
            "applies": True,
            "expected_v": math.comb(h + 1, 2),
            "holds": ok,
        }
        if not ok:
            report["violations"].append("minimal_multiplicity")
    if h + 2 <= e <= h + 3:
        lo = math.comb(h + 2, 2) - e
        hi = math.comb(h + 1, 2)
        ok = lo <= v <= hi
        report["windows"]["R1"] = {
            "applies": True, "lower": lo, "upper": hi, "holds": ok,
        }
        if not ok:
            report["violations"].append("R1")
    # The Gorenstein equality concerns codimension >= 2; a plane curve is a
    # hypersurface with v = 1 regardless of e, so h = 1 is excluded.
    if symmetric and h >= 2 and h + 2 <= e <= h + 4:
        want = math.comb(h + 1, 2) - 1
        ok = v == want
        report["windows"]["R2"] = {
            "applies": True, "expected_v": want, "holds": ok,
        }
        if not ok:
            report["violations"].append("R2")
    if e == h + 4:
        lo = math.comb(h + 2, 2) - e
        hi = math.comb(h + 1, 2) + 1
        ok = lo <= v <= hi
        report["windows"]["R3"] = {
            "applies": True, "lower": lo, "upper": hi, "holds": ok,
        }
        if not ok:
            report["violations"].append("R3")
    return report


def semigroup_report(gens) -> dict:
    """JSON-friendly summary for one semigroup."""
    S = semigroup_invariants(gens)
    rgs = check_rgs(S)
    return {
        "schema": 1,
        "gens": list(S.gens),
        "e": S.multiplicity,
        "k": S.embdim,
        "h": S.h,
        "frobenius": S.frobenius,
        "symmetric": S.is_symmetric(),
        "v": rgs["v"],
        "rgs_report": {"windows": rgs["windows"],
                       "violations": rgs["violations"]},
    }


def enumerate_semigroups(max_mult, max_embdim, max_gen):
    """All minimally generated semigroups with multiplicity <= max_mult,
    embedding dimension <= max_embdim, and every generator <= max_gen.

    The generator cap makes the family finite; it is a parameter so callers
    can choose how deep to scan.
    """
    out = []

    def rec(gens, last):
        if len(gens) >= 1 and math.gcd(*gens) == 1:
            try:
                out.append(semigroup_invariants(gens))
            except NonMinimalGenerators:
                pass
        if len(gens) == max_embdim:
            return
        for n in range(last + 1, max_gen + 1):
            if gens and _representable(n, gens):
                continue
            rec(gens + [n], n)

    for n1 in range(2, max_mult + 1):
        rec([n1], n1)
    return out
