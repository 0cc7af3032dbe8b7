"""Artinian quotients A = k[[x1..xh]]/I by exact truncated linear algebra.

The ideal is given by power-series generators (polynomials, regarded as
truncations).  For a truncation degree D we echelonize the span of
{m * g : g generator, m monomial, deg(m) + ord(g) < D}; that span equals
(I + n^D)/n^D where n is the maximal ideal of the power-series ring.  The
non-pivot ("standard") monomials of degree < D form a vector-space basis of
R/(I + n^D), and once the Hilbert function vanishes strictly below D it is
the Hilbert function of A itself.

All downstream invariants (socle, Cohen-Macaulay type, minimal generator
counts, leading-form ideals, Hensel root lifting) are driven by this basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    FieldExtensionRequired,
    NotArtinian,
    ResidueNotPower,
)
from .linalg import (
    MonomialTable,
    SparseEchelon,
    nullspace_dense,
    poly_from_row,
    row_from_poly,
    same_row_space,
    shifted_row,
)
from .polynomials import (
    Polynomial,
    RingMap,
    mono_key,
    monomials_of_degree,
    parse_poly,
)
from .scalars import Field, QQ, Scalar, adjoin_sqrt, common_field

D_START_FLOOR = 4
D_MAX = 32


class IdealPresentation:
    """A finite list of generators of an ideal inside the maximal ideal."""

    __slots__ = ("nvars", "field", "gens")

    def __init__(self, gens, nvars=None, field=None):
        gens = list(gens)
        if not gens:
            raise ValueError("need at least one generator")
        if nvars is None:
            nvars = gens[0].nvars
        if field is None:
            field = gens[0].field
            for g in gens[1:]:
                field = common_field(field, g.field)
        gens = [g.map_field(field) for g in gens]
        for g in gens:
            if g.nvars != nvars:
                raise ValueError("generators live in different rings")
            if g.is_zero():
                raise ValueError("zero generator")
            if not g.constant_coeff().is_zero():
                raise ValueError("generators must lie in the maximal ideal")
        self.nvars = nvars
        self.field = field
        self.gens = tuple(gens)

    @classmethod
    def from_strings(cls, texts, nvars, field=QQ):
        return cls([parse_poly(t, nvars, field) for t in texts], nvars, field)

    @property
    def in_square(self) -> bool:
        """True when every generator lies in n^2."""
        return all(g.order() >= 2 for g in self.gens)

    @property
    def max_degree(self) -> int:
        return max(g.degree() for g in self.gens)

    def map_field(self, field: Field) -> "IdealPresentation":
        return IdealPresentation(
            [g.map_field(field) for g in self.gens], self.nvars, field
        )

    def __repr__(self):
        return f"IdealPresentation({', '.join(repr(g) for g in self.gens)})"


def macaulay_echelon(pres: IdealPresentation, D: int, min_mult_degree: int = 0):
    """Echelonized span of {m*g : deg(m)+ord(g) < D, deg(m) >= min_mult_degree}."""
    table = MonomialTable(pres.nvars, D)
    ech = SparseEchelon(pres.field)
    for g in pres.gens:
        terms = list(g.truncate(D).terms.items())
        if not terms:
            continue
        o = min(sum(m) for m, _ in terms)
        for d in range(min_mult_degree, D - o):
            for mult in monomials_of_degree(pres.nvars, d):
                row = shifted_row(terms, mult, table)
                if row:
                    ech.add(row)
    return table, ech


class ArtinAlgebra:
    """A finite-dimensional local quotient with a fixed monomial basis."""

    def __init__(self, pres: IdealPresentation, D: int, table, ech, hf):
        self.pres = pres
        self.nvars = pres.nvars
        self.field = pres.field
        self.D = D
        self.table = table
        self.ech = ech
        self.hf = tuple(hf)
        self.socle_degree = len(hf) - 1
        self.std = [
            i for i in range(len(table.monos)) if i not in ech.pivots
            and table.deg(i) <= self.socle_degree
        ]
        self.std_pos = {r: i for i, r in enumerate(self.std)}
        self.length = len(self.std)
        self._mult = {}
        self._socle = None
        self._power_ech = {}

    # ----- basic data

    @property
    def embdim(self) -> int:
        return self.hf[1] if len(self.hf) > 1 else 0

    @property
    def multiplicity(self) -> int:
        return self.length

    def standard_monomials(self):
        return [self.table.monos[r] for r in self.std]

    # ----- normal forms and coordinates

    def nf(self, p: Polynomial) -> Polynomial:
        """Canonical representative: support on standard monomials only."""
        p = p.map_field(self.field)
        row = self.ech.reduce(row_from_poly(p, self.table))
        row = {r: c for r, c in row.items() if r in self.std_pos}
        return poly_from_row(row, self.table, self.field, self.nvars)

    def coords(self, p: Polynomial):
        """Raw coordinate list of nf(p) over the standard-monomial basis."""
        row = self.ech.reduce(row_from_poly(p.map_field(self.field), self.table))
        f = self.field
        out = [f.rzero] * self.length
        for r, c in row.items():
            pos = self.std_pos.get(r)
            if pos is not None:
                out[pos] = c
        return out

    def from_coords(self, coords) -> Polynomial:
        terms = {}
        for pos, c in enumerate(coords):
            if not self.field.riszero(c):
                terms[self.table.monos[self.std[pos]]] = c
        return Polynomial(self.nvars, self.field, terms)

    def element(self, p) -> "AlgebraElement":
        if isinstance(p, str):
            p = parse_poly(p, self.nvars, self.field)
        if isinstance(p, (int, Fraction, Scalar)):
            p = Polynomial.constant(p, self.nvars, self.field)
        return AlgebraElement(self, self.nf(p))

    def variable(self, i) -> "AlgebraElement":
        return self.element(Polynomial.variable(i, self.nvars, self.field))

    # ----- multiplication matrices (columns over the standard basis)

    def mult_matrix(self, i):
        """Column-major matrix of multiplication by x_{i+1}."""
        if i not in self._mult:
            cols = []
            xi = Polynomial.variable(i, self.nvars, self.field)
            for r in self.std:
                m = self.table.monos[r]
                cols.append(self.coords(xi * Polynomial(self.nvars, self.field, {m: self.field.rone})))
            self._mult[i] = cols
        return self._mult[i]

    # ----- socle and type

    def socle(self):
        """(dimension, basis elements) of the annihilator of the maximal ideal."""
        if self._socle is None:
            e = self.length
            rows = []
            for i in range(self.nvars):
                cols = self.mult_matrix(i)
                for r in range(e):
                    rows.append([cols[c][r] for c in range(e)])
            basis = nullspace_dense(rows, self.field)
            elems = [AlgebraElement(self, self.from_coords(v)) for v in basis]
            elems.sort(key=lambda el: min(
                (mono_key(m) for m in el.poly.terms), default=(0, ())
            ))
            self._socle = (len(basis), elems)
        return self._socle

    @property
    def cm_type(self) -> int:
        return self.socle()[0]

    @property
    def gorenstein(self) -> bool:
        return self.cm_type == 1

    def is_stretched(self) -> bool:
        return len(self.hf) > 2 and self.hf[2] == 1

    def is_almost_stretched(self) -> bool:
        return len(self.hf) > 2 and self.hf[2] == 2

    # ----- powers of the maximal ideal

    def power_echelon(self, j) -> SparseEchelon:
        """Echelon of the coordinate span of m^j (as a subspace of A)."""
        j = max(j, 0)
        key = min(j, self.socle_degree + 1)
        if key not in self._power_ech:
            ech = SparseEchelon(self.field)
            for d in range(key, self.socle_degree + 1):
                for m in monomials_of_degree(self.nvars, d):
                    coords = self.coords(
                        Polynomial(self.nvars, self.field, {m: self.field.rone})
                    )
                    row = {i: c for i, c in enumerate(coords)
                           if not self.field.riszero(c)}
                    if row:
                        ech.add(row)
            self._power_ech[key] = ech
        return self._power_ech[key]

    def in_power(self, el, j) -> bool:
        """Is the element in m^j?"""
        coords = el.coords() if isinstance(el, AlgebraElement) else self.coords(el)
        row = {i: c for i, c in enumerate(coords) if not self.field.riszero(c)}
        return self.power_echelon(j).contains(row)

    def power_min_gens(self, j) -> int:
        """Number of minimal generators of m^j; equals H_A(j)."""
        if j == 0:
            return 1
        return self.hf[j] if j < len(self.hf) else 0


class AlgebraElement:
    """An element of an ArtinAlgebra, stored as its canonical normal form."""

    __slots__ = ("algebra", "poly")

    def __init__(self, algebra: ArtinAlgebra, poly: Polynomial):
        self.algebra = algebra
        self.poly = poly

    def _mk(self, p):
        return AlgebraElement(self.algebra, p)

    def _other(self, other):
        if isinstance(other, AlgebraElement):
            if other.algebra is not self.algebra:
                raise ValueError("elements of different algebras")
            return other
        return self.algebra.element(other)

    def __add__(self, other):
        return self._mk(self.poly + self._other(other).poly)

    __radd__ = __add__

    def __sub__(self, other):
        return self._mk(self.poly - self._other(other).poly)

    def __rsub__(self, other):
        return self._mk(self._other(other).poly - self.poly)

    def __neg__(self):
        return self._mk(-self.poly)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            return self._mk(self.algebra.nf(self.poly * other))
        return self._mk(
            self.algebra.nf(self.poly * self._other(other).poly)
        )

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = self.algebra.element(1)
        base = self
        for _ in range(n):
            out = out * base
        return out

    def residue(self) -> Scalar:
        return self.poly.constant_coeff()

    def is_unit(self) -> bool:
        return not self.residue().is_zero()

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    def coords(self):
        return self.algebra.coords(self.poly)

    def inverse(self) -> "AlgebraElement":
        """Unit inverse via the finite geometric series."""
        r = self.residue()
        if r.is_zero():
            raise ZeroDivisionError("element is not a unit")
        rinv = r.inverse()
        w = self._mk(self.algebra.nf(self.poly.scale(rinv))) - 1
        out = self.algebra.element(1)
        power = self.algebra.element(1)
        for _ in range(self.algebra.socle_degree):
            power = power * (-w)
            if power.is_zero():
                break
            out = out + power
        return out * rinv

    def __eq__(self, other):
        try:
            other = self._other(other)
        except Exception:
            return NotImplemented
        return self.poly == other.poly

    def __hash__(self):
        return hash(self.poly)

    def __repr__(self):
        return f"[{self.poly!r}]"


# ------------------------------------------------------------- construction


def build_quotient(pres: IdealPresentation, D=None, D_max=D_MAX) -> ArtinAlgebra:
    """Build the Artinian quotient, doubling the truncation degree until the
    Hilbert function vanishes strictly below it (NotArtinian past D_max)."""
    D0 = D if D is not None else max(D_START_FLOOR, pres.max_degree + 2)
    D0 = min(D0, D_max)
    Dcur = D0
    while True:
        table, ech = macaulay_echelon(pres, Dcur)
        hf = [0] * Dcur
        for i in range(len(table.monos)):
            if i not in ech.pivots:
                hf[table.deg(i)] += 1
        zero_at = next((j for j in range(Dcur) if hf[j] == 0), None)
        if zero_at is not None:
            return ArtinAlgebra(pres, Dcur, table, ech, hf[:zero_at])
        if Dcur >= D_max:
            raise NotArtinian(
                f"Hilbert function did not vanish below truncation {D_max}"
            )
        Dcur = min(2 * Dcur, D_max)


def hilbert_function(pres: IdealPresentation, **kw):
    return build_quotient(pres, **kw).hf


# -------------------------------------------------- minimal generator count


def min_gens(pres: IdealPresentation, D=None, check_stability=False) -> int:
    """dim I/nI, computed as a Macaulay-matrix rank difference.

    Valid at any truncation degree D with n^D contained in nI; D defaulting
    to the build truncation (>= socle degree + 2) is always enough.
    """
    if D is None:
        D = build_quotient(pres).D
    table = MonomialTable(pres.nvars, D)
    ech = SparseEchelon(pres.field)
    gen_rows = []
    for g in pres.gens:
        terms = list(g.truncate(D).terms.items())
        if not terms:
            continue
        o = min(sum(m) for m, _ in terms)
        gen_rows.append(shifted_row(terms, (0,) * pres.nvars, table))
        for d in range(1, D - o):
            for mult in monomials_of_degree(pres.nvars, d):
                row = shifted_row(terms, mult, table)
                if row:
                    ech.add(row)
    v = sum(1 for row in gen_rows if ech.add(row))
    if check_stability:
        v2 = min_gens(pres, D=D + 1, check_stability=False)
        if v2 != v:
            raise RuntimeError(f"min_gens unstable: {v} at D={D}, {v2} at D={D + 1}")
    return v


# ---------------------------------------------------------- leading forms


@dataclass
class LeadingFormData:
    """Degreewise description of the associated-graded (leading form) ideal."""

    dims: dict            # degree -> dim of the degree-j graded piece of I*
    new_gens: dict        # degree -> number of minimal generators born there
    bases: dict           # degree -> list of homogeneous Polynomial
    v_star: int


def leading_forms(pres: IdealPresentation, algebra=None) -> LeadingFormData:
    """The ideal of lowest-degree forms of I, with its minimal generator count."""
    A = algebra if algebra is not None else build_quotient(pres)
    f = pres.field
    s = A.socle_degree
    dims, new_gens, bases = {}, {}, {}
    prev_basis = []
    v_star = 0
    for j in range(1, s + 3):
        table, ech = macaulay_echelon(pres, j + 1)
        basis = []
        for lead, row in ech.pivots.items():
            if table.deg(lead) == j:
                basis.append(poly_from_row(row, table, f, pres.nvars))
        basis.sort(key=lambda p: min(mono_key(m) for m in p.terms))
        shifted = SparseEchelon(f)
        grown = 0
        for b in prev_basis:
            for i in range(pres.nvars):
                q = Polynomial.variable(i, pres.nvars, f) * b
                row = row_from_poly(q, table)
                if row and shifted.add(row):
                    grown += 1
        born = len(basis) - grown
        dims[j] = len(basis)
        new_gens[j] = born
        bases[j] = basis
        v_star += born
        prev_basis = basis
        if j > s + 1 and born:
            raise RuntimeError("leading-form generators found past socle degree + 1")
    return LeadingFormData(dims, new_gens, bases, v_star)


# ------------------------------------------------------------ field change


def extend_scalars(A: ArtinAlgebra, field: Field) -> ArtinAlgebra:
    """The same quotient over a larger coefficient field."""
    B = build_quotient(A.pres.map_field(field), D=A.D)
    if B.hf != A.hf:
        raise RuntimeError("Hilbert function changed under field extension")
    return B


# ------------------------------------------------------------ Hensel roots


def nth_root(A: ArtinAlgebra, a, n: int, allow_extension=False) -> AlgebraElement:
    """An n-th root of a unit element, by Newton lifting from the residue.

    If the residue has no n-th root in the current field: with
    allow_extension and n a power of two, the needed square roots are
    adjoined (within the tower depth cap); otherwise ResidueNotPower.
    """
    if isinstance(a, (int, Fraction, Scalar, str, Polynomial)):
        a = A.element(a)
    if a.algebra is not A:
        raise ValueError("element does not belong to the given algebra")
    if not a.is_unit():
        raise ValueError("n-th roots only of units")
    r = a.residue().nth_root(n)
    if r is None:
        if allow_extension and n in (2, 4):
            target = a.residue()
            if n == 4:
                half = nth_root(A, a, 2, allow_extension=True)
                return nth_root(half.algebra, half, 2, allow_extension=True)
            ext = adjoin_sqrt(A.field, target)
            A2 = extend_scalars(A, ext)
            return nth_root(A2, A2.element(a.poly.map_field(ext)), n)
        raise ResidueNotPower(
            f"residue {a.residue()!r} has no {n}-th root in {A.field!r}"
        )
    c = A.element(r)
    for _ in range(A.socle_degree + 2):
        err = c ** n - a
        if err.is_zero():
            return c
        c = c - err * (c ** (n - 1) * n).inverse()
    raise RuntimeError("Newton iteration for the n-th root did not converge")


# ----------------------------------------------------------- span equality


def row_space_equal(p1: IdealPresentation, p2: IdealPresentation, D: int) -> bool:
    """Do the two ideals agree modulo n^D?"""
    f = common_field(p1.field, p2.field)
    _, e1 = macaulay_echelon(p1.map_field(f), D)
    _, e2 = macaulay_echelon(p2.map_field(f), D)
    return same_row_space(e1, e2)


def ideals_equal(p1: IdealPresentation, p2: IdealPresentation) -> bool:
    """Equality of the generated ideals, certified at a safe truncation."""
    A = build_quotient(p1)
    D = max(A.D, max(g.degree() for g in p2.gens) + 2)
    return row_space_equal(p1, p2, D)


# ----------------------------------------------------------------- reports


def field_label(field: Field) -> str:
    return repr(field)


def algebra_report(A: ArtinAlgebra, include_v=True) -> dict:
    """JSON-ready summary with a stable field order."""
    report = {
        "schema": 1,
        "nvars": A.nvars,
        "field": field_label(A.field),
        "generators": [repr(g) for g in A.pres.gens],
        "truncation": A.D,
        "hilbert_function": list(A.hf),
        "multiplicity": A.length,
        "embedding_dimension": A.embdim,
        "socle_degree": A.socle_degree,
        "cm_type": A.cm_type,
        "gorenstein": A.gorenstein,
        "stretched": A.is_stretched(),
        "almost_stretched": A.is_almost_stretched(),
    }
    if include_v:
        report["min_gens"] = min_gens(A.pres, D=A.D)
    return report
