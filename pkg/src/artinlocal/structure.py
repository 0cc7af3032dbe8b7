"""Canonical models and normal forms for stretched and almost-stretched
Artinian local algebras.

"Stretched" means the square of the maximal ideal is principal
(Hilbert function (1, h, 1, ..., 1)); "almost stretched" means it needs two
generators (Hilbert function (1, h, 2, ..., 2, 1, ..., 1)).  Both classes
admit canonical ideal presentations parameterized by a handful of scalars,
and every algebra in the class can be carried onto its canonical model by an
explicit change of coordinates.  This module builds the models, recovers the
parameters from an arbitrary presentation, and produces the witness
coordinate change.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import (
    FieldExtensionRequired,
    NotAlmostStretched,
    NotGorenstein,
    NotStretched,
    SearchExhausted,
)
from .linalg import (
    SparseEchelon,
    diagonalize_symmetric,
    solve_dense,
)
from .polynomials import Polynomial, RingMap, monomials_of_degree
from .quotient import (
    AlgebraElement,
    ArtinAlgebra,
    IdealPresentation,
    build_quotient,
    nth_root,
    row_space_equal,
)
from .scalars import Field, QQ, Scalar, adjoin_sqrt


# ------------------------------------------------------------------ models


@dataclass(frozen=True)
class StretchedParams:
    """Data of the canonical stretched model: embedding dimension h, socle
    degree s, Cohen-Macaulay type tau, and (for tau < h) the unit scalars
    attached to the non-socle square generators."""

    h: int
    s: int
    tau: int
    units: tuple = ()

    def __post_init__(self):
        if self.h < 1 or self.s < 2 or not 1 <= self.tau <= self.h:
            raise ValueError("need h >= 1, s >= 2, 1 <= tau <= h")
        want = self.h - self.tau if self.tau < self.h else 0
        if len(self.units) != want:
            raise ValueError(f"expected {want} unit scalars, got {len(self.units)}")
        for u in self.units:
            if not isinstance(u, Scalar) or u.is_zero():
                raise ValueError("units must be nonzero Scalars")

    @property
    def field(self) -> Field:
        f = QQ
        for u in self.units:
            f = u.field if u.field.depth > f.depth else f
        return f


def make_stretched(params: StretchedParams) -> IdealPresentation:
    """Canonical stretched ideal with the given parameters."""
    h, s, tau = params.h, params.s, params.tau
    f = params.field
    x = [Polynomial.variable(i, h, f) for i in range(h)]
    gens = []
    if tau == h:
        gens += [x[0] * x[j] for j in range(1, h)]
        gens += [x[i] * x[j] for i in range(1, h) for j in range(i, h)]
        gens.append(x[0] ** (s + 1))
    else:
        gens += [x[i] * x[j] for i in range(h) for j in range(i + 1, h)]
        gens += [x[j] * x[j] for j in range(1, tau)]
        xs = x[0] ** s
        for k, u in enumerate(params.units):
            i = tau + k
            gens.append(x[i] * x[i] - xs.scale(u))
    return IdealPresentation(gens, h, f)


@dataclass(frozen=True)
class AlmostStretchedParams:
    """Data of the canonical almost-stretched Gorenstein model.

    a is a polynomial in the first two variables (the coefficient of x1*x2
    in the distinguished quadratic relation), w is the unit scalar in front
    of x1^(s-t+1), and units holds the scalars for x3..xh.
    """

    h: int
    t: int
    s: int
    a: Polynomial
    w: Scalar
    units: tuple = ()

    def __post_init__(self):
        if self.h < 2 or self.t < 2 or self.s < self.t + 1:
            raise ValueError("need h >= 2, t >= 2, s >= t + 1")
        if len(self.units) != self.h - 2:
            raise ValueError(f"expected {self.h - 2} unit scalars")
        if not isinstance(self.w, Scalar) or self.w.is_zero():
            raise ValueError("w must be a nonzero Scalar")
        for u in self.units:
            if not isinstance(u, Scalar) or u.is_zero():
                raise ValueError("units must be nonzero Scalars")
        if self.a.nvars != self.h:
            raise ValueError("a must live in the ambient variable count")
        for m in self.a.terms:
            if any(m[2:]):
                raise ValueError("a may involve only the first two variables")

    @property
    def field(self) -> Field:
        f = self.w.field
        for u in self.units:
            f = u.field if u.field.depth > f.depth else f
        return f if f.depth >= self.a.field.depth else self.a.field


def make_almost_stretched(params: AlmostStretchedParams) -> IdealPresentation:
    """Canonical almost-stretched Gorenstein ideal with the given data."""
    h, t, s = params.h, params.t, params.s
    f = params.field
    x = [Polynomial.variable(i, h, f) for i in range(h)]
    a = params.a.map_field(f).truncate(s)
    gens = []
    gens += [x[0] * x[j] for j in range(2, h)]
    gens += [x[i] * x[j] for i in range(1, h) for j in range(i + 1, h)]
    xs = x[0] ** s
    for k, u in enumerate(params.units):
        j = 2 + k
        gens.append(x[j] * x[j] - xs.scale(u))
    quad = x[1] * x[1] - a * x[0] * x[1] - (x[0] ** (s - t + 1)).scale(params.w)
    gens.append(quad)
    gens.append(x[0] ** t * x[1])
    return IdealPresentation(gens, h, f)


def make_1321_models():
    """The two algebras with Hilbert function (1, 3, 2, 1): one with a
    split quadric relation, one with a double line."""
    first = IdealPresentation.from_strings(
        ["x1*x2", "x1*x3", "x2*x3", "x1^3 - x2^3", "x3^2 - x2^3"], 3
    )
    second = IdealPresentation.from_strings(
        ["x1^3", "x2^2", "x2*x3", "x1*x3", "x3^2 - x1^2*x2"], 3
    )
    return first, second


# -------------------------------------------------- parameter recovery from
# canonical-shape presentations (syntactic)


def _single_term(g):
    if len(g.terms) != 1:
        return None
    (m, c), = g.terms.items()
    return m, c


def recover_stretched_params(pres: IdealPresentation) -> StretchedParams:
    """Read (h, s, tau, units) off a presentation in canonical stretched shape."""
    h, f = pres.nvars, pres.field
    pairs, squares, unit_gens, power = set(), set(), {}, None
    for g in pres.gens:
        st = _single_term(g)
        if st is not None:
            m, c = st
            if f.riszero(f.rsub(c, f.rone)):
                nz = [i for i, e in enumerate(m) if e]
                if len(nz) == 2 and all(m[i] == 1 for i in nz):
                    pairs.add(tuple(nz))
                    continue
                if len(nz) == 1 and m[nz[0]] == 2 and nz[0] > 0:
                    squares.add(nz[0])
                    continue
                if len(nz) == 1 and nz[0] == 0 and m[0] >= 3:
                    power = m[0]
                    continue
            raise ValueError("not a canonical stretched presentation")
        if len(g.terms) == 2:
            items = dict(g.terms)
            sq = next((i for i in range(1, h)
                       if tuple(2 if j == i else 0 for j in range(h)) in items), None)
            if sq is None:
                raise ValueError("not a canonical stretched presentation")
            msq = tuple(2 if j == sq else 0 for j in range(h))
            other = next(m for m in items if m != msq)
            if any(other[1:]) or not f.riszero(f.rsub(items[msq], f.rone)):
                raise ValueError("not a canonical stretched presentation")
            unit_gens[sq] = (other[0], Scalar(f, f.rneg(items[other])))
            continue
        raise ValueError("not a canonical stretched presentation")
    if power is not None:
        if unit_gens:
            raise ValueError("mixed canonical shapes")
        s, tau = power - 1, h
        want_pairs = {(i, j) for i in range(h) for j in range(i + 1, h)}
        if pairs != want_pairs or squares != set(range(1, h)):
            raise ValueError("not a canonical stretched presentation")
        return StretchedParams(h, s, tau)
    if not unit_gens:
        raise ValueError("not a canonical stretched presentation")
    exps = {e for e, _ in unit_gens.values()}
    if len(exps) != 1:
        raise ValueError("inconsistent socle powers")
    s = exps.pop()
    idxs = sorted(unit_gens)
    tau = h - len(idxs)
    if idxs != list(range(tau, h)) or squares != set(range(1, tau)):
        raise ValueError("not a canonical stretched presentation")
    want_pairs = {(i, j) for i in range(h) for j in range(i + 1, h)}
    if pairs != want_pairs:
        raise ValueError("not a canonical stretched presentation")
    units = tuple(unit_gens[i][1] for i in idxs)
    return StretchedParams(h, s, tau, units)


def recover_almost_stretched_params(pres: IdealPresentation) -> AlmostStretchedParams:
    """Read the canonical almost-stretched Gorenstein data off a presentation."""
    h, f = pres.nvars, pres.field
    pairs, unit_gens, t_exp, quad = set(), {}, None, None
    for g in pres.gens:
        st = _single_term(g)
        if st is not None:
            m, c = st
            nz = [i for i, e in enumerate(m) if e]
            if not f.riszero(f.rsub(c, f.rone)):
                raise ValueError("not a canonical almost-stretched presentation")
            if len(nz) == 2 and all(m[i] == 1 for i in nz):
                pairs.add(tuple(nz))
                continue
            if len(nz) == 2 and nz == [0, 1] and m[1] == 1 and m[0] >= 2:
                t_exp = m[0]
                continue
            raise ValueError("not a canonical almost-stretched presentation")
        msq2 = tuple(2 if j == 1 else 0 for j in range(h))
        if msq2 in g.terms:
            quad = g
            continue
        items = dict(g.terms)
        sq = next((i for i in range(2, h)
                   if tuple(2 if j == i else 0 for j in range(h)) in items), None)
        if sq is None or len(items) != 2:
            raise ValueError("not a canonical almost-stretched presentation")
        msq = tuple(2 if j == sq else 0 for j in range(h))
        other = next(m for m in items if m != msq)
        if any(other[1:]) or not f.riszero(f.rsub(items[msq], f.rone)):
            raise ValueError("not a canonical almost-stretched presentation")
        unit_gens[sq] = (other[0], Scalar(f, f.rneg(items[other])))
    if quad is None or t_exp is None:
        raise ValueError("not a canonical almost-stretched presentation")
    want_pairs = {(0, j) for j in range(2, h)} | {
        (i, j) for i in range(1, h) for j in range(i + 1, h)
    }
    if pairs != want_pairs:
        raise ValueError("not a canonical almost-stretched presentation")
    t = t_exp
    idxs = sorted(unit_gens)
    if idxs != list(range(2, h)):
        raise ValueError("not a canonical almost-stretched presentation")
    exps = {e for e, _ in unit_gens.values()}
    if len(exps) > 1:
        raise ValueError("inconsistent socle powers")
    # split the distinguished quadric: x2^2 - a*x1*x2 - w*x1^(s-t+1)
    msq2 = tuple(2 if j == 1 else 0 for j in range(h))
    w = None
    w_exp = None
    a_terms = {}
    for m, c in quad.terms.items():
        if m == msq2:
            if not f.riszero(f.rsub(c, f.rone)):
                raise ValueError("distinguished quadric must be monic in x2^2")
            continue
        if any(m[2:]):
            raise ValueError("distinguished quadric involves extra variables")
        if m[1] == 0:
            if w is not None:
                raise ValueError("multiple pure-x1 terms in the quadric")
            w = Scalar(f, f.rneg(c))
            w_exp = m[0]
            continue
        if m[0] == 0:
            raise ValueError("quadric term not divisible by x1*x2")
        am = (m[0] - 1, m[1] - 1) + (0,) * (h - 2)
        a_terms[am] = f.rneg(c)
    if w is None:
        raise ValueError("missing unit term in the distinguished quadric")
    s = w_exp + t - 1
    if exps and exps != {s}:
        raise ValueError("inconsistent socle powers")
    units = tuple(unit_gens[i][1] for i in idxs)
    a = Polynomial(h, f, a_terms)
    return AlmostStretchedParams(h, t, s, a, w, units)


# ----------------------------------------------------------- unit rescaling


def _sqrt_growing(field: Field, u: Scalar, allow_extension: bool):
    """Square root of u, possibly adjoining it (within the depth cap)."""
    u = field.coerce(u)
    r = u.sqrt()
    if r is not None:
        return field, r
    if not allow_extension:
        raise FieldExtensionRequired(f"sqrt({u!r}) not in {field!r}")
    field = adjoin_sqrt(field, u)
    r = field.coerce(u).sqrt()
    assert r is not None
    return field, r


def rescale_stretched_units(pres: IdealPresentation, allow_extension=False):
    """Carry a canonical stretched presentation to the one with all units 1.

    Returns (new_presentation, witness) where witness maps the canonical
    variables of the new presentation into the old coordinates; the ideal
    equality is certified by a truncated row-space comparison.
    """
    params = recover_stretched_params(pres)
    field = pres.field
    roots = []
    for u in params.units:
        field, r = _sqrt_growing(field, u, allow_extension)
        roots.append(r)
    ones = tuple(field.one for _ in params.units)
    new_params = StretchedParams(params.h, params.s, params.tau, ones)
    new_pres = make_stretched(new_params)
    h = params.h
    images = []
    for i in range(h):
        scale = field.one
        if i >= params.tau and params.tau < h:
            scale = field.coerce(roots[i - params.tau]).inverse()
        images.append(Polynomial.variable(i, h, field).scale(scale))
    witness = RingMap(images, params.s + 2)
    transported = IdealPresentation(
        [witness.apply(g) for g in new_pres.gens], h, field
    )
    if not row_space_equal(transported, pres, params.s + 2):
        raise RuntimeError("unit rescaling failed certification")
    return new_pres, witness


def normalize_units(pres: IdealPresentation, allow_extension=False):
    """Push all unit parameters of a canonical presentation to 1.

    Dispatches on the shape: canonical stretched presentations go through
    rescale_stretched_units; otherwise the almost-stretched Gorenstein
    rescaling below applies (w and u_3..u_h become 1, a is conjugated)."""
    try:
        recover_stretched_params(pres)
    except ValueError:
        pass
    else:
        return rescale_stretched_units(pres, allow_extension=allow_extension)
    params = recover_almost_stretched_params(pres)
    field = pres.field
    field, v = _sqrt_growing(field, params.w, allow_extension)
    roots = []
    for u in params.units:
        field, r = _sqrt_growing(field, u, allow_extension)
        roots.append(r)
    h, t, s = params.h, params.t, params.s
    v = field.coerce(v)
    # a'(x1, x2) = v^{-1} * a(x1, v*x2)
    a_old = params.a.map_field(field)
    a_terms = {}
    for m, c in a_old.terms.items():
        scale = field.rmul(c, (v ** (m[1] - 1)).val if m[1] >= 1 else field.rinv(v.val))
        a_terms[m] = scale
    a_new = Polynomial(h, field, a_terms)
    new_params = AlmostStretchedParams(
        h, t, s, a_new, field.one, tuple(field.one for _ in roots)
    )
    new_pres = make_almost_stretched(new_params)
    images = [Polynomial.variable(0, h, field)]
    images.append(Polynomial.variable(1, h, field).scale(v.inverse()))
    for k, r in enumerate(roots):
        images.append(
            Polynomial.variable(2 + k, h, field).scale(field.coerce(r).inverse())
        )
    witness = RingMap(images, s + 2)
    transported = IdealPresentation(
        [witness.apply(g) for g in new_pres.gens], h, field
    )
    if not row_space_equal(transported, pres, s + 2):
        raise RuntimeError("unit normalization failed certification")
    return new_pres, witness


# ---------------------------------------------------------- generic search


def _linear_row(el: AlgebraElement):
    f = el.algebra.field
    return {
        i: c.val for i, c in enumerate(el.poly.linear_coeffs()) if not c.is_zero()
    }


def _graded_classes_independent(A: ArtinAlgebra, elems, j) -> bool:
    """Are the classes of the given elements independent in m^j / m^(j+1)?"""
    ech = A.power_echelon(j + 1).copy()
    for el in elems:
        row = {i: c for i, c in enumerate(el.coords()) if not A.field.riszero(c)}
        if not ech.add(row):
            return False
    return True


def _candidate_linears(A: ArtinAlgebra, rng):
    for i in range(A.nvars):
        yield A.variable(i)
    while True:
        el = A.element(0)
        for i in range(A.nvars):
            c = rng.randint(-3, 3)
            if c:
                el = el + A.variable(i) * c
        if any(not c.is_zero() for c in el.poly.linear_coeffs()):
            yield el


def find_lean_basis(A: ArtinAlgebra, seed=0, budget=100):
    """A power element x1 (and, in the almost-stretched case, a partner x2)
    generating the powers of the maximal ideal degreewise.

    Generic linear combinations work; the search is a seeded scan over
    coordinate variables followed by random small-integer combinations.
    """
    s = A.socle_degree
    if s < 2:
        raise NotStretched("socle degree below 2")
    rng = random.Random(seed)
    if A.is_stretched():
        cands = _candidate_linears(A, rng)
        for _ in range(budget):
            x1 = next(cands)
            if not (x1 ** s).is_zero():
                return [x1]
        raise SearchExhausted("no stretched power element found")
    if not A.is_almost_stretched():
        raise NotAlmostStretched("m^2 is not 2-generated")
    t = max(j for j in range(2, len(A.hf)) if A.hf[j] == 2)
    # A power element alone may admit no partner (its multiples can die
    # early), so on partner failure the power element is rechosen.
    power_cands = _candidate_linears(A, rng)
    spent = 0
    found_power = False
    while spent < budget:
        x1 = next(power_cands)
        spent += 1
        if (x1 ** s).is_zero():
            continue
        found_power = True
        partner_cands = _candidate_linears(A, rng)
        for _ in range(20):
            x2 = next(partner_cands)
            spent += 1
            ok = all(
                _graded_classes_independent(A, [x1 ** j, x1 ** (j - 1) * x2], j)
                for j in range(2, t + 1)
            )
            if ok:
                return [x1, x2]
    if not found_power:
        raise SearchExhausted("no power element found")
    raise SearchExhausted("no lean partner element found")


# ----------------------------------------------------- element linear algebra


def _mult_matrix_by_element(A: ArtinAlgebra, el: AlgebraElement):
    """Column-major matrix of multiplication by el over the standard basis."""
    cols = []
    for r in A.std:
        m = A.table.monos[r]
        basis = AlgebraElement(
            A, Polynomial(A.nvars, A.field, {m: A.field.rone})
        )
        cols.append((el * basis).coords())
    return cols


def solve_element_combo(A: ArtinAlgebra, coeffs, rhs: AlgebraElement):
    """Solve sum_i coeffs[i] * z_i = rhs for unknown elements z_i, if possible."""
    e = A.length
    mats = [_mult_matrix_by_element(A, c) for c in coeffs]
    rows = []
    for r in range(e):
        row = []
        for M in mats:
            row.extend(M[c][r] for c in range(e))
        rows.append(row)
    sol = solve_dense(rows, rhs.coords(), A.field)
    if sol is None:
        return None
    out = []
    for i in range(len(coeffs)):
        out.append(AlgebraElement(A, A.from_coords(sol[i * e:(i + 1) * e])))
    return out


def solve_scalar_combo(A: ArtinAlgebra, columns, rhs: AlgebraElement):
    """Solve sum_i c_i * columns[i] = rhs for unknown scalars c_i."""
    e = A.length
    cols = [col.coords() for col in columns]
    rows = [[cols[j][r] for j in range(len(cols))] for r in range(e)]
    sol = solve_dense(rows, rhs.coords(), A.field)
    if sol is None:
        return None
    return [Scalar(A.field, c) for c in sol]


def _socle_ratio(A: ArtinAlgebra, prod: AlgebraElement, base: AlgebraElement):
    """Scalar c with prod = c * base, where base spans a 1-dim space."""
    sol = solve_scalar_combo(A, [base], prod)
    if sol is None:
        raise RuntimeError("product does not lie on the socle line")
    return sol[0]


# -------------------------------------------------------------- normalizers


def _complete_basis(A: ArtinAlgebra, fixed, rng, count):
    """Extend the linear parts of `fixed` to a basis of m/m^2, preferring
    coordinate variables; returns the new elements."""
    ech = SparseEchelon(A.field)
    for el in fixed:
        if not ech.add(_linear_row(el)):
            raise RuntimeError("fixed elements are linearly dependent mod m^2")
    out = []
    for cand in _candidate_linears(A, rng):
        if len(out) == count:
            break
        if ech.add(_linear_row(cand)):
            out.append(cand)
    return out


def normalize_stretched(A: ArtinAlgebra, seed=0):
    """Parameters and witness coordinate change onto the stretched model.

    The witness maps canonical variable i+1 to a representative of the i-th
    element of the constructed basis; certification compares truncated row
    spaces of the transported model and the input ideal.
    """
    if not A.is_stretched():
        raise NotStretched(f"Hilbert function {A.hf} is not stretched")
    h, s, tau = A.embdim, A.socle_degree, A.cm_type
    rng = random.Random(seed)
    (x1,) = find_lean_basis(A, seed=seed)
    # socle elements with independent classes mod m^2
    _, soc = A.socle()
    ech = SparseEchelon(A.field)
    ech.add(_linear_row(x1))
    ys = []
    for v in soc:
        row = _linear_row(v)
        if row and ech.add(row):
            ys.append(v)
    if len(ys) != tau - 1:
        raise RuntimeError("socle linear parts have unexpected rank")
    zs = _complete_basis(A, [x1] + ys, rng, h - tau)
    # arrange x1 * z_j = 0
    x1sq = x1 * x1
    for k, z in enumerate(zs):
        sol = solve_element_combo(A, [x1sq], x1 * z)
        if sol is None:
            raise RuntimeError("could not clear x1*z products")
        zs[k] = z - x1 * sol[0]
    units = ()
    if tau < h:
        base = x1 ** s
        n = len(zs)
        U = [[_socle_ratio(A, zs[i] * zs[j], base).val for j in range(n)]
             for i in range(n)]
        P, diag = diagonalize_symmetric(U, A.field)
        new_zs = []
        for i in range(n):
            w = A.element(0)
            for k in range(n):
                if not A.field.riszero(P[k][i]):
                    w = w + zs[k] * Scalar(A.field, P[k][i])
            new_zs.append(w)
        zs = new_zs
        units = tuple(Scalar(A.field, d) for d in diag)
        if any(u.is_zero() for u in units):
            raise RuntimeError("degenerate square unit in stretched normal form")
    params = StretchedParams(h, s, tau, units)
    images = [x1.poly] + [y.poly for y in ys] + [z.poly for z in zs]
    witness = RingMap(images, A.D)
    model = make_stretched(params)
    transported = IdealPresentation(
        [witness.apply(g) for g in model.gens], h, A.field
    )
    if not row_space_equal(transported, A.pres, A.D):
        raise RuntimeError("stretched normalization failed certification")
    return params, witness


def normalize_almost_stretched_gorenstein(A: ArtinAlgebra, seed=0):
    """Parameters and witness coordinate change onto the almost-stretched
    Gorenstein model."""
    if not A.is_almost_stretched():
        raise NotAlmostStretched(f"Hilbert function {A.hf} is not almost stretched")
    if not A.gorenstein:
        raise NotGorenstein(f"Cohen-Macaulay type is {A.cm_type}")
    h, s = A.embdim, A.socle_degree
    t = max(j for j in range(2, len(A.hf)) if A.hf[j] == 2)
    if s < t + 1:
        raise NotGorenstein("socle degree equals the last 2-slot")
    rng = random.Random(seed)
    x1, x2 = find_lean_basis(A, seed=seed)
    zs = _complete_basis(A, [x1, x2], rng, h - 2)
    # arrange x1 * z_j = 0
    for k, z in enumerate(zs):
        sol = solve_element_combo(A, [x1 * x1, x1 * x2], x1 * z)
        if sol is None:
            raise RuntimeError("could not clear x1*z products")
        zs[k] = z - x1 * sol[0] - x2 * sol[1]
    # arrange x1^t * x2 = 0
    sol = solve_element_combo(A, [x1 ** (t + 1)], x1 ** t * x2)
    if sol is None:
        raise RuntimeError("could not clear x1^t*x2")
    x2 = x2 - x1 * sol[0]
    units = ()
    if h > 2:
        base = x1 ** s
        n = len(zs)
        U = [[_socle_ratio(A, zs[i] * zs[j], base).val for j in range(n)]
             for i in range(n)]
        P, diag = diagonalize_symmetric(U, A.field)
        new_zs = []
        for i in range(n):
            w = A.element(0)
            for k in range(n):
                if not A.field.riszero(P[k][i]):
                    w = w + zs[k] * Scalar(A.field, P[k][i])
            new_zs.append(w)
        zs = new_zs
        units = tuple(Scalar(A.field, d) for d in diag)
        if any(u.is_zero() for u in units):
            raise RuntimeError("degenerate square unit")
        # make x2 orthogonal to the z's
        for k, z in enumerate(zs):
            akj = _socle_ratio(A, x2 * z, base)
            x2 = x2 - z * (akj / units[k])
    # solve x2^2 = a(x1, x2)*x1*x2 + w(x1)*x1^(s-t+1)
    a_monos = [m for d in range(0, s - 1) for m in monomials_of_degree(2, d)]
    w_exps = list(range(0, t - 1)) or [0]

    def solve_relation(x2_el, scalar_w):
        cols = []
        for (i, k) in a_monos:
            cols.append(x1 ** (i + 1) * x2_el ** (k + 1))
        wslots = [0] if scalar_w else w_exps
        for k in wslots:
            cols.append(x1 ** (s - t + 1 + k))
        sol = solve_scalar_combo(A, cols, x2_el * x2_el)
        if sol is None:
            return None
        return sol[:len(a_monos)], sol[len(a_monos):]

    res = solve_relation(x2, scalar_w=False)
    if res is None:
        raise RuntimeError("distinguished quadratic relation is unsolvable")
    a_coeffs, w_coeffs = res
    if any(not c.is_zero() for c in w_coeffs[1:]):
        w_el = A.element(0)
        for k, c in zip(w_exps, w_coeffs):
            w_el = w_el + x1 ** k * c
        w0 = w_coeffs[0]
        if w0.is_zero():
            raise RuntimeError("unit coefficient has zero residue")
        v = nth_root(A, w_el.inverse() * w0, 2)
        x2 = x2 * v
        res = solve_relation(x2, scalar_w=True)
        if res is None:
            raise RuntimeError("scalar-unit relation unsolvable after rescaling")
        a_coeffs, w_coeffs = res
    w = w_coeffs[0]
    if w.is_zero():
        raise RuntimeError("unit coefficient vanished")
    a_terms = {}
    for (m, c) in zip(a_monos, a_coeffs):
        if not c.is_zero():
            a_terms[(m[0], m[1]) + (0,) * (h - 2)] = c.val
    a_poly = Polynomial(h, A.field, a_terms)
    params = AlmostStretchedParams(h, t, s, a_poly, w, units)
    images = [x1.poly, x2.poly] + [z.poly for z in zs]
    witness = RingMap(images, A.D)
    model = make_almost_stretched(params)
    transported = IdealPresentation(
        [witness.apply(g) for g in model.gens], h, A.field
    )
    if not row_space_equal(transported, A.pres, A.D):
        raise RuntimeError("almost-stretched normalization failed certification")
    return params, witness


def normalize(pres_or_algebra, seed=0):
    """Dispatch to the applicable normalizer; returns (kind, params, witness)."""
    A = (pres_or_algebra if isinstance(pres_or_algebra, ArtinAlgebra)
         else build_quotient(pres_or_algebra))
    if A.is_stretched():
        params, witness = normalize_stretched(A, seed=seed)
        return "stretched", params, witness
    if A.is_almost_stretched():
        params, witness = normalize_almost_stretched_gorenstein(A, seed=seed)
        return "almost_stretched", params, witness
    raise NotStretched(f"Hilbert function {A.hf} fits neither normal form")
