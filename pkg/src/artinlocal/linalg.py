"""Exact linear algebra: sparse row reduction keyed by monomial rank, and
dense Gaussian elimination helpers.

Sparse rows are dicts {monomial rank -> raw coefficient} relative to a
MonomialTable; the pivot of a row is its *lowest* monomial in the graded
order, which is the right convention for local (power series) computations:
the pivot monomials of an ideal's row space are exactly the monomials not
surviving into the quotient basis.
"""

from __future__ import annotations

from .polynomials import Monomial, Polynomial, mono_key, mono_mul, monomials_of_degree
from .scalars import Field, Scalar


class MonomialTable:
    """All monomials of degree < D in nvars variables, sorted ascending."""

    _cache = {}

    def __new__(cls, nvars: int, D: int):
        key = (nvars, D)
        if key not in cls._cache:
            self = super().__new__(cls)
            self._init(nvars, D)
            cls._cache[key] = self
        return cls._cache[key]

    def _init(self, nvars, D):
        self.nvars = nvars
        self.D = D
        self.monos = []
        self.degree_start = []
        for d in range(D):
            self.degree_start.append(len(self.monos))
            self.monos.extend(monomials_of_degree(nvars, d))
        self.degree_start.append(len(self.monos))
        self.index = {m: i for i, m in enumerate(self.monos)}

    def degree_range(self, d):
        """Ranks of the degree-d monomials as a (start, stop) pair."""
        return self.degree_start[d], self.degree_start[d + 1]

    def rank_of(self, m: Monomial):
        return self.index.get(m)

    def deg(self, rank: int) -> int:
        return sum(self.monos[rank])


def row_from_poly(p: Polynomial, table: MonomialTable):
    """Truncate p below table.D and return it as a sparse row."""
    row = {}
    idx = table.index
    for m, c in p.terms.items():
        r = idx.get(m)
        if r is not None:
            row[r] = c
    return row


def poly_from_row(row, table: MonomialTable, field: Field, nvars: int) -> Polynomial:
    return Polynomial(nvars, field, {table.monos[r]: c for r, c in row.items()})


def shifted_row(g_terms, mult: Monomial, table: MonomialTable):
    """Row of the product (monomial mult) * g, truncated below table.D."""
    row = {}
    idx = table.index
    for m, c in g_terms:
        r = idx.get(mono_mul(m, mult))
        if r is not None:
            row[r] = c
    return row


class SparseEchelon:
    """Incremental row echelon form; pivot = lowest monomial rank in a row."""

    def __init__(self, field: Field):
        self.field = field
        self.pivots = {}  # pivot rank -> row with that pivot normalized to 1
        self.rank = 0

    def reduce(self, row):
        """Fully reduce a row: eliminate every pivot rank from its support."""
        f = self.field
        row = dict(row)
        while True:
            hit = None
            for r in row:
                if r in self.pivots and (hit is None or r < hit):
                    hit = r
            if hit is None:
                return row
            c = row.pop(hit)
            for r2, c2 in self.pivots[hit].items():
                if r2 == hit:
                    continue
                s = f.rsub(row.get(r2, f.rzero), f.rmul(c, c2))
                if f.riszero(s):
                    row.pop(r2, None)
                else:
                    row[r2] = s

    def add(self, row) -> bool:
        """Insert a row; return True if it enlarged the span."""
        f = self.field
        row = self.reduce(row)
        row = {r: c for r, c in row.items() if not f.riszero(c)}
        if not row:
            return False
        lead = min(row)
        inv = f.rinv(row[lead])
        row = {r: f.rmul(c, inv) for r, c in row.items()}
        self.pivots[lead] = row
        self.rank += 1
        return True

    def contains(self, row) -> bool:
        return not self.reduce(row)

    def copy(self) -> "SparseEchelon":
        out = SparseEchelon(self.field)
        out.pivots = {k: dict(v) for k, v in self.pivots.items()}
        out.rank = self.rank
        return out


def same_row_space(e1: SparseEchelon, e2: SparseEchelon) -> bool:
    if set(e1.pivots) != set(e2.pivots):
        return False
    return all(e2.contains(r) for r in e1.pivots.values()) and all(
        e1.contains(r) for r in e2.pivots.values()
    )


# ------------------------------------------------------------ dense helpers


def _rowcopy(M):
    return [list(r) for r in M]


def rank_dense(M, field: Field) -> int:
    M = _rowcopy(M)
    if not M:
        return 0
    ncols = len(M[0])
    rank = 0
    for col in range(ncols):
        piv = next(
            (i for i in range(rank, len(M)) if not field.riszero(M[i][col])), None
        )
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        inv = field.rinv(M[rank][col])
        M[rank] = [field.rmul(inv, v) for v in M[rank]]
        for i in range(len(M)):
            if i != rank and not field.riszero(M[i][col]):
                c = M[i][col]
                M[i] = [field.rsub(a, field.rmul(c, b)) for a, b in zip(M[i], M[rank])]
        rank += 1
        if rank == len(M):
            break
    return rank


def solve_dense(M, b, field: Field):
    """One solution x of M x = b (lists of raw values), or None."""
    m = len(M)
    if m == 0:
        return []
    n = len(M[0])
    aug = [list(M[i]) + [b[i]] for i in range(m)]
    pivot_cols = []
    rank = 0
    for col in range(n):
        piv = next(
            (i for i in range(rank, m) if not field.riszero(aug[i][col])), None
        )
        if piv is None:
            continue
        aug[rank], aug[piv] = aug[piv], aug[rank]
        inv = field.rinv(aug[rank][col])
        aug[rank] = [field.rmul(inv, v) for v in aug[rank]]
        for i in range(m):
            if i != rank and not field.riszero(aug[i][col]):
                c = aug[i][col]
                aug[i] = [
                    field.rsub(a, field.rmul(c, v)) for a, v in zip(aug[i], aug[rank])
                ]
        pivot_cols.append(col)
        rank += 1
    for i in range(rank, m):
        if not field.riszero(aug[i][n]):
            return None
    x = [field.rzero] * n
    for r, col in enumerate(pivot_cols):
        x[col] = aug[r][n]
    return x


def nullspace_dense(M, field: Field):
    """Basis of the right kernel of M (rows = raw-value lists)."""
    m = len(M)
    if m == 0:
        return []
    n = len(M[0])
    A = _rowcopy(M)
    pivot_of_col = {}
    rank = 0
    for col in range(n):
        piv = next((i for i in range(rank, m) if not field.riszero(A[i][col])), None)
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        inv = field.rinv(A[rank][col])
        A[rank] = [field.rmul(inv, v) for v in A[rank]]
        for i in range(m):
            if i != rank and not field.riszero(A[i][col]):
                c = A[i][col]
                A[i] = [field.rsub(a, field.rmul(c, v)) for a, v in zip(A[i], A[rank])]
        pivot_of_col[col] = rank
        rank += 1
    basis = []
    free_cols = [c for c in range(n) if c not in pivot_of_col]
    for fc in free_cols:
        v = [field.rzero] * n
        v[fc] = field.rone
        for col, r in pivot_of_col.items():
            v[col] = field.rneg(A[r][fc])
        basis.append(v)
    return basis


def det_dense(M, field: Field):
    n = len(M)
    if n == 0:
        return field.rone
    A = _rowcopy(M)
    det = field.rone
    for col in range(n):
        piv = next((i for i in range(col, n) if not field.riszero(A[i][col])), None)
        if piv is None:
            return field.rzero
        if piv != col:
            A[col], A[piv] = A[piv], A[col]
            det = field.rneg(det)
        det = field.rmul(det, A[col][col])
        inv = field.rinv(A[col][col])
        for i in range(col + 1, n):
            if not field.riszero(A[i][col]):
                c = field.rmul(A[i][col], inv)
                A[i] = [field.rsub(a, field.rmul(c, v)) for a, v in zip(A[i], A[col])]
    return det


def invert_dense(M, field: Field):
    n = len(M)
    aug = [list(M[i]) + [field.rone if j == i else field.rzero for j in range(n)]
           for i in range(n)]
    for col in range(n):
        piv = next((i for i in range(col, n) if not field.riszero(aug[i][col])), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = field.rinv(aug[col][col])
        aug[col] = [field.rmul(inv, v) for v in aug[col]]
        for i in range(n):
            if i != col and not field.riszero(aug[i][col]):
                c = aug[i][col]
                aug[i] = [
                    field.rsub(a, field.rmul(c, v)) for a, v in zip(aug[i], aug[col])
                ]
    return [r[n:] for r in aug]


def diagonalize_symmetric(M, field: Field):
    """Congruence-diagonalize a symmetric matrix: returns (P, diag) with
    P^T M P = diag(diag).  Needs characteristic != 2.
    """
    n = len(M)
    A = _rowcopy(M)
    P = [[field.rone if i == j else field.rzero for j in range(n)] for i in range(n)]

    def col_op(dst, src, c):
        # column dst += c * column src (applied symmetrically), and track in P
        for i in range(n):
            A[i][dst] = field.radd(A[i][dst], field.rmul(c, A[i][src]))
        for j in range(n):
            A[dst][j] = field.radd(A[dst][j], field.rmul(c, A[src][j]))
        for i in range(n):
            P[i][dst] = field.radd(P[i][dst], field.rmul(c, P[i][src]))

    def col_swap(i, j):
        for r in range(n):
            A[r][i], A[r][j] = A[r][j], A[r][i]
        A[i], A[j] = A[j], A[i]
        for r in range(n):
            P[r][i], P[r][j] = P[r][j], P[r][i]

    for k in range(n):
        if field.riszero(A[k][k]):
            j = next(
                (j for j in range(k + 1, n) if not field.riszero(A[j][j])), None
            )
            if j is not None:
                col_swap(k, j)
            else:
                j = next(
                    (j for j in range(k + 1, n) if not field.riszero(A[k][j])), None
                )
                if j is None:
                    continue
                col_op(k, j, field.rone)
        inv = field.rinv(A[k][k])
        for j in range(k + 1, n):
            if not field.riszero(A[k][j]):
                col_op(j, k, field.rneg(field.rmul(A[k][j], inv)))
    return P, [A[i][i] for i in range(n)]
