"""Exact sparse linear algebra over the rationals.

Matrices are stored row-major as nested dicts ``{row: {col: value}}`` with
values that are Python ints or ``fractions.Fraction``; exact zeros are never
stored, and fractions with denominator 1 are normalized to ints on insert so
that the common all-integer case runs on machine integer arithmetic.

Elimination never divides.  Each row is scaled to an integer vector with
content 1, and a pivot step replaces ``row`` by ``row * pivot_value -
pivot_row * row_value`` followed by a gcd strip.  Row scaling by nonzero
rationals preserves rank, the right kernel, and the set of pivot columns
under a fixed column order, which is all the routines below rely on.

Three drivers share the elimination core:

* ``rank`` chooses pivot columns greedily by current column support (a lazy
  min-heap), switching to a dense integer sweep when the remaining block is
  small and has filled in.
* ``kernel_basis`` and ``image_basis`` sweep the columns in index order so
  that the resulting echelon structure, and in particular the set of pivot
  columns, is deterministic.
* ``RowSpanSolver`` expresses vectors in a fixed independent row family by
  inverting the square pivot submatrix once (fraction-free Jordan), after
  which each coordinate vector costs one small matrix-vector product.

Returned basis vectors are integer, have content 1, and their first nonzero
entry is positive, so test fixtures can compare them literally.
"""

import heapq
from fractions import Fraction
from math import gcd, lcm


def _norm(x):
    """Collapse Fraction with denominator 1 to int; keep ints as ints."""
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def parse_scalar(s: str):
    s = s.strip()
    if "/" in s:
        return _norm(Fraction(s))
    return int(s)


def format_scalar(x) -> str:
    return str(x)


class RationalMatrix:
    """Sparse matrix with exact int/Fraction entries."""

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, nrows: int, ncols: int, rows=None):
        self.nrows = nrows
        self.ncols = ncols
        self.rows = rows if rows is not None else {}

    # -- constructors ---------------------------------------------------

    @classmethod
    def from_rows(cls, rows, ncols=None):
        nrows = len(rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        data = {}
        for i, row in enumerate(rows):
            d = {j: _norm(v) for j, v in enumerate(row) if v}
            if d:
                data[i] = d
        return cls(nrows, ncols, data)

    @classmethod
    def from_row_dicts(cls, dicts, nrows, ncols):
        data = {}
        for i, d in enumerate(dicts):
            dd = {j: _norm(v) for j, v in d.items() if v}
            if dd:
                data[i] = dd
        return cls(nrows, ncols, data)

    @classmethod
    def from_entries(cls, nrows, ncols, triples):
        data = {}
        for i, j, v in triples:
            if not v:
                continue
            row = data.setdefault(i, {})
            cur = row.get(j, 0) + v
            cur = _norm(cur)
            if cur:
                row[j] = cur
            elif j in row:
                del row[j]
        return cls(nrows, ncols, {i: r for i, r in data.items() if r})

    @classmethod
    def identity(cls, n):
        return cls(n, n, {i: {i: 1} for i in range(n)})

    @classmethod
    def zeros(cls, nrows, ncols):
        return cls(nrows, ncols, {})

    # -- accessors ------------------------------------------------------

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def entry(self, i, j):
        return self.rows.get(i, {}).get(j, 0)

    def nnz(self) -> int:
        return sum(len(r) for r in self.rows.values())

    def is_zero(self) -> bool:
        return not self.rows

    def to_rows(self):
        return [
            [self.rows.get(i, {}).get(j, 0) for j in range(self.ncols)]
            for i in range(self.nrows)
        ]

    def row_dict(self, i):
        return self.rows.get(i, {})

    def column_dict(self, j):
        return {i: r[j] for i, r in self.rows.items() if j in r}

    # -- arithmetic -----------------------------------------------------

    def __mul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} * {other.shape}")
        data = {}
        orows = other.rows
        for i, arow in self.rows.items():
            acc = {}
            for k, a in arow.items():
                brow = orows.get(k)
                if not brow:
                    continue
                if a == 1:
                    for j, b in brow.items():
                        acc[j] = acc.get(j, 0) + b
                else:
                    for j, b in brow.items():
                        acc[j] = acc.get(j, 0) + a * b
            acc = {j: _norm(v) for j, v in acc.items() if v}
            if acc:
                data[i] = acc
        return RationalMatrix(self.nrows, other.ncols, data)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def _combine(self, other, s):
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        data = {i: dict(r) for i, r in self.rows.items()}
        for i, orow in other.rows.items():
            row = data.setdefault(i, {})
            for j, v in orow.items():
                cur = _norm(row.get(j, 0) + s * v)
                if cur:
                    row[j] = cur
                elif j in row:
                    del row[j]
            if not row:
                del data[i]
        return RationalMatrix(self.nrows, self.ncols, data)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c):
        if not c:
            return RationalMatrix.zeros(self.nrows, self.ncols)
        data = {
            i: {j: _norm(c * v) for j, v in r.items()} for i, r in self.rows.items()
        }
        return RationalMatrix(self.nrows, self.ncols, data)

    def transpose(self) -> "RationalMatrix":
        data = {}
        for i, row in self.rows.items():
            for j, v in row.items():
                data.setdefault(j, {})[i] = v
        return RationalMatrix(self.ncols, self.nrows, data)

    def trace(self):
        return _norm(sum(r.get(i, 0) for i, r in self.rows.items()))

    def __eq__(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __repr__(self):
        return f"RationalMatrix({self.nrows}x{self.ncols}, nnz={self.nnz()})"

    def kron(self, other: "RationalMatrix") -> "RationalMatrix":
        """Kronecker product; this matrix indexes the coarse blocks."""
        p, q = other.nrows, other.ncols
        data = {}
        for i, arow in self.rows.items():
            for k, brow in other.rows.items():
                out = {}
                for j, a in arow.items():
                    for l, b in brow.items():
                        out[j * q + l] = _norm(a * b)
                data[i * p + k] = out
        return RationalMatrix(self.nrows * p, self.ncols * q, data)


def vector_entry(vec, j):
    return vec.get(j, 0) if isinstance(vec, dict) else vec[j]


def normalize_int_vector(vec):
    """Scale to integer entries with content 1 and positive first nonzero.

    ``vec`` is a dict {index: scalar}; returns a new dict.  The zero vector
    comes back empty.
    """
    items = [(j, v) for j, v in vec.items() if v]
    if not items:
        return {}
    den = 1
    for _, v in items:
        if isinstance(v, Fraction):
            den = lcm(den, v.denominator)
    ints = [(j, int(v * den)) for j, v in items]
    g = 0
    for _, v in ints:
        g = gcd(g, v)
        if g == 1:
            break
    lead = min(ints)[1] if g == 1 else min(ints)[1] // g
    if lead < 0:
        g = -g
    return {j: v // g for j, v in ints} if g != 1 else dict(ints)


def _int_rows(matrix: RationalMatrix):
    """Integer-scaled, gcd-stripped copies of the nonzero rows."""
    out = {}
    for i, row in matrix.rows.items():
        den = 1
        for v in row.values():
            if isinstance(v, Fraction):
                den = lcm(den, v.denominator)
        if den == 1:
            ints = dict(row)
        else:
            ints = {c: int(v * den) for c, v in row.items()}
        g = 0
        for v in ints.values():
            g = gcd(g, v)
            if g == 1:
                break
        if g > 1:
            ints = {c: v // g for c, v in ints.items()}
        out[i] = ints
    return out


class _Eliminator:
    """Fraction-free elimination on integer sparse rows.

    Keeps a column index (column -> set of active row ids) so pivots can be
    chosen by current column support and rows holding a pivot column can be
    found without scanning.
    """

    def __init__(self, int_rows, ncols):
        self.rows = int_rows
        self.ncols = ncols
        col_rows = {}
        for rid, row in int_rows.items():
            for c in row:
                s = col_rows.get(c)
                if s is None:
                    col_rows[c] = {rid}
                else:
                    s.add(rid)
        self.col_rows = col_rows

    def _pick_pivot_row(self, c):
        # cheapest pivot: small entry first, then sparse row, then stable id
        best = None
        key = None
        for rid in self.col_rows[c]:
            row = self.rows[rid]
            k = (abs(row[c]).bit_length(), len(row), rid)
            if key is None or k < key:
                best, key = rid, k
        return best

    def _eliminate(self, c, prid):
        """Remove the pivot row and clear column c from all other rows."""
        prow = self.rows.pop(prid)
        col_rows = self.col_rows
        for cc in prow:
            col_rows[cc].discard(prid)
        pval = prow[c]
        for rid in list(col_rows[c]):
            row = self.rows[rid]
            rval = row.pop(c)
            col_rows[c].discard(rid)
            if pval == 1:
                new = dict(row)
            elif pval == -1:
                new = {cc: -v for cc, v in row.items()}
            else:
                new = {cc: v * pval for cc, v in row.items()}
            for cc, pv in prow.items():
                if cc == c:
                    continue
                cur = new.get(cc, 0) - pv * rval
                if cur:
                    new[cc] = cur
                else:
                    new.pop(cc, None)
            g = 0
            for v in new.values():
                g = gcd(g, v)
                if g == 1:
                    break
            if g > 1:
                new = {cc: v // g for cc, v in new.items()}
            for cc in row:
                if cc not in new:
                    col_rows[cc].discard(rid)
            for cc in new:
                if cc not in row:
                    col_rows[cc].add(rid)
            if new:
                self.rows[rid] = new
            else:
                del self.rows[rid]
        return prow

    def sweep(self):
        """Eliminate columns in index order; return [(pivot_col, pivot_row)].

        The pivot rows form a row echelon basis of the row space: each one
        leads at its pivot column and is supported on later columns only.
        """
        pivots = []
        for c in range(self.ncols):
            rids = self.col_rows.get(c)
            if not rids:
                continue
            prid = self._pick_pivot_row(c)
            prow = self._eliminate(c, prid)
            pivots.append((c, prow))
        return pivots

    def rank(self) -> int:
        """Pivot count under a greedy sparsest-column order."""
        heap = [(len(rids), c) for c, rids in self.col_rows.items() if rids]
        heapq.heapify(heap)
        rank = 0
        steps = 0
        while heap:
            k, c = heapq.heappop(heap)
            rids = self.col_rows.get(c)
            if not rids:
                continue
            cur = len(rids)
            if cur > k:
                # support grew since the snapshot; requeue with the true size
                heapq.heappush(heap, (cur, c))
                continue
            prid = self._pick_pivot_row(c)
            self._eliminate(c, prid)
            rank += 1
            steps += 1
            if steps % 64 == 0 and self._dense_worthwhile():
                return rank + self._dense_rank()
        return rank

    def _dense_worthwhile(self):
        nrows = len(self.rows)
        if not nrows or nrows > 1200:
            return False
        nnz = sum(len(r) for r in self.rows.values())
        ncols_active = sum(1 for s in self.col_rows.values() if s)
        if ncols_active > 1200:
            return False
        return nnz * 2 > nrows * ncols_active

    def _dense_rank(self):
        cols = sorted(c for c, s in self.col_rows.items() if s)
        cmap = {c: k for k, c in enumerate(cols)}
        mat = []
        for row in self.rows.values():
            dense = [0] * len(cols)
            for c, v in row.items():
                dense[cmap[c]] = v
            mat.append(dense)
        return _dense_int_rank(mat)


def _dense_int_rank(mat):
    """Fraction-free elimination on a dense list-of-lists integer matrix."""
    if not mat:
        return 0
    ncols = len(mat[0])
    rank = 0
    r = 0
    for c in range(ncols):
        pivot = None
        best = None
        for i in range(r, len(mat)):
            v = mat[i][c]
            if v:
                k = abs(v).bit_length()
                if best is None or k < best:
                    pivot, best = i, k
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        prow = mat[r]
        pval = prow[c]
        for i in range(r + 1, len(mat)):
            row = mat[i]
            rval = row[c]
            if not rval:
                continue
            g = 0
            for j in range(c, ncols):
                row[j] = row[j] * pval - prow[j] * rval
                g = gcd(g, row[j])
            if g > 1:
                for j in range(c, ncols):
                    row[j] //= g
        r += 1
        rank += 1
        if r == len(mat):
            break
    return rank


def rank(matrix: RationalMatrix) -> int:
    if not matrix.rows:
        return 0
    # elimination retires one row per pivot, so work on the short side
    if matrix.nrows > matrix.ncols:
        matrix = matrix.transpose()
    return _Eliminator(_int_rows(matrix), matrix.ncols).rank()


def kernel_basis(matrix: RationalMatrix):
    """Basis of the right kernel {x : A x = 0} as normalized dict vectors.

    Free columns are processed in increasing index order, so the result is
    deterministic; each vector has 1 at "its" free column before
    normalization.
    """
    elim = _Eliminator(_int_rows(matrix), matrix.ncols)
    pivots = elim.sweep()
    pivot_cols = {c for c, _ in pivots}
    basis = []
    for f in range(matrix.ncols):
        if f in pivot_cols:
            continue
        x = {f: Fraction(1)}
        for c, row in reversed(pivots):
            s = Fraction(0)
            for j, v in row.items():
                if j != c and j in x:
                    s += v * x[j]
            if s:
                x[c] = -s / row[c]
        basis.append(normalize_int_vector(x))
    return basis


def image_basis(matrix: RationalMatrix):
    """Basis of the column space: the original pivot columns, normalized.

    Pivot columns are found by a fixed left-to-right sweep, so which columns
    are returned is deterministic and depends only on the matrix.
    """
    elim = _Eliminator(_int_rows(matrix), matrix.ncols)
    pivots = elim.sweep()
    cols = {c: {} for c, _ in pivots}
    for i, row in matrix.rows.items():
        for j, v in row.items():
            if j in cols:
                cols[j][i] = v
    return [normalize_int_vector(cols[c]) for c, _ in pivots]


def _as_dict(vec):
    if isinstance(vec, dict):
        return vec
    return {j: v for j, v in enumerate(vec) if v}


def solve_in_span(basis, v, ncols=None):
    """Coordinates c with sum c[i] * basis[i] == v, or None if v is outside.

    ``basis`` must be linearly independent.  Vectors may be dicts or dense
    sequences.  "Not in span" is an ordinary result (None), not an error;
    callers that treat it as impossible should raise on it themselves.
    """
    basis = [_as_dict(b) for b in basis]
    v = _as_dict(v)
    if ncols is None:
        ncols = 0
        for vec in basis:
            if vec:
                ncols = max(ncols, max(vec) + 1)
        if v:
            ncols = max(ncols, max(v) + 1)
    return RowSpanSolver(basis, ncols).coords(v, verify=True)


class RowSpanSolver:
    """Coordinates of vectors with respect to a fixed independent row family.

    ``rows`` is a list of integer dict vectors of length ``ncols``.  The
    constructor locates pivot columns by a deterministic sweep and inverts
    the square pivot submatrix S once with a fraction-free Jordan pass,
    producing an integer matrix T and scalar L with (T/L) @ S = I.  Each
    ``coords`` call is then a dense k x k product.

    Restriction to the pivot columns is injective on the row span, so the
    returned coordinates are correct whenever the input lies in the span;
    pass verify=True to check that membership exactly.
    """

    def __init__(self, rows, ncols):
        self.rows = rows
        self.ncols = ncols
        k = len(rows)
        self.k = k
        elim = _Eliminator({i: dict(r) for i, r in enumerate(rows)}, ncols)
        pivots = elim.sweep()
        if len(pivots) != k:
            raise ValueError("rows are linearly dependent")
        self.piv = [c for c, _ in pivots]
        aug = [
            [rows[i].get(c, 0) for c in self.piv]
            + [1 if j == i else 0 for j in range(k)]
            for i in range(k)
        ]
        for j in range(k):
            pivot = None
            best = None
            for i in range(j, k):
                v = aug[i][j]
                if v:
                    b = abs(v).bit_length()
                    if best is None or b < best:
                        pivot, best = i, b
            if pivot is None:
                raise ArithmeticError("pivot submatrix is singular")
            aug[j], aug[pivot] = aug[pivot], aug[j]
            prow = aug[j]
            pval = prow[j]
            for i in range(k):
                if i == j:
                    continue
                row = aug[i]
                rval = row[j]
                if not rval:
                    continue
                g = 0
                for t in range(2 * k):
                    row[t] = row[t] * pval - prow[t] * rval
                    g = gcd(g, row[t])
                if g > 1:
                    for t in range(2 * k):
                        row[t] //= g
        diag = [aug[j][j] for j in range(k)]
        L = 1
        for d in diag:
            L = lcm(L, abs(d))
        self.scale = L
        self.tscaled = []
        for j in range(k):
            d = diag[j]
            f = L // d if d > 0 else -(L // -d)
            self.tscaled.append([f * aug[j][k + i] for i in range(k)])

    def coords(self, vec, verify: bool = False):
        """Row vector c with sum_i c[i] * rows[i] == vec, as exact scalars.

        Returns None when verify=True and vec is outside the span.
        """
        k = self.k
        if isinstance(vec, dict):
            vp = [vec.get(c, 0) for c in self.piv]
        else:
            vp = [vec[c] for c in self.piv]
        out = []
        L = self.scale
        for i in range(k):
            s = 0
            for j in range(k):
                vj = vp[j]
                if vj:
                    s += vj * self.tscaled[j][i]
            out.append(_norm(Fraction(s, L)) if s % L else s // L)
        if verify:
            recon = {}
            for i, ci in enumerate(out):
                if not ci:
                    continue
                for j, v in self.rows[i].items():
                    recon[j] = recon.get(j, 0) + ci * v
            recon = {j: v for j, v in recon.items() if v}
            target = (
                {j: v for j, v in vec.items() if v}
                if isinstance(vec, dict)
                else {j: v for j, v in enumerate(vec) if v}
            )
            if len(recon) != len(target) or any(
                recon.get(j, 0) != v for j, v in target.items()
            ):
                return None
        return out

    def coords_block(self, block_rows):
        """coords() for many integer dict vectors; skips the Fraction path
        when every coordinate is integral, which is the common case."""
        return [self.coords(v) for v in block_rows]
