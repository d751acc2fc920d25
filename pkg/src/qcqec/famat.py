"""Dense exact linear algebra over the GF(q^2) digit fields.

Matrices are lists of digit rows wrapped in a thin Mat class; everything is
pure Python table arithmetic, which is plenty for the matrix sizes that occur
here (a few hundred rows at the very largest).  The numerically hot paths of
the package live in the weight enumerator, not in this module.
"""

from __future__ import annotations

from qcqec.errors import SingularMatrixError
from qcqec.polyring import cyclic_shift, trim


class Mat:
    """A rows-of-digits matrix over a digit field."""

    __slots__ = ("field", "rows", "nrows", "ncols")

    def __init__(self, field, rows, ncols=None):
        self.field = field
        self.rows = [list(r) for r in rows]
        self.nrows = len(self.rows)
        if self.nrows:
            self.ncols = len(self.rows[0])
            if any(len(r) != self.ncols for r in self.rows):
                raise ValueError("ragged rows")
        else:
            if ncols is None:
                raise ValueError("empty matrix needs an explicit ncols")
            self.ncols = ncols

    @classmethod
    def zeros(cls, field, nrows, ncols):
        return cls(field, [[0] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, field, n):
        rows = [[0] * n for _ in range(n)]
        for i in range(n):
            rows[i][i] = 1
        return cls(field, rows)

    def copy(self):
        return Mat(self.field, self.rows, self.ncols)

    def __eq__(self, other):
        return (
            isinstance(other, Mat)
            and self.field is other.field
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __repr__(self):
        return f"Mat({self.nrows}x{self.ncols} over GF({self.field.Q}))"

    def is_zero(self) -> bool:
        return all(not any(r) for r in self.rows)

    def mul(self, other: "Mat") -> "Mat":
        if self.ncols != other.nrows:
            raise ValueError("dimension mismatch")
        f = self.field
        add, mul = f.add, f.mul
        bt = list(zip(*other.rows)) if other.nrows else []
        out = []
        for arow in self.rows:
            orow = []
            for bcol in bt:
                acc = 0
                for x, y in zip(arow, bcol):
                    if x and y:
                        acc = add(acc, mul(x, y))
                orow.append(acc)
            out.append(orow)
        return Mat(f, out, other.ncols)

    def add(self, other: "Mat") -> "Mat":
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("dimension mismatch")
        f = self.field
        return Mat(
            f,
            [
                [f.add(x, y) for x, y in zip(r1, r2)]
                for r1, r2 in zip(self.rows, other.rows)
            ],
            self.ncols,
        )

    def sub(self, other: "Mat") -> "Mat":
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("dimension mismatch")
        f = self.field
        return Mat(
            f,
            [
                [f.sub(x, y) for x, y in zip(r1, r2)]
                for r1, r2 in zip(self.rows, other.rows)
            ],
            self.ncols,
        )

    def transpose(self) -> "Mat":
        return Mat(self.field, [list(c) for c in zip(*self.rows)], self.nrows)

    def conj(self) -> "Mat":
        c = self.field.conj
        return Mat(self.field, [[c(x) for x in r] for r in self.rows], self.ncols)

    def dagger(self) -> "Mat":
        """Conjugate transpose with respect to the Hermitian form."""
        return self.conj().transpose()

    def row(self, i) -> tuple:
        return tuple(self.rows[i])

    def col(self, j) -> tuple:
        return tuple(r[j] for r in self.rows)


def hstack(a: Mat, b: Mat) -> Mat:
    if a.nrows != b.nrows:
        raise ValueError("row count mismatch")
    return Mat(a.field, [ra + rb for ra, rb in zip(a.rows, b.rows)],
               a.ncols + b.ncols)


def vstack(a: Mat, b: Mat) -> Mat:
    if a.ncols != b.ncols:
        raise ValueError("column count mismatch")
    return Mat(a.field, a.rows + b.rows, a.ncols)


def circulant(field, vec, nrows: int) -> Mat:
    """nrows x len(vec) matrix whose i-th row is x^i * a(x): ascending
    coefficients of a, cyclically shifted right i places."""
    vec = tuple(vec)
    return Mat(field, [cyclic_shift(vec, i) for i in range(nrows)], len(vec))


def mat_from_poly(field, n: int, coeffs, nrows: int) -> Mat:
    """Circulant of a plain polynomial padded to length n."""
    coeffs = trim(coeffs)
    if len(coeffs) > n:
        raise ValueError("polynomial does not fit in the ring")
    return circulant(field, tuple(coeffs) + (0,) * (n - len(coeffs)), nrows)


# --- elimination ------------------------------------------------------------


def _forward_eliminate(field, rows, ncols):
    """In-place row echelon form; returns the list of pivot columns."""
    add, mul, sub, inv = field.add, field.mul, field.sub, field.inv
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        iv = inv(rows[r][c])
        if iv != 1:
            rows[r] = [mul(iv, x) for x in rows[r]]
        prow = rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                coef = rows[i][c]
                rows[i] = [sub(x, mul(coef, y)) for x, y in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def rref(m: Mat) -> tuple[Mat, list[int]]:
    rows = [list(r) for r in m.rows]
    pivots = _forward_eliminate(m.field, rows, m.ncols)
    return Mat(m.field, rows, m.ncols), pivots


def rank(m: Mat) -> int:
    if m.nrows == 0:
        return 0
    rows = [list(r) for r in m.rows]
    return len(_forward_eliminate(m.field, rows, m.ncols))


def inverse(m: Mat) -> Mat:
    if m.nrows != m.ncols:
        raise ValueError("inverse of a non-square matrix")
    n = m.nrows
    aug = [list(r) + [1 if i == j else 0 for j in range(n)]
           for i, r in enumerate(m.rows)]
    pivots = _forward_eliminate(m.field, aug, n)
    if len(pivots) != n:
        raise SingularMatrixError(f"matrix of rank {len(pivots)} < {n}")
    return Mat(m.field, [r[n:] for r in aug], n)


def nullspace(m: Mat) -> Mat:
    """Basis of the right kernel {v : M v^T = 0}, one vector per row."""
    red, pivots = rref(m)
    free = [c for c in range(m.ncols) if c not in pivots]
    f = m.field
    basis = []
    for fc in free:
        v = [0] * m.ncols
        v[fc] = 1
        for r, pc in enumerate(pivots):
            v[pc] = f.neg(red.rows[r][fc])
        basis.append(v)
    return Mat(f, basis, m.ncols)


def solve_right(m: Mat, rhs: list[int]) -> list[int] | None:
    """One solution v of M v^T = rhs^T, or None if inconsistent."""
    aug = [list(r) + [b] for r, b in zip(m.rows, rhs)]
    pivots = _forward_eliminate(m.field, aug, m.ncols)
    v = [0] * m.ncols
    for r, pc in enumerate(pivots):
        v[pc] = aug[r][m.ncols]
    for i in range(len(pivots), m.nrows):
        if aug[i][m.ncols]:
            return None
    return v


def row_space_contains(m: Mat, vec) -> bool:
    """Exact membership of vec in the row space of m."""
    stacked = Mat(m.field, m.rows + [list(vec)], m.ncols)
    return rank(stacked) == rank(m)


# --- derived forms -----------------------------------------------------------


def gram_hermitian(g: Mat) -> Mat:
    """G G^dagger, the Gram matrix of the Hermitian inner product."""
    return g.mul(g.dagger())


def hermitian_dual_basis(g: Mat) -> Mat:
    """Rows spanning {v : <u, v>_h = 0 for all rows u}, i.e. the kernel of
    the conjugated generator."""
    return nullspace(g.conj())


def hull_dim(g: Mat) -> int:
    """Dimension of Hull_h = C n C^perp_h for the row space C of g.

    Computed as k - rank(G G^dagger) and, independently, as a direct
    subspace intersection; the two must agree or something is deeply wrong,
    so a disagreement raises instead of returning either answer.
    """
    k = rank(g)
    if k != g.nrows:
        raise ValueError("hull_dim expects a full-row-rank generator matrix")
    via_gram = k - rank(gram_hermitian(g))
    dual = hermitian_dual_basis(g)
    stacked = Mat(g.field, g.rows + dual.rows, g.ncols)
    via_intersection = k + dual.nrows - rank(stacked)
    if via_gram != via_intersection:
        raise AssertionError(
            f"hull dimension cross-check failed: {via_gram} != {via_intersection}"
        )
    return via_gram


# --- characteristic polynomial ----------------------------------------------


def char_poly(m: Mat) -> tuple[int, ...]:
    """Characteristic polynomial det(xI - M), ascending digit coefficients.

    The matrix is first brought to upper Hessenberg form by similarity
    transformations (exact pivoting, any field), then the polynomial follows
    from the leading-principal-minor recurrence, so no polynomial-entry
    elimination is ever needed.
    """
    if m.nrows != m.ncols:
        raise ValueError("characteristic polynomial of a non-square matrix")
    f = m.field
    n = m.nrows
    if n == 0:
        return (1,)
    h = [list(r) for r in m.rows]
    add, sub, mul, inv = f.add, f.sub, f.mul, f.inv

    for j in range(n - 2):
        piv = None
        for i in range(j + 1, n):
            if h[i][j]:
                piv = i
                break
        if piv is None:
            continue
        if piv != j + 1:
            h[piv], h[j + 1] = h[j + 1], h[piv]
            for row in h:
                row[piv], row[j + 1] = row[j + 1], row[piv]
        iv = inv(h[j + 1][j])
        for i in range(j + 2, n):
            if not h[i][j]:
                continue
            c = mul(h[i][j], iv)
            hi, hj1 = h[i], h[j + 1]
            for t in range(n):
                hi[t] = sub(hi[t], mul(c, hj1[t]))
            for t in range(n):
                h[t][j + 1] = add(h[t][j + 1], mul(c, h[t][i]))

    # p_k = (x - h_kk) p_{k-1} - sum_i h_ik (prod_j h_{j,j-1}) p_{i-1}
    ps = [(1,)]
    for k in range(1, n + 1):
        hkk = h[k - 1][k - 1]
        prev = ps[k - 1]
        cur = [0] * (k + 1)
        for t, c in enumerate(prev):
            cur[t + 1] = c
            cur[t] = add(cur[t], mul(f.neg(hkk), c))
        prod = 1
        for i in range(k - 1, 0, -1):
            prod = mul(prod, h[i][i - 1])
            if prod == 0:
                break
            coef = mul(h[i - 1][k - 1], prod)
            if coef:
                for t, c in enumerate(ps[i - 1]):
                    cur[t] = sub(cur[t], mul(coef, c))
        ps.append(tuple(cur))
    return ps[n]
