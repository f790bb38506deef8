"""Exact matrices and normal forms over Euclidean domains.

Matrices are dense with entries in a single declared ring; sizes here are desk
scale (tens of rows), so the classical Smith reduction with full transform
bookkeeping is entirely adequate.  ``smith_normal_form`` returns invertible
U, V (with their inverses) such that U*M*V is diagonal with a divisibility
chain; ``homology_at_degree`` turns a pair of consecutive boundary matrices
into invariant factors of ker/im.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .rings import Ring, RingError, ZZ, QQ


class ExactMatrix:
    """Immutable dense matrix over a declared ring."""

    __slots__ = ("ring", "rows", "cols", "entries")

    def __init__(self, ring: Ring, entries, rows=None, cols=None):
        entries = tuple(tuple(row) for row in entries)
        if rows is None:
            rows = len(entries)
        if cols is None:
            cols = len(entries[0]) if entries else 0
        if len(entries) != rows or any(len(r) != cols for r in entries):
            raise ValueError("ragged matrix data")
        self.ring = ring
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def zeros(cls, ring: Ring, rows: int, cols: int):
        z = ring.zero()
        return cls(ring, [[z] * cols for _ in range(rows)], rows, cols)

    @classmethod
    def identity(cls, ring: Ring, n: int):
        z, o = ring.zero(), ring.one()
        return cls(ring, [[o if i == j else z for j in range(n)]
                          for i in range(n)], n, n)

    @classmethod
    def from_int_rows(cls, ring: Ring, int_rows):
        return cls(ring, [[ring.from_int(x) for x in row] for row in int_rows])

    def at(self, i: int, j: int):
        return self.entries[i][j]

    def row(self, i: int):
        return self.entries[i]

    def mul(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.ring != other.ring:
            raise RingError("matrix product over mismatched rings")
        if self.cols != other.rows:
            raise ValueError(
                f"shape mismatch {self.rows}x{self.cols} * {other.rows}x{other.cols}")
        R = self.ring
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = R.zero()
                for k in range(self.cols):
                    acc = R.add(acc, R.mul(self.entries[i][k], other.entries[k][j]))
                row.append(acc)
            out.append(row)
        return ExactMatrix(R, out, self.rows, other.cols)

    def add(self, other: "ExactMatrix") -> "ExactMatrix":
        R = self.ring
        return ExactMatrix(R, [[R.add(a, b) for a, b in zip(r1, r2)]
                               for r1, r2 in zip(self.entries, other.entries)])

    def neg(self) -> "ExactMatrix":
        R = self.ring
        return ExactMatrix(R, [[R.neg(a) for a in row] for row in self.entries])

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.ring,
                           [[self.entries[i][j] for i in range(self.rows)]
                            for j in range(self.cols)], self.cols, self.rows)

    def map_entries(self, ring: Ring, fn) -> "ExactMatrix":
        return ExactMatrix(ring, [[fn(a) for a in row] for row in self.entries],
                           self.rows, self.cols)

    def is_zero(self) -> bool:
        R = self.ring
        return all(R.is_zero(a) for row in self.entries for a in row)

    def first_nonzero(self):
        R = self.ring
        for i, row in enumerate(self.entries):
            for j, a in enumerate(row):
                if not R.is_zero(a):
                    return i, j, a
        return None

    def __eq__(self, other):
        return (isinstance(other, ExactMatrix) and self.ring == other.ring
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.ring, self.entries))

    def __repr__(self):
        body = "; ".join(" ".join(repr(a) for a in row) for row in self.entries)
        return f"ExactMatrix({self.ring.name}, {self.rows}x{self.cols}: [{body}])"


@dataclass
class SNFResult:
    matrix: ExactMatrix       # the diagonal form U * M * V
    U: ExactMatrix
    Uinv: ExactMatrix
    V: ExactMatrix
    Vinv: ExactMatrix

    @property
    def diagonal(self):
        d = []
        m = self.matrix
        for i in range(min(m.rows, m.cols)):
            d.append(m.at(i, i))
        return d

    def nonzero_diagonal(self):
        R = self.matrix.ring
        return [x for x in self.diagonal if not R.is_zero(x)]

    @property
    def rank(self) -> int:
        return len(self.nonzero_diagonal())


class _Reducer:
    """Mutable Smith reduction state with transform bookkeeping."""

    def __init__(self, m: ExactMatrix):
        self.R = m.ring
        self.a = [list(row) for row in m.entries]
        self.rows, self.cols = m.rows, m.cols
        self.U = [list(r) for r in ExactMatrix.identity(self.R, m.rows).entries]
        self.Uinv = [list(r) for r in ExactMatrix.identity(self.R, m.rows).entries]
        self.V = [list(r) for r in ExactMatrix.identity(self.R, m.cols).entries]
        self.Vinv = [list(r) for r in ExactMatrix.identity(self.R, m.cols).entries]

    def swap_rows(self, i, j):
        if i == j:
            return
        self.a[i], self.a[j] = self.a[j], self.a[i]
        self.U[i], self.U[j] = self.U[j], self.U[i]
        for row in self.Uinv:
            row[i], row[j] = row[j], row[i]

    def swap_cols(self, i, j):
        if i == j:
            return
        for row in self.a:
            row[i], row[j] = row[j], row[i]
        for row in self.V:
            row[i], row[j] = row[j], row[i]
        self.Vinv[i], self.Vinv[j] = self.Vinv[j], self.Vinv[i]

    def addmul_row(self, i, j, q):
        """row_i += q * row_j (i != j)."""
        R = self.R
        self.a[i] = [R.add(x, R.mul(q, y)) for x, y in zip(self.a[i], self.a[j])]
        self.U[i] = [R.add(x, R.mul(q, y)) for x, y in zip(self.U[i], self.U[j])]
        nq = R.neg(q)
        for row in self.Uinv:
            row[j] = R.add(row[j], R.mul(nq, row[i]))

    def addmul_col(self, i, j, q):
        """col_i += q * col_j (i != j)."""
        R = self.R
        for row in self.a:
            row[i] = R.add(row[i], R.mul(q, row[j]))
        for row in self.V:
            row[i] = R.add(row[i], R.mul(q, row[j]))
        nq = R.neg(q)
        self.Vinv[j] = [R.add(x, R.mul(nq, y))
                        for x, y in zip(self.Vinv[j], self.Vinv[i])]

    def scale_row(self, i, u):
        R = self.R
        uinv = R.inv(u)
        self.a[i] = [R.mul(u, x) for x in self.a[i]]
        self.U[i] = [R.mul(u, x) for x in self.U[i]]
        for row in self.Uinv:
            row[i] = R.mul(row[i], uinv)


def smith_normal_form(m: ExactMatrix) -> SNFResult:
    """U*m*V = diag(d_1, ..., d_r, 0, ...) with d_i | d_{i+1} over a
    Euclidean domain; diagonal entries are canonical associates.

    Raises RingError for non-Euclidean coefficient rings (Z[t,t^-1], group
    rings): callers fall back to the principal-cokernel path or specialize to
    a field first.
    """
    R = m.ring
    if not R.is_euclidean:
        raise RingError(f"Smith normal form needs a Euclidean domain, got {R.name}")
    st = _Reducer(m)
    n = min(m.rows, m.cols)
    t = 0
    while t < n:
        pivot = _smallest_entry(st, t)
        if pivot is None:
            break
        pi, pj = pivot
        st.swap_rows(t, pi)
        st.swap_cols(t, pj)
        while True:
            if _clear_once(st, t):
                continue
            bad = _divisibility_defect(st, t)
            if bad is None:
                break
            # fold the offending row into the pivot row and re-clear
            st.addmul_row(t, bad, R.one())
        t += 1
    for i in range(n):
        d = st.a[i][i]
        if not R.is_zero(d):
            u, canon = R.unit_normalize(d)
            if not R.eq(u, R.one()):
                st.scale_row(i, R.inv(u))
    return SNFResult(ExactMatrix(R, st.a), ExactMatrix(R, st.U),
                     ExactMatrix(R, st.Uinv), ExactMatrix(R, st.V),
                     ExactMatrix(R, st.Vinv))


def _smallest_entry(st: _Reducer, t: int):
    R = st.R
    best, best_size = None, None
    for i in range(t, st.rows):
        for j in range(t, st.cols):
            x = st.a[i][j]
            if R.is_zero(x):
                continue
            s = R.size(x)
            if best is None or s < best_size:
                best, best_size = (i, j), s
    return best


def _clear_once(st: _Reducer, t: int) -> bool:
    """One sweep clearing column t and row t against the pivot; returns True
    if a remainder replaced the pivot (caller restarts)."""
    R = st.R
    for i in range(t + 1, st.rows):
        x = st.a[i][t]
        if R.is_zero(x):
            continue
        q, r = R.quorem(x, st.a[t][t])
        st.addmul_row(i, t, R.neg(q))
        if not R.is_zero(r):
            st.swap_rows(t, i)
            return True
    for j in range(t + 1, st.cols):
        x = st.a[t][j]
        if R.is_zero(x):
            continue
        q, r = R.quorem(x, st.a[t][t])
        st.addmul_col(j, t, R.neg(q))
        if not R.is_zero(r):
            st.swap_cols(t, j)
            return True
    return False


def _divisibility_defect(st: _Reducer, t: int):
    """Row index whose entries the pivot fails to divide, or None."""
    R = st.R
    d = st.a[t][t]
    for i in range(t + 1, st.rows):
        for j in range(t + 1, st.cols):
            if not R.is_zero(st.a[i][j]) and not R.divides(d, st.a[i][j]):
                return i
    return None


@dataclass
class InvariantFactors:
    """ker/im of one degree of a complex: free rank plus torsion chain."""

    free_rank: int
    torsion: list

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def __repr__(self):
        return f"InvariantFactors(free={self.free_rank}, torsion={self.torsion})"


class CompositionError(ValueError):
    """d_out * d_in != 0; carries a witness entry."""

    def __init__(self, i, j, value):
        self.witness = (i, j, value)
        super().__init__(
            f"boundary composition is nonzero at ({i}, {j}): {value!r}")


def homology_at_degree(d_in: ExactMatrix, d_out: ExactMatrix) -> InvariantFactors:
    """Invariant factors of ker(d_out)/im(d_in) over a Euclidean domain.

    d_in maps into the middle module (its rows), d_out maps out of it (its
    columns); the composition d_out * d_in must vanish.
    """
    R = d_out.ring
    if R != d_in.ring:
        raise RingError("boundary matrices over different rings")
    if d_in.rows != d_out.cols:
        raise ValueError("middle dimensions disagree")
    comp = d_out.mul(d_in)
    nz = comp.first_nonzero()
    if nz is not None:
        raise CompositionError(*nz)
    c = d_out.cols
    snf_out = smith_normal_form(d_out)
    k = snf_out.rank
    # kernel of d_out is spanned by the last c-k columns of V
    rel = snf_out.Vinv.mul(d_in)
    # over a domain the composition check forces the first k coordinate rows
    # of d_in (w.r.t. the kernel-adapted basis) to vanish
    assert all(R.is_zero(rel.at(i, j))
               for i in range(k) for j in range(rel.cols))
    B = ExactMatrix(R, [rel.row(i) for i in range(k, c)], c - k, rel.cols)
    snf_B = smith_normal_form(B)
    torsion = [d for d in snf_B.nonzero_diagonal() if not R.is_unit(d)]
    return InvariantFactors(free_rank=(c - k) - snf_B.rank, torsion=torsion)


def matrix_rank(m: ExactMatrix) -> int:
    return smith_normal_form(m).rank


def kernel_basis(m: ExactMatrix) -> list:
    """Basis column vectors of ker(m) over a Euclidean domain."""
    snf = smith_normal_form(m)
    k = snf.rank
    return [[snf.V.at(i, j) for i in range(m.cols)] for j in range(k, m.cols)]


def det(m: ExactMatrix):
    """Exact determinant via Gaussian elimination over Q (entries must embed:
    Z or Q); used by the test suite to certify unimodular transforms."""
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    if m.ring == ZZ:
        rows = [[Fraction(x) for x in row] for row in m.entries]
    elif m.ring == QQ:
        rows = [[Fraction(x) for x in row] for row in m.entries]
    else:
        raise RingError(f"det helper supports Z and Q, got {m.ring.name}")
    n = m.rows
    sign = 1
    d = Fraction(1)
    for col in range(n):
        piv = next((i for i in range(col, n) if rows[i][col] != 0), None)
        if piv is None:
            return 0 if m.ring == ZZ else Fraction(0)
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            sign = -sign
        d *= rows[col][col]
        inv = 1 / rows[col][col]
        for i in range(col + 1, n):
            f = rows[i][col] * inv
            if f:
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[col])]
    d *= sign
    if m.ring == ZZ:
        assert d.denominator == 1
        return d.numerator
    return d
