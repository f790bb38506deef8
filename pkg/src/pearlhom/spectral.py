"""Maslov-filtration spectral sequence of a Novikov-specialized complex.

The chain modules of a Novikov complex expand, over a finite degree window,
into based vector spaces with one basis element per (critical point, power of
t); the element (q, t^m) sits in degree |q| - m*N_L and filtration level
p = -m, so that the filtration is increasing, the boundary preserves it, and
every quantum term strictly drops it.  Pages are computed as the classical
subquotients

    Z^r(p,q) = F_p C_{p+q}  intersect  d^{-1} F_{p-r} C_{p+q-1}
    E^r(p,q) = Z^r(p,q) / ( Z^{r-1}(p-1,q+1) + d Z^{r-1}(p+r-1,q-r+2) )

over the coefficient field, with the induced differentials d_r of bidegree
(-r, r-1).  Truncation to a window is exact at interior degrees: a cell at
degree d only consults chains at degrees d-1, d, d+1, so everything inside
the window margins is computed exactly; the margins absorb the boundary
effects and only the central band is reported.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .rings import Ring, LaurentRing
from .model import GradedComplex
from .homology import EngineError, HomologyResult


class FiltrationError(ValueError):
    """Boundary violates the filtration, or the window is too small."""


# ---------------------------------------------------------------------------
# dense linear algebra over a field

class _Linalg:
    def __init__(self, fld: Ring):
        self.f = fld

    def rref(self, vectors):
        """(reduced row basis, pivot indices) of the span."""
        f = self.f
        rows = [list(v) for v in vectors if any(not f.is_zero(x) for x in v)]
        basis, pivots = [], []
        for v in rows:
            v = self._reduce(v, basis, pivots)
            piv = next((i for i, x in enumerate(v) if not f.is_zero(x)), None)
            if piv is None:
                continue
            inv = f.inv(v[piv])
            v = [f.mul(inv, x) for x in v]
            for b in basis:
                if not f.is_zero(b[piv]):
                    c = b[piv]
                    for i in range(len(b)):
                        b[i] = f.sub(b[i], f.mul(c, v[i]))
            basis.append(v)
            pivots.append(piv)
        order = sorted(range(len(basis)), key=lambda i: pivots[i])
        return [basis[i] for i in order], [pivots[i] for i in order]

    def _reduce(self, v, basis, pivots):
        f = self.f
        v = list(v)
        for b, piv in zip(basis, pivots):
            if not f.is_zero(v[piv]):
                c = v[piv]
                for i in range(len(v)):
                    v[i] = f.sub(v[i], f.mul(c, b[i]))
        return v

    def dim(self, vectors) -> int:
        return len(self.rref(vectors)[0])

    def complement_reps(self, big, small):
        """Vectors extending a basis of span(small) to span(small + big);
        their classes form a basis of the quotient."""
        basis, pivots = self.rref(small)
        reps = []
        for v in big:
            r = self._reduce(v, basis, pivots)
            piv = next((i for i, x in enumerate(r) if not self.f.is_zero(x)), None)
            if piv is None:
                continue
            inv = self.f.inv(r[piv])
            r = [self.f.mul(inv, x) for x in r]
            basis.append(r)
            pivots.append(piv)
            reps.append(r)
        return reps

    def coordinates(self, basis_vectors, target):
        """Coefficients expressing target in the given independent vectors."""
        f = self.f
        n = len(target)
        k = len(basis_vectors)
        aug = [[basis_vectors[j][i] for j in range(k)] + [target[i]]
               for i in range(n)]
        pivots = []
        r = 0
        for col in range(k):
            piv = next((i for i in range(r, n) if not f.is_zero(aug[i][col])), None)
            if piv is None:
                continue
            aug[r], aug[piv] = aug[piv], aug[r]
            inv = f.inv(aug[r][col])
            aug[r] = [f.mul(inv, x) for x in aug[r]]
            for i in range(n):
                if i != r and not f.is_zero(aug[i][col]):
                    cc = aug[i][col]
                    for t in range(k + 1):
                        aug[i][t] = f.sub(aug[i][t], f.mul(cc, aug[r][t]))
            pivots.append(col)
            r += 1
        for i in range(r, n):
            if not f.is_zero(aug[i][k]):
                raise FiltrationError("vector not in the expected subspace")
        coords = [f.zero()] * k
        for i, col in enumerate(pivots):
            coords[col] = aug[i][k]
        return coords


# ---------------------------------------------------------------------------
# the filtered, windowed complex

@dataclass(frozen=True)
class WindowElement:
    gen_id: str
    t_power: int
    degree: int

    @property
    def filtration(self) -> int:
        return -self.t_power


class FilteredComplex:
    """Expansion of a Novikov complex over a field to a degree window, with
    the Maslov filtration on the basis and filtration-preserving boundary."""

    def __init__(self, c: GradedComplex, window=None):
        ring = c.ring
        if not isinstance(ring, LaurentRing) or not ring.base.is_field:
            raise EngineError(
                "the spectral sequence needs a Novikov-specialized complex "
                f"over a field; got {ring.name}")
        if ring.t_degree is None:
            raise EngineError("Laurent complex without a degree for t")
        self.complex = c
        self.field = ring.base
        self.n_period = -ring.t_degree
        gen_degrees = [g.degree for g in c.generators]
        if window is None:
            window = (min(gen_degrees) - 2 * self.n_period,
                      max(gen_degrees) + 2 * self.n_period)
        self.window = window
        lo, hi = window
        if lo + 1 > min(gen_degrees) - 1 or hi - 1 < max(gen_degrees) + 1:
            raise FiltrationError(
                f"window {window} leaves no margin around the generator "
                f"degrees {sorted(set(gen_degrees))}")
        self.basis: dict = {}
        for d in range(lo, hi + 1):
            elems = []
            for g in c.generators:
                num = g.degree - d
                if num % self.n_period == 0:
                    elems.append(WindowElement(g.id, num // self.n_period, d))
            elems.sort(key=lambda e: e.filtration)
            self.basis[d] = elems
        self.matrices: dict = {}
        for d in range(lo + 1, hi + 1):
            self.matrices[d] = self._boundary_matrix(d)
        self._check_filtration()

    def _boundary_matrix(self, d):
        f = self.field
        src = self.basis[d]
        tgt = self.basis[d - 1]
        rows = []
        for te in tgt:
            row = []
            for se in src:
                elem = self.complex.entry(se.gen_id, te.gen_id)
                v = elem.coefficient(te.t_power - se.t_power) if elem else None
                row.append(f.zero() if v is None else v)
            rows.append(row)
        return rows

    def _check_filtration(self):
        f = self.field
        lo, hi = self.window
        for d in range(lo + 1, hi + 1):
            m = self.matrices[d]
            for i, te in enumerate(self.basis[d - 1]):
                for j, se in enumerate(self.basis[d]):
                    if not f.is_zero(m[i][j]) and te.filtration > se.filtration:
                        raise FiltrationError(
                            f"boundary raises filtration: ({se.gen_id}, "
                            f"t^{se.t_power}) -> ({te.gen_id}, t^{te.t_power})")

    def filtration_levels(self, d):
        return [e.filtration for e in self.basis.get(d, [])]

    def interior_degrees(self):
        lo, hi = self.window
        return range(lo + 1, hi)

    def safe_degrees(self):
        """Degrees where the truncated computation agrees with the full
        complex: the generator-degree band, kept away from both margins."""
        gen_degrees = [g.degree for g in self.complex.generators]
        return range(min(gen_degrees), max(gen_degrees) + 1)


def maslov_filtration(c: GradedComplex, window=None) -> FilteredComplex:
    """Assign filtration levels p = -(power of t) and verify the boundary
    preserves the (increasing) filtration."""
    return FilteredComplex(c, window)


# ---------------------------------------------------------------------------
# pages

@dataclass
class SpectralPage:
    r: int
    entries: dict                  # (p, q) -> dimension
    differentials: dict = field(default_factory=dict)  # (p, q) -> matrix

    def dim(self, p, q) -> int:
        return self.entries.get((p, q), 0)

    def column_dims(self, p):
        """Nonzero entry dimensions of column p, by increasing q."""
        qs = sorted(q for (pp, q) in self.entries if pp == p)
        return [self.entries[(p, q)] for q in qs]

    def total_dim_at_degree(self, d) -> int:
        return sum(dim for (p, q), dim in self.entries.items() if p + q == d)

    def to_json_dict(self):
        return {"r": self.r,
                "entries": [{"p": p, "q": q, "dim": dim}
                            for (p, q), dim in sorted(self.entries.items())]}


class _PageComputer:
    def __init__(self, fc: FilteredComplex):
        self.fc = fc
        self.lin = _Linalg(fc.field)
        self._z_cache: dict = {}

    def chain_dim(self, d):
        return len(self.fc.basis.get(d, []))

    def boundary_of(self, d, vec):
        f = self.fc.field
        m = self.fc.matrices.get(d)
        if m is None:
            return [f.zero()] * self.chain_dim(d - 1)
        out = []
        for row in m:
            acc = f.zero()
            for a, x in zip(row, vec):
                acc = f.add(acc, f.mul(a, x))
            out.append(acc)
        return out

    def z_space(self, r, p, d):
        """Basis of Z^r at filtration p, degree d (within the window)."""
        key = (r, p, d)
        if key in self._z_cache:
            return self._z_cache[key]
        f = self.fc.field
        basis_d = self.fc.basis.get(d, [])
        n = len(basis_d)
        cols = [j for j, e in enumerate(basis_d) if e.filtration <= p]
        if r <= 0:
            vecs = [_unit_vector(f, n, j) for j in cols]
            self._z_cache[key] = vecs
            return vecs
        tgt = self.fc.basis.get(d - 1, [])
        bad_rows = [i for i, e in enumerate(tgt) if e.filtration > p - r]
        m = self.fc.matrices.get(d)
        if m is None or not bad_rows or not cols:
            vecs = [_unit_vector(f, n, j) for j in cols]
            self._z_cache[key] = vecs
            return vecs
        sub = [[m[i][j] for j in cols] for i in bad_rows]
        null = _nullspace(f, sub)
        vecs = []
        for nv in null:
            v = [f.zero()] * n
            for idx, j in enumerate(cols):
                v[j] = nv[idx]
            vecs.append(v)
        self._z_cache[key] = vecs
        return vecs

    def cell_data(self, r, p, q):
        """(representatives, boundary-part basis) of E^r at (p, q)."""
        d = p + q
        z = self.z_space(r, p, d)
        lower = self.z_space(r - 1, p - 1, d)
        image = []
        up = self.z_space(r - 1, p + r - 1, d + 1)
        for v in up:
            image.append(self.boundary_of(d + 1, v))
        b_part = lower + image
        reps = self.lin.complement_reps(z, b_part)
        return reps, b_part


def _unit_vector(f, n, j):
    v = [f.zero()] * n
    v[j] = f.one()
    return v


def _nullspace(f, m):
    """Basis of the right nullspace of a dense matrix over a field."""
    rows = len(m)
    cols = len(m[0]) if rows else 0
    if cols == 0:
        return []
    a = [list(r) for r in m]
    pivots = []
    r = 0
    for col in range(cols):
        piv = next((i for i in range(r, rows) if not f.is_zero(a[i][col])), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = f.inv(a[r][col])
        a[r] = [f.mul(inv, x) for x in a[r]]
        for i in range(rows):
            if i != r and not f.is_zero(a[i][col]):
                c = a[i][col]
                for t in range(cols):
                    a[i][t] = f.sub(a[i][t], f.mul(c, a[r][t]))
        pivots.append(col)
        r += 1
    free = [c for c in range(cols) if c not in pivots]
    out = []
    for fc in free:
        v = [f.zero()] * cols
        v[fc] = f.one()
        for i, pc in enumerate(pivots):
            v[pc] = f.neg(a[i][fc])
        out.append(v)
    return out


def compute_pages(fc: FilteredComplex, r_max: int) -> list:
    """Pages E^0 .. E^r_max with their differentials, on the interior cells.

    Raises FiltrationError when the window margins cannot absorb the
    truncation; dimensional consistency E^{r+1} = H(E^r, d_r) is asserted.
    """
    if r_max < 0:
        raise ValueError("r_max must be nonnegative")
    comp = _PageComputer(fc)
    interior = list(fc.interior_degrees())
    if not interior:
        raise FiltrationError("window too small: no interior degrees")
    cells = set()
    for d in interior:
        for e in fc.basis.get(d, []):
            cells.add((e.filtration, d - e.filtration))
    pages = []
    for r in range(r_max + 1):
        entries = {}
        reps_now = {}
        for (p, q) in sorted(cells):
            reps, b_part = comp.cell_data(r, p, q)
            if reps:
                entries[(p, q)] = len(reps)
                reps_now[(p, q)] = (reps, b_part)
        page = SpectralPage(r, entries)
        for (p, q) in sorted(entries):
            tp, tq = p - r, q + r - 1
            if (tp, tq) not in reps_now or tp + tq not in interior:
                continue
            src_reps, _ = reps_now[(p, q)]
            tgt_reps, tgt_b = reps_now[(tp, tq)]
            rows = []
            for x in src_reps:
                y = comp.boundary_of(p + q, x)
                coords = comp.lin.coordinates(
                    [list(v) for v in tgt_reps] + [list(v) for v in tgt_b], y)
                rows.append(tuple(coords[: len(tgt_reps)]))
            # matrix with columns the source representatives
            mat = tuple(tuple(rows[j][i] for j in range(len(src_reps)))
                        for i in range(len(tgt_reps)))
            page.differentials[(p, q)] = mat
        pages.append(page)
    _assert_page_consistency(fc, pages)
    return pages


def _assert_page_consistency(fc: FilteredComplex, pages):
    """d_r o d_r = 0 and E^{r+1} = H(E^r, d_r) dimensionally, checked on the
    safe central band."""
    f = fc.field
    lin = _Linalg(f)
    safe = set(fc.safe_degrees())
    for r, page in enumerate(pages):
        for (p, q), mat in page.differentials.items():
            nxt = page.differentials.get((p - r, q + r - 1))
            if nxt and mat:
                comp = _compose(f, nxt, mat)
                assert all(f.is_zero(x) for row in comp for x in row), \
                    f"d_{r} o d_{r} != 0 at {(p, q)}"
        if r + 1 < len(pages):
            for (p, q) in page.entries:
                if p + q not in safe or (p + q + 1) not in safe or (p + q - 1) not in safe:
                    continue
                dim = page.entries[(p, q)]
                out_rank = _matrix_rank(lin, page.differentials.get((p, q)))
                in_rank = _matrix_rank(
                    lin, page.differentials.get((p + r, q - r + 1)))
                expected = dim - out_rank - in_rank
                got = pages[r + 1].entries.get((p, q), 0)
                assert got == expected, (
                    f"page {r + 1} at {(p, q)}: dimension {got}, "
                    f"homology of page {r} gives {expected}")


def _compose(f, a, b):
    if not a or not b:
        return []
    return [[_dot(f, arow, [b[k][j] for k in range(len(b))])
             for j in range(len(b[0]))] for arow in a]


def _dot(f, u, v):
    acc = f.zero()
    for x, y in zip(u, v):
        acc = f.add(acc, f.mul(x, y))
    return acc


def _matrix_rank(lin, mat):
    if not mat:
        return 0
    return lin.dim([list(r) for r in zip(*mat)])


@dataclass
class ConvergenceReport:
    ok: bool
    by_degree: dict     # d -> (sum over E^last column, homology dimension)

    def __bool__(self):
        return self.ok


def convergence_check(pages, h: HomologyResult, fc: FilteredComplex
                      ) -> ConvergenceReport:
    """Sum of the final-page entries on each diagonal equals the homology
    dimension of the corresponding degree (field coefficients both sides)."""
    last = pages[-1]
    by_degree = {}
    ok = True
    for d in fc.safe_degrees():
        total = last.total_dim_at_degree(d)
        hdim = h.graded_dimension(d)
        by_degree[d] = (total, hdim)
        if total != hdim:
            ok = False
    return ConvergenceReport(ok, by_degree)
