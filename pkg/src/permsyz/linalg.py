"""Exact linear algebra over the rationals.

Matrices are stored sparsely (one entry dict per column); vectors are sparse
dicts.  Everything is computed with fractions.Fraction -- the modular rank is
only a screen and never the source of truth.
"""

from fractions import Fraction


class StabilityError(ValueError):
    """A subspace claimed stable under a group element is not."""


class ExactMatrix:
    """Sparse rows x cols matrix of exact rationals, a map Q^cols -> Q^rows."""

    __slots__ = ("rows", "cols", "coldata")

    def __init__(self, rows: int, cols: int, entries=None):
        self.rows = rows
        self.cols = cols
        self.coldata = [dict() for _ in range(cols)]
        if entries:
            for r, c, v in entries:
                self[r, c] = v

    @classmethod
    def from_dense(cls, data):
        rows = len(data)
        cols = len(data[0]) if rows else 0
        m = cls(rows, cols)
        for r, row in enumerate(data):
            for c, v in enumerate(row):
                if v:
                    m[r, c] = v
        return m

    @classmethod
    def identity(cls, k):
        m = cls(k, k)
        for i in range(k):
            m[i, i] = Fraction(1)
        return m

    def __getitem__(self, rc):
        r, c = rc
        return self.coldata[c].get(r, Fraction(0))

    def __setitem__(self, rc, v):
        r, c = rc
        if not (0 <= r < self.rows and 0 <= c < self.cols):
            raise IndexError(rc)
        v = Fraction(v)
        if v:
            self.coldata[c][r] = v
        else:
            self.coldata[c].pop(r, None)

    def column(self, c) -> dict:
        return dict(self.coldata[c])

    def row_dicts(self):
        rows = [dict() for _ in range(self.rows)]
        for c, col in enumerate(self.coldata):
            for r, v in col.items():
                rows[r][c] = v
        return rows

    def transpose(self):
        t = ExactMatrix(self.cols, self.rows)
        for c, col in enumerate(self.coldata):
            for r, v in col.items():
                t[c, r] = v
        return t

    def apply(self, vec: dict) -> dict:
        """Matrix times sparse vector."""
        out = {}
        for c, v in vec.items():
            if not v:
                continue
            for r, m in self.coldata[c].items():
                out[r] = out.get(r, Fraction(0)) + m * v
        return {r: v for r, v in out.items() if v}

    def compose(self, other):
        """self @ other."""
        if self.cols != other.rows:
            raise ValueError("dimension mismatch in compose")
        out = ExactMatrix(self.rows, other.cols)
        for c in range(other.cols):
            img = self.apply(other.coldata[c])
            for r, v in img.items():
                out[r, c] = v
        return out

    def is_zero(self) -> bool:
        return all(not col for col in self.coldata)

    def nnz(self) -> int:
        return sum(len(col) for col in self.coldata)


def _eliminate(rows):
    """Sparse Gaussian elimination on row dicts; returns (echelon rows, pivots),
    echelon rows reduced (RREF) with unit pivots, pivots strictly increasing."""
    echelon = []  # list of (pivot, rowdict)
    for row in rows:
        row = dict(row)
        for pivot, erow in echelon:
            coef = row.get(pivot)
            if coef:
                for c, v in erow.items():
                    nv = row.get(c, Fraction(0)) - coef * v
                    if nv:
                        row[c] = nv
                    else:
                        row.pop(c, None)
        if not row:
            continue
        pivot = min(row)
        inv = Fraction(1) / row[pivot]
        row = {c: v * inv for c, v in row.items()}
        # back-substitute into earlier rows
        for i, (p, erow) in enumerate(echelon):
            coef = erow.get(pivot)
            if coef:
                newrow = dict(erow)
                for c, v in row.items():
                    nv = newrow.get(c, Fraction(0)) - coef * v
                    if nv:
                        newrow[c] = nv
                    else:
                        newrow.pop(c, None)
                echelon[i] = (p, newrow)
        echelon.append((pivot, row))
    echelon.sort(key=lambda pr: pr[0])
    return [r for _, r in echelon], [p for p, _ in echelon]


class SubspaceBasis:
    """Rows spanning a subspace of Q^ambient, held in reduced echelon form."""

    __slots__ = ("ambient", "vectors", "pivots")

    def __init__(self, ambient: int, vectors):
        self.ambient = ambient
        rows, pivots = _eliminate(vectors)
        self.vectors = rows
        self.pivots = pivots

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def coords_of(self, vec: dict):
        """Coefficients of vec in this basis, or None if vec is outside."""
        residual = dict(vec)
        coords = []
        for pivot, row in zip(self.pivots, self.vectors):
            c = residual.get(pivot, Fraction(0))
            coords.append(c)
            if c:
                for col, v in row.items():
                    nv = residual.get(col, Fraction(0)) - c * v
                    if nv:
                        residual[col] = nv
                    else:
                        residual.pop(col, None)
        residual = {k: v for k, v in residual.items() if v}
        if residual:
            return None
        return coords

    def contains(self, other) -> bool:
        return all(self.coords_of(v) is not None for v in other.vectors)


def rank(m: ExactMatrix) -> int:
    _, pivots = _eliminate(m.row_dicts())
    return len(pivots)


def kernel_basis(m: ExactMatrix) -> SubspaceBasis:
    """Right kernel {v : Mv = 0} as a subspace of Q^cols."""
    rows, pivots = _eliminate(m.row_dicts())
    pivot_set = set(pivots)
    vectors = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = {free: Fraction(1)}
        for pivot, row in zip(pivots, rows):
            coef = row.get(free)
            if coef:
                v[pivot] = -coef
        vectors.append(v)
    return SubspaceBasis(m.cols, vectors)


def image_basis(m: ExactMatrix) -> SubspaceBasis:
    """Column space as a subspace of Q^rows."""
    return SubspaceBasis(m.rows, [dict(col) for col in m.coldata])


def trace_on_stable(sigma: ExactMatrix, basis: SubspaceBasis) -> Fraction:
    """Trace of sigma restricted to a sigma-stable subspace: solve
    sigma(b_i) = sum_j c_ij b_j and return sum_i c_ii."""
    total = Fraction(0)
    for i, b in enumerate(basis.vectors):
        coords = basis.coords_of(sigma.apply(b))
        if coords is None:
            raise StabilityError("subspace is not stable under the group element")
        total += coords[i]
    return total


def trace_on_subquotient(sigma: ExactMatrix, big: SubspaceBasis, small: SubspaceBasis) -> Fraction:
    """Trace of the action induced by sigma on big/small (both required
    sigma-stable, small contained in big)."""
    if not big.contains(small):
        raise StabilityError("denominator subspace not contained in numerator")
    return trace_on_stable(sigma, big) - trace_on_stable(sigma, small)


# -- modular screen ------------------------------------------------------------

SCREEN_PRIMES = (2147483647, 2147483629, 2147483587, 2147483563, 2147483549)


def rank_mod(m: ExactMatrix, p: int) -> int:
    """Rank of m reduced mod p.  Raises ValueError when an entry's
    denominator vanishes mod p (pick another prime).  Always <= exact rank."""
    rows = []
    for row in m.row_dicts():
        red = {}
        for c, v in row.items():
            if v.denominator % p == 0:
                raise ValueError(f"denominator divisible by {p}")
            val = v.numerator * pow(v.denominator, -1, p) % p
            if val:
                red[c] = val
        rows.append(red)
    rk = 0
    echelon = []
    for row in rows:
        for pivot, erow in echelon:
            coef = row.get(pivot)
            if coef:
                for c, v in erow.items():
                    nv = (row.get(c, 0) - coef * v) % p
                    if nv:
                        row[c] = nv
                    else:
                        row.pop(c, None)
        if not row:
            continue
        pivot = min(row)
        inv = pow(row[pivot], -1, p)
        row = {c: v * inv % p for c, v in row.items()}
        echelon.append((pivot, row))
        rk += 1
    return rk


def rank_certified(m: ExactMatrix, primes=SCREEN_PRIMES[:2]) -> int:
    """Exact rank, with the modular screen asserted consistent (screen can
    only undershoot; equality with two primes is the certification used in
    tests, exact elimination remains the source of truth)."""
    exact = rank(m)
    for p in primes:
        try:
            assert rank_mod(m, p) <= exact
        except ValueError:
            continue
    return exact
