"""Exact rational linear algebra: matrices, canonical subspaces, nilpotent exp.

Rationals are `fractions.Fraction` (always reduced, positive denominator,
structural equality), serialized as "p/q" or "p".  Subspaces are stored in a
canonical reduced column-echelon form, so two `Subspace` values are equal iff
they span the same space.
"""

from __future__ import annotations

from fractions import Fraction


def rat(x) -> Fraction:
    """Coerce an int, Fraction or "p/q" string to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not a rational: {x!r}")


def rat_str(x: Fraction) -> str:
    """Serialize a Fraction as "p/q", or "p" when the denominator is 1."""
    x = rat(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


_ZERO = Fraction(0)
_ONE = Fraction(1)


class Matrix:
    """Dense matrix over Q.  Values are immutable after construction."""

    __slots__ = ("rows", "cols", "_r")

    def __init__(self, entries):
        self._r = tuple(tuple(rat(x) for x in row) for row in entries)
        self.rows = len(self._r)
        self.cols = len(self._r[0]) if self._r else 0
        if any(len(row) != self.cols for row in self._r):
            raise ValueError("ragged rows")

    @staticmethod
    def zero(rows: int, cols: int) -> "Matrix":
        return Matrix([[_ZERO] * cols for _ in range(rows)])

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix([[_ONE if i == j else _ZERO for j in range(n)] for i in range(n)])

    @staticmethod
    def unit(rows: int, cols: int, i: int, j: int, value=1) -> "Matrix":
        """Matrix with a single entry at 0-based position (i, j)."""
        m = [[_ZERO] * cols for _ in range(rows)]
        m[i][j] = rat(value)
        return Matrix(m)

    @staticmethod
    def from_columns(ambient: int, columns) -> "Matrix":
        cols = list(columns)
        return Matrix([[col[i] for col in cols] for i in range(ambient)])

    def __getitem__(self, ij):
        i, j = ij
        return self._r[i][j]

    def row(self, i: int):
        return self._r[i]

    def column(self, j: int):
        return tuple(row[j] for row in self._r)

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    def tolist(self):
        return [list(row) for row in self._r]

    def __eq__(self, other):
        return isinstance(other, Matrix) and self._r == other._r

    def __hash__(self):
        return hash(self._r)

    def __repr__(self):
        body = "; ".join(" ".join(rat_str(x) for x in row) for row in self._r)
        return f"Matrix({self.rows}x{self.cols}: {body})"

    def __add__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return Matrix([[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self._r, other._r)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return Matrix([[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self._r, other._r)])

    def __neg__(self) -> "Matrix":
        return Matrix([[-a for a in row] for row in self._r])

    def scale(self, c) -> "Matrix":
        c = rat(c)
        return Matrix([[c * a for a in row] for row in self._r])

    def __mul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        ot = list(zip(*other._r))  # columns of other
        out = []
        for row in self._r:
            out.append([sum(a * b for a, b in zip(row, col) if a) for col in ot])
        return Matrix(out)

    def transpose(self) -> "Matrix":
        return Matrix(list(zip(*self._r)))

    def is_zero(self) -> bool:
        return all(x == 0 for row in self._r for x in row)

    def apply(self, vec):
        """Matrix times column vector (tuple)."""
        return tuple(sum(a * b for a, b in zip(row, vec) if a) for row in self._r)

    def trace(self) -> Fraction:
        return sum(self._r[i][i] for i in range(min(self.rows, self.cols)))

    def commutator(self, other: "Matrix") -> "Matrix":
        return self * other - other * self

    def det(self) -> Fraction:
        if self.rows != self.cols:
            raise ValueError("det of non-square matrix")
        m = [list(row) for row in self._r]
        n = self.rows
        d = _ONE
        for c in range(n):
            p = next((r for r in range(c, n) if m[r][c] != 0), None)
            if p is None:
                return _ZERO
            if p != c:
                m[c], m[p] = m[p], m[c]
                d = -d
            d *= m[c][c]
            inv = 1 / m[c][c]
            for r in range(c + 1, n):
                if m[r][c]:
                    f = m[r][c] * inv
                    m[r] = [a - f * b for a, b in zip(m[r], m[c])]
        return d

    def inverse(self) -> "Matrix":
        if self.rows != self.cols:
            raise ValueError("inverse of non-square matrix")
        n = self.rows
        m = [list(row) + [_ONE if i == j else _ZERO for j in range(n)]
             for i, row in enumerate(self._r)]
        for c in range(n):
            p = next((r for r in range(c, n) if m[r][c] != 0), None)
            if p is None:
                raise ValueError("singular matrix")
            m[c], m[p] = m[p], m[c]
            inv = 1 / m[c][c]
            m[c] = [a * inv for a in m[c]]
            for r in range(n):
                if r != c and m[r][c]:
                    f = m[r][c]
                    m[r] = [a - f * b for a, b in zip(m[r], m[c])]
        return Matrix([row[n:] for row in m])

    def is_proportional_to(self, other: "Matrix") -> bool:
        """True iff self = c * other for some nonzero rational c."""
        if (self.rows, self.cols) != (other.rows, other.cols):
            return False
        c = None
        for r1, r2 in zip(self._r, other._r):
            for a, b in zip(r1, r2):
                if (a == 0) != (b == 0):
                    return False
                if a != 0:
                    ratio = a / b
                    if c is None:
                        c = ratio
                    elif ratio != c:
                        return False
        return True  # covers both zero is fine for callers that check nonzero

    def submatrix(self, rows, cols) -> "Matrix":
        rows = list(rows)
        cols = list(cols)
        return Matrix([[self._r[i][j] for j in cols] for i in rows])

    def to_json(self):
        return [[rat_str(x) for x in row] for row in self._r]

    @staticmethod
    def from_json(data) -> "Matrix":
        return Matrix([[rat(x) for x in row] for row in data])


def rank(m: Matrix) -> int:
    """Row rank over Q, by fraction-free-enough Gaussian elimination."""
    a = [list(row) for row in m.tolist()]
    nr, nc = m.rows, m.cols
    r = 0
    for c in range(nc):
        p = next((i for i in range(r, nr) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        for i in range(r + 1, nr):
            if a[i][c]:
                f = a[i][c] * inv
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == nr:
            break
    return r


def kernel_basis(m: Matrix) -> list[tuple]:
    """Basis of the right kernel {x : m x = 0}, deterministic order."""
    a = [list(row) for row in m.tolist()]
    nr, nc = m.rows, m.cols
    pivots = []
    r = 0
    for c in range(nc):
        p = next((i for i in range(r, nr) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(nr):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == nr:
            break
    free = [c for c in range(nc) if c not in pivots]
    basis = []
    for fc in free:
        v = [_ZERO] * nc
        v[fc] = _ONE
        for pr, pc in enumerate(pivots):
            v[pc] = -a[pr][fc]
        basis.append(tuple(v))
    return basis


def _column_echelon_bottom(ambient: int, columns) -> list[list[Fraction]]:
    """Reduced column echelon with bottom-most pivots.

    Each surviving column has its lowest nonzero entry equal to 1 (the pivot);
    pivot rows are distinct, strictly increasing over the column list, and all
    other columns vanish at every pivot row.  This form is unique per span.
    """
    cols = [[rat(x) for x in c] for c in columns]
    cols = [c for c in cols if any(x != 0 for x in c)]
    result: list[list[Fraction]] = []
    pivot_rows: list[int] = []
    # eliminate greedily against already-normalized columns, deepest pivot first
    for col in cols:
        for pr, pc in zip(pivot_rows, result):
            if col[pr] != 0:
                f = col[pr]
                for i in range(ambient):
                    col[i] -= f * pc[i]
        last = next((i for i in range(ambient - 1, -1, -1) if col[i] != 0), None)
        if last is None:
            continue
        inv = _ONE / col[last]
        col = [x * inv for x in col]
        # back-substitute into existing columns
        for idx, (pr, pc) in enumerate(zip(pivot_rows, result)):
            if pc[last] != 0:
                f = pc[last]
                result[idx] = [x - f * y for x, y in zip(pc, col)]
        pivot_rows.append(last)
        result.append(col)
    order = sorted(range(len(result)), key=lambda t: pivot_rows[t])
    return [result[t] for t in order]


class Subspace:
    """Linear subspace of Q^ambient in canonical column-echelon form."""

    __slots__ = ("ambient_dim", "basis")

    def __init__(self, ambient_dim: int, columns):
        """`columns` is an iterable of spanning vectors (not necessarily independent)."""
        cols = _column_echelon_bottom(ambient_dim, columns)
        self.ambient_dim = ambient_dim
        self.basis = Matrix.from_columns(ambient_dim, cols) if cols else Matrix.zero(ambient_dim, 0)

    @staticmethod
    def from_matrix_columns(m: Matrix) -> "Subspace":
        return Subspace(m.rows, m.columns())

    @staticmethod
    def standard(ambient_dim: int, indices) -> "Subspace":
        """Span of standard basis vectors e_i for 0-based `indices`."""
        cols = []
        for i in indices:
            v = [_ZERO] * ambient_dim
            v[i] = _ONE
            cols.append(v)
        return Subspace(ambient_dim, cols)

    @property
    def dim(self) -> int:
        return self.basis.cols

    def pivot_rows(self) -> list[int]:
        """0-based rows of the bottom pivots, ascending."""
        out = []
        for j in range(self.basis.cols):
            col = self.basis.column(j)
            out.append(max(i for i, x in enumerate(col) if x != 0))
        return out

    def contains_vector(self, vec) -> bool:
        cols = self.basis.columns() + [tuple(rat(x) for x in vec)]
        m = Matrix.from_columns(self.ambient_dim, cols)
        return rank(m) == self.dim

    def contains(self, other: "Subspace") -> bool:
        if other.ambient_dim != self.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        cols = self.basis.columns() + other.basis.columns()
        return rank(Matrix.from_columns(self.ambient_dim, cols)) == self.dim

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.ambient_dim == other.ambient_dim
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return f"Subspace(dim {self.dim} of Q^{self.ambient_dim})"

    def to_json(self):
        return {"ambient": self.ambient_dim, "basis": self.basis.to_json()}


def intersect(a: Subspace, b: Subspace) -> Subspace:
    """a ∩ b, via the kernel of [A | -B]."""
    if a.ambient_dim != b.ambient_dim:
        raise ValueError("ambient dimension mismatch")
    if a.dim == 0 or b.dim == 0:
        return Subspace(a.ambient_dim, [])
    stacked = Matrix([
        list(a.basis.row(i)) + [-x for x in b.basis.row(i)]
        for i in range(a.ambient_dim)
    ])
    vecs = []
    for k in kernel_basis(stacked):
        coeffs = k[: a.dim]
        vecs.append(a.basis.apply(coeffs))
    return Subspace(a.ambient_dim, vecs)


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    if a.ambient_dim != b.ambient_dim:
        raise ValueError("ambient dimension mismatch")
    return Subspace(a.ambient_dim, a.basis.columns() + b.basis.columns())


def complement(a: Subspace) -> Subspace:
    """Deterministic complement, preferring standard basis vectors in index order."""
    n = a.ambient_dim
    cols = list(a.basis.columns())
    chosen = []
    r = len(cols)
    for i in range(n):
        if r == n:
            break
        v = tuple(_ONE if t == i else _ZERO for t in range(n))
        if rank(Matrix.from_columns(n, cols + [v])) > r:
            cols.append(v)
            chosen.append(v)
            r += 1
    return Subspace(n, chosen)


def extend_to_complement(a: Subspace, seed: Subspace) -> Subspace:
    """Complement of `a` containing `seed` (requires a ∩ seed = 0)."""
    n = a.ambient_dim
    if intersect(a, seed).dim != 0:
        raise ValueError("seed meets the subspace")
    cols = list(a.basis.columns()) + list(seed.basis.columns())
    chosen = list(seed.basis.columns())
    r = rank(Matrix.from_columns(n, cols))
    if r != a.dim + seed.dim:
        raise ValueError("seed not independent from subspace")
    for i in range(n):
        if r == n:
            break
        v = tuple(_ONE if t == i else _ZERO for t in range(n))
        if rank(Matrix.from_columns(n, cols + [v])) > r:
            cols.append(v)
            chosen.append(v)
            r += 1
    return Subspace(n, chosen)


def exp_nilpotent(n: Matrix) -> Matrix:
    """Exact exp of a nilpotent matrix; errors if the input is not nilpotent."""
    if n.rows != n.cols:
        raise ValueError("exp of non-square matrix")
    size = n.rows
    total = Matrix.identity(size)
    term = Matrix.identity(size)
    for k in range(1, size + 1):
        term = term * n
        if term.is_zero():
            return total
        total = total + term.scale(Fraction(1, _factorial(k)))
    raise ValueError("matrix is not nilpotent")


def log_unipotent(u: Matrix) -> Matrix:
    """Exact log of a unipotent matrix (u - I nilpotent)."""
    size = u.rows
    n = u - Matrix.identity(size)
    total = Matrix.zero(size, size)
    term = Matrix.identity(size)
    for k in range(1, size + 1):
        term = term * n
        if term.is_zero():
            return total
        total = total + term.scale(Fraction((-1) ** (k + 1), k))
    raise ValueError("matrix is not unipotent")


def _factorial(k: int) -> int:
    out = 1
    for i in range(2, k + 1):
        out *= i
    return out


def act(g: Matrix, s: Subspace) -> Subspace:
    """Left action of an invertible matrix on a subspace."""
    if g.rows != g.cols or g.cols != s.ambient_dim:
        raise ValueError("size mismatch")
    if g.det() == 0:
        raise ValueError("singular matrix does not act on subspaces")
    return Subspace(s.ambient_dim, [g.apply(c) for c in s.basis.columns()])
