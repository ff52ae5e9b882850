"""|1|-graded Lie algebras for the two flag-variety series.

Series A is gl(m) with the parabolic stabilizing a k-plane (Grassmannian
node), series C is the conformal symplectic algebra csp(2m) with the parabolic
stabilizing a Lagrangian m-plane.  Bases are intrinsic: indices 1..m label the
e-basis, and for C the f-basis follows, with Omega(e_i, f_j) = delta_ij.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from flagsym.exactla import Matrix, rat


@dataclass(frozen=True)
class LQSpec:
    """Instance parameters.

    Series A: ambient m = n - 3, plane size k = l - 3, requires l > 3 and
    n >= 2l - 1.  Series C: Lagrangian rank m = n - 3 in Q^{2m}, requires
    n > 4.
    """

    series: str
    n: int
    l: int | None = None

    def __post_init__(self):
        if self.series == "A":
            if self.l is None:
                raise ValueError("series A requires the flag parameter l")
            if self.l <= 3:
                raise ValueError(f"series A requires l > 3, got l={self.l}")
            if self.n < 2 * self.l - 1:
                raise ValueError(
                    f"series A requires n >= 2l-1, got n={self.n}, l={self.l}"
                )
        elif self.series == "C":
            if self.l is not None:
                raise ValueError("series C takes no flag parameter l")
            if self.n <= 4:
                raise ValueError(f"series C requires n > 4, got n={self.n}")
        else:
            raise ValueError(f"unknown series {self.series!r}")

    @property
    def m(self) -> int:
        """Intrinsic rank: e-basis size."""
        return self.n - 3

    @property
    def k(self) -> int:
        """Plane size for series A; for C the planes are Lagrangian (size m)."""
        if self.series == "A":
            return self.l - 3
        return self.m

    @property
    def ambient(self) -> int:
        """Matrix size of the intrinsic realization."""
        return self.m if self.series == "A" else 2 * self.m

    def to_json(self):
        if self.series == "A":
            return {"series": "A", "n": self.n, "l": self.l}
        return {"series": "C", "n": self.n}

    @staticmethod
    def from_json(data) -> "LQSpec":
        if data["series"] == "A":
            return LQSpec("A", int(data["n"]), int(data["l"]))
        return LQSpec("C", int(data["n"]))


@dataclass(frozen=True, order=True)
class Root:
    """A root as its weight vector: integer coefficients of eps_1..eps_m."""

    vec: tuple[int, ...]

    def is_positive(self) -> bool:
        for x in self.vec:
            if x > 0:
                return True
            if x < 0:
                return False
        return False

    def __neg__(self) -> "Root":
        return Root(tuple(-x for x in self.vec))

    def label(self) -> str:
        """Human-readable label such as "e1-e2" or "2e3"."""

        def term(i, c):
            return f"e{i}" if c == 1 else f"{c}e{i}"

        pos = [(i + 1, c) for i, c in enumerate(self.vec) if c > 0]
        neg = [(i + 1, -c) for i, c in enumerate(self.vec) if c < 0]
        s = "+".join(term(i, c) for i, c in pos)
        for i, c in neg:
            s += "-" + term(i, c)
        return s or "0"


class GradedLie:
    """Roots, gradings, root-space matrices and brackets for one instance."""

    def __init__(self, spec: LQSpec):
        self.spec = spec
        self.m = spec.m
        self.k = spec.k
        self.ambient = spec.ambient
        if spec.series == "C":
            m = self.m
            rows = []
            for i in range(2 * m):
                row = [0] * (2 * m)
                if i < m:
                    row[m + i] = 1
                else:
                    row[i - m] = -1
                rows.append(row)
            self.omega = Matrix(rows)
        else:
            self.omega = None
        self._roots = self._build_roots()
        self._spaces = {r: self._build_root_space(r) for r in self._roots}

    # ---------------- roots ----------------

    def _build_roots(self) -> list[Root]:
        m = self.m
        out = []
        if self.spec.series == "A":
            for i in range(m):
                for j in range(m):
                    if i != j:
                        v = [0] * m
                        v[i], v[j] = 1, -1
                        out.append(Root(tuple(v)))
        else:
            for i in range(m):
                for j in range(m):
                    if i != j:
                        v = [0] * m
                        v[i], v[j] = 1, -1
                        out.append(Root(tuple(v)))
            for i in range(m):
                for j in range(i, m):
                    for s in (1, -1):
                        v = [0] * m
                        v[i] += s
                        v[j] += s
                        out.append(Root(tuple(v)))
        return sorted(out)

    def roots(self) -> list[Root]:
        return list(self._roots)

    def positive_roots(self) -> list[Root]:
        return [r for r in self._roots if r.is_positive()]

    def is_root(self, r: Root) -> bool:
        return r in self._spaces

    def root_space(self, r: Root) -> Matrix:
        return self._spaces[r]

    def root_spaces(self) -> list[tuple[Root, Matrix]]:
        return [(r, self._spaces[r]) for r in self._roots]

    def _build_root_space(self, r: Root) -> Matrix:
        m = self.m
        if self.spec.series == "A":
            i = r.vec.index(1)
            j = r.vec.index(-1)
            return Matrix.unit(m, m, i, j)
        supp = [(i, c) for i, c in enumerate(r.vec) if c != 0]
        if len(supp) == 2 and supp[0][1] == 1 and supp[1][1] == -1:
            i, j = supp[0][0], supp[1][0]
            return Matrix.unit(2 * m, 2 * m, i, j) - Matrix.unit(2 * m, 2 * m, m + j, m + i)
        if len(supp) == 2 and supp[0][1] == -1 and supp[1][1] == 1:
            j, i = supp[0][0], supp[1][0]
            return Matrix.unit(2 * m, 2 * m, i, j) - Matrix.unit(2 * m, 2 * m, m + j, m + i)
        if len(supp) == 2 and supp[0][1] == 1 and supp[1][1] == 1:
            i, j = supp[0][0], supp[1][0]
            return Matrix.unit(2 * m, 2 * m, i, m + j) + Matrix.unit(2 * m, 2 * m, j, m + i)
        if len(supp) == 2 and supp[0][1] == -1 and supp[1][1] == -1:
            i, j = supp[0][0], supp[1][0]
            return Matrix.unit(2 * m, 2 * m, m + i, j) + Matrix.unit(2 * m, 2 * m, m + j, i)
        if len(supp) == 1 and supp[0][1] == 2:
            i = supp[0][0]
            return Matrix.unit(2 * m, 2 * m, i, m + i)
        if len(supp) == 1 and supp[0][1] == -2:
            i = supp[0][0]
            return Matrix.unit(2 * m, 2 * m, m + i, i)
        raise ValueError(f"not a root: {r}")

    def grading_component(self, r: Root) -> int:
        """Coefficient of the distinguished simple root in r."""
        if not self.is_root(r):
            raise ValueError(f"not a root: {r}")
        if self.spec.series == "A":
            k = self.k
            pos = sum(1 for c in r.vec[:k] if c > 0)
            neg = sum(1 for c in r.vec[:k] if c < 0)
            return pos - neg
        return sum(r.vec) // 2

    @property
    def alpha0(self) -> Root:
        """The crossed simple root: eps_k - eps_{k+1} (A), 2 eps_m (C)."""
        m = self.m
        v = [0] * m
        if self.spec.series == "A":
            v[self.k - 1], v[self.k] = 1, -1
        else:
            v[m - 1] = 2
        return Root(tuple(v))

    # ---------------- weights and flag order ----------------

    def basis_weight(self, idx: int) -> tuple[int, ...]:
        """Weight vector of basis vector `idx` (0-based; f's follow e's for C)."""
        m = self.m
        v = [0] * m
        if idx < m:
            v[idx] = 1
        else:
            v[idx - m] = -1
        return tuple(v)

    def flag_order(self) -> list[int]:
        """Basis indices ordered so positive root spaces are strictly upper."""
        m = self.m
        if self.spec.series == "A":
            return list(range(m))
        return list(range(m)) + [2 * m - 1 - i for i in range(m)]

    # ---------------- algebra membership and components ----------------

    def in_algebra(self, x: Matrix) -> bool:
        if x.rows != self.ambient or x.cols != self.ambient:
            return False
        if self.spec.series == "A":
            return True
        return self.csp_algebra_multiplier(x) is not None

    def csp_algebra_multiplier(self, x: Matrix):
        """c with x^T Omega + Omega x = c Omega, or None."""
        p = x.transpose() * self.omega + self.omega * x
        m = self.m
        c = p[0, m]
        if p == self.omega.scale(c):
            return c
        return None

    def bracket(self, x: Matrix, y: Matrix) -> Matrix:
        if not self.in_algebra(x) or not self.in_algebra(y):
            raise ValueError("bracket operands not in the algebra")
        return x * y - y * x

    def graded_component(self, x: Matrix, degree: int) -> Matrix:
        """Orthogonal block extraction of the degree -1, 0 or +1 part."""
        n = self.ambient
        if self.spec.series == "A":
            k = self.k
            blocks = {(-1): (range(k, n), range(0, k)), 1: (range(0, k), range(k, n))}
        else:
            m = self.m
            blocks = {(-1): (range(m, n), range(0, m)), 1: (range(0, m), range(m, n))}
        out = [[Fraction(0)] * n for _ in range(n)]
        if degree == 0:
            rows_m, cols_m = blocks[-1]
            rows_p, cols_p = blocks[1]
            minus = {(i, j) for i in rows_m for j in cols_m}
            plus = {(i, j) for i in rows_p for j in cols_p}
            for i in range(n):
                for j in range(n):
                    if (i, j) not in minus and (i, j) not in plus:
                        out[i][j] = x[i, j]
        else:
            rows, cols = blocks[degree]
            for i in rows:
                for j in cols:
                    out[i][j] = x[i, j]
        return Matrix(out)

    def in_q(self, x: Matrix) -> bool:
        """Algebra-level parabolic membership: vanishing degree -1 part."""
        return self.in_algebra(x) and self.graded_component(x, -1).is_zero()

    def root_coefficient(self, x: Matrix, r: Root) -> Fraction:
        """Coefficient of the root space of r in x (reads the leading slot)."""
        space = self._spaces[r]
        for i in range(space.rows):
            for j in range(space.cols):
                if space[i, j] != 0:
                    return x[i, j] / space[i, j]
        raise AssertionError("empty root space")

    def component_basis(self, degree: int) -> list[tuple[Root, Matrix]]:
        return [
            (r, self._spaces[r])
            for r in self._roots
            if self.grading_component(r) == degree
        ]

    def span_of_roots(self, coeffs: dict[Root, Fraction]) -> Matrix:
        out = Matrix.zero(self.ambient, self.ambient)
        for r, c in coeffs.items():
            if c:
                out = out + self._spaces[r].scale(c)
        return out

    # ---------------- distinguished elements ----------------

    def s_element(self) -> Matrix:
        """Canonical grading involution: Ad_s = -id on the degree +-1 parts."""
        n = self.ambient
        if self.spec.series == "A":
            k = self.k
            return Matrix(
                [[(-1 if i == j and i < k else (1 if i == j else 0)) for j in range(n)]
                 for i in range(n)]
            )
        m = self.m
        return Matrix(
            [[(1 if i == j and i < m else (-1 if i == j else 0)) for j in range(n)]
             for i in range(n)]
        )


@lru_cache(maxsize=None)
def graded_lie(spec: LQSpec) -> GradedLie:
    """Cached GradedLie per spec (everything in it is immutable)."""
    return GradedLie(spec)
