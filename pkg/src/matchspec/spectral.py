"""Adjacency spectra, exact characteristic polynomials, and quotient matrices.

Floating point eigenwork is delegated to LAPACK via numpy (dense symmetric
solver; ample at n <= 62).  Everything that feeds the polynomial identity
checks is exact: characteristic polynomials come from the Faddeev-LeVerrier
recurrence over Python's arbitrary-precision integers/rationals, so displayed
coefficient formulas can be compared coefficient by coefficient, not just
numerically.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .graphs import Graph

DEFAULT_ROOT_TOL = 1e-12


@dataclass(frozen=True)
class SpectralResult:
    """Spectral radius with its (unit, sign-fixed) Perron vector.

    residual is the max-norm of A*perron - rho*perron; connected inputs give
    a strictly positive perron vector by Perron-Frobenius.
    """

    rho: float
    perron: tuple[float, ...]
    residual: float


def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n), dtype=np.float64)
    for v in range(g.n):
        for u in g.neighbors(v):
            a[v, u] = 1.0
    return a


def adjacency_matrix_exact(g: Graph) -> list[list[int]]:
    return [[1 if g.has_edge(v, u) else 0 for u in range(g.n)] for v in range(g.n)]


def eigenvalues(g: Graph) -> list[float]:
    """All adjacency eigenvalues in nonincreasing order."""
    if g.n == 0:
        raise ValueError("eigenvalues undefined for the empty graph")
    vals = np.linalg.eigvalsh(adjacency_matrix(g))
    return [float(x) for x in vals[::-1]]


def spectral_radius(g: Graph) -> SpectralResult:
    """Largest adjacency eigenvalue plus Perron vector and residual."""
    if g.n == 0:
        raise ValueError("spectral radius undefined for the empty graph")
    a = adjacency_matrix(g)
    vals, vecs = np.linalg.eigh(a)
    rho = float(vals[-1])
    vec = vecs[:, -1]
    # fix the sign so the dominant entry is positive, then force exact unit norm
    pivot = int(np.argmax(np.abs(vec)))
    if vec[pivot] < 0:
        vec = -vec
    vec = vec / np.linalg.norm(vec)
    residual = float(np.max(np.abs(a @ vec - rho * vec)))
    return SpectralResult(rho, tuple(float(x) for x in vec), residual)


def power_iteration_rho(g: Graph, iterations: int = 20000, tol: float = 1e-13) -> float:
    """Plain power iteration; used only as a cross-check of the dense solver.

    Iterates on A + I so bipartite spectra (where +rho and -rho tie) still
    converge; the shift is removed from the Rayleigh quotient at the end.
    """
    if g.n == 0:
        raise ValueError("spectral radius undefined for the empty graph")
    a = adjacency_matrix(g) + np.eye(g.n)
    x = np.ones(g.n) / np.sqrt(g.n)
    rho = 0.0
    for _ in range(iterations):
        y = a @ x
        norm = np.linalg.norm(y)
        if norm == 0.0:
            return 0.0
        y /= norm
        new_rho = float(y @ a @ y)
        if abs(new_rho - rho) <= tol:
            return new_rho - 1.0
        rho = new_rho
        x = y
    return rho - 1.0


# ---------------------------------------------------------------------------
# Exact integer polynomials
# ---------------------------------------------------------------------------

def _normalize_coeff(c):
    if isinstance(c, Fraction):
        return int(c) if c.denominator == 1 else c
    return c


@dataclass(frozen=True)
class Polynomial:
    """Univariate polynomial with exact coefficients, ascending by degree."""

    coeffs: tuple

    def __post_init__(self):
        coeffs = [_normalize_coeff(c) for c in self.coeffs]
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        acc = 0 if not isinstance(x, float) else 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + (float(c) if isinstance(x, float) else c)
        return acc

    def derivative(self) -> "Polynomial":
        if self.degree == 0:
            return Polynomial((0,))
        return Polynomial(tuple(i * c for i, c in enumerate(self.coeffs) if i > 0))

    def __str__(self) -> str:
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0 and self.degree > 0:
                continue
            var = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            terms.append(f"{c}{'*' if var else ''}{var}")
        return " + ".join(terms).replace("+ -", "- ")


def characteristic_polynomial(matrix) -> Polynomial:
    """det(xI - M) for a square matrix, exactly (Faddeev-LeVerrier).

    Entries may be ints or Fractions; Python's unbounded integers make
    overflow a non-issue.  Integer inputs always yield integer coefficients.
    """
    rows = [list(r) for r in matrix]
    n = len(rows)
    for r in rows:
        if len(r) != n:
            raise ValueError("characteristic polynomial requires a square matrix")
    m = [[Fraction(x) for x in row] for row in rows]
    ident = [[Fraction(1) if i == j else Fraction(0) for j in range(n)]
             for i in range(n)]
    coeffs = [Fraction(1)]  # leading coefficient of x^n
    work = [row[:] for row in ident]
    mk = None
    for k in range(1, n + 1):
        if k == 1:
            mk = [row[:] for row in m]
        else:
            shifted = [[work[i][j] + (coeffs[-1] if i == j else 0)
                        for j in range(n)] for i in range(n)]
            mk = _mat_mul(m, shifted)
        trace = sum(mk[i][i] for i in range(n))
        coeffs.append(-trace / k)
        work = mk
    # coeffs[i] multiplies x^(n-i); flip to ascending order
    ascending = list(reversed(coeffs))
    return Polynomial(tuple(ascending))


def _mat_mul(a, b):
    n = len(a)
    return [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)]
            for i in range(n)]


# ---------------------------------------------------------------------------
# Partitions and quotient matrices
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Partition:
    """Ordered partition of the vertex set into nonempty disjoint blocks."""

    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(
            self, "blocks", tuple(tuple(sorted(b)) for b in self.blocks))

    @property
    def size(self) -> int:
        return len(self.blocks)

    def validate(self, n: int) -> None:
        seen = set()
        for block in self.blocks:
            if not block:
                raise ValueError("partition blocks must be nonempty")
            for v in block:
                if not 0 <= v < n:
                    raise ValueError(f"vertex {v} out of range")
                if v in seen:
                    raise ValueError(f"vertex {v} appears in two blocks")
                seen.add(v)
        if len(seen) != n:
            raise ValueError("partition does not cover every vertex")


@dataclass(frozen=True)
class QuotientMatrix:
    """Average block row sums of the adjacency matrix over a partition."""

    entries: tuple[tuple[Fraction, ...], ...]
    equitable: bool
    block_sizes: tuple[int, ...]

    def as_exact_rows(self) -> list[list[Fraction]]:
        return [list(r) for r in self.entries]

    def as_int_rows(self) -> list[list[int]]:
        if not all(e.denominator == 1 for row in self.entries for e in row):
            raise ValueError("quotient matrix has non-integer entries")
        return [[int(e) for e in row] for row in self.entries]


def quotient_matrix(g: Graph, partition: Partition) -> QuotientMatrix:
    """Quotient of A(g) over the partition; flags whether it is equitable."""
    partition.validate(g.n)
    blocks = partition.blocks
    s = len(blocks)
    masks = []
    for block in blocks:
        m = 0
        for v in block:
            m |= 1 << v
        masks.append(m)
    entries = []
    equitable = True
    for bi in blocks:
        row = []
        for j in range(s):
            counts = [(g.adj[v] & masks[j]).bit_count() for v in bi]
            if any(c != counts[0] for c in counts):
                equitable = False
            row.append(Fraction(sum(counts), len(bi)))
        entries.append(tuple(row))
    return QuotientMatrix(tuple(entries), equitable, tuple(len(b) for b in blocks))


# ---------------------------------------------------------------------------
# Root extraction
# ---------------------------------------------------------------------------

def largest_real_root(p: Polynomial, lo: float, hi: float,
                      tol: float = DEFAULT_ROOT_TOL) -> float:
    """Largest real root of p in [lo, hi].

    Scans down from hi in unit steps to find the highest sign change, then
    bisects and polishes with Newton.  Requires that p has a real root in
    the bracket with a sign change at the unit-grid scale (true for the
    Perron-type polynomials this library works with, whose largest root is
    simple and separated).
    """
    if hi < lo:
        raise ValueError("empty bracket")

    def f(x: float) -> float:
        return float(p(float(x)))

    upper = float(hi)
    f_upper = f(upper)
    if f_upper == 0.0:
        return upper
    x = upper
    a = b = None
    while x > lo:
        nxt = max(lo, x - 1.0)
        fx, fn = f(x), f(nxt)
        if fn == 0.0:
            return _polish(p, nxt, nxt, tol)
        if fx * fn < 0.0:
            a, b = nxt, x
            break
        x = nxt
    if a is None:
        raise ValueError(f"no sign change of polynomial in [{lo}, {hi}]")
    fa = f(a)
    for _ in range(200):
        mid = 0.5 * (a + b)
        if b - a <= tol * max(1.0, abs(mid)):
            break
        fm = f(mid)
        if fm == 0.0:
            a = b = mid
            break
        if fa * fm < 0.0:
            b = mid
        else:
            a, fa = mid, fm
    return _polish(p, 0.5 * (a + b), a, tol, b=b if a != b else None)


def _polish(p: Polynomial, x: float, lo: float, tol: float, b: float | None = None):
    dp = p.derivative()
    for _ in range(50):
        fx = float(p(x))
        dfx = float(dp(x))
        if dfx == 0.0:
            break
        step = fx / dfx
        nxt = x - step
        if b is not None and not (lo - 1e-9 <= nxt <= b + 1e-9):
            break
        if abs(step) <= tol * max(1.0, abs(x)):
            x = nxt
            break
        x = nxt
    return x


def theta(n: int) -> float:
    """Largest real root of x^3 - (n-4)x^2 - (n-1)x + 2(n-4).

    This equals the spectral radius of the join of a single vertex with
    (a clique on n-3 vertices plus two isolated vertices); defined for
    even n >= 4, where the cubic's top root is simple.
    """
    if n % 2 != 0 or n < 4:
        raise ValueError("theta is defined for even n >= 4")
    p = Polynomial((2 * (n - 4), -(n - 1), -(n - 4), 1))
    return largest_real_root(p, 0.0, float(n))


__all__ = [
    "SpectralResult", "adjacency_matrix", "adjacency_matrix_exact",
    "eigenvalues", "spectral_radius", "power_iteration_rho", "Polynomial",
    "characteristic_polynomial", "Partition", "QuotientMatrix",
    "quotient_matrix", "largest_real_root", "theta", "DEFAULT_ROOT_TOL",
]
