"""Defining generators of (skew-symmetric) matrix Schubert ideals, Pfaffians,
K-polynomial specializations, and the regularity formulas and bounds.

Generators are exact polynomials over the matrix entries, exported in a JSON
form or as plain text suitable for pasting into a computer-algebra system.
No Groebner machinery lives here: heights come from the indexing
combinatorics and K-polynomials from the symplectic specialization.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional, Sequence

from .errors import TooFewVariables
from .grothendieck import g_degree_formula
from .permutations import (
    FpfInvolution,
    Permutation,
    grassmannian_from_shape,
    lambda_sp,
    last_nonzero_position,
    rank_matrix,
    spcode,
)
from .polys import MultiPoly, specialize_one_minus_t
from .shapes import (
    check_partition,
    largest_d_subpartition,
    largest_strict_subpartition,
)
from .symplectic import SymplecticTable, gsp_all


def skew_variable_names(size: int) -> list[str]:
    """Names x_i_j for the strictly-lower-triangular entries, row-major."""
    return [f"x_{i}_{j}" for i in range(2, size + 1) for j in range(1, i)]


def full_variable_names(size: int) -> list[str]:
    return [f"x_{i}_{j}" for i in range(1, size + 1) for j in range(1, size + 1)]


@dataclass(frozen=True)
class SkewSymbolicMatrix:
    """Generic skew-symmetric matrix: entry (i, j) is x_{i,j} for i > j,
    its negative above the diagonal, and zero on it."""

    size: int

    def _var_index(self, i: int, j: int) -> int:
        # position of (i, j), i > j, in the row-major lower triangle
        return (i - 1) * (i - 2) // 2 + (j - 1) + 1

    @property
    def nvars(self) -> int:
        return self.size * (self.size - 1) // 2

    def entry(self, i: int, j: int) -> MultiPoly:
        if i == j:
            return MultiPoly.zero(self.nvars)
        if i > j:
            return MultiPoly.variable(self._var_index(i, j), self.nvars)
        return -MultiPoly.variable(self._var_index(j, i), self.nvars)

    def pfaffian(self, index_set: Sequence[int]) -> MultiPoly:
        """Pfaffian of the principal submatrix on ``index_set``.

        Expanded over perfect matchings by recursing on the smallest index;
        an odd index set gives zero by convention.
        """
        idx = tuple(sorted(index_set))
        if len(idx) % 2:
            return MultiPoly.zero(self.nvars)
        return self._pf(idx)

    def _pf(self, idx: tuple[int, ...]) -> MultiPoly:
        if not idx:
            return MultiPoly.one(self.nvars)
        first = idx[0]
        rest = idx[1:]
        total = MultiPoly.zero(self.nvars)
        for pos, partner in enumerate(rest):
            term = self.entry(first, partner) * self._pf(
                tuple(v for v in rest if v != partner)
            )
            total = total + (term if pos % 2 == 0 else -term)
        return total


def pfaffian_numeric(mat: Sequence[Sequence[int]]) -> int:
    """Pfaffian of an integer skew-symmetric matrix, by the same expansion."""
    n = len(mat)
    if n % 2:
        return 0

    def pf(idx: tuple[int, ...]) -> int:
        if not idx:
            return 1
        first = idx[0]
        rest = idx[1:]
        total = 0
        for pos, partner in enumerate(rest):
            sub = tuple(v for v in rest if v != partner)
            term = mat[first][partner] * pf(sub)
            total += term if pos % 2 == 0 else -term
        return total

    return pf(tuple(range(n)))


def det_int(mat: Sequence[Sequence[int]]) -> int:
    """Exact integer determinant (fraction-free Gaussian elimination)."""
    a = [list(row) for row in mat]
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for swap in range(k + 1, n):
                if a[swap][k]:
                    a[k], a[swap] = a[swap], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1]


def _generic_minor(rows: Sequence[int], cols: Sequence[int], size: int) -> MultiPoly:
    """Determinant of the submatrix of the full generic size x size matrix."""
    nvars = size * size

    def var(i: int, j: int) -> MultiPoly:
        return MultiPoly.variable((i - 1) * size + j, nvars)

    def det(rs: tuple[int, ...], cs: tuple[int, ...]) -> MultiPoly:
        if not rs:
            return MultiPoly.one(nvars)
        total = MultiPoly.zero(nvars)
        for pos, c in enumerate(cs):
            term = var(rs[0], c) * det(rs[1:], tuple(v for v in cs if v != c))
            total = total + (term if pos % 2 == 0 else -term)
        return total

    return det(tuple(rows), tuple(cols))


def _normalize_sign(p: MultiPoly) -> MultiPoly:
    """Positive leading coefficient under the lexicographic term order."""
    if not p.terms:
        return p
    lead = max(p.terms)
    return -p if p.terms[lead] < 0 else p


@dataclass
class GeneratorSet:
    """Deduplicated, sign-normalized defining polynomials of one ideal."""

    kind: str
    subject: tuple[int, ...]
    var_names: list[str]
    generators: list[MultiPoly] = field(default_factory=list)
    provenance: list[str] = field(default_factory=list)
    _seen: set = field(default_factory=set, repr=False)

    def add(self, poly: MultiPoly, source: str) -> None:
        poly = _normalize_sign(poly)
        if not poly.terms:
            return
        key = frozenset(poly.terms.items())
        if key in self._seen:
            return
        self._seen.add(key)
        self.generators.append(poly)
        self.provenance.append(source)

    def texts(self) -> list[str]:
        return [g.to_text(self.var_names) for g in self.generators]

    def to_text(self) -> str:
        return "\n".join(self.texts())

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "subject": list(self.subject),
            "variables": self.var_names,
            "generators": [g.to_json() for g in self.generators],
            "provenance": self.provenance,
        }

    def __len__(self) -> int:
        return len(self.generators)


def ssmsv_generators(z: FpfInvolution) -> GeneratorSet:
    """Pfaffian generators of the skew-symmetric matrix Schubert ideal.

    For every (i, j) with i >= j and every even subset U of {1..i} whose
    intersection with {1..j} beats the rank bound, the Pfaffian of the
    principal submatrix on U is a generator.  Redundant generators are kept;
    exact duplicates are not.
    """
    size = z.size
    ranks = rank_matrix(z)
    matrix = SkewSymbolicMatrix(size)
    gens = GeneratorSet("ssmsv", z.word, skew_variable_names(size))
    for i in range(1, size + 1):
        for j in range(1, i + 1):
            bound = ranks[i - 1][j - 1]
            if bound >= j:
                continue  # |U ∩ [j]| <= j can never exceed the bound
            for m in range(2, i + 1, 2):
                for subset in combinations(range(1, i + 1), m):
                    inside = sum(1 for v in subset if v <= j)
                    if inside > bound:
                        gens.add(
                            matrix.pfaffian(subset),
                            f"i={i} j={j} U={{{','.join(map(str, subset))}}}",
                        )
    return gens


def msv_generators(w: Permutation) -> GeneratorSet:
    """Minor generators of the matrix Schubert ideal: for each (i, j), all
    minors of the top-left i x j generic block one larger than the rank bound."""
    size = w.size
    ranks = rank_matrix(w)
    gens = GeneratorSet("msv", w.word, full_variable_names(size))
    for i in range(1, size + 1):
        for j in range(1, size + 1):
            order = ranks[i - 1][j - 1] + 1
            if order > min(i, j):
                continue  # rank bound is slack
            for rows in combinations(range(1, i + 1), order):
                for cols in combinations(range(1, j + 1), order):
                    gens.add(
                        _generic_minor(rows, cols, size),
                        f"i={i} j={j} rows={rows} cols={cols}",
                    )
    return gens


def msv_height(w: Permutation) -> int:
    """Codimension of the matrix Schubert variety: the inversion count."""
    return w.inversions()


def ssmsv_height(z: FpfInvolution) -> int:
    """Codimension of the skew-symmetric matrix Schubert variety."""
    return sum(lambda_sp(z))


@dataclass
class RegularityReport:
    """Regularity of one quotient ring, with every route that produced it."""

    kind: str
    subject: tuple[int, ...]
    height: int
    regularity: int
    exact: bool
    routes: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "subject": list(self.subject),
            "height": self.height,
            "regularity": self.regularity,
            "exact": self.exact,
            "routes": self.routes,
        }


def reg_grassmannian(lam: Sequence[int], n: int) -> RegularityReport:
    """Exact regularity of the Grassmannian matrix Schubert quotient.

    Closed form l*n - l(l+1)/2 - (|shape| - |strict core|), cross-computed as
    the symmetric degree formula minus |shape|; the two routes must agree.
    """
    lam = check_partition(lam)
    if not lam:
        raise TooFewVariables("regularity needs a nonempty shape")
    if n < len(lam):
        raise TooFewVariables(f"need n >= {len(lam)}")
    mu = largest_strict_subpartition(lam)
    ell = len(mu)
    closed = ell * n - ell * (ell + 1) // 2 - (sum(lam) - sum(mu))
    via_degree = g_degree_formula(lam, n) - sum(lam)
    if closed != via_degree:
        raise AssertionError(
            f"regularity routes disagree for {lam}, n={n}: {closed} vs {via_degree}"
        )
    w = grassmannian_from_shape(lam, n)
    return RegularityReport(
        "grassmannian",
        lam,
        msv_height(w),
        closed,
        exact=True,
        routes={
            "closed_form": closed,
            "degree_minus_weight": via_degree,
            "permutation": list(w.word),
        },
    )


def reg_skew_upper(z: FpfInvolution) -> RegularityReport:
    """Upper bound for the regularity of the skew-symmetric quotient, from
    the shifted degree formula evaluated at the symplectic data.

    Meaningful as a bound when z is FPF-vexillary; that is the caller's
    assertion and is recorded, not checked.
    """
    lam = lambda_sp(z)
    if not lam:
        return RegularityReport(
            "skew-upper", z.word, 0, 0, exact=True, routes={"degenerate": True}
        )
    delta = largest_d_subpartition(lam)
    ell = len(delta)
    k = last_nonzero_position(z)
    assert k is not None
    correction = sum(lam) - sum(delta)
    base = 2 * k * ell - ell * ell
    bound = (base - ell if delta[-1] > 1 else base - k) - correction
    return RegularityReport(
        "skew-upper",
        z.word,
        sum(lam),
        bound,
        exact=False,
        routes={"k": k, "shape": list(lam), "gap2_core": list(delta)},
    )


def reg_from_kpoly(
    z: FpfInvolution, table: Optional[SymplecticTable] = None
) -> RegularityReport:
    """Exact regularity from the 1-t specialization of the symplectic
    polynomial: numerator degree of the quotient's Hilbert series minus the
    height.  The specialization is treated as that numerator throughout."""
    if table is None:
        table = gsp_all(z.size)
    poly = table.poly(z)
    kpoly = specialize_one_minus_t(poly)
    height = ssmsv_height(z)
    kdeg = kpoly.degree() or 0
    xdeg = poly.x_degree() or 0
    return RegularityReport(
        "skew-kpoly",
        z.word,
        height,
        kdeg - height,
        exact=True,
        routes={
            "kpoly_degree": kdeg,
            "kpoly": kpoly.to_text(),
            "x_degree": xdeg,
            "leading_cancellation": kdeg != xdeg,
        },
    )
