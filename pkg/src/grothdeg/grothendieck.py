"""The four polynomial families, their degree formulas, and the explicit
maximum-degree tableaux.

Generating functions weight each tableau T by beta^(d(T) - |shape|) x^c(T);
substituting beta = -1 recovers the signed convention for the ordinary
symmetric family.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import EmptyShape, TooFewVariables
from .polys import MultiPoly
from .shapes import (
    check_partition,
    check_strict,
    largest_d_subpartition,
    largest_strict_subpartition,
)
from .tableaux import (
    PSVT,
    QSVT,
    SVT,
    Tableau,
    _walk_fillings,
    entry_value,
    max_degree_brute,
    max_degree_witness,
)


def _generating_polynomial(lam: Sequence[int], n: int, flavor: str) -> MultiPoly:
    lam = tuple(lam)
    weight = sum(lam)
    terms: dict = {}
    for filling, degree in _walk_fillings(lam, n, flavor):
        exps = [0] * n
        for box in filling:
            for code in box:
                exps[entry_value(code) - 1] += 1
        key = (tuple(exps), degree - weight)
        terms[key] = terms.get(key, 0) + 1
    return MultiPoly(n, terms)


def g_polynomial(lam: Sequence[int], n: int) -> MultiPoly:
    """Symmetric Grothendieck polynomial: sum over ordinary set-valued tableaux."""
    return _generating_polynomial(check_partition(lam), n, SVT)


def gp_polynomial(lam: Sequence[int], n: int) -> MultiPoly:
    """P-Grothendieck polynomial: sum over P-shifted set-valued tableaux."""
    return _generating_polynomial(check_strict(lam), n, PSVT)


def gq_polynomial(lam: Sequence[int], n: int) -> MultiPoly:
    """Q-Grothendieck polynomial: sum over Q-shifted set-valued tableaux."""
    return _generating_polynomial(check_strict(lam), n, QSVT)


def _formula_guard(lam: Sequence[int], n: int) -> tuple[int, ...]:
    lam = check_partition(lam)
    if not lam:
        raise EmptyShape("degree formulas require a nonempty shape")
    if n < len(lam):
        raise TooFewVariables(f"need n >= {len(lam)} variables for shape {lam}")
    return lam


def gp_degree_formula(lam: Sequence[int], n: int) -> int:
    """Degree of the P-Grothendieck polynomial, from the gap-2 core of the shape."""
    lam = _formula_guard(lam, n)
    check_strict(lam)
    delta = largest_d_subpartition(lam)
    ell = len(delta)
    base = sum(delta) + 2 * n * ell - ell * ell
    return base - ell if delta[-1] > 1 else base - n


def g_degree_formula(lam: Sequence[int], n: int) -> int:
    """Degree of the symmetric Grothendieck polynomial, from the strict core."""
    lam = _formula_guard(lam, n)
    mu = largest_strict_subpartition(lam)
    ell = len(mu)
    return sum(mu) + ell * n - ell * (ell + 1) // 2


@dataclass(frozen=True)
class GqDegreeBounds:
    """Window for the Q-family degree; ``exact`` is set when the window closes."""

    shape: tuple[int, ...]
    nvars: int
    lower: int
    upper: int
    exact: Optional[int]
    reduces_to_gap2_core: bool

    def to_json(self) -> dict:
        return {
            "shape": list(self.shape),
            "nvars": self.nvars,
            "lower": self.lower,
            "upper": self.upper,
            "exact": self.exact,
            "reduces_to_gap2_core": self.reduces_to_gap2_core,
        }


def gq_degree_bounds(lam: Sequence[int], n: int) -> GqDegreeBounds:
    """Degree window [gp + l(lam), gp + n] for the Q-family.

    The value is pinned exactly when n equals the number of rows.  The flag
    records whether the gap-2 core has the same number of rows as the shape,
    in which case the Q-degree of the shape and of its core agree.
    """
    lam = _formula_guard(lam, n)
    check_strict(lam)
    gp = gp_degree_formula(lam, n)
    ell = len(lam)
    exact = gp + n if n == ell else None
    delta = largest_d_subpartition(lam)
    return GqDegreeBounds(lam, n, gp + ell, gp + n, exact, len(delta) == ell)


def maximal_shifted_tableau(delta: Sequence[int], n: int) -> Tableau:
    """The explicit maximum-degree P-shifted tableau on a gap-2 shape.

    Row i is constant i, and the rightmost box of row i holds every symbol
    from i to n.  A single-box row sits on the diagonal, so it takes the
    unprimed interval instead.
    """
    delta = _formula_guard(delta, n)
    if not all(delta[i] - delta[i + 1] >= 2 for i in range(len(delta) - 1)):
        raise ValueError(f"{delta} is not a gap-2 partition")
    rows = []
    for i, part in enumerate(delta, start=1):
        row = [(2 * i,)] * (part - 1)
        if part == 1:
            row.append(tuple(range(2 * i, 2 * n + 1, 2)))
        else:
            row.append(tuple(range(2 * i, 2 * n + 1)))
        rows.append(tuple(row))
    return Tableau(delta, PSVT, n, tuple(rows))


def maximal_svt_tableau(mu: Sequence[int], n: int) -> Tableau:
    """The explicit maximum-degree ordinary tableau on a strict shape."""
    mu = _formula_guard(mu, n)
    check_strict(mu)
    rows = []
    for i, part in enumerate(mu, start=1):
        row = [(2 * i,)] * (part - 1)
        row.append(tuple(range(2 * i, 2 * n + 1, 2)))
        rows.append(tuple(row))
    return Tableau(mu, SVT, n, tuple(rows))


@dataclass
class DegreeReport:
    """Degree facts for one (shape, nvars, flavor) triple."""

    shape: tuple[int, ...]
    nvars: int
    flavor: str
    formula_degree: Optional[int] = None
    brute_degree: Optional[int] = None
    witness: Optional[Tableau] = None
    bounds: Optional[GqDegreeBounds] = None

    @property
    def discrepant(self) -> bool:
        if self.formula_degree is None or self.brute_degree is None:
            return False
        return self.formula_degree != self.brute_degree

    def to_json(self) -> dict:
        return {
            "shape": list(self.shape),
            "nvars": self.nvars,
            "flavor": self.flavor,
            "formula_degree": self.formula_degree,
            "brute_degree": self.brute_degree,
            "witness": self.witness.to_json() if self.witness else None,
            "bounds": self.bounds.to_json() if self.bounds else None,
            "discrepant": self.discrepant,
        }


def degree_report(
    lam: Sequence[int],
    n: int,
    flavor: str,
    brute: bool = False,
    witness: bool = False,
) -> DegreeReport:
    """Formula degree (or window for the Q-family), optionally cross-checked
    against the enumeration oracle."""
    lam = check_partition(lam)
    report = DegreeReport(lam, n, flavor)
    if flavor == SVT:
        report.formula_degree = g_degree_formula(lam, n)
    elif flavor == PSVT:
        report.formula_degree = gp_degree_formula(lam, n)
    elif flavor == QSVT:
        report.bounds = gq_degree_bounds(lam, n)
        report.formula_degree = report.bounds.exact
    else:
        raise ValueError(f"unknown flavor {flavor!r}")
    if witness:
        report.brute_degree, report.witness = max_degree_witness(lam, n, flavor)
    elif brute:
        report.brute_degree = max_degree_brute(lam, n, flavor)
    return report
