"""Symplectic Grothendieck polynomials via the divided-difference recursion.

The table for 2n letters starts from the closed product at the reverse
permutation and sweeps downward: whenever z has a descent at i that is not
the transposition (i, i+1) itself, the polynomial of s_i z s_i is the
beta-style divided difference of the polynomial of z.  Every involution is
reachable; when two derivation paths meet, the results must agree exactly.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import InconsistentRecursion, OddSize, SizeTooLarge
from .grothendieck import gp_degree_formula, gp_polynomial
from .permutations import (
    FpfInvolution,
    direct_sum_21,
    fpf_all,
    lambda_sp,
    last_nonzero_position,
    spcode,
)
from .polys import MultiPoly, beta_divided_difference, precede

DESK_CEILING = 8


def gsp_top(size: int) -> MultiPoly:
    """Product of (x_i + x_j - x_i x_j) over pairs i < j <= size - i."""
    if size % 2 or size < 2:
        raise OddSize(f"size must be even and >= 2, got {size}")
    out = MultiPoly.one(size)
    for i in range(1, size + 1):
        for j in range(i + 1, size - i + 1):
            xi = MultiPoly.variable(i, size)
            xj = MultiPoly.variable(j, size)
            out = out * (xi + xj - xi * xj)
    return out


@dataclass
class SymplecticTable:
    """Polynomials for every fixed-point-free involution on ``size`` letters."""

    size: int
    polys: dict[tuple[int, ...], MultiPoly]

    def poly(self, z: FpfInvolution) -> MultiPoly:
        return self.polys[z.word]

    def involutions(self) -> list[FpfInvolution]:
        return [FpfInvolution(word) for word in sorted(self.polys)]

    def to_json(self) -> dict:
        return {
            "size": self.size,
            "polys": {
                ",".join(str(v) for v in word): poly.to_json()
                for word, poly in sorted(self.polys.items())
            },
        }


def _conjugate_by_adjacent(word: tuple[int, ...], i: int) -> tuple[int, ...]:
    """s_i z s_i in one-line notation (1-based i)."""
    swapped = list(word)
    swapped[i - 1], swapped[i] = swapped[i], swapped[i - 1]
    for k, v in enumerate(swapped):
        if v == i:
            swapped[k] = i + 1
        elif v == i + 1:
            swapped[k] = i
    return tuple(swapped)


def gsp_all(size: int, allow_large: bool = False) -> SymplecticTable:
    """Build the full table by breadth-first closure from the top element.

    Whenever a polynomial is derived a second time along a different path it
    is compared against the stored one; a mismatch raises
    InconsistentRecursion, since the family is unique.
    """
    if size % 2 or size < 2:
        raise OddSize(f"size must be even and >= 2, got {size}")
    if size > DESK_CEILING and not allow_large:
        raise SizeTooLarge(
            f"size {size} exceeds the desk-scale ceiling {DESK_CEILING}; "
            "pass allow_large=True to override"
        )
    top = tuple(range(size, 0, -1))
    table: dict[tuple[int, ...], MultiPoly] = {top: gsp_top(size)}
    queue = deque([top])
    while queue:
        word = queue.popleft()
        poly = table[word]
        for i in range(1, size):
            zi, zi1 = word[i - 1], word[i]
            if zi == i + 1 or zi1 == i or zi <= zi1:
                continue
            target = _conjugate_by_adjacent(word, i)
            derived = beta_divided_difference(poly, i)
            known = table.get(target)
            if known is None:
                table[target] = derived
                queue.append(target)
            elif known != derived:
                raise InconsistentRecursion(
                    f"two derivations of {target} disagree"
                )
    expected = {z.word for z in fpf_all(size)}
    if set(table) != expected:
        raise InconsistentRecursion("recursion did not reach every involution")
    return SymplecticTable(size, table)


def lemma44_check(
    z: FpfInvolution,
    table_small: Optional[SymplecticTable] = None,
    table_large: Optional[SymplecticTable] = None,
) -> bool:
    """Coefficientwise embedding of the polynomial of z into that of 21 x z.

    The smaller polynomial is compared inside the larger ring, variables
    aligned by index.
    """
    if table_small is None:
        table_small = gsp_all(z.size)
    if table_large is None:
        table_large = gsp_all(z.size + 2)
    small = table_small.poly(z)
    large = table_large.poly(direct_sum_21(z))
    return precede(small, large)


@dataclass
class SymplecticDegreeBound:
    """Degree of the symplectic polynomial against the shifted-family bound."""

    z: tuple[int, ...]
    trivial: bool
    lhs: int
    rhs: int
    holds: bool
    shape: tuple[int, ...]
    k: Optional[int]

    def to_json(self) -> dict:
        return {
            "z": list(self.z),
            "trivial": self.trivial,
            "deg_gsp": self.lhs,
            "deg_gp_bound": self.rhs,
            "holds": self.holds,
            "shape": list(self.shape),
            "k": self.k,
        }


def cor46_bound(
    z: FpfInvolution, table: Optional[SymplecticTable] = None
) -> SymplecticDegreeBound:
    """deg of the symplectic polynomial vs the shifted degree formula at
    (symplectic shape, last nonzero code position); both sides computed
    independently."""
    shape = lambda_sp(z)
    if not shape:
        return SymplecticDegreeBound(z.word, True, 0, 0, True, (), None)
    if table is None:
        table = gsp_all(z.size)
    lhs = table.poly(z).x_degree() or 0
    k = last_nonzero_position(z)
    assert k is not None
    rhs = gp_degree_formula(shape, k)
    return SymplecticDegreeBound(z.word, False, lhs, rhs, lhs <= rhs, shape, k)


def looks_fpf_vexillary(
    z: FpfInvolution, table: Optional[SymplecticTable] = None
) -> bool:
    """Heuristic necessary condition for FPF-vexillarity: the symplectic
    polynomial embeds coefficientwise into the shifted polynomial of its
    shape, truncated to the variables it can involve.

    This is a finite check against a truncation of a stable-limit statement,
    so a True answer is evidence, not proof.
    """
    shape = lambda_sp(z)
    if not shape:
        return True
    if table is None:
        table = gsp_all(z.size)
    k = last_nonzero_position(z)
    assert k is not None
    target = gp_polynomial(shape, k).specialize_beta(-1)
    return precede(table.poly(z), target)


def spcode_summary(z: FpfInvolution) -> dict:
    """Code, shape, and last nonzero position in one JSON-able record."""
    return {
        "z": list(z.word),
        "spcode": list(spcode(z)),
        "shape": list(lambda_sp(z)),
        "last_nonzero_position": last_nonzero_position(z),
    }
