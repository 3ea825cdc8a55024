"""Verification sweeps: closed formulas against the enumeration oracle,
plus the property checks exposed by the command line.

Every sweep returns a CheckResult listing the counterexamples it found, in
input order, so the smallest one comes first.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import permutations as all_words

from .grothendieck import g_degree_formula, gp_degree_formula, gq_degree_bounds
from .ideals import det_int, pfaffian_numeric
from .permutations import (
    FpfInvolution,
    Permutation,
    direct_sum_21,
    fpf_all,
    grassmannian_from_shape,
    is_inverse_fireworks_rothe,
    is_inverse_fireworks_runs,
)
from .shapes import all_partitions, all_strict_partitions, is_strict
from .symplectic import cor46_bound, gsp_all, lemma44_check
from .tableaux import PSVT, QSVT, SVT, max_degree_brute


@dataclass
class CheckResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        if self.ok:
            return f"OK: {self.checked} checked, 0 discrepancies"
        return (
            f"FAIL: {self.checked} checked, {len(self.failures)} discrepancies; "
            f"first: {self.failures[0]}"
        )

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "checked": self.checked,
            "failures": self.failures,
            "ok": self.ok,
        }


def check_shifted_degree_formula(
    max_part: int = 5, max_len: int = 3, max_vars: int = 4
) -> CheckResult:
    """Shifted degree formula vs brute enumeration on every strict shape in range."""
    result = CheckResult("shifted-degree-formula")
    for lam in all_strict_partitions(max_part, max_len):
        if not lam:
            continue
        for n in range(len(lam), max_vars + 1):
            formula = gp_degree_formula(lam, n)
            brute = max_degree_brute(lam, n, PSVT)
            result.checked += 1
            if formula != brute:
                result.failures.append(
                    f"shape={lam} n={n}: formula {formula} != brute {brute}"
                )
    return result


def check_svt_degree_formula(
    max_part: int = 4, max_len: int = 4, max_vars: int = 4
) -> CheckResult:
    """Symmetric degree formula vs brute enumeration on every shape in range."""
    result = CheckResult("svt-degree-formula")
    for lam in all_partitions(max_part, max_len):
        if not lam:
            continue
        for n in range(len(lam), max_vars + 1):
            formula = g_degree_formula(lam, n)
            brute = max_degree_brute(lam, n, SVT)
            result.checked += 1
            if formula != brute:
                result.failures.append(
                    f"shape={lam} n={n}: formula {formula} != brute {brute}"
                )
    return result


def check_q_degree_window(
    max_part: int = 5, max_len: int = 3, max_vars: int = 4
) -> CheckResult:
    """Brute Q-degree minus brute P-degree must land in [rows, n], hitting
    the top end exactly when n equals the number of rows."""
    result = CheckResult("q-degree-window")
    for lam in all_strict_partitions(max_part, max_len):
        if not lam:
            continue
        for n in range(len(lam), max_vars + 1):
            gq = max_degree_brute(lam, n, QSVT)
            gp = max_degree_brute(lam, n, PSVT)
            gap = gq - gp
            result.checked += 1
            if not len(lam) <= gap <= n:
                result.failures.append(
                    f"shape={lam} n={n}: gap {gap} outside [{len(lam)}, {n}]"
                )
            elif n == len(lam) and gap != n:
                result.failures.append(
                    f"shape={lam} n={n}: expected gap {n} at n == rows, got {gap}"
                )
            bounds = gq_degree_bounds(lam, n)
            if not bounds.lower <= gq <= bounds.upper:
                result.failures.append(
                    f"shape={lam} n={n}: brute {gq} outside window "
                    f"[{bounds.lower}, {bounds.upper}]"
                )
    return result


def check_embedding_preorder(max_size: int = 4) -> CheckResult:
    """Each polynomial embeds coefficientwise into that of its 21-extension."""
    result = CheckResult("embedding-preorder")
    tables = {size: gsp_all(size) for size in range(2, max_size + 3, 2)}
    for size in range(2, max_size + 1, 2):
        for z in fpf_all(size):
            result.checked += 1
            if not lemma44_check(z, tables[size], tables[size + 2]):
                result.failures.append(f"z={z.one_line()}")
    return result


def check_symplectic_degree_bound(max_size: int = 6) -> CheckResult:
    """Symplectic degree at most the shifted formula at the symplectic data.

    A failure here is a candidate for non-vexillarity rather than a bug, so
    failures carry the full report.
    """
    result = CheckResult("symplectic-degree-bound")
    for size in range(4, max_size + 1, 2):
        table = gsp_all(size)
        for z in fpf_all(size):
            report = cor46_bound(z, table)
            result.checked += 1
            if not report.holds:
                result.failures.append(
                    f"z={z.one_line()}: deg {report.lhs} > bound {report.rhs}"
                )
    return result


def check_fireworks_criterion(
    max_part: int = 4, max_len: int = 4, max_vars: int = 5, max_sn: int = 6
) -> CheckResult:
    """One-descent shapes are inverse fireworks exactly when strict, and the
    run-decomposition and diagram criteria agree on every permutation."""
    result = CheckResult("fireworks-criterion")
    for lam in all_partitions(max_part, max_len):
        if not lam:
            continue
        for n in range(len(lam), max_vars + 1):
            w = grassmannian_from_shape(lam, n)
            result.checked += 1
            if is_inverse_fireworks_runs(w) != is_strict(lam):
                result.failures.append(f"shape={lam} n={n}: w={w.one_line()}")
    for n in range(1, max_sn + 1):
        for word in all_words(range(1, n + 1)):
            w = Permutation(word)
            result.checked += 1
            if is_inverse_fireworks_runs(w) != is_inverse_fireworks_rothe(w):
                result.failures.append(f"methods disagree on {w.one_line()}")
    return result


def random_skew_matrix(size: int, rng: random.Random, bound: int = 9) -> list[list[int]]:
    mat = [[0] * size for _ in range(size)]
    for i in range(size):
        for j in range(i + 1, size):
            v = rng.randint(-bound, bound)
            mat[i][j] = v
            mat[j][i] = -v
    return mat


def check_pfaffian_squares(
    trials: int = 100, sizes: tuple[int, ...] = (2, 4, 6), seed: int = 0
) -> CheckResult:
    """pf(A)^2 == det(A) on random integer skew-symmetric matrices."""
    result = CheckResult("pfaffian-squares")
    rng = random.Random(seed)
    for size in sizes:
        for _ in range(trials):
            mat = random_skew_matrix(size, rng)
            result.checked += 1
            pf = pfaffian_numeric(mat)
            det = det_int(mat)
            if pf * pf != det:
                result.failures.append(f"size={size} matrix={mat}: {pf}^2 != {det}")
    return result
