"""Sparse exact-integer multivariate polynomials with a beta exponent per term.

A term is keyed by (x-exponent vector, beta exponent) and carries a nonzero
integer coefficient.  Divided differences, the 1-t specialization, and the
coefficientwise comparison used for the embedding order live here as free
functions.
"""

from __future__ import annotations

import heapq
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from .errors import InternalDivisionError

TermKey = tuple[tuple[int, ...], int]


class MultiPoly:
    """Polynomial in x_1..x_nvars and beta, exact integer coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Optional[dict[TermKey, int]] = None):
        self.nvars = int(nvars)
        clean: dict[TermKey, int] = {}
        if terms:
            for (xs, b), coeff in terms.items():
                if coeff == 0:
                    continue
                xs = tuple(xs)
                if len(xs) != self.nvars:
                    raise ValueError(f"exponent vector {xs} has wrong length")
                clean[(xs, int(b))] = int(coeff)
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "MultiPoly":
        return cls(nvars)

    @classmethod
    def const(cls, value: int, nvars: int) -> "MultiPoly":
        return cls(nvars, {((0,) * nvars, 0): value})

    @classmethod
    def one(cls, nvars: int) -> "MultiPoly":
        return cls.const(1, nvars)

    @classmethod
    def variable(cls, i: int, nvars: int) -> "MultiPoly":
        """The variable x_i (1-based)."""
        if not 1 <= i <= nvars:
            raise ValueError(f"variable index {i} out of range")
        xs = [0] * nvars
        xs[i - 1] = 1
        return cls(nvars, {(tuple(xs), 0): 1})

    @classmethod
    def beta(cls, nvars: int) -> "MultiPoly":
        return cls(nvars, {((0,) * nvars, 1): 1})

    # -- ring structure ----------------------------------------------------

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, int):
            return MultiPoly.const(other, self.nvars)
        return NotImplemented  # type: ignore[return-value]

    def extend(self, nvars: int) -> "MultiPoly":
        """The same polynomial viewed in a ring with more x-variables."""
        if nvars < self.nvars:
            raise ValueError("cannot shrink the variable count")
        if nvars == self.nvars:
            return self
        pad = (0,) * (nvars - self.nvars)
        return MultiPoly(nvars, {(xs + pad, b): c for (xs, b), c in self.terms.items()})

    @staticmethod
    def _align(a: "MultiPoly", b: "MultiPoly") -> tuple["MultiPoly", "MultiPoly"]:
        n = max(a.nvars, b.nvars)
        return a.extend(n), b.extend(n)

    def __add__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._align(self, other)
        terms = dict(a.terms)
        for key, coeff in b.terms.items():
            new = terms.get(key, 0) + coeff
            if new:
                terms[key] = new
            else:
                terms.pop(key, None)
        return MultiPoly(a.nvars, terms)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.nvars, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "MultiPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._align(self, other)
        terms: dict[TermKey, int] = {}
        for (xs1, b1), c1 in a.terms.items():
            for (xs2, b2), c2 in b.terms.items():
                key = (tuple(e1 + e2 for e1, e2 in zip(xs1, xs2)), b1 + b2)
                new = terms.get(key, 0) + c1 * c2
                if new:
                    terms[key] = new
                else:
                    terms.pop(key, None)
        return MultiPoly(a.nvars, terms)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = MultiPoly.const(other, self.nvars)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        a, b = self._align(self, other)
        return a.terms == b.terms

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- queries -----------------------------------------------------------

    def coefficient(self, xs: Sequence[int], beta: int = 0) -> int:
        return self.terms.get((tuple(xs), beta), 0)

    def x_degree(self) -> Optional[int]:
        """Total degree in the x-variables; None for the zero polynomial."""
        if not self.terms:
            return None
        return max(sum(xs) for xs, _ in self.terms)

    def lowest_x_degree(self) -> Optional[int]:
        if not self.terms:
            return None
        return min(sum(xs) for xs, _ in self.terms)

    def support_variables(self) -> set[int]:
        """1-based indices of x-variables that actually occur."""
        out: set[int] = set()
        for xs, _ in self.terms:
            for i, e in enumerate(xs):
                if e:
                    out.add(i + 1)
        return out

    def sorted_terms(self) -> list[tuple[TermKey, int]]:
        return sorted(self.terms.items())

    def swap(self, i: int, j: int) -> "MultiPoly":
        """Exchange x_i and x_j (1-based); beta is untouched."""
        terms: dict[TermKey, int] = {}
        for (xs, b), c in self.terms.items():
            lst = list(xs)
            lst[i - 1], lst[j - 1] = lst[j - 1], lst[i - 1]
            terms[(tuple(lst), b)] = c
        return MultiPoly(self.nvars, terms)

    def specialize_beta(self, value: int) -> "MultiPoly":
        """Substitute a concrete integer for beta, folding it into coefficients."""
        terms: dict[TermKey, int] = {}
        for (xs, b), c in self.terms.items():
            key = (xs, 0)
            new = terms.get(key, 0) + c * value**b
            if new:
                terms[key] = new
            else:
                terms.pop(key, None)
        return MultiPoly(self.nvars, terms)

    # -- serialization -----------------------------------------------------

    def to_text(self, var_names: Optional[Sequence[str]] = None) -> str:
        if not self.terms:
            return "0"
        names = var_names or [f"x{i}" for i in range(1, self.nvars + 1)]
        chunks = []
        for (xs, b), coeff in self.sorted_terms():
            factors = [
                names[i] if e == 1 else f"{names[i]}^{e}"
                for i, e in enumerate(xs)
                if e
            ]
            if b == 1:
                factors.append("b")
            elif b > 1:
                factors.append(f"b^{b}")
            mag = abs(coeff)
            if mag != 1 or not factors:
                factors.insert(0, str(mag))
            term = "*".join(factors)
            if not chunks:
                chunks.append(term if coeff > 0 else f"-{term}")
            else:
                chunks.append(("+ " if coeff > 0 else "- ") + term)
        return " ".join(chunks)

    def to_json(self) -> dict:
        return {
            "nvars": self.nvars,
            "terms": [
                {"x": list(xs), "beta": b, "c": coeff}
                for (xs, b), coeff in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "MultiPoly":
        terms = {
            (tuple(t["x"]), int(t["beta"])): int(t["c"]) for t in data["terms"]
        }
        return cls(int(data["nvars"]), terms)

    def __repr__(self) -> str:
        return f"MultiPoly({self.nvars}, {self.to_text()!r})"


class UniPoly:
    """Dense exact-integer polynomial in one variable t."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        lst = [int(c) for c in coeffs]
        while lst and lst[-1] == 0:
            lst.pop()
        self.coeffs = tuple(lst)

    def degree(self) -> Optional[int]:
        return len(self.coeffs) - 1 if self.coeffs else None

    def __eq__(self, other) -> bool:
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "UniPoly") -> "UniPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out)

    def to_text(self) -> str:
        if not self.coeffs:
            return "0"
        chunks = []
        for e, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if e == 0:
                body = str(abs(c))
            else:
                mono = "t" if e == 1 else f"t^{e}"
                body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
            if not chunks:
                chunks.append(body if c > 0 else f"-{body}")
            else:
                chunks.append(("+ " if c > 0 else "- ") + body)
        return " ".join(chunks)

    def __repr__(self) -> str:
        return f"UniPoly({self.to_text()!r})"


def divided_difference(f: MultiPoly, i: int) -> MultiPoly:
    """(f - s_i f) / (x_i - x_{i+1}), computed by exact long division.

    The numerator is always divisible; a nonzero remainder means the
    arithmetic itself is broken, so it raises InternalDivisionError.
    """
    if not 1 <= i < f.nvars:
        raise ValueError(f"index {i} out of range for {f.nvars} variables")
    numerator = f - f.swap(i, i + 1)
    quot: dict[TermKey, int] = {}
    work = dict(numerator.terms)
    # order by descending x_i exponent; each reduction strictly lowers it
    heap = [(-xs[i - 1], (xs, b)) for (xs, b) in work]
    heapq.heapify(heap)
    while heap:
        _, key = heapq.heappop(heap)
        coeff = work.pop(key, 0)
        if coeff == 0:
            continue
        xs, b = key
        a = xs[i - 1]
        if a == 0:
            raise InternalDivisionError(
                f"nonzero remainder dividing by x{i} - x{i + 1}"
            )
        lowered = list(xs)
        lowered[i - 1] = a - 1
        qkey = (tuple(lowered), b)
        quot[qkey] = quot.get(qkey, 0) + coeff
        # subtracting coeff * mono * (x_i - x_{i+1}) cancels the popped term
        # and feeds one term with the x_{i+1} exponent bumped back in
        bumped = list(lowered)
        bumped[i] += 1
        rkey = (tuple(bumped), b)
        new = work.get(rkey, 0) + coeff
        if new:
            work[rkey] = new
            heapq.heappush(heap, (-rkey[0][i - 1], rkey))
        else:
            work.pop(rkey, None)
    return MultiPoly(f.nvars, quot)


def beta_divided_difference(f: MultiPoly, i: int) -> MultiPoly:
    """Divided difference applied to (1 - x_{i+1}) * f."""
    factor = MultiPoly.one(f.nvars) - MultiPoly.variable(i + 1, f.nvars)
    return divided_difference(factor * f, i)


@lru_cache(maxsize=None)
def _one_minus_t_power(d: int) -> tuple[int, ...]:
    """Coefficients of (1 - t)^d."""
    coeffs = [1]
    for _ in range(d):
        nxt = [0] * (len(coeffs) + 1)
        for e, c in enumerate(coeffs):
            nxt[e] += c
            nxt[e + 1] -= c
        coeffs = nxt
    return tuple(coeffs)


def specialize_one_minus_t(f: MultiPoly, beta_value: int = -1) -> UniPoly:
    """Substitute every x_i := 1 - t and beta := beta_value."""
    out: dict[int, int] = {}
    for (xs, b), coeff in f.terms.items():
        scale = coeff * beta_value**b
        for e, c in enumerate(_one_minus_t_power(sum(xs))):
            out[e] = out.get(e, 0) + scale * c
    if not out:
        return UniPoly()
    coeffs = [0] * (max(out) + 1)
    for e, c in out.items():
        coeffs[e] = c
    return UniPoly(coeffs)


def precede(f: MultiPoly, g: MultiPoly) -> bool:
    """Coefficientwise comparison: every nonzero coefficient of f has the
    same sign as, and magnitude at most, the matching coefficient of g.

    Term keys are (x-exponent, beta-exponent) pairs, aligned by padding the
    smaller ring with zero exponents; zero coefficients of f impose nothing.
    """
    n = max(f.nvars, g.nvars)
    fe, ge = f.extend(n), g.extend(n)
    for key, cf in fe.terms.items():
        cg = ge.terms.get(key, 0)
        if cf > 0:
            if cg < cf:
                return False
        else:
            if cg > cf:
                return False
    return True
