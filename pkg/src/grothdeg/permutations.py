"""Permutation and fixed-point-free-involution combinatorics.

Permutations are immutable one-line-notation tuples on {1..n}; everything
derived from them (codes, rank matrices, Rothe diagrams, the symplectic code)
uses the same 1-based indexing.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .errors import OddSize, TooFewVariables
from .shapes import check_partition, conjugate


@dataclass(frozen=True)
class Permutation:
    word: tuple[int, ...]

    def __post_init__(self) -> None:
        word = tuple(int(v) for v in self.word)
        if sorted(word) != list(range(1, len(word) + 1)):
            raise ValueError(f"{word} is not one-line notation on 1..{len(word)}")
        object.__setattr__(self, "word", word)

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        return cls(tuple(int(tok) for tok in text.strip().split(",")))

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @property
    def size(self) -> int:
        return len(self.word)

    def __call__(self, i: int) -> int:
        return self.word[i - 1]

    def inverse(self) -> "Permutation":
        out = [0] * self.size
        for i, v in enumerate(self.word, start=1):
            out[v - 1] = i
        return Permutation(tuple(out))

    def inversions(self) -> int:
        w = self.word
        return sum(
            1
            for i in range(len(w))
            for j in range(i + 1, len(w))
            if w[i] > w[j]
        )

    def descents(self) -> list[int]:
        return [i for i in range(1, self.size) if self.word[i - 1] > self.word[i]]

    def is_grassmannian(self) -> bool:
        """At most one descent."""
        return len(self.descents()) <= 1

    def cycles(self) -> list[tuple[int, ...]]:
        seen: set[int] = set()
        out = []
        for start in range(1, self.size + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            nxt = self(start)
            while nxt != start:
                cyc.append(nxt)
                seen.add(nxt)
                nxt = self(nxt)
            out.append(tuple(cyc))
        return out

    def one_line(self) -> str:
        return ",".join(str(v) for v in self.word)

    def cycle_notation(self) -> str:
        return "".join(
            "(" + " ".join(str(v) for v in cyc) + ")" for cyc in self.cycles()
        )

    def __repr__(self) -> str:
        return f"Permutation({self.one_line()})"


@dataclass(frozen=True)
class FpfInvolution(Permutation):
    """Involution without fixed points; only exists on evenly many letters."""

    def __post_init__(self) -> None:
        super().__post_init__()
        if self.size % 2:
            raise OddSize(f"no fixed-point-free involutions on {self.size} letters")
        for i in range(1, self.size + 1):
            if self(i) == i:
                raise ValueError(f"{self.word} fixes {i}")
            if self(self(i)) != i:
                raise ValueError(f"{self.word} is not an involution")

    @classmethod
    def parse(cls, text: str) -> "FpfInvolution":
        return cls(tuple(int(tok) for tok in text.strip().split(",")))


def bcode(w: Permutation) -> tuple[int, ...]:
    """c_i counts positions j > i carrying a smaller value."""
    word = w.word
    return tuple(
        sum(1 for j in range(i + 1, len(word)) if word[j] < word[i])
        for i in range(len(word))
    )


def shape_of(w: Permutation) -> tuple[int, ...]:
    """Code entries sorted decreasingly, zeros dropped."""
    return tuple(sorted((c for c in bcode(w) if c), reverse=True))


def from_code(code: Sequence[int]) -> Permutation:
    """The unique permutation with the given code (c_i <= size - i required)."""
    code = list(code)
    n = len(code)
    available = list(range(1, n + 1))
    word = []
    for i, c in enumerate(code):
        if c >= len(available):
            raise ValueError(f"code entry {c} too large at position {i + 1}")
        word.append(available.pop(c))
    return Permutation(tuple(word))


def grassmannian_from_shape(lam: Sequence[int], n: int) -> Permutation:
    """The unique permutation with one descent, at position n, whose sorted
    code is ``lam``; built by reversing the zero-padded shape into a code."""
    lam = check_partition(lam)
    if n < len(lam):
        raise TooFewVariables(f"need n >= {len(lam)} for shape {lam}")
    if not lam:
        return Permutation.identity(max(n, 1))
    padded = list(lam) + [0] * (n - len(lam))
    code = list(reversed(padded)) + [0] * lam[0]
    return from_code(code)


def rank_matrix(w: Permutation) -> tuple[tuple[int, ...], ...]:
    """Entry (i, j) is the rank of the top-left i x j block of the
    permutation matrix of w."""
    n = w.size
    out = []
    for i in range(1, n + 1):
        row = []
        count_by_col = [0] * (n + 1)
        for k in range(1, i + 1):
            count_by_col[w(k)] += 1
        running = 0
        for j in range(1, n + 1):
            running += count_by_col[j]
            row.append(running)
        out.append(tuple(row))
    return tuple(out)


def rothe_diagram(w: Permutation) -> frozenset[tuple[int, int]]:
    """Cells (i, j) with w(i) > j and the preimage of j below i."""
    inv = w.inverse()
    return frozenset(
        (i, j)
        for i in range(1, w.size + 1)
        for j in range(1, w.size + 1)
        if w(i) > j and inv(j) > i
    )


def _decreasing_runs(word: Sequence[int]) -> list[list[int]]:
    runs: list[list[int]] = []
    for v in word:
        if runs and runs[-1][-1] > v:
            runs[-1].append(v)
        else:
            runs.append([v])
    return runs


def is_inverse_fireworks_runs(w: Permutation) -> bool:
    """Initial elements of the maximal decreasing runs of the inverse word
    must increase left to right."""
    initials = [run[0] for run in _decreasing_runs(w.inverse().word)]
    return all(a < b for a, b in zip(initials, initials[1:]))


def is_inverse_fireworks_rothe(w: Permutation) -> bool:
    """Rothe-diagram criterion: the rightmost cell of each nonempty row i
    must sit in column w(i) - 1."""
    cells = rothe_diagram(w)
    rightmost: dict[int, int] = {}
    for i, j in cells:
        if j > rightmost.get(i, 0):
            rightmost[i] = j
    return all(j == w(i) - 1 for i, j in rightmost.items())


def is_inverse_fireworks(w: Permutation) -> bool:
    return is_inverse_fireworks_runs(w)


def spcode(z: FpfInvolution) -> tuple[int, ...]:
    """c_i counts positions j > i with z(j) < i and z(j) < z(i)."""
    word = z.word
    n = len(word)
    return tuple(
        sum(
            1
            for j in range(i + 1, n + 1)
            if word[j - 1] < i and word[i - 1] > word[j - 1]
        )
        for i in range(1, n + 1)
    )


def lambda_sp(z: FpfInvolution) -> tuple[int, ...]:
    """Symplectic shape: transpose of the sorted symplectic code."""
    sorted_code = tuple(sorted((c for c in spcode(z) if c), reverse=True))
    return conjugate(sorted_code)


def last_nonzero_position(z: FpfInvolution) -> Optional[int]:
    """Largest i with a nonzero symplectic code entry; None for the zero code."""
    code = spcode(z)
    for i in range(len(code), 0, -1):
        if code[i - 1]:
            return i
    return None


def fpf_all(size: int) -> list[FpfInvolution]:
    """All fixed-point-free involutions on {1..size}, in a fixed order."""
    if size % 2:
        raise OddSize(f"no fixed-point-free involutions on {size} letters")

    def rec(remaining: tuple[int, ...]) -> Iterator[dict[int, int]]:
        if not remaining:
            yield {}
            return
        first = remaining[0]
        for partner in remaining[1:]:
            rest = tuple(v for v in remaining[1:] if v != partner)
            for pairing in rec(rest):
                pairing = dict(pairing)
                pairing[first] = partner
                pairing[partner] = first
                yield pairing

    out = []
    for pairing in rec(tuple(range(1, size + 1))):
        out.append(FpfInvolution(tuple(pairing[i] for i in range(1, size + 1))))
    return out


def direct_sum_21(z: FpfInvolution) -> FpfInvolution:
    """Prepend the 2-cycle (1 2) and shift everything else up by two."""
    return FpfInvolution((2, 1) + tuple(v + 2 for v in z.word))


def pad_identity(w: Permutation) -> Permutation:
    """Append a fixed point."""
    return Permutation(w.word + (w.size + 1,))
