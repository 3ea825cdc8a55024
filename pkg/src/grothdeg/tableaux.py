"""Set-valued fillings of (shifted) diagrams and their exhaustive enumeration.

Entries live in the primed alphabet 1' < 1 < 2' < 2 < ... and are encoded as
integers: primed k is code 2k-1, unprimed k is code 2k, so the alphabet order
is plain integer order.  Ordinary (unshifted) tableaux use unprimed entries
only, i.e. even codes.

Three rule sets are supported:

* ``SVT``   - ordinary set-valued tableaux: strict up columns, weak along rows;
* ``PSVT``  - shifted, primed-max entries are weak up / strict right and
  unprimed-max entries strict up / weak right; no primes on the main diagonal;
* ``QSVT``  - same as PSVT but primes are allowed on the main diagonal.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from functools import lru_cache
from typing import Iterator, Optional, Sequence

from .errors import EmptyTableauSet, ShapeMismatch, TooFewVariables
from .shapes import Box, Diagram, check_partition, check_strict, diagram

SVT = "svt"
PSVT = "psvt"
QSVT = "qsvt"
FLAVORS = (SVT, PSVT, QSVT)

EntrySet = tuple[int, ...]  # sorted ascending entry codes, nonempty


def entry_code(value: int, primed: bool = False) -> int:
    if value < 1:
        raise ValueError("entry values are positive")
    return 2 * value - 1 if primed else 2 * value


def entry_value(code: int) -> int:
    return (code + 1) // 2


def entry_primed(code: int) -> bool:
    return code % 2 == 1


def format_entry(code: int) -> str:
    return f"{entry_value(code)}'" if entry_primed(code) else str(entry_value(code))


def format_entry_set(codes: Sequence[int]) -> str:
    """Concatenated display ("34'" is {3, 4'}); commas appear past value 9."""
    if any(entry_value(c) > 9 for c in codes):
        return ",".join(format_entry(c) for c in sorted(codes))
    return "".join(format_entry(c) for c in sorted(codes))


def parse_entry_set(text: str) -> EntrySet:
    """Parse a box: comma-separated entries, or concatenated single digits."""
    text = text.strip()
    if not text:
        raise ValueError("empty box")
    codes = []
    if "," in text:
        for tok in text.split(","):
            tok = tok.strip()
            primed = tok.endswith("'")
            codes.append(entry_code(int(tok.rstrip("'")), primed))
    else:
        i = 0
        while i < len(text):
            ch = text[i]
            if not ch.isdigit():
                raise ValueError(f"cannot parse box {text!r}")
            value = int(ch)
            i += 1
            primed = i < len(text) and text[i] == "'"
            if primed:
                i += 1
            codes.append(entry_code(value, primed))
    out = tuple(sorted(codes))
    if len(set(out)) != len(out):
        raise ValueError(f"duplicate entries in box {text!r}")
    return out


def _flavor_shifted(flavor: str) -> bool:
    if flavor not in FLAVORS:
        raise ValueError(f"unknown flavor {flavor!r}")
    return flavor != SVT


@dataclass(frozen=True)
class Violation:
    """One broken rule; ``box`` is the offending box, ``other`` its neighbor."""

    kind: str
    box: Box
    other: Optional[Box] = None

    def __str__(self) -> str:
        if self.other is None:
            return f"{self.kind} at {self.box}"
        return f"{self.kind} between {self.box} and {self.other}"


@dataclass(frozen=True)
class Tableau:
    """Immutable set-valued filling of a (shifted) diagram.

    ``rows[i]`` lists the entry sets of row i+1 from left to right; each
    entry set is a sorted tuple of entry codes.
    """

    shape: tuple[int, ...]
    flavor: str
    n: int
    rows: tuple[tuple[EntrySet, ...], ...]

    def __post_init__(self) -> None:
        shape = check_partition(self.shape)
        object.__setattr__(self, "shape", shape)
        shifted = _flavor_shifted(self.flavor)
        if shifted:
            check_strict(shape)
        if len(self.rows) != len(shape):
            raise ShapeMismatch(f"{len(self.rows)} rows for shape {shape}")
        rows = tuple(
            tuple(tuple(sorted(box)) for box in row) for row in self.rows
        )
        for i, row in enumerate(rows):
            if len(row) != shape[i]:
                raise ShapeMismatch(f"row {i + 1} has {len(row)} boxes, expected {shape[i]}")
            for box in row:
                if not box:
                    raise ShapeMismatch(f"empty box in row {i + 1}")
        object.__setattr__(self, "rows", rows)

    @property
    def shifted(self) -> bool:
        return _flavor_shifted(self.flavor)

    @property
    def diagram(self) -> Diagram:
        return diagram(self.shape, self.shifted)

    def _col_start(self, r: int) -> int:
        return r if self.shifted else 1

    def entry_set(self, box: Box) -> EntrySet:
        r, c = box
        return self.rows[r - 1][c - self._col_start(r)]

    def boxes(self) -> list[Box]:
        return self.diagram.boxes()

    def degree(self) -> int:
        return sum(len(box) for row in self.rows for box in row)

    def content(self) -> tuple[int, ...]:
        counts = [0] * self.n
        for row in self.rows:
            for box in row:
                for code in box:
                    counts[entry_value(code) - 1] += 1
        return tuple(counts)

    def with_box(self, box: Box, codes: Sequence[int]) -> "Tableau":
        r, c = box
        idx = c - self._col_start(r)
        rows = [list(row) for row in self.rows]
        rows[r - 1][idx] = tuple(sorted(codes))
        return Tableau(self.shape, self.flavor, self.n, tuple(tuple(row) for row in rows))

    def to_text(self) -> str:
        """Rows from the top row down to row 1; shifted rows are dot-padded."""
        lines = []
        for r in range(len(self.shape), 0, -1):
            cells = ["."] * (r - 1) if self.shifted else []
            cells += [format_entry_set(box) for box in self.rows[r - 1]]
            lines.append(" | ".join(cells))
        return "\n".join(lines)

    @classmethod
    def from_text(cls, text: str, flavor: str, n: int) -> "Tableau":
        lines = [ln for ln in (s.strip() for s in text.splitlines()) if ln]
        rows = []
        for line in reversed(lines):  # bottom line is row 1
            cells = [c.strip() for c in line.split("|")]
            cells = [c for c in cells if c and c != "."]
            rows.append(tuple(parse_entry_set(c) for c in cells))
        shape = tuple(len(row) for row in rows)
        return cls(shape, flavor, n, tuple(rows))

    def to_json(self) -> dict:
        return {
            "shape": list(self.shape),
            "flavor": self.flavor,
            "n": self.n,
            "rows": [
                [[format_entry(code) for code in box] for box in row]
                for row in self.rows
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Tableau":
        rows = tuple(
            tuple(parse_entry_set(",".join(box)) for box in row)
            for row in data["rows"]
        )
        return cls(tuple(data["shape"]), data["flavor"], int(data["n"]), rows)


def content_and_degree(t: Tableau) -> tuple[tuple[int, ...], int]:
    """Content vector (primes ignored) and total entry count."""
    return t.content(), t.degree()


def _row_lower_bound(left_max: int) -> int:
    # entering from the left: primed max is strict, unprimed max is weak
    return left_max + (left_max & 1)


def _col_lower_bound(below_max: int) -> int:
    # entering from below: primed max is weak, unprimed max is strict
    return below_max + 1 - (below_max & 1)


def validate(t: Tableau) -> list[Violation]:
    """All rule violations of ``t``; an empty list means the tableau is valid."""
    out: list[Violation] = []
    dia = t.diagram
    hi = 2 * t.n
    for box in dia:
        codes = t.entry_set(box)
        if codes[0] < 1 or codes[-1] > hi:
            out.append(Violation("alphabet", box))
        if t.flavor == SVT and any(entry_primed(c) for c in codes):
            out.append(Violation("primed-entry", box))
        if t.flavor == PSVT and dia.on_diagonal(box) and any(entry_primed(c) for c in codes):
            out.append(Violation("diagonal-prime", box))
        m = codes[-1]
        up = dia.up(box)
        if up is not None and t.entry_set(up)[0] < _col_lower_bound(m):
            out.append(Violation("column", box, up))
        right = dia.right(box)
        if right is not None and t.entry_set(right)[0] < _row_lower_bound(m):
            out.append(Violation("row", box, right))
    return out


def _subset_pool(n: int, evens_only: bool):
    """lo -> tuple of (entry set, max) over the allowed codes in [lo, 2n]."""
    hi = 2 * n
    cache: dict[int, tuple] = {}

    def candidates(lo: int):
        lo = max(lo, 1)
        got = cache.get(lo)
        if got is None:
            codes = [c for c in range(lo, hi + 1) if not (evens_only and c & 1)]
            got = tuple(
                (combo, combo[-1])
                for r in range(1, len(codes) + 1)
                for combo in combinations(codes, r)
            )
            cache[lo] = got
        return got

    return candidates


def _box_plan(lam: tuple[int, ...], flavor: str) -> list[tuple[int, bool, bool]]:
    """Row-major (col, starts_row, evens_only) for every box."""
    shifted = _flavor_shifted(flavor)
    dia = diagram(lam, shifted)
    plan = []
    for r in range(1, len(lam) + 1):
        for j, c in enumerate(dia.row_cols(r)):
            evens = flavor == SVT or (flavor == PSVT and c == r)
            plan.append((c, j == 0, evens))
    return plan


def _walk_fillings(lam: tuple[int, ...], n: int, flavor: str) -> Iterator[tuple[list, int]]:
    """Depth-first walk over all valid fillings.

    Yields (filling, degree) at every leaf; ``filling`` is a live scratch
    list reused between yields, so consumers must copy it if they keep it.
    The search fills boxes row 1 first, left to right; each box ranges over
    the nonempty subsets of the interval forced by its left and lower
    neighbors, so every partial filling extends only to valid tableaux.
    """
    shifted = _flavor_shifted(flavor)
    lam = check_strict(lam) if shifted else check_partition(lam)
    if n < 1:
        raise TooFewVariables("need at least one variable")
    plan = _box_plan(lam, flavor)
    if not plan:
        yield [], 0
        return

    pool_all = _subset_pool(n, False)
    pool_even = _subset_pool(n, True)
    total = len(plan)
    last = total - 1
    filling: list = [None] * total
    maxes = [0] * total
    degrees = [0] * total
    frames: list = [None] * total
    colmax: dict[int, int] = {}
    colmax_get = colmax.get

    depth = 0
    while depth >= 0:
        frame = frames[depth]
        if frame is None:
            col, starts_row, evens = plan[depth]
            lo = 1 if starts_row else _row_lower_bound(maxes[depth - 1])
            below = colmax_get(col)
            if below is not None:
                lo2 = _col_lower_bound(below)
                if lo2 > lo:
                    lo = lo2
            cands = (pool_even if evens else pool_all)(lo)
            frame = [cands, 0, len(cands), col, colmax_get(col)]
            frames[depth] = frame
        cands, idx, count, col, old = frame
        if idx >= count:
            if old is None:
                colmax.pop(col, None)
            else:
                colmax[col] = old
            frames[depth] = None
            depth -= 1
            continue
        frame[1] = idx + 1
        subset, mx = cands[idx]
        filling[depth] = subset
        maxes[depth] = mx
        colmax[col] = mx
        prior = degrees[depth - 1] if depth else 0
        degrees[depth] = prior + len(subset)
        if depth == last:
            yield filling, degrees[depth]
        else:
            depth += 1


def iter_fillings(
    lam: Sequence[int], n: int, flavor: str
) -> Iterator[tuple[EntrySet, ...]]:
    """Yield every valid filling exactly once, as a tuple of entry sets in
    row-major box order, in a fixed deterministic order."""
    for filling, _ in _walk_fillings(tuple(lam), n, flavor):
        yield tuple(filling)


def _rows_from_filling(
    lam: Sequence[int], filling: Sequence[EntrySet]
) -> tuple[tuple[EntrySet, ...], ...]:
    rows = []
    pos = 0
    for part in lam:
        rows.append(tuple(filling[pos : pos + part]))
        pos += part
    return tuple(rows)


def enumerate_tableaux(lam: Sequence[int], n: int, flavor: str) -> Iterator[Tableau]:
    """Stream all tableaux of the given flavor, in a fixed deterministic order."""
    lam = tuple(lam)
    for filling in iter_fillings(lam, n, flavor):
        yield Tableau(lam, flavor, n, _rows_from_filling(lam, filling))


def count_tableaux(lam: Sequence[int], n: int, flavor: str) -> int:
    return sum(1 for _ in _walk_fillings(tuple(lam), n, flavor))


@lru_cache(maxsize=None)
def max_degree_brute(lam: tuple[int, ...], n: int, flavor: str) -> int:
    """Maximum degree over the full enumeration; the ground-truth oracle."""
    best = -1
    for _, d in _walk_fillings(tuple(lam), n, flavor):
        if d > best:
            best = d
    if best < 0:
        raise EmptyTableauSet(f"no {flavor} tableaux of shape {lam} with n={n}")
    return best


def max_degree_witness(lam: Sequence[int], n: int, flavor: str) -> tuple[int, Tableau]:
    """Max degree together with the first tableau attaining it."""
    lam = tuple(lam)
    best = -1
    arg: Optional[tuple] = None
    for filling, d in _walk_fillings(lam, n, flavor):
        if d > best:
            best, arg = d, tuple(filling)
    if arg is None:
        raise EmptyTableauSet(f"no {flavor} tableaux of shape {lam} with n={n}")
    return best, Tableau(lam, flavor, n, _rows_from_filling(lam, arg))
