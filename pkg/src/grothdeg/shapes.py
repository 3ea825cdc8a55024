"""Partitions, strict and gap-2 refinements, and (shifted) diagram geometry.

Conventions used throughout the package:

* partitions are tuples of weakly decreasing positive integers; the empty
  tuple is the empty partition and zero parts are never stored;
* diagrams are drawn in French notation: row 1 is the longest row at the
  bottom, and "above" a box means row index + 1;
* a shifted diagram indents row i by i-1 columns, so its leftmost boxes
  (col == row) form the main diagonal.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .errors import NonStrictShift

Box = tuple[int, int]  # (row, col), both 1-based


def check_partition(parts: Sequence[int]) -> tuple[int, ...]:
    """Return ``parts`` as a validated partition tuple."""
    parts = tuple(int(p) for p in parts)
    for i, p in enumerate(parts):
        if p < 1:
            raise ValueError(f"partition parts must be positive, got {p}")
        if i and parts[i - 1] < p:
            raise ValueError(f"parts must weakly decrease, got {parts}")
    return parts


def is_strict(parts: Sequence[int]) -> bool:
    return all(parts[i] - parts[i + 1] >= 1 for i in range(len(parts) - 1))


def is_d_partition(parts: Sequence[int]) -> bool:
    """True if consecutive parts differ by at least two."""
    return all(parts[i] - parts[i + 1] >= 2 for i in range(len(parts) - 1))


def check_strict(parts: Sequence[int]) -> tuple[int, ...]:
    parts = check_partition(parts)
    if not is_strict(parts):
        raise NonStrictShift(f"{parts} is not a strict partition")
    return parts


def parse_partition(text: str) -> tuple[int, ...]:
    """Parse a comma-separated partition; the empty string is the empty partition."""
    text = text.strip()
    if not text:
        return ()
    return check_partition([int(tok) for tok in text.split(",")])


def format_partition(parts: Sequence[int]) -> str:
    return ",".join(str(p) for p in parts)


def size(parts: Sequence[int]) -> int:
    return sum(parts)


def contains(inner: Sequence[int], outer: Sequence[int]) -> bool:
    """Part-by-part containment, with implicit trailing zeros."""
    if len(inner) > len(outer):
        return False
    return all(a <= b for a, b in zip(inner, outer))


def conjugate(parts: Sequence[int]) -> tuple[int, ...]:
    """Transpose of the diagram of ``parts``."""
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p >= j) for j in range(1, parts[0] + 1))


def largest_d_subpartition(lam: Sequence[int]) -> tuple[int, ...]:
    """Largest partition contained in ``lam`` whose parts differ by >= 2.

    Greedy from the bottom row: each part takes the largest value allowed by
    the containment and gap constraints.  An exchange argument shows the
    greedy choice is size-maximal; the brute-force oracle in the test suite
    confirms it on a full sweep.
    """
    lam = check_partition(lam)
    out: list[int] = []
    for i, part in enumerate(lam):
        nxt = part if i == 0 else min(part, out[-1] - 2)
        if nxt < 1:
            break
        out.append(nxt)
    return tuple(out)


def largest_strict_subpartition(lam: Sequence[int]) -> tuple[int, ...]:
    """Largest strict partition contained in ``lam`` (greedy, like above)."""
    lam = check_partition(lam)
    out: list[int] = []
    for i, part in enumerate(lam):
        nxt = part if i == 0 else min(part, out[-1] - 1)
        if nxt < 1:
            break
        out.append(nxt)
    return tuple(out)


@dataclass(frozen=True)
class Diagram:
    """Box set of a partition, either ordinary or shifted.

    Neighbor queries return ``None`` for boxes off the diagram, mirroring the
    empty-box convention used by the tableau rules.
    """

    shape: tuple[int, ...]
    shifted: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "shape", check_partition(self.shape))
        if self.shifted and not is_strict(self.shape):
            raise NonStrictShift(f"cannot shift non-strict shape {self.shape}")

    @property
    def n_rows(self) -> int:
        return len(self.shape)

    @property
    def n_boxes(self) -> int:
        return sum(self.shape)

    def row_cols(self, r: int) -> range:
        """Columns occupied by row ``r`` (1-based)."""
        if not 1 <= r <= len(self.shape):
            return range(0)
        start = r if self.shifted else 1
        return range(start, start + self.shape[r - 1])

    def boxes(self) -> list[Box]:
        """All boxes in row-major order, row 1 first, left to right."""
        return [(r, c) for r in range(1, len(self.shape) + 1) for c in self.row_cols(r)]

    def __contains__(self, box: Box) -> bool:
        r, c = box
        return c in self.row_cols(r)

    def __len__(self) -> int:
        return self.n_boxes

    def __iter__(self) -> Iterator[Box]:
        return iter(self.boxes())

    def up(self, box: Box) -> Optional[Box]:
        cand = (box[0] + 1, box[1])
        return cand if cand in self else None

    def down(self, box: Box) -> Optional[Box]:
        cand = (box[0] - 1, box[1])
        return cand if cand in self else None

    def left(self, box: Box) -> Optional[Box]:
        cand = (box[0], box[1] - 1)
        return cand if cand in self else None

    def right(self, box: Box) -> Optional[Box]:
        cand = (box[0], box[1] + 1)
        return cand if cand in self else None

    def on_diagonal(self, box: Box) -> bool:
        return self.shifted and box[0] == box[1]

    def main_diagonal(self) -> list[Box]:
        if not self.shifted:
            return []
        return [(r, r) for r in range(1, len(self.shape) + 1)]


def diagram(lam: Sequence[int], shifted: bool = False) -> Diagram:
    """Build the (shifted) diagram of ``lam``."""
    return Diagram(tuple(lam), shifted)


def all_partitions(max_part: int, max_len: int) -> Iterator[tuple[int, ...]]:
    """All partitions with parts <= max_part and length <= max_len, empty included."""

    def rec(prefix: tuple[int, ...], bound: int) -> Iterator[tuple[int, ...]]:
        yield prefix
        if len(prefix) == max_len:
            return
        for p in range(bound, 0, -1):
            yield from rec(prefix + (p,), p)

    yield from rec((), max_part)


def all_strict_partitions(max_part: int, max_len: int) -> Iterator[tuple[int, ...]]:
    for lam in all_partitions(max_part, max_len):
        if is_strict(lam):
            yield lam
