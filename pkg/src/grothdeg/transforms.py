"""Constructive tableau algorithms: growth into a larger shape, compression
onto the strict/gap-2 core, and the push toward the explicit maximum tableau.

Each algorithm is a pure single-step function plus a driver; drivers record
every intermediate tableau so a run can be audited step by step.  Outputs are
always re-validated; a validation failure here is a bug, never bad input.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import InternalError, ShapeMismatch, TooFewVariables
from .grothendieck import maximal_shifted_tableau, maximal_svt_tableau
from .shapes import (
    Box,
    check_partition,
    check_strict,
    contains,
    diagram,
    is_d_partition,
    is_strict,
    largest_d_subpartition,
    largest_strict_subpartition,
)
from .tableaux import PSVT, SVT, EntrySet, Tableau, validate


@dataclass(frozen=True)
class RibbonStep:
    box: Box
    before: EntrySet
    after: EntrySet


@dataclass(frozen=True)
class RibbonTrace:
    """Audit record of one growth step: the new box and every rewrite."""

    added_box: Box
    case: str  # "diagonal", "off-diagonal", or "column"
    steps: tuple[RibbonStep, ...]

    def to_json(self) -> dict:
        return {
            "added_box": list(self.added_box),
            "case": self.case,
            "steps": [
                {
                    "box": list(s.box),
                    "before": list(s.before),
                    "after": list(s.after),
                }
                for s in self.steps
            ],
        }


@dataclass
class GrowResult:
    tableau: Tableau
    traces: list[RibbonTrace] = field(default_factory=list)


@dataclass
class SquishPass:
    """One zigzag deletion pass: the row it started at, the boxes removed,
    and the tableau after each removal (the last may need a diagonal fix-up)."""

    start_row: int
    deleted_boxes: tuple[Box, ...]
    intermediates: tuple[Tableau, ...]
    final: Tableau
    frontier_boxes: tuple[tuple[Optional[Box], Optional[Box]], ...]


@dataclass
class SquishResult:
    tableau: Tableau
    passes: list[SquishPass] = field(default_factory=list)


def _scratch(t: Tableau) -> dict[Box, set[int]]:
    dia = t.diagram
    return {box: set(t.entry_set(box)) for box in dia}


def _build(shape: Sequence[int], flavor: str, n: int, filling: dict[Box, set[int]]) -> Tableau:
    shape = tuple(shape)
    shifted = flavor != SVT
    rows = []
    for r, part in enumerate(shape, start=1):
        start = r if shifted else 1
        rows.append(tuple(tuple(sorted(filling[(r, c)])) for c in range(start, start + part)))
    return Tableau(shape, flavor, n, tuple(rows))


def _checked(t: Tableau, context: str) -> Tableau:
    bad = validate(t)
    if bad:
        raise InternalError(f"{context} produced an invalid tableau: {bad[0]}")
    return t


def _single_box_diff(small: Sequence[int], big: Sequence[int]) -> int:
    """The row (1-based) where ``big`` has one more box than ``small``."""
    small = tuple(small) + (0,) * (len(big) - len(small))
    rows = [i + 1 for i in range(len(big)) if big[i] != small[i]]
    if len(rows) != 1 or big[rows[0] - 1] - small[rows[0] - 1] != 1:
        raise ShapeMismatch(f"shapes {small} and {big} do not differ by one box")
    return rows[0]


def _growth_chain(mu: Sequence[int], lam: Sequence[int]) -> list[tuple[int, ...]]:
    """Intermediate shapes from mu to lam, filling rows bottom-up."""
    mu, lam = tuple(mu), tuple(lam)
    chain = []
    cur = list(mu) + [0] * (len(lam) - len(mu))
    for r in range(len(lam)):
        while cur[r] < lam[r]:
            cur[r] += 1
            chain.append(tuple(p for p in cur if p))
    return chain


# ---------------------------------------------------------------------------
# shifted growth
# ---------------------------------------------------------------------------

def _shifted_grow_one(t: Tableau, lam: tuple[int, ...]) -> tuple[Tableau, RibbonTrace]:
    n = t.n
    mu = t.shape
    r = _single_box_diff(mu, lam)
    c = r + lam[r - 1] - 1
    b0 = (r, c)
    diag = c == r
    dia = diagram(mu, shifted=True)
    filling = _scratch(t)

    # walk the down/left ribbon below the new box, collecting boxes whose
    # content must cascade; membership is decided against the original filling
    ribbon: list[Box] = []
    box: Optional[Box] = (r - 1, c)
    j = 1
    while box is not None and box in dia:
        if j > 1 and len(filling[ribbon[-1]]) != 1:
            break
        if diag:
            expected = 2 * n - 2 * ((j - 1) // 2)  # unprimed value n - floor((j-1)/2)
        else:
            expected = 2 * n - (j - 1)  # alternates unprimed n, primed n, ...
        if expected not in filling[box]:
            break
        ribbon.append(box)
        j += 1
        # odd steps move down, even steps move left
        box = (box[0] - 1, box[1]) if j % 2 == 1 else (box[0], box[1] - 1)

    steps = []
    for idx, rb in enumerate(ribbon, start=1):
        before = tuple(sorted(filling[rb]))
        if len(filling[rb]) > 1:
            filling[rb].discard(max(filling[rb]))
        else:
            code = next(iter(filling[rb]))
            if diag and idx % 2 == 0:
                new_code = code - 2  # diagonal boxes stay unprimed
            else:
                new_code = code - 1
            filling[rb] = {new_code}
        steps.append(RibbonStep(rb, before, tuple(sorted(filling[rb]))))

    filling[b0] = {2 * n}
    out = _checked(_build(lam, PSVT, n, filling), "shifted growth")
    if out.degree() < t.degree():
        raise InternalError("shifted growth lowered the degree")
    return out, RibbonTrace(b0, "diagonal" if diag else "off-diagonal", tuple(steps))


def shifted_grow(t: Tableau, lam: Sequence[int]) -> GrowResult:
    """Grow a P-shifted tableau onto a larger strict shape, box by box,
    without lowering the degree.  Boxes are added row by row from the bottom."""
    if t.flavor != PSVT:
        raise ShapeMismatch("shifted growth expects a P-shifted tableau")
    lam = check_strict(lam)
    if not contains(t.shape, lam):
        raise ShapeMismatch(f"{t.shape} is not contained in {lam}")
    if t.n < len(lam):
        raise TooFewVariables(f"need n >= {len(lam)}")
    result = GrowResult(t)
    for step_shape in _growth_chain(t.shape, lam):
        if not is_strict(step_shape):
            raise InternalError(f"growth chain left strict shapes: {step_shape}")
        result.tableau, trace = _shifted_grow_one(result.tableau, step_shape)
        result.traces.append(trace)
    return result


# ---------------------------------------------------------------------------
# shifted compression
# ---------------------------------------------------------------------------

def _squish_pass_shifted(t: Tableau) -> tuple[Tableau, SquishPass]:
    lam = t.shape
    n = t.n
    # the highest row whose length exceeds the next row's by exactly one
    k = max(i for i in range(1, len(lam)) if lam[i - 1] - 1 == lam[i])
    dia = diagram(lam, shifted=True)
    r0 = (k, k + lam[k - 1] - 1)

    # the zigzag: up from the current R, then left, as long as boxes exist
    r_boxes = [r0]
    u_boxes: list[Box] = []
    while True:
        up = dia.up(r_boxes[-1])
        if up is None:
            break
        u_boxes.append(up)
        left = dia.left(up)
        if left is None:
            break
        r_boxes.append(left)
    ends_on_r = len(r_boxes) == len(u_boxes) + 1

    filling = _scratch(t)
    shape = list(lam)
    intermediates = []
    frontier = []
    for i, u in enumerate(u_boxes, start=1):
        r_prev = r_boxes[i - 1]
        inter = filling[u] & filling[r_prev]
        filling[r_prev] |= filling.pop(u)
        if i < len(r_boxes):
            filling[r_boxes[i]] |= inter
        elif inter:
            # only reachable when the zigzag ends on a diagonal box, whose
            # content is unprimed and therefore disjoint from the box below
            raise InternalError("compression tried to fill a missing box")
        shape[u[0] - 1] -= 1
        snap_shape = tuple(p for p in shape if p)
        intermediates.append(_build(snap_shape, PSVT, n, filling))
        frontier.append(
            (
                r_boxes[i] if i < len(r_boxes) else None,
                u_boxes[i] if i < len(u_boxes) else None,
            )
        )

    # a diagonal tail box may have inherited a primed letter; unprime it
    final_filling = {b: set(s) for b, s in filling.items()}
    if ends_on_r:
        tail = r_boxes[-1]
        if tail[0] == tail[1]:
            primed = [code for code in final_filling[tail] if code % 2 == 1]
            if len(primed) > 1:
                raise InternalError("more than one primed letter reached the diagonal")
            for code in primed:
                if code + 1 in final_filling[tail]:
                    raise InternalError("unpriming would collapse two entries")
                final_filling[tail].discard(code)
                final_filling[tail].add(code + 1)

    final_shape = tuple(p for p in shape if p)
    out = _checked(_build(final_shape, PSVT, n, final_filling), "shifted compression")
    if out.degree() != t.degree():
        raise InternalError("shifted compression changed the degree")
    return out, SquishPass(k, tuple(u_boxes), tuple(intermediates), out, tuple(frontier))


def shifted_squish(t: Tableau) -> SquishResult:
    """Compress a P-shifted tableau onto the gap-2 core of its shape,
    preserving the degree exactly."""
    if t.flavor != PSVT:
        raise ShapeMismatch("shifted compression expects a P-shifted tableau")
    result = SquishResult(t)
    while not is_d_partition(result.tableau.shape):
        result.tableau, squish_pass = _squish_pass_shifted(result.tableau)
        result.passes.append(squish_pass)
    target = largest_d_subpartition(t.shape)
    if result.tableau.shape != target:
        raise InternalError(
            f"compression ended on {result.tableau.shape}, expected {target}"
        )
    return result


# ---------------------------------------------------------------------------
# shifted push
# ---------------------------------------------------------------------------

def _push_driver(t: Tableau, target: Tableau) -> list[Tableau]:
    n = t.n
    shape = t.shape
    dia = t.diagram
    seq: list[Tableau] = []
    cur = t
    limit = (dia.n_boxes + 1) * (2 * n + 1)
    for _ in range(limit):
        if cur.rows == target.rows:
            return seq
        bad = next(
            box for box in dia if cur.entry_set(box) != target.entry_set(box)
        )
        r, c = bad
        filling = _scratch(cur)
        if dia.right(bad) is not None:
            old = filling[bad]
            filling[bad] = {2 * r}
            filling[(r, c + 1)] = filling[(r, c + 1)] | old
        elif dia.on_diagonal(bad):
            filling[bad] = set(range(2 * r, 2 * n + 1, 2))
        else:
            step = 1 if t.flavor == PSVT else 2
            filling[bad] = set(range(2 * r, 2 * n + 1, step))
        nxt = _checked(_build(shape, t.flavor, n, filling), "push")
        if nxt.degree() < cur.degree():
            raise InternalError("push lowered the degree")
        seq.append(nxt)
        cur = nxt
    raise InternalError("push failed to terminate")


def shifted_push(t: Tableau) -> list[Tableau]:
    """Push a P-shifted tableau on a gap-2 shape up to the explicit maximum
    tableau; returns the sequence of intermediate tableaux (empty if already
    maximal), with weakly increasing degrees."""
    if t.flavor != PSVT:
        raise ShapeMismatch("shifted push expects a P-shifted tableau")
    if not is_d_partition(t.shape):
        raise ShapeMismatch(f"{t.shape} is not a gap-2 partition")
    return _push_driver(t, maximal_shifted_tableau(t.shape, t.n))


# ---------------------------------------------------------------------------
# ordinary (unshifted) analogues
# ---------------------------------------------------------------------------

def _svt_grow_one(t: Tableau, lam: tuple[int, ...]) -> tuple[Tableau, RibbonTrace]:
    n = t.n
    mu = t.shape
    r = _single_box_diff(mu, lam)
    c = lam[r - 1]
    b0 = (r, c)
    dia = diagram(mu, shifted=False)
    filling = _scratch(t)

    column: list[Box] = []
    i = 1
    while (r - i, c) in dia:
        box = (r - i, c)
        if i > 1 and len(filling[column[-1]]) != 1:
            break
        if 2 * (n - i + 1) not in filling[box]:
            break
        column.append(box)
        i += 1

    steps = []
    for box in column:
        before = tuple(sorted(filling[box]))
        if len(filling[box]) > 1:
            filling[box].discard(max(filling[box]))
        else:
            code = next(iter(filling[box]))
            filling[box] = {code - 2}
        steps.append(RibbonStep(box, before, tuple(sorted(filling[box]))))

    filling[b0] = {2 * n}
    out = _checked(_build(lam, SVT, n, filling), "growth")
    if out.degree() < t.degree():
        raise InternalError("growth lowered the degree")
    return out, RibbonTrace(b0, "column", tuple(steps))


def svt_grow(t: Tableau, lam: Sequence[int]) -> GrowResult:
    """Grow an ordinary set-valued tableau onto a larger shape without
    lowering the degree."""
    if t.flavor != SVT:
        raise ShapeMismatch("growth expects an ordinary set-valued tableau")
    lam = check_partition(lam)
    if not contains(t.shape, lam):
        raise ShapeMismatch(f"{t.shape} is not contained in {lam}")
    if t.n < len(lam):
        raise TooFewVariables(f"need n >= {len(lam)}")
    result = GrowResult(t)
    for step_shape in _growth_chain(t.shape, lam):
        result.tableau, trace = _svt_grow_one(result.tableau, step_shape)
        result.traces.append(trace)
    return result


def svt_squish(t: Tableau) -> SquishResult:
    """Merge repeated-length rows downward until the shape is strict; the
    merged boxes are disjoint, so the degree is preserved exactly."""
    if t.flavor != SVT:
        raise ShapeMismatch("compression expects an ordinary set-valued tableau")
    result = SquishResult(t)
    cur = result.tableau
    while not is_strict(cur.shape):
        lam = cur.shape
        n = cur.n
        k = max(i for i in range(1, len(lam)) if lam[i - 1] == lam[i])
        rbox = (k, lam[k - 1])
        ubox = (k + 1, lam[k])
        filling = _scratch(cur)
        if filling[rbox] & filling[ubox]:
            raise InternalError("column-adjacent boxes were not disjoint")
        filling[rbox] |= filling.pop(ubox)
        shape = list(lam)
        shape[k] -= 1
        snap = tuple(p for p in shape if p)
        cur = _checked(_build(snap, SVT, n, filling), "compression")
        if cur.degree() != t.degree():
            raise InternalError("compression changed the degree")
        result.passes.append(
            SquishPass(k, (ubox,), (cur,), cur, ((rbox, None),))
        )
    result.tableau = cur
    target = largest_strict_subpartition(t.shape)
    if cur.shape != target:
        raise InternalError(f"compression ended on {cur.shape}, expected {target}")
    return result


def svt_push(t: Tableau) -> list[Tableau]:
    """Push an ordinary set-valued tableau on a strict shape up to the
    explicit maximum tableau."""
    if t.flavor != SVT:
        raise ShapeMismatch("push expects an ordinary set-valued tableau")
    check_strict(t.shape)
    return _push_driver(t, maximal_svt_tableau(t.shape, t.n))
