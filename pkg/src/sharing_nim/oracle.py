"""Brute-force Sprague-Grundy oracle.

Ground truth for every closed-form test in this package. Values are computed
by mex recursion over the raw move rules only; the oracle never consults the
closed-form outcome tests or any symmetry shortcut, so checks against it stay
non-circular.

Two independent routes exist:
  * build_table / build_table_reference fill the triangular table of
    normalized classes (0, A, B) bottom-up in B.
  * build_raw_table works on raw sorted triples without the translation
    reduction, so the reduction itself can be tested.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .core import (
    DomainError,
    Move,
    NormalizedPosition,
    Position,
    apply_move,
    legal_moves,
    normalize,
)

DEFAULT_MAX_B = 600
DEFAULT_MEMORY_BUDGET = 512 * 1024 * 1024  # bytes of table storage
DEFAULT_MAX_TOTAL = 150


class OutOfRange(LookupError):
    """Query exceeds the bounds a table was built for."""


class ResourceLimit(RuntimeError):
    """Requested table would exceed the configured memory budget."""


def _row_start(b: int) -> int:
    # row b of the triangle starts after rows 0..b-1
    return b * (b + 1) // 2


@dataclass
class GrundyTable:
    """Dense triangular map (A, B) -> nim-value for 0 <= A <= B <= max_b."""

    max_b: int
    flat: np.ndarray = field(repr=False)

    def value(self, a: int, b: int) -> int:
        if not 0 <= a <= b:
            raise DomainError(f"not a normalized class: A={a}, B={b}")
        if b > self.max_b:
            raise OutOfRange(f"B={b} exceeds table bound {self.max_b}")
        return int(self.flat[_row_start(b) + a])

    def row(self, b: int) -> np.ndarray:
        if not 0 <= b <= self.max_b:
            raise OutOfRange(f"B={b} exceeds table bound {self.max_b}")
        return self.flat[_row_start(b) : _row_start(b + 1)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GrundyTable):
            return NotImplemented
        return self.max_b == other.max_b and np.array_equal(self.flat, other.flat)


@dataclass
class RawTripleTable:
    """Map from raw sorted triples to nim-values, no translation reduction."""

    max_total: int
    values: dict[tuple[int, int, int], int]


def _check_budget(max_b: int, memory_budget: int) -> None:
    if max_b < 0:
        raise DomainError("max_b must be >= 0")
    entries = (max_b + 1) * (max_b + 2) // 2
    if entries * 2 > memory_budget:
        raise ResourceLimit(
            f"table to max_b={max_b} needs {entries * 2} bytes, budget is {memory_budget}"
        )


def build_table(max_b: int, memory_budget: int = DEFAULT_MEMORY_BUDGET) -> GrundyTable:
    """Fill the triangle bottom-up in B with vectorized successor marking.

    For each B, a boolean matrix marks which values occur among the
    successors of every row A at once; mex per row is the first unmarked
    column. Successor classes of (0, A, B):

      mid -> small, k <= A/2:        (A-2k, B-k)
      big -> mid,   k <= (B-A)/2:    (A+k, B-k)
      big -> small, k <= B/2:        (A-k, B-2k)   if k <= A <= B-k
                                     (B-2k, A-k)   if B-k <= A
                                     (k-A, B-A-k)  if A < k

    Equivalent, row for row, to build_table_reference (tested in the suite).
    """
    _check_budget(max_b, memory_budget)
    flat = np.zeros(_row_start(max_b + 1), dtype=np.uint16)
    rp = np.array([_row_start(b) for b in range(max_b + 2)], dtype=np.int64)

    for B in range(2, max_b + 1):
        width = B + 2  # mex never exceeds the successor count <= B+1
        marks = np.zeros((B + 1, width), dtype=bool)
        for k in range(1, B // 2 + 1):
            # big -> mid: rows A = 0 .. B-2k see value(A+k, B-k)
            hi = B - 2 * k
            vals = flat[rp[B - k] + k : rp[B - k] + B - k + 1]
            marks[np.arange(0, hi + 1), vals] = True

            # mid -> small: rows A = 2k .. B see value(A-2k, B-k)
            vals = flat[rp[B - k] : rp[B - k] + B - 2 * k + 1]
            marks[np.arange(2 * k, B + 1), vals] = True

            # big -> small, destination stays smallest: rows k .. B-k
            vals = flat[rp[B - 2 * k] : rp[B - 2 * k] + B - 2 * k + 1]
            marks[np.arange(k, B - k + 1), vals] = True

            # big -> small, old middle becomes largest: rows B-k+1 .. B
            rows = np.arange(B - k + 1, B + 1)
            vals = flat[rp[rows - k] + B - 2 * k]
            marks[rows, vals] = True

            # big -> small, source drops below old smallest: rows 0 .. k-1
            rows = np.arange(0, k)
            vals = flat[rp[B - k - rows] + k - rows]
            marks[rows, vals] = True

        flat[rp[B] : rp[B + 1]] = np.argmin(marks, axis=1)

    return GrundyTable(max_b=max_b, flat=flat)


def build_table_reference(max_b: int, memory_budget: int = DEFAULT_MEMORY_BUDGET) -> GrundyTable:
    """Plain scalar builder driven by the actual move rules.

    Enumerates each row's successors through legal_moves / apply_move /
    normalize in canonical move order and takes mex with a boolean scratch
    buffer sized by the successor count. Slow; kept as the cross-check for
    build_table's vectorization.
    """
    _check_budget(max_b, memory_budget)
    flat = np.zeros(_row_start(max_b + 1), dtype=np.uint16)
    for B in range(2, max_b + 1):
        for A in range(0, B + 1):
            p = Position(0, A, B)
            moves = legal_moves(p)
            seen = bytearray(len(moves) + 1)
            for m in moves:
                sa, sb = normalize(apply_move(p, m))
                v = int(flat[_row_start(sb) + sa])
                if v < len(seen):
                    seen[v] = 1
            mex = 0
            while seen[mex]:
                mex += 1
            flat[_row_start(B) + A] = mex
    return GrundyTable(max_b=max_b, flat=flat)


def grundy(np_: NormalizedPosition, table: GrundyTable) -> int:
    A, B = np_
    return table.value(A, B)


def build_raw_table(max_total: int = DEFAULT_MAX_TOTAL) -> RawTripleTable:
    """Nim-values over raw sorted triples with a+b+c <= max_total.

    Every move strictly decreases (c, b) lexicographically, so filling in
    that order needs no recursion.
    """
    if max_total < 0:
        raise DomainError("max_total must be >= 0")
    values: dict[tuple[int, int, int], int] = {}
    for c in range(max_total + 1):
        for b in range(min(c, max_total - c) + 1):
            for a in range(min(b, max_total - c - b) + 1):
                p = Position(a, b, c)
                moves = legal_moves(p)
                seen = bytearray(len(moves) + 1)
                for m in moves:
                    v = values[apply_move(p, m).piles]
                    if v < len(seen):
                        seen[v] = 1
                mex = 0
                while seen[mex]:
                    mex += 1
                values[(a, b, c)] = mex
    return RawTripleTable(max_total=max_total, values=values)


def raw_grundy(p: Position, table: RawTripleTable) -> int:
    if p.total > table.max_total:
        raise OutOfRange(f"total {p.total} exceeds table bound {table.max_total}")
    return table.values[p.piles]


def row_sequence(a: int, max_n: int, table: GrundyTable) -> list[int]:
    """The row (value(a, n)) for n = a .. max_n."""
    if not 0 <= a <= max_n:
        raise OutOfRange(f"need 0 <= a <= max_n, got a={a}, max_n={max_n}")
    if max_n > table.max_b:
        raise OutOfRange(f"max_n={max_n} exceeds table bound {table.max_b}")
    return [table.value(a, n) for n in range(a, max_n + 1)]


def g_position_scan(g: int, max_b: int, table: GrundyTable) -> dict[int, list[int]]:
    """For each row a, the b <= max_b with value(a, b) = g, over a <= b/2.

    Only rows with at least one hit appear in the result; max(result) is the
    largest a at which value g occurs in the scanned half-triangle.
    """
    if max_b > table.max_b:
        raise OutOfRange(f"max_b={max_b} exceeds table bound {table.max_b}")
    hits: dict[int, list[int]] = {}
    for b in range(max_b + 1):
        row = table.row(b)
        for a in range(b // 2 + 1):
            if row[a] == g:
                hits.setdefault(a, []).append(b)
    return hits
