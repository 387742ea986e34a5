"""Sequence analytics and verification drivers over the oracle.

Periodicity scanning, row boundedness, the 0/1 indicator sequence of the
(0,0,n) classes, nim-value distribution summaries, cross-checks of every
closed form against the oracle, and table serialization. Nothing here
renders anything; output is data.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import IO, Sequence

import numpy as np

from .core import (
    Position,
    apply_move,
    f_indicator,
    is_1_position,
    is_p_position,
    legal_moves,
    normalize,
    winning_moves,
)
from .oracle import (
    GrundyTable,
    OutOfRange,
    RawTripleTable,
    _row_start,
    build_raw_table,
    build_table,
    g_position_scan,
    raw_grundy,
)


class InsufficientPrefix(ValueError):
    """Sequence too short to attest a period within the requested bounds."""


class UnknownTheorem(KeyError):
    """verify_theorem got an id it has no check for."""


@dataclass(frozen=True)
class PeriodScanResult:
    found: bool
    preperiod: int | None
    period: int | None
    scanned_prefix_len: int
    max_preperiod: int
    max_period: int

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class DistributionReport:
    g: int
    max_a_observed: int
    rows: dict[int, list[int]]
    bound_2g_minus_1_holds: bool

    def to_dict(self) -> dict:
        return {
            "g": self.g,
            "max_a_observed": self.max_a_observed,
            "rows": {str(a): bs for a, bs in sorted(self.rows.items())},
            "bound_2g_minus_1_holds": self.bound_2g_minus_1_holds,
        }


@dataclass(frozen=True)
class VerificationReport:
    check: str
    bound: int
    passed: bool
    counterexample: dict | None = None

    def to_dict(self) -> dict:
        return asdict(self)


def f_sequence(max_n: int) -> list[int]:
    """f_indicator(n) for n = 0 .. max_n, straight from the closed form."""
    return [f_indicator(n) for n in range(max_n + 1)]


def period_scan(seq: Sequence[int], max_preperiod: int, max_period: int) -> PeriodScanResult:
    """Exhaustive search for an ultimate period within the given bounds.

    Tries every period p = 1..max_period (smallest first) and for each p
    every preperiod n0 = 0..max_preperiod, accepting when
    seq[n+p] == seq[n] holds for all n0 <= n <= len(seq)-1-p. The prefix
    must be long enough that an accepted period is attested on at least a
    full window beyond the preperiod.
    """
    if max_preperiod < 0 or max_period < 1:
        raise InsufficientPrefix("bounds must satisfy max_preperiod >= 0, max_period >= 1")
    n = len(seq)
    if n <= max_preperiod + 2 * max_period:
        raise InsufficientPrefix(
            f"need len(seq) > max_preperiod + 2*max_period = {max_preperiod + 2 * max_period}, got {n}"
        )
    arr = list(seq)
    for p in range(1, max_period + 1):
        for n0 in range(0, max_preperiod + 1):
            if arr[n0 + p :] == arr[n0 : n - p]:
                return PeriodScanResult(True, n0, p, n, max_preperiod, max_period)
    return PeriodScanResult(False, None, None, n, max_preperiod, max_period)


def max_in_row(a: int, count: int, table: GrundyTable) -> int:
    """Maximum of the first `count` row values (a, n), n starting at a."""
    if count < 1:
        raise OutOfRange("count must be >= 1")
    last = a + count - 1
    if last > table.max_b:
        raise OutOfRange(f"need table to B={last}, have {table.max_b}")
    return max(table.value(a, n) for n in range(a, last + 1))


# ---------------------------------------------------------------------------
# verification drivers

def _verify_translation_invariance(bound: int, table: GrundyTable, raw: RawTripleTable) -> VerificationReport:
    check = "translation-invariance"
    for c in range(bound + 1):
        for b in range(min(c, bound - c) + 1):
            for a in range(min(b, bound - c - b) + 1):
                p = Position(a, b, c)
                lhs = raw_grundy(p, raw)
                rhs = table.value(*normalize(p))
                if lhs != rhs:
                    return VerificationReport(check, bound, False, {
                        "position": [a, b, c], "raw": lhs, "reduced": rhs,
                    })
    return VerificationReport(check, bound, True)


def _verify_row_reversal(bound: int, table: GrundyTable) -> VerificationReport:
    check = "row-reversal-symmetry"
    for B in range(bound + 1):
        row = table.row(B)
        for A in range(B + 1):
            if row[A] != row[B - A]:
                return VerificationReport(check, bound, False, {
                    "A": A, "B": B, "value": int(row[A]), "mirror": int(row[B - A]),
                })
    return VerificationReport(check, bound, True)


def _verify_p_positions(bound: int, table: GrundyTable) -> VerificationReport:
    check = "p-positions"
    for B in range(bound + 1):
        row = table.row(B)
        for A in range(B + 1):
            oracle_p = row[A] == 0
            formula_p = is_p_position(Position(0, A, B))
            if oracle_p != formula_p:
                return VerificationReport(check, bound, False, {
                    "A": A, "B": B, "oracle": int(row[A]), "formula_says_p": formula_p,
                })
    return VerificationReport(check, bound, True)


def _verify_one_positions(bound: int, table: GrundyTable) -> VerificationReport:
    check = "one-positions"
    for B in range(bound + 1):
        row = table.row(B)
        for A in range(B + 1):
            oracle_1 = row[A] == 1
            formula_1 = is_1_position(Position(0, A, B))
            if oracle_1 != formula_1:
                return VerificationReport(check, bound, False, {
                    "A": A, "B": B, "oracle": int(row[A]), "formula_says_1": formula_1,
                })
    return VerificationReport(check, bound, True)


def _verify_p_count(bound: int, table: GrundyTable) -> VerificationReport:
    # brute count against the oracle, so this does not lean on the closed form
    check = "p-count"
    for n in range(1, bound + 1):
        count = 0
        for a in range(1, n // 3 + 1):
            for b in range(a, (n - a) // 2 + 1):
                c = n - a - b
                if table.value(b - a, c - a) == 0:
                    count += 1
        if count != n // 3:
            return VerificationReport(check, bound, False, {
                "n": n, "brute_count": count, "formula": n // 3,
            })
    return VerificationReport(check, bound, True)


_ZERO_RESIDUES = frozenset({4, 12, 16, 20, 28})
_ONE_RESIDUES = frozenset({2, 6, 8, 10, 14, 18, 22, 24, 26, 30})


def _verify_f_residues(bound: int) -> VerificationReport:
    check = "f-residues"
    for n in range(3, bound + 1):
        f = f_indicator(n)
        r = n % 32
        if n % 2 == 1:
            want = 0
        elif r in _ZERO_RESIDUES:
            want = 0
        elif r in _ONE_RESIDUES:
            want = 1
        else:
            continue  # residue 0 mod 32 is not covered by the rules
        if f != want:
            return VerificationReport(check, bound, False, {"n": n, "f": f, "rule": want})
    return VerificationReport(check, bound, True)


def _verify_winning_uniqueness(bound: int, table: GrundyTable) -> VerificationReport:
    # counts distinct resulting classes; symmetric piles can reach one class
    # by two differently-indexed moves and that is not a uniqueness failure
    check = "winning-move-uniqueness"
    for B in range(bound + 1):
        for A in range(B + 1):
            p = Position(0, A, B)
            if is_p_position(p):
                continue
            classes = {tuple(normalize(apply_move(p, m))) for m in winning_moves(p)}
            if len(classes) != 1:
                return VerificationReport(check, bound, False, {
                    "A": A, "B": B,
                    "winning_classes": sorted([list(c) for c in classes]),
                })
    return VerificationReport(check, bound, True)


CHECKS = (
    "translation-invariance",
    "row-reversal-symmetry",
    "p-positions",
    "one-positions",
    "p-count",
    "f-residues",
    "winning-move-uniqueness",
)


def verify_theorem(
    check: str,
    bound: int,
    table: GrundyTable | None = None,
    raw_table: RawTripleTable | None = None,
) -> VerificationReport:
    """Run one named verification to the given bound.

    Builds any table it needs and was not given. `bound` is a total pile
    count for translation-invariance and p-count, a B bound otherwise.
    """
    if check not in CHECKS:
        raise UnknownTheorem(f"no check named {check!r}; known: {', '.join(CHECKS)}")
    if check == "f-residues":
        return _verify_f_residues(bound)
    if check == "translation-invariance":
        if raw_table is None:
            raw_table = build_raw_table(bound)
        if table is None or table.max_b < bound:
            table = build_table(bound)
        return _verify_translation_invariance(bound, table, raw_table)
    if table is None or table.max_b < bound:
        table = build_table(bound)
    if check == "row-reversal-symmetry":
        return _verify_row_reversal(bound, table)
    if check == "p-positions":
        return _verify_p_positions(bound, table)
    if check == "one-positions":
        return _verify_one_positions(bound, table)
    if check == "p-count":
        return _verify_p_count(bound, table)
    return _verify_winning_uniqueness(bound, table)


# ---------------------------------------------------------------------------
# serialization

def _open_dest(dest, mode: str):
    if isinstance(dest, (str, Path)):
        return open(dest, mode, newline=""), True
    return dest, False


def export_table(table: GrundyTable, format: str, dest: str | Path | IO) -> None:
    """Write the triangle as CSV or JSON.

    CSV: header "a\\b,0,..,max_b", one row per a, blank cells where a > b.
    JSON: {"max_b": M, "rows": [[...], ...]} with null where a > b.
    """
    if format not in ("csv", "json"):
        raise ValueError(f"format must be 'csv' or 'json', got {format!r}")
    handle, own = _open_dest(dest, "w")
    try:
        m = table.max_b
        if format == "csv":
            writer = csv.writer(handle)
            writer.writerow(["a\\b"] + [str(b) for b in range(m + 1)])
            for a in range(m + 1):
                row = [str(a)]
                for b in range(m + 1):
                    row.append(str(table.value(a, b)) if b >= a else "")
                writer.writerow(row)
        else:
            rows = []
            for a in range(m + 1):
                rows.append([table.value(a, b) if b >= a else None for b in range(m + 1)])
            json.dump({"max_b": m, "rows": rows}, handle)
    finally:
        if own:
            handle.close()


def parse_table(source: str | Path | IO, format: str) -> GrundyTable:
    """Inverse of export_table; round-trips to an equal table."""
    if format not in ("csv", "json"):
        raise ValueError(f"format must be 'csv' or 'json', got {format!r}")
    handle, own = _open_dest(source, "r")
    try:
        if format == "csv":
            reader = csv.reader(handle)
            header = next(reader)
            max_b = len(header) - 2
            flat = np.zeros(_row_start(max_b + 1), dtype=np.uint16)
            for row in reader:
                a = int(row[0])
                for b in range(a, max_b + 1):
                    flat[_row_start(b) + a] = int(row[1 + b])
        else:
            data = json.load(handle)
            max_b = int(data["max_b"])
            flat = np.zeros(_row_start(max_b + 1), dtype=np.uint16)
            for a, row in enumerate(data["rows"]):
                for b in range(a, max_b + 1):
                    flat[_row_start(b) + a] = int(row[b])
    finally:
        if own:
            handle.close()
    return GrundyTable(max_b=max_b, flat=flat)


def export_table_string(table: GrundyTable, format: str) -> str:
    buf = io.StringIO()
    export_table(table, format, buf)
    return buf.getvalue()


def distribution_report(g: int, max_b: int, table: GrundyTable) -> DistributionReport:
    """g_position_scan plus the 2g-1 bound verdict."""
    rows = g_position_scan(g, max_b, table)
    max_a = max(rows) if rows else 0
    return DistributionReport(
        g=g,
        max_a_observed=max_a,
        rows=rows,
        bound_2g_minus_1_holds=max_a <= 2 * g - 1,
    )
