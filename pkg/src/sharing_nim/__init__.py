"""Verified engine and analysis toolkit for 3-pile Sharing Nim."""

from .analysis import (
    CHECKS,
    DistributionReport,
    InsufficientPrefix,
    PeriodScanResult,
    UnknownTheorem,
    VerificationReport,
    distribution_report,
    export_table,
    export_table_string,
    f_sequence,
    max_in_row,
    parse_table,
    period_scan,
    verify_theorem,
)
from .core import (
    DomainError,
    IllegalMove,
    Move,
    NormalizedPosition,
    Outcome,
    Position,
    apply_move,
    count_p_positions,
    f_indicator,
    is_1_position,
    is_legal,
    is_p_position,
    is_terminal,
    legal_moves,
    normalize,
    odd_part,
    outcome,
    successors,
    two_adic_valuation,
    winning_moves,
)
from .oracle import (
    GrundyTable,
    OutOfRange,
    RawTripleTable,
    ResourceLimit,
    build_raw_table,
    build_table,
    build_table_reference,
    g_position_scan,
    grundy,
    raw_grundy,
    row_sequence,
)

__version__ = "0.1.0"

__all__ = [
    "CHECKS",
    "DistributionReport",
    "DomainError",
    "GrundyTable",
    "IllegalMove",
    "InsufficientPrefix",
    "Move",
    "NormalizedPosition",
    "Outcome",
    "OutOfRange",
    "PeriodScanResult",
    "Position",
    "RawTripleTable",
    "ResourceLimit",
    "UnknownTheorem",
    "VerificationReport",
    "apply_move",
    "build_raw_table",
    "build_table",
    "build_table_reference",
    "count_p_positions",
    "distribution_report",
    "export_table",
    "export_table_string",
    "f_indicator",
    "f_sequence",
    "g_position_scan",
    "grundy",
    "is_1_position",
    "is_legal",
    "is_p_position",
    "is_terminal",
    "legal_moves",
    "max_in_row",
    "normalize",
    "odd_part",
    "outcome",
    "parse_table",
    "period_scan",
    "raw_grundy",
    "row_sequence",
    "successors",
    "two_adic_valuation",
    "verify_theorem",
    "winning_moves",
]
