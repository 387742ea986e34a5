"""Rules kernel for 3-pile Sharing Nim.

A position is a sorted triple of pile sizes. A move transfers k >= 1 tokens
from a larger pile to a smaller one, and after the transfer the destination
may not exceed the source. The last player able to move wins.

Everything in this module is a pure function; closed-form outcome tests run
in O(word ops) on 64-bit pile sizes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple

MAX_PILE = 2**64 - 1

# (source, dest) pairs over the sorted triple, in canonical enumeration order
_MOVE_PAIRS = ((1, 0), (2, 0), (2, 1))


class IllegalMove(ValueError):
    """Move violates the transfer rule for the given position."""


class DomainError(ValueError):
    """Argument outside an operation's domain."""


@dataclass(frozen=True, order=True)
class Position:
    """Sorted triple of pile sizes; constructor sorts its arguments."""

    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        piles = (self.a, self.b, self.c)
        for size in piles:
            if not isinstance(size, int) or isinstance(size, bool):
                raise DomainError(f"pile size must be an integer, got {size!r}")
            if size < 0 or size > MAX_PILE:
                raise DomainError(f"pile size out of 64-bit range: {size}")
        a, b, c = sorted(piles)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)

    @property
    def piles(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    @property
    def total(self) -> int:
        return self.a + self.b + self.c


class NormalizedPosition(NamedTuple):
    """Translation class representative: (a,b,c) ~ (0, b-a, c-a)."""

    A: int
    B: int


class Move(NamedTuple):
    """Transfer of k tokens between piles, indexed into the sorted triple."""

    source: int
    dest: int
    k: int


class Outcome(NamedTuple):
    label: str  # "P" or "N"
    terminal: bool


def normalize(p: Position) -> NormalizedPosition:
    """Subtract the smallest pile; nim-values are translation-invariant."""
    return NormalizedPosition(p.b - p.a, p.c - p.a)


def is_terminal(p: Position) -> bool:
    """No move exists exactly when max pile - min pile <= 1."""
    return p.c - p.a <= 1


def _check_move(p: Position, m: Move) -> None:
    if m.source not in (0, 1, 2) or m.dest not in (0, 1, 2):
        raise IllegalMove(f"pile index out of range in {m}")
    if m.source == m.dest:
        raise IllegalMove("source and destination must differ")
    if m.k < 1:
        raise IllegalMove("must move at least one token")
    piles = p.piles
    if piles[m.dest] + m.k > piles[m.source] - m.k:
        raise IllegalMove(
            f"destination would exceed source: {piles[m.dest]}+{m.k} > {piles[m.source]}-{m.k}"
        )


def is_legal(p: Position, m: Move) -> bool:
    try:
        _check_move(p, m)
    except IllegalMove:
        return False
    return True


def legal_moves(p: Position) -> list[Move]:
    """All (source, dest, k) with k >= 1 and dest+k <= source-k, sorted piles."""
    piles = p.piles
    moves = []
    for source, dest in _MOVE_PAIRS:
        for k in range(1, (piles[source] - piles[dest]) // 2 + 1):
            moves.append(Move(source, dest, k))
    return moves


def apply_move(p: Position, m: Move) -> Position:
    """Apply a legal move and re-sort; raises IllegalMove otherwise."""
    _check_move(p, m)
    piles = list(p.piles)
    piles[m.source] -= m.k
    piles[m.dest] += m.k
    return Position(*piles)


def successors(p: Position) -> Iterator[Position]:
    for m in legal_moves(p):
        yield apply_move(p, m)


def two_adic_valuation(d: int) -> int:
    """Exponent of 2 in d, so d = 2**v * odd. Requires d >= 1."""
    if d < 1:
        raise DomainError("two_adic_valuation requires a positive argument")
    return (d & -d).bit_length() - 1


def odd_part(d: int) -> int:
    if d < 1:
        raise DomainError("odd_part requires a positive argument")
    return d >> two_adic_valuation(d)


def is_p_position(p: Position) -> bool:
    """Closed-form previous-player-win test.

    In normalized coordinates (0, A, B) the losing-to-move positions are
    exactly: (0,0), and those with A == 0 or A == B whose B has even
    2-adic valuation.
    """
    A, B = normalize(p)
    if B == 0:
        return True
    if A == 0 or A == B:
        return two_adic_valuation(B) % 2 == 0
    return False


def is_1_position(p: Position) -> bool:
    """Closed-form test for nim-value exactly 1.

    Normalized families: (0, 0, 4k+2); (0, 4k+2, 4k+2); the multiset
    {0, 2, 4k+1} which sorts to (0,1,2) when k=0; and (0, 4l-1, 4l+1), l >= 1.
    """
    A, B = normalize(p)
    if A == 0:
        return B % 4 == 2
    if A == B:
        return A % 4 == 2
    if (A, B) == (1, 2):
        return True
    if A == 2 and B % 4 == 1 and B >= 5:
        return True
    return A % 4 == 3 and B == A + 2


def outcome(p: Position) -> Outcome:
    return Outcome("P" if is_p_position(p) else "N", is_terminal(p))


def winning_moves(p: Position) -> list[Move]:
    """Every candidate move that lands on a P-position, in fixed order.

    Candidates: equalize piles (a,b), then (b,c), then (a,c) by halving the
    (even, positive) gap; then the match-middle transfer from the biggest
    to the smallest pile with k = min(b-a, c-b). Identical (source,dest,k)
    triples are emitted once. Empty exactly when p is a P-position.
    """
    a, b, c = p.piles
    candidates = []
    if (b - a) % 2 == 0 and b > a:
        candidates.append(Move(1, 0, (b - a) // 2))
    if (c - b) % 2 == 0 and c > b:
        candidates.append(Move(2, 1, (c - b) // 2))
    if (c - a) % 2 == 0 and c > a:
        candidates.append(Move(2, 0, (c - a) // 2))
    k_mid = min(b - a, c - b)
    if k_mid >= 1:
        candidates.append(Move(2, 0, k_mid))

    moves = []
    for m in candidates:
        if m not in moves and is_legal(p, m) and is_p_position(apply_move(p, m)):
            moves.append(m)
    return moves


def count_p_positions(n: int) -> int:
    """Number of P-positions with three piles >= 1 summing to exactly n."""
    if n < 1:
        raise DomainError("count_p_positions requires n >= 1")
    return n // 3


def f_indicator(n: int) -> int:
    """0 if (0,0,n) is a P-position, else 1."""
    if n < 0:
        raise DomainError("f_indicator requires n >= 0")
    return 0 if is_p_position(Position(0, 0, n)) else 1
