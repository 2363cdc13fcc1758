"""Timed tableaux and timed Schensted insertion.

A timed tableau is a stack of timed rows (top row first) with weakly
decreasing lengths in which, at every time t covered by both, a lower row's
value strictly exceeds the row above. The strictness check is exact: both
rows are step functions, so comparing them on the merged run boundaries
settles every t.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .classical import Tableau
from .errors import InvalidTableauError, NotARowError
from .timed_words import (
    DurationLike,
    Run,
    TimedWord,
    as_duration,
    concat,
    embed_classical,
    is_timed_row,
    restrict,
)


def _column_strict(upper: TimedWord, lower: TimedWord) -> bool:
    # Walk both run lists over [0, l(lower)); each segment between merged
    # boundaries has constant values, so one comparison per segment is exact.
    limit = lower.length
    ui = li = 0
    u_end = upper.runs[0].duration
    l_end = lower.runs[0].duration
    pos = Fraction(0)
    while pos < limit:
        if upper.runs[ui].letter >= lower.runs[li].letter:
            return False
        nxt = min(u_end, l_end)
        pos = nxt
        if pos >= limit:
            break
        if u_end == nxt:
            ui += 1
            u_end += upper.runs[ui].duration
        if l_end == nxt:
            li += 1
            l_end += lower.runs[li].duration
    return True


@dataclass(frozen=True, repr=False)
class TimedTableau:
    """Stack of timed rows, top row first; validated on construction."""

    rows: tuple[TimedWord, ...] = ()

    def __post_init__(self):
        for i, row in enumerate(self.rows):
            if not row:
                raise InvalidTableauError(f"row {i} is empty")
            if not is_timed_row(row):
                raise InvalidTableauError(f"row {i} is not a timed row: {row!r}")
        for i in range(len(self.rows) - 1):
            upper, lower = self.rows[i], self.rows[i + 1]
            if upper.length < lower.length:
                raise InvalidTableauError(
                    f"row {i + 1} is longer than row {i} "
                    f"({lower.length} > {upper.length})"
                )
            if not _column_strict(upper, lower):
                raise InvalidTableauError(
                    f"rows {i} and {i + 1} are not strictly increasing downward"
                )

    def __bool__(self) -> bool:
        return bool(self.rows)

    def __str__(self) -> str:
        return "\n".join(str(row) for row in self.rows)

    def __repr__(self) -> str:
        return "TimedTableau({})".format(" | ".join(f"'{row}'" for row in self.rows))


def timed_shape(t: TimedTableau) -> tuple[Fraction, ...]:
    """Row lengths as exact rationals, top row first."""
    return tuple(row.length for row in t.rows)


def timed_reading_word(t: TimedTableau) -> TimedWord:
    """Rows concatenated bottom row first."""
    return concat(*reversed(t.rows))


def timed_row_insert(
    w: TimedWord, letter: int, duration: DurationLike
) -> tuple[TimedWord, TimedWord]:
    """Insert the run letter^duration into the timed row w.

    If every value of w is at most the letter, the run is appended and nothing
    is bumped. Otherwise, with t0 the first time w exceeds the letter, the
    stretch of w of the run's duration starting at t0 is bumped out and the
    run takes its place (when less than the duration remains past t0, the
    whole tail from t0 is bumped). Returns (bumped, new_row); lengths satisfy
    l(bumped) + l(new_row) = l(w) + duration.
    """
    if not is_timed_row(w):
        raise NotARowError(f"timed_row_insert needs a timed row, got {w!r}")
    dur = as_duration(duration)
    if dur <= 0:
        raise ValueError(f"inserted duration must be positive, got {dur}")
    piece = TimedWord((Run(letter, dur),))
    if not w.runs or w.runs[-1].letter <= letter:
        return TimedWord(), concat(w, piece)
    t0 = Fraction(0)
    for run in w.runs:
        if run.letter > letter:
            break
        t0 += run.duration
    total = w.length
    if total - t0 > dur:
        bumped = restrict(w, t0, t0 + dur)
        new_row = concat(restrict(w, 0, t0), piece, restrict(w, t0 + dur, total))
    else:
        bumped = restrict(w, t0, total)
        new_row = concat(restrict(w, 0, t0), piece)
    return bumped, new_row


def timed_row_insert_word(w: TimedWord, u: TimedWord) -> tuple[TimedWord, TimedWord]:
    """Insert the runs of u into the timed row w, left to right, concatenating
    the bumped pieces in order. l(bumped) + l(new_row) = l(w) + l(u)."""
    if not is_timed_row(w):
        raise NotARowError(f"timed_row_insert_word needs a timed row, got {w!r}")
    bumped_parts: list[TimedWord] = []
    row = w
    for letter, dur in u.runs:
        piece, row = timed_row_insert(row, letter, dur)
        bumped_parts.append(piece)
    return concat(*bumped_parts), row


def _cascade(rows: list[TimedWord], v: TimedWord) -> list[TimedWord]:
    # Shared insertion engine on a mutable row list; validation happens when
    # the caller wraps the result in a TimedTableau.
    carry = v
    for i, row in enumerate(rows):
        if not carry:
            return rows
        carry, rows[i] = timed_row_insert_word(row, carry)
    if carry:
        if not is_timed_row(carry):
            raise AssertionError(
                f"internal error: bumped residue {carry!r} is not a timed row"
            )
        rows.append(carry)
    return rows


def timed_tableau_insert(t: TimedTableau, v: TimedWord) -> TimedTableau:
    """Insert the timed row v into t, cascading bumps downward; a nonempty
    residue below the last row becomes a new row."""
    if not is_timed_row(v):
        raise NotARowError(f"timed_tableau_insert needs a timed row, got {v!r}")
    return TimedTableau(tuple(_cascade(list(t.rows), v)))


def timed_insertion_tableau(w: TimedWord) -> TimedTableau:
    """Left fold of timed_tableau_insert over the runs of w (each run is a
    one-run timed row), starting from the empty tableau."""
    rows: list[TimedWord] = []
    for letter, dur in w.runs:
        rows = _cascade(rows, TimedWord((Run(letter, dur),)))
    return TimedTableau(tuple(rows))


def timed_insertion_steps(w: TimedWord) -> list[TimedTableau]:
    """The tableau after each successive run of w (len(w.runs) entries)."""
    steps: list[TimedTableau] = []
    rows: list[TimedWord] = []
    for letter, dur in w.runs:
        rows = _cascade(rows, TimedWord((Run(letter, dur),)))
        steps.append(TimedTableau(tuple(rows)))
    return steps


def embed_classical_tableau(t: Tableau) -> TimedTableau:
    """Reinterpret a classical tableau with every letter held for duration 1."""
    return TimedTableau(tuple(embed_classical(row) for row in t.rows))
