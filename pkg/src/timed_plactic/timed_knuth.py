"""Knuth moves on timed words.

The two move kinds rewrite a three-factor region of a word, leaving a prefix
u and suffix v untouched. With x, y, z denoting the roles in the side
conditions (x y z must form a timed row):

  k1: x z y <-> z x y   requires l(z) = l(y) and last letter of y < first of z
  k2: y x z <-> y z x   requires l(x) = l(y) and last letter of x < first of y

A move names the region by rational cut lengths in the source word; the
``reverse`` flag applies the rewrite right to left. Both directions of either
kind preserve the letter-duration histogram and the insertion tableau.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidMoveError
from .greene import greene_timed, greene_timed_oracle, profile_value
from .timed_words import TimedWord, as_duration, concat, is_timed_row, restrict
from .timed_tableaux import timed_insertion_tableau

# Factor roles in their order of appearance, per (kind, reverse).
SOURCE_ORDER: dict[tuple[str, bool], str] = {
    ("k1", False): "xzy",
    ("k1", True): "zxy",
    ("k2", False): "yxz",
    ("k2", True): "yzx",
}
TARGET_ORDER: dict[tuple[str, bool], str] = {
    ("k1", False): "zxy",
    ("k1", True): "xzy",
    ("k2", False): "yzx",
    ("k2", True): "yxz",
}


@dataclass(frozen=True)
class TimedKnuthMove:
    """A Knuth move site: ``position`` is where the three-factor region
    starts, and cut1..cut3 are the factor lengths in source order (see
    SOURCE_ORDER for which role each cut plays)."""

    kind: str
    position: Fraction
    cut1: Fraction
    cut2: Fraction
    cut3: Fraction
    reverse: bool = False

    def __post_init__(self):
        if self.kind not in ("k1", "k2"):
            raise ValueError(f"move kind must be 'k1' or 'k2', got {self.kind!r}")
        object.__setattr__(self, "position", as_duration(self.position))
        for name in ("cut1", "cut2", "cut3"):
            value = as_duration(getattr(self, name))
            if value <= 0:
                raise ValueError(f"{name} must be positive, got {value}")
            object.__setattr__(self, name, value)
        if self.position < 0:
            raise ValueError(f"position must be nonnegative, got {self.position}")

    @property
    def cuts(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.cut1, self.cut2, self.cut3)


def _split(w: TimedWord, m: TimedKnuthMove):
    start = m.position
    end = start + m.cut1 + m.cut2 + m.cut3
    if end > w.length:
        raise InvalidMoveError(
            "cuts-out-of-range",
            f"move region [{start}, {end}) exceeds word length {w.length}",
        )
    u = restrict(w, 0, start)
    a = start + m.cut1
    b = a + m.cut2
    factors = (restrict(w, start, a), restrict(w, a, b), restrict(w, b, end))
    v = restrict(w, end, w.length)
    return u, factors, v


def _validate(kind: str, x: TimedWord, y: TimedWord, z: TimedWord) -> None:
    if not is_timed_row(concat(x, y, z)):
        raise InvalidMoveError(
            "xyz-not-a-row", f"x y z = {concat(x, y, z)!r} is not a timed row"
        )
    if kind == "k1":
        if z.length != y.length:
            raise InvalidMoveError(
                "length-mismatch", f"l(z) = {z.length} differs from l(y) = {y.length}"
            )
        if not y.runs[-1].letter < z.runs[0].letter:
            raise InvalidMoveError(
                "limit-condition",
                f"last letter of y ({y.runs[-1].letter}) must be below the "
                f"first letter of z ({z.runs[0].letter})",
            )
    else:
        if x.length != y.length:
            raise InvalidMoveError(
                "length-mismatch", f"l(x) = {x.length} differs from l(y) = {y.length}"
            )
        if not x.runs[-1].letter < y.runs[0].letter:
            raise InvalidMoveError(
                "limit-condition",
                f"last letter of x ({x.runs[-1].letter}) must be below the "
                f"first letter of y ({y.runs[0].letter})",
            )


def apply_move(w: TimedWord, m: TimedKnuthMove) -> TimedWord:
    """Validate and apply a move, returning the rewritten (normalized) word."""
    u, factors, v = _split(w, m)
    named = dict(zip(SOURCE_ORDER[m.kind, m.reverse], factors))
    _validate(m.kind, named["x"], named["y"], named["z"])
    rearranged = (named[role] for role in TARGET_ORDER[m.kind, m.reverse])
    return concat(u, *rearranged, v)


def apply_kappa1(w: TimedWord, m: TimedKnuthMove) -> TimedWord:
    if m.kind != "k1":
        raise InvalidMoveError("kind-mismatch", f"expected a k1 move, got {m.kind}")
    return apply_move(w, m)


def apply_kappa2(w: TimedWord, m: TimedKnuthMove) -> TimedWord:
    if m.kind != "k2":
        raise InvalidMoveError("kind-mismatch", f"expected a k2 move, got {m.kind}")
    return apply_move(w, m)


def invert_move(m: TimedKnuthMove) -> TimedKnuthMove:
    """The move that undoes m on m's output (same kind, opposite direction).

    Applying m permutes the factor lengths within the region: k1 swaps the
    first two cuts, k2 the last two.
    """
    if m.kind == "k1":
        cuts = (m.cut2, m.cut1, m.cut3)
    else:
        cuts = (m.cut1, m.cut3, m.cut2)
    return TimedKnuthMove(m.kind, m.position, *cuts, reverse=not m.reverse)


def timed_knuth_equivalent(w: TimedWord, w2: TimedWord) -> bool:
    """Decide Knuth equivalence of timed words by insertion-tableau equality
    (exact rational comparison of all rows)."""
    return timed_insertion_tableau(w) == timed_insertion_tableau(w2)


def check_move_invariance(
    w: TimedWord,
    m: TimedKnuthMove,
    r: int,
    *,
    use_oracle: bool = True,
    max_letters: int | None = 500,
) -> bool:
    """True iff the Greene invariants a_1..a_r agree before and after m.

    With ``use_oracle`` the invariants come from the scaling oracle (subject
    to its expansion bound); otherwise from the insertion-tableau fast path.
    """
    w2 = apply_move(w, m)
    if use_oracle:
        return all(
            greene_timed_oracle(w, i, max_letters=max_letters)
            == greene_timed_oracle(w2, i, max_letters=max_letters)
            for i in range(1, r + 1)
        )
    prof, prof2 = greene_timed(w), greene_timed(w2)
    return all(
        profile_value(prof, i, w.length) == profile_value(prof2, i, w2.length)
        for i in range(1, r + 1)
    )
