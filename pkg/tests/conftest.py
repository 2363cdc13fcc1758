"""Shared fixtures: frozen worked-example data and hypothesis strategies."""

from __future__ import annotations

from fractions import Fraction

from hypothesis import settings
from hypothesis import strategies as st

from timed_plactic import TimedWord, normalize, parse_timed_word

# Exact rational arithmetic makes per-example cost vary widely; the wall-clock
# deadline would only add flakiness.
settings.register_profile("exact", deadline=None)
settings.load_profile("exact")

# Classical running example: the word whose insertion tableau is
# [113 / 245 / 3], with Greene profile (3, 6, 7).
WORD_3421153 = (3, 4, 2, 1, 1, 5, 3)
TABLEAU_3421153 = ((1, 1, 3), (2, 4, 5), (3,))
STEPS_3421153 = (
    ((3,),),
    ((3, 4),),
    ((2, 4), (3,)),
    ((1, 4), (2,), (3,)),
    ((1, 1), (2, 4), (3,)),
    ((1, 1, 5), (2, 4), (3,)),
    ((1, 1, 3), (2, 4, 5), (3,)),
)

# Timed running example: a 15-run word of length 7.19 whose insertion tableau
# has six rows and shape (3.20, 1.93, 1.09, 0.61, 0.29, 0.07).
BIG_TIMED_WORD_TEXT = (
    "3^0.82 5^0.08 2^0.45 6^0.64 5^0.94 1^0.15 5^0.09 1^0.52 "
    "4^0.29 1^0.59 3^0.97 4^0.42 2^0.61 1^0.07 4^0.55"
)
BIG_TIMED_TABLEAU_ROWS = (
    "1^1.33 2^0.54 3^0.36 4^0.97",
    "2^0.52 3^0.91 5^0.50",
    "3^0.52 4^0.22 5^0.32 6^0.03",
    "4^0.07 5^0.22 6^0.32",
    "5^0.07 6^0.22",
    "6^0.07",
)
BIG_TIMED_SHAPE = tuple(
    Fraction(x) for x in ("3.20", "1.93", "1.09", "0.61", "0.29", "0.07")
)
BIG_TIMED_READING_TEXT = (
    "6^0.07 5^0.07 6^0.22 4^0.07 5^0.22 6^0.32 3^0.52 4^0.22 5^0.32 6^0.03 "
    "2^0.52 3^0.91 5^0.50 1^1.33 2^0.54 3^0.36 4^0.97"
)
BIG_TIMED_PROFILE = tuple(
    Fraction(x) for x in ("3.20", "5.13", "6.22", "6.83", "7.12", "7.19")
)

# Row-insertion running example.
RINS_ROW_TEXT = "1^1.4 2^1.6 3^0.7"
RINS_INSERTED_TEXT = "1^0.7 2^0.2"
RINS_BUMPED_TEXT = "2^0.7 3^0.2"
RINS_RESULT_TEXT = "1^2.1 2^1.1 3^0.5"

# Tableau-insertion cascade fixtures on a two-row tableau of mass 5.6:
# row A (mass 2.2) cascades into a three-row tableau of shape (4.9, 1.9, 1.0);
# row B (mass 0.9) exercises the same cascade at smaller scale. Insertion
# conserves mass, so the resulting shapes always sum to 5.6 plus the row mass.
INSERT_EXAMPLE_TABLEAU_ROWS = ("1^1.4 2^1.6 3^0.7", "3^0.8 4^1.1")
INSERT_EXAMPLE_ROW_A = "1^0.3 2^1.7 3^0.2"
INSERT_EXAMPLE_RESULT_A = ("1^1.7 2^3 3^0.2", "2^0.3 3^1.2 4^0.4", "3^0.3 4^0.7")
INSERT_EXAMPLE_SHAPE_A = tuple(Fraction(x) for x in ("4.9", "1.9", "1.0"))
INSERT_EXAMPLE_ROW_B = "1^0.7 2^0.2"
INSERT_EXAMPLE_RESULT_B = ("1^2.1 2^1.1 3^0.5", "2^0.7 3^0.3 4^0.9", "3^0.7 4^0.2")

# Knuth-move running example: the two words differ by one k2 move whose
# factors are x = 1^0.32 2^0.41, y = 3^0.11 4^0.62, z = 4^0.27 5^1.20 inside
# the context u = 5^1.10 3^2.08, v = 2^0.03 (source order y, z, x).
KAPPA2_SOURCE_TEXT = "5^1.10 3^2.19 4^0.89 5^1.20 1^0.32 2^0.44"
KAPPA2_RESULT_TEXT = "5^1.10 3^2.19 4^0.62 1^0.32 2^0.41 4^0.27 5^1.20 2^0.03"
KAPPA2_MOVE_KWARGS = dict(
    kind="k2",
    position=Fraction("3.18"),
    cut1=Fraction("0.73"),
    cut2=Fraction("1.47"),
    cut3=Fraction("0.73"),
    reverse=True,
)


def tw(text: str) -> TimedWord:
    return parse_timed_word(text)


# hypothesis strategies

letters = st.integers(min_value=1, max_value=4)

words = st.lists(letters, max_size=8).map(tuple)

durations = st.fractions(
    min_value=Fraction(1, 8), max_value=Fraction(3), max_denominator=8
)

timed_words = st.lists(st.tuples(letters, durations), max_size=6).map(normalize)

nonempty_timed_words = st.lists(
    st.tuples(letters, durations), min_size=1, max_size=6
).map(normalize)

# Small common denominators keep the scaling-oracle grid tractable.
small_durations = st.fractions(
    min_value=Fraction(1, 4), max_value=Fraction(2), max_denominator=4
)

small_timed_words = st.lists(st.tuples(letters, small_durations), max_size=5).map(
    normalize
)
