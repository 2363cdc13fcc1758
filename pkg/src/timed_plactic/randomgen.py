"""Seeded random generators for words, timed words, and valid Knuth moves.

These back the CLI ``random`` and ``check`` subcommands and the randomized
test suites; everything is driven by a caller-supplied ``random.Random`` so
runs are reproducible.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .classical import Word
from .timed_knuth import SOURCE_ORDER, TimedKnuthMove
from .timed_words import Run, TimedWord, concat, restrict
from .timed_tableaux import TimedTableau, timed_insertion_tableau


def random_word(
    rng: random.Random, *, max_len: int = 8, max_letter: int = 4, min_len: int = 0
) -> Word:
    return tuple(
        rng.randint(1, max_letter) for _ in range(rng.randint(min_len, max_len))
    )


def random_duration(rng: random.Random, *, max_num: int = 3, max_den: int = 4) -> Fraction:
    return Fraction(rng.randint(1, max_num), rng.randint(1, max_den))


def random_timed_word(
    rng: random.Random,
    *,
    runs: int | None = None,
    max_runs: int = 5,
    max_letter: int = 4,
    max_den: int = 4,
    max_num: int = 3,
) -> TimedWord:
    """A timed word with exactly ``runs`` runs (or up to ``max_runs``),
    adjacent letters kept distinct so the run count is as requested."""
    count = rng.randint(0, max_runs) if runs is None else runs
    if max_letter < 2:
        count = min(count, 1)
    letters: list[int] = []
    for _ in range(count):
        choices = [c for c in range(1, max_letter + 1) if not letters or c != letters[-1]]
        letters.append(rng.choice(choices))
    return TimedWord(
        tuple(Run(c, random_duration(rng, max_num=max_num, max_den=max_den)) for c in letters)
    )


def random_timed_row(
    rng: random.Random,
    *,
    min_runs: int = 2,
    max_runs: int = 4,
    max_letter: int = 5,
    max_den: int = 4,
    max_num: int = 2,
) -> TimedWord:
    count = rng.randint(min_runs, min(max_runs, max_letter))
    letters = sorted(rng.sample(range(1, max_letter + 1), count))
    return TimedWord(
        tuple(Run(c, random_duration(rng, max_num=max_num, max_den=max_den)) for c in letters)
    )


def random_timed_tableau(rng: random.Random, **kwargs) -> TimedTableau:
    """A valid timed tableau, obtained as the insertion tableau of a random
    timed word (guaranteed valid without a dedicated sampler)."""
    return timed_insertion_tableau(random_timed_word(rng, **kwargs))


def random_kappa_instance(
    rng: random.Random,
    kind: str,
    *,
    max_letter: int = 5,
    max_den: int = 4,
    max_num: int = 2,
    max_context_runs: int = 2,
) -> tuple[TimedWord, TimedKnuthMove]:
    """A word containing a valid move of the given kind, plus that move.

    Built directly: draw a timed row, split it into x, y, z meeting the
    length and boundary-letter conditions (the split between the two
    equal-length factors must land on a run boundary so the letters differ),
    then embed the source arrangement between random context words.
    """
    if kind not in ("k1", "k2"):
        raise ValueError(f"kind must be 'k1' or 'k2', got {kind!r}")
    for _ in range(1000):
        row = random_timed_row(
            rng, max_letter=max_letter, max_den=max_den, max_num=max_num
        )
        total = row.length
        interior = row.breakpoints()[1:-1]
        if kind == "k2":
            candidates = [s for s in interior if 2 * s < total]
            if not candidates:
                continue
            s = rng.choice(candidates)
            x = restrict(row, 0, s)
            y = restrict(row, s, 2 * s)
            z = restrict(row, 2 * s, total)
        else:
            candidates = [b for b in interior if 2 * b > total]
            if not candidates:
                continue
            b = rng.choice(candidates)
            x = restrict(row, 0, 2 * b - total)
            y = restrict(row, 2 * b - total, b)
            z = restrict(row, b, total)
        factors = {"x": x, "y": y, "z": z}
        u = random_timed_word(
            rng, max_runs=max_context_runs, max_letter=max_letter,
            max_den=max_den, max_num=max_num,
        )
        v = random_timed_word(
            rng, max_runs=max_context_runs, max_letter=max_letter,
            max_den=max_den, max_num=max_num,
        )
        order = SOURCE_ORDER[kind, False]
        source = [factors[role] for role in order]
        word = concat(u, *source, v)
        move = TimedKnuthMove(
            kind, u.length, *(f.length for f in source), reverse=False
        )
        return word, move
    raise RuntimeError(f"could not build a valid {kind} instance")
