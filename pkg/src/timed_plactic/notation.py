"""Textual and JSON notation.

Text grammar:
  - classical word: a string of digits when letters stay below 10
    (``3421153``), or comma-separated integers (``12,3,11``);
  - timed word: ``<letter>^<duration>`` tokens, whitespace optional between
    them, where a duration is a decimal numeral (``12``, ``0.45``, ``3.25``)
    or a fraction ``p/q``.

JSON schemas:
  - classical tableau: ``{"rows": [[1,1,3],[2,4,5],[3]]}``;
  - timed word: ``{"runs": [{"letter": 3, "dur": "41/50"}, ...]}``;
  - timed tableau: ``{"rows": [<timed word>, ...]}``, top row first;
  - move: ``{"kind": "k2", "u_len": "...", "x_len": "...", "y_len": "...",
    "z_len": "...", "reverse": false}`` with rational strings.

Durations parse to exact rationals: ``0.82`` means 82/100 reduced, never a
binary float.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .classical import Tableau, Word
from .errors import NotationError
from .timed_knuth import SOURCE_ORDER, TimedKnuthMove
from .timed_words import TimedWord, normalize
from .timed_tableaux import TimedTableau

_DURATION_RE = re.compile(r"^(?:\d+/\d+|\d+(?:\.\d+)?)$")
# The lookahead lets adjacent runs like 3^0.825^0.08 split unambiguously:
# the numeral backtracks until the rest starts a new <letter>^ token.
_RUN_RE = re.compile(r"(\d+)\^(\d+/\d+|\d+\.\d+|\d+)(?=\s|\d+\^|$)")


def parse_duration(text: str) -> Fraction:
    """Parse a decimal numeral or p/q fraction into an exact Fraction."""
    s = text.strip()
    if not _DURATION_RE.match(s):
        raise NotationError(f"not a duration: {text!r}")
    if "/" in s:
        num, den = s.split("/")
        if int(den) == 0:
            raise NotationError(f"zero denominator in {text!r}")
        return Fraction(int(num), int(den))
    return Fraction(s)


def format_duration(d: Fraction) -> str:
    """Exact decimal string when the denominator divides a power of 10
    (``41/50`` renders as ``0.82``), otherwise ``p/q``."""
    rest = d.denominator
    e2 = e5 = 0
    while rest % 2 == 0:
        rest //= 2
        e2 += 1
    while rest % 5 == 0:
        rest //= 5
        e5 += 1
    if rest != 1:
        return f"{d.numerator}/{d.denominator}"
    digits = max(e2, e5)
    scaled = abs(d.numerator) * 10**digits // d.denominator
    sign = "-" if d.numerator < 0 else ""
    if digits == 0:
        return f"{sign}{scaled}"
    text = str(scaled).rjust(digits + 1, "0")
    return f"{sign}{text[:-digits]}.{text[-digits:]}"


def human_rational(d: Fraction) -> str:
    """Human-readable rendering: exact decimal when one exists, otherwise the
    fraction with an approximation marked inexact."""
    text = format_duration(d)
    if "/" in text:
        return f"{text} (≈{float(d):.6g})"
    return text


def parse_timed_word(text: str) -> TimedWord:
    """Parse the timed-word grammar; errors carry the offending position."""
    runs: list[tuple[int, Fraction]] = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _RUN_RE.match(text, pos)
        if not m:
            raise NotationError("expected <letter>^<duration>", pos)
        letter = int(m.group(1))
        if letter < 1:
            raise NotationError("letters must be at least 1", pos)
        dur = parse_duration(m.group(2))
        if dur <= 0:
            raise NotationError("durations must be positive", m.start(2))
        runs.append((letter, dur))
        pos = m.end()
    return normalize(runs)


def format_timed_word(w: TimedWord) -> str:
    return " ".join(f"{c}^{format_duration(d)}" for c, d in w.runs)


def parse_word(text: str) -> Word:
    """Parse a classical word: digit string or comma-separated integers."""
    s = text.strip()
    if not s:
        return ()
    if "," in s:
        letters = []
        for part in s.split(","):
            part = part.strip()
            if not part.isdigit():
                raise NotationError(f"not a letter: {part!r}")
            value = int(part)
            if value < 1:
                raise NotationError(f"letters must be at least 1, got {part!r}")
            letters.append(value)
        return tuple(letters)
    if s.isdigit():
        if "0" in s:
            raise NotationError("digit-string words cannot contain the letter 0")
        return tuple(int(ch) for ch in s)
    raise NotationError(f"not a word: {text!r}")


def format_word(w: Word) -> str:
    if not w:
        return ""
    if max(w) <= 9:
        return "".join(map(str, w))
    return ",".join(map(str, w))


def parse_word_or_timed(text: str) -> Word | TimedWord:
    """Classify input by the presence of '^': timed words carry durations."""
    if "^" in text:
        return parse_timed_word(text)
    return parse_word(text)


def timed_word_to_dict(w: TimedWord) -> dict:
    return {"runs": [{"letter": c, "dur": str(d)} for c, d in w.runs]}


def timed_word_from_dict(data: dict) -> TimedWord:
    try:
        raw = data["runs"]
        runs = []
        for entry in raw:
            dur = parse_duration(str(entry["dur"]))
            if dur <= 0:
                raise NotationError(f"durations must be positive, got {entry['dur']!r}")
            runs.append((int(entry["letter"]), dur))
    except (KeyError, TypeError) as exc:
        raise NotationError(f"bad timed-word JSON: {exc}") from exc
    return normalize(runs)


def tableau_to_dict(t: Tableau) -> dict:
    return {"rows": [list(row) for row in t.rows]}


def tableau_from_dict(data: dict) -> Tableau:
    try:
        rows = tuple(tuple(int(x) for x in row) for row in data["rows"])
    except (KeyError, TypeError, ValueError) as exc:
        raise NotationError(f"bad tableau JSON: {exc}") from exc
    return Tableau(rows)


def timed_tableau_to_dict(t: TimedTableau) -> dict:
    return {"rows": [timed_word_to_dict(row) for row in t.rows]}


def timed_tableau_from_dict(data: dict) -> TimedTableau:
    try:
        rows = data["rows"]
    except (KeyError, TypeError) as exc:
        raise NotationError(f"bad timed-tableau JSON: {exc}") from exc
    return TimedTableau(tuple(timed_word_from_dict(row) for row in rows))


def format_timed_tableau(t: TimedTableau) -> str:
    return "\n".join(format_timed_word(row) for row in t.rows)


def move_to_dict(m: TimedKnuthMove) -> dict:
    order = SOURCE_ORDER[m.kind, m.reverse]
    lens = dict(zip(order, m.cuts))
    out = {
        "kind": m.kind,
        "u_len": str(m.position),
        "x_len": str(lens["x"]),
        "y_len": str(lens["y"]),
        "z_len": str(lens["z"]),
    }
    if m.reverse:
        out["reverse"] = True
    return out


def move_from_dict(data: dict) -> TimedKnuthMove:
    try:
        kind = data["kind"]
        reverse = bool(data.get("reverse", False))
        u_len = parse_duration(str(data["u_len"]))
        lens = {
            role: parse_duration(str(data[f"{role}_len"])) for role in ("x", "y", "z")
        }
    except (KeyError, TypeError) as exc:
        raise NotationError(f"bad move JSON: {exc}") from exc
    if kind not in ("k1", "k2"):
        raise NotationError(f"move kind must be 'k1' or 'k2', got {kind!r}")
    order = SOURCE_ORDER[kind, reverse]
    cuts = tuple(lens[role] for role in order)
    try:
        return TimedKnuthMove(kind, u_len, *cuts, reverse=reverse)
    except ValueError as exc:
        raise NotationError(f"bad move JSON: {exc}") from exc
