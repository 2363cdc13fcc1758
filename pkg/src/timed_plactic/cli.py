"""Command-line interface.

Subcommands: insert, greene, equiv, render, random, check. Classical words
(digit strings or comma-separated integers) are accepted anywhere a timed
word is; inputs containing ``^`` parse as timed words. ``--json`` switches
output to stable JSON (errors then go to stderr as JSON too).

Exit codes: 0 success; 1 failed verification (non-equivalent words, oracle
disagreement, failing checks); 2 parse or usage errors. The environment
variable ``TIMED_PLACTIC_SEED`` overrides ``--seed``.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from typing import Sequence

from .classical import Tableau, insertion_steps, insertion_tableau
from .errors import (
    BudgetExceededError,
    InvalidMoveError,
    InvalidTableauError,
    NotARowError,
    NotationError,
    OracleSizeError,
)
from .greene import (
    greene_classical,
    greene_classical_oracle,
    greene_timed,
    greene_timed_oracle,
)
from .notation import (
    format_timed_tableau,
    format_timed_word,
    format_word,
    human_rational,
    move_from_dict,
    parse_word_or_timed,
    tableau_from_dict,
    tableau_to_dict,
    timed_tableau_from_dict,
    timed_tableau_to_dict,
    timed_word_to_dict,
)
from .randomgen import random_timed_word
from .render import RenderSpec, render_svg
from .selfcheck import run_checks
from .timed_knuth import apply_move
from .timed_words import TimedWord, embed_classical
from .timed_tableaux import (
    TimedTableau,
    embed_classical_tableau,
    timed_insertion_steps,
    timed_insertion_tableau,
)


def _resolve_seed(args) -> int:
    env = os.environ.get("TIMED_PLACTIC_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise NotationError(f"TIMED_PLACTIC_SEED must be an integer, got {env!r}")
    return args.seed


def _print_json(payload) -> None:
    print(json.dumps(payload, indent=2, sort_keys=False))


def _tableau_text(t: Tableau) -> str:
    return "\n".join(format_word(row) for row in t.rows) if t.rows else "(empty)"


def _timed_tableau_text(t: TimedTableau) -> str:
    return format_timed_tableau(t) if t.rows else "(empty)"


def _cmd_insert(args) -> int:
    obj = parse_word_or_timed(args.input)
    if isinstance(obj, TimedWord):
        steps = timed_insertion_steps(obj) if args.steps else None
        final = timed_insertion_tableau(obj)
        payload = timed_tableau_to_dict(final)
        if steps is not None:
            payload["steps"] = [timed_tableau_to_dict(s) for s in steps]
        blocks = (
            []
            if steps is None
            else [f"after run {i + 1}:\n{_timed_tableau_text(s)}" for i, s in enumerate(steps)]
        )
        text_final = _timed_tableau_text(final)
    else:
        steps = insertion_steps(obj) if args.steps else None
        final = insertion_tableau(obj)
        payload = tableau_to_dict(final)
        if steps is not None:
            payload["steps"] = [tableau_to_dict(s) for s in steps]
        blocks = (
            []
            if steps is None
            else [f"after letter {i + 1}:\n{_tableau_text(s)}" for i, s in enumerate(steps)]
        )
        text_final = _tableau_text(final)
    if args.json:
        _print_json(payload)
    else:
        for block in blocks:
            print(block)
            print()
        print(text_final)
    return 0


def _cmd_greene(args) -> int:
    obj = parse_word_or_timed(args.input)
    note = None
    if isinstance(obj, TimedWord):
        profile = greene_timed(obj)
        mode, agreement = "fast", None
        if args.oracle:
            try:
                oracle = tuple(
                    greene_timed_oracle(obj, r) for r in range(1, len(profile) + 1)
                )
                mode, agreement = "both", oracle == profile
            except OracleSizeError as exc:
                note = str(exc)
        payload_profile = [str(x) for x in profile]
        display = " ".join(human_rational(x) for x in profile) or "(empty)"
    else:
        profile = greene_classical(obj)
        mode, agreement = "fast", None
        if args.oracle:
            try:
                oracle = tuple(
                    greene_classical_oracle(obj, r) for r in range(1, len(profile) + 1)
                )
                mode, agreement = "both", oracle == profile
            except OracleSizeError as exc:
                note = str(exc)
        payload_profile = list(profile)
        display = " ".join(map(str, profile)) or "(empty)"
    payload = {"profile": payload_profile, "mode": mode, "agreement": agreement}
    if note:
        payload["note"] = note
    if args.json:
        _print_json(payload)
    else:
        print(f"profile: {display}")
        print(f"mode: {mode}" + (f" (oracle skipped: {note})" if note else ""))
        if agreement is not None:
            print(f"agreement: {str(agreement).lower()}")
    return 1 if agreement is False else 0


def _cmd_equiv(args) -> int:
    left = parse_word_or_timed(args.left)
    right = parse_word_or_timed(args.right)
    classical = (
        not isinstance(left, TimedWord)
        and not isinstance(right, TimedWord)
        and args.move is None
    )
    payload: dict = {}
    if classical:
        ta, tb = insertion_tableau(left), insertion_tableau(right)
        equivalent = ta == tb
        payload["left_tableau"] = tableau_to_dict(ta)
        payload["right_tableau"] = tableau_to_dict(tb)
        texts = (_tableau_text(ta), _tableau_text(tb))
    else:
        wa = embed_classical(left) if not isinstance(left, TimedWord) else left
        wb = embed_classical(right) if not isinstance(right, TimedWord) else right
        ta, tb = timed_insertion_tableau(wa), timed_insertion_tableau(wb)
        equivalent = ta == tb
        payload["left_tableau"] = timed_tableau_to_dict(ta)
        payload["right_tableau"] = timed_tableau_to_dict(tb)
        texts = (_timed_tableau_text(ta), _timed_tableau_text(tb))
        if args.move is not None:
            move = move_from_dict(json.loads(args.move))
            moved = apply_move(wa, move)
            payload["move_result"] = timed_word_to_dict(moved)
            payload["move_reaches_right"] = moved == wb
    payload["equivalent"] = equivalent
    ok = equivalent and payload.get("move_reaches_right", True)
    if args.json:
        _print_json(payload)
    else:
        print(f"equivalent: {str(equivalent).lower()}")
        print(f"left insertion tableau:\n{texts[0]}")
        print(f"right insertion tableau:\n{texts[1]}")
        if "move_reaches_right" in payload:
            print(f"move result: {_move_result_text(payload)}")
            print(f"move reaches right word: {str(payload['move_reaches_right']).lower()}")
    return 0 if ok else 1


def _move_result_text(payload: dict) -> str:
    runs = payload["move_result"]["runs"]
    return " ".join(f"{r['letter']}^{r['dur']}" for r in runs) or "(empty)"


def _cmd_render(args) -> int:
    text = args.input.strip()
    if text.startswith("{"):
        data = json.loads(text)
        rows = data.get("rows", [])
        if rows and not isinstance(rows[0], dict):
            obj: TimedWord | TimedTableau = embed_classical_tableau(
                tableau_from_dict(data)
            )
        else:
            obj = timed_tableau_from_dict(data)
        target = "tableau"
    else:
        parsed = parse_word_or_timed(text)
        word = parsed if isinstance(parsed, TimedWord) else embed_classical(parsed)
        if args.tableau:
            obj = timed_insertion_tableau(word)
            target = "tableau"
        else:
            obj = word
            target = "ribbon"
    svg = render_svg(obj, RenderSpec(target=target, unit_scale=args.scale))
    with open(args.svg, "w", encoding="utf-8") as handle:
        handle.write(svg)
    if args.json:
        _print_json({"svg": args.svg, "bytes": len(svg.encode())})
    else:
        print(f"wrote {args.svg} ({len(svg.encode())} bytes)")
    return 0


def _cmd_random(args) -> int:
    seed = _resolve_seed(args)
    rng = random.Random(seed)
    word = random_timed_word(
        rng,
        runs=args.runs,
        max_letter=args.letters,
        max_den=args.max_den,
        max_num=args.max_num,
    )
    if args.json:
        _print_json(timed_word_to_dict(word))
    else:
        print(format_timed_word(word))
    return 0


def _cmd_check(args) -> int:
    seed = _resolve_seed(args)
    report = run_checks(args.iters, seed)
    if args.json:
        _print_json(report)
    else:
        print(f"seed {report['seed']}, {report['iterations']} iterations per suite")
        for suite in report["suites"]:
            print(f"  {suite['name']}: {suite['pass']} passed, {suite['fail']} failed")
        print("all checks passed" if report["ok"] else "CHECK FAILURES")
    return 0 if report["ok"] else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="timed-plactic",
        description=(
            "Schensted insertion, Knuth equivalence, and Greene invariants "
            "for classical and timed words."
        ),
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("insert", parents=[common], help="insertion tableau of a word")
    p.add_argument("input", help="classical or timed word")
    p.add_argument("--steps", action="store_true", help="show intermediate tableaux")
    p.set_defaults(handler=_cmd_insert)

    p = sub.add_parser("greene", parents=[common], help="Greene invariant profile")
    p.add_argument("input", help="classical or timed word")
    p.add_argument(
        "--oracle",
        action="store_true",
        help="cross-check against the brute-force oracle",
    )
    p.set_defaults(handler=_cmd_greene)

    p = sub.add_parser("equiv", parents=[common], help="decide Knuth equivalence")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument(
        "--move",
        metavar="JSON",
        default=None,
        help="apply this move to the left word and compare with the right",
    )
    p.set_defaults(handler=_cmd_equiv)

    p = sub.add_parser("render", parents=[common], help="render an SVG figure")
    p.add_argument("input", help="word, timed word, or tableau JSON")
    p.add_argument("--svg", required=True, metavar="PATH", help="output file")
    p.add_argument(
        "--tableau",
        action="store_true",
        help="render the insertion tableau instead of the ribbon",
    )
    p.add_argument("--scale", type=int, default=100, help="pixels per unit duration")
    p.set_defaults(handler=_cmd_render)

    p = sub.add_parser("random", parents=[common], help="generate a random timed word")
    p.add_argument("--runs", type=int, default=5)
    p.add_argument("--letters", type=int, default=4)
    p.add_argument("--max-den", type=int, default=4, dest="max_den")
    p.add_argument("--max-num", type=int, default=3, dest="max_num")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(handler=_cmd_random)

    p = sub.add_parser("check", parents=[common], help="run the self-check suites")
    p.add_argument("--iters", type=int, default=25)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(handler=_cmd_check)
    return parser


def _fail(args, exc: Exception, code: int) -> int:
    if getattr(args, "json", False):
        error = {"type": type(exc).__name__, "message": str(exc)}
        position = getattr(exc, "position", None)
        if position is not None:
            error["position"] = position
        condition = getattr(exc, "condition", None)
        if condition is not None:
            error["condition"] = condition
        print(json.dumps({"error": error}), file=sys.stderr)
    else:
        print(f"error: {exc}", file=sys.stderr)
    return code


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except json.JSONDecodeError as exc:
        return _fail(args, NotationError(f"bad JSON input: {exc}"), 2)
    except (NotationError, InvalidMoveError, InvalidTableauError, NotARowError) as exc:
        return _fail(args, exc, 2)
    except (OracleSizeError, BudgetExceededError) as exc:
        return _fail(args, exc, 2)
    except (ValueError, OSError) as exc:
        return _fail(args, exc, 2)


if __name__ == "__main__":
    sys.exit(main())
