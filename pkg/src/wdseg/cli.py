"""Thin command-line client over the shared handlers.

Reads one JSON request, writes one JSON response, no HTTP involved.  Exit
codes: 0 on success, 2 when the request is at fault, 3 when an internal
invariant tripped (a bug in the package, not in the request).  Errors go
to the selected output channel as {"error": ...} so scripted callers can
always parse what they get back.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .api import COMMANDS, run_command
from .errors import DomainError, InternalInvariantError
from .schemas import canonical_json

__all__ = ["run", "main"]


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wdseg",
        description="Exact multisegment calculus over a JSON boundary.",
    )
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument(
        "--input",
        default=None,
        metavar="PATH",
        help="JSON request file (default: stdin)",
    )
    parser.add_argument(
        "--output",
        default=None,
        metavar="PATH",
        help="where the JSON response goes (default: stdout)",
    )
    return parser


def _emit(path: Optional[str], payload: dict) -> None:
    text = canonical_json(payload)
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def run(argv: Optional[Sequence[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.input is None:
            raw = sys.stdin.read()
        else:
            with open(args.input, "r", encoding="utf-8") as fh:
                raw = fh.read()
    except OSError as exc:
        _emit(args.output, {"error": f"cannot read input: {exc}"})
        return 2
    try:
        payload = json.loads(raw)
    except json.JSONDecodeError as exc:
        _emit(args.output, {"error": f"request is not valid JSON: {exc}"})
        return 2
    if not isinstance(payload, dict):
        _emit(args.output, {"error": "request must be a JSON object"})
        return 2
    try:
        result = run_command(args.command, payload)
    except DomainError as exc:
        _emit(args.output, {"error": str(exc)})
        return 2
    except InternalInvariantError as exc:
        _emit(args.output, {"error": str(exc)})
        return 3
    _emit(args.output, result)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
