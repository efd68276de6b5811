"""Built-in presentations and input parsing."""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path

from .algebra import Algebra, QuiverPresentation, build_algebra
from .errors import ParseError, SchemaError

FIXTURE_NAMES = ("ex14", "ex15", "selfinj-x2", "auslander-x2", "kxk", "x3", "k-x-x2", "commsquare")


def _locate(text: str, needle: str) -> tuple[int | None, int | None]:
    idx = text.find(needle)
    if idx < 0:
        return None, None
    line = text.count("\n", 0, idx) + 1
    col = idx - (text.rfind("\n", 0, idx) + 1) + 1
    return line, col


def parse_text(text: str) -> QuiverPresentation:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    try:
        return QuiverPresentation.from_json(obj)
    except ParseError as exc:
        if exc.line is None:
            # point at the offending coefficient literal
            bad = str(exc).split("'")[1] if "'" in str(exc) else ""
            line, col = _locate(text, f'"{bad}"') if bad else (None, None)
            raise ParseError(str(exc), line, col) from None
        raise


def fixture_text(name: str) -> str:
    if name not in FIXTURE_NAMES:
        raise SchemaError(f"unknown fixture {name!r}", "input")
    return (resources.files("moritakit") / "data" / f"{name}.json").read_text()


def parse_input(source: str) -> QuiverPresentation:
    """A fixture name or a path to a presentation file."""
    if source in FIXTURE_NAMES:
        return parse_text(fixture_text(source))
    path = Path(source)
    if not path.is_file() and path.parent.name == "fixtures" and path.stem in FIXTURE_NAMES:
        return parse_text(fixture_text(path.stem))
    if not path.is_file():
        raise SchemaError(f"no such file or fixture: {source}", "input")
    return parse_text(path.read_text())


def load(source: str) -> Algebra:
    pres = parse_input(source)
    name = source if source in FIXTURE_NAMES else Path(source).stem
    return build_algebra(pres, name)
