# quandles/services/loaders.py
"""
Reading and writing the toolkit's text file formats.

    group <n>      followed by n rows of n element indices (row i, column j = i.j)
    quandle <n>    followed by n rows of n element indices (row x, column y = x*y)
    gens: / rel:   presentation files (see algebra.presented)
    over= in= ...  crossing lists (see algebra.knots)

Blank lines and `#` comments are ignored everywhere.
"""

import logging
from pathlib import Path
from typing import List, Tuple

from ..algebra.errors import MalformedInputError, ToolkitIOError
from ..algebra.finite_group import FiniteGroup, verify_group
from ..algebra.finite_quandle import FiniteQuandle, verify_quandle
from ..algebra.knots import CrossingList, parse_crossing_list
from ..algebra.presented import QuandlePresentation, parse_presentation

logger = logging.getLogger(__name__)


def read_text(path) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ToolkitIOError(f"cannot read {path}: {e.strerror or e}") from e


def write_text(path, text: str):
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as e:
        raise ToolkitIOError(f"cannot write {path}: {e.strerror or e}") from e
    logger.info("wrote %s", path)


def _content_lines(text: str) -> List[Tuple[int, str]]:
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((lineno, line))
    return lines


def parse_table_text(text: str, keyword: str) -> List[List[int]]:
    """The rows of a `<keyword> <n>` table file, checked for shape and range."""
    lines = _content_lines(text)
    if not lines:
        raise MalformedInputError(f"empty file; expected '{keyword} <n>'")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or parts[0] != keyword or not parts[1].isdigit():
        raise MalformedInputError(f"expected header '{keyword} <n>', got {header!r}", lineno)
    n = int(parts[1])
    if n < 1:
        raise MalformedInputError(f"{keyword} order must be >= 1", lineno)
    body = lines[1:]
    if len(body) != n:
        raise MalformedInputError(f"expected {n} rows after the header, found {len(body)}")
    rows = []
    for lineno, line in body:
        try:
            row = [int(v) for v in line.split()]
        except ValueError:
            raise MalformedInputError(f"row is not a list of integers: {line!r}", lineno) from None
        if len(row) != n:
            raise MalformedInputError(f"row has {len(row)} entries, expected {n}", lineno)
        bad = [v for v in row if not 0 <= v < n]
        if bad:
            raise MalformedInputError(f"entry {bad[0]} is out of range 0..{n - 1}", lineno)
        rows.append(row)
    return rows


def load_group(path) -> FiniteGroup:
    return verify_group(parse_table_text(read_text(path), "group"))


def load_quandle(path, label: str = "") -> FiniteQuandle:
    return verify_quandle(parse_table_text(read_text(path), "quandle"), label or f"table:{path}")


def format_table(rows, keyword: str = "quandle") -> str:
    lines = [f"{keyword} {len(rows)}"]
    lines.extend(" ".join(str(v) for v in row) for row in rows)
    return "\n".join(lines) + "\n"


def format_quandle(Q: FiniteQuandle) -> str:
    return format_table(Q.table, "quandle")


def load_presentation(path) -> QuandlePresentation:
    return parse_presentation(read_text(path))


def load_crossings(path) -> CrossingList:
    return parse_crossing_list(read_text(path))
