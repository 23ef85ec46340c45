"""
Plain-text formats for quandles, subsets and congruence classes.

Quandle files: the first data line is the order n, followed by n rows of n
space-separated 0-based entries (row x, column y holds x ◁ y). Anything after a
'#' is a comment; blank lines are ignored.
"""

from pathlib import Path
from typing import Iterable, List, Optional, Sequence, Union

from quandle_closure.core.congruence import Congruence
from quandle_closure.core.quandle import Quandle, SubSet, validate_quandle
from quandle_closure.errors import AxiomViolation, ParseError


def parse_quandle_text(text: str, source: Optional[str] = None) -> Quandle:
    data = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            data.append((lineno, line))
    if not data:
        raise ParseError(1, "missing order line", source)

    lineno, line = data[0]
    try:
        order = int(line)
    except ValueError:
        raise ParseError(lineno, f"expected the order, got {line!r}", source)
    if order < 0:
        raise ParseError(lineno, f"negative order {order}", source)

    rows = data[1:]
    if len(rows) != order:
        last = rows[-1][0] if rows else lineno
        raise ParseError(last, f"expected {order} table rows, found {len(rows)}", source)

    table: List[List[int]] = []
    for lineno, line in rows:
        fields = line.split()
        if len(fields) != order:
            raise ParseError(lineno, f"expected {order} entries, found {len(fields)}", source)
        try:
            row = [int(v) for v in fields]
        except ValueError:
            raise ParseError(lineno, f"non-integer entry in {line!r}", source)
        for v in row:
            if not 0 <= v < order:
                raise ParseError(lineno, f"entry {v} outside 0..{order - 1}", source)
        table.append(row)

    try:
        return validate_quandle(order, table)
    except AxiomViolation as exc:
        raise exc.with_source(source) if source else exc


def parse_quandle_file(path: Union[str, Path]) -> Quandle:
    path = Path(path)
    data = path.read_bytes()
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        line = data.count(b"\n", 0, exc.start) + 1
        reason = f"byte 0x{data[exc.start]:02x} is not valid UTF-8"
        raise ParseError(line, reason, str(path)) from exc
    return parse_quandle_text(text, source=str(path))


def format_quandle(q: Quandle, comments: Iterable[str] = ()) -> str:
    lines = [str(q.order)]
    lines.extend(" ".join(map(str, row)) for row in q.rows)
    lines.extend(f"# {c}".rstrip() for c in comments)
    return "\n".join(lines) + "\n"


def format_map(images: Sequence[int]) -> str:
    return " ".join(map(str, images))


def _elements(text: str, order: int, what: str, flag: Optional[str]) -> List[int]:
    out = []
    for field in text.split(","):
        field = field.strip()
        if not field:
            continue
        try:
            x = int(field)
        except ValueError:
            raise ParseError(None, f"non-integer element {field!r} in {what} {text!r}", flag)
        if not 0 <= x < order:
            raise ParseError(None, f"element {x} outside 0..{order - 1} in {what} {text!r}", flag)
        out.append(x)
    return out


def parse_subset(text: str, order: int, flag: Optional[str] = None) -> SubSet:
    """Comma-separated elements, e.g. `0,2`; the empty string is the empty subset."""
    return SubSet.of(order, _elements(text, order, "subset", flag))


def parse_classes(text: str, order: int, flag: Optional[str] = None) -> Congruence:
    """Semicolon-separated classes of comma lists, e.g. `0,1;2`; unlisted elements stay alone."""
    seen = set()
    blocks = []
    for chunk in text.split(";"):
        block = _elements(chunk, order, "classes", flag)
        for x in block:
            if x in seen:
                raise ParseError(None, f"element {x} listed twice in classes {text!r}", flag)
            seen.add(x)
        if block:
            blocks.append(block)
    return Congruence.from_classes(order, blocks)


def format_classes(c: Congruence) -> str:
    return str(c)
