"""Reader and writer for the LOOPTAB v1 / grouptab v1 text formats.

::

    looptab 1            # or "grouptab 1"
    3                    # order n
    e a b                # element names, identity first
    e a b                # n rows; token c of row r is r o c
    a b e
    b e a

``#`` starts a comment and blank lines are ignored.
"""

from __future__ import annotations

from pathlib import Path

from .core import CayleyTable, TableStructureError, relabel

MAGICS = ("looptab", "grouptab")


class LooptabParseError(TableStructureError):
    def __init__(self, msg: str, lineno: int | None = None):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {msg}" if lineno is not None else msg)


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse(text: str) -> tuple[CayleyTable, str]:
    """Parse LOOPTAB text. Returns the table (identity at index 0) and the magic word."""
    lines = list(_content_lines(text))
    if not lines:
        raise LooptabParseError("empty file")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or parts[0] not in MAGICS or parts[1] != "1":
        raise LooptabParseError(f"bad header {header!r}, expected 'looptab 1' or 'grouptab 1'", lineno)
    magic = parts[0]
    if len(lines) < 3:
        raise LooptabParseError("missing order or name line")
    lineno, order_line = lines[1]
    try:
        n = int(order_line)
    except ValueError:
        raise LooptabParseError(f"bad order {order_line!r}", lineno) from None
    if n <= 0:
        raise LooptabParseError(f"order must be positive, got {n}", lineno)
    lineno, name_line = lines[2]
    names = name_line.split()
    if len(names) != n:
        raise LooptabParseError(f"expected {n} names, got {len(names)}", lineno)
    if len(set(names)) != n:
        raise LooptabParseError("duplicate element names", lineno)
    index = {name: i for i, name in enumerate(names)}
    rows = lines[3:]
    if len(rows) != n:
        raise LooptabParseError(f"expected {n} table rows, got {len(rows)}")
    entries = []
    for lineno, line in rows:
        tokens = line.split()
        if len(tokens) != n:
            raise LooptabParseError(f"expected {n} entries, got {len(tokens)}", lineno)
        try:
            entries.append(tuple(index[t] for t in tokens))
        except KeyError as exc:
            raise LooptabParseError(f"unknown element {exc.args[0]!r}", lineno) from None
    try:
        table = CayleyTable(tuple(names), tuple(entries))
    except TableStructureError as exc:
        raise LooptabParseError(str(exc)) from None
    return table, magic


def dumps(table: CayleyTable, identity: int = 0, magic: str = "looptab", comments: list[str] | None = None) -> str:
    if magic not in MAGICS:
        raise ValueError(f"unknown magic {magic!r}")
    if identity != 0:
        table = relabel(table, [identity] + [i for i in range(table.order) if i != identity])
    out = [f"{magic} 1"]
    out.extend(f"# {c}" for c in comments or ())
    out.append(str(table.order))
    out.append(" ".join(table.names))
    for row in table.entries:
        out.append(" ".join(table.names[v] for v in row))
    return "\n".join(out) + "\n"


def load(path) -> tuple[CayleyTable, str]:
    return parse(Path(path).read_text(encoding="utf-8"))


def dump(path, table: CayleyTable, identity: int = 0, magic: str = "looptab", comments=None) -> None:
    Path(path).write_text(dumps(table, identity, magic, comments), encoding="utf-8")
