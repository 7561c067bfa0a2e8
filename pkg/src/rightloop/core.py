"""Finite magmas as Cayley tables, right-loop validation, divisions, translations.

Conventions used throughout the package:

* ``entries[r][c]`` is ``r o c``, so the right translation ``R_c`` is the
  column of ``c``.
* Elements are dense indices ``0..n-1`` with a parallel tuple of names.
* ``f * g`` for permutations means "apply ``g`` first, then ``f``".
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

NAME_RE = re.compile(r"^[A-Za-z0-9_+-]+$")

KINDS = ("right-loop", "loop", "group")


class TableStructureError(ValueError):
    """The table is malformed (not square, bad index, bad names)."""


class NotARightLoop(ValueError):
    def __init__(self, report: "ValidationReport"):
        self.report = report
        super().__init__("table is not a right loop: " + "; ".join(v.describe() for v in report.violations[:5]))


class NotLeftSolvable(ValueError):
    """``x \\ y`` is undefined because the row of ``x`` is not a bijection."""

    def __init__(self, x: int, name: str | None = None):
        self.x = x
        super().__init__(f"row of {name if name is not None else x} is not a bijection")


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation of range({len(images)}): {images}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    def __len__(self):
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: "Permutation") -> "Permutation":
        # (self * other)(i) = self(other(i))
        if len(other) != len(self):
            raise ValueError("degree mismatch")
        mine = self.images
        return Permutation(tuple(mine[j] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    @property
    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def moved_points(self) -> list[int]:
        return [i for i, j in enumerate(self.images) if i != j]


@dataclass(frozen=True)
class NonBijective:
    """A row map that is not a permutation; ``collision`` is ``(c1, c2)`` with equal images."""

    images: tuple[int, ...]
    collision: tuple[int, int]


@dataclass(frozen=True)
class CayleyTable:
    names: tuple[str, ...]
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        names = tuple(self.names)
        entries = tuple(tuple(row) for row in self.entries)
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "entries", entries)
        n = len(names)
        if n == 0:
            raise TableStructureError("table must have at least one element")
        if len(set(names)) != n:
            dup = next(x for x in names if names.count(x) > 1)
            raise TableStructureError(f"duplicate element name {dup!r}")
        for name in names:
            if not isinstance(name, str) or not NAME_RE.match(name):
                raise TableStructureError(f"invalid element name {name!r}")
        if len(entries) != n:
            raise TableStructureError(f"expected {n} rows, got {len(entries)}")
        for r, row in enumerate(entries):
            if len(row) != n:
                raise TableStructureError(f"row {r} has {len(row)} entries, expected {n}")
            for c, v in enumerate(row):
                if not isinstance(v, int) or not 0 <= v < n:
                    raise TableStructureError(f"entry ({r}, {c}) = {v!r} out of range")

    @classmethod
    def from_function(cls, names: Sequence[str], op) -> "CayleyTable":
        n = len(names)
        return cls(tuple(names), tuple(tuple(op(r, c) for c in range(n)) for r in range(n)))

    @property
    def order(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"unknown element {name!r}") from None

    def __call__(self, r: int, c: int) -> int:
        return self.entries[r][c]

    def column(self, c: int) -> tuple[int, ...]:
        return tuple(row[c] for row in self.entries)


@dataclass(frozen=True)
class Violation:
    axiom: str
    witness: tuple
    message: str

    def describe(self) -> str:
        return f"{self.axiom} {self.message}"


@dataclass
class ValidationReport:
    kind: str
    violations: list[Violation] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.violations

    def lines(self) -> list[str]:
        if self.valid:
            return [f"{self.kind} holds"]
        return [f"{self.kind} fails {v.describe()}" for v in self.violations]


def _first_collision(images: Sequence[int]) -> tuple[int, int] | None:
    seen: dict[int, int] = {}
    for i, v in enumerate(images):
        if v in seen:
            return seen[v], i
        seen[v] = i
    return None


def validate(table: CayleyTable, identity: int = 0, kind: str = "right-loop") -> ValidationReport:
    """Check the axioms for ``kind`` exhaustively and collect every violation.

    Structural problems are caught when the ``CayleyTable`` is built, so
    everything reported here is an axiom failure with a concrete witness.
    """
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}; expected one of {KINDS}")
    n = table.order
    if not 0 <= identity < n:
        raise TableStructureError(f"identity index {identity} out of range")
    T = table.entries
    nm = table.names
    report = ValidationReport(kind)
    out = report.violations

    for x in range(n):
        if T[identity][x] != x:
            out.append(Violation("left-identity", (identity, x), f"{nm[identity]}*{nm[x]}={nm[T[identity][x]]}"))
        if T[x][identity] != x:
            out.append(Violation("right-identity", (x, identity), f"{nm[x]}*{nm[identity]}={nm[T[x][identity]]}"))

    for c in range(n):
        hit = _first_collision(table.column(c))
        if hit:
            r1, r2 = hit
            out.append(Violation("column-bijective", (c, r1, r2),
                                 f"column {nm[c]}: rows {nm[r1]} and {nm[r2]} both give {nm[T[r1][c]]}"))

    if kind in ("loop", "group"):
        for r in range(n):
            hit = _first_collision(T[r])
            if hit:
                c1, c2 = hit
                out.append(Violation("row-bijective", (r, c1, c2),
                                     f"row {nm[r]}: columns {nm[c1]} and {nm[c2]} both give {nm[T[r][c1]]}"))

    if kind == "group":
        for x in range(n):
            Tx = T[x]
            for y in range(n):
                xy = Tx[y]
                Txy = T[xy]
                Ty = T[y]
                for z in range(n):
                    if Txy[z] != Tx[Ty[z]]:
                        out.append(Violation("associativity", (x, y, z),
                                             f"({nm[x]}*{nm[y]})*{nm[z]}={nm[Txy[z]]} != "
                                             f"{nm[x]}*({nm[y]}*{nm[z]})={nm[Tx[Ty[z]]]}"))
        for x in range(n):
            if not any(T[x][y] == identity and T[y][x] == identity for y in range(n)):
                out.append(Violation("inverse", (x,), f"{nm[x]} has no two-sided inverse"))
    return report


@dataclass(frozen=True)
class RightLoopTable:
    """A Cayley table with identity whose columns are all permutations."""

    table: CayleyTable
    identity: int = 0

    def __post_init__(self):
        report = validate(self.table, self.identity, "right-loop")
        if not report.valid:
            raise NotARightLoop(report)
        # column inverses give O(1) right division
        n = self.table.order
        rdiv = [[0] * n for _ in range(n)]
        for r, row in enumerate(self.table.entries):
            for c, v in enumerate(row):
                rdiv[v][c] = r
        object.__setattr__(self, "_rdiv", tuple(tuple(row) for row in rdiv))

    @property
    def order(self) -> int:
        return self.table.order

    @property
    def names(self) -> tuple[str, ...]:
        return self.table.names

    def op(self, x: int, y: int) -> int:
        return self.table.entries[x][y]

    def index(self, name: str) -> int:
        return self.table.index(name)

    def elements(self) -> range:
        return range(self.order)


def right_divide(L: RightLoopTable, y: int, x: int) -> int:
    """Return ``y / x``, the unique ``q`` with ``q o x = y``."""
    return L._rdiv[y][x]


def left_divide(L: RightLoopTable, x: int, y: int) -> int:
    """Return ``x \\ y``, the unique ``q`` with ``x o q = y``."""
    row = L.table.entries[x]
    if _first_collision(row) is not None:
        raise NotLeftSolvable(x, L.names[x])
    return row.index(y)


def right_translation(L: RightLoopTable, u: int) -> Permutation:
    return Permutation(L.table.column(u))


def left_translation(L: RightLoopTable, u: int) -> Permutation | NonBijective:
    row = L.table.entries[u]
    hit = _first_collision(row)
    if hit is not None:
        return NonBijective(row, hit)
    return Permutation(row)


def is_loop(L: RightLoopTable) -> bool:
    return all(_first_collision(row) is None for row in L.table.entries)


def relabel(table: CayleyTable, order: Iterable[int]) -> CayleyTable:
    """Reorder elements so that new index ``k`` is old index ``order[k]``."""
    order = list(order)
    pos = {old: new for new, old in enumerate(order)}
    T = table.entries
    return CayleyTable(
        tuple(table.names[o] for o in order),
        tuple(tuple(pos[T[a][b]] for b in order) for a in order),
    )
