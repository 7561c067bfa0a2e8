"""Small loops and groups used as test and demo material.

All groups of order at most 8 (up to isomorphism), plus three nonassociative
loops:

* ``nonassoc5``: a loop of order 5 that is neither associative nor I.P.
* ``ip7``: a noncommutative, nonassociative I.P. loop of order 7.
* ``steiner10``: the Steiner loop of the affine plane of order 3, a
  commutative, nonassociative I.P. loop of order 10 with ``x o x = e``.

``python -m rightloop.corpus DIR`` writes every entry as a LOOPTAB/grouptab file.
"""

from __future__ import annotations

import itertools
import sys
from pathlib import Path

from .core import CayleyTable, RightLoopTable

NONASSOC5 = (
    (0, 1, 2, 3, 4),
    (1, 0, 3, 4, 2),
    (2, 4, 0, 1, 3),
    (3, 2, 4, 0, 1),
    (4, 3, 1, 2, 0),
)

IP7 = (
    (0, 1, 2, 3, 4, 5, 6),
    (1, 2, 0, 5, 6, 4, 3),
    (2, 0, 1, 6, 5, 3, 4),
    (3, 6, 5, 4, 0, 1, 2),
    (4, 5, 6, 0, 3, 2, 1),
    (5, 3, 4, 2, 1, 6, 0),
    (6, 4, 3, 1, 2, 0, 5),
)


def _from_elements(elements: list, mul, names: list[str]) -> CayleyTable:
    index = {g: i for i, g in enumerate(elements)}
    return CayleyTable.from_function(names, lambda r, c: index[mul(elements[r], elements[c])])


def cyclic(n: int) -> CayleyTable:
    return CayleyTable.from_function([str(i) for i in range(n)], lambda r, c: (r + c) % n)


def abelian(*moduli: int) -> CayleyTable:
    """Direct product of cyclic groups; names are digit strings like ``"01"``."""
    elements = list(itertools.product(*(range(m) for m in moduli)))
    names = ["".join(map(str, g)) for g in elements]
    return _from_elements(elements, lambda a, b: tuple((x + y) % m for x, y, m in zip(a, b, moduli)), names)


def symmetric3() -> CayleyTable:
    elements = list(itertools.permutations(range(3)))
    # (p * q)(i) = p(q(i))
    return _from_elements(elements, lambda p, q: tuple(p[i] for i in q),
                          ["p" + "".join(map(str, p)) for p in elements])


def dihedral(n: int) -> CayleyTable:
    """Dihedral group of order ``2n``: ``s^j r^i`` stored as ``(j, i)``."""
    elements = [(j, i) for j in (0, 1) for i in range(n)]

    def mul(a, b):
        # r^i s = s r^-i
        j1, i1 = a
        j2, i2 = b
        return ((j1 + j2) % 2, ((-i1 if j2 else i1) + i2) % n)

    names = [("s" if j else "") + (f"r{i}" if i else ("" if j else "e")) for j, i in elements]
    return _from_elements(elements, mul, names)


def quaternion() -> CayleyTable:
    # unit quaternions as (sign, axis) with axis in 1, i, j, k
    axes = "1ijk"
    mult = {
        ("1", x): (1, x) for x in axes
    } | {
        (x, "1"): (1, x) for x in axes
    } | {
        ("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
        ("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
        ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j"),
    }
    elements = [(s, a) for a in axes for s in (1, -1)]

    def mul(p, q):
        s, a = mult[p[1], q[1]]
        return (p[0] * q[0] * s, a)

    names = [("-" if s < 0 else "") + a for s, a in elements]
    return _from_elements(elements, mul, names)


def steiner_loop(triples, points) -> CayleyTable:
    """Steiner loop of a Steiner triple system; ``e`` is adjoined as identity."""
    points = list(points)
    third = {}
    for t in triples:
        for x, y in itertools.permutations(t, 2):
            third[x, y] = next(z for z in t if z not in (x, y))
    elements = ["e"] + points

    def mul(x, y):
        if x == "e":
            return y
        if y == "e":
            return x
        if x == y:
            return "e"
        return third[x, y]

    return _from_elements(elements, mul, [str(p) for p in elements])


def _affine_plane_3():
    pts = [f"p{a}{b}" for a in range(3) for b in range(3)]
    lines = set()
    for (a1, b1), (a2, b2) in itertools.combinations(itertools.product(range(3), repeat=2), 2):
        da, db = (a2 - a1) % 3, (b2 - b1) % 3
        line = frozenset(f"p{(a1 + t * da) % 3}{(b1 + t * db) % 3}" for t in range(3))
        lines.add(line)
    return sorted(tuple(sorted(l)) for l in lines), pts


def _latin(rows, prefix="u") -> CayleyTable:
    return CayleyTable([f"{prefix}{i}" for i in range(len(rows))], rows)


GROUPS = {
    "z1": lambda: cyclic(1),
    "z2": lambda: cyclic(2),
    "z3": lambda: cyclic(3),
    "z4": lambda: cyclic(4),
    "z2xz2": lambda: abelian(2, 2),
    "z5": lambda: cyclic(5),
    "z6": lambda: cyclic(6),
    "s3": symmetric3,
    "z7": lambda: cyclic(7),
    "z8": lambda: cyclic(8),
    "z4xz2": lambda: abelian(4, 2),
    "z2xz2xz2": lambda: abelian(2, 2, 2),
    "d4": lambda: dihedral(4),
    "q8": quaternion,
}

LOOPS = {
    "nonassoc5": lambda: _latin(NONASSOC5),
    "ip7": lambda: _latin(IP7),
    "steiner10": lambda: steiner_loop(*_affine_plane_3()),
}


def groups() -> dict[str, CayleyTable]:
    return {name: make() for name, make in GROUPS.items()}


def loops() -> dict[str, CayleyTable]:
    return {name: make() for name, make in LOOPS.items()}


def corpus() -> dict[str, RightLoopTable]:
    """Every corpus table as a right loop with identity at index 0."""
    out = {name: RightLoopTable(t) for name, t in groups().items()}
    out.update({name: RightLoopTable(t) for name, t in loops().items()})
    return out


def filename(name: str) -> str:
    return f"{name}.grouptab" if name in GROUPS else f"{name}.looptab"


def write_corpus(directory) -> list[Path]:
    from .looptab import dump

    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    paths = []
    for name, t in {**groups(), **loops()}.items():
        path = directory / filename(name)
        dump(path, t, magic="grouptab" if name in GROUPS else "looptab")
        paths.append(path)
    return paths


if __name__ == "__main__":
    for p in write_corpus(sys.argv[1] if len(sys.argv) > 1 else "."):
        print(p)
