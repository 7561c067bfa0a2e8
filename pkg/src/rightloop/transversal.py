"""Finite groups, right cosets and normalized right transversals (NRTs).

An NRT ``S`` of ``H`` in ``G`` picks one element from each right coset ``Hx``
and contains the identity. It carries the induced operation
``{x o y} = Hxy & S``, and every product decomposes as::

    x . y = f(x, y) . (x o y)          f(x, y) in H
    x . h = sigma(x, h) . theta(x, h)  sigma in H, theta in S
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .core import CayleyTable, RightLoopTable, TableStructureError, validate


class NotAGroup(ValueError):
    pass


class InvalidTransversal(ValueError):
    pass


@dataclass(frozen=True)
class FiniteGroup:
    table: CayleyTable
    identity: int = 0

    def __post_init__(self):
        report = validate(self.table, self.identity, "group")
        if not report.valid:
            raise NotAGroup("; ".join(v.describe() for v in report.violations[:5]))
        T = self.table.entries
        inv = tuple(next(y for y in range(self.order) if T[y][x] == self.identity) for x in range(self.order))
        object.__setattr__(self, "inverses", inv)

    @property
    def order(self) -> int:
        return self.table.order

    @property
    def names(self) -> tuple[str, ...]:
        return self.table.names

    def mul(self, x: int, y: int) -> int:
        return self.table.entries[x][y]

    def inv(self, x: int) -> int:
        return self.inverses[x]


@dataclass(frozen=True)
class Subgroup:
    parent: FiniteGroup
    members: tuple[int, ...]

    def __post_init__(self):
        members = tuple(sorted(set(self.members)))
        object.__setattr__(self, "members", members)
        G = self.parent
        ms = set(members)
        if G.identity not in ms:
            raise ValueError("subgroup must contain the identity")
        for a in members:
            if G.inv(a) not in ms or any(G.mul(a, b) not in ms for b in members):
                raise ValueError(f"{G.names[a]} breaks closure")

    @property
    def order(self) -> int:
        return len(self.members)

    def __contains__(self, x: int) -> bool:
        return x in self.members


def subgroup_closure(G: FiniteGroup, generators: Iterable[int] = ()) -> Subgroup:
    found = {G.identity}
    frontier = [G.identity]
    gens = sorted(set(generators))
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = G.mul(x, g)
                if y not in found:
                    found.add(y)
                    nxt.append(y)
        frontier = nxt
    # finite group: closure under products already contains inverses
    return Subgroup(G, tuple(found))


def right_cosets(G: FiniteGroup, H: Subgroup) -> list[tuple[int, ...]]:
    """Partition ``G`` into cosets ``Hx``, each sorted by index.

    The coset ``H`` itself comes first, the rest are ordered by their
    minimal element.
    """
    seen: set[int] = set()
    cosets = []
    for x in range(G.order):
        if x in seen:
            continue
        coset = tuple(sorted({G.mul(h, x) for h in H.members}))
        seen.update(coset)
        cosets.append(coset)
    cosets.sort(key=lambda c: (G.identity not in c, c[0]))
    return cosets


@dataclass(frozen=True)
class Transversal:
    parent: FiniteGroup
    subgroup: Subgroup
    chosen: tuple[int, ...]  # chosen[k] lies in right_cosets(...)[k]

    def __post_init__(self):
        cosets = right_cosets(self.parent, self.subgroup)
        chosen = tuple(self.chosen)
        object.__setattr__(self, "chosen", chosen)
        if len(chosen) != len(cosets):
            raise InvalidTransversal(f"need {len(cosets)} representatives, got {len(chosen)}")
        for k, (c, coset) in enumerate(zip(chosen, cosets)):
            if c not in coset:
                raise InvalidTransversal(f"{self.parent.names[c]} is not in coset {k}")
        if chosen[0] != self.parent.identity:
            raise InvalidTransversal("a normalized transversal must contain the identity")
        coset_of = {}
        for k, coset in enumerate(cosets):
            for x in coset:
                coset_of[x] = k
        object.__setattr__(self, "_coset_of", coset_of)

    @classmethod
    def from_elements(cls, G: FiniteGroup, H: Subgroup, elements: Iterable[int]) -> "Transversal":
        cosets = right_cosets(G, H)
        elements = list(elements)
        chosen = []
        for k, coset in enumerate(cosets):
            hits = [x for x in elements if x in coset]
            if len(hits) != 1:
                raise InvalidTransversal(
                    f"coset {k} ({' '.join(G.names[x] for x in coset)}) has {len(hits)} chosen elements")
            chosen.append(hits[0])
        if len(elements) != len(cosets):
            raise InvalidTransversal("repeated elements in transversal")
        return cls(G, H, tuple(chosen))

    def rep(self, g: int) -> int:
        """The element of S in the coset ``Hg``."""
        return self.chosen[self._coset_of[g]]

    @property
    def position(self) -> dict[int, int]:
        return {x: k for k, x in enumerate(self.chosen)}


def enumerate_nrts(G: FiniteGroup, H: Subgroup) -> Iterator[Transversal]:
    cosets = right_cosets(G, H)
    for choice in itertools.product(*cosets[1:]):
        yield Transversal(G, H, (G.identity,) + choice)


def count_nrts(G: FiniteGroup, H: Subgroup) -> int:
    return H.order ** (G.order // H.order - 1)


def induced_operation(S: Transversal) -> RightLoopTable:
    """The right loop on ``S``; element ``k`` of the result is ``S.chosen[k]``."""
    G = S.parent
    pos = S.position
    rows = tuple(
        tuple(pos[S.rep(G.mul(x, y))] for y in S.chosen)
        for x in S.chosen
    )
    return RightLoopTable(CayleyTable(tuple(G.names[x] for x in S.chosen), rows), 0)


@dataclass(frozen=True)
class CGroupoidData:
    """The maps f, sigma, theta of an NRT, all as group element indices.

    ``f[(x, y)]``, ``sigma[(x, h)]`` and ``theta[(x, h)]`` are keyed by group
    indices of ``x, y`` in S and ``h`` in H.
    """

    transversal: Transversal
    f: dict
    sigma: dict
    theta: dict

    def verify(self) -> list[str]:
        S = self.transversal
        G, H = S.parent, S.subgroup
        nm = G.names
        bad = []
        for x in S.chosen:
            for y in S.chosen:
                xy = G.mul(x, y)
                if G.mul(self.f[x, y], S.rep(xy)) != xy or self.f[x, y] not in H:
                    bad.append(f"f {nm[x]} {nm[y]}")
            for h in H.members:
                xh = G.mul(x, h)
                s, t = self.sigma[x, h], self.theta[x, h]
                if G.mul(s, t) != xh or s not in H or t not in S.chosen:
                    bad.append(f"sigma/theta {nm[x]} {nm[h]}")
        return bad


def c_groupoid(S: Transversal) -> CGroupoidData:
    G, H = S.parent, S.subgroup
    f, sigma, theta = {}, {}, {}
    for x in S.chosen:
        for y in S.chosen:
            xy = G.mul(x, y)
            f[x, y] = G.mul(xy, G.inv(S.rep(xy)))
        for h in H.members:
            xh = G.mul(x, h)
            t = S.rep(xh)
            theta[x, h] = t
            sigma[x, h] = G.mul(xh, G.inv(t))
    data = CGroupoidData(S, f, sigma, theta)
    bad = data.verify()
    if bad:  # cannot happen for a valid transversal
        raise AssertionError(f"c-groupoid reconstruction failed: {bad[:3]}")
    return data


@dataclass
class ActionReport:
    failures: list[tuple] = field(default_factory=list)
    checked: int = 0

    @property
    def ok(self) -> bool:
        return not self.failures


def theta_action_check(data: CGroupoidData) -> ActionReport:
    """theta(theta(x,h),h') == theta(x, h h') and theta(x, 1) == x, for all x, h, h'."""
    S = data.transversal
    G, H = S.parent, S.subgroup
    th = data.theta
    report = ActionReport()
    for x in S.chosen:
        if th[x, G.identity] != x:
            report.failures.append((x, G.identity))
        for h in H.members:
            for k in H.members:
                report.checked += 1
                if th[th[x, h], k] != th[x, G.mul(h, k)]:
                    report.failures.append((x, h, k))
    return report


def dumps_cgroupoid(data: CGroupoidData) -> str:
    S = data.transversal
    G, H = S.parent, S.subgroup
    nm = G.names
    xs = sorted(S.chosen)
    hs = H.members
    out = ["f:"]
    out += [f"{nm[x]} {nm[y]} -> {nm[data.f[x, y]]}" for x in xs for y in xs]
    out.append("sigma:")
    out += [f"{nm[x]} {nm[h]} -> {nm[data.sigma[x, h]]}" for x in xs for h in hs]
    out.append("theta:")
    out += [f"{nm[x]} {nm[h]} -> {nm[data.theta[x, h]]}" for x in xs for h in hs]
    return "\n".join(out) + "\n"


def parse_cgroupoid(text: str, S: Transversal) -> CGroupoidData:
    """Read back the text produced by :func:`dumps_cgroupoid`."""
    G = S.parent
    maps: dict[str, dict] = {"f": {}, "sigma": {}, "theta": {}}
    current = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.endswith(":") and line[:-1] in maps:
            current = maps[line[:-1]]
            continue
        lhs, sep, rhs = line.partition("->")
        args = lhs.split()
        if current is None or not sep or len(args) != 2:
            raise TableStructureError(f"line {lineno}: malformed c-groupoid entry {line!r}")
        try:
            a, b, v = (G.table.index(t) for t in (*args, rhs.strip()))
        except KeyError as exc:
            raise TableStructureError(f"line {lineno}: {exc.args[0]}") from None
        current[a, b] = v
    return CGroupoidData(S, maps["f"], maps["sigma"], maps["theta"])
