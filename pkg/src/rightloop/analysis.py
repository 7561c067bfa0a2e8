"""Loop properties, the inverse-property identity for left translations, the
alpha word built from a twisted commutative I.P. loop, supports, right
multiplication groups, and word search for finite-support elements.

Composition convention everywhere: in a word ``w1 w2 ... wk`` the rightmost
letter is applied first, so ``alpha = R'_b (R'_{1/a})^-1 R'_b (R'_{1/a})^-1``
sends ``t`` to ``R'_b(R'_{1/a}^-1(R'_b(R'_{1/a}^-1(t))))``.  With
``R'_y = L_y eta`` for ``y`` in ``B`` the etas cancel pairwise, which is
what :func:`alpha_identity_check` verifies pointwise.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Sequence, Union

from .affine import AffineMap, affine_support, zb_right_translation
from .core import (
    NonBijective,
    Permutation,
    RightLoopTable,
    _first_collision,
    left_translation,
    right_divide,
    right_translation,
)
from .twist import TwistSpec, twist

PROPERTIES = ("loop", "commutative", "inverse-property")

Map = Union[Permutation, AffineMap]


class PreconditionFailed(ValueError):
    pass


@dataclass
class PropertyReport:
    property: str
    holds: bool
    witnesses: list[tuple] = field(default_factory=list)
    inverse_map: tuple[int, ...] | None = None


def check_property(L: RightLoopTable, prop: str, max_witnesses: int | None = None) -> PropertyReport:
    T = L.table.entries
    n = L.order
    witnesses: list[tuple] = []
    if prop == "loop":
        for x in range(n):
            hit = _first_collision(T[x])
            if hit:
                witnesses.append((x, *hit))
    elif prop == "commutative":
        witnesses = [(x, y) for x in range(n) for y in range(x + 1, n) if T[x][y] != T[y][x]]
    elif prop == "inverse-property":
        inv = []
        for x in range(n):
            # x^-1 o (x o y) = y and (y o x) o x^-1 = y for all y
            cands = [
                xi for xi in range(n)
                if all(T[xi][T[x][y]] == y and T[T[y][x]][xi] == y for y in range(n))
            ]
            if cands:
                inv.append(cands[0])
            else:
                witnesses.append((x,))
        if not witnesses:
            return PropertyReport(prop, True, [], tuple(inv))
    else:
        raise ValueError(f"unknown property {prop!r}; expected one of {PROPERTIES}")
    if max_witnesses is not None:
        witnesses = witnesses[:max_witnesses]
    return PropertyReport(prop, not witnesses, witnesses)


def left_inverse_map(L: RightLoopTable) -> tuple[int, ...]:
    """``a -> 1/a``, the element ``a'`` with ``a' o a = 1``."""
    return tuple(right_divide(L, L.identity, a) for a in L.elements())


@dataclass
class Lemma1Report:
    failures: list[int] = field(default_factory=list)
    double_inverse_failures: list[int] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures and not self.double_inverse_failures


def lemma1_check(L: RightLoopTable) -> Lemma1Report:
    """Check ``L_{1/a}^-1 == L_a`` and ``(a')' == a`` for every ``a``."""
    if not check_property(L, "inverse-property").holds:
        raise PreconditionFailed("lemma1_check needs an I.P. loop")
    prime = left_inverse_map(L)
    report = Lemma1Report()
    for a in L.elements():
        if prime[prime[a]] != a:
            report.double_inverse_failures.append(a)
        La_prime = left_translation(L, prime[a])
        La = left_translation(L, a)
        if isinstance(La_prime, NonBijective) or La_prime.inverse() != La:
            report.failures.append(a)
    return report


@dataclass(frozen=True)
class TranslationWord:
    """Letters ``(generator, exponent)``; the last letter is applied first."""

    letters: tuple[tuple[str, int], ...]
    realized: Map

    def __str__(self):
        return " ".join(f"R[{g}]" if e == 1 else f"R[{g}]^-1" for g, e in self.letters) or "1"


def realize(letters: Sequence[tuple[str, int]], maps: dict[str, Map], identity: Map) -> Map:
    out = identity
    for g, e in letters:
        m = maps[g] if e == 1 else maps[g].inverse()
        out = out * m
    return out


def _require_commutative_ip(base: RightLoopTable) -> None:
    for prop in ("loop", "commutative", "inverse-property"):
        if not check_property(base, prop).holds:
            raise PreconditionFailed(f"base must be a commutative I.P. loop: {prop} fails")


def alpha_twist_spec(base: RightLoopTable, a: int, b: int, eta: Permutation | None = None) -> TwistSpec:
    if a == base.identity or b == base.identity:
        raise PreconditionFailed("a and b must differ from the identity")
    if eta is None:
        eta = Permutation.identity(base.order)
    if eta(base.identity) != base.identity:
        raise PreconditionFailed("eta must fix the identity")
    return TwistSpec(frozenset({right_divide(base, base.identity, a), b}), eta)


def build_alpha(base: RightLoopTable, a: int, b: int, eta: Permutation | None = None
                ) -> tuple[RightLoopTable, TranslationWord]:
    _require_commutative_ip(base)
    spec = alpha_twist_spec(base, a, b, eta)
    twisted = twist(base, spec)
    inv_a = right_divide(base, base.identity, a)
    nb, na = base.names[b], base.names[inv_a]
    maps = {nb: right_translation(twisted, b), na: right_translation(twisted, inv_a)}
    letters = ((nb, 1), (na, -1), (nb, 1), (na, -1))
    alpha = realize(letters, maps, Permutation.identity(base.order))
    return twisted, TranslationWord(letters, alpha)


@dataclass
class AlphaReport:
    alpha: Permutation
    expected: Permutation
    mismatches: list[int] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def alpha_identity_check(base: RightLoopTable, a: int, b: int, eta: Permutation | None = None) -> AlphaReport:
    """Compare the realized alpha with ``L_b L_a L_b L_a`` of the untwisted loop."""
    _, word = build_alpha(base, a, b, eta)
    La, Lb = left_translation(base, a), left_translation(base, b)
    expected = Lb * La * Lb * La
    alpha = word.realized
    bad = [t for t in base.elements() if alpha(t) != expected(t)]
    return AlphaReport(alpha, expected, bad)


@dataclass(frozen=True)
class SupportReport:
    moved_count: float  # int, or math.inf
    moved_points: tuple[int, ...] | None
    is_identity: bool
    detail: str = ""

    def __str__(self):
        return "inf" if math.isinf(self.moved_count) else str(self.moved_count)


def support(p: Map, display_cap: int = 64) -> SupportReport:
    if isinstance(p, AffineMap):
        cls = affine_support(p)
        if cls.finite:
            return SupportReport(0, (), True, cls.tag)
        detail = cls.tag if cls.point is None else f"{cls.tag}({cls.point})"
        return SupportReport(math.inf, None, False, detail)
    moved = p.moved_points()
    shown = tuple(moved) if len(moved) <= display_cap else None
    return SupportReport(len(moved), shown, not moved)


@dataclass
class MultGroupReport:
    order: int
    generator_count: int
    closed: bool


def right_mult_group(L: RightLoopTable, cap: int = 100_000) -> MultGroupReport:
    """Order of the group generated by all right translations (BFS closure)."""
    gens = sorted({right_translation(L, a) for a in L.elements()}, key=lambda p: p.images)
    gens = [g for g in gens if not g.is_identity]
    gens += [g.inverse() for g in gens]
    start = Permutation.identity(L.order)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = g * p
                if q not in seen:
                    seen.add(q)
                    if len(seen) > cap:
                        return MultGroupReport(len(seen), len(gens) // 2, False)
                    nxt.append(q)
        frontier = nxt
    return MultGroupReport(len(seen), len(gens) // 2, True)


@dataclass(frozen=True)
class HomogeneityMap:
    images: tuple[int, ...]
    bijective: bool


def homogeneity_map(L: RightLoopTable, x: int, y: int) -> HomogeneityMap:
    """``t -> (y/x) o t``; sends ``x`` to ``y``. Bijective iff the row of ``y/x`` is."""
    q = right_divide(L, y, x)
    row = L.table.entries[q]
    return HomogeneityMap(row, _first_collision(row) is None)


@dataclass(frozen=True)
class Witness:
    word: TranslationWord
    support: SupportReport

    def line(self, names: Sequence[str] | None = None) -> str:
        letters = " ".join(g if e == 1 else f"{g}^-1" for g, e in self.word.letters)
        moved = self.support.moved_points or ()
        shown = " ".join(names[i] for i in moved) if names else " ".join(map(str, moved))
        return f"word={letters} support={self.support} moved=[{shown}]"


def word_closure(generators: Sequence[tuple[str, Map]], max_len: int) -> dict[Map, tuple]:
    """Every map reachable by a word of length at most ``max_len``, with its first spelling.

    Breadth-first over the generators and their inverses, deduplicated by the
    realized map, so each map keeps a shortest word.  The identity maps to ``()``.
    """
    if not generators:
        return {}
    first = generators[0][1]
    identity = AffineMap.identity() if isinstance(first, AffineMap) else Permutation.identity(len(first))
    letters = [(name, 1) for name, _ in generators] + [(name, -1) for name, _ in generators]
    maps = dict(generators)
    step = {(g, e): (maps[g] if e == 1 else maps[g].inverse()) for g, e in letters}

    seen = {identity: ()}
    frontier = deque([identity])
    while frontier:
        m = frontier.popleft()
        word = seen[m]
        if len(word) >= max_len:
            continue
        for letter in letters:
            # appended letters are applied first
            q = m * step[letter]
            if q not in seen:
                seen[q] = word + (letter,)
                frontier.append(q)
    return seen


def witness_search(generators: Sequence[tuple[str, Map]], max_len: int, max_support: float
                   ) -> list[Witness]:
    """Nonidentity elements of support at most ``max_support`` among words of length <= ``max_len``.

    Sorted by (support, word length, spelling).
    """
    found = []
    for m, word in word_closure(generators, max_len).items():
        if not word:
            continue
        rep = support(m)
        if rep.moved_count <= max_support:
            found.append(Witness(TranslationWord(word, m), rep))
    found.sort(key=lambda w: (w.support.moved_count, len(w.word.letters), w.word.letters))
    return found


def loop_right_generators(L: RightLoopTable) -> list[tuple[str, Permutation]]:
    return [(L.names[a], right_translation(L, a)) for a in L.elements()]


def zb_right_generators(B, radius: int = 5) -> list[tuple[str, AffineMap]]:
    """Affine right translations of Z^B for k in ``{0, +-1, ..., +-radius}`` and B."""
    ks = sorted(set(range(-radius, radius + 1)) | set(B), key=lambda k: (abs(k), k < 0))
    return [(str(k), zb_right_translation(B, k)) for k in ks]
