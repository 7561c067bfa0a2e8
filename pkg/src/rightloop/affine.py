"""The right loops Z^B and the transversals T_B of {1, x} in D_inf.

``Z^B`` is the twist of ``(Z, +)`` by ``eta(i) = -i`` and a finite set ``B`` of
nonzero integers::

    i o' k = i + k   if k not in B
    i o' k = k - i   if k in B

Right translations are affine maps ``i -> s*i + c`` with ``s = +-1``, so
everything here is exact integer arithmetic; ``B`` is never materialized
beyond its finite set of members.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Iterable


@dataclass(frozen=True, order=True)
class AffineMap:
    """``x -> sign * x + offset``; ``f * g`` applies ``g`` first."""

    sign: int
    offset: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")

    @classmethod
    def identity(cls) -> "AffineMap":
        return cls(1, 0)

    def __call__(self, x: int) -> int:
        return self.sign * x + self.offset

    def __mul__(self, other: "AffineMap") -> "AffineMap":
        return AffineMap(self.sign * other.sign, self.sign * other.offset + self.offset)

    def inverse(self) -> "AffineMap":
        return AffineMap(self.sign, -self.sign * self.offset)

    @property
    def is_identity(self) -> bool:
        return self.sign == 1 and self.offset == 0

    def __str__(self):
        if self.sign == 1:
            return f"x{self.offset:+d}" if self.offset else "x"
        return f"{self.offset}-x"


@dataclass(frozen=True)
class SupportClass:
    """Moved-point set of an affine map: ``empty``, ``all-integers`` or ``all-but-one``."""

    tag: str
    point: int | None = None

    @property
    def finite(self) -> bool:
        return self.tag == "empty"


def affine_support(m: AffineMap) -> SupportClass:
    # fixed points solve s*x + c = x
    if m.sign == 1:
        return SupportClass("empty") if m.offset == 0 else SupportClass("all-integers")
    # c - x = x  <=>  2x = c
    if m.offset % 2 == 0:
        return SupportClass("all-but-one", m.offset // 2)
    return SupportClass("all-integers")


@dataclass(frozen=True)
class ZBLoop:
    B: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        B = frozenset(int(b) for b in self.B)
        if 0 in B:
            raise ValueError("0 may not lie in B")
        object.__setattr__(self, "B", B)


def _zb(L) -> ZBLoop:
    return L if isinstance(L, ZBLoop) else ZBLoop(frozenset(L))


def zb_op(L: ZBLoop | Iterable[int], i: int, k: int) -> int:
    L = _zb(L)
    return k - i if k in L.B else i + k


def zb_right_divide(L: ZBLoop | Iterable[int], z: int, k: int) -> int:
    """The unique ``q`` with ``q o' k == z``."""
    L = _zb(L)
    return k - z if k in L.B else z - k


def zb_right_translation(L: ZBLoop | Iterable[int], k: int) -> AffineMap:
    L = _zb(L)
    return AffineMap(-1, k) if k in L.B else AffineMap(1, k)


@dataclass(frozen=True, slots=True)
class DinfElement:
    """``x**flag * y**power`` in D_inf = <x, y | x^2 = 1, xyx = y^-1>."""

    flag: int
    power: int

    def __post_init__(self):
        if self.flag not in (0, 1):
            raise ValueError("flag must be 0 or 1")

    def __mul__(self, other: DinfElement) -> DinfElement:
        return dinf_product(self, other)


def dinf_product(a: DinfElement, b: DinfElement) -> DinfElement:
    # x^j1 y^i1 x^j2 y^i2 = x^(j1+j2) (x^-j2 y^i1 x^j2) y^i2, and x y^i x = y^-i
    sign = -1 if b.flag else 1
    return DinfElement(a.flag ^ b.flag, sign * a.power + b.power)


def transversal_element(B: Iterable[int], i: int) -> DinfElement:
    """``t_i = eps(y^i) y^i`` with ``eps(y^i) = x`` exactly when ``i`` is in ``B``."""
    return DinfElement(1 if i in B else 0, i)


_X = DinfElement(1, 0)


def _in_transversal(B: frozenset[int], h: DinfElement) -> bool:
    return h.flag == (h.power in B)


def _coset_rep(B: frozenset[int], g: DinfElement) -> DinfElement:
    """The unique element of T_B in the coset ``H g = {g, x g}``."""
    if _in_transversal(B, g):
        return g
    h = _X * g
    assert _in_transversal(B, h)
    return h


def transversal_op(B: Iterable[int], i: int, k: int) -> int:
    """Induced operation on T_B: the index of the element of T_B in ``H t_i t_k``."""
    B = _zb(B).B
    return _coset_rep(B, transversal_element(B, i) * transversal_element(B, k)).power


@dataclass
class IsomorphismReport:
    B: frozenset[int]
    window: int
    mismatches: list[tuple[int, int, int, int]] = field(default_factory=list)
    checked: int = 0

    @property
    def ok(self) -> bool:
        return not self.mismatches


def isomorphism_check(B: Iterable[int], window: int) -> IsomorphismReport:
    """Compare the operation of T_B (inside D_inf) with Z^B on ``[-window, window]^2``."""
    if window <= 0:
        raise ValueError("window must be positive")
    L = _zb(B)
    outside = sorted(b for b in L.B if abs(b) > window)
    if outside:
        warnings.warn(f"elements of B outside the window: {outside}", stacklevel=2)
    report = IsomorphismReport(L.B, window)
    rng = range(-window, window + 1)
    t = {i: transversal_element(L.B, i) for i in rng}
    for i in rng:
        ti = t[i]
        for k in rng:
            a = _coset_rep(L.B, ti * t[k]).power
            b = zb_op(L, i, k)
            if a != b:
                report.mismatches.append((i, k, a, b))
        report.checked += len(rng)
    return report


def window_elements(window: int) -> list[int]:
    """``0, 1, -1, 2, -2, ...`` up to ``+-window``: identity first."""
    out = [0]
    for k in range(1, window + 1):
        out += [k, -k]
    return out
