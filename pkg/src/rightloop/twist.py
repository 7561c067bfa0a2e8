"""The B-twist of a loop.

Given a loop ``(U, o)`` with identity ``e``, a subset ``B`` of ``U - {e}`` and a
permutation ``eta`` of ``U`` fixing ``e``, the twisted operation is::

    x o' y = x o y        if y not in B
    x o' y = y o eta(x)   if y in B

Columns outside ``B`` are untouched, and the column of ``y`` in ``B`` becomes
``L_y * eta``, so the result is always a right loop.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import (
    CayleyTable,
    Permutation,
    RightLoopTable,
    is_loop,
    left_translation,
    right_translation,
)


class SpecViolation(ValueError):
    pass


@dataclass(frozen=True)
class TwistSpec:
    B: frozenset[int]
    eta: Permutation

    def __post_init__(self):
        object.__setattr__(self, "B", frozenset(self.B))

    def check(self, U: RightLoopTable) -> None:
        if len(self.eta) != U.order:
            raise SpecViolation(f"eta has degree {len(self.eta)}, loop has order {U.order}")
        if U.identity in self.B:
            raise SpecViolation(f"identity {U.names[U.identity]} may not lie in B")
        bad = [b for b in self.B if not 0 <= b < U.order]
        if bad:
            raise SpecViolation(f"B contains out-of-range indices {sorted(bad)}")
        if self.eta(U.identity) != U.identity:
            raise SpecViolation("eta must fix the identity")


def twist(U: RightLoopTable, spec: TwistSpec) -> RightLoopTable:
    if not is_loop(U):
        raise SpecViolation("twist needs a loop: some row of the input is not a bijection")
    spec.check(U)
    T = U.table.entries
    eta = spec.eta.images
    B = spec.B
    n = U.order
    rows = tuple(
        tuple(T[c][eta[r]] if c in B else T[r][c] for c in range(n))
        for r in range(n)
    )
    return RightLoopTable(CayleyTable(U.names, rows), U.identity)


@dataclass
class TranslationReport:
    failures: list[int] = field(default_factory=list)
    checked: int = 0

    @property
    def ok(self) -> bool:
        return not self.failures


def translation_identities(U: RightLoopTable, spec: TwistSpec, twisted: RightLoopTable) -> TranslationReport:
    """Compare every column of ``twisted`` with ``R_y`` (y not in B) or ``L_y * eta`` (y in B)."""
    report = TranslationReport()
    for y in U.elements():
        got = right_translation(twisted, y)
        if y in spec.B:
            want = left_translation(U, y) * spec.eta
        else:
            want = right_translation(U, y)
        report.checked += 1
        if got != want:
            report.failures.append(y)
    return report
