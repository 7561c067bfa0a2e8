import random

import pytest
from hypothesis import given, settings, strategies as st

from rightloop import looptab
from rightloop.core import Permutation, RightLoopTable, left_translation, validate
from rightloop.corpus import cyclic
from rightloop.twist import SpecViolation, TwistSpec, translation_identities, twist


def eq1(U, B, eta, r, c):
    # direct evaluation of the twisted operation, independent of twist()
    return U.op(c, eta(r)) if c in B else U.op(r, c)


def test_empty_b_is_identity(all_loops):
    for L in all_loops.values():
        for seed in range(3):
            rest = list(range(1, L.order))
            random.Random(seed).shuffle(rest)
            if not validate(L.table, 0, "loop").valid:
                continue
            out = twist(L, TwistSpec(frozenset(), Permutation((0, *rest))))
            assert looptab.dumps(out.table) == looptab.dumps(L.table)


def test_z6_column_two(z6, z6_twisted):
    T = z6_twisted.table.entries
    for r in range(6):
        assert T[r][2] == (2 - r) % 6
        for c in range(6):
            if c != 2:
                assert T[r][c] == (r + c) % 6


def test_z6_translation_identities(z6, neg6, z6_twisted):
    spec = TwistSpec({2}, neg6)
    report = translation_identities(z6, spec, z6_twisted)
    assert report.ok and report.checked == 6
    col = left_translation(z6, 2) * neg6
    assert col.images == tuple((2 - r) % 6 for r in range(6))


def test_two_twisted_columns_with_swap(z6):
    eta = Permutation((0, 3, 2, 1, 4, 5))
    spec = TwistSpec({2, 5}, eta)
    out = twist(z6, spec)
    assert translation_identities(z6, spec, out).ok
    for r in range(6):
        for c in range(6):
            assert out.op(r, c) == eq1(z6, spec.B, eta, r, c)


def test_spec_violations(z6, neg6):
    with pytest.raises(SpecViolation):
        twist(z6, TwistSpec({0}, neg6))
    with pytest.raises(SpecViolation):
        twist(z6, TwistSpec({2}, Permutation((1, 0, 2, 3, 4, 5))))


def test_requires_loop(z6_twisted, neg6):
    with pytest.raises(SpecViolation, match="loop"):
        twist(z6_twisted, TwistSpec({3}, neg6))


def test_identity_eta_commutative_no_change():
    U = RightLoopTable(cyclic(7))
    out = twist(U, TwistSpec({1, 3, 6}, Permutation.identity(7)))
    assert out == U


specs = st.integers(2, 9).flatmap(lambda n: st.tuples(
    st.just(n),
    st.sets(st.integers(1, n - 1)),
    st.permutations(list(range(1, n))),
))


@settings(max_examples=60, deadline=None)
@given(specs)
def test_twist_matches_pointwise_definition(spec):
    n, B, rest = spec
    U = RightLoopTable(cyclic(n))
    eta = Permutation((0, *rest))
    out = twist(U, TwistSpec(B, eta))
    assert validate(out.table, 0, "right-loop").valid
    for r in range(n):
        for c in range(n):
            assert out.op(r, c) == eq1(U, B, eta, r, c)
        for c in set(range(n)) - set(B):
            assert out.table.column(c) == U.table.column(c)
