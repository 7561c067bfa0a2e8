import itertools

import pytest
from hypothesis import given, strategies as st

from rightloop.core import (
    CayleyTable,
    NonBijective,
    NotARightLoop,
    NotLeftSolvable,
    Permutation,
    RightLoopTable,
    TableStructureError,
    left_divide,
    left_translation,
    relabel,
    right_divide,
    right_translation,
    validate,
)
from rightloop.corpus import cyclic


def brute_assoc(T):
    n = len(T)
    return all(T[T[a][b]][c] == T[a][T[b][c]] for a, b, c in itertools.product(range(n), repeat=3))


def test_z3_is_group():
    assert validate(cyclic(3), 0, "group").valid


def test_repeated_column_entry_names_column_and_rows():
    t = CayleyTable("e a b".split(), [(0, 1, 2), (1, 2, 0), (2, 2, 1)])
    report = validate(t, 0, "right-loop")
    assert not report.valid
    col = [v for v in report.violations if v.axiom == "column-bijective"]
    assert [v.witness for v in col] == [(1, 1, 2)]


def test_twisted_z6_right_loop_but_not_loop(z6_twisted):
    T = z6_twisted.table.entries
    # oracle: brute-force scans of the 6x6 table
    cols_ok = all(len({T[r][c] for r in range(6)}) == 6 for c in range(6))
    rows_ok = all(len(set(T[r])) == 6 for r in range(6))
    assert cols_ok and not rows_ok
    assert validate(z6_twisted.table, 0, "right-loop").valid
    loop_report = validate(z6_twisted.table, 0, "loop")
    bad_rows = sorted({v.witness[0] for v in loop_report.violations})
    assert bad_rows == [r for r in range(6) if len(set(T[r])) < 6]


def test_structural_errors_are_distinct():
    with pytest.raises(TableStructureError):
        CayleyTable("e a".split(), [(0, 1)])
    with pytest.raises(TableStructureError):
        CayleyTable("e a".split(), [(0, 1), (1, 2)])
    with pytest.raises(TableStructureError):
        CayleyTable("e e".split(), [(0, 1), (1, 0)])
    with pytest.raises(TableStructureError):
        CayleyTable("e a(".split(), [(0, 1), (1, 0)])


def test_group_kind_reports_associativity():
    from rightloop.corpus import NONASSOC5

    t = CayleyTable([str(i) for i in range(5)], NONASSOC5)
    report = validate(t, 0, "group")
    assoc = {v.witness for v in report.violations if v.axiom == "associativity"}
    expected = {
        (a, b, c) for a, b, c in itertools.product(range(5), repeat=3)
        if NONASSOC5[NONASSOC5[a][b]][c] != NONASSOC5[a][NONASSOC5[b][c]]
    }
    assert assoc == expected and expected


def test_not_a_right_loop_raises():
    t = CayleyTable("e a".split(), [(0, 1), (1, 1)])
    with pytest.raises(NotARightLoop):
        RightLoopTable(t)


def test_right_divide_examples(z6, z6_twisted):
    assert right_divide(z6, 5, 2) == 3
    assert right_divide(z6_twisted, 5, 2) == 3  # 2 - 3 = -1 = 5 mod 6
    for x in range(6):
        assert right_divide(z6_twisted, x, x) == 0


def test_division_identities_exhaustive(all_loops):
    for L in all_loops.values():
        for x in L.elements():
            for y in L.elements():
                assert L.op(right_divide(L, y, x), x) == y
                assert right_divide(L, L.op(y, x), x) == y


def test_left_divide(z6, z6_twisted):
    assert left_divide(z6, 2, 5) == 3
    with pytest.raises(NotLeftSolvable):
        left_divide(z6_twisted, 1, 0)
    assert left_divide(z6_twisted, 3, 0) == 3  # row 3 of the twist is bijective


def test_translations(z6, z6_twisted):
    assert right_translation(z6, 0).is_identity
    assert right_translation(z6, 2).images == tuple((r + 2) % 6 for r in range(6))
    R2 = right_translation(z6_twisted, 2)
    assert R2.images == tuple((2 - r) % 6 for r in range(6))
    assert (R2 * R2).is_identity
    assert [i for i in range(6) if R2(i) == i] == [1, 4]
    lt = left_translation(z6_twisted, 1)
    assert isinstance(lt, NonBijective)
    assert lt.images[lt.collision[0]] == lt.images[lt.collision[1]]


def test_relabel_preserves_operation():
    t = cyclic(4)
    r = relabel(t, [2, 0, 3, 1])
    for a in range(4):
        for b in range(4):
            assert r.names[r(a, b)] == t.names[t([2, 0, 3, 1][a], [2, 0, 3, 1][b])]


perms = st.integers(1, 8).flatmap(lambda n: st.permutations(list(range(n))))


@given(perms)
def test_permutation_inverse(p):
    p = Permutation(p)
    assert (p * p.inverse()).is_identity and (p.inverse() * p).is_identity


@given(st.integers(1, 7).flatmap(lambda n: st.tuples(*[st.permutations(list(range(n)))] * 3)))
def test_permutation_composition(ps):
    f, g, h = (Permutation(p) for p in ps)
    assert (f * g) * h == f * (g * h)
    for i in range(len(f)):
        assert (f * g)(i) == f(g(i))


def test_group_validation_matches_brute_force(all_loops):
    for L in all_loops.values():
        T = L.table.entries
        assert validate(L.table, 0, "group").valid == brute_assoc(T)
