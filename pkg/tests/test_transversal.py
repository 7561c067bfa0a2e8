import itertools

import pytest

from rightloop.core import validate
from rightloop.corpus import corpus, groups
from rightloop.transversal import (
    FiniteGroup,
    InvalidTransversal,
    NotAGroup,
    Subgroup,
    Transversal,
    c_groupoid,
    count_nrts,
    dumps_cgroupoid,
    enumerate_nrts,
    induced_operation,
    parse_cgroupoid,
    right_cosets,
    subgroup_closure,
    theta_action_check,
)


def brute_nrts(G, H):
    """All subsets containing 1 that meet every right coset Hx exactly once."""
    cosets = [frozenset(G.mul(h, x) for h in H.members) for x in range(G.order)]
    k = G.order // H.order
    out = []
    others = [x for x in range(G.order) if x != G.identity]
    for combo in itertools.combinations(others, k - 1):
        S = {G.identity, *combo}
        if all(len(S & c) == 1 for c in cosets):
            out.append(frozenset(S))
    return out


def brute_induced(G, H, S):
    table = {}
    for x in S:
        for y in S:
            coset = {G.mul(h, G.mul(x, y)) for h in H.members}
            (z,) = coset & set(S)
            table[x, y] = z
    return table


def all_subgroups(G):
    subs = set()
    for gens in itertools.chain.from_iterable(itertools.combinations(range(G.order), r) for r in range(3)):
        subs.add(subgroup_closure(G, gens).members)
    return sorted(subs, key=lambda m: (len(m), m))


def test_not_a_group():
    with pytest.raises(NotAGroup):
        FiniteGroup(corpus()["nonassoc5"].table)


def test_closure_examples(s3):
    assert subgroup_closure(s3, ()).members == (s3.identity,)
    t = s3.table.index("p102")
    assert subgroup_closure(s3, [t]).order == 2
    c = s3.table.index("p120")
    assert subgroup_closure(s3, [c]).order == 3
    with pytest.raises(ValueError):
        Subgroup(s3, (0, t, c))


@pytest.mark.parametrize("gens, ncosets", [((), 6), (("p102",), 3), (("p120",), 2), (("p102", "p120"), 1)])
def test_cosets_partition(s3, gens, ncosets):
    H = subgroup_closure(s3, [s3.table.index(g) for g in gens])
    cosets = right_cosets(s3, H)
    assert len(cosets) == ncosets
    assert sorted(x for c in cosets for x in c) == list(range(6))
    assert all(len(c) == H.order for c in cosets)
    assert s3.identity in cosets[0]


@pytest.mark.parametrize("gen, expected", [("p102", 4), ("p120", 3)])
def test_nrt_counts_against_brute_force(s3, gen, expected):
    H = subgroup_closure(s3, [s3.table.index(gen)])
    nrts = list(enumerate_nrts(s3, H))
    assert len(nrts) == expected == count_nrts(s3, H)
    assert {frozenset(S.chosen) for S in nrts} == set(brute_nrts(s3, H))
    # deterministic lexicographic order
    assert [S.chosen for S in nrts] == sorted(S.chosen for S in nrts)


def test_h_equals_g_single_nrt(s3):
    H = subgroup_closure(s3, range(6))
    assert [S.chosen for S in enumerate_nrts(s3, H)] == [(s3.identity,)]


def test_induced_operation_matches_brute_force_all_small_groups():
    for name, t in groups().items():
        G = FiniteGroup(t)
        for members in all_subgroups(G):
            H = Subgroup(G, members)
            nrts = list(enumerate_nrts(G, H))
            assert len(nrts) == count_nrts(G, H) == len(brute_nrts(G, H))
            for S in nrts[:16]:
                L = induced_operation(S)
                assert validate(L.table, 0, "right-loop").valid
                ref = brute_induced(G, H, S.chosen)
                for i, x in enumerate(S.chosen):
                    for j, y in enumerate(S.chosen):
                        assert S.chosen[L.op(i, j)] == ref[x, y]


def test_subgroup_transversal_gives_its_own_group(s3):
    H = subgroup_closure(s3, [s3.table.index("p102")])
    A3 = subgroup_closure(s3, [s3.table.index("p120")])
    S = Transversal.from_elements(s3, H, A3.members)
    L = induced_operation(S)
    for i, x in enumerate(S.chosen):
        for j, y in enumerate(S.chosen):
            assert S.chosen[L.op(i, j)] == s3.mul(x, y)
    data = c_groupoid(S)
    assert set(data.f.values()) == {s3.identity}


def test_cgroupoid_normalization_and_nontrivial_f(s3):
    H = subgroup_closure(s3, [s3.table.index("p102")])
    A3 = set(subgroup_closure(s3, [s3.table.index("p120")]).members)
    nontrivial = 0
    for S in enumerate_nrts(s3, H):
        data = c_groupoid(S)
        assert theta_action_check(data).ok
        for y in S.chosen:
            assert data.f[s3.identity, y] == s3.identity
        for x in S.chosen:
            assert data.theta[x, s3.identity] == x
        if set(S.chosen) != A3:
            assert any(v != s3.identity for v in data.f.values())
            nontrivial += 1
    assert nontrivial == 3


def test_invalid_transversals(s3):
    H = subgroup_closure(s3, [s3.table.index("p102")])
    cosets = right_cosets(s3, H)
    with pytest.raises(InvalidTransversal):
        Transversal(s3, H, (cosets[0][1], cosets[1][0], cosets[2][0]))
    with pytest.raises(InvalidTransversal):
        Transversal.from_elements(s3, H, [0, *cosets[1]])


def test_cgroupoid_text_round_trip(s3):
    H = subgroup_closure(s3, [s3.table.index("p102")])
    S = list(enumerate_nrts(s3, H))[2]
    data = c_groupoid(S)
    text = dumps_cgroupoid(data)
    assert text.splitlines()[0] == "f:"
    assert "sigma:" in text and "theta:" in text
    back = parse_cgroupoid(text, S)
    assert back.f == data.f and back.sigma == data.sigma and back.theta == data.theta
    assert dumps_cgroupoid(back) == text


def test_theta_action_check_catches_broken_data(s3):
    H = subgroup_closure(s3, [s3.table.index("p102")])
    S = list(enumerate_nrts(s3, H))[1]
    data = c_groupoid(S)
    x = S.chosen[1]
    h = H.members[1]
    data.theta[x, h] = x if data.theta[x, h] != x else S.chosen[2]
    assert not theta_action_check(data).ok
    assert data.verify()
