import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from finchar import (
    BOOL,
    CanonicalList,
    CapExceeded,
    Complement,
    DownwardClosureOf,
    Explicit,
    RawList,
    SetBased,
    Subset,
    SubsetPredicate,
    Universe,
    UniverseMismatch,
    canonicalize,
    enumerate_subsets,
    hat,
    list_subseteq,
    lp_member,
    max_universe,
    star,
    universe_cap,
)
from finchar.model_core import canonical_lists

import oracles
from conftest import all_explicit, as_tuples

U4 = Universe.atomic("N", 4)


def raw(*items, universe=BOOL):
    return RawList(universe, items)


# ------------------------------------------------------------------ values


def test_star_examples():
    assert star(raw(1, 0), raw(1)) == raw(1, 0, 1)
    assert star(raw(), raw(0, 1)) == raw(0, 1)


def test_list_subseteq_examples():
    assert list_subseteq(raw(1, 1), raw(1, 0))
    assert not list_subseteq(raw(0), raw(1))
    assert all(list_subseteq(raw(), raw(*u)) for u in [(), (0,), (1, 0)])


def test_hat_examples():
    assert hat(raw(1, 0, 1)) == Subset.of(BOOL, [0, 1])
    assert hat(raw()) == Subset(BOOL)


def test_canonicalize_examples():
    assert canonicalize(raw(1, 0, 1, 1)) == CanonicalList(BOOL, (0, 1))
    assert canonicalize(raw()) == CanonicalList(BOOL)
    assert canonicalize(RawList(Universe.atomic("C", 3), (2, 2, 0))).items == (0, 2)


def test_lp_member_is_set_semantic():
    T = Explicit(BOOL, [(), (1,), (1, 0)])
    assert lp_member(T, raw(1, 1))
    assert not lp_member(T, raw(0))
    assert raw(0, 1, 0) in T


def test_enumerate_subsets_order():
    assert [s.members for s in enumerate_subsets(BOOL)] == [(), (0,), (1,), (0, 1)]
    assert enumerate_subsets(Universe.atomic("Z", 0)) == [Subset(Universe.atomic("Z", 0))]
    subs = enumerate_subsets(Universe.atomic("C", 3))
    assert len(subs) == 8 == len(set(subs))


def test_canonical_lists_lexicographic():
    assert [u.items for u in canonical_lists(Universe.atomic("C", 3))] == sorted(
        tuple(sorted(a)) for a in oracles.powerset(range(3))
    )


def test_members_lexicographic():
    T = Explicit(BOOL, [(1,), (0, 1), (), (0,)])
    assert [u.items for u in T.members()] == [(), (0,), (0, 1), (1,)]


def test_product_rendering_and_pairing():
    P = Universe.product(BOOL, Universe.atomic("C", 3))
    assert P.size == 6
    assert P.pair(1, 2) == 5 and P.unpair(5) == (1, 2)
    assert P.render(P.pair(1, 0)) == "(1,0)"
    B = Universe.bottom(BOOL)
    assert B.size == 3 and B.bottom_index == 2


# ------------------------------------------------------------------ errors


def test_universe_mismatch():
    with pytest.raises(UniverseMismatch):
        star(raw(), RawList(U4, ()))


def test_index_out_of_range():
    with pytest.raises(IndexError):
        RawList(BOOL, (2,))
    with pytest.raises(IndexError):
        Subset(BOOL, 0b100)


def test_canonical_list_must_be_sorted():
    with pytest.raises(ValueError):
        CanonicalList(BOOL, (1, 0))


def test_cap_is_enforced_and_overridable(monkeypatch):
    big = Universe.atomic("Big", 17)
    with pytest.raises(CapExceeded):
        enumerate_subsets(big)
    with universe_cap(2):
        assert max_universe() == 2
        with pytest.raises(CapExceeded):
            enumerate_subsets(Universe.atomic("C", 3))
    monkeypatch.setenv("FINCHAR_MAX_UNIVERSE", "1")
    assert max_universe() == 1
    with pytest.raises(CapExceeded):
        SetBased(BOOL, 0)


# ------------------------------------------------------------- invariants


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_canonicalization_invariants_exhaustive(n):
    U = Universe.atomic("A", n)
    for u in oracles.raw_lists(range(n), 2 * n):
        r = RawList(U, u)
        c = canonicalize(r)
        assert canonicalize(c) == c
        assert hat(c) == hat(r)
    for T in itertools.islice(all_explicit(U), 0, None, 7):
        for u in oracles.raw_lists(range(n), 2 * n):
            r = RawList(U, u)
            assert lp_member(T, r) == lp_member(T, canonicalize(r)) == oracles.member(as_tuples(T), u)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_downward_closure_depends_only_on_hat(n):
    U = Universe.atomic("A", n)
    for stored in itertools.combinations(list(oracles.raw_lists(range(n), n))[:12], 2):
        D = DownwardClosureOf(U, frozenset(RawList(U, s) for s in stored))
        expected = {a for a in oracles.powerset(range(n)) if any(a <= set(s) for s in stored)}
        for u in oracles.raw_lists(range(n), n + 1):
            assert lp_member(D, RawList(U, u)) == (frozenset(u) in expected)


def test_complement_flips_membership():
    T = Explicit(BOOL, [(), (1,)])
    C = Complement(T)
    assert C.table == (~T.table) & 0b1111


def test_subset_predicate_roundtrip():
    P = SubsetPredicate.from_subsets(BOOL, [[], [1]])
    assert [s.members for s in P.subsets()] == [(), (1,)]
    assert P.holds(Subset.of(BOOL, [1])) and not P.holds(Subset.of(BOOL, [0]))
    assert P.complement().complement() == P


lists4 = st.lists(st.integers(0, 3), max_size=6).map(lambda xs: RawList(U4, tuple(xs)))


@given(lists4, lists4, lists4)
def test_star_associative(u, v, w):
    assert star(u, star(v, w)) == star(star(u, v), w)


@given(lists4)
def test_star_identity(u):
    eps = RawList(U4)
    assert star(eps, u) == u == star(u, eps)


@given(lists4, lists4)
def test_subseteq_matches_hat(u, v):
    assert list_subseteq(u, v) == hat(u).issubset(hat(v))
