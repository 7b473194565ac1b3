import pytest

from finchar import (
    BOOL,
    UNIT,
    Explicit,
    PFun,
    RawList,
    SetBased,
    Universe,
    empcf_witness,
    eng,
    is_finite_character,
    lp_member,
    max_elements,
    pf_graph,
    pf_updates,
    pfun_filter,
    project_unit,
    ttl_witness,
)
from finchar.gdc import Relation, positive_alignment
from finchar.partial_functions import pfun_from_graph

import oracles
from conftest import all_explicit, as_sets, family

P = Universe.product(BOOL, BOOL)
ALL = SetBased(P, (1 << 16) - 1)


def pf(*table):
    return PFun(P, table)


def as_dict(f: PFun) -> dict[int, int]:
    return {a: b for a, b in enumerate(f.table) if b is not None}


def test_pf_graph_examples():
    assert pf_graph(pf(1, None)).members == (P.pair(0, 1),)
    assert pf_graph(pf(None, None)).members == ()
    assert len(pf_graph(pf(0, 1))) == 2


def test_pf_updates_examples():
    assert len(pf_updates(pf(None, None))) == 4
    assert pf_updates(pf(0, 1)) == []
    assert set(pf_updates(pf(1, None))) == {pf(1, 0), pf(1, 1)}


def test_empcf_examples():
    R = Relation(BOOL, BOOL, frozenset({(0, 1), (1, 0), (1, 1)}))
    assert empcf_witness(positive_alignment(R)) == pf(1, 0)
    assert empcf_witness(ALL) == pf(0, 0)
    assert empcf_witness(Explicit(P, [()])) == pf(None, None)
    assert empcf_witness(Explicit(P, [])) is None


def test_project_unit_examples():
    T = Explicit(BOOL, [(), (1,)])
    Q = project_unit(T)
    PU = Universe.product(BOOL, UNIT)
    assert Q.universe == PU
    assert lp_member(Q, RawList(PU, (PU.pair(1, 0),)))
    assert lp_member(Q, RawList(PU)) == lp_member(T, RawList(BOOL))
    T = Explicit(BOOL, [(), (1,), (1, 0)])
    assert empcf_witness(project_unit(T)).dom == ttl_witness(T)


def test_pfun_filter_examples():
    assert not lp_member(pfun_filter(ALL), RawList(P, (P.pair(0, 0), P.pair(0, 1))))
    assert lp_member(pfun_filter(ALL), RawList(P, (P.pair(0, 0), P.pair(1, 1))))
    assert len(eng(pfun_filter(ALL)).subsets()) == 9


def test_pfun_validation():
    with pytest.raises(ValueError):
        PFun(P, (0,))
    with pytest.raises(IndexError):
        PFun(P, (2, None))
    with pytest.raises(Exception):
        pfun_from_graph(P, 1 << P.pair(0, 0) | 1 << P.pair(0, 1))


def test_being_a_partial_function_is_fc():
    for a, b in [(1, 1), (1, 2), (2, 1), (2, 2)]:
        U = Universe.product(Universe.atomic("A", a), Universe.atomic("B", b))
        assert is_finite_character(eng(pfun_filter(SetBased(U, (1 << (1 << U.size)) - 1))))[0]


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_unit_projection_law(n):
    U = Universe.atomic("A", n)
    for T in all_explicit(U, need_empty=True):
        f = empcf_witness(project_unit(T))
        assert f.dom in max_elements(eng(T))


def test_empcf_is_maximal_over_2x2():
    for i, T in enumerate(all_explicit(P)):
        if i % 13:
            continue
        f = empcf_witness(T)
        if not T.member_mask(0):
            assert f is None
            continue
        Pf = oracles.eng_sets(as_sets(T), 4)
        assert oracles.is_max_dpf(Pf, as_dict(f), 2, 2)
        assert family(eng(T)) == Pf
