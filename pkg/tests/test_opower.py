import pytest
from hypothesis import given, settings, strategies as st

from omegapow import catalog as C
from omegapow import oracle as Q
from omegapow.opower import (
    NoBlockFound,
    build_graph,
    kleene_star_member,
    opower_member_bounded,
    opower_member_escalating,
    opower_prefix_member,
)
from omegapow.words import Alphabet, LassoWord, Word, enumerate_lassos

BIN = Alphabet("01")
LAM = BIN.empty


def lasso(u, v, al=BIN):
    return LassoWord(al.word(u), al.word(v))


def test_graph_examples():
    g = build_graph(C.lang_P1(), lasso("", "0"), 1)
    assert [(e.source, e.target) for e in g.successors(0)] == [(0, 0)]
    g = build_graph(C.lang_S1(), lasso("1", "0"), 4)
    assert g.successors(0) == []
    g = build_graph(C.lang_P2(), lasso("", "01"), 2)
    assert any(e.target == 0 and e.block.render() == "01" for e in g.successors(0))


def test_member_examples():
    assert opower_member_bounded(C.lang_P1(), lasso("", "0"), 1).member
    assert opower_member_bounded(C.lang_P2(), lasso("", "0001"), 4).member
    v = opower_member_bounded(C.lang_S1(), lasso("1", "0"), 8)
    assert not v.member and v.schedule() == "no ≤8-block factorization"
    A = C.lang_clopen_A()
    assert opower_member_bounded(A, lasso("0", "1"), 2).member
    assert not opower_member_bounded(A, lasso("10", "1"), 8).member
    gw = C.lang_gW()
    assert opower_member_bounded(gw, lasso("1d", "1d", C.D_ALPHABET), 8).member


def test_schedule_text_and_blocks():
    x = lasso("", "001")
    v = opower_member_bounded(C.lang_P2(), x, 4)
    assert v.schedule() == "cut@0, cycle=[3]"
    P2 = C.lang_P2()
    assert all(P2.decide(b) for b in v.blocks(x, repeats=3))


def test_escalation_stops_at_first_success():
    v = opower_member_escalating(C.lang_P2(), lasso("", "00001"), 16)
    assert v.member and v.bound == 8
    v = opower_member_escalating(C.lang_S1(), lasso("1", "0"), 6)
    assert not v.member and v.bound == 6


def test_bad_arguments():
    with pytest.raises(ValueError):
        opower_member_bounded(C.lang_P1(), lasso("", "0"), 0)
    with pytest.raises(ValueError):
        opower_member_bounded(C.lang_gW(), lasso("", "0"), 2)


@pytest.mark.parametrize("name", ["p1", "p2", "s1", "clopenA", "s2", "e"])
def test_graph_verdicts_match_brute_factorization(name):
    L = C.get(name)
    bound = 4
    for x in enumerate_lassos(L.alphabet, 2, 2):
        nodes = len(x.prefix) + len(x.period)
        horizon = bound * (nodes + 1)
        v = opower_member_bounded(L, x, bound)
        assert v.member == Q.brute_factorizes(L, x, bound, horizon), x
        if v.member:
            assert all(L.decide(b) for b in v.blocks(x, repeats=2))


@settings(max_examples=60, deadline=None)
@given(st.text("01", max_size=3), st.text("01", min_size=1, max_size=3), st.integers(1, 6))
def test_positive_verdicts_carry_valid_schedules(u, v, bound):
    x = lasso(u or "@", v)
    for name in ("p2", "s1", "clopenA"):
        L = C.get(name)
        verdict = opower_member_bounded(L, x, bound)
        if verdict.member:
            cuts = verdict.cuts(repeats=2)
            assert cuts[0] == 0 and all(b - a <= bound for a, b in zip(cuts, cuts[1:]))
            assert all(L.decide(b) for b in verdict.blocks(x, repeats=2))


def test_kleene_star():
    P2 = C.lang_P2()
    assert kleene_star_member(P2, LAM)
    assert kleene_star_member(P2, BIN.word("01001"))
    assert not kleene_star_member(P2, BIN.word("010"))


def test_prefix_member():
    P2 = C.lang_P2()
    assert opower_prefix_member(P2, BIN.word("10"), 4)
    assert opower_prefix_member(P2, BIN.word("000"), 4)
    assert not opower_prefix_member(C.lang_P1(), BIN.word("01"), 4)
    with pytest.raises(NoBlockFound):
        opower_prefix_member(C.lang_P2(), BIN.word("0"), 0)


FIXTURE_LANGS = ("p1", "p2", "s1", "clopenA")


@pytest.mark.parametrize("name", FIXTURE_LANGS)
def test_bound_six_matches_cut_enumeration_over_24_letters(name):
    L = C.get(name)
    for x in enumerate_lassos(BIN, 2, 2):
        v = opower_member_bounded(L, x, 6)
        assert v.member == Q.brute_factorizes(L, x, 6, 24), x
        if v.member:
            assert all(L.decide(b) for b in v.blocks(x, repeats=5))


@pytest.mark.parametrize("name", FIXTURE_LANGS)
def test_membership_is_monotone_in_bound(name):
    L = C.get(name)
    for x in enumerate_lassos(BIN, 2, 3):
        seen = False
        for b in range(1, 9):
            m = opower_member_bounded(L, x, b).member
            assert m or not seen, (x, b)
            seen = seen or m


def test_clopen_escalating():
    A = C.lang_clopen_A()
    for x in enumerate_lassos(BIN, 5, 6):
        if len(x.prefix) + len(x.period) <= 6:
            expect = x.letters(0, 2) != ("1", "0")
            assert opower_member_escalating(A, x, 8).member == expect, x


def test_prefix_member_spec_cases():
    assert opower_prefix_member(C.lang_P2(), BIN.word("00"), 4)
    assert not opower_prefix_member(C.lang_P1(), BIN.word("1"), 4)
