from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from clanpoly.clans import (
    Clan, parse_clan, enumerate_clans, enumerate_matchless, clan_count,
    weak_cover, WeakOrderGraph, closure_leq, lambda_partition, flagging,
)


def c22(text):
    return parse_clan(text, 2, 2)


def test_parse_roundtrip():
    g = c22("11+-")
    assert g.word == (1, 0, "+", "-")
    assert str(g) == "11+-"
    assert str(parse_clan("abab", 2, 2)) == "1212"
    assert str(parse_clan("+-+-", 2, 2)) == "+-+-"


def test_parse_errors():
    with pytest.raises(ValueError):
        parse_clan("11+", 2, 2)
    with pytest.raises(ValueError):
        parse_clan("1+--", 2, 2)
    with pytest.raises(ValueError):
        parse_clan("++--", 1, 3)


def test_enumerate_counts():
    assert len(enumerate_clans(2, 2)) == 21
    assert [str(c) for c in enumerate_clans(1, 1)] == ["+-", "-+", "11"]
    assert [str(c) for c in enumerate_clans(1, 0)] == ["+"]
    for p, q in [(1, 1), (2, 1), (2, 2), (3, 2), (2, 3), (3, 3), (1, 4),
                 (1, 5), (2, 4)]:
        cs = enumerate_clans(p, q)
        assert len(cs) == clan_count(p, q)
        assert len(set(cs)) == len(cs)
    assert clan_count(3, 3) == 215
    assert clan_count(2, 3) == 55
    assert clan_count(2, 4) == 120
    assert clan_count(1, 5) == 21
    assert clan_count(1, 4) == 15


def test_enumerate_matchless_count():
    for p, q in [(2, 2), (3, 2), (3, 3), (1, 5)]:
        assert len(enumerate_matchless(p, q)) == comb(p + q, p)


def test_length_values():
    assert c22("+-+-").length() == 0
    assert c22("1221").length() == 4
    assert c22("1212").length() == 3
    assert c22("1122").length() == 2
    # single arcs in (2,2)
    for text, ell in [("11+-", 1), ("1+1-", 2), ("1+-1", 3),
                      ("+11-", 1), ("+1-1", 2), ("11-+", 1)]:
        assert c22(text).length() == ell, text


def test_dimension():
    assert c22("+-+-").dimension() == 2
    assert c22("1221").dimension() == 6
    assert c22("11+-").dimension() == 3


def test_rank_data_example():
    g = c22("11+-")
    assert g.plus_counts() == [0, 1, 2, 2]
    assert g.minus_counts() == [0, 1, 1, 2]
    cc = g.cross_counts()
    assert cc[(1, 2)] == 0
    assert cc[(1, 3)] == 0
    assert cc[(2, 3)] == 0
    assert all(cc[(i, 4)] == 0 for i in (1, 2, 3))
    h = c22("1212")
    assert h.cross_counts()[(1, 2)] == 1
    assert h.cross_counts()[(2, 3)] == 1


def test_negate_and_hat():
    assert str(c22("+-+-").negate()) == "-+-+"
    g = parse_clan("11+-", 2, 2)
    ng = g.negate()
    assert (ng.p, ng.q) == (2, 2)
    assert str(ng) == "11-+"
    m = parse_clan("++-", 2, 1).negate()
    assert (m.p, m.q) == (1, 2)
    assert str(m) == "--+"
    assert g.negate().negate() == g
    assert g.hat() == g.negate()


def test_tau_collapses():
    assert str(c22("11+-").tau_minus()) == "-++-"
    assert str(c22("11+-").tau_plus()) == "+-+-"
    with pytest.raises(ValueError):
        c22("1212").tau_minus()


def test_is_noncrossing():
    assert not c22("1212").is_noncrossing()
    assert c22("1221").is_noncrossing()
    assert c22("+-+-").is_noncrossing()
    assert c22("1122").is_noncrossing()


def test_weak_cover_cases():
    assert str(weak_cover(c22("+-+-"), 1)) == "11+-"
    assert str(weak_cover(parse_clan("-+-+", 2, 2), 2)) == "-11+"
    assert str(weak_cover(c22("++--"), 2)) == "+11-"
    # sign past an arc end whose mate is to the right
    assert str(weak_cover(c22("+11-"), 1)) == "1+1-"
    # arc end with mate to the left past a sign
    assert str(weak_cover(c22("11+-"), 2)) == "1+1-"
    # no cover: same-sign pair, same-arc ends
    assert weak_cover(c22("--++"), 3) is None
    assert weak_cover(c22("11+-"), 1) is None
    # crossing move: ends of different arcs
    assert str(weak_cover(c22("1122"), 2)) == "1212"


def test_weak_cover_raises_length_by_one():
    for p, q in [(2, 2), (3, 2), (2, 3)]:
        for g in enumerate_clans(p, q):
            for i in range(1, p + q):
                up = weak_cover(g, i)
                if up is not None:
                    assert up.length() == g.length() + 1, (str(g), i)


def test_weak_order_graph_22():
    wog = WeakOrderGraph(2, 2)
    assert len(wog.nodes()) == 21
    assert len(wog.by_level[0]) == 6
    tops = wog.by_level[max(wog.by_level)]
    assert [str(c) for c in tops] == ["1221"]
    assert tops[0].dimension() == comb(4, 2)


def test_weak_order_graph_11():
    wog = WeakOrderGraph(1, 1)
    assert [str(c) for c in wog.by_level[0]] == ["+-", "-+"]
    assert [str(c) for c in wog.by_level[1]] == ["11"]
    assert len(wog.edges) == 2


@pytest.mark.parametrize("p,q", [(2, 2), (3, 2), (2, 3), (3, 3)])
def test_unique_top_is_full_dimensional(p, q):
    wog = WeakOrderGraph(p, q)
    tops = wog.by_level[max(wog.by_level)]
    assert len(tops) == 1
    assert tops[0].dimension() == comb(p + q, 2)


def test_closure_leq_basics():
    assert closure_leq(c22("+-+-"), c22("11+-"))
    assert not closure_leq(c22("11+-"), c22("+-+-"))
    assert closure_leq(c22("1212"), c22("1221"))
    for g in enumerate_clans(2, 2):
        assert closure_leq(g, g)
        assert closure_leq(g, c22("1221"))
    for tau in enumerate_matchless(2, 2):
        assert closure_leq(tau, c22("1221"))
    with pytest.raises(ValueError):
        closure_leq(c22("+-+-"), parse_clan("+--", 1, 2))


@pytest.mark.parametrize("p,q", [(2, 2), (3, 2), (2, 3), (3, 3)])
def test_closure_refines_weak_order(p, q):
    wog = WeakOrderGraph(p, q)
    for (lo, _i, hi) in wog.edges:
        assert closure_leq(lo, hi), (str(lo), str(hi))


def test_lambda_and_flagging():
    tau = parse_clan("++--+-++", 5, 3)
    assert lambda_partition(tau) == (3, 3, 1, 0, 0)
    assert flagging(tau) == (1, 2, 5, 7, 8)
    assert lambda_partition(tau.hat()) == (3, 3, 2)
    assert flagging(tau.hat()) == (3, 4, 6)
    allplus = parse_clan("++--", 2, 2)
    assert lambda_partition(allplus) == (2, 2)
    with pytest.raises(ValueError):
        lambda_partition(c22("11+-"))


@pytest.mark.parametrize("p,q", [(2, 2), (3, 2), (1, 4), (3, 3)])
def test_lambda_bijection_with_partitions(p, q):
    seen = set()
    for tau in enumerate_matchless(p, q):
        lam = lambda_partition(tau)
        assert len(lam) == p
        assert all(lam[i] >= lam[i + 1] for i in range(p - 1))
        assert all(0 <= part <= q for part in lam)
        seen.add(lam)
    assert len(seen) == comb(p + q, p)


@given(st.integers(1, 3), st.integers(1, 3), st.data())
@settings(max_examples=25, deadline=None)
def test_negate_is_involution_preserving_structure(p, q, data):
    cs = enumerate_clans(p, q)
    g = data.draw(st.sampled_from(cs))
    ng = g.negate()
    assert ng.negate() == g
    assert ng.length() == g.length()
    assert ng.is_noncrossing() == g.is_noncrossing()
