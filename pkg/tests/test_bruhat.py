import pytest

from flagstrata.bruhat import bruhat_leq, covers, lower_interval
from flagstrata.root_system import InvalidInput
from flagstrata.weyl import weyl_group
from oracles import subword_leq_table

ORACLE_TYPES = [("A", 2), ("A", 3), ("B", 2), ("G", 2)]


@pytest.fixture(scope="module", params=ORACLE_TYPES, ids=lambda t: "".join(map(str, t)))
def group_and_oracle(request):
    W = weyl_group(*request.param)
    return W, subword_leq_table(W)


def test_examples(A2):
    s1, s2 = A2.s(1), A2.s(2)
    w = A2.from_word([1, 2])
    assert bruhat_leq(A2.identity, w)
    assert not bruhat_leq(s1, s2)
    assert bruhat_leq(s1, A2.from_word([2, 1]))


def test_mismatch_rejected(A2, B2):
    with pytest.raises(InvalidInput):
        bruhat_leq(A2.s(1), B2.s(1))


def test_recursion_matches_subword_oracle(group_and_oracle):
    W, table = group_and_oracle
    for w in W:
        for v in W:
            assert bruhat_leq(v, w) == table[v.perm, w.perm], (v, w)


def test_intervals_match_subword_oracle(group_and_oracle):
    W, table = group_and_oracle
    for w in W:
        expected = {v.perm for v in W if table[v.perm, w.perm]}
        iv = lower_interval(w)
        assert {v.perm for v in iv} == expected
        assert len(iv) == len(expected)


def test_order_axioms(group_and_oracle):
    W, _ = group_and_oracle
    for v in W:
        for w in W:
            if bruhat_leq(v, w):
                assert v.length <= w.length
                if v.length == w.length:
                    assert v == w
                if bruhat_leq(w, v):
                    assert v == w


def test_interval_examples(A2):
    assert len(lower_interval(A2.identity)) == 1
    assert len(lower_interval(A2.from_word([1, 2]))) == 4
    assert len(lower_interval(A2.longest_element())) == 6


@pytest.mark.parametrize("t", [("A", 3), ("B", 3), ("G", 2), ("D", 4)])
def test_longest_interval_is_whole_group(t):
    W = weyl_group(*t)
    iv = lower_interval(W.longest_element())
    assert len(iv) == len(W.enumerate())
    assert W.identity in iv


def test_covers_examples(A2):
    assert covers(A2.identity) == []
    assert covers(A2.s(1)) == [A2.identity]
    assert set(covers(A2.longest_element())) == {A2.from_word([1, 2]), A2.from_word([2, 1])}


def test_covers_by_length_filter(group_and_oracle):
    W, table = group_and_oracle
    for w in W:
        expected = {v.perm for v in W if v.length == w.length - 1 and table[v.perm, w.perm]}
        assert {v.perm for v in covers(w)} == expected
