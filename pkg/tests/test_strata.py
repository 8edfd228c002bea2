import json
import random

import pytest

from flagstrata.bruhat import bruhat_leq, lower_interval
from flagstrata.parabolic import ParabolicSubset, minimal_coset_reps
from flagstrata.root_system import InvalidInput, SizeCapExceeded
from flagstrata.strata import (
    AxiomReport, PosetAxiomFailure, StrataPoset, StratumIndex, build_relation, catalog,
    closure_leq, enumerate_strata, export, fibers_by_w, hasse, verify_poset_axioms, verify_same_w,
)
from flagstrata.weyl import weyl_group
from oracles import transitive_reduction

TYPES = [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("G", 2)]


def all_cases(types=TYPES):
    for t in types:
        W = weyl_group(*t)
        for I in ParabolicSubset.all_subsets(W.rank):
            yield W, I


def S(W, w, v):
    return StratumIndex(W.from_word(w), W.from_word(v))


def test_a1_elements():
    W = weyl_group("A", 1)
    P = enumerate_strata(W, [])
    assert [(e.w.reduced_word(), e.v.reduced_word()) for e in P.elements] == [
        ((), ()), ((1,), ()), ((1,), (1,))]


@pytest.mark.parametrize("t,I,count", [
    (("A", 1), [], 3), (("A", 2), [], 19), (("A", 2), [2], 7), (("A", 3), [1, 3], 33),
])
def test_counts(t, I, count):
    assert len(enumerate_strata(weyl_group(*t), I)) == count


def test_count_is_sum_of_interval_sizes():
    for W, I in all_cases():
        expected = sum(len(lower_interval(w)) for w in minimal_coset_reps(W, I))
        assert len(enumerate_strata(W, I)) == expected


def test_monotone_in_I():
    for t in TYPES + [("B", 3)]:
        W = weyl_group(*t)
        subsets = ParabolicSubset.all_subsets(W.rank)
        size = {I.nodes: len(enumerate_strata(W, I)) for I in subsets}
        for I in subsets:
            for J in subsets:
                if I.nodes <= J.nodes:
                    assert size[J.nodes] <= size[I.nodes]


def test_cap():
    with pytest.raises(SizeCapExceeded, match="cap 10"):
        enumerate_strata(weyl_group("A", 3), [], max_strata=10)


def test_closure_examples(A2):
    a, b = S(A2, [1], []), S(A2, [2, 1], [])
    assert closure_leq(a, a, [2])
    assert closure_leq(a, b, [2])
    P = enumerate_strata(A2, [2])
    for e in P.elements:
        assert closure_leq(e, b, [2])


def test_closure_rejects_invalid_index(A2):
    with pytest.raises(InvalidInput):
        closure_leq(S(A2, [1, 2], []), S(A2, [1], []), [2])  # s1s2 not in W^{2}
    with pytest.raises(InvalidInput):
        closure_leq(S(A2, [1], [2]), S(A2, [1], []), [2])  # s2 not below s1


@pytest.mark.parametrize("t", TYPES)
def test_relation_matrix_matches_direct_predicate(t):
    for W, I in all_cases([t]):
        P = enumerate_strata(W, I)
        build_relation(P)
        for a, x in enumerate(P.elements):
            for b, y in enumerate(P.elements):
                assert P.leq(a, b) == closure_leq(x, y, I)


def test_same_w_is_reversed_bruhat():
    for W, I in all_cases():
        P = enumerate_strata(W, I)
        assert verify_same_w(P) == []
        for w, iv in fibers_by_w(P).items():
            for v in iv:
                for vp in iv:
                    assert closure_leq(StratumIndex(w, vp), StratumIndex(w, v), I) == bruhat_leq(v, vp)


def test_full_flag_two_comparisons():
    for t in [("A", 2), ("A", 3), ("B", 2)]:
        W = weyl_group(*t)
        P = enumerate_strata(W, [])
        for a, x in enumerate(P.elements):
            for b, y in enumerate(P.elements):
                assert P.leq(a, b) == (bruhat_leq(x.w, y.w) and bruhat_leq(y.v, x.v))


def test_axioms_hold():
    for W, I in all_cases():
        rep = verify_poset_axioms(enumerate_strata(W, I))
        assert rep.passed, (W, I, rep.summary())


def _chain(P):
    n = len(P)
    return next((a, b, c) for a in range(n) for b in range(n) for c in range(n)
                if len({a, b, c}) == 3 and P.leq(a, b) and P.leq(b, c))


def test_axiom_checker_reports_counterexamples(A2):
    P = enumerate_strata(A2, [2])
    build_relation(P)
    a, b, c = _chain(P)
    # break transitivity and reflexivity on purpose
    P.relation = list(P.relation)
    P.relation[a] &= ~(1 << c)
    P.relation[b] &= ~(1 << b)
    rep = verify_poset_axioms(P)
    assert not rep.reflexive and not rep.transitive and rep.antisymmetric
    assert (b,) in rep.reflexivity_failures
    assert any(x == a and z == c for x, _, z in rep.transitivity_failures)
    with pytest.raises(PosetAxiomFailure):
        hasse(P)
    with pytest.raises(PosetAxiomFailure):
        export(P, "csv")


def test_antisymmetry_failure_detected(A2):
    P = enumerate_strata(A2, [2])
    build_relation(P)
    a, b, _ = _chain(P)
    P.relation = list(P.relation)
    P.relation[b] |= 1 << a
    rep = verify_poset_axioms(P)
    assert not rep.antisymmetric and (min(a, b), max(a, b)) in rep.antisymmetry_failures


def test_fibers(A2):
    P = enumerate_strata(A2, [2])
    fib = fibers_by_w(P)
    assert len(fib[A2.identity]) == 1
    assert len(fib[A2.from_word([2, 1])]) == 4
    assert sum(len(iv) for iv in fib.values()) == len(P)


def test_unique_maximal_element():
    for W, I in all_cases():
        P = enumerate_strata(W, I)
        build_relation(P)
        n = len(P)
        maximal = [a for a in range(n) if not any(P.leq(a, b) and a != b for b in range(n))]
        top_w = max(P.reps, key=lambda w: w.length)
        assert [P.elements[a] for a in maximal] == [StratumIndex(top_w, W.identity)]


def test_hasse_matches_naive_reduction():
    for W, I in all_cases([("A", 1), ("A", 2), ("B", 2), ("G", 2)]):
        P = enumerate_strata(W, I)
        edges = hasse(P)
        assert sorted(edges) == sorted(transitive_reduction(len(P), P.leq))


def test_hasse_closure_recovers_relation(A3):
    P = enumerate_strata(A3, [1, 3])
    edges = hasse(P)
    n = len(P)
    reach = [{a} for a in range(n)]
    # transitive closure by repeated relaxation
    changed = True
    succ = {a: [b for x, b in edges if x == a] for a in range(n)}
    while changed:
        changed = False
        for a in range(n):
            new = set(reach[a])
            for b in list(reach[a]):
                new.update(succ[b])
            if new != reach[a]:
                reach[a], changed = new, True
    for a in range(n):
        assert reach[a] == {b for b in range(n) if P.leq(a, b)}


def test_hasse_examples():
    A1 = weyl_group("A", 1)
    P = enumerate_strata(A1, [])
    assert sorted(hasse(P)) == [(0, 1), (2, 1)]
    P = enumerate_strata(A1, [1])
    assert len(P) == 1 and hasse(P) == []
    A2 = weyl_group("A", 2)
    P = enumerate_strata(A2, [2])
    assert len(P) == 7 and len(hasse(P)) == 9


def test_order_independent_of_enumeration_order(A3):
    P = enumerate_strata(A3, [1, 3])
    build_relation(P)
    rng = random.Random(3)
    shuffled = list(range(len(P)))
    rng.shuffle(shuffled)
    Q = StrataPoset(A3, P.I, [P.elements[k] for k in shuffled], P.reps)
    build_relation(Q)
    for i, a in enumerate(shuffled):
        for j, b in enumerate(shuffled):
            assert Q.leq(i, j) == P.leq(a, b)


def test_catalog_schema(A2):
    P = enumerate_strata(A2, [2])
    cat = catalog(P)
    assert list(cat) == ["family", "rank", "I", "count", "elements", "fibers", "hasse", "axioms"]
    assert cat["count"] == 7 and cat["I"] == [2]
    assert cat["fibers"] == {"e": 1, "1": 2, "2,1": 4}
    assert cat["elements"][0] == {"w": [], "v": []}
    assert cat["axioms"] == {"reflexive": True, "antisymmetric": True, "transitive": True}
    assert json.loads(export(P, "json")) == cat


def test_dot_and_csv(A2):
    P = enumerate_strata(weyl_group("A", 1), [])
    dot = export(P, "dot")
    assert dot.count("[label=") == 3
    assert 'n0 [label="e|e"]' in dot and 'n2 [label="1|1"]' in dot
    assert "n0 -> n1;" in dot and "n2 -> n1;" in dot
    rows = export(P, "csv").splitlines()
    assert rows[0] == "lower,upper,lower_label,upper_label"
    assert len(rows) - 1 == sum(1 for _ in P.pairs()) == 5
    text = export(P, "text")
    assert "strata 3" in text
    with pytest.raises(InvalidInput):
        export(P, "xml")


def test_axiom_report_json():
    assert AxiomReport().to_json() == {"reflexive": True, "antisymmetric": True, "transitive": True}
