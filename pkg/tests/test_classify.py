import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from ordsat.classify import (
    RULES,
    Status,
    Verdict,
    bisuperedges,
    crossed_size,
    cyclic_matching_run_size,
    cyclic_minedges,
    cyclic_rules,
    in_gamma0010_class,
    interval_chromatic_number,
    is_nested,
    is_separable,
    linked_parameters,
    minedges,
    ordered_rules,
    ssat_verdict,
    superedges,
    verdict,
    yx_decompositions,
)
from ordsat.graphcore import (
    CyclicGraph,
    OrderedGraph,
    complete,
    crossed_matching,
    gamma,
    linked_matching,
    matching_run,
    rotate,
    single_edge,
    yx_member,
)

from .oracles import naive_interval_chromatic, naive_nested, naive_separable, random_graph


def test_minedges_superedges():
    assert minedges(matching_run(2)) == [(1, 2), (3, 4)]
    assert minedges(gamma(2)) == []
    g = linked_matching([1, 0, 1])
    assert minedges(g) == [(2, 3), (8, 9)]
    assert superedges(g) == [(1, 5), (6, 10)]
    assert superedges(matching_run(4)) == []
    assert superedges(OrderedGraph(4, [(1, 4), (2, 3)])) == [(1, 4)]


def test_cyclic_edge_classes():
    x1 = crossed_matching(1)
    assert bisuperedges(x1) == []
    assert cyclic_minedges(x1) == [(3, 4)]
    assert bisuperedges(matching_run(2).to_cyclic()) == []
    assert bisuperedges(CyclicGraph(6, [(1, 4), (2, 3), (5, 6)])) == [(1, 4)]
    assert cyclic_minedges(matching_run(2).to_cyclic()) == [(1, 2), (3, 4)]
    assert cyclic_minedges(complete(3).to_cyclic()) == []
    # the wrap-around pair counts as consecutive
    assert cyclic_minedges(CyclicGraph(5, [(1, 5), (2, 4)])) == [(1, 5)]


def test_interval_chromatic_examples():
    assert interval_chromatic_number(single_edge()) == 2
    assert interval_chromatic_number(gamma(2)) == 2
    assert interval_chromatic_number(matching_run(2)) == 3


def test_separable_nested_examples():
    assert is_separable(matching_run(2)) == 2
    assert is_separable(gamma(2)) is None
    assert is_separable(linked_matching([1, 0, 1])) is None
    assert is_nested(OrderedGraph(4, [(1, 4), (2, 3)])) == ([(1, 4)], [(2, 3)])
    assert is_nested(matching_run(2)) is None
    assert is_nested(linked_matching([0, 1, 0])) is None


@settings(max_examples=300, deadline=None)
@given(st.integers(0, 10**9))
def test_predicates_match_naive(seed):
    rng = random.Random(seed)
    g = random_graph(rng, rng.randint(1, 7), rng.random() * 0.6)
    assert interval_chromatic_number(g) == naive_interval_chromatic(g)
    if g.m >= 2:
        assert (is_separable(g) is not None) == naive_separable(g)
        assert (is_nested(g) is not None) == naive_nested(g)


def test_linked_parameters_roundtrip():
    for k in range(1, 5):
        for ms in itertools.product(range(3), repeat=k):
            assert linked_parameters(linked_matching(list(ms))) == list(ms)
    assert linked_parameters(complete(3)) is None
    assert linked_parameters(matching_run(2)) is None


def test_cyclic_family_recognition():
    for k in range(1, 5):
        base = matching_run(k).to_cyclic()
        for r in range(base.n):
            assert cyclic_matching_run_size(rotate(base, r)) == k
    for k in range(0, 4):
        base = crossed_matching(k)
        for r in range(base.n):
            assert crossed_size(rotate(base, r)) == k


@pytest.mark.parametrize(
    "ms, status, rule",
    [
        ([1, 1, 1], Status.LINEAR, "claim:allnonzero"),
        ([0, 1, 0], Status.BOUNDED, "thm:gamma3"),
        ([1, 0, 1], Status.BOUNDED, "thm:gamma3"),
        ([1, 1, 0], Status.BOUNDED, "thm:gamma3"),
        ([0, 0, 0], Status.LINEAR, "claim:minedge"),
        ([2, 0, 0], Status.LINEAR, "claim:firstnonzero"),
        ([0], Status.BOUNDED, "obs:single"),
        ([0, 0, 1, 0, 0, 1, 0, 0], Status.BOUNDED, "thm:gamma0010"),
    ],
)
def test_ordered_verdicts(ms, status, rule):
    v = verdict(linked_matching(ms))
    assert v.status is status
    assert rule in v.rule_ids


def test_unknown_has_no_rules():
    v = verdict(linked_matching([0, 2, 0]))
    assert v.status is Status.UNKNOWN and v.rules == ()
    with pytest.raises(ValueError):
        Verdict(Status.UNKNOWN, (RULES["obs:single"],))


def test_cyclic_verdicts():
    v = verdict(matching_run(3).to_cyclic())
    assert v.status is Status.LINEAR
    assert {"claim:lkcyclic", "thm:minsupcyclic"} <= set(v.rule_ids)
    assert verdict(crossed_matching(2)).rule_ids == ["thm:xk"]
    assert verdict(crossed_matching(0)).status is Status.LINEAR
    assert "claim:minedgecyclic" in verdict(crossed_matching(0)).rule_ids


def test_separable_and_nested_are_linear():
    assert "thm:sep" in ordered_rules(matching_run(2))
    assert verdict(OrderedGraph(4, [(1, 4), (2, 3)])).status is Status.LINEAR


def test_gamma0010_class_members():
    g1 = linked_matching([0, 0, 1, 0])
    g2 = linked_matching([0, 1, 0, 0])
    a = single_edge()
    hits = 0
    for i in range(g1.n, g1.n + a.n):
        for j in range(g1.n, g1.n + a.n):
            g = yx_member(g1, a, g2, i, j)
            assert any(True for _ in yx_decompositions(g, g1, g2))
            hits += in_gamma0010_class(g)
    assert hits >= 1


def test_ssat_verdicts():
    assert ssat_verdict(linked_matching([1, 0, 1])).status is Status.BOUNDED
    assert ssat_verdict(complete(3)).status is Status.LINEAR
    assert ssat_verdict(single_edge()).status is Status.BOUNDED
    assert ssat_verdict(matching_run(2).to_cyclic()).status is Status.BOUNDED
    assert ssat_verdict(complete(3).to_cyclic()).status is Status.LINEAR
    assert ssat_verdict(crossed_matching(1)).status is Status.BOUNDED


def test_verdict_json_shape():
    d = verdict(linked_matching([0, 1, 0])).to_dict()
    assert d["status"] == "Bounded"
    assert all(set(r) == {"id", "citation"} for r in d["rules"])


def test_edgeless_rejected():
    with pytest.raises(ValueError):
        verdict(OrderedGraph(3, []))


def test_cyclic_rules_never_mix_on_small_graphs():
    for n in range(2, 7):
        pairs = list(itertools.combinations(range(1, n + 1), 2))
        for mask in range(1, 2 ** len(pairs), 7):
            g = CyclicGraph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
            kinds = {RULES[r].status for r in cyclic_rules(g)}
            assert not {Status.BOUNDED, Status.LINEAR} <= kinds, g
