import random

import pytest
from hypothesis import given, settings, strategies as st

from ordsat.embed import contains
from ordsat.graphcore import (
    CyclicGraph,
    OrderedGraph,
    complete,
    crossed_matching,
    gamma,
    linked_matching,
    matching_run,
    single_edge,
)
from ordsat.saturate import (
    PreconditionError,
    WitnessCertificate,
    blowup,
    cyclic_linear_host,
    greedy_saturate,
    hitting_interval_length,
    is_saturating,
    is_semisaturating,
    is_witness,
    linear_host,
    linear_host_edge,
    semisat_blocks,
    semisat_host,
    semisat_host_cyclic,
    verify_certificate,
)

from .oracles import naive_contains_cyclic, naive_contains_ordered, naive_saturating, random_graph


def test_saturating_examples():
    assert is_saturating(OrderedGraph(5, []), single_edge())
    star = OrderedGraph(4, [(1, 2), (1, 3), (1, 4)])
    assert is_saturating(star, complete(3))
    report = is_saturating(matching_run(2), matching_run(2))
    assert not report and report.embedding is not None
    assert report.to_dict()["edge_count"] == 2


def test_failing_edge_reported():
    report = is_saturating(OrderedGraph(4, []), matching_run(2))
    assert not report.ok
    assert report.failing_edge == (1, 2)
    assert set(report.to_dict()) == {"ok", "edge_count", "failing_edge"}


def test_semisaturating_examples():
    assert is_semisaturating(OrderedGraph(2, []), single_edge())
    assert not is_semisaturating(OrderedGraph(4, []), matching_run(2))
    g = linked_matching([1, 0, 1])
    assert is_semisaturating(semisat_host(g, 30), g)


@settings(max_examples=120, deadline=None)
@given(st.integers(0, 10**9))
def test_is_saturating_matches_naive(seed):
    rng = random.Random(seed)
    cls = rng.choice([OrderedGraph, CyclicGraph])
    naive = naive_contains_cyclic if cls is CyclicGraph else naive_contains_ordered
    host = random_graph(rng, rng.randint(2, 7), rng.random(), cls)
    pattern = random_graph(rng, rng.randint(2, 4), 0.3 + 0.7 * rng.random(), cls)
    if not pattern.edges:
        return
    assert bool(is_saturating(host, pattern)) == naive_saturating(host, pattern, naive)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**9))
def test_greedy_output_saturates(seed):
    rng = random.Random(seed)
    cls = rng.choice([OrderedGraph, CyclicGraph])
    naive = naive_contains_cyclic if cls is CyclicGraph else naive_contains_ordered
    pattern = random_graph(rng, rng.randint(2, 4), 0.5 + 0.5 * rng.random(), cls)
    if not pattern.edges:
        return
    host = greedy_saturate(cls(rng.randint(2, 7), []), pattern)
    assert naive_saturating(host, pattern, naive)
    assert greedy_saturate(host, pattern) == host


def test_greedy_k3():
    h = greedy_saturate(OrderedGraph(4, []), complete(3))
    assert h.m == 3 and is_saturating(h, complete(3))
    with pytest.raises(PreconditionError):
        greedy_saturate(complete(3), complete(3))


def test_linear_host_gamma2():
    g = gamma(2)
    assert linear_host_edge(g) == (1, 3)
    h = linear_host(g, 12)
    expected = {(i, 12) for i in range(1, 12)} | {(i, i + 1) for i in range(1, 12)}
    assert h.edge_set == expected
    assert is_saturating(h, g)


def test_linear_host_is_linear_in_n():
    g = linked_matching([1, 0, 1])
    assert is_saturating(linear_host(g, 20), g)
    u, v = linear_host_edge(g)
    a, b, c = u - 1, v - u - 1, g.n - v
    for n in (15, 30, 45):
        assert linear_host(g, n).m <= (a + b + c) * n


def test_linear_host_precondition():
    with pytest.raises(PreconditionError):
        linear_host(matching_run(2), 4)


def test_hitting_interval():
    assert hitting_interval_length(matching_run(2).to_cyclic()) == 2
    assert hitting_interval_length(crossed_matching(1)) == 3


@pytest.mark.parametrize("pattern", [matching_run(2).to_cyclic(), matching_run(3).to_cyclic(), crossed_matching(1)])
def test_cyclic_linear_host_degree_bound(pattern):
    k, s = pattern.n, hitting_interval_length(pattern)
    h = cyclic_linear_host(pattern, 15)
    assert is_saturating(h, pattern)
    assert all(h.degrees[v] <= 2 * k - s - 3 for v in range(s, h.n + 1))


def test_semisat_blocks_gamma101():
    assert semisat_blocks(linked_matching([1, 0, 1])) == (5, 10)


def test_semisat_host_edge_count_constant():
    g = linked_matching([1, 0, 1])
    counts = {semisat_host(g, n).m for n in (16, 25, 40)}
    assert len(counts) == 1


def test_semisat_host_rejects_linear_patterns():
    with pytest.raises(PreconditionError):
        semisat_host(complete(3), 20)


def test_semisat_host_cyclic():
    c = matching_run(2).to_cyclic()
    h = semisat_host_cyclic(c, 20)
    assert h.m == 6
    assert {v for e in h.edges for v in e} == {1, 2, 3, 4}
    assert is_semisaturating(h, c)
    with pytest.raises(PreconditionError):
        semisat_host_cyclic(complete(3).to_cyclic(), 20)


def test_witness_examples():
    cert = is_witness(OrderedGraph(2, []), single_edge(), matching_mode=True)
    assert cert is not None and cert.isolated_anchor == 1
    assert is_witness(OrderedGraph(3, []), matching_run(2)) is None
    with pytest.raises(PreconditionError):
        is_witness(OrderedGraph(5, []), OrderedGraph(3, [(1, 2)]))
    with pytest.raises(PreconditionError):
        is_witness(OrderedGraph(5, []), complete(3), matching_mode=True)


def test_blowup_single_edge():
    cert = WitnessCertificate(single_edge(), OrderedGraph(2, []), 1, True)
    h = blowup(cert, 10)
    assert h.n == 10 and h.m == 0
    assert is_saturating(h, single_edge())


def test_blowup_keeps_edges_and_run():
    w = OrderedGraph(7, [(1, 2), (1, 7), (6, 7)])
    cert = WitnessCertificate(single_edge(), w, 3, False)
    h = blowup(cert, 12)
    assert h.m == w.m
    assert h.edge_set == {(1, 2), (1, 12), (11, 12)}


def test_blowup_cyclic_rotates_run_to_front():
    w = CyclicGraph(5, [(1, 2), (2, 5)])
    cert = WitnessCertificate(single_edge().to_cyclic(), w, 3, False)
    h = blowup(cert, 8)
    assert h.m == 2 and h.n == 8
    assert all(h.degrees[v] == 0 for v in range(1, 6))


def test_verify_certificate_rejects_tampering():
    cert = WitnessCertificate(single_edge(), OrderedGraph(3, [(1, 2)]), 3, True)
    assert not verify_certificate(cert)
    assert verify_certificate(WitnessCertificate(single_edge(), OrderedGraph(2, []), 1, True))


def test_construction_outputs_avoid_pattern():
    for g in (gamma(2), matching_run(3), linked_matching([0, 1, 0])):
        assert contains(linear_host(g, g.n + 3), g) is None
