"""Structural predicates and rule-based saturation verdicts.

A verdict collects every implemented rule whose hypothesis holds. Rules never
guess: graphs outside the proven classes come back ``Unknown``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Sequence

from .embed import contains
from .graphcore import (
    AnyGraph,
    CyclicGraph,
    Edge,
    OrderedGraph,
    crossed_matching,
    gamma,
    linked_matching,
    matching_run,
    rotate,
)


class Status(str, Enum):
    BOUNDED = "Bounded"
    LINEAR = "Linear"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class Rule:
    id: str
    citation: str
    status: Status | None  # None for two-sided characterizations


RULES = {
    r.id: r
    for r in [
        Rule("obs:single", "a single edge is saturated by the empty host", Status.BOUNDED),
        Rule("claim:minedge", "no minedge forces linear saturation", Status.LINEAR),
        Rule("thm:sep", "separable or nested graphs saturate linearly", Status.LINEAR),
        Rule("cor:coverminedge", "a minedge strictly covered by every other edge", Status.LINEAR),
        Rule("cor:intchrom", "interval chromatic number two", Status.LINEAR),
        Rule("claim:firstneighbors", "all neighbours of the first or last vertex have degree > 1", Status.LINEAR),
        Rule("lem:minsupdeg", "every edge with a degree-one left (or right) end is a minedge or superedge", Status.LINEAR),
        Rule("thm:minsup", "every edge is a minedge or a superedge", Status.LINEAR),
        Rule("claim:allnonzero", "linked matching with every link carrying minedges", Status.LINEAR),
        Rule("claim:firstnonzero", "linked matching with minedges only in the first or only in the last link", Status.LINEAR),
        Rule("thm:gamma3", "Gamma_{0,1,0}, Gamma_{1,0,1}, Gamma_{1,1,0}, Gamma_{0,1,1} have witnesses", Status.BOUNDED),
        Rule("thm:gamma0010", "non-separable member of Gamma_{0,0,1,0} y A x Gamma_{0,1,0,0} (or x Gamma_4) without degree 0/2 vertices", Status.BOUNDED),
        Rule("lem:witness", "a verified witness certificate is on file", Status.BOUNDED),
        Rule("obs:singlecyclic", "a single cyclic edge is saturated by the empty host", Status.BOUNDED),
        Rule("claim:minedgecyclic", "no cyclic minedge forces linear saturation", Status.LINEAR),
        Rule("claim:lkcyclic", "cyclic L_k with k >= 2", Status.LINEAR),
        Rule("thm:minsupcyclic", "contains L_3 and every edge is a minedge or a bisuperedge", Status.LINEAR),
        Rule("thm:xk", "X_k with k >= 1", Status.BOUNDED),
        Rule("thm:semiord", "minedge plus degree-one partners of the first and last vertex", None),
        Rule("thm:semicyc", "cyclic minedge present", None),
    ]
}


@dataclass(frozen=True)
class Verdict:
    status: Status
    rules: tuple[Rule, ...] = field(default=())

    def __post_init__(self):
        if (self.status is Status.UNKNOWN) != (not self.rules):
            raise ValueError("Unknown verdicts carry no rules and vice versa")

    @property
    def rule_ids(self) -> list[str]:
        return [r.id for r in self.rules]

    def to_dict(self) -> dict:
        return {
            "status": self.status.value,
            "rules": [{"id": r.id, "citation": r.citation} for r in self.rules],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


class InconsistentVerdict(RuntimeError):
    pass


def _combine(fired: Sequence[str]) -> Verdict:
    rules = tuple(RULES[r] for r in fired)
    kinds = {r.status for r in rules}
    if Status.BOUNDED in kinds and Status.LINEAR in kinds:
        raise InconsistentVerdict(f"both bounded and linear rules fired: {list(fired)}")
    if not rules:
        return Verdict(Status.UNKNOWN)
    return Verdict(kinds.pop(), rules)


def _ssat(fired: str, bounded: bool) -> Verdict:
    rule = RULES[fired]
    return Verdict(Status.BOUNDED if bounded else Status.LINEAR, (rule,))


def _require_edges(graph: AnyGraph) -> None:
    if not graph.edges:
        raise ValueError("pattern graph must have at least one edge")


# --------------------------------------------------------------------------
# Edge classes
# --------------------------------------------------------------------------


def minedges(graph: OrderedGraph) -> list[Edge]:
    deg = graph.degrees
    return [(u, v) for u, v in graph.edges if v == u + 1 and deg[u] == 1 and deg[v] == 1]


def superedges(graph: OrderedGraph) -> list[Edge]:
    return [
        (u, v) for u, v in graph.edges if any(u < x and y < v for x, y in graph.edges)
    ]


def _cyclic_open(n: int, u: int, v: int) -> list[int]:
    """Vertices met strictly between ``u`` and ``v`` going clockwise."""
    out = []
    x = u % n + 1
    while x != v:
        out.append(x)
        x = x % n + 1
    return out


def cyclic_minedges(graph: CyclicGraph) -> list[Edge]:
    deg, n = graph.degrees, graph.n
    return [
        (u, v)
        for u, v in graph.edges
        if deg[u] == 1 and deg[v] == 1 and (v == u + 1 or (u == 1 and v == n))
    ]


def bisuperedges(graph: CyclicGraph) -> list[Edge]:
    out = []
    for u, v in graph.edges:
        sides = (set(_cyclic_open(graph.n, u, v)), set(_cyclic_open(graph.n, v, u)))
        if all(any(x in side and y in side for x, y in graph.edges) for side in sides):
            out.append((u, v))
    return out


def interval_chromatic_number(graph: AnyGraph) -> int:
    """Fewest consecutive blocks with no edge inside a block (linear order),
    by cutting greedily before the first vertex that sees its own block."""
    adj = graph.adjacency
    count, block = 1, 0
    for i in range(graph.n):
        if adj[i] & block:
            count += 1
            block = 0
        block |= 1 << i
    return count


def is_separable(graph: OrderedGraph) -> int | None:
    """Smallest cut vertex ``c`` with every edge inside ``1..c`` or ``c+1..n``
    and both sides holding an edge."""
    for c in range(1, graph.n):
        left = [e for e in graph.edges if e[1] <= c]
        right = [e for e in graph.edges if e[0] > c]
        if left and right and len(left) + len(right) == graph.m:
            return c
    return None


def is_nested(graph: OrderedGraph) -> tuple[list[Edge], list[Edge]] | None:
    """Split into outer edges strictly covering every inner edge, or None.

    Any valid split is fixed by the leftmost inner left end ``x`` and the
    rightmost inner right end ``y``, so scanning those thresholds is exhaustive.
    """
    n = graph.n
    for x in range(1, n + 1):
        for y in range(n, x, -1):
            outer = [e for e in graph.edges if e[0] < x and e[1] > y]
            inner = [e for e in graph.edges if e[0] >= x and e[1] <= y]
            if outer and inner and len(outer) + len(inner) == graph.m:
                return outer, inner
    return None


# --------------------------------------------------------------------------
# Family recognition
# --------------------------------------------------------------------------


def linked_parameters(graph: OrderedGraph) -> list[int] | None:
    """The ``m`` vector if ``graph`` equals some Gamma_{m_1..m_k}, else None."""
    if not graph.edges or not graph.is_matching():
        return None
    if graph.n == 2:
        return [0]
    mins = set(minedges(graph))
    links = [e for e in graph.edges if e not in mins]
    if not links:
        return None
    ms = []
    for i, (a, b) in enumerate(links):
        ms.append(
            sum(
                1
                for x, y in mins
                if a < x and y < b
                and all(not (c < x and y < d) for j, (c, d) in enumerate(links) if j != i)
            )
        )
    if linked_matching(ms) != graph:
        return None
    return ms


def cyclic_matching_run_size(graph: CyclicGraph) -> int | None:
    """k if ``graph`` is a rotation of cyclic L_k."""
    if graph.n % 2 or graph.m != graph.n // 2:
        return None
    base = matching_run(graph.n // 2).to_cyclic()
    if graph in (base, rotate(base, 1)):
        return graph.n // 2
    return None


def crossed_size(graph: CyclicGraph) -> int | None:
    """k if ``graph`` is a rotation of X_k."""
    if graph.n < 4 or graph.n % 2:
        return None
    k = (graph.n - 4) // 2
    if graph.m != k + 2:
        return None
    base = crossed_matching(k)
    if any(graph == r for r in base.rotations()):
        return k
    return None


_GAMMA3_BOUNDED = ([0, 1, 0], [1, 0, 1], [1, 1, 0], [0, 1, 1])


def yx_decompositions(graph: OrderedGraph, g1: OrderedGraph, g2: OrderedGraph):
    """Yield ``(i, j, A)`` for every way ``graph`` is a member of G1 y A x G2."""
    n = graph.n
    n1, n2 = g1.n, g2.n
    n0 = n - n1 - n2 + 2
    if n0 < 1:
        return
    lo, hi = n1, n1 + n0 - 1
    inner = [e for e in graph.edges if lo <= e[0] and e[1] <= hi]
    outer = graph.edge_set.difference(inner)
    for i in range(lo, hi + 1):
        pos1 = list(range(1, n1)) + [i]
        e1 = {(pos1[u - 1], pos1[v - 1]) for u, v in g1.edges}
        if not e1 <= outer:
            continue
        for j in range(lo, hi + 1):
            pos2 = [j] + list(range(n1 + n0, n + 1))
            e2 = {(pos2[u - 1], pos2[v - 1]) for u, v in g2.edges}
            if e1 | e2 == outer:
                a = OrderedGraph(n0, [(u - lo + 1, v - lo + 1) for u, v in inner])
                yield i, j, a


def in_gamma0010_class(graph: OrderedGraph) -> bool:
    """Membership test for the infinite bounded class built from Gamma_{0,0,1,0}."""
    deg = graph.degrees[1:]
    if any(d in (0, 2) for d in deg) or is_separable(graph) is not None:
        return False
    left = linked_matching([0, 0, 1, 0])
    for right in (linked_matching([0, 1, 0, 0]), gamma(4)):
        for _ in yx_decompositions(graph, left, right):
            return True
    return False


# --------------------------------------------------------------------------
# Verdicts
# --------------------------------------------------------------------------


def _has_certificate(graph: AnyGraph, certificates: Iterable) -> bool:
    return any(c.pattern == graph for c in certificates)


def ordered_rules(graph: OrderedGraph, certificates: Iterable = ()) -> list[str]:
    _require_edges(graph)
    fired = []
    deg = graph.degrees
    mins = minedges(graph)
    sups = set(superedges(graph))
    several = graph.m >= 2

    if graph.n == 2 and graph.m == 1:
        fired.append("obs:single")
    if not mins:
        fired.append("claim:minedge")
    if is_separable(graph) is not None or is_nested(graph) is not None:
        fired.append("thm:sep")
    if several and any(
        all(x < u and v < y for x, y in graph.edges if (x, y) != (u, v)) for u, v in mins
    ):
        fired.append("cor:coverminedge")
    if several and interval_chromatic_number(graph) == 2:
        fired.append("cor:intchrom")
    for end in (1, graph.n):
        if all(deg[w] > 1 for w in graph.neighbors(end)):
            fired.append("claim:firstneighbors")
            break
    if several:
        covered = sups.union(mins)
        lefts = [e for e in graph.edges if deg[e[0]] == 1]
        rights = [e for e in graph.edges if deg[e[1]] == 1]
        if all(e in covered for e in lefts) or all(e in covered for e in rights):
            fired.append("lem:minsupdeg")
        if all(e in covered for e in graph.edges):
            fired.append("thm:minsup")

    ms = linked_parameters(graph)
    if ms is not None:
        k = len(ms)
        if all(m > 0 for m in ms):
            fired.append("claim:allnonzero")
        if k >= 2 and (all(m == 0 for m in ms[1:]) or all(m == 0 for m in ms[:-1])):
            fired.append("claim:firstnonzero")
        if ms in _GAMMA3_BOUNDED:
            fired.append("thm:gamma3")
    if graph.m >= 8 and in_gamma0010_class(graph):
        fired.append("thm:gamma0010")
    if _has_certificate(graph, certificates):
        fired.append("lem:witness")
    return fired


def verdict_ordered(graph: OrderedGraph, certificates: Iterable = ()) -> Verdict:
    return _combine(ordered_rules(graph, certificates))


def cyclic_rules(graph: CyclicGraph, certificates: Iterable = ()) -> list[str]:
    _require_edges(graph)
    fired = []
    mins = set(cyclic_minedges(graph))
    if graph.n == 2 and graph.m == 1:
        fired.append("obs:singlecyclic")
    if not mins:
        fired.append("claim:minedgecyclic")
    k = cyclic_matching_run_size(graph)
    if k is not None and k >= 2:
        fired.append("claim:lkcyclic")
    if graph.m >= 3 and contains(graph, matching_run(3).to_cyclic()) is not None:
        covered = mins.union(bisuperedges(graph))
        if all(e in covered for e in graph.edges):
            fired.append("thm:minsupcyclic")
    k = crossed_size(graph)
    if k is not None and k >= 1:
        fired.append("thm:xk")
    if _has_certificate(graph, certificates):
        fired.append("lem:witness")
    return fired


def verdict_cyclic(graph: CyclicGraph, certificates: Iterable = ()) -> Verdict:
    return _combine(cyclic_rules(graph, certificates))


def verdict(graph: AnyGraph, certificates: Iterable = ()) -> Verdict:
    if isinstance(graph, CyclicGraph):
        return verdict_cyclic(graph, certificates)
    return verdict_ordered(graph, certificates)


def semisat_conditions(graph: OrderedGraph) -> tuple[bool, bool, bool]:
    """(has a minedge, first vertex has a degree-one neighbour, last vertex too)."""
    deg = graph.degrees
    return (
        bool(minedges(graph)),
        any(deg[w] == 1 for w in graph.neighbors(1)),
        any(deg[w] == 1 for w in graph.neighbors(graph.n)),
    )


def ssat_verdict_ordered(graph: OrderedGraph) -> Verdict:
    _require_edges(graph)
    return _ssat("thm:semiord", all(semisat_conditions(graph)))


def ssat_verdict_cyclic(graph: CyclicGraph) -> Verdict:
    _require_edges(graph)
    return _ssat("thm:semicyc", bool(cyclic_minedges(graph)))


def ssat_verdict(graph: AnyGraph) -> Verdict:
    if isinstance(graph, CyclicGraph):
        return ssat_verdict_cyclic(graph)
    return ssat_verdict_ordered(graph)
