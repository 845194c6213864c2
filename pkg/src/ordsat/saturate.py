"""Saturation verifiers, witness certificates and explicit host constructions."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator

from .classify import cyclic_minedges, minedges, semisat_conditions
from .embed import Embedding, raw_contains, raw_copy_using
from .graphcore import AnyGraph, CyclicGraph, Edge, OrderedGraph, rotate


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class Check:
    """Outcome of a host verification, with a counterexample when it fails."""

    ok: bool
    edge_count: int
    failing_edge: Edge | None = None
    embedding: Embedding | None = None

    def __bool__(self):
        return self.ok

    def to_dict(self) -> dict:
        out = {"ok": self.ok, "edge_count": self.edge_count}
        if self.failing_edge is not None:
            out["failing_edge"] = list(self.failing_edge)
        if self.embedding is not None:
            out["embedding"] = list(self.embedding.images)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _same_kind(host: AnyGraph, pattern: AnyGraph) -> None:
    if host.kind != pattern.kind:
        raise TypeError(f"host is {host.kind} but pattern is {pattern.kind}")


def _copy_with(kind, pattern, n, adj, u, v) -> list[int] | None:
    """Temporarily add the 0-based pair ``u v`` and look for a copy using it."""
    adj[u] |= 1 << v
    adj[v] |= 1 << u
    try:
        return raw_copy_using(kind, pattern, n, adj, u, v)
    finally:
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)


def _non_edges(n: int, adj) -> Iterator[tuple[int, int]]:
    for u in range(n):
        row = adj[u]
        for v in range(u + 1, n):
            if not row >> v & 1:
                yield u, v


def is_saturating(host: AnyGraph, pattern: AnyGraph) -> Check:
    """Host avoids the pattern and every added edge creates a copy."""
    _same_kind(host, pattern)
    n, adj = host.n, list(host.adjacency)
    phi = raw_contains(host.kind, pattern, n, adj)
    if phi is not None:
        return Check(False, host.m, embedding=Embedding(tuple(p + 1 for p in phi)))
    # the host avoids the pattern, so any copy in host + e must use e
    for u, v in _non_edges(n, adj):
        if _copy_with(host.kind, pattern, n, adj, u, v) is None:
            return Check(False, host.m, failing_edge=(u + 1, v + 1))
    return Check(True, host.m)


def is_semisaturating(host: AnyGraph, pattern: AnyGraph) -> Check:
    """Every added edge creates a copy that uses the new edge."""
    _same_kind(host, pattern)
    n, adj = host.n, list(host.adjacency)
    for u, v in _non_edges(n, adj):
        if _copy_with(host.kind, pattern, n, adj, u, v) is None:
            return Check(False, host.m, failing_edge=(u + 1, v + 1))
    return Check(True, host.m)


def greedy_saturate(host: AnyGraph, pattern: AnyGraph) -> AnyGraph:
    """Add non-edges in lexicographic order whenever they keep the host free
    of the pattern. One pass suffices: a rejected edge stays rejected as the
    host only grows."""
    _same_kind(host, pattern)
    n, adj = host.n, list(host.adjacency)
    if raw_contains(host.kind, pattern, n, adj) is not None:
        raise PreconditionError("host already contains the pattern")
    added = []
    for u, v in list(_non_edges(n, adj)):
        if _copy_with(host.kind, pattern, n, adj, u, v) is None:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            added.append((u + 1, v + 1))
    return host.with_edges(added)


# --------------------------------------------------------------------------
# Witnesses
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class WitnessCertificate:
    pattern: AnyGraph
    witness: AnyGraph
    isolated_anchor: int
    matching_mode: bool

    @property
    def run(self) -> tuple[int, ...]:
        """The isolated vertices that get blown up."""
        a = self.isolated_anchor
        if self.matching_mode:
            return (a,)
        return (a, a % self.witness.n + 1)


def _anchor_runs(host: AnyGraph, width: int) -> Iterator[tuple[int, ...]]:
    deg = host.degrees
    n = host.n
    cyclic = host.kind == "cyclic"
    last = n if cyclic else n - width + 1
    for a in range(1, last + 1):
        run = tuple((a - 1 + t) % n + 1 for t in range(width))
        if len(set(run)) == width and all(deg[x] == 0 for x in run):
            yield run


def _run_ok(host: AnyGraph, pattern: AnyGraph, run: tuple[int, ...]) -> bool:
    n, adj = host.n, list(host.adjacency)
    done = set()
    for r in run:
        for w in range(1, n + 1):
            if w == r:
                continue
            pair = (min(r, w), max(r, w))
            if pair in done:
                continue
            done.add(pair)
            if _copy_with(host.kind, pattern, n, adj, pair[0] - 1, pair[1] - 1) is None:
                return False
    return True


def is_witness(host: AnyGraph, pattern: AnyGraph, matching_mode: bool = False) -> WitnessCertificate | None:
    """Certificate if ``host`` avoids ``pattern`` and every edge touching some
    isolated run (one vertex for matchings, two otherwise) creates a copy."""
    _same_kind(host, pattern)
    if pattern.isolated_vertices():
        raise PreconditionError("witnesses are defined for patterns without isolated vertices")
    if matching_mode and not pattern.is_matching():
        raise PreconditionError("matching mode needs a matching pattern")
    if raw_contains(host.kind, pattern, host.n, host.adjacency) is not None:
        return None
    width = 1 if matching_mode else 2
    for run in _anchor_runs(host, width):
        if _run_ok(host, pattern, run):
            return WitnessCertificate(pattern, host, run[0], matching_mode)
    return None


def verify_certificate(cert: WitnessCertificate) -> bool:
    """Re-check a certificate at its recorded anchor."""
    if cert.witness.kind != cert.pattern.kind:
        return False
    if raw_contains(cert.witness.kind, cert.pattern, cert.witness.n, cert.witness.adjacency) is not None:
        return False
    run = cert.run
    if any(cert.witness.degrees[x] for x in run) or len(set(run)) != len(run):
        return False
    return _run_ok(cert.witness, cert.pattern, run)


def blowup(cert: WitnessCertificate, n: int) -> AnyGraph:
    """Replace the anchor run by enough isolated vertices to reach ``n`` vertices."""
    w = cert.witness
    if n < w.n:
        raise PreconditionError(f"n={n} is below the witness size {w.n}")
    width = len(cert.run)
    extra = n - w.n
    if isinstance(w, CyclicGraph):
        # rotate the run to the front so it never wraps
        shifted = rotate(w, -(cert.isolated_anchor - 1))
        edges = [(u + extra, v + extra) for u, v in shifted.edges]
        return CyclicGraph(n, edges)
    a = cert.isolated_anchor
    end = a + width - 1

    def move(x):
        return x + extra if x > end else x

    return OrderedGraph(n, [(move(u), move(v)) for u, v in w.edges])


# --------------------------------------------------------------------------
# Explicit constructions
# --------------------------------------------------------------------------


def linear_host_edge(pattern: OrderedGraph) -> Edge:
    """Lexicographically smallest edge covering no other edge (endpoints may touch)."""
    for u, v in pattern.edges:
        if not any(u <= x and y <= v and (x, y) != (u, v) for x, y in pattern.edges):
            return (u, v)
    raise AssertionError("unreachable: a shortest edge always qualifies")


def linear_host(pattern: OrderedGraph, n: int) -> OrderedGraph:
    """The linear-size saturating host: the first ``a`` and last ``c`` vertices
    are universal and all pairs at distance at most ``b`` are joined, where
    ``a, b, c`` count pattern vertices before, inside and after a minimal edge."""
    if not pattern.edges:
        raise PreconditionError("pattern must have an edge")
    if n <= pattern.n:
        raise PreconditionError(f"n must exceed the pattern size {pattern.n}")
    u, v = linear_host_edge(pattern)
    a, b, c = u - 1, v - u - 1, pattern.n - v
    edges = set()
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if i <= a or j > n - c or j - i <= b:
                edges.add((i, j))
    return OrderedGraph(n, edges)


def hitting_interval_length(pattern: CyclicGraph) -> int:
    """Shortest run of cyclically consecutive vertices touching every edge."""
    n = pattern.n
    for s in range(1, n + 1):
        for start in range(1, n + 1):
            block = {(start - 1 + t) % n + 1 for t in range(s)}
            if all(u in block or v in block for u, v in pattern.edges):
                return s
    return n


def cyclic_linear_host(pattern: CyclicGraph, n: int) -> CyclicGraph:
    """Join the first ``s - 1`` vertices to everything, then saturate greedily."""
    if not pattern.edges:
        raise PreconditionError("pattern must have an edge")
    if n <= pattern.n:
        raise PreconditionError(f"n must exceed the pattern size {pattern.n}")
    s = hitting_interval_length(pattern)
    hub = range(1, s)
    edges = {(i, j) for i in hub for j in range(i + 1, n + 1)}
    return greedy_saturate(CyclicGraph(n, edges), pattern)


def semisat_blocks(pattern: OrderedGraph) -> tuple[int, int]:
    """Sizes of the two clique blocks of the bounded semisaturating host."""
    if not all(semisat_conditions(pattern)):
        raise PreconditionError("pattern lacks a minedge or a degree-one end partner")
    k = pattern.n
    deg = pattern.degrees
    m1, m2 = minedges(pattern)[0]
    u2 = min(w for w in pattern.neighbors(1) if deg[w] == 1)
    v1 = max(w for w in pattern.neighbors(k) if deg[w] == 1)
    return max(u2 + m1 - 3, v1 - 1), max(2 * k - v1 - m2 - 1, k - u2)


def semisat_host(pattern: OrderedGraph, n: int) -> OrderedGraph:
    """Cliques on the first and last blocks, completely joined to each other."""
    b1, b2 = semisat_blocks(pattern)
    if n < b1 + b2 + 1:
        raise PreconditionError(f"n={n} too small; need at least {b1 + b2 + 1}")
    block = list(range(1, b1 + 1)) + list(range(n - b2 + 1, n + 1))
    return OrderedGraph(n, [(x, y) for i, x in enumerate(block) for y in block[i + 1:]])


def semisat_host_cyclic(pattern: CyclicGraph, n: int) -> CyclicGraph:
    """A clique on ``2k - 4`` consecutive vertices, everything else isolated."""
    if not cyclic_minedges(pattern):
        raise PreconditionError("pattern has no cyclic minedge")
    size = max(0, 2 * pattern.n - 4)
    if n <= size:
        raise PreconditionError(f"n={n} too small; need more than {size}")
    return CyclicGraph(n, [(x, y) for x in range(1, size + 1) for y in range(x + 1, size + 1)])
