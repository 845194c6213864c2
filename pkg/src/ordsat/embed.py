"""Order-preserving subgraph containment.

All searches run on bitmask adjacency (one Python int per host vertex). A
pattern vertex ``x`` placed at host position ``p`` forces every other pattern
vertex ``y`` into ``p + (y - x)`` or beyond on the matching side, so each
candidate set is a range mask intersected with the neighbourhoods of already
placed pattern neighbours.

Cyclic containment is linear containment in the doubled host (vertices
``0..2n-1`` where ``i`` and ``i+n`` are the same vertex) with the first pattern
vertex in ``0..n-1`` and the whole image spanning fewer than ``n`` positions.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .graphcore import AnyGraph, CyclicGraph, Edge, OrderedGraph, rotate

__all__ = [
    "Embedding",
    "contains",
    "contains_ordered",
    "contains_cyclic",
    "creates_new_copy",
    "find_copy_using",
    "rotate",
]


@dataclass(frozen=True)
class Embedding:
    """``images[i]`` is the host vertex of pattern vertex ``i + 1`` (1-based)."""

    images: tuple[int, ...]

    @property
    def map(self) -> dict[int, int]:
        return {i + 1: h for i, h in enumerate(self.images)}

    def edge_images(self, pattern: AnyGraph) -> list[Edge]:
        out = []
        for u, v in pattern.edges:
            a, b = self.images[u - 1], self.images[v - 1]
            out.append((min(a, b), max(a, b)))
        return out


# --------------------------------------------------------------------------
# Host views
# --------------------------------------------------------------------------


class _Host:
    """Bitmask adjacency plus degree-threshold masks."""

    __slots__ = ("n", "adj", "_deg_masks")

    def __init__(self, n: int, adj: Sequence[int]):
        self.n = n
        self.adj = adj
        self._deg_masks: list[int] | None = None

    def deg_mask(self, d: int) -> int:
        if self._deg_masks is None:
            degs = [bin(a).count("1") for a in self.adj]
            top = max(degs, default=0)
            masks = [0] * (top + 2)
            for i, dg in enumerate(degs):
                bit = 1 << i
                for t in range(dg + 1):
                    masks[t] |= bit
            self._deg_masks = masks
        masks = self._deg_masks
        return masks[d] if d < len(masks) else 0


def _span(lo: int, hi: int) -> int:
    """Bits ``lo..hi-1``."""
    return ((1 << hi) - 1) ^ ((1 << lo) - 1) if hi > lo else 0


def _doubled(n: int, adj: Sequence[int]) -> list[int]:
    out = [0] * (2 * n)
    for i, a in enumerate(adj):
        both = a | (a << n)
        # only pairs less than n apart are real host pairs
        out[i] = both & (_span(0, i) | _span(i + 1, i + n))
        out[i + n] = both & (_span(i + 1, i + n) | _span(i + n + 1, 2 * n))
    return out


# --------------------------------------------------------------------------
# Pattern preparation
# --------------------------------------------------------------------------


class _Pattern:
    __slots__ = ("k", "adj", "deg", "edges", "_plans")

    def __init__(self, graph: AnyGraph):
        self.k = graph.n
        self.adj = graph.adjacency
        self.deg = graph.degrees[1:]
        self.edges = [(u - 1, v - 1) for u, v in graph.edges]
        self._plans: dict[tuple, tuple] = {}

    def plan(self, first: tuple[int, ...]) -> tuple:
        """Assignment order starting with ``first``, then greedily the vertex
        with most placed neighbours (ties to the left). Returns (order, prior
        neighbour lists)."""
        plan = self._plans.get(first)
        if plan is not None:
            return plan
        k, adj = self.k, self.adj
        order = list(first)
        placed = 0
        for x in order:
            placed |= 1 << x
        rest = [x for x in range(k) if not placed >> x & 1]
        if not first:
            order = list(range(k))
        else:
            while rest:
                best = max(rest, key=lambda x: (bin(adj[x] & placed).count("1"), -x))
                rest.remove(best)
                order.append(best)
                placed |= 1 << best
        prior = []
        seen = 0
        for x in order:
            prior.append(tuple(y for y in range(k) if seen >> y & 1 and adj[x] >> y & 1))
            seen |= 1 << x
        plan = (tuple(order), tuple(prior))
        self._plans[first] = plan
        return plan


@lru_cache(maxsize=512)
def _prepare(graph: AnyGraph) -> _Pattern:
    return _Pattern(graph)


def _search(pat: _Pattern, host: _Host, plan: tuple, domains: Sequence[int] | None,
            window: int | None) -> list[int] | None:
    k = pat.k
    hn = host.n
    if k > hn:
        return None
    order, prior = plan
    hadj = host.adj
    pdeg = pat.deg
    phi = [-1] * k
    last = k - 1

    def rec(t: int) -> bool:
        if t == k:
            return True
        x = order[t]
        lo = x
        hi = hn - k + x
        p = x - 1
        while p >= 0 and phi[p] < 0:
            p -= 1
        if p >= 0:
            lo = max(lo, phi[p] + x - p)
        q = x + 1
        while q < k and phi[q] < 0:
            q += 1
        if q < k:
            hi = min(hi, phi[q] - (q - x))
        if window is not None:
            if phi[0] >= 0:
                hi = min(hi, phi[0] + window - (last - x))
            if phi[last] >= 0:
                lo = max(lo, phi[last] - window + x)
        if lo > hi:
            return False
        mask = ((1 << (hi + 1)) - 1) ^ ((1 << lo) - 1)
        d = pdeg[x]
        if d:
            mask &= host.deg_mask(d)
        if domains is not None:
            mask &= domains[x]
        for y in prior[t]:
            mask &= hadj[phi[y]]
            if not mask:
                return False
        while mask:
            low = mask & -mask
            phi[x] = low.bit_length() - 1
            if rec(t + 1):
                return True
            mask ^= low
        phi[x] = -1
        return False

    if rec(0):
        return phi
    return None


# --------------------------------------------------------------------------
# Raw-adjacency entry points (used by the search code on mutable hosts)
# --------------------------------------------------------------------------


def raw_contains(kind: str, pattern: AnyGraph, n: int, adj: Sequence[int]) -> list[int] | None:
    """0-based images of a copy of ``pattern`` in the host, or None."""
    pat = _prepare(pattern)
    if kind == "ordered":
        return _search(pat, _Host(n, adj), pat.plan(()), None, None)
    if pat.k > n:
        return None
    host = _Host(2 * n, _doubled(n, adj))
    domains = [(1 << (2 * n)) - 1] * pat.k
    domains[0] = (1 << n) - 1
    phi = _search(pat, host, pat.plan(()), domains, n - 1)
    return None if phi is None else [p % n for p in phi]


def raw_copy_using(kind: str, pattern: AnyGraph, n: int, adj: Sequence[int],
                   u: int, v: int) -> list[int] | None:
    """A copy in the host (which must already contain edge ``u v``, 0-based,
    u < v) whose image uses ``u v`` as some pattern edge."""
    pat = _prepare(pattern)
    if pat.k > n:
        return None
    if kind == "ordered":
        host = _Host(n, adj)
        for a, b in pat.edges:
            if a > u or pat.k - 1 - b > n - 1 - v or b - a > v - u:
                continue
            domains = [-1] * pat.k
            domains[a] = 1 << u
            domains[b] = 1 << v
            phi = _search(pat, host, pat.plan((a, b)), domains, None)
            if phi is not None:
                return phi
        return None
    host = _Host(2 * n, _doubled(n, adj))
    full = (1 << (2 * n)) - 1
    for a, b in pat.edges:
        for x, y in ((u, v), (v, u)):
            domains = [full] * pat.k
            domains[0] = (1 << n) - 1
            domains[a] &= (1 << x) | (1 << (x + n))
            domains[b] &= (1 << y) | (1 << (y + n))
            phi = _search(pat, host, pat.plan((a, b)), domains, n - 1)
            if phi is not None:
                return [p % n for p in phi]
    return None


# --------------------------------------------------------------------------
# Public API
# --------------------------------------------------------------------------


def _check_kinds(host: AnyGraph, pattern: AnyGraph) -> None:
    if host.kind != pattern.kind:
        raise TypeError(f"host is {host.kind} but pattern is {pattern.kind}")


def _to_embedding(phi: list[int] | None) -> Embedding | None:
    if phi is None:
        return None
    return Embedding(tuple(p + 1 for p in phi))


def contains_ordered(host: OrderedGraph, pattern: OrderedGraph) -> Embedding | None:
    """Lexicographically smallest increasing embedding of ``pattern`` into ``host``."""
    _check_kinds(host, pattern)
    return _to_embedding(raw_contains("ordered", pattern, host.n, host.adjacency))


def contains_cyclic(host: CyclicGraph, pattern: CyclicGraph) -> Embedding | None:
    """An embedding preserving the clockwise orientation, or None."""
    _check_kinds(host, pattern)
    return _to_embedding(raw_contains("cyclic", pattern, host.n, host.adjacency))


def contains(host: AnyGraph, pattern: AnyGraph) -> Embedding | None:
    _check_kinds(host, pattern)
    return _to_embedding(raw_contains(host.kind, pattern, host.n, host.adjacency))


def find_copy_using(host: AnyGraph, edge: Edge, pattern: AnyGraph) -> Embedding | None:
    """A copy of ``pattern`` in ``host + edge`` that maps a pattern edge onto ``edge``."""
    _check_kinds(host, pattern)
    u, v = sorted(edge)
    if host.has_edge(u, v):
        raise ValueError(f"edge ({u}, {v}) is already in the host")
    adj = list(host.adjacency)
    adj[u - 1] |= 1 << (v - 1)
    adj[v - 1] |= 1 << (u - 1)
    return _to_embedding(raw_copy_using(host.kind, pattern, host.n, adj, u - 1, v - 1))


def creates_new_copy(host: AnyGraph, edge: Edge, pattern: AnyGraph) -> bool:
    return find_copy_using(host, edge, pattern) is not None
