"""Ordered and cyclically ordered graphs, family generators and the .og format.

Vertices are always ``1..n``. Edges are stored as sorted ``(u, v)`` pairs with
``u < v``; for cyclic graphs the pair order carries no meaning beyond
canonical storage.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterable, Iterator, Sequence, Union

Edge = tuple[int, int]


class GraphFormatError(ValueError):
    """Malformed .og input. ``lineno`` is 1-based, or None for whole-file issues."""

    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


def _canonical_edges(n: int, edges: Iterable[Sequence[int]]) -> tuple[Edge, ...]:
    seen: set[Edge] = set()
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        if u > v:
            u, v = v, u
        if u < 1 or v > n:
            raise ValueError(f"edge ({u}, {v}) out of range 1..{n}")
        if (u, v) in seen:
            raise ValueError(f"duplicate edge ({u}, {v})")
        seen.add((u, v))
    return tuple(sorted(seen))


@dataclass(frozen=True)
class _Graph:
    n: int
    edges: tuple[Edge, ...] = ()

    kind = "abstract"

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("vertex count must be positive")
        object.__setattr__(self, "edges", _canonical_edges(self.n, self.edges))

    def __repr__(self):
        return f"{type(self).__name__}(n={self.n}, edges={list(self.edges)})"

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        """Degrees indexed by vertex; index 0 is unused and always 0."""
        deg = [0] * (self.n + 1)
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return tuple(deg)

    def degree(self, v: int) -> int:
        return self.degrees[v]

    @cached_property
    def adjacency(self) -> tuple[int, ...]:
        """Neighbourhood bitmasks over 0-based vertex indices."""
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u - 1] |= 1 << (v - 1)
            adj[v - 1] |= 1 << (u - 1)
        return tuple(adj)

    def neighbors(self, v: int) -> list[int]:
        mask = self.adjacency[v - 1]
        return [i + 1 for i in range(self.n) if mask >> i & 1]

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self.edge_set

    def non_edges(self) -> Iterator[Edge]:
        """All absent pairs in lexicographic order."""
        es = self.edge_set
        for u in range(1, self.n + 1):
            for v in range(u + 1, self.n + 1):
                if (u, v) not in es:
                    yield (u, v)

    def isolated_vertices(self) -> list[int]:
        return [v for v in range(1, self.n + 1) if self.degrees[v] == 0]

    def is_matching(self) -> bool:
        return all(d == 1 for d in self.degrees[1:])

    def with_edge(self, u: int, v: int):
        if self.has_edge(u, v):
            raise ValueError(f"edge ({u}, {v}) already present")
        return type(self)(self.n, self.edges + ((u, v),))

    def with_edges(self, extra: Iterable[Edge]):
        return type(self)(self.n, self.edges + tuple(extra))

    def without_edge(self, u: int, v: int):
        if u > v:
            u, v = v, u
        return type(self)(self.n, tuple(e for e in self.edges if e != (u, v)))


class OrderedGraph(_Graph):
    """Graph on ``1..n`` with the natural linear vertex order."""

    kind = "ordered"

    def mirror(self) -> "OrderedGraph":
        n = self.n
        return OrderedGraph(n, [(n + 1 - v, n + 1 - u) for u, v in self.edges])

    def to_cyclic(self) -> "CyclicGraph":
        return CyclicGraph(self.n, self.edges)


class CyclicGraph(_Graph):
    """Graph on ``1..n`` arranged clockwise on a circle."""

    kind = "cyclic"

    def to_ordered(self) -> OrderedGraph:
        """Cut the circle between ``n`` and ``1``."""
        return OrderedGraph(self.n, self.edges)

    def rotations(self) -> Iterator["CyclicGraph"]:
        for r in range(self.n):
            yield rotate(self, r)


AnyGraph = Union[OrderedGraph, CyclicGraph]


def rotate(graph: CyclicGraph, r: int) -> CyclicGraph:
    """Relabel ``v -> ((v - 1 + r) mod n) + 1``."""
    n = graph.n
    return CyclicGraph(n, [((u - 1 + r) % n + 1, (v - 1 + r) % n + 1) for u, v in graph.edges])


def same_kind(a: AnyGraph, b: AnyGraph) -> bool:
    return a.kind == b.kind


def relabel_into(graph: AnyGraph, positions: Sequence[int], n: int) -> list[Edge]:
    """Edges of ``graph`` after sending vertex ``i`` to ``positions[i-1]``."""
    return [(positions[u - 1], positions[v - 1]) for u, v in graph.edges]


def induced_ordered(graph: AnyGraph, keep: Sequence[int]) -> OrderedGraph:
    """Ordered subgraph induced on ``keep`` (sorted), relabelled to ``1..len(keep)``."""
    keep = sorted(keep)
    index = {v: i + 1 for i, v in enumerate(keep)}
    return OrderedGraph(
        len(keep), [(index[u], index[v]) for u, v in graph.edges if u in index and v in index]
    )


# --------------------------------------------------------------------------
# Families
# --------------------------------------------------------------------------


def single_edge() -> OrderedGraph:
    return OrderedGraph(2, [(1, 2)])


def complete(k: int) -> OrderedGraph:
    if k < 2:
        raise ValueError("K_k needs k >= 2")
    return OrderedGraph(k, [(u, v) for u in range(1, k + 1) for v in range(u + 1, k + 1)])


def matching_run(k: int) -> OrderedGraph:
    """L_k: k consecutive short edges (2i-1, 2i)."""
    if k < 1:
        raise ValueError("L_k needs k >= 1")
    return OrderedGraph(2 * k, [(2 * i - 1, 2 * i) for i in range(1, k + 1)])


def gamma(k: int) -> OrderedGraph:
    """Gamma_k: the chain of k link edges, each crossing the next."""
    if k < 1:
        raise ValueError("Gamma_k needs k >= 1")
    if k == 1:
        return single_edge()
    edges = [(1, 3)]
    edges += [(2 * i, 2 * i + 3) for i in range(1, k - 1)]
    edges.append((2 * k - 2, 2 * k))
    return OrderedGraph(2 * k, edges)


def _admissible_gap(links: Sequence[Edge], i: int) -> int:
    """Leftmost gap g (between vertices g and g+1) strictly inside link i and
    outside every other link."""
    u, v = links[i]
    for g in range(u, v):
        if all(not (a <= g and g + 1 <= b) for j, (a, b) in enumerate(links) if j != i):
            return g
    raise ValueError(f"link edge {i + 1} has no admissible gap")


def linked_matching(ms: Sequence[int]) -> OrderedGraph:
    """Gamma_{m_1..m_k}: Gamma_k with an L_{m_i} block inserted in link i."""
    ms = list(ms)
    if not ms:
        raise ValueError("linked matching needs at least one link")
    if any(m < 0 for m in ms):
        raise ValueError("link multiplicities must be non-negative")
    base = gamma(len(ms))
    links = list(base.edges)  # sorted by left endpoint
    gaps = [_admissible_gap(links, i) for i in range(len(ms))]
    # new position of old vertex x: shift by the inserted blocks whose gap lies left of x
    shift = [0] * (base.n + 1)
    for x in range(1, base.n + 1):
        shift[x] = sum(2 * m for g, m in zip(gaps, ms) if g < x)
    edges = [(u + shift[u], v + shift[v]) for u, v in links]
    for g, m in zip(gaps, ms):
        start = g + shift[g]  # position of old vertex g
        edges += [(start + 2 * t - 1, start + 2 * t) for t in range(1, m + 1)]
    return OrderedGraph(base.n + 2 * sum(ms), edges)


def crossed_matching(k: int) -> CyclicGraph:
    """X_k: two crossing long edges (1, n-1), (2, n) around a copy of L_k."""
    if k < 0:
        raise ValueError("X_k needs k >= 0")
    n = 2 * k + 4
    edges = [(1, n - 1), (2, n)] + [(2 + 2 * i - 1, 2 + 2 * i) for i in range(1, k + 1)]
    return CyclicGraph(n, edges)


FAMILIES = {
    "edge": "single edge",
    "K": "complete graph K_k",
    "L": "matching L_k",
    "gamma": "linked chain Gamma_k",
    "gamma-linked": "linked matching Gamma_{m1,...,mk}",
    "X": "cyclic matching X_k",
}


def generate(family: str, *params, cyclic: bool | None = None) -> AnyGraph:
    """Build a named family member.

    ``X`` is cyclic by default, everything else ordered; pass ``cyclic`` to
    override.
    """
    ints = [int(p) for p in params]
    if family == "edge":
        g = single_edge()
    elif family == "K":
        g = complete(*ints)
    elif family == "L":
        g = matching_run(*ints)
    elif family == "gamma":
        g = gamma(*ints)
    elif family == "gamma-linked":
        g = linked_matching(ints)
    elif family == "X":
        g = crossed_matching(*ints)
    else:
        raise ValueError(f"unknown family {family!r}")
    if cyclic is None:
        return g
    if cyclic and isinstance(g, OrderedGraph):
        return g.to_cyclic()
    if not cyclic and isinstance(g, CyclicGraph):
        return g.to_ordered()
    return g


# --------------------------------------------------------------------------
# Composite constructions
# --------------------------------------------------------------------------


def _isolated_edge_at(graph: OrderedGraph, v: int) -> Edge | None:
    for u, w in graph.edges:
        if v in (u, w) and graph.degrees[u] == 1 and graph.degrees[w] == 1:
            return (u, w)
    return None


def xshape_parts(graph: OrderedGraph) -> tuple[OrderedGraph, OrderedGraph]:
    """(G minus the isolated edge at vertex 1, G minus the one at vertex n)."""
    n = graph.n
    first = _isolated_edge_at(graph, 1)
    last = _isolated_edge_at(graph, n)
    if first is None:
        raise ValueError("first vertex is not on an isolated edge")
    if last is None:
        raise ValueError("last vertex is not on an isolated edge")
    if first == last or n < 4:
        raise ValueError("first and last isolated edges must be distinct")
    left = induced_ordered(graph, [v for v in range(1, n + 1) if v not in first])
    right = induced_ordered(graph, [v for v in range(1, n + 1) if v not in last])
    return left, right


def overlay(left: OrderedGraph, right: OrderedGraph, overlap: int) -> OrderedGraph:
    """Place ``left`` on the first vertices and ``right`` on the last vertices,
    sharing ``overlap`` vertices."""
    n = left.n + right.n - overlap
    off = left.n - overlap
    edges = set(left.edges)
    edges.update((u + off, v + off) for u, v in right.edges)
    return OrderedGraph(n, edges)


def xshape(graph: OrderedGraph) -> OrderedGraph:
    """The X-shape of G on 2n-6 vertices: G' on the first n-2 vertices overlaid
    with G'' on the last n-2 vertices."""
    g1, g2 = xshape_parts(graph)
    return overlay(g1, g2, 2)


def yx_member(g1: OrderedGraph, a: OrderedGraph, g2: OrderedGraph, i: int, j: int) -> OrderedGraph:
    """One member of the family G1 y A x G2, fixed by the attachment vertices i, j."""
    n1, n0, n2 = g1.n, a.n, g2.n
    lo, hi = n1, n1 + n0 - 1
    for name, x in (("i", i), ("j", j)):
        if not lo <= x <= hi:
            raise ValueError(f"{name}={x} outside admissible range {lo}..{hi}")
    n = n1 + n0 + n2 - 2
    pos1 = list(range(1, n1)) + [i]
    pos0 = list(range(n1, n1 + n0))
    pos2 = [j] + list(range(n1 + n0, n + 1))
    edges = set(relabel_into(g1, pos1, n))
    edges.update(relabel_into(a, pos0, n))
    edges.update((min(e), max(e)) for e in relabel_into(g2, pos2, n))
    return OrderedGraph(n, edges)


def yx_family(g1: OrderedGraph, a: OrderedGraph, g2: OrderedGraph) -> list[OrderedGraph]:
    rng = range(g1.n, g1.n + a.n)
    return [yx_member(g1, a, g2, i, j) for i, j in product(rng, rng)]


# --------------------------------------------------------------------------
# .og format
# --------------------------------------------------------------------------


def parse_graph(text: str) -> AnyGraph:
    """Parse .og text: a header ``ordered n=N`` / ``cyclic n=N`` then ``u v`` lines."""
    header = None
    edges: list[Edge] = []
    seen: dict[Edge, int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if header is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] not in ("ordered", "cyclic") or not parts[1].startswith("n="):
                raise GraphFormatError(f"bad header {line!r}", lineno)
            try:
                n = int(parts[1][2:])
            except ValueError:
                raise GraphFormatError(f"bad vertex count {parts[1]!r}", lineno) from None
            if n < 1:
                raise GraphFormatError("vertex count must be positive", lineno)
            header = (parts[0], n)
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"non-integer vertex in {line!r}", lineno) from None
        n = header[1]
        if u == v:
            raise GraphFormatError(f"loop at vertex {u}", lineno)
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphFormatError(f"vertex out of range 1..{n} in {line!r}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(f"duplicate edge {key} (first on line {seen[key]})", lineno)
        seen[key] = lineno
        edges.append(key)
    if header is None:
        raise GraphFormatError("missing header")
    cls = OrderedGraph if header[0] == "ordered" else CyclicGraph
    return cls(header[1], edges)


def serialize(graph: AnyGraph) -> str:
    lines = [f"{graph.kind} n={graph.n}"]
    lines += [f"{u} {v}" for u, v in graph.edges]
    return "\n".join(lines) + "\n"


def read_graph(path) -> AnyGraph:
    with open(path) as fh:
        return parse_graph(fh.read())


def write_graph(graph: AnyGraph, path) -> None:
    with open(path, "w") as fh:
        fh.write(serialize(graph))
