"""Exact saturation numbers by exhaustive search, and bounded witness search.

Hosts are enumerated as sorted edge lists over the lexicographic pair order,
with iterative deepening on the edge count so the first success is a certified
minimum. Saturation searches prune a branch as soon as the newest edge creates
a copy of the pattern; since the host avoided the pattern before, any new copy
must use that edge, so one pinned search per step is enough.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations_with_replacement
from pathlib import Path
from typing import Iterator

from . import __version__
from .embed import raw_contains, raw_copy_using
from .graphcore import (
    AnyGraph,
    CyclicGraph,
    OrderedGraph,
    overlay,
    parse_graph,
    read_graph,
    rotate,
    serialize,
    write_graph,
    xshape_parts,
)
from .saturate import PreconditionError, WitnessCertificate, _copy_with, is_witness, verify_certificate

STRATEGIES = ("full", "xshape-template")
DEFAULT_NODES = 10**8


class BudgetExhausted(RuntimeError):
    """The node cap ran out before the search could settle the question."""

    def __init__(self, nodes: int):
        super().__init__(f"node budget exhausted after {nodes} nodes")
        self.nodes = nodes


@dataclass(frozen=True)
class SearchBudget:
    max_vertices: int = 24
    max_edges: int = 12
    max_nodes: int = DEFAULT_NODES
    strategy: str = "xshape-template"

    def __post_init__(self):
        if self.strategy == "xshape":
            object.__setattr__(self, "strategy", "xshape-template")
        if self.strategy not in STRATEGIES:
            raise ValueError(f"unknown strategy {self.strategy!r}; expected one of {STRATEGIES}")
        for name in ("max_vertices", "max_edges", "max_nodes"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")


class _Counter:
    __slots__ = ("used", "cap")

    def __init__(self, cap: int):
        self.used = 0
        self.cap = cap

    def tick(self) -> None:
        self.used += 1
        if self.used > self.cap:
            raise BudgetExhausted(self.used)


@dataclass(frozen=True)
class ExactResult:
    value: int
    host: AnyGraph
    nodes: int

    def __iter__(self):
        # unpacks as (k, host)
        return iter((self.value, self.host))


# --------------------------------------------------------------------------
# Exhaustive edge-set enumeration
# --------------------------------------------------------------------------


def _graph_class(kind: str):
    return CyclicGraph if kind == "cyclic" else OrderedGraph


class _LevelSearch:
    """All ``k``-edge hosts on ``n`` vertices in lexicographic order."""

    def __init__(self, pattern: AnyGraph, n: int, avoid: bool, counter: _Counter):
        self.kind = pattern.kind
        self.pattern = pattern
        self.n = n
        self.avoid = avoid
        self.counter = counter
        self.pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        self.killers: list[tuple[int, int]] = []

    def _closed(self, adj: list[int]) -> bool:
        """Every non-edge creates a copy through itself."""
        kind, pat, n = self.kind, self.pattern, self.n
        for u, v in self.killers:
            if not adj[u] >> v & 1 and _copy_with(kind, pat, n, adj, u, v) is None:
                return False
        for u, v in self.pairs:
            if not adj[u] >> v & 1 and _copy_with(kind, pat, n, adj, u, v) is None:
                self.killers.insert(0, (u, v))
                del self.killers[6:]
                return False
        return True

    def run(self, k: int, first: int | None = None, collect: list | None = None):
        """First ``k``-edge host (as 1-based edges) or None; with ``collect``,
        append every host and return None. ``first`` fixes the smallest pair."""
        kind, pat, n = self.kind, self.pattern, self.n
        pairs, tick = self.pairs, self.counter.tick
        total = len(pairs)
        adj = [0] * n
        chosen: list[int] = []

        def rec(start: int, left: int):
            tick()
            if left == 0:
                if self._closed(adj):
                    edges = [(pairs[i][0] + 1, pairs[i][1] + 1) for i in chosen]
                    if collect is None:
                        return edges
                    collect.append(edges)
                return None
            stop = total - left + 1
            if first is not None and not chosen:
                indices = [first] if first < stop else []
            else:
                indices = range(start, stop)
            for i in indices:
                u, v = pairs[i]
                adj[u] |= 1 << v
                adj[v] |= 1 << u
                if not (self.avoid and raw_copy_using(kind, pat, n, adj, u, v) is not None):
                    chosen.append(i)
                    found = rec(i + 1, left - 1)
                    chosen.pop()
                    if found is not None:
                        adj[u] &= ~(1 << v)
                        adj[v] &= ~(1 << u)
                        return found
                adj[u] &= ~(1 << v)
                adj[v] &= ~(1 << u)
            return None

        if first is not None and k == 0:
            return None
        return rec(0, k)


def _level_task(args):
    pattern, n, avoid, k, first, cap = args
    counter = _Counter(cap)
    try:
        found = _LevelSearch(pattern, n, avoid, counter).run(k, first)
    except BudgetExhausted:
        return None, counter.used, True
    return found, counter.used, False


def _solve_level(search: _LevelSearch, k: int, workers: int):
    counter = search.counter
    if workers <= 1 or k == 0:
        return search.run(k)
    firsts = range(len(search.pairs) - k + 1)
    cap = counter.cap - counter.used
    jobs = [(search.pattern, search.n, search.avoid, k, f, cap) for f in firsts]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(_level_task, jobs))
    counter.used += sum(r[1] for r in results)
    # the smallest first pair that succeeds wins, exactly as in the serial order
    for found, _, exhausted in results:
        if exhausted:
            raise BudgetExhausted(counter.used)
        if found is not None:
            return found
    if counter.used > counter.cap:
        raise BudgetExhausted(counter.used)
    return None


def _exact(pattern: AnyGraph, n: int, avoid: bool, max_nodes: int, workers: int) -> ExactResult:
    if not pattern.edges:
        raise PreconditionError("pattern must have at least one edge")
    if n < 1:
        raise PreconditionError("n must be positive")
    search = _LevelSearch(pattern, n, avoid, _Counter(max_nodes))
    for k in range(len(search.pairs) + 1):
        edges = _solve_level(search, k, workers)
        if edges is not None:
            return ExactResult(k, _graph_class(pattern.kind)(n, edges), search.counter.used)
    raise AssertionError("the complete host always qualifies")


def exact_sat(pattern: AnyGraph, n: int, max_nodes: int = DEFAULT_NODES, workers: int = 1) -> ExactResult:
    """Minimum edge count of an ``n``-vertex host saturating ``pattern``."""
    return _exact(pattern, n, True, max_nodes, workers)


def exact_ssat(pattern: AnyGraph, n: int, max_nodes: int = DEFAULT_NODES, workers: int = 1) -> ExactResult:
    """Minimum edge count of an ``n``-vertex host semisaturating ``pattern``."""
    return _exact(pattern, n, False, max_nodes, workers)


def _canonical_key(host: AnyGraph, pattern: AnyGraph) -> tuple:
    if isinstance(host, CyclicGraph):
        return min(rotate(host, r).edges for r in range(host.n))
    if pattern.mirror() == pattern:
        return min(host.edges, host.mirror().edges)
    return host.edges


def minimal_saturated_hosts(pattern: AnyGraph, n: int, k: int, max_nodes: int = DEFAULT_NODES) -> list[AnyGraph]:
    """Every ``k``-edge host on ``n`` vertices saturating ``pattern``, one per
    symmetry class (mirror for mirror-symmetric ordered patterns, rotation for
    cyclic ones). The representative is the first host met in enumeration."""
    if not pattern.edges:
        raise PreconditionError("pattern must have at least one edge")
    found: list = []
    _LevelSearch(pattern, n, True, _Counter(max_nodes)).run(k, collect=found)
    cls = _graph_class(pattern.kind)
    out, seen = [], set()
    for edges in found:
        host = cls(n, edges)
        key = _canonical_key(host, pattern)
        if key not in seen:
            seen.add(key)
            out.append(host)
    return out


# --------------------------------------------------------------------------
# Witness search
# --------------------------------------------------------------------------


class _WitnessSearch:
    """DFS over extra edges of a fixed skeleton, keeping the host free of the
    pattern and asking that every pair at the anchor run creates a copy."""

    def __init__(self, pattern: AnyGraph, counter: _Counter, optimistic: bool):
        self.pattern = pattern
        self.kind = pattern.kind
        self.counter = counter
        self.optimistic = optimistic
        self.killers: list[tuple[int, int]] = []

    def _anchor_pairs(self, n: int, run: tuple[int, ...]) -> list[tuple[int, int]]:
        out = set()
        for r in run:
            for w in range(n):
                if w != r:
                    out.add((min(r, w), max(r, w)))
        return sorted(out)

    def _run_ok(self, n: int, adj: list[int], anchor: list[tuple[int, int]]) -> bool:
        kind, pat = self.kind, self.pattern
        for u, v in self.killers:
            if (u, v) in self._anchor_set and _copy_with(kind, pat, n, adj, u, v) is None:
                return False
        for u, v in anchor:
            if _copy_with(kind, pat, n, adj, u, v) is None:
                self.killers.insert(0, (u, v))
                del self.killers[6:]
                return False
        return True

    def search(self, n: int, base_edges, run: tuple[int, ...], extra: int):
        """Add exactly ``extra`` edges (0-based pairs avoiding the run) to the
        skeleton; returns the 1-based edge list of a witness or None."""
        kind, pat, tick = self.kind, self.pattern, self.counter.tick
        adj = [0] * n
        for u, v in base_edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        if raw_contains(kind, pat, n, adj) is not None:
            return None
        blocked = set(run)
        cands = [(u, v) for u in range(n) for v in range(u + 1, n)
                 if u not in blocked and v not in blocked and not adj[u] >> v & 1]
        anchor = self._anchor_pairs(n, run)
        self._anchor_set = set(anchor)
        total = len(cands)
        chosen: list[int] = []
        optimistic = self.optimistic

        def hopeful(start: int) -> bool:
            # the run condition is monotone in the edge set, so test it with
            # every still-available pair switched on
            full = adj[:]
            for u, v in cands[start:]:
                full[u] |= 1 << v
                full[v] |= 1 << u
            return self._run_ok(n, full, anchor)

        def rec(start: int, left: int):
            tick()
            if left == 0:
                return list(chosen) if self._run_ok(n, adj, anchor) else None
            if optimistic and not hopeful(start):
                return None
            for i in range(start, total - left + 1):
                u, v = cands[i]
                adj[u] |= 1 << v
                adj[v] |= 1 << u
                if raw_copy_using(kind, pat, n, adj, u, v) is None:
                    chosen.append(i)
                    found = rec(i + 1, left - 1)
                    chosen.pop()
                    if found is not None:
                        return found
                adj[u] &= ~(1 << v)
                adj[v] &= ~(1 << u)
            return None

        picked = rec(0, extra)
        if picked is None:
            return None
        edges = list(base_edges) + [cands[i] for i in picked]
        return [(u + 1, v + 1) for u, v in edges]


def _template_bases(pattern: OrderedGraph) -> list[OrderedGraph]:
    left, right = xshape_parts(pattern)
    bases = []
    for a, b in ((left, right), (right, left)):
        g = overlay(a, b, 2)
        if g not in bases:
            bases.append(g)
    return bases


def _layouts(base_n: int, width: int, free: int) -> Iterator[tuple[list[int], tuple[int, ...], int]]:
    """Embed a ``base_n``-vertex skeleton into a larger host: an anchor run of
    ``width`` vertices in one gap and ``free`` spare vertices spread over the
    gaps. Yields (base positions, run, host size), all 0-based."""
    n = base_n + width + free
    for spread in combinations_with_replacement(range(base_n + 1), free):
        for gap in range(base_n + 1):
            pos, run = [], ()
            cur = 0
            for g in range(base_n + 1):
                if g == gap:
                    run = tuple(range(cur, cur + width))
                    cur += width
                cur += spread.count(g)
                if g < base_n:
                    pos.append(cur)
                    cur += 1
            yield pos, run, n


def _template_search(pattern: OrderedGraph, budget: SearchBudget, width: int, counter: _Counter):
    if not isinstance(pattern, OrderedGraph):
        raise PreconditionError("the xshape template applies to ordered patterns")
    try:
        bases = _template_bases(pattern)
    except ValueError as err:
        raise PreconditionError(f"xshape template unavailable: {err}") from err
    engine = _WitnessSearch(pattern, counter, optimistic=False)
    smallest = min(b.n for b in bases)
    for free in range(budget.max_vertices - smallest - width + 1):
        for extra in range(budget.max_edges + 1):
            for base in bases:
                if base.n + width + free > budget.max_vertices:
                    continue
                for pos, run, n in _layouts(base.n, width, free):
                    skeleton = [(pos[u - 1], pos[v - 1]) for u, v in base.edges]
                    edges = engine.search(n, skeleton, run, extra)
                    if edges is not None:
                        return OrderedGraph(n, edges)
    return None


def _full_search(pattern: AnyGraph, budget: SearchBudget, width: int, counter: _Counter):
    engine = _WitnessSearch(pattern, counter, optimistic=True)
    cls = _graph_class(pattern.kind)
    for n in range(max(pattern.n, width), budget.max_vertices + 1):
        for extra in range(min(budget.max_edges, n * (n - 1) // 2) + 1):
            # rotations make every anchor position equivalent in the cyclic case
            starts = [0] if pattern.kind == "cyclic" else range(n - width + 1)
            for a in starts:
                run = tuple(range(a, a + width))
                edges = engine.search(n, [], run, extra)
                if edges is not None:
                    return cls(n, edges)
    return None


def search_witness(pattern: AnyGraph, budget: SearchBudget | None = None,
                   matching_mode: bool | None = None) -> WitnessCertificate | None:
    """A verified witness within ``budget``, or None if none was found there.

    The anchor run is a single vertex for matchings and two consecutive
    vertices otherwise, unless ``matching_mode`` says otherwise.
    """
    budget = budget or SearchBudget()
    if pattern.isolated_vertices():
        raise PreconditionError("pattern has isolated vertices")
    if matching_mode is None:
        matching_mode = pattern.is_matching()
    if matching_mode and not pattern.is_matching():
        raise PreconditionError("matching mode needs a matching pattern")
    width = 1 if matching_mode else 2
    counter = _Counter(budget.max_nodes)
    if budget.strategy == "full":
        host = _full_search(pattern, budget, width, counter)
    else:
        host = _template_search(pattern, budget, width, counter)
    if host is None:
        return None
    cert = is_witness(host, pattern, matching_mode)
    if cert is None:
        raise AssertionError(f"search produced a host that fails verification: {host}")
    return cert


# --------------------------------------------------------------------------
# Certificate files
# --------------------------------------------------------------------------


def save_certificate(cert: WitnessCertificate, stem) -> tuple[Path, Path]:
    """Write ``<stem>.og`` (the witness) and ``<stem>.json`` (the sidecar)."""
    stem = Path(stem)
    og, side = stem.with_suffix(".og"), stem.with_suffix(".json")
    write_graph(cert.witness, og)
    meta = {
        "pattern": serialize(cert.pattern),
        "anchor": cert.isolated_anchor,
        "matching_mode": cert.matching_mode,
        "verified": True,
        "tool_version": __version__,
    }
    side.write_text(json.dumps(meta, indent=2, sort_keys=True) + "\n")
    return og, side


def load_certificate(path) -> WitnessCertificate:
    """Read a certificate from its ``.og`` or ``.json`` file and re-verify it."""
    path = Path(path)
    side = path.with_suffix(".json")
    meta = json.loads(side.read_text())
    witness = read_graph(path.with_suffix(".og"))
    pattern = parse_graph(meta["pattern"])
    cert = WitnessCertificate(pattern, witness, int(meta["anchor"]), bool(meta["matching_mode"]))
    if not verify_certificate(cert):
        raise ValueError(f"{side}: certificate does not verify")
    return cert


def load_certificates(directory) -> list[WitnessCertificate]:
    return [load_certificate(p) for p in sorted(Path(directory).glob("*.json"))]
