"""Abstract simple graphs: clique counting, vertex connectivity, 3-separators.

Vertices are the integers ``0..n-1``. Neighborhoods are kept both as sorted
tuples and as integer bitmasks; the bitmasks carry the inner loops of the
clique and separator scans.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Optional, Sequence


class GraphError(ValueError):
    """Raised for malformed graph input (loops, duplicates, bad endpoints)."""


@dataclass(frozen=True)
class SimpleGraph:
    n: int
    edges: frozenset
    adjacency: tuple = field(repr=False)
    masks: tuple = field(repr=False, compare=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def is_connected(self) -> bool:
        return _is_connected_mask(self.masks, (1 << self.n) - 1)

    def subgraph_without(self, removed: Iterable[int]) -> "SimpleGraph":
        """Same vertex ids, all edges touching ``removed`` dropped."""
        gone = set(removed)
        return build_graph(self.n, [e for e in self.edges if e[0] not in gone and e[1] not in gone])


def build_graph(n: int, edge_list: Iterable[Sequence[int]]) -> SimpleGraph:
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    seen: set[tuple[int, int]] = set()
    adj: list[list[int]] = [[] for _ in range(n)]
    for pair in edge_list:
        u, v = int(pair[0]), int(pair[1])
        if u == v:
            raise GraphError(f"loop edge ({u},{v})")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u},{v}) has endpoint outside 0..{n - 1}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise GraphError(f"duplicate edge ({u},{v})")
        seen.add(key)
        adj[u].append(v)
        adj[v].append(u)
    adjacency = tuple(tuple(sorted(a)) for a in adj)
    masks = tuple(sum(1 << w for w in a) for a in adjacency)
    return SimpleGraph(n=n, edges=frozenset(seen), adjacency=adjacency, masks=masks)


def complete_graph(n: int) -> SimpleGraph:
    return build_graph(n, combinations(range(n), 2))


# ---------------------------------------------------------------------------
# Bitmask helpers
# ---------------------------------------------------------------------------


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _component_count_mask(masks: Sequence[int], alive: int) -> int:
    count = 0
    rest = alive
    while rest:
        frontier = rest & -rest
        reached = frontier
        while frontier:
            grow = 0
            for v in _bits(frontier):
                grow |= masks[v]
            frontier = grow & alive & ~reached
            reached |= frontier
        rest &= ~reached
        count += 1
    return count


def _is_connected_mask(masks: Sequence[int], alive: int) -> bool:
    return _component_count_mask(masks, alive) <= 1


# ---------------------------------------------------------------------------
# Cliques
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CliqueCensus:
    counts: tuple[int, ...]
    total: int

    def __getitem__(self, t: int) -> int:
        return self.counts[t] if t < len(self.counts) else 0


def degeneracy_order(G: SimpleGraph) -> list[int]:
    """Smallest-last ordering; ties broken by vertex id."""
    deg = G.degrees()
    removed = [False] * G.n
    order: list[int] = []
    for _ in range(G.n):
        v = min((d, v) for v, d in enumerate(deg) if not removed[v])[1]
        removed[v] = True
        order.append(v)
        for w in G.adjacency[v]:
            if not removed[w]:
                deg[w] -= 1
    return order


def _forward_masks(G: SimpleGraph) -> tuple[list[int], list[int]]:
    order = degeneracy_order(G)
    pos = [0] * G.n
    for i, v in enumerate(order):
        pos[v] = i
    later = [0] * G.n
    for v in range(G.n):
        later[v] = sum(1 << w for w in G.adjacency[v] if pos[w] > pos[v])
    return order, later


def iter_cliques(G: SimpleGraph, t: int) -> Iterator[tuple[int, ...]]:
    """Yield every t-clique once, as a sorted tuple."""
    if t < 0:
        raise ValueError("clique size must be nonnegative")
    if t == 0:
        yield ()
        return
    order, later = _forward_masks(G)

    def grow(clique: list[int], cand: int) -> Iterator[tuple[int, ...]]:
        if len(clique) == t:
            yield tuple(sorted(clique))
            return
        for u in _bits(cand):
            clique.append(u)
            yield from grow(clique, cand & later[u])
            clique.pop()

    for v in order:
        yield from grow([v], later[v])


def count_cliques(G: SimpleGraph, t: int) -> int:
    if t < 0:
        raise ValueError("clique size must be nonnegative")
    if t == 0:
        return 1
    if t == 1:
        return G.n
    if t == 2:
        return G.m
    return sum(1 for _ in iter_cliques(G, t))


def clique_census(G: SimpleGraph, t_max: int = 6) -> CliqueCensus:
    if t_max < 2:
        raise ValueError("t_max must be at least 2")
    _, later = _forward_masks(G)
    counts = [1]

    def grow(size: int, cand: int) -> None:
        while len(counts) <= size:
            counts.append(0)
        counts[size] += 1
        for u in _bits(cand):
            grow(size + 1, cand & later[u])

    for v in range(G.n):
        grow(1, later[v])
    # pad to t_max, then at least one trailing zero level
    while len(counts) < t_max + 1 or counts[-1] != 0:
        counts.append(0)
    return CliqueCensus(counts=tuple(counts), total=sum(counts))


# ---------------------------------------------------------------------------
# Vertex connectivity
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ConnectivityReport:
    kappa: int
    witness: Optional[frozenset]


def _local_cut(G: SimpleGraph, s: int, t: int, limit: int) -> tuple[int, frozenset]:
    """Max number of internally disjoint s-t paths (s, t non-adjacent), capped at ``limit``.

    Unit-capacity flow on the split graph: node 2v is v_in, 2v+1 is v_out.
    Returns the flow value and, when it is below ``limit``, a minimum separating set.
    """
    cap: dict[tuple[int, int], int] = {}
    out: list[list[int]] = [[] for _ in range(2 * G.n)]

    def arc(a: int, b: int, c: int) -> None:
        if (a, b) not in cap:
            out[a].append(b)
            out[b].append(a)
            cap[(a, b)] = 0
            cap.setdefault((b, a), 0)
        cap[(a, b)] += c

    big = G.n
    for v in range(G.n):
        arc(2 * v, 2 * v + 1, big if v in (s, t) else 1)
        for w in G.adjacency[v]:
            arc(2 * v + 1, 2 * w, big)

    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while flow < limit:
        prev = {source: source}
        queue = deque([source])
        while queue and sink not in prev:
            a = queue.popleft()
            for b in out[a]:
                if b not in prev and cap[(a, b)] > 0:
                    prev[b] = a
                    queue.append(b)
        if sink not in prev:
            break
        b = sink
        while b != source:
            a = prev[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1

    if flow >= limit:
        return flow, frozenset()
    reach = {source}
    queue = deque([source])
    while queue:
        a = queue.popleft()
        for b in out[a]:
            if b not in reach and cap[(a, b)] > 0:
                reach.add(b)
                queue.append(b)
    cut = frozenset(v for v in range(G.n) if 2 * v in reach and 2 * v + 1 not in reach)
    return flow, cut


def vertex_connectivity(G: SimpleGraph) -> ConnectivityReport:
    """Vertex connectivity by Menger flows.

    Schedule (Esfahanian-Hakimi): a minimum-degree vertex ``v`` against each of
    its non-neighbours, plus every non-adjacent pair of neighbours of ``v``.
    """
    if G.n < 1:
        raise ValueError("vertex connectivity needs n >= 1")
    if G.is_complete():
        return ConnectivityReport(kappa=G.n - 1, witness=None)
    if not G.is_connected():
        return ConnectivityReport(kappa=0, witness=frozenset())

    degs = G.degrees()
    v = min(range(G.n), key=lambda x: (degs[x], x))
    best = degs[v]
    witness = frozenset(G.adjacency[v])  # valid: G is not complete and v has a non-neighbour

    pairs = [(v, w) for w in range(G.n) if w != v and not G.has_edge(v, w)]
    nbrs = G.adjacency[v]
    pairs += [(a, b) for a, b in combinations(nbrs, 2) if not G.has_edge(a, b)]
    for s, t in pairs:
        value, cut = _local_cut(G, s, t, best)
        if value < best:
            best, witness = value, cut
    return ConnectivityReport(kappa=best, witness=witness)


# ---------------------------------------------------------------------------
# 3-separators
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SeparatorCensus:
    separators: tuple[frozenset, ...]
    s3: int
    disconnected_input: bool = False


def enumerate_3_separators(G: SimpleGraph) -> SeparatorCensus:
    """Every 3-set whose removal leaves at least two components (triple scan)."""
    if G.n < 4:
        raise GraphError("graph too small for 3-separators (n < 4)")
    full = (1 << G.n) - 1
    found = []
    for a, b, c in combinations(range(G.n), 3):
        alive = full & ~((1 << a) | (1 << b) | (1 << c))
        if _component_count_mask(G.masks, alive) >= 2:
            found.append(frozenset((a, b, c)))
    return SeparatorCensus(
        separators=tuple(found), s3=len(found), disconnected_input=not G.is_connected()
    )
