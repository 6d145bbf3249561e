"""Brute-force reference implementations.

Each function here is deliberately naive and shares no code with the fast
paths it is used to check: plain sets and subset scans only.
"""

from __future__ import annotations

from itertools import combinations
from typing import Optional

from .graph import SimpleGraph


def _adj_sets(G: SimpleGraph) -> list[set[int]]:
    adj: list[set[int]] = [set() for _ in range(G.n)]
    for u, v in G.edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def _components(vertices: set[int], adj: list[set[int]]) -> int:
    seen: set[int] = set()
    count = 0
    for start in vertices:
        if start in seen:
            continue
        count += 1
        stack = [start]
        seen.add(start)
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y in vertices and y not in seen:
                    seen.add(y)
                    stack.append(y)
    return count


def disconnects(G: SimpleGraph, removed) -> bool:
    """True when deleting ``removed`` leaves at least two components."""
    rest = set(range(G.n)) - set(removed)
    return _components(rest, _adj_sets(G)) >= 2


def naive_clique_count(G: SimpleGraph, t: int) -> int:
    adj = _adj_sets(G)
    return sum(
        1
        for subset in combinations(range(G.n), t)
        if all(b in adj[a] for a, b in combinations(subset, 2))
    )


def naive_census(G: SimpleGraph) -> list[int]:
    """Counts for t = 0.. up to and including the first zero level."""
    counts = []
    t = 0
    while True:
        c = naive_clique_count(G, t)
        counts.append(c)
        if c == 0:
            return counts
        t += 1


def naive_kappa(G: SimpleGraph) -> tuple[int, Optional[frozenset]]:
    """Smallest vertex set whose removal disconnects G; (n-1, None) if none exists."""
    adj = _adj_sets(G)
    everything = set(range(G.n))
    for k in range(G.n - 1):
        for cut in combinations(range(G.n), k):
            rest = everything - set(cut)
            if len(rest) >= 2 and _components(rest, adj) >= 2:
                return k, frozenset(cut)
    return G.n - 1, None


def naive_separators(G: SimpleGraph, size: int = 3) -> set[frozenset]:
    adj = _adj_sets(G)
    everything = set(range(G.n))
    return {
        frozenset(s)
        for s in combinations(range(G.n), size)
        if _components(everything - set(s), adj) >= 2
    }


def rotation_flood_sides(d, cycle) -> tuple[frozenset, frozenset]:
    """Sides of a cycle's curve from local rotations plus flooding.

    At each curve vertex the neighbours strictly between the outgoing and the
    incoming curve neighbour (counterclockwise) seed the left side, the rest
    seed the right side; both sides are then flooded through the planarized
    graph with the curve removed. No face tracing is involved.
    """
    n = d.n
    crossing_at = {}
    for j, (e1, e2) in enumerate(d.crossings):
        for e in (e1, e2):
            crossing_at[frozenset(d.edge_list[e])] = n + j
    curve = []
    k = len(cycle)
    for i in range(k):
        a, b = cycle[i], cycle[(i + 1) % k]
        curve.append(a)
        if frozenset((a, b)) in crossing_at:
            curve.append(crossing_at[frozenset((a, b))])
    on_curve = set(curve)
    left: set[int] = set()
    right: set[int] = set()
    for i, p in enumerate(curve):
        prev, nxt = curve[i - 1], curve[(i + 1) % len(curve)]
        rot = list(d.rotation[p])
        start = rot.index(nxt)
        ordered = rot[start:] + rot[:start]
        stop = ordered.index(prev)
        left.update(w for w in ordered[1:stop] if w not in on_curve)
        right.update(w for w in ordered[stop + 1 :] if w not in on_curve)

    def flood(seed: set[int]) -> set[int]:
        seen = set(seed)
        stack = list(seed)
        while stack:
            x = stack.pop()
            for y in d.rotation[x]:
                if y not in on_curve and y not in seen:
                    seen.add(y)
                    stack.append(y)
        return seen

    lset, rset = flood(left), flood(right)
    if lset & rset:
        raise AssertionError(f"flooding reached {sorted(lset & rset)} from both sides")
    real_l = frozenset(v for v in lset if v < n)
    real_r = frozenset(v for v in rset if v < n)
    return tuple(sorted((real_l, real_r), key=lambda s: (not s, min(s) if s else 0)))
