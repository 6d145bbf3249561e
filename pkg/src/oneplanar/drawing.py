"""Combinatorial 1-plane drawings.

A drawing is stored as its planarization: each crossing becomes a degree-4
vertex ``n + j`` and every planarized vertex carries a counterclockwise
neighbour list. Everything is on the sphere; there is no outer face.

Face walks use one fixed rule: after traversing the segment ``a -> b`` the walk
continues along ``b -> succ_b(a)``, where ``succ_b`` is the rotation successor
at ``b``.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Optional, Sequence

from .graph import GraphError, SimpleGraph, build_graph
from .reports import ASSUMED, COUNTEREXAMPLE, UNMET, IdentityReport, hyp


class DrawingError(ValueError):
    """Raised when raw drawing data violates a 1-plane drawing invariant."""


def canonical_cycle(seq: Sequence[int]) -> tuple[int, ...]:
    """Rotate a cyclic sequence so that its smallest entry comes first."""
    if not seq:
        return ()
    i = min(range(len(seq)), key=seq.__getitem__)
    return tuple(seq[i:]) + tuple(seq[:i])


# ---------------------------------------------------------------------------
# Faces
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Face:
    walk: tuple[int, ...]  # tail of each directed segment, in walk order
    crossed: bool

    @property
    def degree(self) -> int:
        return len(self.walk)

    def darts(self) -> list[tuple[int, int]]:
        w = self.walk
        return [(w[i], w[(i + 1) % len(w)]) for i in range(len(w))]


@dataclass(frozen=True)
class FaceCensus:
    faces: tuple[Face, ...]

    @property
    def f3(self) -> int:
        return sum(1 for f in self.faces if f.degree == 3)

    @property
    def f4(self) -> int:
        return sum(1 for f in self.faces if f.degree == 4)

    @property
    def t3(self) -> int:
        return sum(1 for f in self.faces if f.degree == 3 and not f.crossed)

    @property
    def max_degree(self) -> int:
        return max((f.degree for f in self.faces), default=0)

    def degree_histogram(self) -> dict[int, int]:
        hist: dict[int, int] = {}
        for f in self.faces:
            hist[f.degree] = hist.get(f.degree, 0) + 1
        return dict(sorted(hist.items()))

    def summary(self) -> dict:
        return {
            "faces": len(self.faces),
            "f3": self.f3,
            "f4": self.f4,
            "t3": self.t3,
            "crossed": sum(1 for f in self.faces if f.crossed),
            "max_degree": self.max_degree,
            "degree_sum": sum(f.degree for f in self.faces),
            "histogram": {str(k): v for k, v in self.degree_histogram().items()},
        }


def _trace(rotation: Sequence[Sequence[int]], n_real: int) -> FaceCensus:
    pos = [{w: i for i, w in enumerate(r)} for r in rotation]
    seen: set[tuple[int, int]] = set()
    faces = []
    for a in range(len(rotation)):
        for b in sorted(rotation[a]):
            if (a, b) in seen:
                continue
            walk = []
            x, y = a, b
            while (x, y) not in seen:
                seen.add((x, y))
                walk.append(x)
                ry = rotation[y]
                x, y = y, ry[(pos[y][x] + 1) % len(ry)]
            faces.append(Face(walk=tuple(walk), crossed=any(v >= n_real for v in walk)))
    if not faces and len(rotation) == 1:
        faces.append(Face(walk=(), crossed=False))
    return FaceCensus(faces=tuple(faces))


def _rotation_connected(rotation: Sequence[Sequence[int]]) -> bool:
    if not rotation:
        return True
    seen = {0}
    stack = [0]
    while stack:
        a = stack.pop()
        for b in rotation[a]:
            if b not in seen:
                seen.add(b)
                stack.append(b)
    return len(seen) == len(rotation)


# ---------------------------------------------------------------------------
# Drawings
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class OnePlaneDrawing:
    base: SimpleGraph
    edge_list: tuple[tuple[int, int], ...]
    crossings: tuple[tuple[int, int], ...]
    rotation: tuple[tuple[int, ...], ...]
    _crossing_of: dict = field(repr=False, compare=False, default_factory=dict)

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def m(self) -> int:
        return len(self.edge_list)

    @property
    def c(self) -> int:
        return len(self.crossings)

    def crossing_of(self, edge_id: int) -> Optional[int]:
        return self._crossing_of.get(edge_id)

    def is_crossed(self, edge_id: int) -> bool:
        return edge_id in self._crossing_of

    def edge_id(self, u: int, v: int) -> int:
        key = (u, v) if u < v else (v, u)
        return self._edge_index[key]

    @property
    def _edge_index(self) -> dict:
        cached = self.__dict__.get("_edge_index_cache")
        if cached is None:
            cached = {(min(e), max(e)): i for i, e in enumerate(self.edge_list)}
            object.__setattr__(self, "_edge_index_cache", cached)
        return cached

    def crossing_partner(self, edge_id: int) -> Optional[int]:
        j = self._crossing_of.get(edge_id)
        if j is None:
            return None
        e1, e2 = self.crossings[j]
        return e2 if e1 == edge_id else e1

    def segments(self, edge_id: int) -> list[tuple[int, int]]:
        u, v = self.edge_list[edge_id]
        j = self._crossing_of.get(edge_id)
        if j is None:
            return [(u, v)]
        x = self.n + j
        return [(u, x), (x, v)]

    def crossed_edges(self) -> set[int]:
        return set(self._crossing_of)

    def uncrossed_edges(self) -> list[tuple[int, int]]:
        return [e for i, e in enumerate(self.edge_list) if i not in self._crossing_of]


def validate_drawing(
    n: int,
    edges: Sequence[Sequence[int]],
    crossings: Sequence[Sequence[int]],
    rotation: Sequence[Sequence[int]],
) -> OnePlaneDrawing:
    try:
        base = build_graph(n, edges)
    except GraphError as exc:
        raise DrawingError(str(exc)) from None
    edge_list = tuple((int(u), int(v)) for u, v in edges)
    m = len(edge_list)

    crossing_of: dict[int, int] = {}
    recs = []
    for j, rec in enumerate(crossings):
        e1, e2 = int(rec[0]), int(rec[1])
        for e in (e1, e2):
            if not 0 <= e < m:
                raise DrawingError(f"crossing {n + j} references unknown edge {e}")
        if e1 == e2:
            raise DrawingError(f"crossing {n + j}: edge {e1} crosses itself")
        for e in (e1, e2):
            if e in crossing_of:
                raise DrawingError(
                    f"edge crossed twice: edge {e} in crossings {n + crossing_of[e]} and {n + j}"
                )
            crossing_of[e] = j
        if set(edge_list[e1]) & set(edge_list[e2]):
            raise DrawingError(
                f"adjacent edges crossing: edges {e1} {edge_list[e1]} and {e2} {edge_list[e2]} "
                f"at crossing {n + j}"
            )
        recs.append((e1, e2))

    total = n + len(recs)
    if len(rotation) != total:
        raise DrawingError(f"rotation has {len(rotation)} lists, expected n + c = {total}")
    rot = [tuple(int(w) for w in r) for r in rotation]
    for a, r in enumerate(rot):
        for w in r:
            if not 0 <= w < total:
                raise DrawingError(f"rotation of {a} references unknown vertex {w}")
            if w == a:
                raise DrawingError(f"rotation of {a} lists itself")
        if len(set(r)) != len(r):
            raise DrawingError(f"rotation of {a} repeats a neighbour")
    listed = [set(r) for r in rot]
    for a in range(total):
        for b in rot[a]:
            if a not in listed[b]:
                raise DrawingError(f"asymmetric rotation: {a} lists {b} but {b} does not list {a}")

    expected: list[set[int]] = [set() for _ in range(total)]
    for i, (u, v) in enumerate(edge_list):
        j = crossing_of.get(i)
        if j is None:
            expected[u].add(v)
            expected[v].add(u)
        else:
            x = n + j
            for end in (u, v):
                expected[end].add(x)
                expected[x].add(end)

    for j in range(len(recs)):
        x = n + j
        if len(rot[x]) != 4:
            raise DrawingError(f"crossing vertex {x} has rotation length {len(rot[x])}, expected 4")
    for a in range(total):
        if listed[a] != expected[a]:
            missing = sorted(expected[a] - listed[a])
            extra = sorted(listed[a] - expected[a])
            raise DrawingError(
                f"rotation of {a} does not match the planarization (missing {missing}, unexpected {extra})"
            )
    for j, (e1, e2) in enumerate(recs):
        x = n + j
        r = rot[x]
        if {r[0], r[2]} != set(edge_list[e1]) and {r[0], r[2]} != set(edge_list[e2]):
            raise DrawingError(f"crossing not alternating at vertex {x}: rotation {list(r)}")

    if not _rotation_connected(rot):
        raise DrawingError("planarization is disconnected")
    census = _trace(rot, n)
    V, E, F = total, m + 2 * len(recs), len(census.faces)
    if V - E + F != 2:
        raise DrawingError(f"Euler check failed: V - E + F = {V} - {E} + {F} = {V - E + F} != 2")

    drawing = OnePlaneDrawing(
        base=base,
        edge_list=edge_list,
        crossings=tuple(recs),
        rotation=tuple(canonical_cycle(r) for r in rot),
        _crossing_of=crossing_of,
    )
    object.__setattr__(drawing, "_face_cache", census)
    return drawing


def trace_faces(d: OnePlaneDrawing) -> FaceCensus:
    cached = d.__dict__.get("_face_cache")
    if cached is None:
        cached = _trace(d.rotation, d.n)
        object.__setattr__(d, "_face_cache", cached)
    return cached


def is_triangulated(d: OnePlaneDrawing) -> bool:
    return all(f.degree == 3 for f in trace_faces(d).faces)


def addable_edge(d: OnePlaneDrawing) -> Optional[tuple[int, int]]:
    """A non-adjacent pair of vertices sharing a face, if any.

    Such a pair can be joined inside the face without a crossing, so the
    drawing is certainly not maximal. None does not prove maximality.
    """
    for f in trace_faces(d).faces:
        real = sorted({v for v in f.walk if v < d.n})
        for i, u in enumerate(real):
            for v in real[i + 1 :]:
                if not d.base.has_edge(u, v):
                    return (u, v)
    return None


def maximality_hypothesis(d: OnePlaneDrawing) -> tuple[str, str]:
    """Maximality is assumed unless a face refutes it."""
    return ("maximal 1-planar", UNMET if addable_edge(d) else ASSUMED)


# ---------------------------------------------------------------------------
# Planar skeleton
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SkeletonMap:
    graph: SimpleGraph
    rotation: tuple[tuple[int, ...], ...]
    face_census: FaceCensus
    connected: bool

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def f3(self) -> int:
        return self.face_census.f3

    @property
    def f4(self) -> int:
        return self.face_census.f4

    @property
    def faces_3_or_4(self) -> bool:
        return all(f.degree in (3, 4) for f in self.face_census.faces)

    @property
    def euler_note(self) -> str:
        if not self.connected:
            return "Euler check skipped: disconnected"
        V, E, F = self.n, self.graph.m, len(self.face_census.faces)
        return "Euler ok" if V - E + F == 2 else f"Euler failed: {V} - {E} + {F} != 2"

    def as_drawing(self) -> OnePlaneDrawing:
        """The skeleton as a crossing-free drawing (connected maps only)."""
        return validate_drawing(self.n, self.graph.sorted_edges(), [], self.rotation)


def plane_map(n: int, rotation: Sequence[Sequence[int]]) -> SkeletonMap:
    """A crossing-free map from its rotation system; edges are read off the rotation."""
    if len(rotation) != n:
        raise DrawingError(f"rotation has {len(rotation)} lists, expected {n}")
    edges = set()
    for a, r in enumerate(rotation):
        if len(set(r)) != len(r):
            raise DrawingError(f"rotation of {a} repeats a neighbour")
        for b in r:
            if a not in rotation[b]:
                raise DrawingError(f"asymmetric rotation: {a} lists {b} but {b} does not list {a}")
            edges.add((min(a, b), max(a, b)))
    try:
        graph = build_graph(n, sorted(edges))
    except GraphError as exc:
        raise DrawingError(str(exc)) from None
    rot = tuple(canonical_cycle(tuple(r)) for r in rotation)
    return SkeletonMap(
        graph=graph,
        rotation=rot,
        face_census=_trace(rot, n),
        connected=graph.is_connected(),
    )


def skeleton(d: OnePlaneDrawing) -> SkeletonMap:
    n = d.n
    return plane_map(n, [[w for w in d.rotation[u] if w < n] for u in range(n)])


# ---------------------------------------------------------------------------
# Edge count identity for triangulated drawings
# ---------------------------------------------------------------------------


def biedl_check(d: OnePlaneDrawing) -> IdentityReport:
    """|E| = 4n - 8 - t3/2 for triangulated drawings; t3 >= 8 when min degree is 7."""
    census = trace_faces(d)
    t3 = census.t3
    tri = is_triangulated(d)
    if tri and t3 % 2:
        raise DrawingError(f"internal inconsistency: triangulated drawing with odd t3 = {t3}")
    twice = 8 * d.n - 16 - t3
    rhs = twice // 2 if twice % 2 == 0 else twice / 2
    delta = d.base.min_degree()
    notes = {"t3": t3, "min_degree": delta}
    if delta == 7:
        notes["t3_at_least_8"] = t3 >= 8
    report = IdentityReport.evaluate(
        "biedl: |E| = 4n - 8 - t3/2",
        d.m,
        rhs,
        [hyp("triangulated", tri)],
        notes=notes,
    )
    if tri and delta == 7 and t3 < 8:
        report = replace(report, verdict=COUNTEREXAMPLE)
    return report
