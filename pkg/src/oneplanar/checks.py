"""Structural predicates on drawings: kites, conflict cycles, K4 drawing types."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from .drawing import DrawingError, OnePlaneDrawing, maximality_hypothesis, skeleton, trace_faces
from .graph import count_cliques, iter_cliques, vertex_connectivity
from .reports import IdentityReport, hyp


# ---------------------------------------------------------------------------
# Richness
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class KiteRecord:
    crossing: int  # planarized id n + j
    endpoints: tuple[int, int, int, int]  # v, w (first edge), x, y (second edge)
    missing: tuple[tuple[int, int], ...]
    crossed_sides: tuple[tuple[int, int], ...]
    kite_faces: Optional[bool] = None  # only evaluated in strict mode

    @property
    def ok(self) -> bool:
        return not self.missing and not self.crossed_sides and self.kite_faces is not False


@dataclass(frozen=True)
class RichnessReport:
    records: tuple[KiteRecord, ...]
    rich: bool
    strict: bool

    def to_dict(self) -> dict:
        return {
            "rich": self.rich,
            "strict": self.strict,
            "crossings": [
                {
                    "crossing": r.crossing,
                    "endpoints": list(r.endpoints),
                    "missing": [list(p) for p in r.missing],
                    "crossed_sides": [list(p) for p in r.crossed_sides],
                    "kite_faces": r.kite_faces,
                }
                for r in self.records
            ],
        }


def _kite_faces_ok(d: OnePlaneDrawing, x: int, sides: set[tuple[int, int]]) -> bool:
    around = [f for f in trace_faces(d).faces if x in f.walk]
    if len(around) != 4:
        return False
    for f in around:
        if f.degree != 3 or f.walk.count(x) != 1:
            return False
        i = f.walk.index(x)
        a, b = f.walk[(i + 1) % 3], f.walk[(i + 2) % 3]
        if a >= d.n or b >= d.n or (min(a, b), max(a, b)) not in sides:
            return False
        # a direct a-b segment means the edge is uncrossed
    return True


def check_rich(d: OnePlaneDrawing, strict: bool = False) -> RichnessReport:
    records = []
    for j, (e1, e2) in enumerate(d.crossings):
        v, w = d.edge_list[e1]
        x, y = d.edge_list[e2]
        sides = {(min(a, b), max(a, b)) for a, b in ((v, x), (x, w), (w, y), (y, v))}
        missing = tuple(sorted(p for p in sides if not d.base.has_edge(*p)))
        crossed = tuple(sorted(p for p in sides if d.base.has_edge(*p) and d.is_crossed(d.edge_id(*p))))
        kite_faces = _kite_faces_ok(d, d.n + j, sides) if strict else None
        records.append(KiteRecord(d.n + j, (v, w, x, y), missing, crossed, kite_faces))
    return RichnessReport(records=tuple(records), rich=all(r.ok for r in records), strict=strict)


# ---------------------------------------------------------------------------
# Sides of a closed curve through cycle edges
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CycleSideReport:
    cycle: tuple[int, ...]
    side_a: frozenset
    side_b: frozenset
    conflict: bool

    def to_dict(self) -> dict:
        return {
            "cycle": list(self.cycle),
            "side_a": sorted(self.side_a),
            "side_b": sorted(self.side_b),
            "conflict": self.conflict,
        }


def cycle_curve(d: OnePlaneDrawing, cycle: Sequence[int]) -> list[int]:
    """Planarized vertex sequence of the closed curve traced by the cycle's edges.

    Raises DrawingError when ``cycle`` is not a cycle of the graph or when two
    of its edges cross each other.
    """
    cyc = [int(v) for v in cycle]
    k = len(cyc)
    if k < 3 or len(set(cyc)) != k or any(not 0 <= v < d.n for v in cyc):
        raise DrawingError(f"not a cycle: {cyc}")
    ids = []
    for i in range(k):
        a, b = cyc[i], cyc[(i + 1) % k]
        if not d.base.has_edge(a, b):
            raise DrawingError(f"not a cycle: {cyc} (no edge {a}-{b})")
        ids.append(d.edge_id(a, b))
    in_cycle = set(ids)
    for e in ids:
        partner = d.crossing_partner(e)
        if partner in in_cycle:
            raise DrawingError(
                f"cycle edges cross each other: {d.edge_list[e]} and {d.edge_list[partner]}"
            )
    curve = []
    for i, e in enumerate(ids):
        a = cyc[i]
        curve.append(a)
        j = d.crossing_of(e)
        if j is not None:
            curve.append(d.n + j)
    return curve


def _sort_sides(s1: frozenset, s2: frozenset) -> tuple[frozenset, frozenset]:
    key = lambda s: (not s, min(s) if s else 0)  # noqa: E731
    return tuple(sorted((s1, s2), key=key))  # type: ignore[return-value]


def cycle_sides(d: OnePlaneDrawing, cycle: Sequence[int]) -> CycleSideReport:
    """Split the off-cycle vertices by the curve, via two-colouring the faces.

    Faces are merged across every segment that is not on the curve; the curve
    is a simple closed curve on the sphere, so exactly two classes remain.
    """
    curve = cycle_curve(d, cycle)
    on_curve = set(curve)
    k = len(curve)
    blocked = {frozenset((curve[i], curve[(i + 1) % k])) for i in range(k)}

    faces = trace_faces(d).faces
    face_of = {}
    for i, f in enumerate(faces):
        for dart in f.darts():
            face_of[dart] = i

    parent = list(range(len(faces)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for (a, b), i in face_of.items():
        if frozenset((a, b)) not in blocked:
            parent[find(i)] = find(face_of[(b, a)])
    classes = sorted({find(i) for i in range(len(faces))})
    if len(classes) != 2:
        raise DrawingError(f"curve {curve} splits the faces into {len(classes)} classes")

    sides: dict[int, set[int]] = {c: set() for c in classes}
    for v in range(d.n):
        if v in on_curve:
            continue
        seen = {find(face_of[(v, w)]) for w in d.rotation[v]}
        if len(seen) != 1:
            raise DrawingError(f"vertex {v} touches both sides of curve {curve}")
        sides[seen.pop()].add(v)
    a, b = _sort_sides(frozenset(sides[classes[0]]), frozenset(sides[classes[1]]))
    return CycleSideReport(cycle=tuple(int(v) for v in cycle), side_a=a, side_b=b, conflict=bool(a and b))


def eligible_triangles(d: OnePlaneDrawing) -> list[tuple[int, int, int]]:
    """Triangles of the graph whose three edges pairwise do not cross."""
    out = []
    for tri in iter_cliques(d.base, 3):
        ids = [d.edge_id(a, b) for a, b in combinations(tri, 2)]
        if all(d.crossing_partner(e) not in ids for e in ids):
            out.append(tri)
    return sorted(out)


def find_conflict_triangles(d: OnePlaneDrawing) -> list[CycleSideReport]:
    reports = (cycle_sides(d, tri) for tri in eligible_triangles(d))
    return [r for r in reports if r.conflict]


# ---------------------------------------------------------------------------
# K4 drawings
# ---------------------------------------------------------------------------

TETRAHEDRAL = "tetrahedral"
PYRAMIDAL = "pyramidal"


@dataclass(frozen=True)
class K4Class:
    clique: tuple[int, int, int, int]
    internal_crossings: int
    kind: str

    def to_dict(self) -> dict:
        return {"clique": list(self.clique), "internal_crossings": self.internal_crossings, "kind": self.kind}


def classify_k4_drawing(d: OnePlaneDrawing, clique: Sequence[int]) -> K4Class:
    q = tuple(sorted(int(v) for v in clique))
    if len(q) != 4 or len(set(q)) != 4 or any(not 0 <= v < d.n for v in q):
        raise DrawingError(f"not a K4: {list(clique)}")
    if not all(d.base.has_edge(a, b) for a, b in combinations(q, 2)):
        raise DrawingError(f"not a K4: {list(clique)}")
    inside = set(q)
    count = sum(
        1
        for e1, e2 in d.crossings
        if set(d.edge_list[e1]) <= inside and set(d.edge_list[e2]) <= inside
    )
    if count >= 2:
        raise DrawingError(f"invalid drawing data: K4 {list(q)} has {count} internal crossings")
    return K4Class(clique=q, internal_crossings=count, kind=PYRAMIDAL if count else TETRAHEDRAL)


# ---------------------------------------------------------------------------
# Per-instance lemma audit
# ---------------------------------------------------------------------------


def lemma_audit(d: OnePlaneDrawing) -> list[IdentityReport]:
    """Evaluate each structural lemma's hypothesis and conclusion on ``d``."""
    from .theorems import lemma34_identity

    G = d.base
    kappa = vertex_connectivity(G).kappa
    rich = check_rich(d).rich
    k7 = hyp("kappa(G) >= 7", kappa >= 7)
    notes = {"kappa": kappa}

    conflicts = find_conflict_triangles(d)
    reports = [
        IdentityReport.evaluate(
            "lemma2.3: conflict 3-cycles = 0",
            len(conflicts),
            0,
            [k7],
            notes={**notes, "conflict_triangles": [list(r.cycle) for r in conflicts]},
        )
    ]

    k5 = count_cliques(G, 5)
    reports.append(
        IdentityReport.evaluate(
            "lemma2.4: N(G,K5) = 0", k5, 0, [hyp("kappa(G) >= 6", kappa >= 6)], notes={**notes, "N(G,K5)": k5}
        )
    )

    kinds = [classify_k4_drawing(d, q) for q in iter_cliques(G, 4)]
    tetra = [list(k.clique) for k in kinds if k.kind == TETRAHEDRAL]
    reports.append(
        IdentityReport.evaluate(
            "lemma3.1: tetrahedral K4 copies = 0",
            len(tetra),
            0,
            [k7],
            notes={**notes, "k4_total": len(kinds), "tetrahedral": tetra},
        )
    )

    H = skeleton(d)
    kappa_h = vertex_connectivity(H.graph).kappa if H.n else 0
    reports.append(
        IdentityReport.evaluate(
            "lemma3.2: kappa(S) >= 4",
            kappa_h,
            4,
            [k7, hyp("rich", rich), maximality_hypothesis(d)],
            relation=">=",
            notes=notes,
        )
    )
    reports.append(lemma34_identity(d))
    return reports
