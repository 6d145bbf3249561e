"""Deterministic instance families.

Fixed polyhedral skeletons (cube, prism, wheel, ...) get their rotation
systems from 3D coordinates: vertices of a convex polytope containing the
origin are projected onto the unit sphere, and neighbours are sorted
counterclockwise in the tangent plane as seen from outside. Radial projection
of a convex polytope gives a crossing-free geodesic drawing, so the resulting
rotation is a valid sphere embedding. Validation re-checks it anyway.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .drawing import DrawingError, OnePlaneDrawing, SkeletonMap, plane_map, skeleton, validate_drawing


# ---------------------------------------------------------------------------
# Rotation systems from coordinates
# ---------------------------------------------------------------------------


def _unit(p):
    r = math.sqrt(sum(x * x for x in p))
    return tuple(x / r for x in p)


def _cross(a, b):
    return (a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0])


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def rotation_from_sphere(points: Sequence[Sequence[float]], edges) -> list[list[int]]:
    """Counterclockwise neighbour order around each point of a geodesic sphere drawing."""
    pts = [_unit(p) for p in points]
    nbrs: list[list[int]] = [[] for _ in pts]
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    rotation = []
    for u, p in enumerate(pts):
        helper = (1.0, 0.0, 0.0) if abs(p[0]) < 0.9 else (0.0, 1.0, 0.0)
        e1 = _unit(_cross(helper, p))
        e2 = _cross(p, e1)

        def angle(v: int) -> float:
            q = pts[v]
            k = _dot(q, p)
            t = tuple(qi - k * pi for qi, pi in zip(q, p))
            return math.atan2(_dot(t, e2), _dot(t, e1))

        rotation.append(sorted(nbrs[u], key=angle))
    return rotation


def rotation_from_plane(points: Sequence[Sequence[float]], segments) -> list[list[int]]:
    """Counterclockwise neighbour order for a straight-line plane drawing."""
    nbrs: list[list[int]] = [[] for _ in points]
    for u, v in segments:
        nbrs[u].append(v)
        nbrs[v].append(u)
    return [
        sorted(nbrs[u], key=lambda v: math.atan2(points[v][1] - y, points[v][0] - x))
        for u, (x, y) in enumerate(points)
    ]


def _polytope_map(points, edges) -> SkeletonMap:
    return plane_map(len(points), rotation_from_sphere(points, edges))


# ---------------------------------------------------------------------------
# Crossing-free skeletons
# ---------------------------------------------------------------------------


def gen_wheel(r: int) -> SkeletonMap:
    """Hub 0 joined to the rim cycle 1..r."""
    if r < 3:
        raise ValueError("wheel needs a rim of at least 3 vertices")
    pts = [(0.0, 0.0, 1.0)] + [
        (math.cos(2 * math.pi * i / r), math.sin(2 * math.pi * i / r), -0.5) for i in range(r)
    ]
    edges = [(0, i) for i in range(1, r + 1)] + [(i, i % r + 1) for i in range(1, r + 1)]
    return _polytope_map(pts, edges)


def gen_prism(r: int = 3) -> SkeletonMap:
    """Two r-cycles 0..r-1 and r..2r-1 joined by rungs i -- i+r."""
    if r < 3:
        raise ValueError("prism needs r >= 3")
    pts = []
    for z in (1.0, -1.0):
        pts += [(math.cos(2 * math.pi * i / r), math.sin(2 * math.pi * i / r), z) for i in range(r)]
    edges = []
    for i in range(r):
        edges += [(i, (i + 1) % r), (r + i, r + (i + 1) % r), (i, r + i)]
    return _polytope_map(pts, edges)


def gen_cube() -> SkeletonMap:
    """The 3-cube; vertex ids are the bit patterns 0..7."""
    pts = [tuple(1.0 if v >> k & 1 else -1.0 for k in range(3)) for v in range(8)]
    edges = [(a, b) for a, b in combinations(range(8), 2) if bin(a ^ b).count("1") == 1]
    return _polytope_map(pts, edges)


def gen_tetrahedron() -> SkeletonMap:
    pts = [(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)]
    return _polytope_map(pts, list(combinations(range(4), 2)))


def gen_octahedron() -> SkeletonMap:
    pts = [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)]
    edges = [(a, b) for a, b in combinations(range(6), 2) if a // 2 != b // 2]
    return _polytope_map(pts, edges)


def gen_icosahedron() -> SkeletonMap:
    phi = (1 + math.sqrt(5)) / 2
    pts = []
    for s1 in (1, -1):
        for s2 in (phi, -phi):
            pts += [(0, s1, s2), (s1, s2, 0), (s2, 0, s1)]
    edges = [
        (a, b)
        for a, b in combinations(range(12), 2)
        if abs(sum((x - y) ** 2 for x, y in zip(pts[a], pts[b])) - 4) < 1e-9
    ]
    return _polytope_map(pts, edges)


def gen_octagonal_cylinder(k: int) -> SkeletonMap:
    """3 + k stacked 8-cycles, quads between rings, both ends capped.

    Vertex ``8*i + j`` is position j on ring i. Each end ring gets chords
    0-2, 2-4, 4-6, 6-0, giving four cap triangles and a central quad.
    """
    if k < 0:
        raise ValueError("octagonal cylinder needs k >= 0")
    rings = 3 + k
    pts = []
    for i in range(rings):
        z = -1.0 + 2.0 * i / (rings - 1)
        pts += [(math.cos(math.pi * j / 4), math.sin(math.pi * j / 4), z) for j in range(8)]
    edges = []
    for i in range(rings):
        base = 8 * i
        edges += [(base + j, base + (j + 1) % 8) for j in range(8)]
        if i + 1 < rings:
            edges += [(base + j, base + 8 + j) for j in range(8)]
    for base in (0, 8 * (rings - 1)):
        edges += [(base + j, base + (j + 2) % 8) for j in (0, 2, 4, 6)]
    return _polytope_map(pts, edges)


def gen_apollonian(n: int, seed: int = 0) -> OnePlaneDrawing:
    """Stacked triangulation on n vertices.

    Starts from a triangle and inserts vertices 3, 4, ..., n-1 one at a time
    into the face at index ``random.Random(seed).randrange(len(faces))`` of the
    current face list. The face list starts with the two triangle faces in
    tracing order; the chosen face is overwritten in place by its first child
    and the other two children are appended.
    """
    if n < 3:
        raise ValueError("Apollonian network needs n >= 3")
    rng = random.Random(seed)
    rot: list[list[int]] = [[1, 2], [2, 0], [0, 1]]
    faces = [(0, 1, 2), (0, 2, 1)]
    for w in range(3, n):
        idx = rng.randrange(len(faces))
        a, b, c = faces[idx]
        for at, after in ((b, a), (c, b), (a, c)):
            r = rot[at]
            r.insert(r.index(after) + 1, w)
        rot.append([a, c, b])
        faces[idx] = (a, b, w)
        faces += [(b, c, w), (c, a, w)]
    edges = sorted({(min(a, b), max(a, b)) for a in range(n) for b in rot[a]})
    return validate_drawing(n, edges, [], rot)


# ---------------------------------------------------------------------------
# Kite augmentation
# ---------------------------------------------------------------------------


def kite_augment(s: SkeletonMap) -> OnePlaneDrawing:
    """Insert both diagonals of every 4-face as a crossing pair."""
    if not s.connected:
        raise DrawingError("kite augmentation needs a connected skeleton")
    n = s.n
    edges = list(s.graph.sorted_edges())
    present = set(edges)
    rot = [list(r) for r in s.rotation]
    crossings = []
    for face in s.face_census.faces:
        if face.degree == 3:
            continue
        if face.degree != 4:
            raise DrawingError(f"face of degree {face.degree} (walk {list(face.walk)}); need 3 or 4")
        a, b, c, d = face.walk
        if len({a, b, c, d}) != 4:
            raise DrawingError(f"4-face {list(face.walk)} repeats a vertex")
        diagonals = [(min(a, c), max(a, c)), (min(b, d), max(b, d))]
        for diag in diagonals:
            if diag in present:
                kind = "already present" if diag in s.graph.edges else "duplicated across two 4-faces"
                raise DrawingError(f"diagonal {diag} of 4-face {list(face.walk)} {kind}")
            present.add(diag)
        x = n + len(crossings)
        for at, after in ((a, d), (b, a), (c, b), (d, c)):
            r = rot[at]
            r.insert(r.index(after) + 1, x)
        rot.append([a, d, c, b])
        crossings.append((len(edges), len(edges) + 1))
        edges += diagonals
    return validate_drawing(n, edges, crossings, rot)


# ---------------------------------------------------------------------------
# Small named drawings
# ---------------------------------------------------------------------------


def k4_tetrahedral() -> OnePlaneDrawing:
    return gen_tetrahedron().as_drawing()


def k4_pyramidal() -> OnePlaneDrawing:
    """Square 0-1-3-2 with crossing diagonals 0-3 and 1-2 (crossing vertex 4)."""
    pts = [(0, 1), (1, 1), (0, 0), (1, 0), (0.5, 0.5)]
    edges = [(0, 1), (1, 3), (2, 3), (0, 2), (0, 3), (1, 2)]
    segs = [(0, 1), (1, 3), (2, 3), (0, 2), (0, 4), (4, 3), (1, 4), (4, 2)]
    return validate_drawing(4, edges, [(4, 5)], rotation_from_plane(pts, segs))


def k4_plus_apex() -> OnePlaneDrawing:
    """Tetrahedral K4 on a, b, c, d = 0..3 with d inside abc, plus e = 4 outside, joined to a and b."""
    pts = [(0, 0), (4, 0), (2, 4), (2, 1.5), (2, -3)]
    edges = [(0, 1), (1, 2), (0, 2), (0, 3), (1, 3), (2, 3), (0, 4), (1, 4)]
    return validate_drawing(5, edges, [], rotation_from_plane(pts, edges))


def k5_drawing() -> OnePlaneDrawing:
    """K5 with one crossing: the wheel W4 with its rim diagonals inserted."""
    return kite_augment(gen_wheel(4))


def k6_prism_drawing() -> OnePlaneDrawing:
    return kite_augment(gen_prism(3))


def kite_cube() -> OnePlaneDrawing:
    """The cocktail-party graph K_{4x2} drawn as the cube with all face diagonals."""
    return kite_augment(gen_cube())


# ---------------------------------------------------------------------------
# Named families
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GeneratorSpec:
    family: str
    params: tuple = field(default_factory=tuple)
    seed: int = 0


_SKELETONS = {
    "wheel": (gen_wheel, 1),
    "prism": (gen_prism, (0, 1)),
    "cube": (gen_cube, 0),
    "tetrahedron": (gen_tetrahedron, 0),
    "octahedron": (gen_octahedron, 0),
    "icosahedron": (gen_icosahedron, 0),
    "octcyl": (gen_octagonal_cylinder, 1),
}

FAMILIES = ("apollonian",) + tuple(_SKELETONS)


def generate(spec: GeneratorSpec) -> OnePlaneDrawing:
    """Build the drawing named by ``spec``; skeleton families come out crossing-free."""
    if spec.family == "apollonian":
        if len(spec.params) != 1:
            raise ValueError("apollonian takes one parameter: n")
        return gen_apollonian(int(spec.params[0]), seed=spec.seed)
    if spec.family not in _SKELETONS:
        raise ValueError(f"unknown family {spec.family!r}")
    fn, arity = _SKELETONS[spec.family]
    allowed = arity if isinstance(arity, tuple) else (arity,)
    if len(spec.params) not in allowed:
        raise ValueError(f"{spec.family} takes {' or '.join(map(str, allowed))} parameter(s)")
    return fn(*(int(p) for p in spec.params)).as_drawing()


__all__ = [
    "FAMILIES",
    "GeneratorSpec",
    "gen_apollonian",
    "gen_cube",
    "gen_icosahedron",
    "gen_octagonal_cylinder",
    "gen_octahedron",
    "gen_prism",
    "gen_tetrahedron",
    "gen_wheel",
    "generate",
    "k4_plus_apex",
    "k4_pyramidal",
    "k4_tetrahedral",
    "k5_drawing",
    "k6_prism_drawing",
    "kite_augment",
    "kite_cube",
    "rotation_from_plane",
    "rotation_from_sphere",
    "skeleton",
]
