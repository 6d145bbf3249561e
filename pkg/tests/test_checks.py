from __future__ import annotations

from collections import Counter
from itertools import combinations

import pytest

from oneplanar import generators as gen
from oneplanar.checks import (
    check_rich,
    classify_k4_drawing,
    cycle_sides,
    eligible_triangles,
    find_conflict_triangles,
    lemma_audit,
)
from oneplanar.drawing import DrawingError, validate_drawing
from oneplanar.graph import iter_cliques
from oneplanar.oracles import rotation_flood_sides


def _square_missing_side():
    """Square 0-1-3-2 with crossing diagonals, side 1-3 deleted."""
    edges = [(0, 1), (2, 3), (0, 2), (0, 3), (1, 2)]
    rot = [[1, 2, 4], [0, 4], [0, 3, 4], [4, 2], [0, 2, 3, 1]]
    return validate_drawing(4, edges, [(3, 4)], rot)


# ---------------------------------------------------------------------------
# richness
# ---------------------------------------------------------------------------


def test_rich_examples():
    r = check_rich(gen.kite_cube())
    assert r.rich and len(r.records) == 6
    assert check_rich(gen.k4_pyramidal()).rich


def test_missing_side_edge():
    r = check_rich(_square_missing_side())
    assert not r.rich
    assert r.records[0].missing == ((1, 3),)


def test_crossed_side_edge():
    """Pyramidal kite whose side 1-3 is crossed by an outside edge 4-5."""
    pts = [(0, 2), (2, 2), (0, 0), (2, 0), (1.7, 1), (3, 1), (1, 1), (2, 1)]
    edges = [(0, 1), (1, 3), (2, 3), (0, 2), (0, 3), (1, 2), (4, 5), (1, 5), (3, 5)]
    segs = [(0, 1), (2, 3), (0, 2), (0, 6), (6, 3), (1, 6), (6, 2), (1, 7), (7, 3), (4, 7), (7, 5), (1, 5), (3, 5)]
    d = validate_drawing(6, edges, [(4, 5), (1, 6)], gen.rotation_from_plane(pts, segs))
    r = check_rich(d)
    assert not r.rich
    assert r.records[0].crossed_sides == ((1, 3),)
    assert r.records[0].missing == ()
    assert r.records[1].missing  # 4 is adjacent to nothing but 5


def test_strict_mode_on_generators(corpus):
    for name, d in corpus:
        if name.startswith("kite-") or name in ("k5", "k6-prism"):
            assert check_rich(d).rich, name
            assert check_rich(d, strict=True).rich, name


def test_strict_mode_rejects_non_kite_faces():
    # the pyramidal K4 has an uncrossed 4-face but every face at the crossing is a kite triangle
    assert check_rich(gen.k4_pyramidal(), strict=True).rich
    r = check_rich(_square_missing_side(), strict=True)
    assert r.records[0].kite_faces is False


# ---------------------------------------------------------------------------
# cycle sides
# ---------------------------------------------------------------------------


def test_sides_tetrahedral():
    d = gen.k4_tetrahedral()
    for tri in combinations(range(4), 3):
        r = cycle_sides(d, tri)
        (other,) = set(range(4)) - set(tri)
        assert (r.side_a, r.side_b, r.conflict) == ({other}, frozenset(), False)
    assert find_conflict_triangles(d) == []


def test_sides_apex():
    d = gen.k4_plus_apex()
    r = cycle_sides(d, (0, 1, 2))
    assert (r.side_a, r.side_b, r.conflict) == ({3}, {4}, True)
    found = find_conflict_triangles(d)
    assert [r.cycle for r in found] == [(0, 1, 2)]


def test_sides_kite_cube_through_crossing():
    d = gen.kite_cube()
    # 0-1 and 1-3 are cube edges; 0-3 is a face diagonal, so the curve passes a crossing
    r = cycle_sides(d, (0, 1, 3))
    assert not r.conflict
    assert r.side_b == frozenset()


def test_kite_cube_conflict_triangles():
    """Each vertex's three cube neighbours span a triangle of face diagonals.

    That triangle cuts the vertex off from the other four, so the kite cube
    (6-connected, below the 7-connected threshold) has exactly 8 conflict triangles.
    """
    d = gen.kite_cube()
    found = find_conflict_triangles(d)
    expected = {tuple(sorted(v ^ (1 << k) for k in range(3))) for v in range(8)}
    assert {r.cycle for r in found} == expected
    for r in found:
        lone = r.side_a if len(r.side_a) == 1 else r.side_b
        (v,) = lone
        assert tuple(sorted(v ^ (1 << k) for k in range(3))) == r.cycle


def test_sides_orientation_independent(corpus):
    for name, d in corpus:
        if d.n + d.c > 20:
            continue
        for tri in eligible_triangles(d):
            a, b, c = tri
            base = cycle_sides(d, tri)
            for order in ((b, c, a), (c, b, a), (a, c, b)):
                r = cycle_sides(d, order)
                assert (r.side_a, r.side_b) == (base.side_a, base.side_b), (name, tri)


def test_sides_cover_vertices(corpus):
    for name, d in corpus:
        for tri in eligible_triangles(d)[:20]:
            r = cycle_sides(d, tri)
            assert not (r.side_a & r.side_b)
            assert r.side_a | r.side_b | set(tri) == set(range(d.n)), name


def test_sides_match_flood_oracle(corpus):
    for name, d in corpus:
        if d.n + d.c > 14:
            continue
        for tri in eligible_triangles(d):
            r = cycle_sides(d, tri)
            assert (r.side_a, r.side_b) == rotation_flood_sides(d, tri), (name, tri)


def test_facial_triangles_have_empty_side(corpus):
    for name, d in corpus:
        for face in gen.skeleton(d).face_census.faces:
            if face.degree == 3 and len(set(face.walk)) == 3 and d.c == 0:
                r = cycle_sides(d, face.walk)
                assert r.side_b == frozenset(), (name, face.walk)


def test_cycle_errors():
    d = gen.kite_cube()
    with pytest.raises(DrawingError, match="not a cycle"):
        cycle_sides(d, (0, 7, 1))
    with pytest.raises(DrawingError, match="not a cycle"):
        cycle_sides(d, (0, 1))
    # 0-3 and 1-2 cross inside face x=0 (bits 0 and 1)
    with pytest.raises(DrawingError, match="cycle edges cross each other"):
        cycle_sides(d, (0, 3, 1, 2))


# ---------------------------------------------------------------------------
# K4 classification
# ---------------------------------------------------------------------------


def test_classify_tetrahedral():
    assert classify_k4_drawing(gen.k4_tetrahedral(), (0, 1, 2, 3)).kind == "tetrahedral"


def test_classify_k5_rim():
    k = classify_k4_drawing(gen.k5_drawing(), (1, 2, 3, 4))
    assert (k.kind, k.internal_crossings) == ("pyramidal", 1)


def test_classify_kite_cube():
    """Face quads are pyramidal; the other ten K4s use no crossing pair."""
    d = gen.kite_cube()
    kinds = {q: classify_k4_drawing(d, q).kind for q in iter_cliques(d.base, 4)}
    assert len(kinds) == 16
    assert Counter(kinds.values()) == {"pyramidal": 6, "tetrahedral": 10}
    faces = {tuple(sorted(f.walk)) for f in gen.gen_cube().face_census.faces}
    assert {q for q, k in kinds.items() if k == "pyramidal"} == faces


def test_classify_not_k4():
    with pytest.raises(DrawingError, match="not a K4"):
        classify_k4_drawing(gen.kite_cube(), (0, 1, 2, 7))


# ---------------------------------------------------------------------------
# lemma audit
# ---------------------------------------------------------------------------


def _by_prefix(reports):
    return {r.name.split(":")[0]: r for r in reports}


def test_audit_kite_cube():
    r = _by_prefix(lemma_audit(gen.kite_cube()))
    assert r["lemma2.4"].verdict == "verified" and r["lemma2.4"].lhs == 0
    for key in ("lemma2.3", "lemma3.1", "lemma3.2", "lemma3.4"):
        assert r[key].verdict == "vacuous"


def test_audit_k6():
    r = _by_prefix(lemma_audit(gen.k6_prism_drawing()))
    assert r["lemma2.4"].verdict == "vacuous"
    assert r["lemma2.4"].notes["N(G,K5)"] == 6
    assert r["lemma2.4"].notes["kappa"] == 5


def test_audit_tetrahedral_all_vacuous():
    assert all(r.verdict == "vacuous" for r in lemma_audit(gen.k4_tetrahedral()))
