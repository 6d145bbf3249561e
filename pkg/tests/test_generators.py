from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oneplanar import generators as gen
from oneplanar.drawing import DrawingError, is_triangulated, plane_map, skeleton, trace_faces
from oneplanar.graph import clique_census, count_cliques, vertex_connectivity
from oneplanar.io import format_1pl
from oneplanar.oracles import naive_clique_count

from .conftest import cocktail_party, complete


def test_apollonian_small():
    d = gen.gen_apollonian(4)
    assert d.base == complete(4)
    assert all(f.degree == 3 for f in trace_faces(d).faces)
    d = gen.gen_apollonian(5, seed=3)
    assert d.m == 9
    assert naive_clique_count(d.base, 3) == 7 == 3 * 5 - 8
    assert naive_clique_count(d.base, 4) == 2 == 5 - 3


def test_apollonian_ten():
    d = gen.gen_apollonian(10, seed=0)
    c = clique_census(d.base)
    assert (c[3], c[4]) == (22, 7)


@settings(max_examples=40, deadline=None)
@given(st.integers(4, 40), st.integers(0, 10**6))
def test_apollonian_extremal(n, seed):
    d = gen.gen_apollonian(n, seed)
    assert d.m == 3 * n - 6
    assert count_cliques(d.base, 3) == 3 * n - 8
    assert count_cliques(d.base, 4) == n - 3
    assert count_cliques(d.base, 5) == 0


def test_apollonian_deterministic():
    assert format_1pl(gen.gen_apollonian(30, 5)) == format_1pl(gen.gen_apollonian(30, 5))
    assert format_1pl(gen.gen_apollonian(30, 5)) != format_1pl(gen.gen_apollonian(30, 6))


def test_apollonian_too_small():
    with pytest.raises(ValueError):
        gen.gen_apollonian(2)


def test_kite_augment_cube():
    d = gen.kite_cube()
    assert d.base == cocktail_party()
    assert d.m == 24


def test_kite_augment_prism_and_wheel():
    assert gen.k6_prism_drawing().base == complete(6)
    assert gen.k6_prism_drawing().m == 15
    assert gen.k5_drawing().base == complete(5)


def test_kite_augment_properties(corpus):
    skeletons = [gen.gen_cube(), gen.gen_prism(3), gen.gen_prism(4), gen.gen_wheel(4), gen.gen_octahedron()]
    skeletons += [gen.gen_octagonal_cylinder(k) for k in range(3)]
    for s in skeletons:
        d = gen.kite_augment(s)
        assert skeleton(d).graph == s.graph
        assert skeleton(d).rotation == s.rotation
        assert trace_faces(d).t3 == s.f3
        assert d.m == s.graph.m + 2 * s.f4
        assert is_triangulated(d)


def test_kite_augment_rejects_big_face():
    with pytest.raises(DrawingError, match="degree 5"):
        gen.kite_augment(gen.gen_wheel(5))


def test_kite_augment_rejects_present_diagonal():
    apex = gen.k4_plus_apex()
    s = skeleton(apex)
    with pytest.raises(DrawingError, match="already present"):
        gen.kite_augment(s)


def test_kite_augment_rejects_duplicate_diagonal():
    square = plane_map(4, [[1, 2], [3, 0], [0, 3], [2, 1]])
    with pytest.raises(DrawingError, match="duplicated"):
        gen.kite_augment(square)


def test_wheel_faces():
    s = gen.gen_wheel(4)
    assert (s.f3, s.f4) == (4, 1)
    s = gen.gen_wheel(3)
    assert s.graph == complete(4) and s.f3 == 4
    s = gen.gen_wheel(5)
    assert s.f3 == 5 and s.face_census.degree_histogram() == {3: 5, 5: 1}
    with pytest.raises(ValueError):
        gen.gen_wheel(2)


@pytest.mark.parametrize("k", range(4))
def test_octagonal_cylinder(k):
    s = gen.gen_octagonal_cylinder(k)
    n = 8 * (3 + k)
    assert s.n == n
    assert (s.f3, s.f4) == (8, n - 6)
    assert s.graph.m == 2 * n
    assert s.faces_3_or_4 and s.euler_note == "Euler ok"
    d = gen.kite_augment(s)
    assert d.m == 4 * n - 12
    assert trace_faces(d).t3 == 8
    assert is_triangulated(d)
    assert d.base.min_degree() == 5
    assert vertex_connectivity(d.base).kappa <= 5


def test_octcyl_zero_numbers():
    s = gen.gen_octagonal_cylinder(0)
    assert (s.n, s.f3, s.f4, s.graph.m) == (24, 8, 18, 48)
    assert gen.kite_augment(gen.gen_octagonal_cylinder(1)).m == 116


def test_generate_dispatch():
    d = gen.generate(gen.GeneratorSpec("apollonian", (12,), seed=4))
    assert d == gen.gen_apollonian(12, 4)
    assert gen.generate(gen.GeneratorSpec("cube")).base == gen.gen_cube().graph
    with pytest.raises(ValueError, match="unknown family"):
        gen.generate(gen.GeneratorSpec("dodecahedron"))
    with pytest.raises(ValueError):
        gen.generate(gen.GeneratorSpec("wheel", ()))


def test_polytope_rotations_are_planar():
    for s in (gen.gen_cube(), gen.gen_icosahedron(), gen.gen_prism(7), gen.gen_wheel(9)):
        assert s.euler_note == "Euler ok"
