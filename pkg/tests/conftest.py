from __future__ import annotations

import random
from itertools import combinations

import pytest

from oneplanar import generators as gen
from oneplanar.graph import build_graph


def complete(n):
    return build_graph(n, combinations(range(n), 2))


def cycle(n):
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def cube_graph():
    return build_graph(8, [(a, b) for a, b in combinations(range(8), 2) if bin(a ^ b).count("1") == 1])


def cocktail_party():
    """K_{4x2}: antipodal cube vertices (a ^ b == 7) are the only non-edges."""
    return build_graph(8, [(a, b) for a, b in combinations(range(8), 2) if a ^ b != 7])


def star(leaves):
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def random_graph(rng: random.Random, n: int, p: float):
    return build_graph(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def drawing_corpus():
    """(name, drawing) pairs covering every generator family and fixture."""
    items = [
        ("k4-tetrahedral", gen.k4_tetrahedral()),
        ("k4-pyramidal", gen.k4_pyramidal()),
        ("k4-plus-apex", gen.k4_plus_apex()),
        ("k5", gen.k5_drawing()),
        ("k6-prism", gen.k6_prism_drawing()),
        ("kite-cube", gen.kite_cube()),
        ("cube", gen.gen_cube().as_drawing()),
        ("prism3", gen.gen_prism(3).as_drawing()),
        ("prism5", gen.gen_prism(5).as_drawing()),
        ("kite-prism4", gen.kite_augment(gen.gen_prism(4))),
        ("octahedron", gen.gen_octahedron().as_drawing()),
        ("icosahedron", gen.gen_icosahedron().as_drawing()),
    ]
    for r in range(3, 9):
        items.append((f"wheel{r}", gen.gen_wheel(r).as_drawing()))
    for k in range(4):
        items.append((f"octcyl{k}", gen.gen_octagonal_cylinder(k).as_drawing()))
        items.append((f"kite-octcyl{k}", gen.kite_augment(gen.gen_octagonal_cylinder(k))))
    for n in (3, 4, 5, 6, 8, 10, 12, 20, 35, 50):
        for seed in (0, 1):
            items.append((f"apollonian{n}-s{seed}", gen.gen_apollonian(n, seed)))
    return items


@pytest.fixture(scope="session")
def corpus():
    return drawing_corpus()
