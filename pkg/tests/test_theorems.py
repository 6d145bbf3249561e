from __future__ import annotations

from hypothesis import given
from hypothesis import strategies as st

from oneplanar import generators as gen
from oneplanar.drawing import skeleton
from oneplanar.graph import enumerate_3_separators
from oneplanar.oracles import naive_clique_count
from oneplanar.reports import ASSUMED, MET, UNMET, IdentityReport
from oneplanar.theorems import (
    euler_face_relation,
    gollin_triangle_identity,
    lemma34_identity,
    skeleton_f3_lower,
    theorem_bounds,
    theorem_thresholds,
    threshold_sum,
)


def test_euler_examples():
    for s, expected in [
        (gen.gen_cube(), ((24, 12), (24, 12))),
        (gen.gen_octahedron(), ((24, 8), (24, 8))),
        (gen.gen_wheel(4), ((16, 6), (16, 6))),
    ]:
        r = euler_face_relation(s)
        assert (r.lhs, r.rhs) == expected
        assert r.verdict == "verified"


def test_euler_vacuous_with_big_face():
    r = euler_face_relation(gen.gen_wheel(5))
    assert r.verdict == "vacuous"


def test_gollin_examples():
    cases = [
        (gen.k5_drawing(), 10, (2, 4, 1)),
        (gen.k6_prism_drawing(), 20, (6, 2, 3)),
        (gen.kite_cube(), 32, (8, 0, 6)),
    ]
    for d, triangles, (s3, f3, f4) in cases:
        r = gollin_triangle_identity(d)
        assert r.lhs == triangles == naive_clique_count(d.base, 3)
        assert (r.notes["s3"], r.notes["f3"], r.notes["f4"]) == (s3, f3, f4)
        assert r.rhs == s3 + f3 + 4 * f4
        assert r.verdict == "verified"
        assert ("maximal 1-planar", ASSUMED) in r.hypotheses


def test_gollin_holds_whenever_applicable(corpus):
    for name, d in corpus:
        r = gollin_triangle_identity(d)
        assert r.verdict != "counterexample", name
        if all(status != UNMET for _, status in r.hypotheses):
            assert r.lhs == r.rhs, name


def test_lemma34_kite_cube_discrepancy():
    r = lemma34_identity(gen.kite_cube(), audit=True)
    assert (r.lhs, r.rhs, r.verdict) == (8, 8, "verified")
    assert r.notes["N(G,K3)"] - (r.notes["f3"] + 4 * r.notes["f4"]) == 32 - 24


def test_lemma34_crossing_free_s3_zero():
    for s, n3 in ((gen.gen_icosahedron(), 20), (gen.gen_octahedron(), 8)):
        d = s.as_drawing()
        assert enumerate_3_separators(d.base).s3 == 0
        r = lemma34_identity(d, audit=True)
        assert r.lhs == (n3, 0) == r.rhs
        assert r.verdict == "verified"


def test_lemma34_theorem_mode_vacuous():
    r = lemma34_identity(gen.kite_cube())
    assert r.verdict == "vacuous"
    assert ("kappa(G) >= 7", UNMET) in r.hypotheses


def test_lemma34_audit_discrepancy_equals_s3(corpus):
    for name, d in corpus:
        r = lemma34_identity(d, audit=True)
        assert r.verdict != "counterexample", name
        if "discrepancy" in r.notes and r.verdict == "verified":
            assert r.notes["discrepancy"] == r.notes["s3"]


def test_threshold_row_n24():
    t = theorem_thresholds(24)
    assert (t["2"], t["3"], t["4"], t["total"]) == (84, 80, 18, 207)


@given(st.integers(-1000, 10**6))
def test_threshold_sum_identity(n):
    assert threshold_sum(n) == 10 * n - 33 == theorem_thresholds(n)["total"]


def test_bounds_kite_cube_audit():
    d = gen.kite_cube()
    r = theorem_bounds(d.base, d, audit_4conn=True)
    assert r.thresholds == {"3": 34, "4": 23, "5": 6}
    assert r.slack == {"3": 2, "4": 7, "5": 6}
    assert r.verdict == "verified"


def test_bounds_octcyl_edges_tight():
    d = gen.kite_augment(gen.gen_octagonal_cylinder(0))
    r = theorem_bounds(d.base, d)
    assert r.census[2] == 84 == 4 * 24 - 12
    assert r.slack["2"] == 0
    assert r.hypothesis["kappa >= 7"] == UNMET
    assert r.kappa == 5
    assert r.verdict == "vacuous"


def test_bounds_without_drawing():
    d = gen.kite_cube()
    r = theorem_bounds(d.base)
    assert r.hypothesis["1-planar drawing supplied"] == UNMET


def test_bounds_never_negative_when_applicable(corpus):
    for name, d in corpus:
        for audit in (False, True):
            r = theorem_bounds(d.base, d, audit_4conn=audit)
            if all(v == MET for v in r.hypothesis.values()):
                assert all(v >= 0 for v in r.slack.values()), name


def test_f3_lower_examples():
    r = skeleton_f3_lower(gen.kite_cube())
    assert (r.verdict, r.lhs, r.notes["min_degree"]) == ("vacuous", 0, 6)
    r = skeleton_f3_lower(gen.kite_augment(gen.gen_octagonal_cylinder(0)))
    assert (r.verdict, r.lhs, r.notes["min_degree"]) == ("vacuous", 8, 5)


def test_verdict_rules():
    ok = [("a", MET), ("b", ASSUMED)]
    assert IdentityReport.evaluate("x", 7, 8, ok, relation=">=").verdict == "counterexample"
    assert IdentityReport.evaluate("x", 9, 8, ok, relation=">=").verdict == "verified"
    assert IdentityReport.evaluate("x", 7, 8, ok + [("c", UNMET)], relation=">=").verdict == "vacuous"


def test_skeleton_of_generators_satisfies_euler(corpus):
    for name, d in corpus:
        s = skeleton(d)
        if s.connected and s.faces_3_or_4:
            assert euler_face_relation(s).verdict == "verified", name
