"""Counting identities and clique bounds as hypothesis-aware verdicts.

Every function reports both sides of its relation even when a hypothesis
fails; only the verdict changes (verified / vacuous / counterexample).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional

from .checks import PYRAMIDAL, check_rich, classify_k4_drawing
from .drawing import (
    OnePlaneDrawing,
    SkeletonMap,
    is_triangulated,
    maximality_hypothesis,
    skeleton,
    trace_faces,
)
from .graph import (
    CliqueCensus,
    SimpleGraph,
    clique_census,
    count_cliques,
    enumerate_3_separators,
    iter_cliques,
    vertex_connectivity,
)
from .reports import IdentityReport, decide, hyp


def _s3(H: SimpleGraph) -> int:
    return enumerate_3_separators(H).s3 if H.n >= 4 else 0


def euler_face_relation(s: SkeletonMap) -> IdentityReport:
    """3 f3 + 4 f4 = 2|E(H)| and f3 + 2 f4 = 2n - 4 for maps with only 3- and 4-faces."""
    f3, f4 = s.f3, s.f4
    return IdentityReport.evaluate(
        "euler: (3f3 + 4f4, f3 + 2f4) = (2|E(H)|, 2n - 4)",
        (3 * f3 + 4 * f4, f3 + 2 * f4),
        (2 * s.graph.m, 2 * s.n - 4),
        [hyp("skeleton connected", s.connected), hyp("faces of degree 3 or 4", s.faces_3_or_4)],
        notes={"f3": f3, "f4": f4},
    )


def _gollin_hypotheses(d: OnePlaneDrawing, H: SkeletonMap) -> list:
    kappa_h = vertex_connectivity(H.graph).kappa if H.n else 0
    return [
        hyp("rich", check_rich(d).rich),
        hyp("skeleton 3-connected", kappa_h >= 3),
        hyp("skeleton faces of degree 3 or 4", H.faces_3_or_4),
        hyp("n >= 5", d.n >= 5),
        maximality_hypothesis(d),
    ]


def gollin_triangle_identity(d: OnePlaneDrawing) -> IdentityReport:
    """N(G,K3) = s3(H) + f3(H) + 4 f4(H) with H the planar skeleton."""
    H = skeleton(d)
    s3 = _s3(H.graph)
    return IdentityReport.evaluate(
        "gollin: N(G,K3) = s3(H) + f3(H) + 4f4(H)",
        count_cliques(d.base, 3),
        s3 + H.f3 + 4 * H.f4,
        _gollin_hypotheses(d, H),
        notes={"s3": s3, "f3": H.f3, "f4": H.f4},
    )


def lemma34_identity(d: OnePlaneDrawing, audit: bool = False) -> IdentityReport:
    """N(G,K3) = f3 + 4 f4 and N(G,K4) = f4 on the skeleton.

    Theorem mode conditions on 7-connectivity. Audit mode conditions on the
    structural facts the identities actually use (no 3-separator in the
    skeleton, richness, pyramidal K4s); when the skeleton does have
    3-separators it instead checks that the triangle discrepancy equals s3.
    """
    G = d.base
    H = skeleton(d)
    f3, f4 = H.f3, H.f4
    n3, n4 = count_cliques(G, 3), count_cliques(G, 4)
    rich = check_rich(d).rich
    notes: dict[str, Any] = {"f3": f3, "f4": f4, "N(G,K3)": n3, "N(G,K4)": n4}
    if not audit:
        kappa = vertex_connectivity(G).kappa
        notes["kappa"] = kappa
        return IdentityReport.evaluate(
            "lemma3.4: (N(G,K3), N(G,K4)) = (f3 + 4f4, f4)",
            (n3, n4),
            (f3 + 4 * f4, f4),
            [hyp("kappa(G) >= 7", kappa >= 7), hyp("rich", rich), maximality_hypothesis(d)],
            notes=notes,
        )

    s3 = _s3(H.graph)
    notes["s3"] = s3
    if s3 > 0:
        discrepancy = n3 - (f3 + 4 * f4)
        notes["discrepancy"] = discrepancy
        return IdentityReport.evaluate(
            "lemma3.4 audit: N(G,K3) - (f3 + 4f4) = s3(H)",
            discrepancy,
            s3,
            _gollin_hypotheses(d, H),
            notes=notes,
        )
    pyramidal = all(classify_k4_drawing(d, q).kind == PYRAMIDAL for q in iter_cliques(G, 4))
    return IdentityReport.evaluate(
        "lemma3.4 audit: (N(G,K3), N(G,K4)) = (f3 + 4f4, f4)",
        (n3, n4),
        (f3 + 4 * f4, f4),
        [hyp("s3(H) = 0", True), hyp("every K4 pyramidal", pyramidal)] + _gollin_hypotheses(d, H),
        notes=notes,
    )


def skeleton_f3_lower(d: OnePlaneDrawing) -> IdentityReport:
    """At least 8 uncrossed triangular faces when triangulated with minimum degree 7."""
    t3 = trace_faces(d).t3
    delta = d.base.min_degree()
    return IdentityReport.evaluate(
        "f3 lower bound: t3 >= 8",
        t3,
        8,
        [hyp("triangulated", is_triangulated(d)), hyp("min degree = 7", delta == 7)],
        relation=">=",
        notes={"min_degree": delta},
    )


# ---------------------------------------------------------------------------
# Clique bounds
# ---------------------------------------------------------------------------

THEOREM = "theorem"
AUDIT_4CONN = "audit-4conn"


def theorem_thresholds(n: int, t_top: int = 6) -> dict[str, int]:
    """Upper bounds for 7-connected 1-planar graphs of order n."""
    out = {"2": 4 * n - 12, "3": 4 * n - 16, "4": n - 6}
    for t in range(5, t_top + 1):
        out[str(t)] = 0
    out["total"] = 10 * n - 33
    return out


def audit_thresholds(n: int) -> dict[str, int]:
    """Bounds for 4-connected 1-planar graphs of order n >= 7."""
    return {"3": 6 * n - 14, "4": 4 * n - 9, "5": n - 2}


def threshold_sum(n: int) -> int:
    """1 + n + (4n - 12) + (4n - 16) + (n - 6): empty set, vertices, edges, triangles, K4s."""
    return 1 + n + (4 * n - 12) + (4 * n - 16) + (n - 6)


@dataclass(frozen=True)
class BoundReport:
    n: int
    census: CliqueCensus
    thresholds: dict
    slack: dict
    mode: str
    hypothesis: dict
    verdict: str
    kappa: int = 0
    notes: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "census": list(self.census.counts),
            "total": self.census.total,
            "thresholds": dict(self.thresholds),
            "slack": dict(self.slack),
            "mode": self.mode,
            "hypothesis": dict(self.hypothesis),
            "kappa": self.kappa,
            "verdict": self.verdict,
        }


def theorem_bounds(
    G: SimpleGraph, d: Optional[OnePlaneDrawing] = None, audit_4conn: bool = False
) -> BoundReport:
    census = clique_census(G)
    kappa = vertex_connectivity(G).kappa if G.n else 0
    n = G.n
    drawn = d is not None and d.base == G

    hyps = []
    if audit_4conn:
        mode = AUDIT_4CONN
        thresholds = audit_thresholds(n)
        hyps += [hyp("kappa >= 4", kappa >= 4), hyp("n >= 7", n >= 7)]
    else:
        mode = THEOREM
        thresholds = theorem_thresholds(n, len(census.counts) - 1)
        hyps.append(hyp("kappa >= 7", kappa >= 7))
    hyps.append(hyp("1-planar drawing supplied", drawn))

    slack = {}
    for key, bound in thresholds.items():
        value = census.total if key == "total" else census[int(key)]
        slack[key] = bound - value
    verdict = decide(hyps, all(v >= 0 for v in slack.values()))
    return BoundReport(
        n=n,
        census=census,
        thresholds=thresholds,
        slack=slack,
        mode=mode,
        hypothesis=dict(hyps),
        verdict=verdict,
        kappa=kappa,
    )
