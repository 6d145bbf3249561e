"""Command-line front end.

Exit status: 0 on success, 1 on input or precondition errors, 2 when any
report carries a counterexample verdict.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Optional, Sequence

from . import checks, generators, theorems
from .drawing import DrawingError, OnePlaneDrawing, biedl_check, skeleton, trace_faces
from .graph import GraphError, clique_census, enumerate_3_separators, vertex_connectivity
from .io import FormatError, format_1pl, format_edge_list, load_any, read_1pl
from .reports import COUNTEREXAMPLE, flatten

EXIT_OK, EXIT_INPUT, EXIT_COUNTEREXAMPLE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit with status 2
        raise UsageError(f"{self.prog}: {message}")


@dataclass
class RunReport:
    command: str
    inputs: list[str]
    payload: Any = None
    exit_status: int = EXIT_OK
    error: Optional[str] = None
    raw_output: Optional[str] = None  # generator output written verbatim
    output_path: Optional[str] = None
    fmt: str = "json"
    quiet: bool = False
    extra: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        out = {"command": self.command, "inputs": list(self.inputs), "exit_status": self.exit_status}
        if self.error is not None:
            out["error"] = self.error
        else:
            out["result"] = self.payload
        return out

    def render(self) -> str:
        if self.raw_output is not None and self.error is None:
            return self.raw_output
        if self.fmt == "tsv":
            return "".join(f"{k}\t{v}\n" for k, v in flatten(self.to_dict()))
        return json.dumps(self.to_dict(), indent=2) + "\n"


def _has_counterexample(payload: Any) -> bool:
    if isinstance(payload, dict):
        if payload.get("verdict") == COUNTEREXAMPLE:
            return True
        return any(_has_counterexample(v) for v in payload.values())
    if isinstance(payload, list):
        return any(_has_counterexample(v) for v in payload)
    return False


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _drawing(path: str) -> OnePlaneDrawing:
    return read_1pl(path)


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def _cmd_validate(a) -> Any:
    d = _drawing(a.file)
    F = len(trace_faces(d).faces)
    return {"valid": True, "n": d.n, "m": d.m, "c": d.c, "V": d.n + d.c, "E": d.m + 2 * d.c, "F": F}


def _cmd_faces(a) -> Any:
    census = trace_faces(_drawing(a.file))
    out = census.summary()
    out["walks"] = [{"walk": list(f.walk), "degree": f.degree, "crossed": f.crossed} for f in census.faces]
    return out


def _cmd_skeleton(a) -> Any:
    s = skeleton(_drawing(a.file))
    if a.output:
        if not s.connected:
            raise DrawingError("cannot write a disconnected skeleton as .1pl")
        Path(a.output).write_text(format_1pl(s.as_drawing()))
    return {
        "n": s.n,
        "m": s.graph.m,
        "edges": [list(e) for e in s.graph.sorted_edges()],
        "connected": s.connected,
        "faces_3_or_4": s.faces_3_or_4,
        "euler": s.euler_note,
        **s.face_census.summary(),
    }


def _cmd_census(a) -> Any:
    G, _ = load_any(a.file)
    c = clique_census(G, a.t_max)
    return {"n": G.n, "counts": list(c.counts), "total": c.total}


def _cmd_kappa(a) -> Any:
    G, _ = load_any(a.file)
    r = vertex_connectivity(G)
    return {"kappa": r.kappa, "witness": None if r.witness is None else sorted(r.witness)}


def _cmd_separators3(a) -> Any:
    G, _ = load_any(a.file)
    r = enumerate_3_separators(G)
    return {
        "s3": r.s3,
        "separators": [sorted(s) for s in r.separators],
        "disconnected_input": r.disconnected_input,
    }


def _cmd_rich(a) -> Any:
    return checks.check_rich(_drawing(a.file), strict=a.strict_kite).to_dict()


def _cmd_conflict(a) -> Any:
    d = _drawing(a.file)
    if a.cycle:
        return checks.cycle_sides(d, _int_list(a.cycle)).to_dict()
    found = checks.find_conflict_triangles(d)
    return {"conflict_triangles": [r.to_dict() for r in found], "count": len(found)}


def _cmd_classify_k4(a) -> Any:
    return checks.classify_k4_drawing(_drawing(a.file), _int_list(a.clique)).to_dict()


def _cmd_identity(a) -> Any:
    d = _drawing(a.file)
    if a.which == "gollin":
        r = theorems.gollin_triangle_identity(d)
    elif a.which == "lemma34":
        r = theorems.lemma34_identity(d, audit=a.audit)
    elif a.which == "euler":
        r = theorems.euler_face_relation(skeleton(d))
    elif a.which == "biedl":
        r = biedl_check(d)
    else:
        r = theorems.skeleton_f3_lower(d)
    return r.to_dict()


def _cmd_audit(a) -> Any:
    return [r.to_dict() for r in checks.lemma_audit(_drawing(a.file))]


def _cmd_bounds(a) -> Any:
    G, d = load_any(a.file)
    if a.drawing:
        d = _drawing(a.drawing)
    return theorems.theorem_bounds(G, d, audit_4conn=a.audit_4conn).to_dict()


def _cmd_gen(a) -> str:
    if a.family == "kite-augment":
        if len(a.params) != 1:
            raise UsageError("kite-augment takes one .1pl file")
        d = generators.kite_augment(skeleton(_drawing(a.params[0])))
    else:
        try:
            params = tuple(int(p) for p in a.params)
        except ValueError:
            raise UsageError(f"integer parameters expected, got {a.params}") from None
        d = generators.generate(generators.GeneratorSpec(a.family, params, a.seed))
        if a.kite:
            d = generators.kite_augment(skeleton(d))
    return format_edge_list(d.base) if a.edge_list else format_1pl(d)


_HANDLERS = {
    "validate": _cmd_validate,
    "faces": _cmd_faces,
    "skeleton": _cmd_skeleton,
    "census": _cmd_census,
    "kappa": _cmd_kappa,
    "separators3": _cmd_separators3,
    "rich": _cmd_rich,
    "conflict": _cmd_conflict,
    "classify-k4": _cmd_classify_k4,
    "identity": _cmd_identity,
    "audit": _cmd_audit,
    "bounds": _cmd_bounds,
    "gen": _cmd_gen,
}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "tsv"), default="json")
    common.add_argument("--quiet", action="store_true", help="print nothing; exit status only")

    p = _Parser(prog="oneplanar", description="1-plane drawing checks and clique bounds")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def add(name, help_text):
        return sub.add_parser(name, help=help_text, parents=[common])

    add("validate", "validate a .1pl drawing").add_argument("file")
    add("faces", "trace faces of a drawing").add_argument("file")
    s = add("skeleton", "planar skeleton of a drawing")
    s.add_argument("file")
    s.add_argument("-o", "--output")
    s = add("census", "clique census")
    s.add_argument("file")
    s.add_argument("--t-max", type=int, default=6)
    add("kappa", "vertex connectivity").add_argument("file")
    add("separators3", "all 3-separators").add_argument("file")
    s = add("rich", "kite check per crossing")
    s.add_argument("file")
    s.add_argument("--strict-kite", action="store_true")
    s = add("conflict", "conflict triangles, or the sides of one cycle")
    s.add_argument("file")
    s.add_argument("--cycle")
    s = add("classify-k4", "tetrahedral or pyramidal")
    s.add_argument("file")
    s.add_argument("--clique", required=True)
    s = add("identity", "check a counting identity")
    s.add_argument("which", choices=("gollin", "lemma34", "euler", "biedl", "f3lower"))
    s.add_argument("file")
    s.add_argument("--audit", action="store_true")
    add("audit", "run every structural lemma check").add_argument("file")
    s = add("bounds", "clique counts against the 7-connected bounds")
    s.add_argument("file")
    s.add_argument("--audit-4conn", action="store_true")
    s.add_argument("--drawing")
    s = add("gen", "generate an instance")
    s.add_argument("family", choices=generators.FAMILIES + ("kite-augment",))
    s.add_argument("params", nargs="*")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--kite", action="store_true", help="kite-augment a skeleton family")
    s.add_argument("--edge-list", action="store_true", help="emit the abstract graph only")
    s.add_argument("-o", "--output")
    return p


def cli_dispatch(argv: Sequence[str]) -> RunReport:
    argv = list(argv)
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        return RunReport(command=argv[0] if argv else "", inputs=argv[1:], exit_status=EXIT_INPUT, error=str(exc))

    inputs = [v for k, v in sorted(vars(args).items()) if k in ("file", "drawing") and v]
    report = RunReport(command=args.command, inputs=inputs, fmt=args.format, quiet=args.quiet)
    try:
        result = _HANDLERS[args.command](args)
    except (FormatError, DrawingError, GraphError, UsageError, ValueError, OSError) as exc:
        report.exit_status = EXIT_INPUT
        report.error = str(exc)
        return report

    if args.command == "gen":
        if args.output:
            Path(args.output).write_text(result)
            report.payload = {"written": args.output}
            report.output_path = args.output
        else:
            report.raw_output = result
        return report
    report.payload = result
    if _has_counterexample(result):
        report.exit_status = EXIT_COUNTEREXAMPLE
    return report


def main(argv: Optional[Sequence[str]] = None) -> int:
    report = cli_dispatch(sys.argv[1:] if argv is None else argv)
    if not report.quiet:
        stream = sys.stderr if report.error else sys.stdout
        stream.write(report.render())
    return report.exit_status


if __name__ == "__main__":
    sys.exit(main())
