"""Text formats: ``.1pl`` drawings and plain edge lists."""

from __future__ import annotations

from pathlib import Path
from typing import Optional, Union

from .drawing import OnePlaneDrawing, canonical_cycle, validate_drawing
from .graph import GraphError, SimpleGraph, build_graph

MAGIC = "1PL v1"

PathLike = Union[str, Path]


class FormatError(ValueError):
    """Malformed input file; the message starts with the offending line number."""

    def __init__(self, lineno: int, reason: str):
        super().__init__(f"line {lineno}: {reason}")
        self.lineno = lineno
        self.reason = reason


def _lines(text: str) -> list[tuple[int, str]]:
    out = []
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            out.append((i, line))
    return out


def _ints(lineno: int, tokens: list[str]) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise FormatError(lineno, f"expected integers, got {' '.join(tokens)!r}") from None


class _Cursor:
    def __init__(self, text: str):
        self.rows = _lines(text)
        self.i = 0

    def next(self, what: str) -> tuple[int, str]:
        if self.i >= len(self.rows):
            last = self.rows[-1][0] if self.rows else 0
            raise FormatError(last + 1, f"unexpected end of file, expected {what}")
        row = self.rows[self.i]
        self.i += 1
        return row

    def keyed(self, key: str, count: int, what: str) -> tuple[int, list[int]]:
        lineno, line = self.next(what)
        tokens = line.split()
        if tokens[0] != key or len(tokens) != count + 1:
            raise FormatError(lineno, f"expected {what}, got {line!r}")
        return lineno, _ints(lineno, tokens[1:])


# ---------------------------------------------------------------------------
# .1pl
# ---------------------------------------------------------------------------


def parse_1pl(text: str) -> OnePlaneDrawing:
    cur = _Cursor(text)
    lineno, line = cur.next("header")
    if line != MAGIC:
        raise FormatError(lineno, f"expected header {MAGIC!r}, got {line!r}")
    _, (n,) = cur.keyed("n", 1, "'n <int>'")
    _, (m,) = cur.keyed("m", 1, "'m <int>'")
    if n < 0 or m < 0:
        raise FormatError(lineno, "negative count")
    edges = [cur.keyed("e", 2, "'e <u> <v>'")[1] for _ in range(m)]
    _, (c,) = cur.keyed("c", 1, "'c <int>'")
    crossings = [cur.keyed("x", 2, "'x <e1> <e2>'")[1] for _ in range(c)]
    rotation: list[Optional[list[int]]] = [None] * (n + c)
    for _ in range(n + c):
        lineno, line = cur.next("'r <vid> : <neighbours>'")
        head, sep, tail = line.partition(":")
        tokens = head.split()
        if not sep or len(tokens) != 2 or tokens[0] != "r":
            raise FormatError(lineno, f"expected 'r <vid> : <neighbours>', got {line!r}")
        (vid,) = _ints(lineno, tokens[1:])
        if not 0 <= vid < n + c:
            raise FormatError(lineno, f"rotation for unknown vertex {vid}")
        if rotation[vid] is not None:
            raise FormatError(lineno, f"second rotation for vertex {vid}")
        rotation[vid] = _ints(lineno, tail.split())
    if cur.i < len(cur.rows):
        lineno, line = cur.rows[cur.i]
        raise FormatError(lineno, f"trailing content {line!r}")
    return validate_drawing(n, edges, crossings, rotation)  # type: ignore[arg-type]


def format_1pl(d: OnePlaneDrawing) -> str:
    out = [MAGIC, f"n {d.n}", f"m {d.m}"]
    out += [f"e {u} {v}" for u, v in d.edge_list]
    out.append(f"c {d.c}")
    out += [f"x {e1} {e2}" for e1, e2 in d.crossings]
    for vid, r in enumerate(d.rotation):
        nbrs = " ".join(str(w) for w in canonical_cycle(r))
        out.append(f"r {vid} : {nbrs}".rstrip())
    return "\n".join(out) + "\n"


def read_1pl(path: PathLike) -> OnePlaneDrawing:
    return parse_1pl(Path(path).read_text())


def write_1pl(d: OnePlaneDrawing, path: PathLike) -> None:
    Path(path).write_text(format_1pl(d))


def roundtrip(d: OnePlaneDrawing) -> OnePlaneDrawing:
    return parse_1pl(format_1pl(d))


# ---------------------------------------------------------------------------
# Edge lists
# ---------------------------------------------------------------------------


def parse_edge_list(text: str) -> SimpleGraph:
    rows = _lines(text)
    if not rows:
        raise FormatError(1, "empty edge-list file")
    lineno, line = rows[0]
    head = line.split()
    if len(head) != 2:
        raise FormatError(lineno, f"expected 'n m', got {line!r}")
    n, m = _ints(lineno, head)
    if len(rows) - 1 != m:
        raise FormatError(rows[-1][0], f"header promises {m} edges, found {len(rows) - 1}")
    edges = []
    for lineno, line in rows[1:]:
        tokens = line.split()
        if len(tokens) != 2:
            raise FormatError(lineno, f"expected 'u v', got {line!r}")
        edges.append(_ints(lineno, tokens))
    try:
        return build_graph(n, edges)
    except GraphError as exc:
        # point at the first offending line
        seen = set()
        for (lineno, _), (u, v) in zip(rows[1:], edges):
            key = (min(u, v), max(u, v))
            if u == v or key in seen or not (0 <= u < n and 0 <= v < n):
                raise FormatError(lineno, str(exc)) from None
            seen.add(key)
        raise


def format_edge_list(G: SimpleGraph) -> str:
    out = [f"{G.n} {G.m}"] + [f"{u} {v}" for u, v in G.sorted_edges()]
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# Either format
# ---------------------------------------------------------------------------


def is_1pl_text(text: str) -> bool:
    rows = _lines(text)
    return bool(rows) and rows[0][1] == MAGIC


def load_any(path: PathLike) -> tuple[SimpleGraph, Optional[OnePlaneDrawing]]:
    """Graph plus drawing for ``.1pl`` files; graph and None for edge lists."""
    text = Path(path).read_text()
    if is_1pl_text(text):
        d = parse_1pl(text)
        return d.base, d
    return parse_edge_list(text), None
