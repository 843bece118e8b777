"""DIMACS ``.col`` reading and writing (1-based vertices on disk)."""

from __future__ import annotations

from pathlib import Path

from .graph import Graph


class DimacsError(ValueError):
    pass


def read_dimacs(text: str) -> Graph:
    n = None
    declared_m = None
    edges: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        tag = fields[0]
        if tag == "p":
            if n is not None:
                raise DimacsError(f"line {lineno}: duplicate problem line")
            if len(fields) != 4 or fields[1] not in ("edge", "col"):
                raise DimacsError(f"line {lineno}: malformed problem line {line!r}")
            try:
                n, declared_m = int(fields[2]), int(fields[3])
            except ValueError:
                raise DimacsError(f"line {lineno}: non-integer counts in {line!r}") from None
            if n < 0 or declared_m < 0:
                raise DimacsError(f"line {lineno}: negative counts")
        elif tag == "e":
            if n is None:
                raise DimacsError(f"line {lineno}: edge before problem line")
            if len(fields) != 3:
                raise DimacsError(f"line {lineno}: malformed edge line {line!r}")
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                raise DimacsError(f"line {lineno}: non-integer vertex in {line!r}") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise DimacsError(f"line {lineno}: vertex out of range 1..{n}")
            if u == v:
                raise DimacsError(f"line {lineno}: self-loop at vertex {u}")
            edges.add((min(u, v) - 1, max(u, v) - 1))
        else:
            raise DimacsError(f"line {lineno}: unknown line type {tag!r}")
    if n is None:
        raise DimacsError("missing problem line")
    return Graph(n, sorted(edges))


def write_dimacs(g: Graph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"c {part}" for part in comment.splitlines())
    edges = g.edges()
    lines.append(f"p edge {g.n} {len(edges)}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in edges)
    return "\n".join(lines) + "\n"


def load_dimacs(path: str | Path) -> Graph:
    return read_dimacs(Path(path).read_text())
