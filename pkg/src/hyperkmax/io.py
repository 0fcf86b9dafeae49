"""Reading and writing hypergraphs as ``.hg`` text or JSON.

``.hg`` layout::

    # comments start with '#'
    n r m
    a1 a2 ... ar      (m lines, ascending labels, single spaces)

Writers emit edges in canonical lexicographic order; readers accept any
order and any whitespace between labels.
"""

from __future__ import annotations

import json
from pathlib import Path

from .hypergraph import Hypergraph

__all__ = ["HGParseError", "dumps_hg", "loads_hg", "read_hg", "write_hg", "dumps_json", "loads_json", "load"]


class HGParseError(ValueError):
    """Malformed hypergraph text; ``line`` and ``col`` are 1-based."""

    def __init__(self, msg: str, line: int, col: int = 1, source: str | None = None):
        self.line = line
        self.col = col
        self.source = source
        where = f"{source}:" if source else ""
        super().__init__(f"{where}{line}:{col}: {msg}")


def dumps_hg(h: Hypergraph) -> str:
    lines = [f"{h.n} {h.r} {h.m}"]
    lines.extend(" ".join(map(str, e)) for e in h.edges)
    return "\n".join(lines) + "\n"


def _tokens(line: str) -> list[tuple[str, int]]:
    out = []
    i = 0
    while i < len(line):
        if line[i].isspace():
            i += 1
            continue
        j = i
        while j < len(line) and not line[j].isspace():
            j += 1
        out.append((line[i:j], i + 1))
        i = j
    return out


def _int(tok: str, lineno: int, col: int, what: str, source: str | None) -> int:
    try:
        v = int(tok)
    except ValueError:
        raise HGParseError(f"expected integer {what}, got {tok!r}", lineno, col, source) from None
    if v < 0:
        raise HGParseError(f"{what} must be non-negative, got {v}", lineno, col, source)
    return v


def loads_hg(text: str, source: str | None = None) -> Hypergraph:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if raw.lstrip().startswith("#") or not raw.strip():
            continue
        rows.append((lineno, _tokens(raw)))
    if not rows:
        raise HGParseError("missing header 'n r m'", 1, 1, source)
    hline, head = rows[0]
    if len(head) != 3:
        col = head[3][1] if len(head) > 3 else head[-1][1] + len(head[-1][0])
        raise HGParseError(f"header needs exactly 3 fields 'n r m', got {len(head)}", hline, col, source)
    n, r, m = (_int(t, hline, c, w, source) for (t, c), w in zip(head, ("n", "r", "m")))
    if r < 2:
        raise HGParseError(f"uniformity r must be >= 2, got {r}", hline, head[1][1], source)
    body = rows[1:]
    if len(body) != m:
        at = body[m][0] if len(body) > m else (body[-1][0] + 1 if body else hline + 1)
        raise HGParseError(f"header declares {m} edges but found {len(body)}", at, 1, source)
    edges = []
    seen: dict[tuple[int, ...], int] = {}
    for lineno, toks in body:
        if len(toks) != r:
            col = toks[r][1] if len(toks) > r else toks[-1][1]
            raise HGParseError(f"edge needs {r} labels, got {len(toks)}", lineno, col, source)
        labels = []
        for t, c in toks:
            v = _int(t, lineno, c, "vertex label", source)
            if v >= n:
                raise HGParseError(f"vertex {v} outside [0, {n})", lineno, c, source)
            if v in labels:
                raise HGParseError(f"repeated vertex {v} in edge", lineno, c, source)
            labels.append(v)
        key = tuple(sorted(labels))
        if key in seen:
            raise HGParseError(f"duplicate edge {key} (first on line {seen[key]})", lineno, 1, source)
        seen[key] = lineno
        edges.append(key)
    return Hypergraph.from_edges(n, r, edges)


def read_hg(path: str | Path) -> Hypergraph:
    p = Path(path)
    return loads_hg(p.read_text(), source=str(p))


def write_hg(h: Hypergraph, path: str | Path) -> None:
    Path(path).write_text(dumps_hg(h))


def dumps_json(h: Hypergraph) -> str:
    return json.dumps(h.to_dict(), separators=(",", ":"))


def loads_json(text: str) -> Hypergraph:
    data = json.loads(text)
    try:
        return Hypergraph.from_edges(int(data["n"]), int(data["r"]), data["edges"])
    except KeyError as exc:
        raise ValueError(f"JSON hypergraph missing field {exc}") from None


def load(path: str | Path) -> Hypergraph:
    """Read ``.json`` files as JSON and anything else as ``.hg`` text."""
    p = Path(path)
    if p.suffix.lower() == ".json":
        return loads_json(p.read_text())
    return read_hg(p)
