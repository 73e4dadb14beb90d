"""Edge-list and DIMACS-style text formats."""

from __future__ import annotations

import sys
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .graph import Graph, GraphInputError, build_graph


class ParseError(GraphInputError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass
class LabeledGraph:
    graph: Graph
    labels: list[str]

    def label(self, v: int) -> str:
        return self.labels[v]

    def labels_of(self, vs: Iterable[int]) -> list[str]:
        return [self.labels[v] for v in vs]


def _is_int(tok: str) -> bool:
    return tok.isascii() and tok.isdigit()


def parse_graph(text: str) -> LabeledGraph:
    """Parse an edge list.

    Accepted lines: ``# comment``, an optional ``n <count>`` header, ``u v``
    edges and single-token vertex declarations.  The DIMACS dialect
    (``c`` comments, ``p edge <n> <m>``, ``e <u> <v>`` with 1-based ids) is
    detected from its ``p`` line.  When every label is a non-negative integer
    the integers are used as ids; otherwise labels are numbered in order of
    first appearance.
    """
    rows: list[tuple[int, list[str]]] = []
    header_n: Optional[int] = None
    dimacs = False
    lines = [(i, raw.split("#", 1)[0].split()) for i, raw in enumerate(text.splitlines(), 1)]
    # "c" is a comment marker only in files that carry a "p" line
    dialect = any(toks and toks[0] == "p" for _, toks in lines)
    for lineno, toks in lines:
        if not toks:
            continue
        head = toks[0]
        if dialect and head == "c":
            continue
        if head == "p":
            if len(toks) != 4 or toks[1] != "edge" or not (_is_int(toks[2]) and _is_int(toks[3])):
                raise ParseError(lineno, "expected 'p edge <n> <m>'")
            if rows or header_n is not None:
                raise ParseError(lineno, "'p' line must come before any edge")
            dimacs = True
            header_n = int(toks[2])
            continue
        if dimacs:
            if head != "e" or len(toks) != 3 or not (_is_int(toks[1]) and _is_int(toks[2])):
                raise ParseError(lineno, "expected 'e <u> <v>'")
            u, v = int(toks[1]), int(toks[2])
            if not (1 <= u <= header_n and 1 <= v <= header_n):  # type: ignore[operator]
                raise ParseError(lineno, f"vertex outside 1..{header_n}")
            if u == v:
                raise ParseError(lineno, f"self-loop at {u}")
            rows.append((lineno, [str(u - 1), str(v - 1)]))
            continue
        if head == "n" and len(toks) == 2 and not rows and header_n is None:
            if not _is_int(toks[1]):
                raise ParseError(lineno, "vertex count must be a non-negative integer")
            header_n = int(toks[1])
            continue
        if len(toks) > 2:
            raise ParseError(lineno, f"expected at most two labels, got {len(toks)}")
        if len(toks) == 2 and toks[0] == toks[1]:
            raise ParseError(lineno, f"self-loop at {toks[0]}")
        rows.append((lineno, toks))

    numeric = all(_is_int(t) for _, toks in rows for t in toks)
    if numeric:
        top = max((int(t) for _, toks in rows for t in toks), default=-1)
        n = top + 1
        if header_n is not None:
            if top >= header_n:
                bad = next(ln for ln, toks in rows if any(int(t) >= header_n for t in toks))
                raise ParseError(bad, f"vertex id outside 0..{header_n - 1}")
            n = header_n
        labels = [str(i) for i in range(n)]
        if dimacs:
            labels = [str(i + 1) for i in range(n)]
        edges = [(int(a), int(b)) for _, toks in rows if len(toks) == 2 for a, b in [toks]]
        return LabeledGraph(build_graph(edges, n), labels)

    ids: dict[str, int] = {}
    for _, toks in rows:
        for t in toks:
            if t not in ids:
                ids[t] = len(ids)
    if header_n is not None and header_n != len(ids):
        raise ParseError(1, f"header says {header_n} vertices but {len(ids)} labels appear")
    edges = [(ids[toks[0]], ids[toks[1]]) for _, toks in rows if len(toks) == 2]
    return LabeledGraph(build_graph(edges, len(ids)), list(ids))


def read_graph(path: str) -> LabeledGraph:
    if path == "-":
        return parse_graph(sys.stdin.read())
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def format_graph(g: Graph, labels: Optional[Sequence[str]] = None) -> str:
    """Canonical text for ``g``; parsing it back and formatting again is a no-op.

    Integer ids give an ``n`` header and sorted ``u v`` lines.  Labels
    ``1..n`` (as read from DIMACS) are written back as DIMACS.  Any other
    labels are written as sorted label pairs followed by the isolated labels.
    """
    n = g.n
    if labels is None or list(labels) == [str(i) for i in range(n)]:
        lines = [f"n {n}"]
        lines.extend(f"{u} {v}" for u, v in g.edges())
    elif list(labels) == [str(i + 1) for i in range(n)]:
        lines = [f"p edge {n} {g.m}"]
        lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    else:
        pairs = sorted(tuple(sorted((labels[u], labels[v]))) for u, v in g.edges())
        lines = [f"{a} {b}" for a, b in pairs]
        lines.extend(sorted(labels[v] for v in range(n) if g.degree(v) == 0))
    return "\n".join(lines) + "\n"
