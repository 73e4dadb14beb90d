"""Forbidden-structure witnesses and an independent structural validator."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .graph import Graph


class WitnessKind(enum.Enum):
    TRIANGLE = "Triangle"
    NON_DOMINATED_C4 = "NonDominatedC4"
    INDUCED_C5 = "InducedC5"
    INDUCED_C6 = "InducedC6"

    def __str__(self) -> str:
        return self.value


_LENGTH = {
    WitnessKind.TRIANGLE: 3,
    WitnessKind.NON_DOMINATED_C4: 4,
    WitnessKind.INDUCED_C5: 5,
    WitnessKind.INDUCED_C6: 6,
}


@dataclass(frozen=True)
class Witness:
    """A forbidden structure given as a cycle-ordered vertex sequence (ids)."""

    kind: WitnessKind
    vertices: tuple[int, ...]

    def __str__(self) -> str:
        return f"{self.kind} " + " ".join(map(str, self.vertices))


HBH = "HBH"


class NotInClassError(ValueError):
    """Raised when an operation needs a triangle-free C4-dominated graph."""

    def __init__(self, witness: Witness):
        super().__init__(f"graph is outside the class: {witness}")
        self.witness = witness


def witness_problems(g: Graph, w: Witness) -> list[str]:
    """Everything wrong with ``w`` as a witness in ``g``; empty when valid.

    Uses plain neighbor sets only, so it shares no code path with the
    detectors it checks.
    """
    vs = list(w.vertices)
    k = _LENGTH[w.kind]
    problems = []
    if len(vs) != k:
        return [f"expected {k} vertices, got {len(vs)}"]
    if len(set(vs)) != k:
        return ["repeated vertex"]
    if any(not (0 <= v < g.n) for v in vs):
        return ["vertex out of range"]
    nbrs = {v: set(g.neighbors(v)) for v in vs}
    for i in range(k):
        a, b = vs[i], vs[(i + 1) % k]
        if b not in nbrs[a]:
            problems.append(f"missing cycle edge {a}-{b}")
    if k > 3:
        for i in range(k):
            for j in range(i + 2, k):
                if i == 0 and j == k - 1:
                    continue
                if vs[j] in nbrs[vs[i]]:
                    problems.append(f"chord {vs[i]}-{vs[j]}")
    if w.kind is WitnessKind.NON_DOMINATED_C4:
        full = {v: set(g.neighbors(v)) for v in vs}
        for x, y in ((vs[0], vs[2]), (vs[1], vs[3])):
            if full[x] <= full[y] or full[y] <= full[x]:
                problems.append(f"opposite pair {x},{y} is dom-comparable")
    return problems


def validate_witness(g: Graph, w: Witness) -> bool:
    return not witness_problems(g, w)
