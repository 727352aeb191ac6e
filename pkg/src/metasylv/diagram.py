"""Explicit finite posets: elements, cover edges, and lattice checks.

Diagrams are small by construction; everything here is brute force over
the cover DAG.  Node order is lexicographic on the canonical labels so
output is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Optional, TypeVar

import networkx as nx

from .errors import AlphabetError
from .metasylvester import enumerate_classes, meta_covers
from .weak_order import MPermutation, enumerate_mpermutations, weak_covers

T = TypeVar("T")


@dataclass(frozen=True)
class LatticeDiagram:
    """A poset given by labeled elements and cover edges (lower, upper)."""

    kind: str
    elements: tuple[str, ...]
    covers: tuple[tuple[int, int], ...]

    def to_dict(self) -> dict:
        return {"kind": self.kind, "elements": list(self.elements),
                "covers": [list(c) for c in self.covers]}

    @classmethod
    def from_dict(cls, data: dict) -> "LatticeDiagram":
        return cls(data["kind"], tuple(data["elements"]),
                   tuple((lo, hi) for lo, hi in data["covers"]))

    def to_dot(self) -> str:
        lines = [f"digraph {self.kind} {{", "  rankdir=BT;"]
        for idx, label in enumerate(self.elements):
            lines.append(f"  e{idx} [label=\"{label}\"];")
        for lo, hi in self.covers:
            lines.append(f"  e{lo} -> e{hi};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def upsets(self) -> list[set[int]]:
        """For each element, the indices weakly above it."""
        n = len(self.elements)
        up: list[set[int]] = [{i} for i in range(n)]
        succ: list[list[int]] = [[] for _ in range(n)]
        for lo, hi in self.covers:
            succ[lo].append(hi)
        changed = True
        while changed:
            changed = False
            for i in range(n):
                before = len(up[i])
                for j in succ[i]:
                    up[i] |= up[j]
                changed = changed or len(up[i]) != before
        return up

    def downsets(self) -> list[set[int]]:
        return self.reversed().upsets()

    def leq(self, i: int, j: int) -> bool:
        return j in self.upsets()[i]

    def reversed(self) -> "LatticeDiagram":
        return LatticeDiagram(self.kind, self.elements,
                              tuple((hi, lo) for lo, hi in self.covers))

    def cover_labels(self) -> set[tuple[str, str]]:
        return {(self.elements[lo], self.elements[hi]) for lo, hi in self.covers}

    def join_table(self) -> Optional[list[list[int]]]:
        """Pairwise least upper bounds, or None if some pair has none."""
        return _bound_table(self.upsets())

    def meet_table(self) -> Optional[list[list[int]]]:
        return _bound_table(self.downsets())

    def is_lattice(self) -> bool:
        return self.join_table() is not None and self.meet_table() is not None


def _bound_table(up: list[set[int]]) -> Optional[list[list[int]]]:
    n = len(up)
    table = [[-1] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            common = up[i] & up[j]
            least = [x for x in common if all(y in up[x] for y in common)]
            if len(least) != 1:
                return None
            table[i][j] = table[j][i] = least[0]
    return table


def diagram_from_covers(kind: str, items: Iterable[T],
                        label_of: Callable[[T], str],
                        covers_of: Callable[[T], Iterable[T]]) -> LatticeDiagram:
    items = list(items)
    labels = sorted(label_of(x) for x in items)
    if len(set(labels)) != len(labels):
        raise AlphabetError("labels must be unique")
    index = {lab: i for i, lab in enumerate(labels)}
    edges = set()
    for x in items:
        lo = index[label_of(x)]
        for y in covers_of(x):
            edges.add((lo, index[label_of(y)]))
    return LatticeDiagram(kind, tuple(labels), tuple(sorted(edges)))


def diagram_from_leq(kind: str, items: Iterable[T],
                     label_of: Callable[[T], str],
                     leq: Callable[[T, T], bool]) -> LatticeDiagram:
    """Build covers as the transitive reduction of the strict order."""
    items = sorted(items, key=label_of)
    graph = nx.DiGraph()
    graph.add_nodes_from(range(len(items)))
    for i, x in enumerate(items):
        for j, y in enumerate(items):
            if i != j and leq(x, y) and not leq(y, x):
                graph.add_edge(i, j)
    reduced = nx.transitive_reduction(graph)
    return LatticeDiagram(kind, tuple(label_of(x) for x in items),
                          tuple(sorted(reduced.edges())))


def find_isomorphism(d1: LatticeDiagram,
                     d2: LatticeDiagram) -> Optional[dict[str, str]]:
    """A label-to-label poset isomorphism, if one exists."""
    g1, g2 = nx.DiGraph(list(d1.covers)), nx.DiGraph(list(d2.covers))
    g1.add_nodes_from(range(len(d1.elements)))
    g2.add_nodes_from(range(len(d2.elements)))
    matcher = nx.algorithms.isomorphism.DiGraphMatcher(g1, g2)
    for mapping in matcher.isomorphisms_iter():
        return {d1.elements[i]: d2.elements[j] for i, j in mapping.items()}
    return None


def word_label(sigma: MPermutation) -> str:
    sep = "" if sigma.n <= 9 else ","
    return sep.join(str(v) for v in sigma.word)


def weak_lattice_diagram(n: int, m: int) -> LatticeDiagram:
    return diagram_from_covers("weak", enumerate_mpermutations(n, m),
                               word_label, weak_covers)


def metasylvester_lattice_diagram(n: int, m: int) -> LatticeDiagram:
    return diagram_from_covers(
        "metasylvester", enumerate_classes(n, m),
        lambda cls: word_label(cls.canonical),
        lambda cls: [c for c in meta_covers(cls)])
