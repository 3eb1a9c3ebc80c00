"""Total labelings, vertex-only labelings, and the edge-magic extension step."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import NonIntegralLabel, NotConsecutive, ParameterOutOfRange
from .graph import Edge, Graph, edge_key, path_forest, vx


def exact(value) -> int:
    """Coerce an exact rational to int, refusing to round."""
    if isinstance(value, Fraction):
        if value.denominator != 1:
            raise NonIntegralLabel(f"formula produced non-integer {value}")
        return int(value)
    if isinstance(value, bool) or not isinstance(value, int):
        raise NonIntegralLabel(f"formula produced non-integer {value!r}")
    return value


def half(x: int) -> Fraction:
    return Fraction(x, 2)


def quarter(x: int) -> Fraction:
    return Fraction(x, 4)


@dataclass(frozen=True)
class TotalLabeling:
    vertex_labels: dict[str, int]
    edge_labels: dict[Edge, int]
    corrections: tuple[str, ...] = field(default=(), compare=False)

    def __getitem__(self, element):
        if isinstance(element, tuple):
            return self.edge_labels[edge_key(*element)]
        return self.vertex_labels[element]

    def all_labels(self) -> list[int]:
        return list(self.vertex_labels.values()) + list(self.edge_labels.values())

    def weight(self, vertices, edges) -> int:
        return sum(self.vertex_labels[u] for u in vertices) + sum(self.edge_labels[e] for e in edges)

    def swapped(self, a, b) -> "TotalLabeling":
        """Copy with the labels of elements ``a`` and ``b`` exchanged."""
        vl, el = dict(self.vertex_labels), dict(self.edge_labels)

        def get(x):
            return el[edge_key(*x)] if isinstance(x, tuple) else vl[x]

        def put(x, val):
            if isinstance(x, tuple):
                el[edge_key(*x)] = val
            else:
                vl[x] = val

        la, lb = get(a), get(b)
        put(a, lb)
        put(b, la)
        return TotalLabeling(vl, el, self.corrections)


class LabelBuilder:
    """Collects labels from closed-form formulas, enforcing exact integers and no overwrites."""

    def __init__(self):
        self.vertex_labels: dict[str, int] = {}
        self.edge_labels: dict[Edge, int] = {}

    def vertex(self, u: str, value) -> None:
        if u in self.vertex_labels:
            raise AssertionError(f"vertex {u} labeled twice")
        self.vertex_labels[u] = exact(value)

    def edge(self, a: str, b: str, value) -> None:
        key = edge_key(a, b)
        if key in self.edge_labels:
            raise AssertionError(f"edge {key} labeled twice")
        self.edge_labels[key] = exact(value)

    def build(self, corrections=()) -> TotalLabeling:
        return TotalLabeling(self.vertex_labels, self.edge_labels, tuple(corrections))


@dataclass(frozen=True)
class PartialVertexLabeling:
    vertex_labels: dict[str, int]
    edge_sums: tuple[int, ...]

    @classmethod
    def on(cls, g: Graph, vertex_labels: dict[str, int]) -> "PartialVertexLabeling":
        if set(vertex_labels) != set(g.vertices):
            raise ValueError("vertex labels must cover exactly the graph's vertices")
        if sorted(vertex_labels.values()) != list(range(1, len(g.vertices) + 1)):
            raise ValueError("vertex labels must be a bijection onto 1..v")
        sums = tuple(sorted(vertex_labels[a] + vertex_labels[b] for a, b in g.edges))
        return cls(dict(vertex_labels), sums)

    @property
    def min_sum(self) -> int:
        return min(self.edge_sums)


def sem_extend(partial: PartialVertexLabeling, g: Graph) -> TotalLabeling:
    """Extend a vertex labeling with consecutive edge sums to a super edge-magic total labeling.

    Edge ``xy`` gets ``c - λ(x) - λ(y)`` where ``c = v + e + min(S)``, so edge
    labels run over ``v+1 .. v+e``.
    """
    sums = [partial.vertex_labels[a] + partial.vertex_labels[b] for a, b in g.edges]
    lo = min(sums)
    if sorted(sums) != list(range(lo, lo + len(sums))):
        raise NotConsecutive(sums)
    c = len(g.vertices) + len(g.edges) + lo
    edge_labels = {(a, b): c - partial.vertex_labels[a] - partial.vertex_labels[b] for a, b in g.edges}
    return TotalLabeling(dict(partial.vertex_labels), edge_labels)


def edge_magic_constant(lab: TotalLabeling) -> int | None:
    """Common value of λ(x)+λ(y)+λ(xy) over all edges, or None if it varies."""
    triples = {lab.vertex_labels[a] + lab.vertex_labels[b] + w for (a, b), w in lab.edge_labels.items()}
    return triples.pop() if len(triples) == 1 else None


def eav_path_forest(m: int, n: int) -> tuple[Graph, PartialVertexLabeling]:
    """Vertex labeling of ``m`` disjoint ``n``-vertex paths with edge sums m+2, m+4, ..., step 2.

    Vertex ``i`` of path ``j`` gets ``m(i-1) + j``; the edge between positions
    ``i`` and ``i+1`` then sums to ``m(2i-1) + 2j``.
    """
    if m < 2:
        raise ParameterOutOfRange("m", m, "m >= 2")
    if n < 2:
        raise ParameterOutOfRange("n", n, "n >= 2")
    g = path_forest(m, n)
    labels = {vx("v", i, j): m * (i - 1) + j for j in range(1, m + 1) for i in range(1, n + 1)}
    return g, PartialVertexLabeling.on(g, labels)


def is_arithmetic(values, first: int, step: int) -> bool:
    vals = sorted(values)
    return vals == [first + step * t for t in range(len(vals))]
