"""Graph construction for the labeled families, plus cycle enumeration and covering checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .errors import ForeignCycle, UnsupportedLength
from .families import Family, FamilySpec

Edge = tuple[str, str]


def edge_key(a: str, b: str) -> Edge:
    if a == b:
        raise ValueError(f"self-loop at {a}")
    return (a, b) if a < b else (b, a)


# Canonical vertex identifiers.  Indices follow subscript-then-superscript
# order, so v[i][j] is the i-th path vertex of copy j.
def c(j: int) -> str:
    return f"c[{j}]"


def vx(name: str, i: int, j: int) -> str:
    return f"{name}[{i}][{j}]"


def p(i: int, j: int, k: int) -> str:
    return f"p[{i}][{j}][{k}]"


@dataclass(frozen=True)
class Graph:
    vertices: frozenset[str]
    edges: frozenset[Edge]
    spec: FamilySpec | None = field(default=None, compare=False)

    def __post_init__(self):
        for a, b in self.edges:
            if a >= b:
                raise ValueError(f"edge {(a, b)} is not in canonical order")
            if a not in self.vertices or b not in self.vertices:
                raise ValueError(f"edge {(a, b)} uses an unknown vertex")
        adj: dict[str, list[str]] = {u: [] for u in self.vertices}
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        object.__setattr__(self, "_adj", {u: tuple(sorted(ns)) for u, ns in adj.items()})

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[str, str]], vertices: Iterable[str] = (),
                   spec: FamilySpec | None = None) -> "Graph":
        es = set()
        vs = set(vertices)
        for a, b in edges:
            es.add(edge_key(a, b))
            vs.update((a, b))
        return cls(frozenset(vs), frozenset(es), spec)

    @property
    def adjacency(self) -> dict[str, tuple[str, ...]]:
        return self._adj

    def neighbors(self, u: str) -> tuple[str, ...]:
        return self._adj[u]

    def has_edge(self, a: str, b: str) -> bool:
        return a != b and edge_key(a, b) in self.edges

    def sorted_vertices(self) -> list[str]:
        return sorted(self.vertices)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def components(self) -> int:
        seen: set[str] = set()
        count = 0
        for start in self.sorted_vertices():
            if start in seen:
                continue
            count += 1
            stack = [start]
            seen.add(start)
            while stack:
                u = stack.pop()
                for w in self._adj[u]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
        return count


@dataclass(frozen=True, order=True)
class Cycle:
    """A cycle in canonical rotation/reflection.

    ``vertices[0]`` is the least identifier and ``vertices[1]`` the lesser of
    its two cycle neighbours.
    """

    vertices: tuple[str, ...]

    @classmethod
    def of(cls, vertices: Sequence[str]) -> "Cycle":
        vs = list(vertices)
        if len(vs) < 3 or len(set(vs)) != len(vs):
            raise ValueError(f"not a cycle: {vs}")
        start = vs.index(min(vs))
        vs = vs[start:] + vs[:start]
        if vs[-1] < vs[1]:
            vs = [vs[0]] + vs[:0:-1]
        return cls(tuple(vs))

    @property
    def edges(self) -> tuple[Edge, ...]:
        vs = self.vertices
        return tuple(edge_key(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs)))

    def __len__(self) -> int:
        return len(self.vertices)

    def __str__(self) -> str:
        return "(" + " ".join(self.vertices) + ")"


# ---------------------------------------------------------------- builders

def _fans(m: int, n: int) -> tuple[list[str], list[Edge]]:
    vs, es = [], []
    for j in range(1, m + 1):
        vs.append(c(j))
        for i in range(1, n + 1):
            vs.append(vx("v", i, j))
            es.append(edge_key(c(j), vx("v", i, j)))
        for i in range(1, n):
            es.append(edge_key(vx("v", i, j), vx("v", i + 1, j)))
    return vs, es


def _ladder_copy(top: str, bottom: str, n: int, j: int, vs: list, es: list) -> None:
    for i in range(1, n + 1):
        vs += [vx(top, i, j), vx(bottom, i, j)]
        es.append(edge_key(vx(top, i, j), vx(bottom, i, j)))
    for i in range(1, n):
        es.append(edge_key(vx(top, i, j), vx(top, i + 1, j)))
        es.append(edge_key(vx(bottom, i, j), vx(bottom, i + 1, j)))


def _ladders(m: int, n: int, diagonals: bool) -> tuple[list[str], list[Edge]]:
    vs, es = [], []
    for j in range(1, m + 1):
        _ladder_copy("u", "v", n, j, vs, es)
        if diagonals:
            for i in range(1, n):
                es.append(edge_key(vx("u", i + 1, j), vx("v", i, j)))
    return vs, es


def _wheels(m: int, n: int) -> tuple[list[str], list[Edge]]:
    vs, es = [], []
    for j in range(1, m + 1):
        vs.append(c(j))
        for i in range(1, n + 1):
            vs.append(vx("v", i, j))
            es.append(edge_key(c(j), vx("v", i, j)))
            es.append(edge_key(vx("v", i, j), vx("v", i % n + 1, j)))
    return vs, es


def _books(m: int, n: int) -> tuple[list[str], list[Edge]]:
    vs, es = [], []
    for j in range(1, m + 1):
        u1, u2 = vx("u", 1, j), vx("u", 2, j)
        vs += [u1, u2]
        es.append(edge_key(u1, u2))
        for i in range(1, n + 1):
            v, w = vx("v", i, j), vx("w", i, j)
            vs += [v, w]
            es += [edge_key(u1, w), edge_key(u2, v), edge_key(v, w)]
    return vs, es


def _antiprism(l: int, m: int, n: int) -> tuple[list[str], list[Edge]]:  # noqa: E741
    def q(i, j, k):
        return p((i - 1) % m + 1, j, k)

    vs, es = [], []
    for k in range(1, l + 1):
        for i in range(1, m + 1):
            for j in range(1, n + 1):
                vs.append(q(i, j, k))
                es.append(edge_key(q(i, j, k), q(i + 1, j, k)))
                if j < n:
                    es.append(edge_key(q(i, j, k), q(i, j + 1, k)))
                    es.append(edge_key(q(i, j + 1, k), q(i + 1, j, k)))
    return vs, es


def _fan_union(spec: FamilySpec) -> tuple[list[str], list[Edge]]:
    vs, es = [], []
    for j in range(1, spec.s + spec.k + 1):
        b = spec.path_length(j)
        vs.append(c(j))
        for i in range(1, b + 1):
            vs.append(vx("v", i, j))
            es.append(edge_key(c(j), vx("v", i, j)))
        for i in range(1, b):
            es.append(edge_key(vx("v", i, j), vx("v", i + 1, j)))
    return vs, es


def _ladder_union(spec: FamilySpec) -> tuple[list[str], list[Edge]]:
    vs, es = [], []
    for j in range(1, spec.s + 1):
        _ladder_copy("u", "v", spec.n, j, vs, es)
    for t in range(1, spec.k + 1):
        _ladder_copy("a", "b", spec.n - 1, t, vs, es)
    return vs, es


def build_graph(spec: FamilySpec) -> Graph:
    f = spec.family
    if f is Family.FANS:
        vs, es = _fans(spec.m, spec.n)
    elif f is Family.LADDERS:
        vs, es = _ladders(spec.m, spec.n, diagonals=False)
    elif f is Family.TRIANGULAR_LADDERS:
        vs, es = _ladders(spec.m, spec.n, diagonals=True)
    elif f is Family.WHEELS:
        vs, es = _wheels(spec.m, spec.n)
    elif f is Family.BOOKS:
        vs, es = _books(spec.m, spec.n)
    elif f is Family.ANTIPRISM:
        vs, es = _antiprism(spec.l, spec.m, spec.n)
    elif f is Family.FAN_UNION:
        vs, es = _fan_union(spec)
    elif f is Family.LADDER_UNION:
        vs, es = _ladder_union(spec)
    else:
        raise AssertionError(f)
    g = Graph(frozenset(vs), frozenset(es), spec)
    v, e = spec.order, spec.size
    if len(g.vertices) != v or len(g.edges) != e or len(es) != e:
        raise AssertionError(f"{spec}: built |V|={len(g.vertices)}, |E|={len(es)}; expected {v}, {e}")
    return g


def covering_cycles(spec: FamilySpec) -> list[Cycle]:
    """The cycle family each construction is designed to make equal-weight."""
    f = spec.family
    out: list[Cycle] = []
    if f in (Family.FANS, Family.WHEELS):
        for j in range(1, spec.m + 1):
            last = spec.n if f is Family.WHEELS else spec.n - 1
            for i in range(1, last + 1):
                out.append(Cycle.of([c(j), vx("v", i, j), vx("v", i % spec.n + 1, j)]))
    elif f is Family.FAN_UNION:
        for j in range(1, spec.s + spec.k + 1):
            for i in range(1, spec.path_length(j)):
                out.append(Cycle.of([c(j), vx("v", i, j), vx("v", i + 1, j)]))
    elif f is Family.LADDERS:
        for j in range(1, spec.m + 1):
            for i in range(1, spec.n):
                out.append(Cycle.of([vx("u", i, j), vx("u", i + 1, j), vx("v", i + 1, j), vx("v", i, j)]))
    elif f is Family.LADDER_UNION:
        for j in range(1, spec.s + 1):
            for i in range(1, spec.n):
                out.append(Cycle.of([vx("u", i, j), vx("u", i + 1, j), vx("v", i + 1, j), vx("v", i, j)]))
        for t in range(1, spec.k + 1):
            for i in range(1, spec.n - 1):
                out.append(Cycle.of([vx("a", i, t), vx("a", i + 1, t), vx("b", i + 1, t), vx("b", i, t)]))
    elif f is Family.TRIANGULAR_LADDERS:
        for j in range(1, spec.m + 1):
            for i in range(1, spec.n):
                out.append(Cycle.of([vx("u", i, j), vx("u", i + 1, j), vx("v", i, j)]))
                out.append(Cycle.of([vx("u", i + 1, j), vx("v", i + 1, j), vx("v", i, j)]))
    elif f is Family.BOOKS:
        for j in range(1, spec.m + 1):
            for i in range(1, spec.n + 1):
                out.append(Cycle.of([vx("u", 1, j), vx("u", 2, j), vx("v", i, j), vx("w", i, j)]))
    elif f is Family.ANTIPRISM:
        m = spec.m

        def q(i, j, k):
            return p((i - 1) % m + 1, j, k)

        for k in range(1, spec.l + 1):
            for i in range(1, m + 1):
                for j in range(1, spec.n):
                    out.append(Cycle.of([q(i, j, k), q(i + 1, j, k), q(i, j + 1, k)]))
                    out.append(Cycle.of([q(i, j + 1, k), q(i + 1, j + 1, k), q(i + 1, j, k)]))
    else:
        raise AssertionError(f)
    return sorted(set(out))


def enumerate_cycles(g: Graph, length: int, include_chorded: bool = True) -> list[Cycle]:
    """All cycles of ``length`` (3 or 4) in ``g``, canonical and sorted.

    ``include_chorded=False`` drops 4-cycles whose vertex set carries a chord.
    """
    adj = g.adjacency
    found: set[Cycle] = set()
    if length == 3:
        for a, b in g.edges:
            # a < b; keep third vertex above b so each triangle is seen once
            common = set(adj[a]).intersection(adj[b])
            for w in common:
                if w > b:
                    found.add(Cycle.of([a, b, w]))
    elif length == 4:
        nbr = {u: set(ns) for u, ns in adj.items()}
        for a, x in combinations(sorted(g.vertices), 2):
            common = sorted(nbr[a] & nbr[x])
            for b, d in combinations(common, 2):
                if not include_chorded and (x in nbr[a] or d in nbr[b]):
                    continue
                found.add(Cycle.of([a, b, x, d]))
    else:
        raise UnsupportedLength(f"cycle length must be 3 or 4, got {length}")
    return sorted(found)


def check_covering(g: Graph, cycles: Iterable[Cycle]) -> tuple[bool, list[Edge]]:
    """Return ``(covered, uncovered_edges)`` for the union of the cycles' edge sets."""
    seen: set[Edge] = set()
    for cyc in cycles:
        for e in cyc.edges:
            if e not in g.edges:
                raise ForeignCycle(f"cycle {cyc} uses non-edge {e}")
            seen.add(e)
    uncovered = sorted(g.edges - seen)
    return not uncovered, uncovered


def path_forest(m: int, n: int) -> Graph:
    """``m`` disjoint paths on ``n`` vertices, named v[i][j]."""
    vs, es = [], []
    for j in range(1, m + 1):
        for i in range(1, n + 1):
            vs.append(vx("v", i, j))
        for i in range(1, n):
            es.append(edge_key(vx("v", i, j), vx("v", i + 1, j)))
    return Graph.from_edges(es, vs)


def complete_graph(n: int) -> Graph:
    vs = [f"x[{i}]" for i in range(1, n + 1)]
    return Graph.from_edges(combinations(vs, 2), vs)
