"""Exhaustive backtracking search for C_k-supermagic labelings of small graphs."""

from __future__ import annotations

import os
import random
from dataclasses import dataclass, field
from typing import Callable

import networkx as nx
import numpy as np

from . import kernels
from .errors import NoCovering
from .families import FamilySpec
from .graph import Graph, build_graph, check_covering, covering_cycles, enumerate_cycles
from .labeling import TotalLabeling
from .verify import COVERING, STRICT, predicted_constant, verify

BUDGET_ENV = "CYCLEMAGIC_NODE_BUDGET"
DEFAULT_NODE_BUDGET = 50_000_000
_CHUNK = 4096


def default_node_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    return int(raw) if raw else DEFAULT_NODE_BUDGET


@dataclass(frozen=True)
class SearchConfig:
    cycle_length: int
    limit: int | None = None
    node_budget: int = field(default_factory=default_node_budget)
    target_constant: int | None = None
    seed: int = 0
    super_only: bool = True
    break_symmetry: bool = False

    def __post_init__(self):
        if self.limit is not None and self.limit < 1:
            raise ValueError("limit must be >= 1")
        if self.node_budget < 1:
            raise ValueError("node_budget must be >= 1")


@dataclass
class SearchOutcome:
    labelings: list[TotalLabeling]
    constants_seen: set[int]
    exhausted: bool
    nodes_used: int

    @property
    def proves_nonexistence(self) -> bool:
        return self.exhausted and not self.labelings


def _automorphism_orbit(g: Graph, root: str) -> set[str]:
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges)
    matcher = nx.algorithms.isomorphism.GraphMatcher(h, h)
    return {mapping[root] for mapping in matcher.isomorphisms_iter()}


def find_labelings(g: Graph, cfg: SearchConfig) -> SearchOutcome:
    """Enumerate supermagic labelings of ``g`` over all cycles of ``cfg.cycle_length``.

    Vertices draw from 1..v and edges from v+1..v+e (``super_only``), or all
    elements from 1..v+e otherwise.  Elements lying on the most cycles are
    branched first; values are tried in ascending order.  With
    ``break_symmetry`` (and no target constant) the first branched vertex is
    forced to carry the smallest label in its automorphism orbit, which keeps
    one representative per orbit of solutions.
    """
    cycles = enumerate_cycles(g, cfg.cycle_length)
    covered, uncovered = check_covering(g, cycles)
    if not cycles or not covered:
        raise NoCovering(f"{len(uncovered)} edge(s) on no {cfg.cycle_length}-cycle, e.g. {uncovered[:1]}")

    verts, edges = sorted(g.vertices), sorted(g.edges)
    v, e = len(verts), len(edges)
    elements: list = verts + edges
    n_el = v + e
    index = {x: t for t, x in enumerate(elements)}

    per_element: list[list[int]] = [[] for _ in range(n_el)]
    for r, cyc in enumerate(cycles):
        for x in list(cyc.vertices) + list(cyc.edges):
            per_element[index[x]].append(r)

    rng = random.Random(cfg.seed)
    ties = list(range(n_el))
    if cfg.seed:
        rng.shuffle(ties)
    order = sorted(range(n_el), key=lambda t: (-len(per_element[t]), ties[t]))

    if cfg.super_only:
        lo = np.array([1] * v + [v + 1] * e, dtype=np.int64)
        hi = np.array([v] * v + [v + e] * e, dtype=np.int64)
        cls = np.array([0] * v + [1] * e, dtype=np.int64)
        pool_lo = np.array([1, v + 1], dtype=np.int64)
        pool_hi = np.array([v, v + e], dtype=np.int64)
    else:
        lo = np.ones(n_el, dtype=np.int64)
        hi = np.full(n_el, n_el, dtype=np.int64)
        cls = np.zeros(n_el, dtype=np.int64)
        # class 1 is empty: lo > hi
        pool_lo = np.array([1, 1], dtype=np.int64)
        pool_hi = np.array([n_el, 0], dtype=np.int64)

    gt = np.full(n_el, -1, dtype=np.int64)
    if cfg.break_symmetry and cfg.target_constant is None:
        root = next(t for t in order if t < v)
        for u in _automorphism_orbit(g, elements[root]):
            if u != elements[root]:
                gt[index[u]] = root

    ptr = np.zeros(n_el + 1, dtype=np.int64)
    for t in range(n_el):
        ptr[t + 1] = ptr[t] + len(per_element[t])
    elem_cyc = np.array([r for t in range(n_el) for r in per_element[t]], dtype=np.int64)

    cneed = np.zeros((len(cycles), 2), dtype=np.int64)
    for r, cyc in enumerate(cycles):
        for x in list(cyc.vertices) + list(cyc.edges):
            cneed[r, cls[index[x]]] += 1
    if cneed.max() > kernels.MAX_NEED:
        raise ValueError("cycle too long for the search kernel")

    target = -1 if cfg.target_constant is None else int(cfg.target_constant)
    order_arr = np.array(order, dtype=np.int64)
    label = np.zeros(n_el, dtype=np.int64)
    used = np.zeros(n_el + 2, dtype=np.uint8)
    nextval = np.zeros(n_el + 1, dtype=np.int64)
    nextval[0] = lo[order[0]]
    cpart = np.zeros(len(cycles), dtype=np.int64)
    state = np.array([0, target, -1, 0], dtype=np.int64)

    dfs = kernels.active().dfs
    rows: list[np.ndarray] = []
    exhausted = False
    while True:
        want = _CHUNK if cfg.limit is None else min(_CHUNK, cfg.limit - len(rows))
        out = np.zeros((want, n_el), dtype=np.int64)
        found, status = dfs(order_arr, lo, hi, cls, pool_lo, pool_hi, ptr, elem_cyc, gt, target,
                            cfg.node_budget, label, used, nextval, cpart, cneed, state, out)
        rows.extend(out[:found])
        if status == kernels.EXHAUSTED:
            exhausted = True
            break
        if status == kernels.BUDGET:
            break
        if cfg.limit is not None and len(rows) >= cfg.limit:
            break

    rows.sort(key=lambda row: tuple(int(x) for x in row))
    labelings = []
    constants = set()
    for row in rows:
        lab = TotalLabeling({u: int(row[t]) for t, u in enumerate(verts)},
                            {ed: int(row[v + t]) for t, ed in enumerate(edges)})
        report = verify(g, lab, cfg.cycle_length, STRICT)
        if not cfg.super_only:
            # plain magic solutions are not required to be super
            assert report.bijective and report.covering_ok and report.magic_constant is not None, report.summary()
        else:
            assert report.valid, report.summary()
        labelings.append(lab)
        constants.add(report.magic_constant)
    return SearchOutcome(labelings, constants, exhausted, int(state[kernels.S_NODES]))


def fit_check(spec: FamilySpec, candidate: Callable[[FamilySpec], TotalLabeling]) -> bool:
    """True iff ``candidate(spec)`` verifies in covering mode at ``predicted_constant(spec)``."""
    g = build_graph(spec)
    lab = candidate(spec)
    report = verify(g, lab, spec.cycle_length, COVERING, covering_cycles(spec))
    return report.valid and report.magic_constant == predicted_constant(spec)
