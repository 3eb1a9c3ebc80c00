from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from cyclemagic import _accel
from cyclemagic.errors import NoCovering
from cyclemagic.families import FamilySpec
from cyclemagic.graph import Graph, build_graph, complete_graph, enumerate_cycles
from cyclemagic.labelers import label
from cyclemagic.labeling import TotalLabeling
from cyclemagic.search import BUDGET_ENV, SearchConfig, default_node_budget, find_labelings, fit_check
from cyclemagic.verify import STRICT, verify

F3 = FamilySpec.of("fans", m=1, n=3)


def as_rows(g: Graph, labelings):
    order = sorted(g.vertices) + sorted(g.edges)
    return [tuple(lab[x] for x in order) for lab in labelings]


def brute_force(g: Graph, length: int) -> set[tuple]:
    """All supermagic labelings by plain enumeration of (v! * e!) assignments."""
    verts, edges = sorted(g.vertices), sorted(g.edges)
    v, e = len(verts), len(edges)
    cycles = enumerate_cycles(g, length)
    vpos = {u: t for t, u in enumerate(verts)}
    epos = {ed: t for t, ed in enumerate(edges)}
    members = [([vpos[u] for u in c.vertices], [epos[ed] for ed in c.edges]) for c in cycles]
    found = set()
    for vp in permutations(range(1, v + 1)):
        for ep in permutations(range(v + 1, v + e + 1)):
            ws = {sum(vp[a] for a in vs) + sum(ep[b] for b in es) for vs, es in members}
            if len(ws) == 1:
                found.add(vp + ep)
    return found


@pytest.fixture(params=[True, False], ids=["numba", "python"])
def kernel_mode(request, monkeypatch):
    if request.param and not _accel.HAVE_NUMBA:
        pytest.skip("numba not installed")
    monkeypatch.setattr(_accel, "USE_NUMBA", request.param)
    return request.param


def test_k3(kernel_mode):
    out = find_labelings(complete_graph(3), SearchConfig(3))
    assert len(out.labelings) == 36
    assert out.constants_seen == {21}
    assert out.exhausted


def test_path_has_no_covering():
    with pytest.raises(NoCovering):
        find_labelings(Graph.from_edges([("a", "b")]), SearchConfig(3))


def test_single_fan_one_solution():
    g = build_graph(F3)
    out = find_labelings(g, SearchConfig(3, limit=1))
    assert len(out.labelings) == 1
    report = verify(g, out.labelings[0], 3, STRICT)
    assert report.valid
    assert report.magic_constant in out.constants_seen


def test_single_fan_matches_brute_force(kernel_mode):
    g = build_graph(F3)
    out = find_labelings(g, SearchConfig(3))
    assert out.exhausted
    rows = as_rows(g, out.labelings)
    assert len(rows) == len(set(rows))
    assert set(rows) == brute_force(g, 3)
    for lab in out.labelings:
        assert verify(g, lab, 3, STRICT).valid


def test_k4_has_no_supermagic_labeling():
    g = complete_graph(4)
    out = find_labelings(g, SearchConfig(3))
    assert out.proves_nonexistence
    assert brute_force(g, 3) == set()


def test_target_constant_filters():
    g = build_graph(F3)
    full = find_labelings(g, SearchConfig(3))
    for c in sorted(full.constants_seen):
        part = find_labelings(g, SearchConfig(3, target_constant=c))
        assert part.constants_seen == {c}
        expected = [r for r, lab in zip(as_rows(g, full.labelings), full.labelings)
                    if verify(g, lab, 3, STRICT).magic_constant == c]
        assert as_rows(g, part.labelings) == expected


def test_symmetry_breaking_keeps_one_per_rotation():
    out = find_labelings(complete_graph(3), SearchConfig(3, break_symmetry=True))
    assert len(out.labelings) == 12
    assert all(lab["x[1]"] == 1 for lab in out.labelings)


def test_plain_magic_mode():
    out = find_labelings(complete_graph(3), SearchConfig(3, super_only=False))
    assert len(out.labelings) == 720
    assert out.constants_seen == {21}


def test_budget_exhaustion_is_reported():
    out = find_labelings(build_graph(F3), SearchConfig(3, node_budget=10))
    assert not out.exhausted
    assert not out.proves_nonexistence
    assert out.nodes_used == 10


def test_config_validation():
    with pytest.raises(ValueError):
        SearchConfig(3, limit=0)
    with pytest.raises(ValueError):
        SearchConfig(3, node_budget=0)


def test_budget_env(monkeypatch):
    monkeypatch.setenv(BUDGET_ENV, "1234")
    assert default_node_budget() == 1234
    assert SearchConfig(3).node_budget == 1234


def test_kernels_agree_on_ordered_output(monkeypatch):
    g = build_graph(F3)
    monkeypatch.setattr(_accel, "USE_NUMBA", False)
    slow = find_labelings(g, SearchConfig(3, seed=3))
    monkeypatch.setattr(_accel, "USE_NUMBA", _accel.HAVE_NUMBA)
    fast = find_labelings(g, SearchConfig(3, seed=3))
    assert as_rows(g, slow.labelings) == as_rows(g, fast.labelings)
    assert slow.nodes_used == fast.nodes_used


# ------------------------------------------------------------------- fit_check

def test_fit_check_examples():
    assert fit_check(FamilySpec.of("fans", m=2, n=3), label)
    assert fit_check(FamilySpec.of("wheels", m=2, n=3), label)

    def identity_order(spec):
        g = build_graph(spec)
        verts, edges = sorted(g.vertices), sorted(g.edges)
        return TotalLabeling({u: t + 1 for t, u in enumerate(verts)},
                             {ed: len(verts) + t + 1 for t, ed in enumerate(edges)})

    assert not fit_check(FamilySpec.of("fans", m=2, n=3), identity_order)


@pytest.mark.parametrize("m", range(2, 6))
@pytest.mark.parametrize("n", list(range(3, 12, 2)) + list(range(4, 13, 2)))
def test_fit_check_pins_wheels(m, n):
    assert fit_check(FamilySpec.of("wheels", m=m, n=n), label)


# ------------------------------------------------------------------ properties

SMALL = [complete_graph(3), build_graph(F3), build_graph(FamilySpec.of("fans", m=1, n=2)),
         build_graph(FamilySpec.of("ladders", m=1, n=2)), build_graph(FamilySpec.of("books", m=1, n=1))]


@settings(max_examples=20)
@given(st.sampled_from(range(len(SMALL))), st.integers(1, 10_000))
def test_seed_does_not_change_the_solution_set(which, seed):
    g = SMALL[which]
    length = 4 if which >= 3 else 3
    base = find_labelings(g, SearchConfig(length))
    other = find_labelings(g, SearchConfig(length, seed=seed))
    assert base.exhausted and other.exhausted
    assert set(as_rows(g, base.labelings)) == set(as_rows(g, other.labelings))


@settings(max_examples=20)
@given(st.integers(1, 4000), st.integers(1, 4000), st.integers(0, 50))
def test_budget_monotonicity(b1, b2, seed):
    g = build_graph(F3)
    lo, hi = sorted((b1, b2))
    small = set(as_rows(g, find_labelings(g, SearchConfig(3, node_budget=lo, seed=seed)).labelings))
    large = set(as_rows(g, find_labelings(g, SearchConfig(3, node_budget=hi, seed=seed)).labelings))
    assert small <= large


@settings(max_examples=10)
@given(st.integers(0, 100), st.one_of(st.none(), st.integers(1, 50)))
def test_determinism(seed, limit):
    g = build_graph(F3)
    cfg = SearchConfig(3, seed=seed, limit=limit)
    a, b = find_labelings(g, cfg), find_labelings(g, cfg)
    assert as_rows(g, a.labelings) == as_rows(g, b.labelings)
    assert a.nodes_used == b.nodes_used and a.exhausted == b.exhausted
