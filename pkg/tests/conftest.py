import pytest
from hypothesis import HealthCheck, settings, strategies as st

from cyclemagic.families import LABELING_MINIMUM, PARAM_NAMES, Family, FamilySpec

# numba compiles on first use, so per-example deadlines are meaningless
settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

# the supported grid: m,l <= 5, n <= 12, s,k <= 4
GRID_MAX = {"m": 5, "l": 5, "n": 12, "s": 4, "k": 4}


@st.composite
def labeled_specs(draw, families=tuple(Family), n_max=8, copies_max=4):
    family = draw(st.sampled_from(families))
    params = {}
    for name in PARAM_NAMES[family]:
        lo = LABELING_MINIMUM[family][name]
        hi = n_max if name == "n" else copies_max
        params[name] = draw(st.integers(lo, max(lo, hi)))
    return FamilySpec.of(family, **params)


def grid_specs():
    """Every labeled instance on the supported grid, in a fixed order."""
    out = []
    for family in Family:
        names = PARAM_NAMES[family]
        ranges = [range(LABELING_MINIMUM[family][x], GRID_MAX[x] + 1) for x in names]

        def rec(i, acc):
            if i == len(names):
                out.append(FamilySpec.of(family, **acc))
                return
            for value in ranges[i]:
                rec(i + 1, {**acc, names[i]: value})

        rec(0, {})
    return out


def expected_cycle_count(spec: FamilySpec) -> int:
    f, m, n, s, k, l = spec.family, spec.m, spec.n, spec.s, spec.k, spec.l
    if f is Family.FANS:
        return m * (n - 1)
    if f is Family.TRIANGULAR_LADDERS:
        return 2 * m * (n - 1)
    if f is Family.WHEELS:
        return 4 * m if n == 3 else m * n
    if f is Family.LADDERS:
        return m * (n - 1)
    if f is Family.BOOKS:
        return m * n
    if f is Family.ANTIPRISM:
        return 2 * l * m * (n - 1) + (l * n if m == 3 else 0)
    if f is Family.FAN_UNION:
        return (s + k) * (n - 1) - k
    if f is Family.LADDER_UNION:
        return s * (n - 1) + k * (n - 2)
    raise AssertionError(f)


@pytest.fixture(scope="session")
def grid():
    return grid_specs()
