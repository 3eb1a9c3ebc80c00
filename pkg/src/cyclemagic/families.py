"""Family descriptors: which graph family, its integer parameters, and its sizes."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import ParameterOutOfRange


class Family(str, enum.Enum):
    FANS = "fans"
    LADDERS = "ladders"
    TRIANGULAR_LADDERS = "triangular-ladders"
    WHEELS = "wheels"
    BOOKS = "books"
    ANTIPRISM = "antiprism"
    FAN_UNION = "fan-union"
    LADDER_UNION = "ladder-union"

    @classmethod
    def parse(cls, name: str) -> "Family":
        key = name.strip().lower().replace("_", "-")
        for fam in cls:
            if fam.value == key:
                return fam
        raise ValueError(f"unknown family {name!r}; expected one of {[f.value for f in cls]}")


PARAM_NAMES: dict[Family, tuple[str, ...]] = {
    Family.FANS: ("m", "n"),
    Family.LADDERS: ("m", "n"),
    Family.TRIANGULAR_LADDERS: ("m", "n"),
    Family.WHEELS: ("m", "n"),
    Family.BOOKS: ("m", "n"),
    Family.ANTIPRISM: ("l", "m", "n"),
    Family.FAN_UNION: ("s", "k", "n"),
    Family.LADDER_UNION: ("s", "k", "n"),
}

CYCLE_LENGTH: dict[Family, int] = {
    Family.FANS: 3,
    Family.LADDERS: 4,
    Family.TRIANGULAR_LADDERS: 3,
    Family.WHEELS: 3,
    Family.BOOKS: 4,
    Family.ANTIPRISM: 3,
    Family.FAN_UNION: 3,
    Family.LADDER_UNION: 4,
}

# Smallest values for which the family is a well-formed simple graph.  Single
# copies (m=1) are allowed here so the search can explore them.
GRAPH_MINIMUM: dict[Family, dict[str, int]] = {
    Family.FANS: {"m": 1, "n": 2},
    Family.LADDERS: {"m": 1, "n": 2},
    Family.TRIANGULAR_LADDERS: {"m": 1, "n": 2},
    Family.WHEELS: {"m": 1, "n": 3},
    Family.BOOKS: {"m": 1, "n": 1},
    Family.ANTIPRISM: {"l": 1, "m": 3, "n": 2},
    Family.FAN_UNION: {"s": 1, "k": 0, "n": 3},
    Family.LADDER_UNION: {"s": 1, "k": 0, "n": 2},
}

# Ranges under which the constructive labelings are claimed.
LABELING_MINIMUM: dict[Family, dict[str, int]] = {
    Family.FANS: {"m": 2, "n": 3},
    Family.LADDERS: {"m": 2, "n": 2},
    Family.TRIANGULAR_LADDERS: {"m": 2, "n": 3},
    Family.WHEELS: {"m": 2, "n": 3},
    Family.BOOKS: {"m": 2, "n": 2},
    Family.ANTIPRISM: {"l": 2, "m": 3, "n": 3},
    Family.FAN_UNION: {"s": 1, "k": 1, "n": 3},
    Family.LADDER_UNION: {"s": 1, "k": 1, "n": 2},
}


def _check(minimum: dict[str, int], values: dict[str, int]) -> None:
    for name, lo in minimum.items():
        value = values[name]
        if not isinstance(value, int) or isinstance(value, bool) or value < lo:
            raise ParameterOutOfRange(name, value, f"{name} >= {lo}")


@dataclass(frozen=True)
class FamilySpec:
    """A family plus its parameters.

    Only the parameters named in ``PARAM_NAMES[family]`` are meaningful; the
    others stay ``None``.  Construction validates the graph-level ranges;
    :meth:`require_labeling_range` validates the narrower ranges for which
    the constructive labelings exist.
    """

    family: Family
    m: int | None = None
    n: int | None = None
    s: int | None = None
    k: int | None = None
    l: int | None = None  # noqa: E741

    def __post_init__(self):
        if not isinstance(self.family, Family):
            object.__setattr__(self, "family", Family.parse(self.family))
        names = PARAM_NAMES[self.family]
        for name in ("m", "n", "s", "k", "l"):
            value = getattr(self, name)
            if name in names and value is None:
                raise ParameterOutOfRange(name, None, f"{name} is required for {self.family.value}")
            if name not in names and value is not None:
                raise ParameterOutOfRange(name, value, f"{name} is not a parameter of {self.family.value}")
        _check(GRAPH_MINIMUM[self.family], self.params)

    @classmethod
    def of(cls, family: Family | str, **params: int) -> "FamilySpec":
        return cls(Family.parse(family) if isinstance(family, str) else family, **params)

    @property
    def params(self) -> dict[str, int]:
        return {name: getattr(self, name) for name in PARAM_NAMES[self.family]}

    @property
    def cycle_length(self) -> int:
        return CYCLE_LENGTH[self.family]

    def require_labeling_range(self) -> None:
        _check(LABELING_MINIMUM[self.family], self.params)

    def path_length(self, j: int) -> int:
        """Path length of copy ``j`` in a union family (n for the first s copies, n-1 after)."""
        if self.family not in (Family.FAN_UNION, Family.LADDER_UNION):
            raise ValueError("path_length only applies to union families")
        return self.n if j <= self.s else self.n - 1

    @property
    def order(self) -> int:
        return sizes(self)[0]

    @property
    def size(self) -> int:
        return sizes(self)[1]

    def __str__(self) -> str:
        inner = ",".join(f"{k}={v}" for k, v in self.params.items())
        return f"{self.family.value}{{{inner}}}"


def sizes(spec: FamilySpec) -> tuple[int, int]:
    """Closed-form vertex and edge counts ``(v, e)``."""
    f, m, n, s, k, l = spec.family, spec.m, spec.n, spec.s, spec.k, spec.l
    if f is Family.FANS:
        return m * (n + 1), m * (2 * n - 1)
    if f is Family.LADDERS:
        return 2 * m * n, 3 * m * n - 2 * m
    if f is Family.TRIANGULAR_LADDERS:
        return 2 * m * n, m * (4 * n - 3)
    if f is Family.WHEELS:
        return m * (n + 1), 2 * m * n
    if f is Family.BOOKS:
        return 2 * m * (n + 1), m * (3 * n + 1)
    if f is Family.ANTIPRISM:
        return l * m * n, l * m * (3 * n - 2)
    if f is Family.FAN_UNION:
        return s * (n + 1) + n * k, s * (2 * n - 1) + k * (2 * n - 3)
    if f is Family.LADDER_UNION:
        return 2 * (s * n + k * (n - 1)), s * (3 * n - 2) + k * (3 * n - 5)
    raise AssertionError(f)
