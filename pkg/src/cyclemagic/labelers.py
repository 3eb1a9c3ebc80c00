"""Closed-form cycle-supermagic labelings, one function per graph family.

Every formula is evaluated in exact rational arithmetic and coerced to an
integer only when the division is exact (see :func:`labeling.exact`).

Three published formulas do not survive verification and are replaced here;
``TYPOS`` records the printed form, the replacement, and the evidence.  The
``printed=True`` switches reproduce the printed forms so the failures stay
executable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .families import Family, FamilySpec
from .graph import c, edge_key, p, vx
from .labeling import LabelBuilder, TotalLabeling, half, quarter


@dataclass(frozen=True)
class Typo:
    key: str
    family: Family
    printed: str
    corrected: str
    evidence: str


TYPOS: dict[str, Typo] = {
    t.key: t
    for t in (
        Typo(
            "fans.even-vertex",
            Family.FANS,
            "λ(v_i^j) = ([2n+2i+3+(-1)^(n+1)]m + 4j)/4 for even i",
            "λ(v_i^j) = m[2n+2i-3+(-1)^(n+1)]/4 + j for even i",
            "printed form at m=2,n=3 gives v_2 labels 8,9: 8 collides with λ(c_1) and 9 > v=8; "
            "corrected form verifies at the stated constant for m<=5, n<=12",
        ),
        Typo(
            "wheels-odd.rim-edge",
            Family.WHEELS,
            "λ(v_i^j v_{i+1}^j) = m(2n+i+3)-j+1 for all 1<=i<=n-1",
            "same for i<=n-2; λ(v_{n-1}^j v_n^j) = m(2n+2)-j+1",
            "at i=n-1 the printed value m(3n+2)-j+1 exceeds v+e=m(3n+1); the weight equation "
            "forces block 2n+2, the only unused block; verified for m<=5, odd n<=11",
        ),
        Typo(
            "fan-union.even-vertex",
            Family.FAN_UNION,
            "λ(v_i^j) = j + (s+k)(i-2)/2 + floor((s+k)n/2) for even i",
            "λ(v_i^j) = j + (s+k)(i-2)/2 + s*ceil(n/2) + k*ceil((n-1)/2) for even i",
            "the offset must equal the number of odd-indexed path vertices; the printed floor "
            "agrees only for even n or k in {s, s+1}; otherwise labels collide (e.g. s=1,k=3,n=3)",
        ),
        Typo(
            "fan-union.constant",
            Family.FAN_UNION,
            "c = (s+k)(17n)/2 + s - 7k + 3",
            "c = (s+k)(17n)/2 + s - 7k + 3 for even n; (17n(s+k) + 3s - 15k)/2 + 3 for odd n",
            "for odd n and s != k the printed value differs by (k-s)/2 from every weight of the "
            "corrected labeling and is not an integer when s+k is odd",
        ),
    )
}


# ------------------------------------------------------------------ fans

def _fans_vertex_phase(b: LabelBuilder, m: int, n: int, printed: bool) -> None:
    sign = (-1) ** (n + 1)
    for j in range(1, m + 1):
        b.vertex(c(j), m * (n + 1) - j + 1)
        for i in range(1, n + 1):
            if i % 2:
                b.vertex(vx("v", i, j), j + half(m * (i - 1)))
            elif printed:
                b.vertex(vx("v", i, j), quarter((2 * n + 2 * i + 3 + sign) * m + 4 * j))
            else:
                b.vertex(vx("v", i, j), quarter(m * (2 * n + 2 * i - 3 + sign)) + j)


def _fans_hub_phase(b: LabelBuilder, m: int, n: int) -> None:
    for j in range(1, m + 1):
        for i in range(1, n + 1):
            b.edge(c(j), vx("v", i, j), 3 * m * n - m * (i - 1) - j + 1)


def _fans_path_phase(b: LabelBuilder, m: int, n: int) -> None:
    for j in range(1, m + 1):
        for i in range(1, n):
            b.edge(vx("v", i, j), vx("v", i + 1, j), m * (n + i) + j)


def fan_phase_weights(m: int, n: int) -> tuple[list[int], list[int]]:
    """Sorted hub-triangle weights after the vertex phase and after the hub-edge phase."""
    b = LabelBuilder()
    _fans_vertex_phase(b, m, n, printed=False)
    lv = b.vertex_labels
    first = sorted(lv[c(j)] + lv[vx("v", i, j)] + lv[vx("v", i + 1, j)]
                   for j in range(1, m + 1) for i in range(1, n))
    _fans_hub_phase(b, m, n)
    le = b.edge_labels
    second = sorted(
        lv[c(j)] + lv[vx("v", i, j)] + lv[vx("v", i + 1, j)]
        + le[edge_key(c(j), vx("v", i, j))] + le[edge_key(c(j), vx("v", i + 1, j))]
        for j in range(1, m + 1) for i in range(1, n)
    )
    return first, second


def label_fans(m: int, n: int, printed: bool = False) -> TotalLabeling:
    FamilySpec.of(Family.FANS, m=m, n=n).require_labeling_range()
    b = LabelBuilder()
    _fans_vertex_phase(b, m, n, printed)
    _fans_hub_phase(b, m, n)
    _fans_path_phase(b, m, n)
    return b.build(() if printed else ("fans.even-vertex",))


# --------------------------------------------------------------- ladders

def label_ladders(m: int, n: int) -> TotalLabeling:
    FamilySpec.of(Family.LADDERS, m=m, n=n).require_labeling_range()
    v, e = 2 * m * n, 3 * m * n - 2 * m
    b = LabelBuilder()
    for j in range(1, m + 1):
        for i in range(1, n + 1):
            b.vertex(vx("u", i, j), j + m * (i - 1))
            b.vertex(vx("v", i, j), v - m * (i - 1) - j + 1)
            b.edge(vx("u", i, j), vx("v", i, j), v + m * (i - 1) + j)
        for i in range(1, n):
            b.edge(vx("u", i, j), vx("u", i + 1, j), v + e - m * (n - 1) - m * (i - 1) - j + 1)
            b.edge(vx("v", i, j), vx("v", i + 1, j), v + e - m * (i - 1) - j + 1)
    return b.build()


def label_triangular_ladders(m: int, n: int) -> TotalLabeling:
    FamilySpec.of(Family.TRIANGULAR_LADDERS, m=m, n=n).require_labeling_range()
    b = LabelBuilder()
    for j in range(1, m + 1):
        for i in range(1, n + 1):
            b.vertex(vx("u", i, j), j + 2 * m * (i - 1))
            b.vertex(vx("v", i, j), j + m * (2 * i - 1))
            b.edge(vx("u", i, j), vx("v", i, j), m * (4 * n + 1 - 2 * i) - j + 1)
        for i in range(1, n):
            b.edge(vx("u", i, j), vx("u", i + 1, j), m * (6 * n - 3) - 2 * m * (i - 1) - j + 1)
            b.edge(vx("v", i, j), vx("v", i + 1, j), 2 * m * (3 * n - i - 1) - j + 1)
            b.edge(vx("u", i + 1, j), vx("v", i, j), 2 * m * (2 * n - i) - j + 1)
    return b.build()


# ---------------------------------------------------------------- wheels

def _wheels_odd(b: LabelBuilder, m: int, n: int, printed: bool) -> None:
    for j in range(1, m + 1):
        hub, v = c(j), (lambda i: vx("v", i, j))
        b.vertex(hub, j)
        for i in range(1, n + 1):
            if i % 2:
                b.vertex(v(i), half(m * (i + 1)) + j)
            else:
                b.vertex(v(i), half(m * (n + i + 1)) + j)
        for i in range(1, n):
            b.edge(hub, v(i), m * (2 * n - i + 1) - j + 1)
        b.edge(hub, v(n), m * (2 * n + 1) - j + 1)
        for i in range(1, n):
            if i == n - 1 and not printed:
                b.edge(v(i), v(i + 1), m * (2 * n + 2) - j + 1)
            else:
                b.edge(v(i), v(i + 1), m * (2 * n + i + 3) - j + 1)
        b.edge(v(n), v(1), m * (2 * n + 3) - j + 1)


def _wheels_0_mod_4(b: LabelBuilder, m: int, n: int) -> None:
    h = n // 2
    for j in range(1, m + 1):
        hub, v = c(j), (lambda i: vx("v", i, j))
        b.vertex(hub, m * (quarter(n) + math.ceil(half(n - 1)) + 1) + j - m)
        for i in range(1, n + 1):
            if i % 2:
                b.vertex(v(i), m * (i // 2) + j)
            elif i <= h:
                b.vertex(v(i), half(m) * (i + n) + j - m)
            else:
                b.vertex(v(i), half(m) * (i + n) + j)
        for i in range(1, n + 1):
            if i <= h:
                b.edge(hub, v(i), m * (2 * n + 2 - i) - (j - 1))
            elif i <= n - 1:
                b.edge(hub, v(i), m * (2 * n + 1 - i) - (j - 1))
            else:
                b.edge(hub, v(i), m * (half(3 * n) + 1) - (j - 1))
        for i in range(1, n):
            if i <= h - 1:
                b.edge(v(i), v(i + 1), m * (2 * n + 2 + i) - (j - 1))
            elif i <= n - 2:
                b.edge(v(i), v(i + 1), m * (2 * n + 3 + i) - (j - 1))
            else:
                b.edge(v(i), v(i + 1), m * (half(5 * n) + 2) - (j - 1))
        b.edge(v(n), v(1), 2 * m * (n + 1) - (j - 1))


def _wheels_2_mod_4(b: LabelBuilder, m: int, n: int) -> None:
    h = n // 2
    for j in range(1, m + 1):
        hub, v = c(j), (lambda i: vx("v", i, j))
        b.vertex(hub, quarter(3 * m * (n + 2)) + j - m)
        for i in range(1, n + 1):
            if i == n:
                b.vertex(v(i), m * half(i) + j)
            elif i % 2:
                b.vertex(v(i), m * (i // 2) + j)
            elif i <= h:
                b.vertex(v(i), m * (half(i + n) + 1) + j - m)
            else:
                b.vertex(v(i), m * (half(i + n) + 2) + j - m)
        for i in range(1, n + 1):
            if i == 1:
                b.edge(hub, v(i), 2 * m * (n + 1) - (j - 1))
            elif i <= h:
                b.edge(hub, v(i), m * (2 * n + 2 - i) - (j - 1))
            elif i == n:
                b.edge(hub, v(i), m * (half(3 * n) + 1) - (j - 1))
            elif i % 2 == 0:
                b.edge(hub, v(i), m * (2 * n - i) - (j - 1))
            else:
                b.edge(hub, v(i), m * (2 * n + 2 - i) - (j - 1))
        for i in range(1, n):
            if i == 1:
                b.edge(v(i), v(i + 1), m * (2 * n + 1) - (j - 1))
            elif i <= h - 1:
                b.edge(v(i), v(i + 1), m * (2 * n + 1 + i) - (j - 1))
            else:
                b.edge(v(i), v(i + 1), m * (2 * n + 2 + i) - (j - 1))
        b.edge(v(n), v(1), m * (half(5 * n) + 1) - (j - 1))


def label_wheels(m: int, n: int, printed: bool = False) -> TotalLabeling:
    FamilySpec.of(Family.WHEELS, m=m, n=n).require_labeling_range()
    b = LabelBuilder()
    if n % 2:
        _wheels_odd(b, m, n, printed)
        return b.build(() if printed else ("wheels-odd.rim-edge",))
    if n % 4 == 0:
        _wheels_0_mod_4(b, m, n)
    else:
        _wheels_2_mod_4(b, m, n)
    return b.build()


# ----------------------------------------------------------------- books

def label_books(m: int, n: int) -> TotalLabeling:
    FamilySpec.of(Family.BOOKS, m=m, n=n).require_labeling_range()
    b = LabelBuilder()
    hm = half(m)
    for j in range(1, m + 1):
        u1, u2 = vx("u", 1, j), vx("u", 2, j)
        b.vertex(u1, j)
        b.vertex(u2, m + j)
        for i in range(1, n + 1):
            b.vertex(vx("v", i, j), m * (i + 1) + j)
            b.vertex(vx("w", i, j), m * (2 * n + 2 - i) + j)
        if n % 2 == 0:
            b.edge(u1, u2, m * (half(5 * n) + 3) - j + 1)
            for i in range(1, n + 1):
                low = i <= n // 2
                v, w = vx("v", i, j), vx("w", i, j)
                b.edge(u2, v, m * (2 * n + (2 if low else 3) + i) - j + 1)
                b.edge(u1, w, m * ((5 * n + 5) if low else (6 * n + 4)) - 2 * m * i - j + 1)
                b.edge(v, w, hm * ((7 * n if low else 5 * n) + 6 + 2 * i) - j + 1)
        else:
            top = (n + 1) // 2
            b.edge(u1, u2, m * (2 * n + 3) - j + 1)
            for i in range(1, n + 1):
                low = i <= top
                v, w = vx("v", i, j), vx("w", i, j)
                b.edge(u2, v, m * (2 * n + 3 + i) - j + 1)
                b.edge(u1, w, m * ((5 * n + 5) if low else (6 * n + 5)) - 2 * m * i - j + 1)
                b.edge(v, w, hm * ((7 * n if low else 5 * n) + 5 + 2 * i) - j + 1)
    return b.build()


# ------------------------------------------------------------- antiprism

def label_antiprism(l: int, m: int, n: int) -> TotalLabeling:  # noqa: E741
    FamilySpec.of(Family.ANTIPRISM, l=l, m=m, n=n).require_labeling_range()

    def q(i, j, k):
        return p((i - 1) % m + 1, j, k)

    b = LabelBuilder()
    for k in range(1, l + 1):
        up, down = k - l, 1 - k  # the two per-level offsets: +k-l and -k+1
        for i in range(1, m + 1):
            odd_i = i % 2 == 1
            for j in range(1, n + 1):
                odd_j = j % 2 == 1
                if m % 2:
                    _antiprism_odd_m(b, q, l, m, n, i, j, k, odd_i, odd_j, up, down)
                else:
                    _antiprism_even_m(b, q, l, m, n, i, j, k, odd_j, up, down)
    return b.build()


def _antiprism_odd_m(b, q, l, m, n, i, j, k, odd_i, odd_j, up, down):  # noqa: E741
    base = l * m * (j - 1)
    if odd_i and odd_j:
        b.vertex(q(i, j, k), base + l * half(m - i + 2) + up)
    elif odd_j:
        b.vertex(q(i, j, k), base + l * half(2 * m - i + 2) + up)
    elif odd_i:
        b.vertex(q(i, j, k), base + l * half(i + 1) + down)
    else:
        b.vertex(q(i, j, k), base + l * half(m + i + 1) + down)

    ring = l * m * (4 * n - j - 2)
    if odd_i and odd_j:
        b.edge(q(i, j, k), q(i + 1, j, k), ring + l * half(i + 1) + down)
    elif odd_j:
        b.edge(q(i, j, k), q(i + 1, j, k), ring + l * half(m + i + 1) + down)
    elif i == m:
        b.edge(q(i, j, k), q(i + 1, j, k), l * m * (4 * n - j - 1) + up)
    elif odd_i:
        b.edge(q(i, j, k), q(i + 1, j, k), ring + l * half(m - i) + up)
    else:
        b.edge(q(i, j, k), q(i + 1, j, k), ring + l * half(2 * m - i) + up)

    if j == n:
        return
    rail = l * m * (2 * n - j - 1)
    shift = up if n % 2 == 0 else down
    if odd_i and odd_j:
        b.edge(q(i, j, k), q(i, j + 1, k), rail + l * half(m + i) + shift)
    elif odd_j:
        b.edge(q(i, j, k), q(i, j + 1, k), rail + l * half(i) + shift)
    elif odd_i:
        b.edge(q(i, j, k), q(i, j + 1, k), rail + l * half(2 * m - i + 1) + shift)
    else:
        b.edge(q(i, j, k), q(i, j + 1, k), rail + l * half(m - i + 1) + shift)

    diag = l * m * (3 * n - j - 2)
    shift = down if n % 2 == 0 else up
    if odd_i and odd_j:
        b.edge(q(i, j + 1, k), q(i + 1, j, k), diag + l * half(2 * m - i + 1) + shift)
    elif odd_j:
        b.edge(q(i, j + 1, k), q(i + 1, j, k), diag + l * half(m - i + 1) + shift)
    elif odd_i:
        b.edge(q(i, j + 1, k), q(i + 1, j, k), diag + l * half(m + i) + shift)
    else:
        b.edge(q(i, j + 1, k), q(i + 1, j, k), diag + l * half(i) + shift)


def _antiprism_even_m(b, q, l, m, n, i, j, k, odd_j, up, down):  # noqa: E741
    if odd_j:
        b.vertex(q(i, j, k), l * (m * (j - 1) + i) + up)
    else:
        b.vertex(q(i, j, k), l * (m * j - i + 1) + down)

    if odd_j and i != m:
        b.edge(q(i, j, k), q(i + 1, j, k), l * (m * (4 * n - j - 1) - i) + down)
    elif odd_j:
        b.edge(q(i, j, k), q(i + 1, j, k), l * m * (4 * n - j - 1) + down)
    elif i != m:
        b.edge(q(i, j, k), q(i + 1, j, k), l * (m * (4 * n - j - 2) + i + 1) + up)
    else:
        b.edge(q(i, j, k), q(i + 1, j, k), l * (m * (4 * n - j - 2) + 1) + up)

    if j == n:
        return
    even_n = n % 2 == 0
    if odd_j:
        b.edge(q(i, j, k), q(i, j + 1, k), l * (m * (2 * n - j) - i + 1) + (up if even_n else down))
        b.edge(q(i, j + 1, k), q(i + 1, j, k), l * (m * (3 * n - j - 2) + i) + (down if even_n else up))
    else:
        b.edge(q(i, j, k), q(i, j + 1, k), l * (m * (2 * n - j - 1) + i) + (up if even_n else down))
        b.edge(q(i, j + 1, k), q(i + 1, j, k), l * (m * (3 * n - j - 1) - i + 1) + (down if even_n else up))


# ------------------------------------------------------------ fan unions

def fan_union_even_offset(s: int, k: int, n: int, printed: bool = False) -> int:
    if printed:
        return math.floor(Fraction((s + k) * n, 2))
    return s * math.ceil(n / 2) + k * math.ceil((n - 1) / 2)


def label_fan_union(s: int, k: int, n: int, printed: bool = False) -> TotalLabeling:
    spec = FamilySpec.of(Family.FAN_UNION, s=s, k=k, n=n)
    spec.require_labeling_range()
    total = s + k
    offset = fan_union_even_offset(s, k, n, printed)
    b = LabelBuilder()
    for j in range(1, total + 1):
        length = spec.path_length(j)
        b.vertex(c(j), s * (n + 1) + n * k - j + 1)
        for i in range(1, length + 1):
            if i % 2:
                b.vertex(vx("v", i, j), j + half(total) * (i - 1))
            else:
                b.vertex(vx("v", i, j), j + half(total) * (i - 2) + offset)
            b.edge(c(j), vx("v", i, j), s * (3 * n - i + 1) + k * (3 * n - i - 2) - j + 1)
        for i in range(1, length):
            b.edge(vx("v", i, j), vx("v", i + 1, j), s * (n + i) + k * (n + i - 1) + j)
    return b.build(() if printed else ("fan-union.even-vertex",))


def label_ladder_union(s: int, k: int, n: int) -> TotalLabeling:
    FamilySpec.of(Family.LADDER_UNION, s=s, k=k, n=n).require_labeling_range()
    base = 2 * s * n + 2 * k * (n - 1)
    total = s + k
    top = s * (5 * n - 2) + k * (5 * n - 7)
    b = LabelBuilder()
    for j in range(1, s + 1):
        for i in range(1, n + 1):
            b.vertex(vx("u", i, j), i + n * (j - 1))
            b.vertex(vx("v", i, j), base - n * (j - 1) - i + 1)
            b.edge(vx("u", i, j), vx("v", i, j), base + (n - i) * total + j)
        for i in range(1, n):
            b.edge(vx("u", i, j), vx("u", i + 1, j), top - total * (n - i - 1) - j + 1)
            b.edge(vx("v", i, j), vx("v", i + 1, j), 2 * base - total * (n - i) - j + 1)
    for t in range(1, k + 1):
        for i in range(1, n):
            b.vertex(vx("a", i, t), s * n + i + (n - 1) * (t - 1))
            b.vertex(vx("b", i, t), base + n * (1 - s) + t * (1 - n) - i)
            b.edge(vx("a", i, t), vx("b", i, t), base + (n - i - 1) * total + s + t)
        for i in range(1, n - 1):
            b.edge(vx("a", i, t), vx("a", i + 1, t), top - total * (n - i - 2) - s - t + 1)
            b.edge(vx("b", i, t), vx("b", i + 1, t), 2 * base - total * (n - i - 1) - s - t + 1)
    return b.build()


# -------------------------------------------------------------- dispatch

def label(spec: FamilySpec) -> TotalLabeling:
    """Run the constructive labeling for ``spec``."""
    return LABELERS[spec.family](spec)


LABELERS: dict[Family, Callable[[FamilySpec], TotalLabeling]] = {
    Family.FANS: lambda s: label_fans(s.m, s.n),
    Family.LADDERS: lambda s: label_ladders(s.m, s.n),
    Family.TRIANGULAR_LADDERS: lambda s: label_triangular_ladders(s.m, s.n),
    Family.WHEELS: lambda s: label_wheels(s.m, s.n),
    Family.BOOKS: lambda s: label_books(s.m, s.n),
    Family.ANTIPRISM: lambda s: label_antiprism(s.l, s.m, s.n),
    Family.FAN_UNION: lambda s: label_fan_union(s.s, s.k, s.n),
    Family.LADDER_UNION: lambda s: label_ladder_union(s.s, s.k, s.n),
}
