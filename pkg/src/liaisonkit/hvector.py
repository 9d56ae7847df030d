"""h-vectors of arithmetically Cohen-Macaulay curves.

An admissible h-vector starts with the staircase ``1, 2, ..., s`` and is
nonincreasing from position ``s-1`` on.  Degree and genus are read off as::

    d = sum h(n)        g = sum_{n >= 2} (n - 1) h(n)
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .arith import trunc_binom, triangular
from .profile import CurveProfile

__all__ = [
    "HVector",
    "degree",
    "genus",
    "is_acm_admissible",
    "enumerate_hvectors",
    "verify_triangular_uniqueness",
    "hvector_of_acm_profile",
    "UniquenessReport",
]


@dataclass(frozen=True)
class HVector:
    values: Tuple[int, ...]

    def __init__(self, values: Sequence[int]):
        vals = [int(v) for v in values]
        while vals and vals[-1] == 0:
            vals.pop()
        object.__setattr__(self, "values", tuple(vals))

    def __getitem__(self, n):
        return self.values[n] if 0 <= n < len(self.values) else 0

    def __len__(self):
        return len(self.values)

    @property
    def s(self) -> int:
        """Length of the initial staircase ``h(n) = n + 1``."""
        n = 0
        while self[n] == n + 1:
            n += 1
        return n


def degree(h: HVector) -> int:
    return sum(h.values)


def genus(h: HVector) -> int:
    return sum((n - 1) * v for n, v in enumerate(h.values) if n >= 2)


def is_acm_admissible(h: HVector, profile: Optional[CurveProfile] = None) -> bool:
    """Shape test for ACM h-vectors.

    With a profile, also require ``h0(I_C(s)) = s + 1 - h(s)``.
    """
    vals = h.values
    if not vals or vals[0] != 1 or any(v < 0 for v in vals):
        return False
    s = h.s
    if s < 1:
        return False
    for n in range(s - 1, len(vals)):
        if h[n] < h[n + 1]:
            return False
    if profile is not None and profile.h0(s) != s + 1 - h[s]:
        return False
    return True


def enumerate_hvectors(d: int, g: int) -> List[HVector]:
    """Every admissible h-vector of degree ``d`` and genus ``g``, lexicographically.

    Depth-first over the tail: after the staircase of length ``s`` each entry is
    at most the previous one, and the remaining mass bounds the search.
    """
    if d < 1:
        raise ValueError(f"degree must be positive, got {d}")
    found = []

    def tail(prefix, prev, mass_left, genus_so_far):
        if mass_left == 0:
            if genus_so_far == g:
                found.append(tuple(prefix))
            return
        n = len(prefix)
        # Cheapest completion puts the remaining mass as early as possible,
        # each entry adding at least n - 1 to the genus.
        if genus_so_far + (n - 1) * mass_left > g:
            return
        for v in range(min(prev, mass_left), 0, -1):
            prefix.append(v)
            tail(prefix, v, mass_left - v, genus_so_far + (n - 1) * v)
            prefix.pop()

    s = 1
    while s * (s + 1) // 2 <= d:
        stair = list(range(1, s + 1))
        mass = d - s * (s + 1) // 2
        g0 = sum((n - 1) * v for n, v in enumerate(stair) if n >= 2)
        # position s must break the staircase: h(s) <= s
        tail(stair, s, mass, g0)
        s += 1
    return [HVector(v) for v in sorted(set(found))]


@dataclass(frozen=True)
class UniquenessReport:
    ok: bool
    checked: Tuple[int, ...]
    first_failure: Optional[int] = None
    found: Tuple[Tuple[int, ...], ...] = ()


def verify_triangular_uniqueness(r_max: int) -> UniquenessReport:
    """For each r <= r_max, the staircase (1..r) is the only h-vector with (d_r, g_r)."""
    if r_max < 1:
        raise ValueError(f"r_max must be positive, got {r_max}")
    checked = []
    for r in range(1, r_max + 1):
        inv = triangular(r)
        got = enumerate_hvectors(inv.d, inv.g)
        checked.append(r)
        if got != [HVector(range(1, r + 1))]:
            return UniquenessReport(False, tuple(checked), r, tuple(h.values for h in got))
    return UniquenessReport(True, tuple(checked))


def hvector_of_acm_profile(p: CurveProfile) -> HVector:
    """Second difference of the Hilbert function of the homogeneous coordinate ring."""
    def hilb(n):
        return trunc_binom(n + 3, 3) - p.h0(n) if n >= 0 else 0

    vals = []
    n = 0
    limit = p.N + 3
    while n <= limit:
        vals.append(hilb(n) - 2 * hilb(n - 1) + hilb(n - 2))
        n += 1
    return HVector(vals)
