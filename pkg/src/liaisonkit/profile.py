"""Numeric cohomology profiles of curves in projective 3-space.

A :class:`CurveProfile` stores the degree ``d``, arithmetic genus ``g``, the
Rao function ``rho(n) = h^1(I_C(n))`` and the postulation ``h^0(I_C(n))`` on a
window ``[0, N)``.  Past the window the profile is stable: ``rho`` and ``h^2``
vanish and ``h^0`` equals the Euler characteristic of the ideal sheaf.  The
other two cohomology rows are derived:

    h^3(I_C(n)) = h^0(O(-n-4))
    h^2(I_C(n)) = chi(I_C(n)) - h^0 + h^1 + h^3

Characters are third differences::

    gamma(n) = D3 h^0(I_C(n)) - D3 h^0(O(n))
    sigma(n) = D3 h^2(I_C(n))
"""

from collections.abc import Mapping
from dataclasses import dataclass, field
from typing import Dict, Iterator, Optional, Tuple

from .arith import diff3, poly_binom3, trunc_binom
from .errors import InconsistentProfile

__all__ = [
    "RaoFunction",
    "Character",
    "CurveProfile",
    "ValidationReport",
    "chi_ideal",
    "h3",
    "h2",
    "gamma",
    "sigma",
    "s_min",
    "rao_length",
    "validate",
    "profile_from_gamma",
]


class _FiniteFunction(Mapping):
    """Integer-valued function on the integers with finite support.

    Lookups outside the support return 0; iteration runs over the support in
    increasing order.
    """

    __slots__ = ("_values",)

    def __init__(self, values=None):
        items = dict(values or {})
        clean = {}
        for n, v in items.items():
            n, v = int(n), int(v)
            self._check_value(n, v)
            if v != 0:
                clean[n] = v
        self._values = dict(sorted(clean.items()))

    def _check_value(self, n, v):
        pass

    def __getitem__(self, n):
        return self._values.get(n, 0)

    def __contains__(self, n):
        return n in self._values

    def __iter__(self) -> Iterator[int]:
        return iter(self._values)

    def __len__(self):
        return len(self._values)

    def __eq__(self, other):
        if isinstance(other, _FiniteFunction):
            return self._values == other._values
        if isinstance(other, Mapping):
            return self._values == {k: v for k, v in other.items() if v != 0}
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self._values.items()))

    def __repr__(self):
        return f"{type(self).__name__}({self._values!r})"

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(self._values)

    def table(self, lo: int, hi: int) -> Tuple[int, ...]:
        """Values at ``lo, lo+1, ..., hi`` inclusive."""
        return tuple(self[n] for n in range(lo, hi + 1))

    def to_json(self) -> Dict[str, int]:
        return {str(n): v for n, v in self._values.items()}


class RaoFunction(_FiniteFunction):
    """Dimensions of the graded pieces of the Rao module."""

    __slots__ = ()

    def _check_value(self, n, v):
        if v < 0:
            raise ValueError(f"Rao function must be nonnegative, got rho({n}) = {v}")

    @property
    def length(self) -> int:
        return sum(self._values.values())

    def dual(self, c: int) -> "RaoFunction":
        """``n -> rho(c - n)``, the dimension shadow of ``M^vee(-c)``."""
        return RaoFunction({c - n: v for n, v in self._values.items()})

    def shifted(self, h: int) -> "RaoFunction":
        """``n -> rho(n - h)``."""
        return RaoFunction({n + h: v for n, v in self._values.items()})


class Character(_FiniteFunction):
    __slots__ = ()

    def total(self) -> int:
        return sum(self._values.values())

    def first_moment(self) -> int:
        return sum(n * v for n, v in self._values.items())


@dataclass(frozen=True)
class CurveProfile:
    """Cohomology of the ideal sheaf of a curve, with stabilization bound ``N``.

    ``h0_row[n]`` is ``h^0(I_C(n))`` for ``0 <= n < N``.
    """

    d: int
    g: int
    rho: RaoFunction = field(default_factory=RaoFunction)
    h0_row: Tuple[int, ...] = ()

    def __post_init__(self):
        if self.d <= 0:
            raise ValueError(f"degree must be positive, got {self.d}")
        if not isinstance(self.rho, RaoFunction):
            object.__setattr__(self, "rho", RaoFunction(self.rho))
        object.__setattr__(self, "h0_row", tuple(int(v) for v in self.h0_row))

    @property
    def N(self) -> int:
        return len(self.h0_row)

    def chi(self, n: int) -> int:
        return poly_binom3(n) - (self.d * n + 1 - self.g)

    def h0(self, n: int) -> int:
        if n < 0:
            return 0
        if n < self.N:
            return self.h0_row[n]
        return self.chi(n)

    def h1(self, n: int) -> int:
        return self.rho[n]

    def with_window(self, N: int) -> "CurveProfile":
        """Same cohomology re-expressed on the window ``[0, N)``."""
        return CurveProfile(self.d, self.g, self.rho, tuple(self.h0(n) for n in range(N)))

    def trimmed(self) -> "CurveProfile":
        """Shrink the window to the least N for which the tail contract holds.

        Two profiles describe the same cohomology iff their trimmed forms are
        equal.
        """
        N = self.N
        while N > 0 and self.h0_row[N - 1] == self.chi(N - 1) and self.rho[N - 1] == 0:
            N -= 1
        return CurveProfile(self.d, self.g, self.rho, self.h0_row[:N])

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "g": self.g,
            "rho": self.rho.to_json(),
            "h0": list(self.h0_row),
            "N": self.N,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "CurveProfile":
        h0_row = tuple(obj.get("h0", ()))
        if "N" in obj and obj["N"] != len(h0_row):
            raise ValueError(f"N={obj['N']} does not match h0 window of length {len(h0_row)}")
        return cls(int(obj["d"]), int(obj["g"]), RaoFunction(obj.get("rho", {})), h0_row)


def chi_ideal(p: CurveProfile, n: int) -> int:
    return p.chi(n)


def h3(n: int) -> int:
    return trunc_binom(-n - 1, 3)


def _h2_raw(p: CurveProfile, n: int) -> int:
    return p.chi(n) - p.h0(n) + p.rho[n] + h3(n)


def h2(p: CurveProfile, n: int) -> int:
    value = _h2_raw(p, n)
    if value < 0:
        raise InconsistentProfile(f"h2({n}) = {value} < 0")
    return value


def _lowest_interesting(p: CurveProfile) -> int:
    # Below this twist h0 vanishes, rho vanishes and h2 is the linear g-1-dn.
    return min((0,) + p.rho.support)


def gamma(p: CurveProfile) -> Character:
    values = {n: diff3(p.h0, n) - 1 for n in range(0, p.N + 4)}
    return Character(values)


def sigma(p: CurveProfile) -> Character:
    lo = _lowest_interesting(p)
    values = {n: diff3(lambda k: h2(p, k), n) for n in range(lo, p.N + 4)}
    return Character(values)


def s_min(p: CurveProfile) -> int:
    """Least degree of a surface containing the curve."""
    n = 0
    while p.h0(n) == 0:
        n += 1
    return n


def rao_length(p: CurveProfile) -> int:
    return p.rho.length


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    rule: Optional[str] = None
    detail: str = ""

    def __bool__(self):
        return self.ok


def validate(p: CurveProfile) -> ValidationReport:
    """Check the profile invariants, returning the first violated rule."""
    if p.d <= 0:
        return ValidationReport(False, "degree-positive", f"d = {p.d}")
    late = [n for n in p.rho.support if n >= p.N]
    if late:
        return ValidationReport(False, "rao-tail", f"rho({late[0]}) != 0 beyond N = {p.N}")
    for n in range(p.N):
        if p.h0_row[n] < 0:
            return ValidationReport(False, "h0-nonnegative", f"h0({n}) = {p.h0_row[n]}")
    for n in range(p.N + 1):
        if p.h0(n) < p.h0(n - 1):
            return ValidationReport(
                False, "h0-monotone", f"h0({n}) = {p.h0(n)} < h0({n - 1}) = {p.h0(n - 1)}")
    for n in range(_lowest_interesting(p) - 4, p.N + 1):
        v = _h2_raw(p, n)
        if v < 0:
            return ValidationReport(False, "h2-nonnegative", f"h2({n}) = {v}")
    # h2(I_C(n)) = h1(O_C(n)) and a general hyperplane section makes it nonincreasing
    for n in range(_lowest_interesting(p) - 3, p.N + 1):
        if _h2_raw(p, n) > _h2_raw(p, n - 1):
            return ValidationReport(
                False, "h2-nonincreasing", f"h2({n}) = {_h2_raw(p, n)} > h2({n - 1}) = {_h2_raw(p, n - 1)}")
    gam, sig = gamma(p), sigma(p)
    sums = [
        ("sum gamma = 0", gam.total(), 0),
        ("sum n*gamma = d", gam.first_moment(), p.d),
        ("sum sigma = 0", sig.total(), 0),
        ("sum n*sigma = -d", sig.first_moment(), -p.d),
    ]
    for name, got, want in sums:
        if got != want:
            return ValidationReport(False, "character-sum", f"{name}: got {got}")
    return ValidationReport(True)


def profile_from_gamma(d: int, g: int, gam, rho=None) -> CurveProfile:
    """Rebuild the postulation from a character of postulation.

    Inverts ``D3 h0(n) = gamma(n) + 1`` for ``n >= 0`` with ``h0 = 0`` below zero.
    """
    gam = Character(gam)
    rho = RaoFunction(rho)
    if any(n < 0 for n in gam.support):
        raise InconsistentProfile("character of postulation must vanish at negative twists")
    top = max((0,) + gam.support + rho.support) + 4
    row = []

    def at(n):
        return row[n] if n >= 0 else 0

    for n in range(top):
        row.append(gam[n] + 1 + 3 * at(n - 1) - 3 * at(n - 2) + at(n - 3))
    return CurveProfile(d, g, rho, tuple(row)).trimmed()
