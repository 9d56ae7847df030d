"""Exact integer combinatorics.

Two binomials live here and they are not interchangeable:

* :func:`trunc_binom` counts dimensions of spaces of forms and is zero below
  its threshold, so ``trunc_binom(-1, 3) == 0``.
* :func:`poly_binom3` is the polynomial ``(x+3)(x+2)(x+1)/6``, the Euler
  characteristic of ``O(x)`` on projective 3-space.  It is negative for
  ``x <= -5``.

Callers must pick one explicitly.
"""

from dataclasses import dataclass
from math import comb
from typing import Callable, Optional, Sequence, Union

from .errors import WindowUnderflow

__all__ = [
    "trunc_binom",
    "poly_binom3",
    "diff3",
    "TriangularInvariants",
    "triangular",
]


def trunc_binom(n: int, k: int) -> int:
    """C(n, k) when n >= k >= 0, else 0."""
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    if n < k:
        return 0
    return comb(n, k)


def poly_binom3(x: int) -> int:
    return (x + 3) * (x + 2) * (x + 1) // 6


IntFunction = Union[Sequence[int], Callable[[int], int]]


def diff3(f: IntFunction, n: int, *, start: int = 0,
          tail: Optional[Callable[[int], int]] = None) -> int:
    """Third backward difference ``f(n) - 3f(n-1) + 3f(n-2) - f(n-3)``.

    ``f`` is either a callable or a sequence holding ``f(start), f(start+1), ...``.
    Indices outside the stored window are read from ``tail``; without one they
    raise :class:`WindowUnderflow`.
    """
    if callable(f):
        at = f
    else:
        def at(i):
            j = i - start
            if 0 <= j < len(f):
                return f[j]
            if tail is None:
                raise WindowUnderflow(
                    f"value at {i} outside window [{start}, {start + len(f)}) and no tail given")
            return tail(i)
    return at(n) - 3 * at(n - 1) + 3 * at(n - 2) - at(n - 3)


@dataclass(frozen=True)
class TriangularInvariants:
    """Degree and arithmetic genus of the r-th curve linked to a line."""

    r: int
    d: int
    g: int

    def hilbert_polynomial(self, t: int) -> int:
        return self.d * t + 1 - self.g


def triangular(r: int) -> TriangularInvariants:
    if r <= 0:
        raise ValueError(f"r must be positive, got {r}")
    d, rem = divmod(r * (r + 1), 2)
    assert rem == 0
    num = r * (r + 1) * (2 * r - 5)
    q, rem = divmod(num, 6)
    assert rem == 0, "r(r+1)(2r-5) is always divisible by 6"
    return TriangularInvariants(r, d, q + 1)
