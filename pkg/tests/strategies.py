"""Hypothesis strategies for cohomology profiles that admit a given link."""

from hypothesis import strategies as st

from liaisonkit.errors import LiaisonError
from liaisonkit.liaison import LinkSpec, _check_on_surfaces, ci_ideal_h0
from liaisonkit.profile import CurveProfile, h3, validate


@st.composite
def linkable_profiles(draw, d_max=20):
    """A consistent profile together with a link type it lies on.

    Built row by row.  ``h0`` stays below ``chi + rho + h3`` so that ``h2 >= 0``,
    and above whatever keeps ``h0``, ``h0 - h0(I_X)`` and ``-h2`` nondecreasing.
    Above ``s + t - 4`` it is pinned to the upper bound, where ``h2`` vanishes.
    """
    s = draw(st.integers(1, 6))
    t = draw(st.integers(max(s, 2), 6))
    spec = LinkSpec(s, t)
    c = s + t - 4
    d = draw(st.integers(1, min(d_max, s * t - 1)))
    N = max(1, c + 1 + draw(st.integers(0, 2)))
    rho = {n: draw(st.integers(0, 2)) for n in range(-1, min(N, c + 1))}
    g_lo = 1 - d - rho.get(-1, 0)
    g = draw(st.integers(g_lo, g_lo + d * max(c, 1) + 6))
    base = CurveProfile(d, g, rho, ())
    row = []
    prev = prev_gap = 0
    prev_h2 = base.chi(-1) + rho.get(-1, 0) + h3(-1)
    for n in range(N):
        top = base.chi(n) + rho.get(n, 0) + h3(n)
        # h2 = top - h0 may not exceed h2(n-1)
        # h0 - h0(I_X) counts sections of the residual's dualizing sheaf, so it
        # may not drop either
        ci = ci_ideal_h0(spec, n)
        lo = max(ci + prev_gap, prev, top - prev_h2)
        hi = top
        if n == 0:
            # a nonempty curve lies on no constant surface
            v = 0 if c >= 0 or hi == 0 else -1
        elif n > c:
            v = hi
        elif lo <= hi:
            v = draw(st.integers(lo, min(hi, lo + 3)))
        else:
            v = -1
        if v < lo:
            return None
        row.append(v)
        prev, prev_h2, prev_gap = v, top - v, v - ci
    p = CurveProfile(d, g, rho, tuple(row))
    gaps = [p.h0(n) - ci_ideal_h0(spec, n) for n in range(N + s + t + 1)]
    if any(b < a for a, b in zip(gaps, gaps[1:])) or not validate(p):
        return None
    try:
        _check_on_surfaces(p, spec)
    except LiaisonError:
        return None
    return p, spec
