"""Direct links, elementary biliaisons and the towers they generate.

A link by a complete intersection of surfaces of degrees ``(s, t)`` exchanges
postulation and speciality::

    h0'(m) = h2(C, s+t-4-m) + h0(I_X(m))
    rho'(n) = rho(s+t-4-n)

which is the numeric content of ``0 -> I_X -> I_C' -> omega_C(4-s-t) -> 0``.
"""

from dataclasses import dataclass
from typing import List

from .arith import trunc_binom
from .errors import (
    DegenerateResidual,
    InconsistentProfile,
    LiaisonError,
    NotOnSurfaces,
    PreconditionViolated,
    TowerStepError,
)
from .profile import CurveProfile, RaoFunction, _h2_raw, h2, s_min, validate

__all__ = [
    "LinkSpec",
    "BiliaisonSpec",
    "ci_ideal_h0",
    "link",
    "star_h0",
    "elementary_biliaison_h0",
    "biliaison",
    "tower",
    "linked_h0_closed_form",
    "ACM_LINK",
    "BILIAISON",
]

ACM_LINK = "acm-link"
BILIAISON = "biliaison"


@dataclass(frozen=True)
class LinkSpec:
    s: int
    t: int

    def __post_init__(self):
        if self.s < 1 or self.t < 1:
            raise ValueError(f"surface degrees must be positive, got ({self.s}, {self.t})")

    @property
    def degree(self) -> int:
        return self.s * self.t


@dataclass(frozen=True)
class BiliaisonSpec:
    s: int
    h: int = 1

    def __post_init__(self):
        if self.s < 1:
            raise ValueError(f"surface degree must be positive, got {self.s}")


def ci_ideal_h0(spec: LinkSpec, m: int) -> int:
    """h^0 of the ideal of the complete intersection of type ``(s, t)``."""
    s, t = spec.s, spec.t
    return trunc_binom(m - s + 3, 3) + trunc_binom(m - t + 3, 3) - trunc_binom(m - s - t + 3, 3)


def _check_on_surfaces(p: CurveProfile, spec: LinkSpec):
    s, t = spec.s, spec.t
    need = 2 if s == t else 1
    for deg in {s, t}:
        if p.h0(deg) < need:
            raise NotOnSurfaces(
                f"h0(I_C({deg})) = {p.h0(deg)}, need at least {need} for a link of type ({s}, {t})")
    # I_X must sit inside I_C in every degree; past max(N, s+t) the gap is linear
    # with slope st - d > 0, so this range suffices.
    for m in range(0, max(p.N, s + t) + 2):
        if p.h0(m) < ci_ideal_h0(spec, m):
            raise NotOnSurfaces(
                f"h0(I_C({m})) = {p.h0(m)} < h0(I_X({m})) = {ci_ideal_h0(spec, m)}")
    c = s + t - 4
    for j in range(c + 1, p.N):
        if _h2_raw(p, j) != 0:
            raise NotOnSurfaces(f"h2(I_C({j})) != 0 above s+t-4 = {c}")


def link(p: CurveProfile, spec: LinkSpec) -> CurveProfile:
    """Profile of the residual curve in a complete intersection of type ``(s, t)``."""
    if p.d >= spec.degree:
        raise DegenerateResidual(f"d = {p.d} >= s*t = {spec.degree}")
    _check_on_surfaces(p, spec)
    c = spec.s + spec.t - 4
    d2 = spec.degree - p.d
    twice_dg = c * (d2 - p.d)
    assert twice_dg % 2 == 0
    g2 = p.g + twice_dg // 2
    N2 = spec.s + spec.t + p.N
    row = tuple(h2(p, c - m) + ci_ideal_h0(spec, m) for m in range(N2))
    return CurveProfile(d2, g2, p.rho.dual(c), row)


def star_h0(p_prev: CurveProfile, rho_cur: RaoFunction, r: int, m: int) -> int:
    """Postulation of ``C_r`` from the curve ``C_{r-1}`` it is linked to by two degree-r surfaces.

    Only valid for ``m >= r - 3``.
    """
    if m < r - 3:
        raise PreconditionViolated(f"m = {m} < r - 3 = {r - 3}")
    quad, rem = divmod(r * (r - m - 2) * (r - m - 1), 2)
    assert rem == 0
    return rho_cur[m] - p_prev.h0(2 * r - m - 4) + quad + trunc_binom(m - r + 3, 3)


def elementary_biliaison_h0(p: CurveProfile, spec: BiliaisonSpec, n: int) -> int:
    """Closed form ``h0(I_C(n-h)) + h0(O_S(n)) - h0(O_S(n-h))`` for the biliaison on ``S``."""
    s, h = spec.s, spec.h
    return p.h0(n - h) + trunc_binom(n - s + 3, 3) - trunc_binom(n - s - h + 3, 3)


def biliaison(p: CurveProfile, spec: BiliaisonSpec, t: int = None) -> CurveProfile:
    """Elementary biliaison of type ``(s, h)`` computed as two links on a degree-s surface.

    The auxiliary degree ``t`` defaults to the least degree of a surface
    containing the curve.  The result is cross-checked against the closed form
    for the postulation and against the degree and Rao shifts.
    """
    if p.h0(spec.s) < 1:
        raise NotOnSurfaces(f"h0(I_C({spec.s})) = 0: no surface of degree {spec.s}")
    if t is None:
        t = s_min(p)
    middle = link(p, LinkSpec(spec.s, t))
    out = link(middle, LinkSpec(spec.s, t + spec.h))
    if out.d != p.d + spec.h * spec.s or out.rho != p.rho.shifted(spec.h):
        raise LiaisonError("biliaison decomposition disagrees with degree/Rao shift")
    for n in range(out.N + 1):
        if out.h0(n) != elementary_biliaison_h0(p, spec, n):
            raise LiaisonError(f"biliaison decomposition disagrees with closed form at n={n}")
    return out


def tower(base: CurveProfile, base_r: int, r_max: int, mode: str = ACM_LINK) -> List[CurveProfile]:
    """Profiles for ``r = base_r .. r_max``, stepping by links of type ``(r+1, r+1)``
    (``mode="acm-link"``) or biliaisons ``(r+1, 1)`` (``mode="biliaison"``)."""
    if base_r < 1:
        raise ValueError(f"base_r must be positive, got {base_r}")
    if r_max < base_r:
        raise ValueError(f"r_max = {r_max} < base_r = {base_r}")
    if mode not in (ACM_LINK, BILIAISON):
        raise ValueError(f"unknown tower mode {mode!r}")
    report = validate(base)
    if not report:
        raise TowerStepError(base_r, InconsistentProfile(f"{report.rule}: {report.detail}"))
    out = [base]
    cur = base
    for r in range(base_r, r_max):
        try:
            if mode == ACM_LINK:
                cur = link(cur, LinkSpec(r + 1, r + 1))
            else:
                cur = biliaison(cur, BiliaisonSpec(r + 1, 1))
            cur = cur.trimmed()
            report = validate(cur)
            if not report:
                raise InconsistentProfile(f"{report.rule}: {report.detail}")
        except LiaisonError as exc:
            raise TowerStepError(r + 1, exc) from exc
        out.append(cur)
    return out


def linked_h0_closed_form(r: int, a: int) -> int:
    """``h0(I_C(r+a))`` for the generic curve of the codimension-one linked families."""
    if a < 1 or r < 3:
        raise PreconditionViolated(f"need a >= 1 and r >= 3, got r={r}, a={a}")
    first, rem1 = divmod((a + 1) * (a + 2) * r, 2)
    second, rem2 = divmod((a + 1) * (a + 2) * (a + 3), 6)
    assert rem1 == rem2 == 0
    return first + second
