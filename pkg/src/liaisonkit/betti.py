"""Numeric Betti tables of ideal-sheaf resolutions

    0 -> F2 -> F1 -> F0 -> I_C -> 0

Each column is a multiset of twists: ``{-4: 3, -2: 1}`` stands for
``O(-4)^3 + O(-2)``.  Multiplicities may be negative in *formal* tables, which
appear when a closed-form resolution is evaluated outside its range (the
``O(-(r+1))^(r-6)`` summand of the D-family for r < 6).  Only Euler and rank
data are modelled; minimality and exactness of maps are not.
"""

from collections import Counter
from dataclasses import dataclass
from typing import Dict, List, Mapping, Tuple

from .arith import poly_binom3, trunc_binom
from .errors import NotACurveResolution, RankInconsistent, UnsupportedHeight
from .profile import CurveProfile, RaoFunction

__all__ = [
    "BettiTable",
    "chi_from_betti",
    "h0_from_betti",
    "dg_from_betti",
    "biliaison_transform",
    "reduce",
    "profile_from_betti",
    "acm_table",
    "d_family_table",
    "m_family_table",
    "CH_TABLE",
    "A_TABLE",
    "R3_TABLE",
    "E3_TABLE_PRINTED",
    "betti_tower",
]


def _column(values) -> Dict[int, int]:
    if isinstance(values, Mapping):
        items = values.items()
    else:
        items = Counter(values).items()
    col = {}
    for twist, mult in items:
        twist, mult = int(twist), int(mult)
        if twist >= 0:
            raise ValueError(f"twists of an ideal-sheaf resolution are negative, got {twist}")
        if mult:
            col[twist] = col.get(twist, 0) + mult
    return {a: m for a, m in sorted(col.items()) if m}


@dataclass(frozen=True)
class BettiTable:
    F0: Tuple[Tuple[int, int], ...]
    F1: Tuple[Tuple[int, int], ...]
    F2: Tuple[Tuple[int, int], ...] = ()

    def __init__(self, F0, F1=(), F2=()):
        for name, col in (("F0", F0), ("F1", F1), ("F2", F2)):
            object.__setattr__(self, name, tuple(_column(col).items()))

    def column(self, i: int) -> Dict[int, int]:
        return dict((self.F0, self.F1, self.F2)[i])

    @property
    def columns(self) -> Tuple[Dict[int, int], Dict[int, int], Dict[int, int]]:
        return self.column(0), self.column(1), self.column(2)

    @property
    def rank_sum(self) -> int:
        return sum((-1) ** i * sum(col.values()) for i, col in enumerate(self.columns))

    @property
    def is_formal(self) -> bool:
        return any(m < 0 for col in self.columns for m in col.values())

    def net(self) -> Dict[int, int]:
        """Signed multiset ``F0 - F1 + F2``; equal nets mean equal Euler characteristics."""
        out = Counter()
        for i, col in enumerate(self.columns):
            for a, m in col.items():
                out[a] += (-1) ** i * m
        return {a: m for a, m in sorted(out.items()) if m}

    def euler_equivalent(self, other: "BettiTable") -> bool:
        return self.net() == other.net()

    def resolve_formal(self) -> "BettiTable":
        """Move negative multiplicities to a neighbouring column with the opposite sign."""
        cols = [Counter(c) for c in self.columns]
        for i, target in ((1, 0), (0, 1), (2, 1)):
            for a, m in list(cols[i].items()):
                if m < 0:
                    cols[i][a] = 0
                    cols[target][a] -= m
        return BettiTable(*cols)

    def to_json(self) -> dict:
        # largest degree first, i.e. most negative twist first
        return {name: [[a, m] for a, m in sorted(col.items())]
                for name, col in zip(("F0", "F1", "F2"), self.columns)}

    @classmethod
    def from_json(cls, obj: dict) -> "BettiTable":
        return cls(*({a: m for a, m in obj.get(name, [])} for name in ("F0", "F1", "F2")))

    def __str__(self):
        def fmt(col):
            return " + ".join(f"O({a})^{m}" if m != 1 else f"O({a})" for a, m in sorted(col.items())) or "0"
        F0, F1, F2 = self.columns
        return f"0 -> {fmt(F2)} -> {fmt(F1)} -> {fmt(F0)} -> I_C -> 0"


def _require_rank(B: BettiTable):
    if B.rank_sum != 1:
        raise RankInconsistent(f"alternating rank sum is {B.rank_sum}, not 1")


def chi_from_betti(B: BettiTable, n: int) -> int:
    _require_rank(B)
    return sum(m * poly_binom3(n + a) for a, m in B.net().items())


def h0_from_betti(B: BettiTable, n: int) -> int:
    """Postulation implied by the table; exact for a resolution of the saturated ideal."""
    _require_rank(B)
    return sum(m * trunc_binom(n + a + 3, 3) for a, m in B.net().items())


def dg_from_betti(B: BettiTable) -> Tuple[int, int]:
    _require_rank(B)
    f = [poly_binom3(n) - chi_from_betti(B, n) for n in range(4)]
    # cubic in n: linear iff the second difference vanishes at two points
    if f[2] - 2 * f[1] + f[0] != 0 or f[3] - 2 * f[2] + f[1] != 0:
        raise NotACurveResolution(f"pb3(n) - chi_B(n) is not linear: values {f}")
    return f[1] - f[0], 1 - f[0]


def biliaison_transform(B: BettiTable, s: int, h: int = 1) -> BettiTable:
    """Type-E resolution after an elementary biliaison of height 1 on a degree-s surface."""
    if h != 1:
        raise UnsupportedHeight(f"only height 1 is supported, got {h}")
    _require_rank(B)
    F0, F1, F2 = (Counter({a - h: m for a, m in col.items()}) for col in B.columns)
    F0[-s] += 1
    F1[-(s + h)] += 1
    return BettiTable(F0, F1, F2)


def reduce(B: BettiTable, syzygies: bool = False) -> BettiTable:
    """Cancel equal twists shared by F0 and F1.

    With ``syzygies=True`` also cancel pairs shared by F1 and F2; that can strip
    the last syzygy of a curve with nonzero Rao module, so it is off by default.
    The Euler characteristic is unchanged either way.
    """
    F0, F1, F2 = (Counter(c) for c in B.columns)
    pairs = [(F0, F1)] + ([(F1, F2)] if syzygies else [])
    for left, right in pairs:
        for a in sorted(set(left) & set(right)):
            k = min(left[a], right[a])
            if k > 0:
                left[a] -= k
                right[a] -= k
    return BettiTable(F0, F1, F2)


def profile_from_betti(B: BettiTable, rho) -> CurveProfile:
    """Profile with postulation read off the table and the given Rao function."""
    d, g = dg_from_betti(B)
    rho = RaoFunction(rho)
    top = max([-a for col in B.columns for a in col] + [0])
    N = max([top + 4] + [n + 1 for n in rho.support])
    return CurveProfile(d, g, rho, tuple(h0_from_betti(B, n) for n in range(N))).trimmed()


def acm_table(r: int) -> BettiTable:
    return BettiTable({-r: r + 1}, {-(r + 1): r})


def d_family_table(r: int) -> BettiTable:
    """Resolution of the generic curve of the D-family in H_r; formal for r < 6."""
    return BettiTable({-r: r - 3, -(r - 1): 1},
                      {-(r + 2): 4, -(r + 1): r - 6},
                      {-(r + 3): 1})


def m_family_table(r: int) -> BettiTable:
    return BettiTable({-r: r + 1},
                      {-(r + 2): 1, -(r + 1): r},
                      {-(r + 2): 1})


CH_TABLE = BettiTable({-4: 3, -2: 1}, {-5: 4}, {-6: 1})
A_TABLE = BettiTable({-4: 1, -3: 4}, {-5: 1, -4: 4}, {-5: 1})
R3_TABLE = BettiTable({-5: 2, -3: 1, -2: 1}, {-6: 3, -4: 1}, {-7: 1})
# Stored exactly as printed; its rank sum is 2.
E3_TABLE_PRINTED = BettiTable({-8: 1, -6: 1, -2: 2}, {-9: 2, -7: 1}, {-10: 1})


def betti_tower(base: BettiTable, base_r: int, r_max: int) -> List[BettiTable]:
    """Reduced tables for ``r = base_r .. r_max`` under biliaisons ``(r+1, 1)``."""
    out = [base]
    cur = base
    for r in range(base_r, r_max):
        cur = reduce(biliaison_transform(cur, r + 1, 1))
        out.append(cur)
    return out
