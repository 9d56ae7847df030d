"""Acceptance checks, one per criterion, each printing a PASS/FAIL line.

All comparisons are exact integers.  Run under pytest, or directly with
``python tests/test_acceptance.py``.
"""

import sys

import pytest

from liaisonkit.arith import poly_binom3, triangular
from liaisonkit.betti import (
    A_TABLE,
    CH_TABLE,
    E3_TABLE_PRINTED,
    R3_TABLE,
    acm_table,
    betti_tower,
    biliaison_transform,
    chi_from_betti,
    d_family_table,
    dg_from_betti,
    m_family_table,
    reduce,
)
from liaisonkit.catalog import (
    acm_dim,
    contraction_dims,
    extremal_dim,
    linked_family_dim,
    load_catalog,
    neron_severi_constants,
    validate_catalog_resolution,
)
from liaisonkit.errors import RankInconsistent
from liaisonkit.hvector import HVector, enumerate_hvectors
from liaisonkit.liaison import BILIAISON, BiliaisonSpec, biliaison, linked_h0_closed_form, star_h0, tower
from liaisonkit.profile import CurveProfile, _h2_raw, gamma, rao_length, s_min, sigma

LINE = CurveProfile(1, 0)
C3 = CurveProfile(6, 3, {}, (0, 0, 0, 4))
CH = CurveProfile(6, 3, {2: 1}, (0, 0, 1, 4))
A = CurveProfile(6, 3, {1: 1}, (0, 0, 0, 4))

ACM = tower(LINE, 1, 10)
LCH = tower(CH, 3, 10)
LA = tower(A, 3, 10)
D_TOWER = tower(CH, 3, 10, BILIAISON)
M_TOWER = tower(A, 3, 10, BILIAISON)


def _first(problems):
    return "ok" if not problems else f"{len(problems)} problem(s), first: {problems[0]}"


def criterion_1():
    printed = {
        "C3": (C3, [(-1, 1, 0), (-1, 1, 0), (-1, 1, 0), (3, -3, 0)]),
        "Ch": (CH, [(-1, 1, 0), (-1, 1, 0), (0, 1, 1), (0, -3, 0), (3, 0, 0), (-1, 0, 0)]),
        "A": (A, [(-1, 1, 0), (-1, 2, 1), (-1, -2, 0), (3, 0, 0), (0, -1, 0)]),
    }
    problems = []
    for name, (p, rows) in printed.items():
        gam, sig = gamma(p), sigma(p)
        got = [(gam[n], sig[n], p.rho[n]) for n in range(len(rows))]
        if got != rows:
            problems.append(f"{name}: {got}")
        stray = [n for n in gam.support + sig.support + p.rho.support if not 0 <= n < len(rows)]
        if stray:
            problems.append(f"{name}: nonzero outside table at {stray}")
    return not problems, _first(problems)


def criterion_2():
    problems = []
    for r in range(1, 11):
        p, inv = ACM[r - 1], triangular(r)
        if (p.d, p.g) != (inv.d, inv.g):
            problems.append(f"r={r}: (d,g)=({p.d},{p.g})")
        if p.h0(r) != r + 1 or p.h0(r - 1) != 0:
            problems.append(f"r={r}: h0(r)={p.h0(r)}, h0(r-1)={p.h0(r - 1)}")
    return not problems, _first(problems)


def criterion_3():
    problems, checked = [], 0
    for name, towers, lo in (("C", ACM, 1), ("LCh", LCH, 3), ("LA", LA, 3)):
        for r in range(4, 11):
            prev, cur = towers[r - 1 - lo], towers[r - lo]
            for m in range(r - 3, 2 * r + 1):
                checked += 1
                if star_h0(prev, cur.rho, r, m) != cur.h0(m):
                    problems.append(f"{name} r={r} m={m}")
    return not problems, f"{checked} values; " + _first(problems)


def criterion_4():
    problems = []
    for r in range(3, 11):
        for name, p in (("C", ACM[r - 1]), ("LCh", LCH[r - 3]), ("LA", LA[r - 3])):
            if p.h0(r - 3) != 0 or p.h0(r) != r + 1:
                problems.append(f"{name} r={r}: h0(r-3)={p.h0(r - 3)}, h0(r)={p.h0(r)}")
            for a in range(1, 5):
                want = (a + 1) * (a + 2) * r // 2 + (a + 1) * (a + 2) * (a + 3) // 6
                if p.h0(r + a) != want or linked_h0_closed_form(r, a) != want:
                    problems.append(f"{name} r={r} a={a}: {p.h0(r + a)} != {want}")
        # h0(r-1): none for the ACM curve, one for exactly one linked tower by parity
        parity = (LCH[r - 3].h0(r - 1), LA[r - 3].h0(r - 1))
        if parity != ((1, 0) if r % 2 else (0, 1)) or ACM[r - 1].h0(r - 1) != 0:
            problems.append(f"r={r}: parity at r-1 is {parity}")
    return not problems, _first(problems)


def criterion_5():
    problems = []
    for r in range(3, 11):
        odd = r % 2 == 1
        want_ch = {r - 1: 1} if odd else {r - 2: 1}
        want_a = {r - 2: 1} if odd else {r - 1: 1}
        if LCH[r - 3].rho != want_ch:
            problems.append(f"LCh r={r}: {dict(LCH[r - 3].rho)}")
        if LA[r - 3].rho != want_a:
            problems.append(f"LA r={r}: {dict(LA[r - 3].rho)}")
    return not problems, _first(problems)


def criterion_6():
    got = {
        "acm_dim(3)": (acm_dim(3), 24),
        "acm_dim(4)": (acm_dim(4), 40),
        "extremal_dim(3)": (extremal_dim(3), 30),
        "extremal_dim(4)": (extremal_dim(4), 92),
        "contraction_dims": (contraction_dims(), (9, 11)),
    }
    for r in range(3, 13):
        got[f"linked_family_dim({r})"] = (linked_family_dim(r), 2 * r * (r + 1) - 1)
    consts = {k: v["value"] for k, v in neron_severi_constants().items()}
    got["N1 constants"] = (consts, {"N1_Cr_open": 1, "N1_B": 3, "N1_Cr_closure_lower_bound": 2})
    problems = [f"{k}: {a} != {b}" for k, (a, b) in got.items() if a != b]
    return not problems, _first(problems)


def criterion_7():
    problems = []
    for r in range(1, 9):
        inv = triangular(r)
        found = enumerate_hvectors(inv.d, inv.g)
        if found != [HVector(range(1, r + 1))]:
            problems.append(f"r={r}: {[h.values for h in found]}")
    other = enumerate_hvectors(6, 4)
    if not other or other == [HVector((1, 2, 3))]:
        problems.append(f"(6,4): {[h.values for h in other]}")
    return not problems, f"(6,4) -> {[h.values for h in other]}; " + _first(problems)


def criterion_8():
    tables = [(f"C{r}", acm_table(r), r, triangular(r)) for r in range(3, 9)]
    tables += [("Ch", CH_TABLE, 3, triangular(3)), ("A", A_TABLE, 3, triangular(3)),
               ("R3", R3_TABLE, 3, triangular(3))]
    tables += [(f"(##) r={r}", m_family_table(r), r, triangular(r)) for r in range(3, 11)]
    tables += [(f"(#) r={r}", d_family_table(r), r, triangular(r)) for r in range(6, 11)]
    problems = []
    for name, B, r, inv in tables:
        if dg_from_betti(B) != (inv.d, inv.g):
            problems.append(f"{name}: {dg_from_betti(B)}")
        for n in range(-5, 3 * r + 1):
            if chi_from_betti(B, n) != poly_binom3(n) - (inv.d * n + 1 - inv.g):
                problems.append(f"{name}: chi at {n}")
                break
    try:
        dg_from_betti(E3_TABLE_PRINTED)
        problems.append("printed extremal table passed the rank test")
    except RankInconsistent:
        pass
    flag = validate_catalog_resolution("E3-extremal", load_catalog())
    if flag.status != "expected-fail":
        problems.append(f"E3 catalog status {flag.status}")
    return not problems, f"{len(tables)} tables; E3 {flag.status}; " + _first(problems)


def criterion_9():
    problems = []
    if betti_tower(acm_table(1), 1, 10) != [acm_table(r) for r in range(1, 11)]:
        problems.append("ACM tower")
    if reduce(A_TABLE) != m_family_table(3):
        problems.append("reduce(A) != (##) at r=3")
    m = betti_tower(reduce(A_TABLE), 3, 10)
    problems += [f"(##) r={r}" for r in range(3, 11) if m[r - 3] != m_family_table(r)]
    d = betti_tower(CH_TABLE, 3, 10)
    problems += [f"(#) r={r}" for r in range(6, 11) if d[r - 3] != d_family_table(r)]
    # one-step transform of each printed family reproduces the next one exactly
    problems += [f"step (##) r={r}" for r in range(3, 10)
                 if reduce(biliaison_transform(m_family_table(r), r + 1)) != m_family_table(r + 1)]
    return not problems, _first(problems)


def criterion_10():
    from test_properties import INVOLUTION_EXAMPLES, test_link_involution

    problems = []
    try:
        test_link_involution()
    except AssertionError as exc:
        problems.append(f"involution: {exc}")
    for name, towers in (("D", D_TOWER), ("M", M_TOWER)):
        for r in range(3, 10):
            cur = towers[r - 3]
            spec = BiliaisonSpec(r + 1, 1)
            t0 = s_min(cur)
            a, b = biliaison(cur, spec, t=t0).trimmed(), biliaison(cur, spec, t=t0 + 1).trimmed()
            if a != b or a != towers[r - 2]:
                problems.append(f"{name} r={r}: t={t0} vs t={t0 + 1}")
    profiles = list(ACM) + LCH + LA + D_TOWER + M_TOWER + [r.profile for r in load_catalog() if r.profile]
    for p in profiles:
        gam, sig = gamma(p), sigma(p)
        if (gam.total(), gam.first_moment(), sig.total(), sig.first_moment()) != (0, p.d, 0, -p.d):
            problems.append(f"sum rules on d={p.d} g={p.g}")
    return not problems, (f"{INVOLUTION_EXAMPLES} random links, {len(profiles)} named profiles "
                          "(plus every profile built in the suite); " + _first(problems))


def criterion_11():
    problems = []
    for r in range(3, 11):
        dp, mp = D_TOWER[r - 3], M_TOWER[r - 3]
        if dp.h0(r - 1) != 1:
            problems.append(f"D r={r}: h0(r-1)={dp.h0(r - 1)}")
        if _h2_raw(mp, r - 2) != 1 or rao_length(mp) != 1:
            problems.append(f"M r={r}: h2(r-2)={_h2_raw(mp, r - 2)}, rao={rao_length(mp)}")
    return not problems, _first(problems)


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
            criterion_7, criterion_8, criterion_9, criterion_10, criterion_11]

TITLES = {
    1: "degree-6 genus-3 character tables",
    2: "triangular tower invariants",
    3: "star formula equals general link",
    4: "postulation of linked families",
    5: "Rao parity of linked towers",
    6: "family dimensions",
    7: "h-vector uniqueness",
    8: "Betti table consistency",
    9: "Betti towers",
    10: "property suite",
    11: "D and M membership criteria",
}


def _line(k, ok, detail):
    return f"criterion {k:2d} [{TITLES[k]}]: {'PASS' if ok else 'FAIL'} (exact) {detail}"


@pytest.mark.parametrize("k", range(1, 12))
def test_criterion(k, capsys):
    ok, detail = CRITERIA[k - 1]()
    with capsys.disabled():
        print("\n" + _line(k, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    from pathlib import Path

    sys.path.insert(0, str(Path(__file__).parent))
    results = [CRITERIA[k - 1]() for k in range(1, 12)]
    for k, (ok, detail) in enumerate(results, 1):
        print(_line(k, ok, detail))
    sys.exit(0 if all(ok for ok, _ in results) else 1)
