"""Registry of named curve families and their dimension calculus.

Records are rebuilt from a handful of base profiles and Betti tables by the
liaison engine (:func:`build_catalog`), shipped as ``data/catalog.json`` and
cross-checked by :func:`verify_catalog`.  Facts the numerics cannot reach
(component-hood, irreducibility, Neron-Severi ranks, some Rao lengths) are
stored as tagged constants with ``source = "stated"``.
"""

import json
import os
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from typing import Dict, List, Optional, Tuple, Union

from .arith import poly_binom3, trunc_binom, triangular
from .betti import (
    A_TABLE,
    CH_TABLE,
    E3_TABLE_PRINTED,
    R3_TABLE,
    BettiTable,
    acm_table,
    betti_tower,
    chi_from_betti,
    d_family_table,
    dg_from_betti,
    h0_from_betti,
    m_family_table,
    profile_from_betti,
    reduce,
)
from .errors import LiaisonError, NonInteger, RecursionMismatch, UnknownFamily
from .liaison import ACM_LINK, BILIAISON, tower
from .profile import (
    CurveProfile,
    _h2_raw,
    gamma,
    profile_from_gamma,
    rao_length,
    sigma,
    validate,
)

__all__ = [
    "FamilyRecord",
    "CONSTANT",
    "R_MAX",
    "LINE",
    "C3",
    "CH",
    "A",
    "R3",
    "E3",
    "acm_dim",
    "extremal_dim",
    "fiber_dim",
    "linked_family_dim",
    "contraction_dims",
    "q_family_dim",
    "neron_severi_constants",
    "family_profile",
    "build_catalog",
    "write_catalog",
    "load_catalog",
    "census",
    "validate_catalog_resolution",
    "verify_catalog",
    "CatalogReport",
    "CheckResult",
    "CATALOG_ENV",
]

CONSTANT = "constant"
CATALOG_ENV = "LIAISONKIT_CATALOG"
R_MAX = 10
RELATION_KINDS = ("contained-in", "linked-to", "equals", "divisor-of", "component-of")

# Base profiles.  h0 rows start at n = 0.
LINE = CurveProfile(1, 0)
C3 = CurveProfile(6, 3, {}, (0, 0, 0, 4)).trimmed()
CH = CurveProfile(6, 3, {2: 1}, (0, 0, 1, 4)).trimmed()
A = CurveProfile(6, 3, {1: 1}, (0, 0, 0, 4)).trimmed()

R3_RAO = {1: 1, 2: 1, 3: 1}
R3 = profile_from_betti(R3_TABLE, R3_RAO)

# Printed character of postulation; the Rao function is the Hilbert function of
# k[x,y,z,w](2)/(x, y, F, G) with deg F = 3, deg G = 7.
E3_GAMMA = {0: -1, 1: -1, 9: -1, 2: 1, 6: 1, 8: 1}
E3_RAO = {-2: 1, -1: 2, 0: 3, 1: 3, 2: 3, 3: 3, 4: 3, 5: 2, 6: 1}
E3 = profile_from_gamma(6, 3, E3_GAMMA, E3_RAO)


# ---------------------------------------------------------------------------
# dimension calculus

def acm_dim(r: int) -> int:
    if r < 1:
        raise ValueError(f"r must be positive, got {r}")
    return 2 * r * (r + 1)


def extremal_dim(r: int) -> int:
    """``(3/2) d (d - 3) + 9 - 2g`` at the triangular invariants."""
    if r < 3:
        raise ValueError(f"need r >= 3, got {r}")
    inv = triangular(r)
    num = 3 * inv.d * (inv.d - 3) + 2 * (9 - 2 * inv.g)
    q, rem = divmod(num, 2)
    if rem:
        raise NonInteger(f"extremal dimension {num}/2 is not an integer at r={r}")
    return q


def fiber_dim(N: int) -> int:
    # Ordered pairs of surfaces from an N-dimensional space, up to scalars.
    return 2 * (N - 1)


def _grassmannian_pencils(N: int) -> int:
    return 2 * (N - 2)


def linked_family_dim(r: int, fiber=fiber_dim) -> int:
    """Dimension of the codimension-one linked families in ``H_r``.

    Walks ``dim(k+1) = dim(k) + fiber(h0(I_k(k+1))) - fiber(h0(I_{k+1}(k+1)))``
    up from ``dim(3) = 23`` and checks ``2k(k+1) - 1`` at each step, for both
    fiber conventions.
    """
    if r < 3:
        raise ValueError(f"need r >= 3, got {r}")
    dims = {}
    for conv in (fiber, _grassmannian_pencils):
        dim = 23
        for k in range(3, r + 1):
            if dim != 2 * k * (k + 1) - 1:
                raise RecursionMismatch(f"recursion gives {dim} at r={k}, closed form {2 * k * (k + 1) - 1}")
            if k == r:
                break
            # h0(I_{C_k}(k+1)) = 3k + 4 and h0(I_{C_{k+1}}(k+1)) = k + 2
            dim += conv(3 * k + 4) - conv(k + 2)
        dims[conv] = dim
    if len(set(dims.values())) != 1:
        raise RecursionMismatch(f"fiber conventions disagree: {sorted(dims.values())}")
    return dims[fiber]


def contraction_dims() -> Tuple[int, int]:
    """Dimensions of the images of the two codimension-one families under contraction.

    The first is a projective space of quadrics, the second a plane together
    with two lines.
    """
    quadrics = trunc_binom(5, 3) - 1
    planes = trunc_binom(4, 3) - 1
    lines = 2 * (4 - 2)
    return quadrics, planes + 2 * lines


def q_family_dim() -> int:
    """Two plane quintics with their planes: ``2 * (3 + 20)``."""
    planes = trunc_binom(4, 3) - 1
    quintics = trunc_binom(7, 2) - 1
    return 2 * (planes + quintics)


def neron_severi_constants() -> Dict[str, dict]:
    return {
        "N1_Cr_open": {
            "value": 1,
            "source": "stated",
            "provenance": "real Neron-Severi space of the open family of triangular ACM curves",
        },
        "N1_B": {
            "value": 3,
            "source": "stated",
            "provenance": "blow-up of the ACM closure in H_3 along the two divisors",
        },
        "N1_Cr_closure_lower_bound": {
            "value": 2,
            "source": "stated",
            "provenance": "lower bound for the closure of the triangular ACM family",
        },
    }


# ---------------------------------------------------------------------------
# profile families

@lru_cache(maxsize=None)
def _tower(name: str) -> Tuple[CurveProfile, ...]:
    if name == "acm":
        return tuple(tower(LINE, 1, R_MAX, ACM_LINK))
    if name == "LCh":
        return tuple(tower(CH, 3, R_MAX, ACM_LINK))
    if name == "LA":
        return tuple(tower(A, 3, R_MAX, ACM_LINK))
    if name == "D":
        return tuple(tower(CH, 3, R_MAX, BILIAISON))
    if name == "M":
        return tuple(tower(A, 3, R_MAX, BILIAISON))
    raise UnknownFamily(name)


FAMILIES = ("acm", "Ch", "A", "LCh", "LA", "D", "M", "R3", "E3", "Q")


def family_profile(family: str, r: Optional[int] = None) -> CurveProfile:
    """Profile of the generic member of a named family in ``H_r``."""
    fixed = {"Ch": CH, "A": A, "R3": R3, "E3": E3}
    if family in fixed:
        if r not in (None, 3):
            raise UnknownFamily(f"{family} lives in H_3 only, got r={r}")
        return fixed[family]
    if family == "Q":
        raise UnknownFamily("Q has no profile in the catalog (only dimension data)")
    if family not in ("acm", "LCh", "LA", "D", "M"):
        raise UnknownFamily(f"unknown family {family!r}; known: {', '.join(FAMILIES)}")
    lo = 1 if family == "acm" else 3
    if r is None:
        raise UnknownFamily(f"family {family} needs r")
    if not lo <= r <= R_MAX:
        raise UnknownFamily(f"family {family} is tabulated for r in [{lo}, {R_MAX}], got {r}")
    return _tower(family)[r - lo]


# Printed character tables, reproduced from their stated closed forms.

def _acm_characters(r):
    gam = [-1] * r + [r]
    return {"lo": 0, "gamma": gam, "sigma": [-v for v in gam]}


def _d_characters(r):
    gam = [-1] * (r - 1) + [0, r - 3, 3, -1]
    sig = [1] * r + [-r, 0, 0]
    return {"lo": 0, "gamma": gam, "sigma": sig}


def _m_characters(r):
    gam = [-1] * r + [r, 0]
    # sigma(r-3) is taken as +1; the sum rule and the base case both force it.
    sig = [1] * (r - 2) + [2, -2, -(r - 3), -1]
    return {"lo": 0, "gamma": gam, "sigma": sig}


PRINTED_C3 = {"lo": 0, "gamma": [-1, -1, -1, 3], "sigma": [1, 1, 1, -3], "rho": [0, 0, 0, 0]}
PRINTED_CH = {"lo": 0, "gamma": [-1, -1, 0, 0, 3, -1], "sigma": [1, 1, 1, -3, 0, 0],
              "rho": [0, 0, 1, 0, 0, 0]}
PRINTED_A = {"lo": 0, "gamma": [-1, -1, -1, 3, 0], "sigma": [1, 2, -2, 0, -1], "rho": [0, 1, 0, 0, 0]}
# The duplicated index gamma(1) is read as gamma(3).
PRINTED_R3 = {"lo": 0, "gamma": [-1, -1, 0, 1, 0, 2, -1]}
PRINTED_E3 = {"lo": 0, "gamma": [E3_GAMMA.get(n, 0) for n in range(10)]}


# ---------------------------------------------------------------------------
# records

@dataclass
class FamilyRecord:
    id: str
    ambient: int
    dim: Optional[int]
    role: str = "family"
    dim_is_lower_bound: bool = False
    profile: Optional[CurveProfile] = None
    betti: Optional[BettiTable] = None
    betti_formal: Optional[BettiTable] = None
    rao_length: Union[int, str, None] = None
    rao_length_constant: Optional[int] = None
    printed: Optional[dict] = None
    relations: List[Tuple[str, str]] = field(default_factory=list)
    flags: List[str] = field(default_factory=list)
    source: str = "derived"
    note: str = ""

    def __post_init__(self):
        for kind, _ in self.relations:
            if kind not in RELATION_KINDS:
                raise ValueError(f"unknown relation kind {kind!r}")
        if self.profile is not None and self.rao_length is None:
            self.rao_length = rao_length(self.profile)

    @property
    def dg(self) -> Tuple[int, int]:
        inv = triangular(self.ambient)
        return inv.d, inv.g

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "ambient": self.ambient,
            "dim": self.dim,
            "role": self.role,
            "dim_is_lower_bound": self.dim_is_lower_bound,
            "profile": None if self.profile is None else self.profile.to_json(),
            "betti": None if self.betti is None else self.betti.to_json(),
            "betti_formal": None if self.betti_formal is None else self.betti_formal.to_json(),
            "rao_length": self.rao_length,
            "rao_length_constant": self.rao_length_constant,
            "printed": self.printed,
            "relations": [list(rel) for rel in self.relations],
            "flags": list(self.flags),
            "source": self.source,
            "note": self.note,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "FamilyRecord":
        def opt(key, parse):
            return None if obj.get(key) is None else parse(obj[key])

        return cls(
            id=obj["id"],
            ambient=int(obj["ambient"]),
            dim=obj.get("dim"),
            role=obj.get("role", "family"),
            dim_is_lower_bound=bool(obj.get("dim_is_lower_bound", False)),
            profile=opt("profile", CurveProfile.from_json),
            betti=opt("betti", BettiTable.from_json),
            betti_formal=opt("betti_formal", BettiTable.from_json),
            rao_length=obj.get("rao_length"),
            rao_length_constant=obj.get("rao_length_constant"),
            printed=obj.get("printed"),
            relations=[tuple(rel) for rel in obj.get("relations", [])],
            flags=list(obj.get("flags", [])),
            source=obj.get("source", "derived"),
            note=obj.get("note", ""),
        )


def _d_and_m_partners(r):
    """Which linked tower equals the D family in H_r and which sits in the M family."""
    lch = "Ch" if r == 3 else f"LCh-r{r}"
    la = "A" if r == 3 else f"LA-r{r}"
    return (lch, la) if r % 2 else (la, lch)


def build_catalog() -> List[FamilyRecord]:
    """Every record, computed from the base profiles and tables."""
    recs = []
    acm_betti = betti_tower(acm_table(1), 1, R_MAX)
    d_betti = betti_tower(CH_TABLE, 3, R_MAX)
    m_betti = betti_tower(reduce(A_TABLE), 3, R_MAX)

    for r in range(1, R_MAX + 1):
        rels = [] if r == 1 else [("linked-to", f"C{r - 1}-acm")]
        recs.append(FamilyRecord(
            id=f"C{r}-acm", ambient=r, dim=acm_dim(r), role="component" if r in (3, 4) else "family",
            profile=family_profile("acm", r), betti=acm_betti[r - 1],
            printed=PRINTED_C3 if r == 3 else _acm_characters(r),
            relations=rels,
            note="closure of the triangular ACM curves"))

    recs.append(FamilyRecord(
        id="Ch", ambient=3, dim=linked_family_dim(3), role="divisor", profile=CH, betti=CH_TABLE,
        printed=PRINTED_CH, relations=[("divisor-of", "C3-acm"), ("equals", "D-r3")],
        note="curves of bidegree (2,4) on a smooth quadric"))
    recs.append(FamilyRecord(
        id="A", ambient=3, dim=linked_family_dim(3), role="divisor", profile=A, betti=A_TABLE,
        betti_formal=reduce(A_TABLE), printed=PRINTED_A,
        relations=[("divisor-of", "C3-acm"), ("component-of", "M-r3")],
        flags=["betti-nonminimal-as-printed"],
        note="two skew lines meeting a plane quartic"))
    recs.append(FamilyRecord(
        id="R3", ambient=3, dim=24, role="component", profile=R3, betti=R3_TABLE,
        printed=PRINTED_R3, flags=["printed-gamma-index-corrected"], source="stated",
        note="plane quartic union a conic meeting it once"))
    recs.append(FamilyRecord(
        id="E3-extremal", ambient=3, dim=extremal_dim(3), role="component", profile=E3,
        betti=E3_TABLE_PRINTED, printed=PRINTED_E3,
        flags=["resolution-inconsistent-as-printed"],
        note="generically nonreduced component of extremal curves"))

    for r in range(4, R_MAX + 1):
        for fam, base in (("LCh", "Ch"), ("LA", "A")):
            prev = base if r == 4 else f"{fam}-r{r - 1}"
            d_id, _ = _d_and_m_partners(r)
            rid = f"{fam}-r{r}"
            rel = ("equals", f"D-r{r}") if rid == d_id else ("component-of", f"M-r{r}")
            recs.append(FamilyRecord(
                id=rid, ambient=r, dim=linked_family_dim(r), role="divisor",
                profile=family_profile(fam, r),
                relations=[("linked-to", prev), ("divisor-of", f"C{r}-acm"), rel]))

    for r in range(3, R_MAX + 1):
        d_id, m_part = _d_and_m_partners(r)
        formal = d_family_table(r)
        recs.append(FamilyRecord(
            id=f"D-r{r}", ambient=r, dim=linked_family_dim(r), role="divisor",
            profile=family_profile("D", r), betti=d_betti[r - 3],
            betti_formal=formal, printed=_d_characters(r),
            relations=[("equals", d_id), ("contained-in", f"C{r}-acm")]
            + ([] if r == 3 else [("linked-to", f"D-r{r - 1}")]),
            flags=["formal-betti-negative-exponent"] if formal.is_formal else [],
            note="curves with h0(I_C(r-1)) = 1, the D family in H_r"))
        recs.append(FamilyRecord(
            id=f"M-r{r}", ambient=r, dim=linked_family_dim(r), role="divisor",
            profile=family_profile("M", r), betti=m_betti[r - 3],
            betti_formal=m_family_table(r), printed=_m_characters(r),
            relations=[("contained-in", f"C{r}-acm")]
            + ([] if r == 3 else [("linked-to", f"M-r{r - 1}")]),
            flags=["printed-sigma-sign-corrected"],
            note=f"curves with Rao module of length one and h2(I_C(r-2)) = 1; dim is that of the component {m_part}"))

    for r in range(3, R_MAX):
        recs.append(FamilyRecord(
            id=f"W-r{r}", ambient=r, dim=linked_family_dim(r) + fiber_dim(3 * r + 4), role="incidence",
            relations=[("linked-to", _d_and_m_partners(r)[0])],
            note="pairs of linked curves of the codimension-one families in H_r and H_{r+1}"))

    recs.append(FamilyRecord(
        id="E4-extremal", ambient=4, dim=extremal_dim(4), role="component",
        rao_length=CONSTANT, rao_length_constant=425, source="stated",
        note="generically nonreduced component of extremal curves"))
    recs.append(FamilyRecord(
        id="R-H4", ambient=4, dim=46, dim_is_lower_bound=True, role="component",
        rao_length=CONSTANT, source="stated",
        note="component containing the disjoint unions of two plane quintics"))
    recs.append(FamilyRecord(
        id="Q", ambient=4, dim=q_family_dim(), role="family",
        rao_length=CONSTANT, rao_length_constant=25, relations=[("contained-in", "R-H4")],
        source="stated", note="disjoint union of two plane quintics; dimension 2*(3+20)"))

    q_dim, u_dim = contraction_dims()
    recs.append(FamilyRecord(
        id="Ch-image", ambient=3, dim=q_dim, role="contraction-image",
        relations=[("contained-in", "Ch")], note="quadric surfaces carrying the curves"))
    recs.append(FamilyRecord(
        id="A-image", ambient=3, dim=u_dim, role="contraction-image",
        relations=[("contained-in", "A")], note="a plane and two lines"))
    recs.append(FamilyRecord(
        id="B", ambient=3, dim=acm_dim(3), role="blow-up",
        relations=[("contained-in", "C3-acm")], source="stated",
        note=f"N1 dimension {neron_severi_constants()['N1_B']['value']}"))
    return recs


def _default_path():
    return resources.files("liaisonkit") / "data" / "catalog.json"


def catalog_json(records=None) -> str:
    records = build_catalog() if records is None else records
    return json.dumps([rec.to_json() for rec in records], indent=1, ensure_ascii=False) + "\n"


def write_catalog(path=None) -> str:
    path = str(_default_path()) if path is None else path
    text = catalog_json()
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)
    return path


def load_catalog(path=None) -> List[FamilyRecord]:
    """Read the shipped catalog, or the one named by ``$LIAISONKIT_CATALOG``."""
    path = path or os.environ.get(CATALOG_ENV)
    if path:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    else:
        data = json.loads(_default_path().read_text(encoding="utf-8"))
    return [FamilyRecord.from_json(obj) for obj in data]


def _index(records) -> Dict[str, FamilyRecord]:
    return {rec.id: rec for rec in records}


def census(space: str, records=None) -> List[FamilyRecord]:
    """Components of ``H_3`` or ``H_4`` followed by the named subfamilies."""
    idx = _index(records if records is not None else load_catalog())
    layout = {
        "H3": ["C3-acm", "R3", "E3-extremal", "Ch", "A"],
        "H4": ["C4-acm", "E4-extremal", "R-H4", "Q"],
    }
    if space not in layout:
        raise UnknownFamily(f"census is available for H3 and H4, got {space!r}")
    return [idx[i] for i in layout[space]]


# ---------------------------------------------------------------------------
# verification

@dataclass(frozen=True)
class CheckResult:
    record: str
    check: str
    status: str  # "pass", "fail" or "expected-fail"
    detail: str = ""

    def to_json(self) -> dict:
        return {"record": self.record, "check": self.check, "status": self.status, "detail": self.detail}


@dataclass(frozen=True)
class CatalogReport:
    results: Tuple[CheckResult, ...]

    @property
    def ok(self) -> bool:
        return all(res.status != "fail" for res in self.results)

    def __bool__(self):
        return self.ok

    def by_status(self, status: str) -> List[CheckResult]:
        return [res for res in self.results if res.status == status]

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "counts": {s: len(self.by_status(s)) for s in ("pass", "fail", "expected-fail")},
            "results": [res.to_json() for res in self.results],
        }

    def summary(self) -> str:
        counts = self.to_json()["counts"]
        lines = [f"{counts['pass']} pass, {counts['fail']} fail, {counts['expected-fail']} expected-fail"]
        for res in self.results:
            if res.status != "pass":
                lines.append(f"{res.status}: {res.record} {res.check}: {res.detail}")
        return "\n".join(lines)


def _resolution_problems(rec: FamilyRecord, B: BettiTable) -> List[str]:
    if B.rank_sum != 1:
        return [f"rank sum {B.rank_sum}"]
    try:
        d, g = dg_from_betti(B)
    except LiaisonError as exc:
        return [f"{type(exc).__name__}: {exc}"]
    p = rec.profile
    want = (p.d, p.g) if p is not None else rec.dg
    problems = []
    if (d, g) != want:
        problems.append(f"(d,g) = {(d, g)}, expected {want}")
        return problems
    for n in range(-5, 3 * rec.ambient + 1):
        chi = poly_binom3(n) - (d * n + 1 - g)
        if chi_from_betti(B, n) != chi:
            problems.append(f"chi differs at n={n}")
            break
    if p is not None and not B.is_formal:
        for n in range(-5, max(3 * rec.ambient, p.N) + 1):
            if h0_from_betti(B, n) != p.h0(n):
                problems.append(f"h0 differs at n={n}: table {h0_from_betti(B, n)}, profile {p.h0(n)}")
                break
    return problems


def validate_catalog_resolution(name: str, records=None) -> CheckResult:
    """Rank, (d, g), Euler characteristic and postulation checks for a record's table."""
    idx = _index(records if records is not None else load_catalog())
    if name not in idx:
        raise UnknownFamily(f"no catalog record {name!r}")
    rec = idx[name]
    if rec.betti is None:
        return CheckResult(name, "resolution", "pass", "no table stored")
    problems = _resolution_problems(rec, rec.betti)
    if rec.betti_formal is not None:
        problems += [f"formal table: {p}" for p in _resolution_problems(rec, rec.betti_formal)]
    if not problems:
        return CheckResult(name, "resolution", "pass")
    status = "expected-fail" if "resolution-inconsistent-as-printed" in rec.flags else "fail"
    return CheckResult(name, "resolution", status, "; ".join(problems))


def _compare_printed(rec: FamilyRecord) -> List[str]:
    out = []
    lo = rec.printed.get("lo", 0)
    for key, fn in (("gamma", gamma), ("sigma", sigma), ("rho", None)):
        want = rec.printed.get(key)
        if want is None:
            continue
        if fn is None:
            got = rec.profile.rho.table(lo, lo + len(want) - 1)
        else:
            computed = fn(rec.profile)
            got = computed.table(lo, lo + len(want) - 1)
            # nothing may hide outside the printed rows
            outside = [n for n in computed.support if not lo <= n < lo + len(want)]
            if outside:
                out.append(f"{key} nonzero outside printed rows at {outside}")
        if tuple(want) != tuple(got):
            out.append(f"{key}: printed {list(want)}, computed {list(got)}")
    return out


def _regenerated(rec: FamilyRecord) -> Optional[CurveProfile]:
    rid = rec.id
    if rid.endswith("-acm"):
        return family_profile("acm", rec.ambient)
    for fam in ("LCh", "LA", "D", "M"):
        if rid == f"{fam}-r{rec.ambient}":
            return family_profile(fam, rec.ambient)
    if rid in ("Ch", "A"):
        return family_profile(rid)
    return None


def verify_catalog(records=None) -> CatalogReport:
    """Cross-check every record against the engine."""
    records = records if records is not None else load_catalog()
    idx = _index(records)
    results = []

    def add(rec_id, check, problems):
        results.append(CheckResult(rec_id, check, "fail" if problems else "pass", "; ".join(problems)))

    if len(idx) != len(records):
        add("*", "unique-ids", ["duplicate record ids"])
    for rec in records:
        add(rec.id, "relations", [f"unknown target {t!r}" for _, t in rec.relations if t not in idx])
        if rec.dim is not None and rec.dim < 0:
            add(rec.id, "dim", [f"negative dimension {rec.dim}"])
        if rec.profile is None:
            if rec.rao_length == CONSTANT and rec.rao_length_constant is not None:
                add(rec.id, "rao-length", [] if rec.rao_length_constant > 0 else ["nonpositive constant"])
            continue
        p = rec.profile
        report = validate(p)
        add(rec.id, "profile", [] if report else [f"{report.rule}: {report.detail}"])
        add(rec.id, "dg", [] if (p.d, p.g) == rec.dg else [f"(d,g) = {(p.d, p.g)}, ambient wants {rec.dg}"])
        add(rec.id, "rao-length",
            [] if rec.rao_length == rao_length(p) else [f"stored {rec.rao_length}, profile {rao_length(p)}"])
        if rec.printed is not None:
            add(rec.id, "printed-characters", _compare_printed(rec))
        regen = _regenerated(rec)
        if regen is not None:
            add(rec.id, "tower-regeneration",
                [] if regen.trimmed() == p.trimmed() else ["stored profile differs from tower output"])
        if rec.betti is not None:
            results.append(validate_catalog_resolution(rec.id, records))
        for kind, target in rec.relations:
            other = idx.get(target)
            if kind == "equals" and other is not None and other.profile is not None:
                add(rec.id, f"equals:{target}",
                    [] if other.profile.trimmed() == p.trimmed() else ["profiles differ"])

    for r in range(3, R_MAX + 1):
        d_rec, m_rec = idx.get(f"D-r{r}"), idx.get(f"M-r{r}")
        if d_rec is not None and d_rec.profile is not None:
            v = d_rec.profile.h0(r - 1)
            add(d_rec.id, "membership", [] if v == 1 else [f"h0(r-1) = {v}"])
        if m_rec is not None and m_rec.profile is not None:
            v = _h2_raw(m_rec.profile, r - 2)
            rl = rao_length(m_rec.profile)
            add(m_rec.id, "membership", [] if (v, rl) == (1, 1) else [f"h2(r-2) = {v}, rao length {rl}"])

    dims = []
    for r in range(3, 13):
        try:
            if linked_family_dim(r) != 2 * r * (r + 1) - 1:
                dims.append(f"r={r}")
        except RecursionMismatch as exc:
            dims.append(str(exc))
    add("*", "linked-dimension-recursion", dims)
    add("*", "contraction-dims", [] if contraction_dims() == (9, 11) else [str(contraction_dims())])
    return CatalogReport(tuple(results))
