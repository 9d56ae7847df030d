"""Command-line front end.

Exit status is 0 on success, 1 when the engine raises, 2 on a usage error.
Family identifiers: acm, Ch, A, LCh, LA, D, M, R3, E3, Q.
"""

import argparse
import csv
import io
import json
import sys
from typing import List, Optional, Sequence

from . import catalog
from .errors import LiaisonError
from .hvector import enumerate_hvectors, genus, degree
from .liaison import ACM_LINK, BILIAISON, BiliaisonSpec, LinkSpec, biliaison, link, tower
from .profile import CurveProfile, _h2_raw, _lowest_interesting, gamma, h3, rao_length, s_min, sigma

FORMATS = ("table", "json", "csv")
PROFILE_COLUMNS = ("h0", "h1", "h2", "h3", "chi", "gamma", "sigma", "rho")
TOWER_FAMILIES = {
    "acm": (catalog.LINE, 1, ACM_LINK),
    "LCh": (catalog.CH, 3, ACM_LINK),
    "LA": (catalog.A, 3, ACM_LINK),
    "D": (catalog.CH, 3, BILIAISON),
    "M": (catalog.A, 3, BILIAISON),
}
TOWER_EXTRA = ("N", "rao_length", "s_min")


class UsageError(Exception):
    pass


def _dumps(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, separators=(",", ":")) + "\n"


def emit(rows: Sequence[dict], columns: Sequence[str], fmt: str) -> str:
    """Render rows as a JSON array of objects, RFC 4180 CSV or aligned text."""
    if fmt == "json":
        return _dumps([{c: row[c] for c in columns} for row in rows])
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([row[c] for c in columns])
        return buf.getvalue()
    if fmt == "table":
        cells = [list(columns)] + [[str(row[c]) for c in columns] for row in rows]
        widths = [max(len(r[i]) for r in cells) for i in range(len(columns))]
        return "".join("  ".join(v.rjust(w) for v, w in zip(r, widths)).rstrip() + "\n" for r in cells)
    raise UsageError(f"unknown format {fmt!r}")


def _csv_list(text: str, allowed: Sequence[str], option: str) -> List[str]:
    items = [t.strip() for t in text.split(",") if t.strip()]
    bad = [t for t in items if t not in allowed]
    if bad or not items:
        raise UsageError(f"{option}: unknown column(s) {','.join(bad) or '(empty)'}; choose from {','.join(allowed)}")
    return items


def _load_profile(args) -> CurveProfile:
    if args.profile_file and args.family:
        raise UsageError("give either --family or --profile-file, not both")
    if args.profile_file:
        try:
            with open(args.profile_file, encoding="utf-8") as fh:
                obj = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"--profile-file: {exc}") from exc
        if isinstance(obj, list) and len(obj) == 1:
            obj = obj[0]
        try:
            return CurveProfile.from_json(obj)
        except (KeyError, TypeError, ValueError) as exc:
            raise UsageError(f"--profile-file: not a profile ({exc})") from exc
    if args.family:
        return catalog.family_profile(args.family, args.r)
    raise UsageError("one of --family or --profile-file is required")


def _profile_rows(p: CurveProfile, columns, n_min, n_max):
    gam, sig = gamma(p), sigma(p)
    values = {
        "h0": p.h0, "h1": p.h1, "rho": p.h1, "h2": lambda n: _h2_raw(p, n), "h3": h3,
        "chi": p.chi, "gamma": gam.__getitem__, "sigma": sig.__getitem__,
    }
    return [dict(n=n, **{c: values[c](n) for c in columns}) for n in range(n_min, n_max + 1)]


def _emit_profile(p: CurveProfile, args, default_show) -> str:
    if args.format == "json" and args.show is None and args.command != "profile":
        return _dumps(p.to_json())
    columns = _csv_list(args.show or default_show, PROFILE_COLUMNS, "--show")
    n_min = args.n_min if args.n_min is not None else _lowest_interesting(p)
    n_max = args.n_max if args.n_max is not None else p.N + 3
    if n_max < n_min:
        raise UsageError(f"--n-max {n_max} is below the first row {n_min}")
    text = emit(_profile_rows(p, columns, n_min, n_max), ["n"] + columns, args.format)
    if args.format == "table":
        text = f"# d={p.d} g={p.g} N={p.N} rao_length={rao_length(p)}\n" + text
    return text


def cmd_profile(args) -> str:
    return _emit_profile(_load_profile(args), args, "gamma,sigma,rho")


def cmd_link(args) -> str:
    if args.s is None or args.t is None:
        raise UsageError("link needs --s and --t")
    return _emit_profile(link(_load_profile(args), LinkSpec(args.s, args.t)), args, "h0,h1,h2,gamma,sigma")


def cmd_biliaison(args) -> str:
    if args.s is None:
        raise UsageError("biliaison needs --s")
    out = biliaison(_load_profile(args), BiliaisonSpec(args.s, args.h), t=args.t)
    return _emit_profile(out.trimmed(), args, "h0,h1,h2,gamma,sigma")


def cmd_tower(args) -> str:
    if args.r_max is None:
        raise UsageError("tower needs --r-max")
    if args.profile_file:
        if args.base_r is None:
            raise UsageError("--profile-file towers need --base-r")
        base, base_r, mode = _load_profile(args), args.base_r, args.mode or ACM_LINK
    else:
        fam = args.family or args.base or "acm"
        if fam not in TOWER_FAMILIES:
            raise UsageError(f"tower family must be one of {', '.join(TOWER_FAMILIES)}, got {fam!r}")
        base, base_r, mode = TOWER_FAMILIES[fam]
        if args.mode and args.mode != mode:
            raise UsageError(f"family {fam} is generated by {mode}, not {args.mode}")
    profiles = tower(base, base_r, args.r_max, mode)
    start = args.r_min if args.r_min is not None else base_r
    if args.format == "json":
        items = [dict(r=base_r + i, **p.to_json()) for i, p in enumerate(profiles) if base_r + i >= start]
        return _dumps(items)
    extra = _csv_list(args.show, TOWER_EXTRA, "--show") if args.show else []
    rows = []
    for i, p in enumerate(profiles):
        r = base_r + i
        if r < start:
            continue
        row = {"r": r, "d": p.d, "g": p.g, "N": p.N, "rao_length": rao_length(p), "s_min": s_min(p)}
        rows.append(row)
    return emit(rows, ["r", "d", "g"] + extra, args.format)


def cmd_hvectors(args) -> str:
    if args.d is None or args.g is None:
        raise UsageError("hvectors needs --d and --g")
    found = enumerate_hvectors(args.d, args.g)
    if args.format == "json":
        return _dumps([list(h.values) for h in found])
    rows = [{"index": i, "s": h.s, "degree": degree(h), "genus": genus(h),
             "h": ",".join(map(str, h.values))} for i, h in enumerate(found)]
    return emit(rows, ["index", "s", "degree", "genus", "h"], args.format)


def cmd_dims(args) -> str:
    r_min = 3 if args.r_min is None else args.r_min
    r_max = r_min + 1 if args.r_max is None else args.r_max
    if r_min < 3 or r_max < r_min:
        raise UsageError(f"dims needs 3 <= --r-min <= --r-max, got {r_min}..{r_max}")
    rows = [{"r": r, "acm": catalog.acm_dim(r), "linked": catalog.linked_family_dim(r),
             "extremal": catalog.extremal_dim(r)} for r in range(r_min, r_max + 1)]
    return emit(rows, ["r", "acm", "linked", "extremal"], args.format)


def cmd_catalog_verify(args):
    report = catalog.verify_catalog(catalog.load_catalog(args.catalog))
    if args.format == "json":
        text = _dumps(report.to_json())
    else:
        rows = [res.to_json() for res in report.results]
        text = emit(rows, ["record", "check", "status", "detail"], args.format)
        if args.format == "table":
            text += report.summary() + "\n"
    return text, 0 if report.ok else 1


COMMANDS = {
    "profile": cmd_profile,
    "link": cmd_link,
    "biliaison": cmd_biliaison,
    "tower": cmd_tower,
    "hvectors": cmd_hvectors,
    "dims": cmd_dims,
    "catalog-verify": cmd_catalog_verify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="liaisonkit",
        description="Exact cohomology, liaison and Betti numerics for space curves.",
        epilog="families: " + ", ".join(catalog.FAMILIES),
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def add(name, help_text):
        p = sub.add_parser(name, help=help_text, description=help_text)
        p.add_argument("--format", choices=FORMATS, default="table")
        return p

    def source(p):
        p.add_argument("--family", choices=catalog.FAMILIES, help="named family")
        p.add_argument("--r", type=int, help="ambient index of the family")
        p.add_argument("--profile-file", help="JSON profile {d, g, rho, h0, N}")

    def rows(p, default_show):
        p.add_argument("--show", help=f"comma list from {','.join(PROFILE_COLUMNS)} (default {default_show})")
        p.add_argument("--n-min", type=int)
        p.add_argument("--n-max", type=int)

    p = add("profile", "cohomology table of a profile")
    source(p)
    rows(p, "gamma,sigma,rho")

    p = add("link", "residual profile in a complete intersection of type (s, t)")
    source(p)
    p.add_argument("--s", type=int)
    p.add_argument("--t", type=int)
    rows(p, "h0,h1,h2,gamma,sigma")

    p = add("biliaison", "elementary biliaison of type (s, h)")
    source(p)
    p.add_argument("--s", type=int)
    p.add_argument("--h", type=int, default=1)
    p.add_argument("--t", type=int, help="auxiliary surface degree (default: least possible)")
    rows(p, "h0,h1,h2,gamma,sigma")

    p = add("tower", "linkage or biliaison tower")
    p.add_argument("--family", choices=tuple(TOWER_FAMILIES))
    p.add_argument("--base", choices=tuple(TOWER_FAMILIES), help="alias of --family")
    p.add_argument("--profile-file")
    p.add_argument("--base-r", type=int)
    p.add_argument("--mode", choices=(ACM_LINK, BILIAISON))
    p.add_argument("--r-min", type=int)
    p.add_argument("--r-max", type=int)
    p.add_argument("--show", help=f"extra columns from {','.join(TOWER_EXTRA)}")
    p.set_defaults(r=None)

    p = add("hvectors", "admissible ACM h-vectors of given degree and genus")
    p.add_argument("--d", type=int)
    p.add_argument("--g", type=int)

    p = add("dims", "family dimension table")
    p.add_argument("--r-min", type=int)
    p.add_argument("--r-max", type=int)

    p = add("catalog-verify", "cross-check the catalog against the engine")
    p.add_argument("--catalog", help=f"catalog JSON (default: ${catalog.CATALOG_ENV} or the shipped file)")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = COMMANDS[args.command](args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except (LiaisonError, ValueError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    text, code = result if isinstance(result, tuple) else (result, 0)
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
