import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from liaisonkit.arith import diff3  # noqa: E402
from liaisonkit.profile import CurveProfile, _h2_raw, _lowest_interesting, gamma  # noqa: E402

_seen = []
_original_post_init = CurveProfile.__post_init__


def _recording_post_init(self):
    _original_post_init(self)
    _seen.append(self)


CurveProfile.__post_init__ = _recording_post_init


def _sum_rule_violations(p):
    # Raw h2 so that deliberately inconsistent profiles are checked too.
    if any(n >= p.N for n in p.rho.support):
        return []
    gam = gamma(p)
    lo = _lowest_interesting(p)
    sig = {n: diff3(lambda k: _h2_raw(p, k), n) for n in range(lo, p.N + 4)}
    out = []
    if gam.total() != 0:
        out.append("sum gamma")
    if gam.first_moment() != p.d:
        out.append("sum n*gamma")
    if sum(sig.values()) != 0:
        out.append("sum sigma")
    if sum(n * v for n, v in sig.items()) != -p.d:
        out.append("sum n*sigma")
    return out


@pytest.fixture(autouse=True)
def character_sum_rules():
    """Every profile built since the last check obeys the four character sum rules.

    Profiles built at import time are picked up by the first test that follows.
    """
    yield
    fresh = list(_seen)
    _seen.clear()
    bad = {}
    for p in set(fresh):
        v = _sum_rule_violations(p)
        if v:
            bad[p] = v
    assert not bad, f"sum rules fail on {len(bad)} profiles, e.g. {next(iter(bad.items()))}"
    _checked[0] += len(fresh)


_checked = [0]


def pytest_terminal_summary(terminalreporter):
    terminalreporter.write_line(f"character sum rules checked on {_checked[0]} constructed profiles")
