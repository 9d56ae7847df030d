"""Exact numerics for liaison of space curves: cohomology profiles, links and
biliaisons, ACM h-vectors, Betti tables and a catalog of curve families."""

from .arith import poly_binom3, trunc_binom, triangular
from .betti import BettiTable, biliaison_transform, chi_from_betti, dg_from_betti, reduce
from .errors import LiaisonError
from .hvector import HVector, enumerate_hvectors
from .liaison import BiliaisonSpec, LinkSpec, biliaison, link, tower
from .profile import CurveProfile, RaoFunction, gamma, h2, sigma, validate

__version__ = "0.1.0"

__all__ = [
    "BettiTable",
    "BiliaisonSpec",
    "CurveProfile",
    "HVector",
    "LiaisonError",
    "LinkSpec",
    "RaoFunction",
    "biliaison",
    "biliaison_transform",
    "chi_from_betti",
    "dg_from_betti",
    "enumerate_hvectors",
    "gamma",
    "h2",
    "link",
    "poly_binom3",
    "reduce",
    "sigma",
    "tower",
    "triangular",
    "trunc_binom",
    "validate",
]
