"""Exact multiplicities of determinantal ideals.

Kinds are "generic" (needs m <= n), "symmetric" and "pfaffian". Values are
returned as fractions.Fraction or int.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import _core
from ._core import DomainError, OutOfScope, ScaleRefused

__version__ = _core.__version__

__all__ = [
    "DomainError",
    "Evaluation",
    "OutOfScope",
    "ScaleRefused",
    "epsilon",
    "epsilon_estimate",
    "fiber",
    "j",
    "j_estimate",
    "layer_count",
    "report",
    "scroll_j",
    "selberg",
    "series",
    "tableau_count",
]


@dataclass(frozen=True)
class Evaluation:
    value: Fraction
    engine: str
    simplex_count: int
    note: str


def _evaluation(d):
    return Evaluation(Fraction(d["value"]), d["engine"], d["simplex_count"], d["note"])


def j(kind, *, n, t, m=None, engine="monomial"):
    return _evaluation(_core.j(kind, n=n, t=t, m=m, engine=engine))


def epsilon(kind, *, n, t, m=None, engine="monomial"):
    return _evaluation(_core.epsilon(kind, n=n, t=t, m=m, engine=engine))


def fiber(kind, *, n, t, m=None, engine="monomial"):
    return _evaluation(_core.fiber(kind, n=n, t=t, m=m, engine=engine))


def report(kind, *, n, t, m=None, engine="monomial"):
    r = _core.report(kind, n=n, t=t, m=m, engine=engine)
    for key in ("j", "epsilon", "c"):
        r[key] = Fraction(r[key])
    if r["fiber_degree"] is not None:
        r["fiber_degree"] = Fraction(r["fiber_degree"])
    return r


def scroll_j(a):
    return int(_core.scroll_j(list(a)))


def selberg(m, n):
    lhs, rhs = _core.selberg(m, n)
    return Fraction(lhs), Fraction(rhs)


def series(m, n):
    return Fraction(_core.series(m, n))


def layer_count(kind, *, n, t, s, m=None, layer="j"):
    return int(_core.layer_count(kind, n=n, t=t, s=s, m=m, layer=layer))


def j_estimate(kind, *, n, t, s, m=None):
    return Fraction(_core.j_estimate(kind, n=n, t=t, s=s, m=m))


def epsilon_estimate(kind, *, n, t, s, m=None):
    return Fraction(_core.epsilon_estimate(kind, n=n, t=t, s=s, m=m))


def tableau_count(n, row_counts):
    return int(_core.tableau_count(n, list(row_counts)))
