"""Skew cyclic codes over R = F_q + vF_q + v^2F_q with v^3 = v.

Codes are plain dicts in the same JSON shape the command line tool prints.
"""

import json

from . import _core
from ._core import SkewcycError

DEFAULT_FIELD = "p=3,m=2,mod=1,0,1"

__all__ = [
    "DEFAULT_FIELD",
    "SkewcycError",
    "build",
    "census",
    "contains",
    "dual",
    "factor",
    "field_order",
    "gray",
    "is_self_dual",
    "lee_distance",
    "verify",
]


def _dump(code):
    return code if isinstance(code, str) else json.dumps(code)


def field_order(field=DEFAULT_FIELD):
    return _core.field_order(field)


def factor(n, field=DEFAULT_FIELD, aut=1):
    return json.loads(_core.factor(n, field, aut))


def build(n, g1, g2, g3, field=DEFAULT_FIELD, aut=1):
    return json.loads(_core.build(n, str(g1), str(g2), str(g3), field, aut))


def dual(code):
    return json.loads(_core.dual(_dump(code)))


def is_self_dual(code):
    return _core.is_self_dual(_dump(code))


def contains(code, word):
    """`word` uses the text form: coordinates separated by ';', ring elements a|b|c."""
    return _core.contains(_dump(code), word)


def gray(word, field=DEFAULT_FIELD):
    return _core.gray(word, field)


def lee_distance(code, bound=1_000_000):
    """Minimum Lee distance, or None for the zero code."""
    return _core.lee_distance(_dump(code), bound)


def census(n, field=DEFAULT_FIELD, aut=1, max_codes=10_000):
    return json.loads(_core.census(n, field, aut, max_codes))


def verify(matrix=None, inject_broken=False, controls=False):
    text = "" if matrix is None else json.dumps(matrix)
    return json.loads(_core.verify(text, inject_broken, controls))
