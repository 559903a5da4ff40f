"""Holes, convex gons and pseudo-triangles in planar point sets.

Points are (x, y) integer pairs. The verify_* functions and table_report
return parsed JSON reports.
"""

import json as _json

from . import _core
from ._core import (
    bft_construct,
    empty_5pt_triangular,
    empty_6pt_triangular,
    empty_7pt_triangular,
    find_convex_kgon,
    find_k_hole,
    find_pseudo_triangle,
    lambda_convexity,
    m_value,
    property_names,
    splitter_type,
)


def verify_upper(table, k, l, n, trials=1000, seed=0):
    return _json.loads(_core.verify_upper(table, k, l, n, trials, seed))


def verify_lower(table, k, l, fixture=""):
    return _json.loads(_core.verify_lower(table, k, l, fixture))


def verify_property(name, trials=500, seed=0):
    return _json.loads(_core.verify_property(name, trials, seed))


def table_report(trials=1000, slow_trials=100, seed=0, **kwargs):
    return _json.loads(_core.table_report(trials, slow_trials, seed, **kwargs))
