"""Exact pebbling computations on rectangular grids.

Distributions are lists of rows of non-negative pebble counts. Exact
rationals come back as ``fractions.Fraction``.
"""

import json
from fractions import Fraction

from . import _core
from ._core import CapExceeded, Unsolvable, hem, is_solvable, normalize, reach_count

__all__ = [
    "CapExceeded",
    "Unsolvable",
    "certificate",
    "hem",
    "is_solvable",
    "normalize",
    "pebbling_number",
    "reach_count",
    "regions",
    "run_lemmas",
    "solve_lp",
    "values",
    "verify_certificate",
]


def _fractions(obj):
    """Replaces every "p/q" string in a parsed report by a Fraction."""
    if isinstance(obj, dict):
        return {k: _fractions(v) for k, v in obj.items()}
    if isinstance(obj, list):
        return [_fractions(v) for v in obj]
    if isinstance(obj, str) and "/" in obj:
        num, _, den = obj.partition("/")
        if num.lstrip("-").isdigit() and den.isdigit():
            return Fraction(int(num), int(den))
    return obj


def _plain(obj):
    """Inverse of _fractions: Fractions back to "p/q" strings."""
    if isinstance(obj, dict):
        return {k: _plain(v) for k, v in obj.items()}
    if isinstance(obj, list):
        return [_plain(v) for v in obj]
    if isinstance(obj, Fraction):
        return f"{obj.numerator}/{obj.denominator}"
    return obj


def values(pebbles, hem=False):
    return [[Fraction(v) for v in row] for row in _core.values(pebbles, hem)]


def regions(pebbles, hem=False, cap=64):
    return _fractions(json.loads(_core.regions_json(pebbles, hem, cap)))


def certificate(pebbles, cap=64, raw=False):
    """Certificate report. With raw=True the JSON text is returned unchanged,
    suitable for storing and later passing to verify_certificate."""
    text = _core.certificate_json(pebbles, cap)
    return text if raw else _fractions(json.loads(text))


def verify_certificate(stored, pebbles, cap=64):
    if not isinstance(stored, str):
        stored = json.dumps(_plain(stored))
    return _core.verify_certificate(stored, pebbles, cap)


def pebbling_number(rows, cols, arity=2, max_total=64, use_symmetry=True, jobs=1):
    """Returns (value, witness distribution)."""
    return _core.pebbling_number(rows, cols, arity, max_total, use_symmetry, jobs)


def solve_lp(text):
    """Minimizes an LP given in the plain text format. Returns
    (status, optimum, witness)."""
    status, optimum, witness = _core.solve_lp(text)
    return status, Fraction(optimum), [Fraction(x) for x in witness]


def run_lemmas(sweeps=True, conjecture=True, procedures=True, seed=None):
    kwargs = {} if seed is None else {"seed": seed}
    return json.loads(_core.run_lemmas_json(sweeps, conjecture, procedures, **kwargs))
