"""Crooked maps, inverse-sequence games and circle-map types, exact arithmetic."""

import json
from fractions import Fraction

from . import _core
from ._core import (
    PseudoarcError,
    canonical_crooked,
    cofactor_to_canonical,
    eps_crooked_decide,
    factor_through_canonical,
    is_circularly_crooked,
    is_crooked,
)

__all__ = [
    "PseudoarcError",
    "bm_play",
    "bm_verify",
    "canonical_crooked",
    "circle_degree",
    "cofactor_to_canonical",
    "crn",
    "crooked_circle_map",
    "crooked_factorize",
    "eps_crooked_decide",
    "eval_point",
    "factor_through_canonical",
    "is_circularly_crooked",
    "is_crooked",
    "lewis_minc",
    "multiplication_solve",
    "q",
    "rogers_witness_check",
    "supernatural_mul",
    "type_equiv",
    "type_of_sequence",
]


def q(s):
    """'num/den' -> Fraction"""
    return Fraction(s)


def _qs(x):
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def _pts(points):
    return [[_qs(x), _qs(y)] for x, y in points]


def crn(n):
    return int(_core.crn(n))


def eval_point(n, i):
    return _core.eval_point(n, str(i))


def lewis_minc(k):
    return [int(m) for m in _core.lewis_minc(k)]


def crooked_factorize(points, eps):
    """points: [(x, y), ...] of a PL surjection g; resolved against c_N with 1/N < delta"""
    r = json.loads(_core.crooked_factorize(json.dumps({"points": _pts(points)}), _qs(eps)))
    for k in ("delta", "bound", "exact"):
        if r[k] is not None:
            r[k] = q(r[k])
    return r


def circle_degree(lift):
    return _core.circle_degree(json.dumps({"lift": _pts(lift)}))


def crooked_circle_map(n, d):
    return json.loads(_core.crooked_circle_map(n, d))


def rogers_witness_check(grid):
    return json.loads(_core.rogers_witness_check(grid))


def type_of_sequence(prefix, cycle=(1,)):
    return json.loads(_core.type_of_sequence(list(prefix), list(cycle)))


def multiplication_solve(s, sp):
    r = _core.multiplication_solve(json.dumps(s), json.dumps(sp))
    return None if r is None else json.loads(r)


def supernatural_mul(a, b):
    return json.loads(_core.supernatural_mul(json.dumps(a), json.dumps(b)))


def type_equiv(a, b):
    return _core.type_equiv(json.dumps(a), json.dumps(b))


def bm_play(backend, odd, eve="identity", rounds=6, seed=0, below=None, inject=-1, inject_degree=3):
    b = None if below is None else json.dumps(below)
    return json.loads(_core.bm_play(backend, odd, eve, rounds, seed, b, inject, inject_degree))


def bm_verify(transcript, checks):
    return json.loads(_core.bm_verify(json.dumps(transcript), list(checks)))
