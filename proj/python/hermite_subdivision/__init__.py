"""Exact analysis of Hermite subdivision masks.

Thin wrapper over the compiled ``_core`` module. Rationals come back as
``fractions.Fraction``; inputs accept Fraction, int or "p/q" strings.
"""

from __future__ import annotations

import json
from fractions import Fraction

from . import _core
from ._core import (
    DimensionError,
    DomainError,
    HermiteError,
    HypothesisError,
    InfeasibleError,
    Mask,
    ParseError,
    catalog,
    catalog_names,
    conv2,
    derham,
    is_interpolatory,
    is_mirror_symmetric,
)

__all__ = [
    "DimensionError", "DomainError", "HermiteError", "HypothesisError", "InfeasibleError", "Mask",
    "ParseError", "analyze", "catalog", "catalog_names", "check_shifted_monomial", "check_spectral",
    "coefficients", "conv2", "derham", "derham_tau", "infer_tau", "is_interpolatory",
    "is_mirror_symmetric", "iterate", "limit_samples", "load_mask", "make_mask", "pullback_window",
    "reproduction_order",
    "sample_hermite", "spectral_order", "sumrule_feasible", "sumrule_order", "synthesize_mask",
    "verify_lemma3",
]


def _s(x) -> str:
    if isinstance(x, str):
        return x
    f = Fraction(x)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _f(s: str) -> Fraction:
    return Fraction(s)


def _fl(xs):
    return [_f(x) for x in xs]


def make_mask(d: int, support_min: int, coefficients) -> Mask:
    return Mask(d, support_min, [[[_s(x) for x in row] for row in m] for m in coefficients])


def load_mask(path) -> Mask:
    with open(path, encoding="utf-8") as fh:
        return Mask.from_json(fh.read())


def coefficients(mask: Mask):
    return [[_fl(row) for row in m] for m in mask.coefficients()]


def spectral_order(mask: Mask, k_max: int = 8) -> dict:
    r = _core.spectral_order(mask, k_max)
    r["polynomials"] = [_fl(p) for p in r["polynomials"]]
    return r


def check_spectral(mask: Mask, poly, k: int) -> bool:
    return _core.check_spectral(mask, [_s(c) for c in poly], k)


def check_shifted_monomial(mask: Mask, tau, ell: int) -> bool:
    return _core.check_shifted_monomial(mask, _s(tau), ell)


def reproduction_order(mask: Mask, tau, ell_max: int = 8):
    return _core.reproduction_order(mask, _s(tau), ell_max)


def infer_tau(mask: Mask):
    t = _core.infer_tau(mask)
    return None if t is None else _f(t)


def synthesize_mask(d: int, tau, ell: int, support: tuple[int, int]) -> Mask:
    return _core.synthesize_mask(d, _s(tau), ell, support[0], support[1])


def derham_tau(tau) -> Fraction:
    return _f(_core.derham_tau(_s(tau)))


def verify_lemma3(mask: Mask, tau, ell: int) -> bool:
    return _core.verify_lemma3(mask, _s(tau), ell)


def _witness(w):
    if w is None:
        return None
    return {"order": w["order"], "sigma": w["sigma"], "nu": [_fl(v) for v in w["nu"]]}


def sumrule_feasible(mask: Mask, ell: int, sigma: int = -1):
    return _witness(_core.sumrule_feasible(mask, ell, sigma))


def sumrule_order(mask: Mask, ell_max: int = 9) -> dict:
    r = _core.sumrule_order(mask, ell_max)
    r["witness"] = _witness(r["witness"])
    return r


def analyze(mask: Mask, source: str = "python", max_order: int = 8, tau=None, derham: bool = False) -> dict:
    """Full analysis report as a dict; rationals stay strings as in the CLI JSON."""
    return json.loads(
        _core.analyze_json(mask, source, max_order, None if tau is None else _s(tau), derham))


def _seq(values):
    return [[_s(x) for x in v] for v in values]


def sample_hermite(poly, d: int, tau, window: tuple[int, int]):
    offset, vals = _core.sample_hermite([_s(c) for c in poly], d, _s(tau), window[0], window[1])
    return offset, [_fl(v) for v in vals]


def iterate(mask: Mask, offset: int, values, levels: int, tau=0, truncated: bool = False):
    off, vals = _core.hermite_iterate(mask, offset, _seq(values), levels, _s(tau), truncated)
    return off, [_fl(v) for v in vals]


def limit_samples(mask: Mask, offset: int, values, levels: int, tau=0, truncated: bool = False):
    rows = _core.limit_samples(mask, offset, _seq(values), levels, _s(tau), truncated)
    return [(_f(x), _fl(v)) for x, v in rows]


def pullback_window(mask: Mask, window: tuple[int, int], levels: int) -> tuple[int, int]:
    return _core.pullback_window(mask, window[0], window[1], levels)
