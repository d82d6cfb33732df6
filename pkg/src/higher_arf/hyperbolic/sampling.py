"""Seeded random pairs for each level-jump regime and the agreement harness."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from ..errors import ArfError, ChartBoundary
from .lifting import oracle_jump, product_jump_closed_form
from .moebius import (
    INF,
    MoebiusElement,
    compose,
    conjugate,
    make_elliptic,
    make_hyperbolic,
    make_parabolic,
)

Pair = tuple[MoebiusElement, MoebiusElement]
TRACE_MARGIN = 1e-6


def random_conjugator(rng: np.random.Generator) -> MoebiusElement:
    """Rotation about i, then scaling, then translation."""
    rot = make_elliptic(1j, rng.uniform(0, 2 * math.pi))
    s = math.exp(rng.uniform(-1, 1))
    scale = MoebiusElement.from_matrix(s, 0.0, 0.0, 1.0)
    shift = MoebiusElement.from_matrix(1.0, rng.uniform(-2, 2), 0.0, 1.0)
    return compose(shift, compose(scale, rot))


def _shift(rng) -> float:
    return math.exp(rng.uniform(0.05, 3.0))


def _hh(rng, sign: int, lo: float, hi: float) -> Pair:
    lam1, lam2 = _shift(rng), _shift(rng)
    beta = sign * math.exp(rng.uniform(-1, 1))
    thr = (lam1 + lam2) / (1 + lam1 * lam2)
    u = rng.uniform(lo(thr), hi(thr))
    return make_hyperbolic(INF, 0.0, lam1), make_hyperbolic(u * beta, beta, lam2)


def sample_hh_plus(rng) -> Pair:
    return _hh(rng, 1, lambda t: t, lambda t: 1.0)


def sample_hh_minus(rng) -> Pair:
    return _hh(rng, -1, lambda t: t, lambda t: 1.0)


def sample_hh_zero(rng) -> Pair:
    sign = 1 if rng.random() < 0.5 else -1
    case = rng.integers(3)
    if case == 0:  # fixed points of B on opposite sides of 0
        lam1, lam2 = _shift(rng), _shift(rng)
        a = -sign * math.exp(rng.uniform(-1, 1))
        b = sign * math.exp(rng.uniform(-1, 1))
        if rng.random() < 0.5:
            a, b = b, a
        return make_hyperbolic(INF, 0.0, lam1), make_hyperbolic(a, b, lam2)
    if case == 1:  # attracting point farther from 0
        return _hh(rng, sign, lambda t: 1.0, lambda t: 3.0)
    return _hh(rng, sign, lambda t: 0.0, lambda t: t)  # attracting point below threshold


def _hp(rng, lo: float, hi: float) -> Pair:
    lam1 = _shift(rng)
    alpha = math.exp(rng.uniform(-1, 1))
    lam2 = rng.uniform(lo, hi) * (lam1 + 1) / ((lam1 - 1) * alpha)
    return make_hyperbolic(INF, 0.0, lam1), make_parabolic(alpha, lam2)


def sample_hp_zero(rng) -> Pair:
    return _hp(rng, 0.0, 1.0)


def sample_hp_one(rng) -> Pair:
    return _hp(rng, 1.0, 3.0)


def _pp(rng, lo: float, hi: float) -> Pair:
    lam1 = math.exp(rng.uniform(-1.5, 1.5))
    alpha = rng.uniform(-2, 2) or 1.0
    lam2 = rng.uniform(lo, hi) * 2 / lam1
    return make_parabolic(INF, lam1), make_parabolic(alpha, lam2)


def sample_pp_zero(rng) -> Pair:
    return _pp(rng, 0.0, 1.0)


def sample_pp_one(rng) -> Pair:
    return _pp(rng, 1.0, 3.0)


# name -> (sampler, jump the regime predicts)
REGIMES: dict[str, tuple[Callable, int]] = {
    "hyp-hyp+1": (sample_hh_plus, 1),
    "hyp-hyp-1": (sample_hh_minus, -1),
    "hyp-hyp0": (sample_hh_zero, 0),
    "hyp-par0": (sample_hp_zero, 0),
    "hyp-par1": (sample_hp_one, 1),
    "par-par0": (sample_pp_zero, 0),
    "par-par1": (sample_pp_one, 1),
}


def draw_pair(regime: str, rng: np.random.Generator) -> Pair:
    """A conjugated pair from ``regime`` whose product trace is not near 0."""
    sampler = REGIMES[regime][0]
    while True:
        try:
            a, b = sampler(rng)
            c = random_conjugator(rng)
            a, b = conjugate(c, a), conjugate(c, b)
        except ArfError:
            continue
        if abs(compose(a, b).trace) > TRACE_MARGIN:
            return a, b


@dataclass
class RegimeResult:
    regime: str
    expected: int
    samples: int
    agree: int = 0
    chart_failures: int = 0
    mismatches: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.agree == self.samples and self.chart_failures == 0

    def as_dict(self) -> dict:
        return {
            "regime": self.regime,
            "expected": self.expected,
            "samples": self.samples,
            "agree": self.agree,
            "chart_failures": self.chart_failures,
            "mismatches": self.mismatches[:5],
        }


def verify_regime(regime: str, samples: int, rng: np.random.Generator) -> RegimeResult:
    expected = REGIMES[regime][1]
    res = RegimeResult(regime, expected, samples)
    for _ in range(samples):
        a, b = draw_pair(regime, rng)
        k1, k2 = (int(k) for k in rng.integers(-3, 4, size=2))
        try:
            oracle = oracle_jump(a, b, k1, k2)
        except ChartBoundary:
            res.chart_failures += 1
            continue
        closed = product_jump_closed_form(a, b)
        if oracle == closed == expected:
            res.agree += 1
        else:
            res.mismatches.append(
                {"A": list(a.entries), "B": list(b.entries), "oracle": oracle, "closed_form": closed}
            )
    return res


def verify_level_lemmas(samples: int = 1000, seed: int = 0) -> list[RegimeResult]:
    """Closed form against path lifting, ``samples`` pairs per regime."""
    rng = np.random.default_rng(seed)
    return [verify_regime(name, samples, rng) for name in REGIMES]
