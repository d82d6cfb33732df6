"""Lifted arguments in the universal cover of PSL(2, R) and their levels.

An element of the cover is a base element together with a real lifted
argument. For a hyperbolic or parabolic base the lifted argument lies in
``(-pi + 2 pi k, pi + 2 pi k)`` for a unique integer ``k``, its level. The
central generator (a full counter-clockwise turn) has lifted argument ``2 pi``.

Products are lifted by tracking the argument continuously along a canonical
path from the identity to the second factor.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from ..errors import (
    ChartBoundary,
    EllipticUnsupported,
    NotCovered,
    PathThroughDegeneracy,
    SharedFixedPoint,
)
from .moebius import (
    ElementKind,
    MoebiusElement,
    compose,
    element_info,
    element_kind,
    inverse,
)

TWO_PI = 2 * math.pi
BOUNDARY_MARGIN = 1e-9
MAX_DEPTH = 40
MAX_STEP = math.pi / 4
_INITIAL_STEPS = 16

Matrix = tuple[float, float, float, float]


def _arg_of(a: float, b: float, c: float, d: float) -> float:
    return 2 * math.atan2(b - c, a + d)


def principal_argument(g: MoebiusElement) -> float:
    """Rotation part of ``g`` in ``(-pi, pi]``; small rotations give ``+phi``."""
    psi = _arg_of(*g.entries)
    return math.pi if psi <= -math.pi else psi


@dataclass(frozen=True)
class LiftedElement:
    base: MoebiusElement
    lifted_argument: float

    @property
    def level(self) -> int:
        return level_of(self)


def _require_liftable(g: MoebiusElement) -> ElementKind:
    kind = element_kind(g)
    if kind is ElementKind.ELLIPTIC:
        raise EllipticUnsupported(f"elliptic element {g} has no level")
    return kind


def lift(g: MoebiusElement, k: int = 0) -> LiftedElement:
    """The lift of ``g`` at level ``k``."""
    _require_liftable(g)
    return LiftedElement(g, principal_argument(g) + TWO_PI * k)


def chart_level(phi: float) -> int:
    """Index ``k`` of the chart ``(-pi + 2 pi k, pi + 2 pi k)`` containing ``phi``."""
    k = round(phi / TWO_PI)
    if abs(phi - TWO_PI * k) > math.pi - BOUNDARY_MARGIN:
        raise ChartBoundary(f"lifted argument {phi!r} is within {BOUNDARY_MARGIN} of a chart edge")
    return int(k)


def level_of(le: LiftedElement) -> int:
    """Level of a lifted element.

    Also accepted for elliptic bases away from trace zero, where it reports
    the chart index of the lifted argument.
    """
    return chart_level(le.lifted_argument)


def level_mod(le: LiftedElement, m: int) -> int:
    return level_of(le) % m


def _canonical_path(g: MoebiusElement) -> Callable[[float], Matrix]:
    """Path in SL(2, R) from the identity to ``g`` through the same class."""
    kind = _require_liftable(g)
    a, b, c, d = g.entries
    if kind is ElementKind.IDENTITY:
        return lambda t: (1.0, 0.0, 0.0, 1.0)
    if kind is ElementKind.PARABOLIC:
        return lambda t: (1 + t * (a - 1), t * b, t * c, 1 + t * (d - 1))
    # spectral projectors onto the two eigenlines
    tr = a + d
    mu = (tr + math.sqrt(tr * tr - 4)) / 2
    gap = mu - 1 / mu
    e1 = ((a - 1 / mu) / gap, b / gap, c / gap, (d - 1 / mu) / gap)
    e2 = ((mu - a) / gap, -b / gap, -c / gap, (mu - d) / gap)
    lam = mu * mu

    def path(t: float) -> Matrix:
        s = math.sqrt(1 + t * (lam - 1))
        r = 1 / s
        return tuple(s * x + r * y for x, y in zip(e1, e2))

    return path


def _mul(p: Matrix, q: Matrix) -> Matrix:
    return (
        p[0] * q[0] + p[1] * q[2],
        p[0] * q[1] + p[1] * q[3],
        p[2] * q[0] + p[3] * q[2],
        p[2] * q[1] + p[3] * q[3],
    )


def _z(m: Matrix) -> complex:
    return complex(m[0] + m[3], m[1] - m[2])


def _track(start: Matrix, path: Callable[[float], Matrix]) -> float:
    """Change of the lifted argument along ``t -> start * path(t)``, t in [0, 1].

    ``(a + d) + i (b - c)`` never vanishes on SL(2, R), so its argument
    unwraps; steps are halved until each moves the argument by less than
    ``MAX_STEP``.
    """
    total = 0.0
    h0 = 1.0 / _INITIAL_STEPS
    stack = [(1.0 - h0 * (i + 1), 1.0 - h0 * i, 0) for i in range(_INITIAL_STEPS)]
    t = 0.0
    zt = _z(_mul(start, path(0.0)))
    while stack:
        t0, t1, depth = stack.pop()
        z1 = _z(_mul(start, path(t1)))
        step = 2 * cmath.phase(z1 / zt)
        if abs(step) < MAX_STEP:
            total += step
            t, zt = t1, z1
            continue
        if depth >= MAX_DEPTH:
            raise PathThroughDegeneracy(f"argument tracking failed to resolve near t={t0}")
        mid = (t0 + t1) / 2
        stack.append((mid, t1, depth + 1))
        stack.append((t0, mid, depth + 1))
    assert t == 1.0
    return total


@lru_cache(maxsize=1 << 16)
def _increment(g1: MoebiusElement, g2: MoebiusElement) -> float:
    return _track(g1.entries, _canonical_path(g2))


def lifted_product(le1: LiftedElement, le2: LiftedElement) -> LiftedElement:
    """Product in the universal cover.

    ``le1`` may have any base; ``le2`` must be hyperbolic, parabolic or the
    identity so that its canonical path exists.
    """
    _require_liftable(le2.base)
    k2 = level_of(le2)
    phi = le1.lifted_argument + _increment(le1.base, le2.base) + TWO_PI * k2
    return LiftedElement(compose(le1.base, le2.base), phi)


def lifted_inverse(le: LiftedElement) -> LiftedElement:
    """Inverse in the cover: level ``-k`` on the inverse base."""
    inv = inverse(le.base)
    return LiftedElement(inv, principal_argument(inv) - TWO_PI * level_of(le))


def oracle_jump(a: MoebiusElement, b: MoebiusElement, k1: int = 0, k2: int = 0) -> int:
    """``level(AB) - level(A) - level(B)`` computed by path lifting."""
    prod = lifted_product(lift(a, k1), lift(b, k2))
    return level_of(prod) - k1 - k2


# closed forms


def _normal_coordinate(att: float, rep: float, x: float) -> float:
    """Image of ``x`` under the orientation-preserving map sending ``att`` to
    infinity and ``rep`` to 0 (defined up to a positive scale)."""
    if math.isinf(att):
        return x - rep
    if math.isinf(rep):
        return -1 / (x - att)
    sign = 1.0 if rep > att else -1.0
    if math.isinf(x):
        return sign
    return sign * (x - rep) / (x - att)


def _product_trace(a: MoebiusElement, b: MoebiusElement) -> float:
    # both factors carry their nonnegative-trace representatives
    return a.a * b.a + a.b * b.c + a.c * b.b + a.d * b.d


def product_jump_closed_form(a: MoebiusElement, b: MoebiusElement) -> int:
    """``level(AB) - level(A) - level(B)`` from the explicit inequalities.

    Covers hyperbolic times hyperbolic (no shared fixed points), hyperbolic
    times positive parabolic, and positive parabolic times positive parabolic.
    Quantities are read off in the frame where ``A`` is ``z -> lambda z``
    (attracting point at infinity) or ``z -> z + lambda``.
    """
    ia, ib = element_info(a), element_info(b)
    kinds = (ia.kind, ib.kind)
    hyp, par = ElementKind.HYPERBOLIC, ElementKind.PARABOLIC
    if kinds not in ((hyp, hyp), (hyp, par), (par, par)):
        raise NotCovered(f"no closed form for {ia.kind.value} times {ib.kind.value}")
    if set(ia.fixed_points) & set(ib.fixed_points):
        raise SharedFixedPoint("factors share a fixed point")
    if kinds == (hyp, hyp):
        lam1, lam2 = ia.shift, ib.shift
        alpha = _normal_coordinate(ia.attracting, ia.repelling, ib.attracting)
        beta = _normal_coordinate(ia.attracting, ia.repelling, ib.repelling)
        thr = (lam1 + lam2) / (1 + lam1 * lam2)
        if 0 < thr * beta < alpha < beta:
            return 1
        if beta < alpha <= thr * beta < 0:
            return -1
        return 0
    if not ib.positive:
        raise NotCovered("closed form needs a positive parabolic second factor")
    tr = _product_trace(a, b)
    if kinds == (hyp, par):
        lam1 = ia.shift
        alpha = _normal_coordinate(ia.attracting, ia.repelling, ib.fixed_points[0])
        if not alpha > 0:
            raise NotCovered("parabolic fixed point lies on the wrong side of the axis")
        r = math.sqrt(lam1)
        # trace of diag(r, 1/r) times the parabolic with shift lam2 at alpha
        lam2_alpha = (r + 1 / r - tr) / (r - 1 / r)
        return 0 if lam2_alpha <= (lam1 + 1) / (lam1 - 1) else 1
    if not ia.positive:
        raise NotCovered("closed form needs positive parabolic factors")
    # for z -> z + lam1 and the parabolic at 1 with shift lam2, tr(AB) = 2 - lam1 lam2
    return 0 if 2 - tr <= 2 else 1


def _circle_angle(x: float) -> float:
    return math.pi if math.isinf(x) else 2 * math.atan(x)


def axes_intersect(a: MoebiusElement, b: MoebiusElement) -> bool:
    """Whether the axes of two hyperbolic elements cross."""
    ia, ib = element_info(a), element_info(b)
    if ia.kind is not ElementKind.HYPERBOLIC or ib.kind is not ElementKind.HYPERBOLIC:
        raise ValueError("axes_intersect needs two hyperbolic elements")
    pa = sorted(_circle_angle(x) for x in ia.fixed_points)
    pb = [_circle_angle(x) for x in ib.fixed_points]
    for x in pb:
        if any(abs(x - y) < 1e-12 for y in pa):
            raise SharedFixedPoint("elements share a fixed point")
    inside = sum(pa[0] < x < pa[1] for x in pb)
    return inside == 1
