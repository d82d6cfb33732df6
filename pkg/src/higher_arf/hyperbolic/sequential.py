"""Sequential sets of generators and the lift criterion for their relator.

Elements are ordered ``(A_1, B_1, ..., A_g, B_g, C_1, ..., C_k)`` with
``k = l_h + l_p``. Hole and puncture generators are matched by count (hyperbolic
and parabolic respectively), not by position.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from typing import Sequence

from ..core import SurfaceSignature, require_valid
from ..errors import (
    DegenerateElement,
    LiftCheckMismatch,
    OrientationSearchFailed,
    OutOfValidityRegion,
    RelatorNotIdentity,
    WindingNotIntegral,
)
from .lifting import TWO_PI, LiftedElement, lift, lifted_inverse, lifted_product
from .moebius import (
    INF,
    IDENTITY_TOL,
    ElementKind,
    MoebiusElement,
    compose,
    conjugate,
    element_info,
    element_kind,
    inverse,
    make_hyperbolic,
    make_parabolic,
)

WINDING_TOL = 0.01


def product(elements: Sequence[MoebiusElement]) -> MoebiusElement:
    return reduce(compose, elements, MoebiusElement.identity())


def _finite_points(info) -> tuple[float, ...]:
    return tuple(x for x in info.fixed_points)


def _ordered_in_frame(triple, x: float) -> bool:
    """Positivity and ordering after sending ``x`` to infinity."""
    frame = MoebiusElement.identity() if math.isinf(x) else MoebiusElement.from_matrix(0.0, -1.0, 1.0, -x)
    spans = []
    for c in triple:
        info = element_info(conjugate(frame, c))
        pts = _finite_points(info)
        if not info.positive or any(math.isinf(p) for p in pts):
            return False
        spans.append((min(pts), max(pts)))
    return spans[0][1] < spans[1][0] and spans[1][1] < spans[2][0]


def _circle_angle(x: float) -> float:
    return math.pi if math.isinf(x) else 2 * math.atan(x)


def is_short_sequential(triple: Sequence[MoebiusElement]) -> bool:
    """Three hyperbolic or parabolic elements with product 1, positive and
    ordered left to right in some conjugate frame."""
    kinds = [element_kind(c) for c in triple]
    if any(k not in (ElementKind.HYPERBOLIC, ElementKind.PARABOLIC) for k in kinds):
        return False
    if product(triple).distance_to_identity() > IDENTITY_TOL:
        return False
    angles = sorted({_circle_angle(p) for c in triple for p in element_info(c).fixed_points})
    # every gap between consecutive fixed points is a candidate for infinity
    for lo, hi in zip(angles, angles[1:] + [angles[0] + 2 * math.pi]):
        mid = (lo + hi) / 2
        x = INF if abs(math.cos(mid / 2)) < 1e-15 else math.tan(mid / 2)
        if _ordered_in_frame(triple, x):
            return True
    return False


def _check_finite(elements: Sequence[MoebiusElement]) -> None:
    for e in elements:
        if not all(map(math.isfinite, e.entries)):
            raise DegenerateElement(f"non-finite element {e}")


def reduced_boundary_tuple(elements: Sequence[MoebiusElement], g: int) -> list[MoebiusElement]:
    """Replace each handle pair ``(A, B)`` by ``(A, B A^-1 B^-1)``."""
    out = []
    for i in range(g):
        a, b = elements[2 * i], elements[2 * i + 1]
        out += [a, compose(compose(b, inverse(a)), inverse(b))]
    return out + list(elements[2 * g :])


def is_sequential_set(elements: Sequence[MoebiusElement], sig: SurfaceSignature) -> bool:
    require_valid(sig)
    elements = list(elements)
    _check_finite(elements)
    if len(elements) != 2 * sig.g + sig.l_h + sig.l_p:
        return False
    kinds = [element_kind(e) for e in elements]
    if any(k is not ElementKind.HYPERBOLIC for k in kinds[: 2 * sig.g]):
        return False
    tail = kinds[2 * sig.g :]
    if tail.count(ElementKind.HYPERBOLIC) != sig.l_h or tail.count(ElementKind.PARABOLIC) != sig.l_p:
        return False
    cs = reduced_boundary_tuple(elements, sig.g)
    if product(cs).distance_to_identity() > IDENTITY_TOL:
        return False
    for j in range(1, len(cs) - 1):
        if not is_short_sequential((product(cs[:j]), cs[j], product(cs[j + 1 :]))):
            return False
    return True


def hyperbolic_pair_type(lam1: float, lam2: float, alpha: float, beta: float, tol: float = 1e-12):
    """Which rank-two family ``(z -> lam1 z, hyperbolic at (alpha, beta))``
    generates: ``(0, 3, 0)``, ``(0, 2, 1)``, or None if not sequential."""
    kappa = (math.sqrt(lam1) + math.sqrt(lam2)) / (1 + math.sqrt(lam1 * lam2))
    low = kappa * kappa * beta
    if not (0 < low and low - tol * beta <= alpha < beta):
        return None
    return (0, 2, 1) if abs(alpha - low) <= tol * beta else (0, 3, 0)


def hyperbolic_parabolic_pair_type(lam1: float, lam2: float, alpha: float, tol: float = 1e-12):
    """Same for ``(z -> lam1 z, parabolic at alpha with shift lam2)``."""
    r = math.sqrt(lam1)
    bound = (r + 1) / (r - 1)
    value = lam2 * alpha
    if value < bound * (1 - tol):
        return None
    return (0, 1, 2) if abs(value - bound) <= tol * bound else (0, 2, 1)


@dataclass(frozen=True)
class SequentialSet:
    sig: SurfaceSignature
    elements: tuple[MoebiusElement, ...]

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        if not is_sequential_set(self.elements, self.sig):
            raise OutOfValidityRegion(f"elements do not form a sequential set of type {self.sig}")

    @property
    def boundary_elements(self) -> tuple[MoebiusElement, ...]:
        return self.elements[2 * self.sig.g :]


BUILT_FAMILIES = (
    SurfaceSignature(0, 3, 0),
    SurfaceSignature(0, 2, 1),
    SurfaceSignature(0, 1, 2),
    SurfaceSignature(0, 0, 3),
    SurfaceSignature(1, 1, 0),
    SurfaceSignature(1, 0, 1),
)

DEFAULT_PARAMS = {
    (0, 3, 0): (4.0, 4.0, 0.8, 1.0),
    (0, 2, 1): (4.0, 4.0, 1.0),
    (0, 1, 2): (4.0, 1.0),
    (0, 0, 3): (1.0, 1.0),
    (1, 1, 0): (9.0,),
    (1, 0, 1): (),
}

PARABOLIC_COMMUTATOR_SHIFT = 3 + 2 * math.sqrt(2)


def _close(c1, c2) -> list[MoebiusElement]:
    return [c1, c2, inverse(compose(c1, c2))]


def _genus_one(lam: float, sig: SurfaceSignature) -> SequentialSet:
    a0, b0 = make_hyperbolic(INF, 0.0, lam), make_hyperbolic(-1.0, 1.0, lam)
    for a in (a0, inverse(a0)):
        for b in (b0, inverse(b0)):
            comm = compose(compose(a, b), compose(inverse(a), inverse(b)))
            elements = (a, b, inverse(comm))
            if is_sequential_set(elements, sig):
                return SequentialSet(sig, elements)
    raise OrientationSearchFailed(f"no orientation of the generators gives a sequential set at {lam}")


def build_sequential_set(sig: SurfaceSignature, params: Sequence[float] | None = None) -> SequentialSet:
    """One of the built-in families, checked before it is returned.

    Parameters per family:

    - ``(0,3,0)``: ``(lam1, lam2, alpha, beta)``
    - ``(0,2,1)``: ``(lam1, lam2, beta)``; alpha sits on the boundary case
    - ``(0,1,2)``: ``(lam1, alpha)``; the parabolic shift sits on the boundary case
    - ``(0,0,3)``: ``(lam1, alpha)``; ``z -> z + lam1`` and the parabolic at
      alpha with shift ``4 / lam1``
    - ``(1,1,0)``: ``(lam,)`` with ``lam > 3 + 2 sqrt 2``
    - ``(1,0,1)``: no parameters, ``lam = 3 + 2 sqrt 2``
    """
    key = sig.as_tuple()
    if key not in DEFAULT_PARAMS:
        raise OutOfValidityRegion(f"no built-in family for signature {sig}")
    p = tuple(DEFAULT_PARAMS[key] if params is None else params)
    if len(p) != len(DEFAULT_PARAMS[key]):
        raise OutOfValidityRegion(f"family {sig} takes {len(DEFAULT_PARAMS[key])} parameters, got {len(p)}")
    try:
        if key == (0, 3, 0):
            lam1, lam2, alpha, beta = p
            if not (lam1 > 1 and lam2 > 1 and hyperbolic_pair_type(lam1, lam2, alpha, beta, tol=0) == (0, 3, 0)):
                raise OutOfValidityRegion(f"parameters {p} violate the strict rank-two inequality")
            elements = _close(make_hyperbolic(INF, 0.0, lam1), make_hyperbolic(alpha, beta, lam2))
        elif key == (0, 2, 1):
            lam1, lam2, beta = p
            if not (lam1 > 1 and lam2 > 1 and beta > 0):
                raise OutOfValidityRegion(f"parameters {p} outside lam1, lam2 > 1, beta > 0")
            kappa = (math.sqrt(lam1) + math.sqrt(lam2)) / (1 + math.sqrt(lam1 * lam2))
            elements = _close(make_hyperbolic(INF, 0.0, lam1), make_hyperbolic(kappa**2 * beta, beta, lam2))
        elif key == (0, 1, 2):
            lam1, alpha = p
            if not (lam1 > 1 and alpha > 0):
                raise OutOfValidityRegion(f"parameters {p} outside lam1 > 1, alpha > 0")
            r = math.sqrt(lam1)
            lam2 = (r + 1) / ((r - 1) * alpha)
            elements = _close(make_hyperbolic(INF, 0.0, lam1), make_parabolic(alpha, lam2))
        elif key == (0, 0, 3):
            lam1, alpha = p
            if not (lam1 > 0 and math.isfinite(alpha)):
                raise OutOfValidityRegion(f"parameters {p} outside lam1 > 0")
            elements = _close(make_parabolic(INF, lam1), make_parabolic(alpha, 4 / lam1))
        elif key == (1, 1, 0):
            (lam,) = p
            if not lam > PARABOLIC_COMMUTATOR_SHIFT:
                raise OutOfValidityRegion(f"shift {lam} must exceed 3 + 2 sqrt 2")
            return _genus_one(lam, sig)
        else:
            return _genus_one(PARABOLIC_COMMUTATOR_SHIFT, sig)
    except (ValueError, ArithmeticError) as exc:
        if isinstance(exc, OutOfValidityRegion):
            raise
        raise OutOfValidityRegion(str(exc)) from exc
    return SequentialSet(sig, tuple(elements))


# lift criterion


def relator_lift(seq: SequentialSet, levels: Sequence[int]) -> LiftedElement:
    """Lift of ``prod [A_i, B_i] * prod C_i`` with the given generator levels."""
    elements = seq.elements
    if len(levels) != len(elements):
        raise ValueError(f"expected {len(elements)} levels, got {len(levels)}")
    lifts = [lift(e, int(k)) for e, k in zip(elements, levels)]
    word: list[LiftedElement] = []
    for i in range(seq.sig.g):
        a, b = lifts[2 * i], lifts[2 * i + 1]
        word += [a, b, lifted_inverse(a), lifted_inverse(b)]
    word += lifts[2 * seq.sig.g :]
    acc = lift(MoebiusElement.identity(), 0)
    for factor in word:
        acc = lifted_product(acc, factor)
    return acc


def relator_winding(seq: SequentialSet, levels: Sequence[int]) -> int:
    """Power of the central generator that the lifted relator equals."""
    acc = relator_lift(seq, levels)
    if acc.base.distance_to_identity() > IDENTITY_TOL:
        raise RelatorNotIdentity(f"relator evaluates to {acc.base}, not the identity")
    w = acc.lifted_argument / TWO_PI
    k = round(w)
    if abs(w - k) > WINDING_TOL:
        raise WindingNotIntegral(f"winding {w} is not an integer")
    return int(k)


def closed_form_winding(sig: SurfaceSignature, levels: Sequence[int]) -> int:
    """Winding predicted from the boundary levels alone."""
    boundary = levels[2 * sig.g :]
    return sum(int(k) for k in boundary) - ((2 - 2 * sig.g) - sig.boundary_count)


def check_lift_relation(seq: SequentialSet, levels: Sequence[int], m: int) -> bool:
    """Whether the lifted generators satisfy the relator in the m-fold cover."""
    w = relator_winding(seq, levels)
    expected = closed_form_winding(seq.sig, levels)
    if w != expected:
        raise LiftCheckMismatch(f"path lifting gives winding {w}, closed form gives {expected} (levels {list(levels)})")
    return w % m == 0
