"""PSL(2, R) elements, the standard one-parameter families, and
classification by trace.

Boundary points of the upper half-plane are floats, with ``math.inf`` for the
point at infinity. Elements are stored as unit-determinant matrices with a
nonnegative trace (ties at trace zero broken by making ``c``, then ``a``,
positive).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from ..errors import DegenerateElement, DegenerateParameters

INF = math.inf
TRACE_BAND = 1e-9
IDENTITY_TOL = 1e-8
ZERO_TRACE = 1e-12


@dataclass(frozen=True)
class MoebiusElement:
    a: float
    b: float
    c: float
    d: float

    @classmethod
    def from_matrix(cls, a, b, c, d) -> "MoebiusElement":
        """Normalise an invertible real matrix with positive determinant."""
        a, b, c, d = float(a), float(b), float(c), float(d)
        det = a * d - b * c
        if not all(map(math.isfinite, (a, b, c, d))) or not det > 0:
            raise DegenerateElement(f"matrix [[{a}, {b}], [{c}, {d}]] is not in GL+(2,R)")
        s = math.sqrt(det)
        a, b, c, d = a / s, b / s, c / s, d / s
        tr = a + d
        if abs(tr) <= ZERO_TRACE:  # rounding noise must not decide the sign
            flip = c < 0 or (c == 0 and a < 0)
        else:
            flip = tr < 0
        if flip:
            a, b, c, d = -a, -b, -c, -d
        return cls(a, b, c, d)

    @classmethod
    def identity(cls) -> "MoebiusElement":
        return cls(1.0, 0.0, 0.0, 1.0)

    @property
    def trace(self) -> float:
        return self.a + self.d

    @property
    def entries(self) -> tuple[float, float, float, float]:
        return (self.a, self.b, self.c, self.d)

    def as_array(self) -> np.ndarray:
        return np.array([[self.a, self.b], [self.c, self.d]])

    def __matmul__(self, other: "MoebiusElement") -> "MoebiusElement":
        return compose(self, other)

    def __call__(self, x: float) -> float:
        return act(self, x)

    def distance_to_identity(self) -> float:
        """Sup-norm distance to the identity, minimised over the sign."""
        e = self.entries
        plus = max(abs(e[0] - 1), abs(e[1]), abs(e[2]), abs(e[3] - 1))
        minus = max(abs(e[0] + 1), abs(e[1]), abs(e[2]), abs(e[3] + 1))
        return min(plus, minus)


def compose(g: MoebiusElement, h: MoebiusElement) -> MoebiusElement:
    return MoebiusElement.from_matrix(
        g.a * h.a + g.b * h.c,
        g.a * h.b + g.b * h.d,
        g.c * h.a + g.d * h.c,
        g.c * h.b + g.d * h.d,
    )


def inverse(g: MoebiusElement) -> MoebiusElement:
    return MoebiusElement.from_matrix(g.d, -g.b, -g.c, g.a)


def conjugate(by: MoebiusElement, g: MoebiusElement) -> MoebiusElement:
    """``by * g * by^-1``."""
    return compose(compose(by, g), inverse(by))


def commutator(g: MoebiusElement, h: MoebiusElement) -> MoebiusElement:
    """``[g, h] = g h g^-1 h^-1``."""
    return compose(compose(g, h), compose(inverse(g), inverse(h)))


def commutator_trace(g: MoebiusElement, h: MoebiusElement) -> float:
    """Trace of ``g h g^-1 h^-1`` in SL(2, R); the sign ambiguity cancels."""
    a, b, c, d = g.entries
    p, q, r, s = h.entries
    m = (a * p + b * r, a * q + b * s, c * p + d * r, c * q + d * s)
    n = (d * s + b * r, -d * q - b * p, -c * s - a * r, c * q + a * p)  # g^-1 h^-1
    return m[0] * n[0] + m[1] * n[2] + m[2] * n[1] + m[3] * n[3]


def act(g: MoebiusElement, x: float) -> float:
    """Action on a boundary point."""
    a, b, c, d = g.entries
    if math.isinf(x):
        return INF if c == 0 else a / c
    den = c * x + d
    if den == 0:
        return INF
    return (a * x + b) / den


def make_hyperbolic(alpha: float, beta: float, lam: float) -> MoebiusElement:
    """Hyperbolic element with fixed points ``alpha``, ``beta`` and shift ``lam``.

    For ``lam > 1`` the point ``alpha`` is attracting.
    """
    if not lam > 0 or lam == 1 or alpha == beta:
        raise DegenerateParameters(f"bad hyperbolic parameters ({alpha}, {beta}, {lam})")
    r = math.sqrt(lam)
    if math.isinf(alpha):
        return MoebiusElement.from_matrix(lam / r, -(lam - 1) * beta / r, 0.0, 1 / r)
    if math.isinf(beta):
        return MoebiusElement.from_matrix(1 / r, (lam - 1) * alpha / r, 0.0, lam / r)
    s = 1.0 / ((alpha - beta) * r)
    return MoebiusElement.from_matrix(
        s * (lam * alpha - beta),
        -s * (lam - 1) * alpha * beta,
        s * (lam - 1),
        s * (alpha - lam * beta),
    )


def make_parabolic(alpha: float, lam: float) -> MoebiusElement:
    """Parabolic element fixing ``alpha``; positive iff ``lam > 0``."""
    if lam == 0 or not math.isfinite(lam):
        raise DegenerateParameters(f"bad parabolic parameter {lam}")
    if math.isinf(alpha):
        return MoebiusElement.from_matrix(1.0, lam, 0.0, 1.0)
    return MoebiusElement.from_matrix(1 - lam * alpha, lam * alpha * alpha, -lam, 1 + lam * alpha)


def make_elliptic(x: complex, phi: float) -> MoebiusElement:
    """Rotation by ``phi`` counter-clockwise about ``x`` in the upper half-plane."""
    x = complex(x)
    if not x.imag > 0:
        raise DegenerateParameters(f"rotation centre {x} is not in the upper half-plane")
    h = phi / 2
    rot = MoebiusElement.from_matrix(math.cos(h), math.sin(h), -math.sin(h), math.cos(h))
    if x == 1j:
        return rot
    r = math.sqrt(x.imag)
    to_x = MoebiusElement.from_matrix(r, x.real / r, 0.0, 1 / r)  # z -> Im(x) z + Re(x)
    return conjugate(to_x, rot)


class ElementKind(str, Enum):
    IDENTITY = "identity"
    HYPERBOLIC = "hyperbolic"
    PARABOLIC = "parabolic"
    ELLIPTIC = "elliptic"


@dataclass(frozen=True)
class ElementInfo:
    kind: ElementKind
    fixed_points: tuple  # boundary floats; one complex point for elliptic
    shift: float | None  # lambda > 1 (hyperbolic) or translation parameter
    positive: bool | None  # None where the notion does not apply

    @property
    def attracting(self) -> float:
        return self.fixed_points[0]

    @property
    def repelling(self) -> float:
        return self.fixed_points[1]


def _point(x: float, y: float) -> float:
    """Boundary point with homogeneous coordinates ``(x : y)``."""
    if abs(y) <= 1e-15 * abs(x):
        return INF
    return x / y


def _eigen_point(g: MoebiusElement, mu: float) -> float:
    a, b, c, d = g.entries
    v1 = (b, mu - a)
    v2 = (mu - d, c)
    x, y = v1 if math.hypot(*v1) >= math.hypot(*v2) else v2
    return _point(x, y)


def element_kind(g: MoebiusElement) -> ElementKind:
    if g.distance_to_identity() <= IDENTITY_TOL:
        return ElementKind.IDENTITY
    tr = g.trace
    if abs(tr - 2) <= TRACE_BAND:
        return ElementKind.PARABOLIC
    return ElementKind.HYPERBOLIC if tr > 2 else ElementKind.ELLIPTIC


def element_info(g: MoebiusElement) -> ElementInfo:
    if not all(map(math.isfinite, g.entries)):
        raise DegenerateElement(f"non-finite element {g}")
    kind = element_kind(g)
    a, b, c, d = g.entries
    if kind is ElementKind.IDENTITY:
        return ElementInfo(kind, (), 1.0, None)
    if kind is ElementKind.PARABOLIC:
        p = _eigen_point(g, 1.0)
        lam = b if math.isinf(p) else -c
        return ElementInfo(kind, (p,), lam, lam > 0)
    tr = g.trace
    if kind is ElementKind.HYPERBOLIC:
        mu = (tr + math.sqrt(tr * tr - 4)) / 2
        att = _eigen_point(g, mu)
        rep = _eigen_point(g, 1 / mu)
        positive = att < rep if math.isfinite(att) and math.isfinite(rep) else None
        return ElementInfo(kind, (att, rep), mu * mu, positive)
    z = complex(a - d, math.copysign(math.sqrt(4 - tr * tr), c)) / (2 * c)
    return ElementInfo(kind, (z,), None, None)


def is_hyperbolic(g: MoebiusElement) -> bool:
    return element_kind(g) is ElementKind.HYPERBOLIC


def is_parabolic(g: MoebiusElement) -> bool:
    return element_kind(g) is ElementKind.PARABOLIC
