"""Value types shared by the combinatorial modules and the counting formulas.

Residues are always stored canonically in ``range(m)``. Handle values are
kept in two parallel tuples (``alpha[i]``, ``beta[i]`` for handle ``i``) and
boundary values are split into the hole block and the puncture block, since
homeomorphisms never mix the two.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    ClosedSurface,
    InvalidModulus,
    InvalidSignature,
    MismatchedSignature,
)


def check_modulus(m: int) -> int:
    if isinstance(m, bool) or not isinstance(m, int) or m < 2:
        raise InvalidModulus(f"modulus must be an integer >= 2, got {m!r}")
    return m


@dataclass(frozen=True)
class SurfaceSignature:
    """Genus ``g`` with ``l_h`` holes and ``l_p`` punctures."""

    g: int
    l_h: int = 0
    l_p: int = 0

    def __post_init__(self):
        for name in ("g", "l_h", "l_p"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int) or value < 0:
                raise InvalidSignature(f"{name} must be a nonnegative integer, got {value!r}")

    @property
    def n(self) -> int:
        return self.g + self.l_h + self.l_p

    @property
    def boundary_count(self) -> int:
        return self.l_h + self.l_p

    @property
    def is_closed(self) -> bool:
        return self.l_h + self.l_p == 0

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.g, self.l_h, self.l_p)

    def __str__(self):
        return f"({self.g},{self.l_h},{self.l_p})"


def validate_signature(sig: SurfaceSignature) -> bool:
    """True iff the signature describes a hyperbolic surface (negative Euler
    characteristic): ``2g + l_h + l_p > 2``, i.e. ``g >= 2`` when closed.

    The thrice-punctured sphere passes with a zero-dimensional Teichmueller
    space.
    """
    return 2 * sig.g + sig.l_h + sig.l_p > 2


def require_valid(sig: SurfaceSignature) -> None:
    if not validate_signature(sig):
        raise InvalidSignature(f"signature {sig} is not of hyperbolic type")


def teich_dimension(sig: SurfaceSignature) -> int:
    require_valid(sig)
    return 6 * sig.g + 3 * sig.l_h + 2 * sig.l_p - 6


def boundary_sum_target(sig: SurfaceSignature, m: int) -> int:
    """Residue that the boundary values of every m-Arf function must sum to."""
    check_modulus(m)
    if sig.is_closed:
        raise ClosedSurface(f"signature {sig} has no boundary components")
    return ((2 - 2 * sig.g) - sig.boundary_count) % m


def closed_admissible(sig: SurfaceSignature, m: int) -> bool:
    return (2 * sig.g - 2) % m == 0


def arf_count(sig: SurfaceSignature, m: int) -> int:
    check_modulus(m)
    require_valid(sig)
    if not sig.is_closed:
        return m ** (2 * sig.g + sig.boundary_count - 1)
    if closed_admissible(sig, m):
        return m ** (2 * sig.g)
    return 0


def _residues(values: Iterable[int], m: int) -> tuple[int, ...]:
    return tuple(int(v) % m for v in values)


@dataclass(frozen=True)
class ArfBasisValues:
    """Values of an m-Arf function on a standard basis.

    Build validated instances with :func:`higher_arf.arf.new_arf`; the
    constructor only canonicalises residues.
    """

    m: int
    sig: SurfaceSignature
    alpha: tuple[int, ...]
    beta: tuple[int, ...]
    holes: tuple[int, ...] = ()
    punctures: tuple[int, ...] = ()

    def __post_init__(self):
        m = self.m
        object.__setattr__(self, "alpha", _residues(self.alpha, m))
        object.__setattr__(self, "beta", _residues(self.beta, m))
        object.__setattr__(self, "holes", _residues(self.holes, m))
        object.__setattr__(self, "punctures", _residues(self.punctures, m))
        sig = self.sig
        if (len(self.alpha), len(self.beta), len(self.holes), len(self.punctures)) != (
            sig.g,
            sig.g,
            sig.l_h,
            sig.l_p,
        ):
            raise MismatchedSignature(f"value counts do not match signature {sig}")

    @property
    def gammas(self) -> tuple[int, ...]:
        return self.holes + self.punctures

    @property
    def handles(self) -> tuple[tuple[int, int], ...]:
        return tuple(zip(self.alpha, self.beta))

    @property
    def flat(self) -> tuple[int, ...]:
        """``(a1, b1, ..., ag, bg, holes..., punctures...)``, the ordering key."""
        out: list[int] = []
        for a, b in zip(self.alpha, self.beta):
            out += (a, b)
        return tuple(out) + self.holes + self.punctures

    @classmethod
    def from_flat(cls, m: int, sig: SurfaceSignature, values: Sequence[int]) -> "ArfBasisValues":
        if len(values) != 2 * sig.g + sig.boundary_count:
            raise MismatchedSignature(
                f"expected {2 * sig.g + sig.boundary_count} values for {sig}, got {len(values)}"
            )
        g, l_h = sig.g, sig.l_h
        return cls(
            m,
            sig,
            tuple(values[0 : 2 * g : 2]),
            tuple(values[1 : 2 * g : 2]),
            tuple(values[2 * g : 2 * g + l_h]),
            tuple(values[2 * g + l_h :]),
        )

    def __lt__(self, other: "ArfBasisValues") -> bool:
        return self.flat < other.flat


@dataclass(frozen=True, order=True)
class ArfType:
    """Topological type ``(g, delta, n_h[0..m-1], n_p[0..m-1])``."""

    g: int
    delta: int
    n_h: tuple[int, ...]
    n_p: tuple[int, ...]

    def as_tuple(self) -> tuple[int, ...]:
        return (self.g, self.delta) + self.n_h + self.n_p

    def as_dict(self) -> dict:
        return {"g": self.g, "delta": self.delta, "n_h": list(self.n_h), "n_p": list(self.n_p)}


@dataclass(frozen=True)
class LinearFunctional:
    """A Z_m-valued linear function on first homology, given on basis classes.

    ``boundary`` lists the values on the boundary classes (holes first, then
    punctures); they sum to zero because the boundary classes do.
    """

    m: int
    sig: SurfaceSignature
    a: tuple[int, ...]
    b: tuple[int, ...]
    boundary: tuple[int, ...] = ()

    def __post_init__(self):
        m = self.m
        object.__setattr__(self, "a", _residues(self.a, m))
        object.__setattr__(self, "b", _residues(self.b, m))
        object.__setattr__(self, "boundary", _residues(self.boundary, m))
        if (len(self.a), len(self.b), len(self.boundary)) != (
            self.sig.g,
            self.sig.g,
            self.sig.boundary_count,
        ):
            raise MismatchedSignature(f"functional shape does not match signature {self.sig}")
        if sum(self.boundary) % m:
            raise ValueError("boundary values of a linear functional must sum to 0 mod m")

    @classmethod
    def zero(cls, m: int, sig: SurfaceSignature) -> "LinearFunctional":
        return cls(m, sig, (0,) * sig.g, (0,) * sig.g, (0,) * sig.boundary_count)

    def is_zero(self) -> bool:
        return not any(self.a + self.b + self.boundary)
