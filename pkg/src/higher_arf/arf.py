"""Arf basis values: construction, enumeration, affine structure and the
induced action of Dehn twists.

Handles are indexed from 0 in code (handle ``i`` here is ``a_{i+1}, b_{i+1}``
in the usual notation). Boundary positions are indexed inside their block.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .core import (
    ArfBasisValues,
    LinearFunctional,
    SurfaceSignature,
    arf_count,
    boundary_sum_target,
    check_modulus,
    closed_admissible,
    require_valid,
)
from .errors import (
    ClosedSurfaceInadmissible,
    IndexOutOfRange,
    MismatchedSignature,
    SumConstraintViolated,
)

T1A = "T1a"
T1B = "T1b"
T2 = "T2"
T3 = "T3"
T4 = "T4"
T5A = "T5a"
T5B = "T5b"
HOLE_SWAP = "HoleSwap"
PUNCTURE_SWAP = "PunctureSwap"

KINDS = (T1A, T1B, T2, T3, T4, T5A, T5B, HOLE_SWAP, PUNCTURE_SWAP)
_SIGNED = {T1A, T1B, T2, T3, T5B}


@dataclass(frozen=True)
class Twist:
    """One generator of the induced action on basis values.

    ``i``/``j`` are handle indices (0-based); for the swaps ``i`` is the
    position of the left element of the adjacent transposition inside its
    block. ``T3`` acts on the last handle together with the first boundary
    component of ``block`` (``"holes"`` or ``"punctures"``; ``None`` means
    the first boundary component overall).
    """

    kind: str
    i: int = 0
    j: int = 0
    sign: int = 1
    block: str | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown twist kind {self.kind!r}")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.block not in (None, "holes", "punctures"):
            raise ValueError(f"unknown boundary block {self.block!r}")

    def __str__(self):
        sign = ("+" if self.sign > 0 else "-") if self.kind in _SIGNED else ""
        if self.kind in (T2, T4):
            return f"{self.kind}{sign}({self.i + 1},{self.j + 1})"
        if self.kind == T3:
            return f"{self.kind}{sign}[{self.block or 'first'}]"
        return f"{self.kind}{sign}({self.i + 1})"

    def to_dict(self) -> dict:
        out = {"kind": self.kind, "i": self.i}
        if self.kind in (T2, T4):
            out["j"] = self.j
        if self.kind in _SIGNED:
            out["sign"] = self.sign
        if self.kind == T3:
            out["block"] = self.block
        return out


TwistWord = tuple  # tuple[Twist, ...]


def new_arf(
    m: int,
    sig: SurfaceSignature,
    alpha: Sequence[int] = (),
    beta: Sequence[int] = (),
    holes: Sequence[int] = (),
    punctures: Sequence[int] = (),
) -> ArfBasisValues:
    """Validated basis values of an m-Arf function."""
    check_modulus(m)
    require_valid(sig)
    values = ArfBasisValues(m, sig, tuple(alpha), tuple(beta), tuple(holes), tuple(punctures))
    if sig.is_closed:
        if not closed_admissible(sig, m):
            raise ClosedSurfaceInadmissible(
                f"no {m}-Arf functions on closed genus {sig.g}: {m} does not divide {2 * sig.g - 2}"
            )
    else:
        target = boundary_sum_target(sig, m)
        got = sum(values.gammas) % m
        if got != target:
            raise SumConstraintViolated(
                f"boundary values sum to {got} mod {m}, expected {target}"
            )
    return values


def arf_from_flat(m: int, sig: SurfaceSignature, values: Sequence[int]) -> ArfBasisValues:
    v = ArfBasisValues.from_flat(m, sig, values)
    return new_arf(m, sig, v.alpha, v.beta, v.holes, v.punctures)


def enumerate_flat(m: int, sig: SurfaceSignature) -> Iterator[tuple[int, ...]]:
    """Flat value tuples of every m-Arf function, in lexicographic order."""
    check_modulus(m)
    require_valid(sig)
    if arf_count(sig, m) == 0:
        return
    free = 2 * sig.g + sig.boundary_count
    if sig.is_closed:
        yield from itertools.product(range(m), repeat=free)
        return
    target = boundary_sum_target(sig, m)
    head = 2 * sig.g
    for prefix in itertools.product(range(m), repeat=free - 1):
        yield prefix + ((target - sum(prefix[head:])) % m,)


def enumerate_arfs(m: int, sig: SurfaceSignature) -> Iterator[ArfBasisValues]:
    for flat in enumerate_flat(m, sig):
        yield ArfBasisValues.from_flat(m, sig, flat)


def twist_generators(sig: SurfaceSignature, m: int | None = None) -> list[Twist]:
    """Generators of the induced action, closed under inverses.

    ``T3`` is included once per nonempty boundary block: with adjacent
    swaps inside each block this reaches every boundary component.
    """
    require_valid(sig)
    g = sig.g
    gens: list[Twist] = []
    for i in range(g):
        for s in (1, -1):
            gens.append(Twist(T1A, i, sign=s))
            gens.append(Twist(T1B, i, sign=s))
    for i, j in itertools.combinations(range(g), 2):
        gens.append(Twist(T2, i, j, sign=1))
        gens.append(Twist(T2, i, j, sign=-1))
    if g >= 1:
        for block, count in (("holes", sig.l_h), ("punctures", sig.l_p)):
            if count:
                gens.append(Twist(T3, g - 1, sign=1, block=block))
                gens.append(Twist(T3, g - 1, sign=-1, block=block))
    for i, j in itertools.combinations(range(g), 2):
        gens.append(Twist(T4, i, j))
    for i in range(g):
        gens.append(Twist(T5A, i))
        gens.append(Twist(T5B, i, sign=1))
        gens.append(Twist(T5B, i, sign=-1))
    for k in range(sig.l_h - 1):
        gens.append(Twist(HOLE_SWAP, k))
    for k in range(sig.l_p - 1):
        gens.append(Twist(PUNCTURE_SWAP, k))
    return gens


def _t3_position(sig: SurfaceSignature, block: str | None) -> int:
    """Offset of the boundary value used by T3 in the flat tuple."""
    base = 2 * sig.g
    if block == "punctures" or (block is None and sig.l_h == 0):
        if sig.l_p == 0:
            raise IndexOutOfRange("T3 needs a puncture but the surface has none")
        return base + sig.l_h
    if sig.l_h == 0:
        raise IndexOutOfRange("T3 needs a hole but the surface has none")
    return base


def check_twist(sig: SurfaceSignature, twist: Twist) -> None:
    g = sig.g
    kind = twist.kind
    if kind in (T1A, T1B, T5A, T5B):
        ok = 0 <= twist.i < g
    elif kind in (T2, T4):
        ok = 0 <= twist.i < g and 0 <= twist.j < g and twist.i != twist.j
    elif kind == T3:
        ok = g >= 1 and twist.i == g - 1 and sig.boundary_count > 0
        if ok:
            _t3_position(sig, twist.block)
    elif kind == HOLE_SWAP:
        ok = 0 <= twist.i < sig.l_h - 1
    else:
        ok = 0 <= twist.i < sig.l_p - 1
    if not ok:
        raise IndexOutOfRange(f"twist {twist} is not defined on signature {sig}")


def apply_twist_flat(
    flat: tuple[int, ...], twist: Twist, sig: SurfaceSignature, m: int
) -> tuple[int, ...]:
    """Action on a flat value tuple; no validation (hot path for BFS)."""
    v = list(flat)
    kind, s = twist.kind, twist.sign
    ia, ib = 2 * twist.i, 2 * twist.i + 1
    if kind == T1A:
        v[ia] = (v[ia] + s * v[ib]) % m
    elif kind == T1B:
        v[ib] = (v[ib] + s * v[ia]) % m
    elif kind == T2:
        ja = 2 * twist.j
        ai, aj = v[ia], v[ja]
        v[ib] = (v[ib] - s * (aj + 1)) % m
        v[ja + 1] = (v[ja + 1] - s * (ai + 1)) % m
    elif kind == T3:
        gamma = v[_t3_position(sig, twist.block)]
        a, b = v[ia], v[ib]
        if s > 0:
            v[ia], v[ib] = (-b) % m, (a - gamma - 1) % m
        else:
            v[ia], v[ib] = (b + gamma + 1) % m, (-a) % m
    elif kind == T4:
        ja = 2 * twist.j
        v[ia], v[ib], v[ja], v[ja + 1] = v[ja], v[ja + 1], v[ia], v[ib]
    elif kind == T5A:
        v[ia], v[ib] = (-v[ia]) % m, (-v[ib]) % m
    elif kind == T5B:
        a, b = v[ia], v[ib]
        if s > 0:
            v[ia], v[ib] = (-b) % m, a
        else:
            v[ia], v[ib] = b, (-a) % m
    else:
        k = 2 * sig.g + twist.i + (sig.l_h if kind == PUNCTURE_SWAP else 0)
        v[k], v[k + 1] = v[k + 1], v[k]
    return tuple(v)


def apply_twist(arf: ArfBasisValues, twist: Twist) -> ArfBasisValues:
    check_twist(arf.sig, twist)
    return ArfBasisValues.from_flat(
        arf.m, arf.sig, apply_twist_flat(arf.flat, twist, arf.sig, arf.m)
    )


def apply_word(arf: ArfBasisValues, word: Iterable[Twist]) -> ArfBasisValues:
    """Apply twists left to right."""
    sig, m = arf.sig, arf.m
    flat = arf.flat
    for twist in word:
        check_twist(sig, twist)
        flat = apply_twist_flat(flat, twist, sig, m)
    return ArfBasisValues.from_flat(m, sig, flat)


def invert_twist(twist: Twist) -> Twist:
    if twist.kind in _SIGNED:
        return Twist(twist.kind, twist.i, twist.j, -twist.sign, twist.block)
    return twist  # T4, T5a and the swaps are involutions


def invert_word(word: Sequence[Twist]) -> TwistWord:
    return tuple(invert_twist(t) for t in reversed(word))


def _check_same(m: int, sig: SurfaceSignature, other_m: int, other_sig: SurfaceSignature):
    if m != other_m or sig != other_sig:
        raise MismatchedSignature(
            f"mismatched operands: m={m}, {sig} vs m={other_m}, {other_sig}"
        )


def add_functional(arf: ArfBasisValues, f: LinearFunctional) -> ArfBasisValues:
    """Shift basis values by a homology functional."""
    _check_same(arf.m, arf.sig, f.m, f.sig)
    m, l_h = arf.m, arf.sig.l_h
    return ArfBasisValues(
        m,
        arf.sig,
        tuple(x + y for x, y in zip(arf.alpha, f.a)),
        tuple(x + y for x, y in zip(arf.beta, f.b)),
        tuple(x + y for x, y in zip(arf.holes, f.boundary[:l_h])),
        tuple(x + y for x, y in zip(arf.punctures, f.boundary[l_h:])),
    )


def difference(arf1: ArfBasisValues, arf2: ArfBasisValues) -> LinearFunctional:
    """The functional ``f`` with ``add_functional(arf2, f) == arf1``."""
    _check_same(arf1.m, arf1.sig, arf2.m, arf2.sig)
    return LinearFunctional(
        arf1.m,
        arf1.sig,
        tuple(x - y for x, y in zip(arf1.alpha, arf2.alpha)),
        tuple(x - y for x, y in zip(arf1.beta, arf2.beta)),
        tuple(x - y for x, y in zip(arf1.gammas, arf2.gammas)),
    )


def enumerate_functionals(m: int, sig: SurfaceSignature) -> Iterator[LinearFunctional]:
    """All linear functionals on first homology (boundary values sum to 0)."""
    g, nb = sig.g, sig.boundary_count
    free_boundary = max(nb - 1, 0)
    for head in itertools.product(range(m), repeat=2 * g + free_boundary):
        bnd = head[2 * g :]
        if nb:
            bnd = bnd + ((-sum(bnd)) % m,)
        yield LinearFunctional(m, sig, head[0 : 2 * g : 2], head[1 : 2 * g : 2], bnd)
