"""Orbits of the twist action and the component census."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from .arf import Twist, apply_twist_flat, enumerate_flat, twist_generators
from .core import ArfBasisValues, ArfType, SurfaceSignature, arf_count, require_valid
from .errors import StateSpaceTooLarge
from .invariants import enumerate_realizable_types, type_of

DEFAULT_CAP = 10**7


def _check_cap(sig: SurfaceSignature, m: int, cap: int) -> int:
    size = arf_count(sig, m)
    if size > cap:
        raise StateSpaceTooLarge(f"{size} states for {sig}, m={m} exceeds cap {cap}")
    return size


def _bfs(start: tuple, gens: Sequence[Twist], sig: SurfaceSignature, m: int) -> set:
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for t in gens:
            w = apply_twist_flat(v, t, sig, m)
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return seen


def orbit_of(
    arf: ArfBasisValues,
    *,
    cap: int = DEFAULT_CAP,
    generators: Sequence[Twist] | None = None,
) -> set[ArfBasisValues]:
    """Closure of ``{arf}`` under the twist generators."""
    _check_cap(arf.sig, arf.m, cap)
    gens = twist_generators(arf.sig, arf.m) if generators is None else list(generators)
    flats = _bfs(arf.flat, gens, arf.sig, arf.m)
    return {ArfBasisValues.from_flat(arf.m, arf.sig, f) for f in flats}


def canonical_representative(orbit) -> ArfBasisValues:
    return min(orbit, key=lambda v: v.flat)


@dataclass(frozen=True)
class OrbitRecord:
    type: ArfType
    size: int
    representative: tuple[int, ...]  # flat values, lexicographically least


@dataclass
class CensusReport:
    sig: SurfaceSignature
    m: int
    orbits: list[OrbitRecord]
    partition: bool
    soundness: bool
    completeness: bool
    diagnostics: list[str] = field(default_factory=list)

    @property
    def total(self) -> int:
        return sum(o.size for o in self.orbits)

    @property
    def ok(self) -> bool:
        return self.partition and self.soundness and self.completeness


def component_census(
    sig: SurfaceSignature,
    m: int,
    *,
    cap: int = DEFAULT_CAP,
    generators: Sequence[Twist] | None = None,
) -> CensusReport:
    """Partition all m-Arf functions on ``sig`` into orbits and label them."""
    require_valid(sig)
    expected = _check_cap(sig, m, cap)
    gens = twist_generators(sig, m) if generators is None else list(generators)
    owner: dict[tuple, int] = {}
    orbit_sets: list[set] = []
    diagnostics: list[str] = []
    soundness = True
    for flat in enumerate_flat(m, sig):
        if flat in owner:
            continue
        members = _bfs(flat, gens, sig, m)
        idx = len(orbit_sets)
        for f in members:
            owner[f] = idx
        orbit_sets.append(members)
    records: list[OrbitRecord] = []
    for members in orbit_sets:
        rep = min(members)  # enumeration order is lexicographic, so this is canonical
        types = {type_of(ArfBasisValues.from_flat(m, sig, f)) for f in members}
        if len(types) != 1:
            soundness = False
            diagnostics.append(
                f"orbit of {list(rep)} mixes {len(types)} types: "
                + "; ".join(str(t.as_tuple()) for t in sorted(types))
            )
        ty = type_of(ArfBasisValues.from_flat(m, sig, rep))
        records.append(OrbitRecord(ty, len(members), rep))
    records.sort(key=lambda r: r.representative)

    partition = sum(r.size for r in records) == expected == len(owner)
    if not partition:
        diagnostics.append(f"orbit sizes sum to {sum(r.size for r in records)}, expected {expected}")

    seen: dict[ArfType, tuple] = {}
    injective = True
    for r in records:
        if r.type in seen:
            injective = False
            diagnostics.append(
                f"type {r.type.as_tuple()} splits into several orbits, e.g. "
                f"{list(seen[r.type])} and {list(r.representative)}"
            )
        else:
            seen[r.type] = r.representative
    realizable = set(enumerate_realizable_types(sig, m))
    image = set(seen)
    for ty in sorted(realizable - image):
        diagnostics.append(f"realizable type {ty.as_tuple()} has no orbit")
    for ty in sorted(image - realizable):
        diagnostics.append(f"orbit type {ty.as_tuple()} fails the realizability test")
    completeness = injective and image == realizable
    return CensusReport(sig, m, records, partition, soundness, completeness, diagnostics)


class ClassificationVerdict(NamedTuple):
    ok: bool
    diagnostics: list[str]


def verify_classification(
    sig: SurfaceSignature,
    m: int,
    *,
    cap: int = DEFAULT_CAP,
    generators: Sequence[Twist] | None = None,
) -> ClassificationVerdict:
    report = component_census(sig, m, cap=cap, generators=generators)
    return ClassificationVerdict(report.ok, report.diagnostics)


DEFAULT_GRID = (
    SurfaceSignature(0, 0, 3),
    SurfaceSignature(0, 1, 2),
    SurfaceSignature(0, 2, 1),
    SurfaceSignature(0, 3, 0),
    SurfaceSignature(1, 1, 0),
    SurfaceSignature(1, 0, 1),
    SurfaceSignature(1, 1, 1),
    SurfaceSignature(2, 0, 0),
    SurfaceSignature(2, 1, 0),
    SurfaceSignature(2, 0, 1),
)
DEFAULT_MODULI = (2, 3, 4)
