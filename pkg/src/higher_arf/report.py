"""JSON and CSV forms of census reports.

The CSV form carries one row per orbit. Reading it back recomputes the three
checks from the representatives, so JSON -> CSV -> JSON is lossless.
"""

from __future__ import annotations

import csv
import io
import json
from collections import defaultdict
from typing import Iterable

from .core import ArfBasisValues, ArfType, SurfaceSignature, arf_count
from .invariants import enumerate_realizable_types, type_of
from .orbits import CensusReport, OrbitRecord, orbit_of


def signature_dict(sig: SurfaceSignature) -> dict:
    return {"g": sig.g, "l_h": sig.l_h, "l_p": sig.l_p}


def report_to_dict(report: CensusReport) -> dict:
    return {
        "signature": signature_dict(report.sig),
        "m": report.m,
        "total": report.total,
        "orbits": [
            {"type": o.type.as_dict(), "size": o.size, "representative": list(o.representative)}
            for o in report.orbits
        ],
        "checks": {
            "partition": report.partition,
            "soundness": report.soundness,
            "completeness": report.completeness,
        },
    }


def report_from_dict(data: dict) -> CensusReport:
    sig = SurfaceSignature(**data["signature"])
    orbits = [
        OrbitRecord(
            ArfType(o["type"]["g"], o["type"]["delta"], tuple(o["type"]["n_h"]), tuple(o["type"]["n_p"])),
            o["size"],
            tuple(o["representative"]),
        )
        for o in data["orbits"]
    ]
    checks = data["checks"]
    return CensusReport(sig, data["m"], orbits, checks["partition"], checks["soundness"], checks["completeness"])


def csv_header(m: int) -> list[str]:
    return (
        ["g", "l_h", "l_p", "m", "delta"]
        + [f"n_h{j}" for j in range(m)]
        + [f"n_p{j}" for j in range(m)]
        + ["size", "representative"]
    )


def _dump_json(data) -> str:
    return json.dumps(data, indent=2) + "\n"


def _dump_csv(header: list[str], rows: Iterable[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def emit_reports(reports: list[CensusReport], fmt: str = "json") -> str:
    """Serialise census reports. CSV output needs a single modulus."""
    if fmt == "json":
        return _dump_json([report_to_dict(r) for r in reports])
    if fmt != "csv":
        raise ValueError(f"unknown format {fmt!r}")
    moduli = {r.m for r in reports}
    if len(moduli) > 1:
        raise ValueError("CSV census output needs a single modulus (column count depends on m)")
    m = moduli.pop() if moduli else 2
    rows = []
    for r in reports:
        for o in r.orbits:
            rows.append(
                [r.sig.g, r.sig.l_h, r.sig.l_p, r.m, o.type.delta, *o.type.n_h, *o.type.n_p, o.size]
                + [" ".join(map(str, o.representative))]
            )
    return _dump_csv(csv_header(m), rows)


def emit_report(report: CensusReport, fmt: str = "json") -> str:
    if fmt == "json":
        return _dump_json(report_to_dict(report))
    return emit_reports([report], fmt)


def recompute_checks(sig: SurfaceSignature, m: int, orbits: list[OrbitRecord]) -> CensusReport:
    """Rebuild a report from orbit rows by re-deriving its checks."""
    partition = sum(o.size for o in orbits) == arf_count(sig, m)
    soundness = True
    covered: set = set()
    for o in orbits:
        members = orbit_of(ArfBasisValues.from_flat(m, sig, o.representative))
        flats = {v.flat for v in members}
        if len(members) != o.size or flats & covered or {type_of(v) for v in members} != {o.type}:
            soundness = False
        covered |= flats
    types = [o.type for o in orbits]
    completeness = len(set(types)) == len(types) and set(types) == set(enumerate_realizable_types(sig, m))
    return CensusReport(sig, m, list(orbits), partition, soundness, completeness)


def reports_from_csv(text: str, empty: tuple[SurfaceSignature, int] | None = None) -> list[CensusReport]:
    """Parse CSV census rows, grouped by (signature, m) in order of appearance.

    A CSV with no rows cannot name its signature; pass ``empty`` for that case.
    """
    reader = csv.DictReader(io.StringIO(text))
    groups: dict[tuple, list[OrbitRecord]] = defaultdict(list)
    for row in reader:
        sig = SurfaceSignature(int(row["g"]), int(row["l_h"]), int(row["l_p"]))
        m = int(row["m"])
        ty = ArfType(
            sig.g,
            int(row["delta"]),
            tuple(int(row[f"n_h{j}"]) for j in range(m)),
            tuple(int(row[f"n_p{j}"]) for j in range(m)),
        )
        rep = tuple(int(x) for x in row["representative"].split())
        groups[(sig, m)].append(OrbitRecord(ty, int(row["size"]), rep))
    if not groups and empty is not None:
        groups[empty] = []
    return [recompute_checks(sig, m, orbits) for (sig, m), orbits in groups.items()]


def reports_from_json(text: str) -> list[CensusReport]:
    data = json.loads(text)
    if isinstance(data, dict):
        data = [data]
    return [report_from_dict(d) for d in data]
