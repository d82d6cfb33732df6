"""Command-line front end.

Data goes to stdout (or ``--out``), diagnostics to stderr. Exit codes: 0 on
success, 1 when a verification verdict is false, 2 for usage or domain errors.
"""

from __future__ import annotations

import argparse
import itertools
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

from .arf import arf_from_flat, enumerate_flat
from .core import SurfaceSignature, arf_count, check_modulus
from .errors import ArfError, LiftCheckMismatch, OutOfValidityRegion
from .invariants import arf_invariant_delta, enumerate_realizable_types, normalize, type_of
from .orbits import DEFAULT_CAP, DEFAULT_GRID, DEFAULT_MODULI, component_census
from .report import _dump_csv, _dump_json, emit_reports, signature_dict

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


@dataclass
class CommandOutcome:
    exit_code: int
    payload: str = ""
    diagnostics: list[str] = field(default_factory=list)
    out: str | None = None


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _float_list(text: str) -> list[float]:
    try:
        return [float(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--m", type=_int_list, help="modulus or comma-separated moduli")
    common.add_argument("--genus", type=int)
    common.add_argument("--holes", type=int, default=0)
    common.add_argument("--punctures", type=int, default=0)
    common.add_argument("--grid", choices=["default"], help="use the built-in signature grid")
    common.add_argument("--format", choices=["json", "csv"], default="json")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="state-space size limit")
    common.add_argument("--out", help="write data here instead of stdout")

    parser = _Parser(prog="higher-arf", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("count", parents=[common], help="number of m-Arf functions")
    sub.add_parser("enumerate", parents=[common], help="list all m-Arf functions")
    sub.add_parser("types", parents=[common], help="realizable topological types")
    sub.add_parser("census", parents=[common], help="orbits of the twist action")
    p = sub.add_parser("verify", parents=[common], help="check orbits against types")
    p.add_argument("--jobs", type=int, default=1)
    for name, help_ in (("normalize", "normal form and twist word"), ("delta", "Arf invariant and type")):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("--values", type=_int_list, required=True, help="a1,b1,...,holes...,punctures...")
    p = sub.add_parser("verify-level-lemmas", parents=[common], help="closed form vs path lifting")
    p.add_argument("--samples", type=int, default=1000)
    p = sub.add_parser("check-sequential", parents=[common], help="test a built-in or given tuple")
    p.add_argument("--params", type=_float_list)
    p.add_argument("--elements", type=_float_list, help="a,b,c,d per element, flattened")
    p = sub.add_parser("check-lift", parents=[common], help="lift criterion for a built-in family")
    p.add_argument("--params", type=_float_list)
    p.add_argument("--levels", type=_int_list, help="one level per generator; omit to sweep [-m, m]")
    return parser


def _moduli(args, default=DEFAULT_MODULI) -> list[int]:
    ms = args.m if args.m else list(default)
    for m in ms:
        check_modulus(m)
    return ms


def _one_modulus(args) -> int:
    if not args.m or len(args.m) != 1:
        raise UsageError("this command needs exactly one modulus (--m N)")
    return check_modulus(args.m[0])


def _signature(args) -> SurfaceSignature:
    if args.genus is None:
        raise UsageError("--genus is required (or --grid default where supported)")
    return SurfaceSignature(args.genus, args.holes, args.punctures)


def _signatures(args) -> list[SurfaceSignature]:
    if args.grid == "default":
        return list(DEFAULT_GRID)
    return [_signature(args)]


def _sig_cells(sig: SurfaceSignature) -> list:
    return [sig.g, sig.l_h, sig.l_p]


# commands


def cmd_count(args) -> CommandOutcome:
    rows = [(sig, m, arf_count(sig, m)) for sig in _signatures(args) for m in _moduli(args)]
    if args.format == "csv":
        return CommandOutcome(EXIT_OK, _dump_csv(["g", "l_h", "l_p", "m", "count"], [_sig_cells(s) + [m, c] for s, m, c in rows]))
    return CommandOutcome(EXIT_OK, _dump_json([{"signature": signature_dict(s), "m": m, "count": c} for s, m, c in rows]))


def cmd_enumerate(args) -> CommandOutcome:
    sig, m = _signature(args), _one_modulus(args)
    size = arf_count(sig, m)
    if size > args.cap:
        raise UsageError(f"{size} functions exceed --cap {args.cap}")
    values = list(enumerate_flat(m, sig))
    if args.format == "csv":
        return CommandOutcome(EXIT_OK, _dump_csv(["values"], [[" ".join(map(str, v))] for v in values]))
    return CommandOutcome(EXIT_OK, _dump_json({"signature": signature_dict(sig), "m": m, "values": [list(v) for v in values]}))


def cmd_types(args) -> CommandOutcome:
    rows = [(sig, m, t) for sig in _signatures(args) for m in _moduli(args) for t in enumerate_realizable_types(sig, m)]
    if args.format == "csv":
        ms = {m for _, m, _ in rows} or set(_moduli(args))
        if len(ms) > 1:
            raise UsageError("CSV output needs a single modulus")
        m = ms.pop()
        header = ["g", "l_h", "l_p", "m", "delta"] + [f"n_h{j}" for j in range(m)] + [f"n_p{j}" for j in range(m)]
        body = [_sig_cells(s) + [m, t.delta, *t.n_h, *t.n_p] for s, m, t in rows]
        return CommandOutcome(EXIT_OK, _dump_csv(header, body))
    return CommandOutcome(
        EXIT_OK, _dump_json([{"signature": signature_dict(s), "m": m, "type": t.as_dict()} for s, m, t in rows])
    )


def _census_cell(job):
    sig, m, cap = job
    return component_census(sig, m, cap=cap)


def _run_cells(args, jobs: int = 1):
    cells = [(sig, m, args.cap) for sig in _signatures(args) for m in _moduli(args)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_census_cell, cells))  # map keeps grid order
    return [_census_cell(c) for c in cells]


def cmd_census(args) -> CommandOutcome:
    if args.format == "csv" and len(_moduli(args)) > 1:
        raise UsageError("CSV census output needs a single modulus")
    reports = _run_cells(args)
    diagnostics = [f"{r.sig} m={r.m}: {d}" for r in reports for d in r.diagnostics]
    code = EXIT_OK if all(r.ok for r in reports) else EXIT_FAIL
    return CommandOutcome(code, emit_reports(reports, args.format), diagnostics)


def cmd_verify(args) -> CommandOutcome:
    reports = _run_cells(args, args.jobs)
    cells = [
        {
            "signature": signature_dict(r.sig),
            "m": r.m,
            "total": r.total,
            "orbits": len(r.orbits),
            "checks": {"partition": r.partition, "soundness": r.soundness, "completeness": r.completeness},
            "ok": r.ok,
        }
        for r in reports
    ]
    ok = all(r.ok for r in reports)
    diagnostics = [f"{r.sig} m={r.m}: {d}" for r in reports for d in r.diagnostics]
    if args.format == "csv":
        header = ["g", "l_h", "l_p", "m", "total", "orbits", "partition", "soundness", "completeness", "ok"]
        body = [
            _sig_cells(r.sig) + [r.m, r.total, len(r.orbits), r.partition, r.soundness, r.completeness, r.ok]
            for r in reports
        ]
        payload = _dump_csv(header, body)
    else:
        payload = _dump_json({"ok": ok, "cells": cells})
    return CommandOutcome(EXIT_OK if ok else EXIT_FAIL, payload, diagnostics)


def cmd_normalize(args) -> CommandOutcome:
    sig, m = _signature(args), _one_modulus(args)
    arf = arf_from_flat(m, sig, args.values)
    nf, word = normalize(arf)
    record = {
        "signature": signature_dict(sig),
        "m": m,
        "input": list(arf.flat),
        "normal_form": list(nf.flat),
        "word": [str(t) for t in word],
        "type": type_of(arf).as_dict(),
    }
    if args.format == "csv":
        row = _sig_cells(sig) + [m, " ".join(map(str, arf.flat)), " ".join(map(str, nf.flat)), " ".join(record["word"])]
        return CommandOutcome(EXIT_OK, _dump_csv(["g", "l_h", "l_p", "m", "input", "normal_form", "word"], [row]))
    return CommandOutcome(EXIT_OK, _dump_json(record))


def cmd_delta(args) -> CommandOutcome:
    sig, m = _signature(args), _one_modulus(args)
    arf = arf_from_flat(m, sig, args.values)
    ty = type_of(arf)
    if args.format == "csv":
        row = _sig_cells(sig) + [m, " ".join(map(str, arf.flat)), arf_invariant_delta(arf)]
        return CommandOutcome(EXIT_OK, _dump_csv(["g", "l_h", "l_p", "m", "values", "delta"], [row]))
    return CommandOutcome(
        EXIT_OK,
        _dump_json({"signature": signature_dict(sig), "m": m, "values": list(arf.flat), "delta": ty.delta, "type": ty.as_dict()}),
    )


def cmd_level_lemmas(args) -> CommandOutcome:
    from .hyperbolic.sampling import verify_level_lemmas

    if args.samples < 1:
        raise UsageError("--samples must be positive")
    results = verify_level_lemmas(args.samples, args.seed)
    ok = all(r.ok for r in results)
    diagnostics = [f"{r.regime}: {len(r.mismatches)} mismatches, {r.chart_failures} chart failures" for r in results if not r.ok]
    if args.format == "csv":
        header = ["regime", "expected", "samples", "agree", "chart_failures"]
        body = [[r.regime, r.expected, r.samples, r.agree, r.chart_failures] for r in results]
        payload = _dump_csv(header, body)
    else:
        payload = _dump_json({"seed": args.seed, "ok": ok, "regimes": [r.as_dict() for r in results]})
    return CommandOutcome(EXIT_OK if ok else EXIT_FAIL, payload, diagnostics)


def _elements_from_flat(values: Sequence[float]):
    from .hyperbolic.moebius import MoebiusElement

    if len(values) % 4:
        raise UsageError("--elements needs four entries per element")
    return [MoebiusElement.from_matrix(*values[i : i + 4]) for i in range(0, len(values), 4)]


def cmd_check_sequential(args) -> CommandOutcome:
    from .hyperbolic.sequential import build_sequential_set, is_sequential_set

    sig = _signature(args)
    diagnostics = []
    if args.elements is not None:
        elements = _elements_from_flat(args.elements)
        ok = is_sequential_set(elements, sig)
    else:
        try:
            elements = list(build_sequential_set(sig, args.params).elements)
            ok = True
        except OutOfValidityRegion as exc:
            elements, ok = [], False
            diagnostics.append(str(exc))
    record = {"signature": signature_dict(sig), "sequential": ok, "elements": [list(e.entries) for e in elements]}
    if args.format == "csv":
        payload = _dump_csv(["g", "l_h", "l_p", "sequential"], [_sig_cells(sig) + [ok]])
    else:
        payload = _dump_json(record)
    return CommandOutcome(EXIT_OK if ok else EXIT_FAIL, payload, diagnostics)


def cmd_check_lift(args) -> CommandOutcome:
    from .hyperbolic.sequential import build_sequential_set, check_lift_relation, closed_form_winding

    sig = _signature(args)
    seq = build_sequential_set(sig, args.params)
    n = len(seq.elements)
    moduli = _moduli(args, default=(2, 3, 4, 6))
    rows, diagnostics, code = [], [], EXIT_OK
    for m in moduli:
        if args.levels is not None:
            if len(args.levels) != n:
                raise UsageError(f"family {sig} has {n} generators, got {len(args.levels)} levels")
            level_sets = [tuple(args.levels)]
        else:
            level_sets = itertools.product(range(-m, m + 1), repeat=n)
        for levels in level_sets:
            try:
                verdict = check_lift_relation(seq, levels, m)
            except LiftCheckMismatch as exc:
                diagnostics.append(str(exc))
                code, verdict = EXIT_FAIL, None
            rows.append((m, levels, verdict, closed_form_winding(sig, levels)))
    if args.format == "csv":
        body = [[m, " ".join(map(str, lv)), v, w] for m, lv, v, w in rows]
        payload = _dump_csv(["m", "levels", "lifts", "winding"], body)
    else:
        payload = _dump_json(
            {
                "signature": signature_dict(sig),
                "results": [{"m": m, "levels": list(lv), "lifts": v, "winding": w} for m, lv, v, w in rows],
            }
        )
    return CommandOutcome(code, payload, diagnostics)


COMMANDS = {
    "count": cmd_count,
    "enumerate": cmd_enumerate,
    "types": cmd_types,
    "census": cmd_census,
    "verify": cmd_verify,
    "normalize": cmd_normalize,
    "delta": cmd_delta,
    "verify-level-lemmas": cmd_level_lemmas,
    "check-sequential": cmd_check_sequential,
    "check-lift": cmd_check_lift,
}


def run(argv: Sequence[str]) -> CommandOutcome:
    try:
        args = build_parser().parse_args(list(argv))
        outcome = COMMANDS[args.command](args)
    except (UsageError, ArfError, ValueError) as exc:
        return CommandOutcome(EXIT_USAGE, "", [str(exc)])
    outcome.out = args.out
    return outcome


def main(argv: Sequence[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    if any(a in ("-h", "--help") for a in argv):
        build_parser().parse_args(list(argv))  # prints help and exits 0
    outcome = run(argv)
    if outcome.payload:
        if outcome.out:
            with open(outcome.out, "w", encoding="utf-8") as fh:
                fh.write(outcome.payload)
        else:
            sys.stdout.write(outcome.payload)
    for line in outcome.diagnostics:
        print(line, file=sys.stderr)
    return outcome.exit_code


if __name__ == "__main__":
    raise SystemExit(main())
