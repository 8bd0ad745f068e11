"""Command-line interface.

Exit codes: 0 success, 1 negative result (invalid code, no code found,
table mismatch), 2 bad usage or unreadable input.
"""

from __future__ import annotations

import argparse
import json
import logging
import secrets
import sys
from pathlib import Path

from . import mcode
from .code import min_stabilizer_weight, validate
from .constructions import extend_by_pair, hamming_majorana, map_qubit_code, read_pauli_file
from .distance import brute_force_distance
from .search import WalkParams, run_campaign
from .tables import nd_upper_bound_d4, reproduce_table, upper_bound_d4

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(args, text: str, payload: dict) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _load(path: str, check: bool = True):
    try:
        return mcode.load(path, check=check)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except mcode.McodeParseError as exc:
        raise UsageError(str(exc)) from None


def cmd_verify(args) -> int:
    code = _load(args.path, check=False)
    report = validate(code)
    payload = {"path": args.path, "nmaj": code.nmaj, "nstab": code.nstab, "k": code.k, "valid": report.ok}
    if not report.ok:
        payload["violations"] = report.violations
        lines = [f"N={code.nmaj}: invalid code"] + [f"  violation: {v}" for v in report.violations]
        _emit(args, "\n".join(lines), payload)
        return EXIT_NEGATIVE
    dist = brute_force_distance(code, wmax=args.max_weight)
    minw = min_stabilizer_weight(code)
    degenerate = dist.kind == "exact" and minw < dist.value
    degen_text = f"degenerate(min stabilizer weight {minw})" if degenerate else "non-degenerate"
    payload.update(
        distance=str(dist),
        distance_kind=dist.kind,
        distance_value=dist.value,
        min_stabilizer_weight=minw,
        degenerate=degenerate,
    )
    lines = [f"N={code.nmaj} N_stab={code.nstab} K={code.k} distance={dist} {degen_text}"]
    if dist.kind == "exact" and dist.value == 4:
        bound = upper_bound_d4(code.nmaj) if degenerate else nd_upper_bound_d4(code.nmaj)
        kind = "d=4 bound" if degenerate else "non-degenerate d=4 bound"
        payload["bound"] = {"kind": kind, "value": bound, "satisfied": code.k <= bound}
        rel = "<=" if code.k <= bound else ">"
        lines.append(f"bound: K={code.k} {rel} {bound} ({kind})")
    _emit(args, "\n".join(lines), payload)
    return EXIT_OK


def _print_code(code, comment: str) -> int:
    sys.stdout.write(mcode.dumps(code, comment))
    return EXIT_OK


def cmd_hamming(args) -> int:
    if args.m < 3:
        raise UsageError(f"m must be >= 3, got {args.m}")
    return _print_code(hamming_majorana(args.m), f"Hamming Majorana code, m={args.m}")


def cmd_map_qubit(args) -> int:
    try:
        paulis = read_pauli_file(args.path)
        code = map_qubit_code(paulis, nqub=args.nqub)
    except OSError as exc:
        raise UsageError(f"cannot read {args.path}: {exc.strerror}") from None
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return _print_code(code, f"mapped from qubit code {Path(args.path).name}")


def cmd_extend(args) -> int:
    return _print_code(extend_by_pair(_load(args.path)), f"{Path(args.path).name} extended by one mode pair")


def _parse_count(text: str) -> int:
    try:
        value = float(text) if any(ch in text for ch in "eE.") else int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if value != int(value) or value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return int(value)


def cmd_search(args) -> int:
    seed = args.seed
    if seed is None:
        seed = secrets.randbits(64)
        print(f"master seed: {seed}", file=sys.stderr)
    try:
        params = WalkParams(args.nmaj, args.nstab, args.distance, args.steps)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    report = run_campaign(params, args.runs, seed, threads=args.threads, stop_early=args.stop_early)
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        (out / "report.json").write_text(report.to_json())
        for i, code in report.found_codes():
            comment = f"found by run {i} (seed {report.outcomes[i].seed}), target d={params.target_distance}"
            mcode.dump(code, out / f"run{i:04d}.mcode", comment)
    if args.json:
        sys.stdout.write(report.to_json())
    else:
        print(
            f"nmaj={params.nmaj} nstab={params.nstab} d={params.target_distance}: "
            f"{report.successes}/{len(report.outcomes)} runs found a code "
            f"({report.total_steps} steps, master seed {seed})"
        )
    print(f"wall time {report.wall_time:.2f}s", file=sys.stderr)
    return EXIT_OK if report.successes else EXIT_NEGATIVE


def cmd_reproduce(args) -> int:
    try:
        rows = reproduce_table(args.table)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    if args.json:
        print(json.dumps(
            [
                {"row": r.label, "expected": list(r.expected),
                 "computed": None if r.computed is None else list(r.computed), "ok": r.ok, "note": r.note}
                for r in rows
            ],
            indent=2,
        ))
    else:
        print(f"Table {args.table.upper()}")
        for r in rows:
            if r.computed is None:
                print(f"  {r.label:<12} {r.expected}  [{r.note}]")
            elif r.ok:
                print(f"  {r.label:<12} {r.computed}  ok  ({r.note})")
            else:
                print(f"  {r.label:<12} MISMATCH expected {r.expected} computed {r.computed}  ({r.note})")
    return EXIT_OK if all(r.ok for r in rows) else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="majorana-codes", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="validate an .mcode file and measure its distance")
    p.add_argument("path")
    p.add_argument("--max-weight", type=int, default=8)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("hamming", help="print the Hamming Majorana code on 2^m modes")
    p.add_argument("m", type=int)
    p.set_defaults(func=cmd_hamming)

    p = sub.add_parser("map-qubit", help="map a qubit stabilizer code (Pauli strings file) to Majoranas")
    p.add_argument("path")
    p.add_argument("--nqub", type=int, help="qubit count, needed only for an empty file")
    p.set_defaults(func=cmd_map_qubit)

    p = sub.add_parser("extend", help="add two modes carrying a weight-2 stabilizer")
    p.add_argument("path")
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("search", help="run a random-walk search campaign")
    p.add_argument("--nmaj", type=int, required=True)
    p.add_argument("--nstab", type=int, required=True)
    p.add_argument("--distance", type=int, choices=(4, 6), default=4)
    p.add_argument("--runs", type=_parse_count, default=1)
    p.add_argument("--steps", type=_parse_count, default=10**6)
    p.add_argument("--seed", type=int, help="master seed (drawn from entropy and printed if omitted)")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--stop-early", action="store_true", help="stop after the first successful run")
    p.add_argument("--out", help="directory for report.json and found .mcode files")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("reproduce", help="recompute a published table (1, 2, 3, A or B)")
    p.add_argument("table")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_reproduce)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if not hasattr(args, "json"):
        args.json = False
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
