"""Command-line interface: validation, law sweeps, certificates, and the
grid oracle.  All payloads are JSON on standard output; rationals are
"p/q" strings.

Exit codes: 0 success, 1 law or verdict failure, 2 malformed input.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .base_space import check_pc_lpc
from .checks import (
    OracleLedger,
    SweepResult,
    counterexample_report,
    sweep_complement,
    sweep_indicator_compat,
    sweep_path_identities,
    sweep_psi_laws,
    sweep_retraction,
    sweep_retraction_on,
    sweep_round_trip,
    sweep_sigma_laws,
)
from .cylinder import psi_star, verify_psi_laws
from .functor import complement_report
from .fuzzy import FuzzySet, FuzzyTopology, GroundSet, fz_is_topology
from .rationals import frac
from .retraction import BoxWitness, verify_witness
from .sweeps import random_topology


@dataclass(frozen=True)
class RunConfig:
    topology_file: str = ""
    grid_step: Fraction = Fraction(1, 64)
    seed: int = 0
    sweep_count: int = 100

    def __post_init__(self):
        if self.grid_step.numerator != 1 or self.grid_step.denominator < 8:
            raise ValueError("grid step must be 1/k with k >= 8")


class InputError(Exception):
    """Malformed input file or arguments (exit code 2)."""


def _load_json(path: str) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _parse_family(doc: dict) -> tuple[GroundSet, list[str], list[FuzzySet]]:
    try:
        gs = GroundSet(tuple(doc["ground_set"]))
        names, opens = [], []
        for entry in doc["opens"]:
            names.append(entry["name"])
            opens.append(FuzzySet.from_dict(gs, entry["values"]))
        return gs, names, opens
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed topology file: {exc}") from exc


def _load_topology(path: str) -> FuzzyTopology:
    gs, names, opens = _parse_family(_load_json(path))
    try:
        return FuzzyTopology(gs, tuple(names), tuple(opens))
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _emit(doc) -> None:
    json.dump(doc, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _cmd_validate(args) -> int:
    _, _, opens = _parse_family(_load_json(args.topology))
    report = fz_is_topology(opens)
    _emit(report.to_json())
    return 0 if report.ok else 1


def _cmd_cylinder(args) -> int:
    topo = _load_topology(args.topology)
    names = [args.open] if args.open else list(topo.names)
    doc = {}
    for name in names:
        doc[name] = psi_star(topo.open_named(name)).to_json()
    _emit(doc)
    return 0


def _cmd_counterexample(args) -> int:
    elements = tuple(args.elements.split(",")) if args.elements else ("x",)
    report = counterexample_report(elements)
    _emit(report)
    return 0 if report["verdict"] == "unequal" else 1


def _cmd_connectivity(args) -> int:
    topo = _load_topology(args.topology)
    _emit(check_pc_lpc(topo).to_json())
    return 0


def _cmd_laws(args) -> int:
    rng = random.Random(args.seed)
    ledger = OracleLedger()
    results = [
        sweep_psi_laws(rng, args.sweeps, ledger),
        sweep_round_trip(rng, max(args.sweeps, 100), ledger),
        sweep_indicator_compat(ledger=ledger),
        sweep_sigma_laws(rng, max(args.sweeps // 10, 3), ledger),
    ]
    if args.topology:
        topo = _load_topology(args.topology)
        report = verify_psi_laws(topo)
        results.append(SweepResult("psi-laws-input", report.checked,
                                   list(report.failures)))
    _emit([r.to_json() for r in results])
    return 0 if all(r.ok for r in results) else 1


def _cmd_verify_retraction(args) -> int:
    if args.replay:
        topo = _load_topology(args.topology)
        doc = _load_json(args.replay)
        if not isinstance(doc, list):
            raise InputError("certificate file must hold a JSON array")
        try:
            witnesses = [BoxWitness.from_json(topo.ground, w) for w in doc]
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed certificate: {exc}") from exc
        verdicts = [verify_witness(w, topo) for w in witnesses]
        _emit({"replayed": len(verdicts), "ok": all(verdicts),
               "failures": [i for i, v in enumerate(verdicts) if not v]})
        return 0 if all(verdicts) else 1
    topo = _load_topology(args.topology)
    rng = random.Random(args.seed)
    result, witnesses = sweep_retraction_on(topo, rng, anchors=args.sweeps)
    if args.emit:
        Path(args.emit).write_text(json.dumps(
            [w.to_json() for w in witnesses], indent=2))
    _emit(result.to_json())
    return 0 if result.ok else 1


def _cmd_paths(args) -> int:
    rng = random.Random(args.seed)
    result = sweep_path_identities(rng, args.sweeps, args.grid_step)
    _emit(result.to_json())
    return 0 if result.ok else 1


def _cmd_decide_complement(args) -> int:
    topo = _load_topology(args.topology)
    try:
        F = topo.open_named(args.f)
        G = topo.open_named(args.g)
    except KeyError as exc:
        raise InputError(str(exc)) from exc
    report = complement_report(F, G)
    _emit(report.to_json())
    return 0 if report.inversion else 1


def _cmd_oracle(args) -> int:
    rng = random.Random(args.seed)
    ledger = OracleLedger()
    sweep_psi_laws(rng, max(args.sweeps // 4, 5), ledger)
    sweep_sigma_laws(rng, 3, ledger)
    sweep_retraction(rng, anchors=20, ledger=ledger)
    result = ledger.verify(args.resolution)
    _emit(result.to_json())
    return 0 if result.ok else 1


def _grid_step(text: str) -> Fraction:
    step = frac(text)
    if step.numerator != 1 or step.denominator < 8:
        raise argparse.ArgumentTypeError("grid step must be 1/k with k >= 8")
    return step


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fuzzcyl",
        description="Exact cylinder-space toolkit for finite fuzzy topologies")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, topology_required=True):
        if topology_required:
            p.add_argument("--topology", required=True,
                           help="JSON topology file")

    def sweep_flags(p):
        p.add_argument("--sweeps", type=int, default=100)
        p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("validate", help="check the topology axioms")
    common(p)
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("cylinder", help="dump membership-graph regions")
    common(p)
    p.add_argument("--open", help="restrict to one named open")
    p.set_defaults(func=_cmd_cylinder)

    p = sub.add_parser("counterexample",
                       help="set complement vs algebraic complement on the "
                            "constant-1/3 topology")
    p.add_argument("--elements", help="comma-separated ground elements")
    p.set_defaults(func=_cmd_counterexample)

    p = sub.add_parser("connectivity", help="base-space connectivity report")
    common(p)
    p.set_defaults(func=_cmd_connectivity)

    p = sub.add_parser("laws", help="algebraic law sweeps")
    p.add_argument("--topology", help="optionally also check this file")
    sweep_flags(p)
    p.set_defaults(func=_cmd_laws)

    p = sub.add_parser("verify-retraction",
                       help="generate or replay continuity certificates")
    common(p)
    sweep_flags(p)
    p.add_argument("--emit", help="write generated certificates to this file")
    p.add_argument("--replay", help="verify certificates from this file")
    p.set_defaults(func=_cmd_verify_retraction)

    p = sub.add_parser("paths", help="path-calculus identity sweeps")
    sweep_flags(p)
    p.add_argument("--grid-step", type=_grid_step, default=Fraction(1, 64))
    p.set_defaults(func=_cmd_paths)

    p = sub.add_parser("decide-complement",
                       help="complement-as-path-inversion decision")
    common(p)
    p.add_argument("--f", required=True, help="name of the first open")
    p.add_argument("--g", required=True, help="name of the second open")
    p.set_defaults(func=_cmd_decide_complement)

    p = sub.add_parser("oracle", help="grid cross-checks of symbolic results")
    sweep_flags(p)
    p.add_argument("--resolution", type=int, default=64)
    p.set_defaults(func=_cmd_oracle)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
