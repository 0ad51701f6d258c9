"""Command-line interface.

Subcommands:

* ``check``      controllability + observability of the problem file
* ``synthesize`` emit per-attack observers (DOT + enablement tables)
* ``simulate``   bounded closed-loop languages and the exactness check
* ``oracle``     cross-check the efficient procedures against enumeration

Exit codes: 0 property holds, 1 property fails (witness printed),
2 input error, 3 unsupported combination.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from .attacks import InsertionRemovalAttack, is_finite_attack
from .automata import Word, check_controllability, enumerate_language
from .closedloop import default_simulation_depth, verify_closed_loop
from .dot import export_dot
from .errors import InputError, UnsupportedError
from .observability import (
    Witness,
    check_observability,
    default_enumeration_depth,
    observability_by_enumeration,
)
from .observer import (
    SupervisorBank,
    build_insertion_observer,
    build_observer,
    enabled_events,
    supervisor_by_enumeration,
)
from .problem import Problem, load_problem

EXIT_HOLDS = 0
EXIT_FAILS = 1
EXIT_INPUT = 2
EXIT_UNSUPPORTED = 3


def _fmt_word(w: Word) -> str:
    return ".".join(w) if w else "<empty>"


def _print_witness(problem: Problem, witness: Witness) -> None:
    attacks = problem.attacks
    print("witness:")
    print(f"  left word     : {_fmt_word(witness.left)}  (attack {attacks[witness.attack_left].name})")
    print(f"  right word    : {_fmt_word(witness.right)}  (attack {attacks[witness.attack_right].name})")
    print(f"  event         : {witness.event}")
    print(f"  left + event  : stays inside the specification")
    print(f"  right + event : allowed by the plant, outside the specification")


def _cmd_check(args: argparse.Namespace) -> int:
    problem = load_problem(args.problem)
    controllability = check_controllability(problem.plant, problem.spec)
    if not controllability.holds:
        w, ev = controllability.witness
        print("controllability: FAIL")
        print(f"  word {_fmt_word(w)} extended by uncontrollable event {ev!r} "
              "leaves the specification inside the plant")
        return EXIT_FAILS
    print("controllability: ok")
    verdict = check_observability(
        problem.plant, problem.spec, problem.pmap, problem.attacks,
        method=args.method, depth=args.depth,
    )
    print(f"observability ({verdict.method}): {'ok' if verdict.holds else 'FAIL'}")
    if verdict.holds:
        return EXIT_HOLDS
    _print_witness(problem, verdict.witness)
    return EXIT_FAILS


def _cmd_synthesize(args: argparse.Namespace) -> int:
    problem = load_problem(args.problem)
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    for attack in problem.attacks:
        if is_finite_attack(attack):
            observer = build_observer(problem.spec, attack, problem.pmap)
            note = ""
        else:
            assert isinstance(attack, InsertionRemovalAttack)
            observer = build_insertion_observer(problem.spec, attack, problem.pmap)
            note = "  (feed outputs with the attacked symbols stripped)"
        path = out_dir / f"observer_{attack.name}.dot"
        path.write_text(export_dot(observer), encoding="utf-8")
        print(f"observer {attack.name}: {len(observer.states)} states -> {path}{note}")
        for estimate in sorted(observer.states, key=sorted):
            enabled = enabled_events(problem.spec, estimate)
            label = "{" + ",".join(sorted(estimate)) + "}"
            print(f"  enable at {label}: {','.join(sorted(enabled))}")
    return EXIT_HOLDS


def _cmd_simulate(args: argparse.Namespace) -> int:
    problem = load_problem(args.problem)
    depth = args.depth if args.depth is not None else default_simulation_depth(problem.spec)
    report = verify_closed_loop(problem.plant, problem.spec, problem.pmap, problem.attacks, depth)
    reference = enumerate_language(problem.spec, depth)
    print(f"depth: {depth}   |specification| = {len(reference)}")
    print(f"controllability: {'ok' if report.controllability.holds else 'FAIL'}")
    print(f"observability ({report.observability.method}): "
          f"{'ok' if report.observability.holds else 'FAIL'}")
    for result in report.results:
        name = problem.attacks[result.attack_index].name
        print(f"attack {name}: |lower| = {len(result.lower)}  |upper| = {len(result.upper)}")
    if report.enforced and report.conditions_hold:
        print("closed loop matches the specification for every attack")
        return EXIT_HOLDS
    for disc in report.discrepancies[: args.max_report]:
        name = problem.attacks[disc.attack_index].name
        print(f"discrepancy: attack {name}, {disc.side} language, "
              f"{disc.kind} word {_fmt_word(disc.word)}")
    if not report.consistent:
        print("BUG: existence conditions hold but the closed loop differs")
    return EXIT_HOLDS if (report.enforced and report.conditions_hold) else EXIT_FAILS


def _cmd_oracle(args: argparse.Namespace) -> int:
    problem = load_problem(args.problem)
    plant, spec, pmap, attacks = problem.plant, problem.spec, problem.pmap, problem.attacks
    depth = (
        args.depth
        if args.depth is not None
        else default_enumeration_depth(plant, spec, cap=args.cap)
    )
    failures = 0

    brute = observability_by_enumeration(plant, spec, pmap, attacks, depth)
    try:
        fast = check_observability(plant, spec, pmap, attacks)
        agree = fast.holds == brute.holds
        print(f"observability: {fast.method}={fast.holds} enumeration={brute.holds} "
              f"{'ok' if agree else 'DISAGREE'}")
        failures += 0 if agree else 1
    except UnsupportedError:
        print(f"observability: enumeration only (mixed attack kinds) -> {brute.holds}")

    finite = [a for a in attacks if is_finite_attack(a)]
    if finite:
        bank = SupervisorBank.from_attacks(spec, tuple(finite), pmap)
        outputs = sorted(
            {y for attack in finite for w in enumerate_language(spec, min(depth, 5))
             for y in _finite_outputs(attack, pmap, w)},
            key=lambda y: (len(y), y),
        )
        mismatches = 0
        for y in outputs:
            got = bank.feed_word(y).decision()
            want = supervisor_by_enumeration(spec, pmap, tuple(finite), y, depth)
            if got != want:
                mismatches += 1
        print(f"supervisor decisions: {len(outputs)} outputs checked, "
              f"{mismatches} mismatches")
        failures += mismatches
    return EXIT_HOLDS if failures == 0 else EXIT_FAILS


def _finite_outputs(attack, pmap, w):
    from .attacks import corrupted_observations

    return corrupted_observations(attack, pmap, w)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="desguard",
        description="Supervisory control of discrete-event systems with a corrupted observation channel",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="check controllability and observability")
    p_check.add_argument("problem")
    p_check.add_argument("--depth", type=int, default=None,
                         help="word-length bound for the enumeration method")
    p_check.add_argument("--method", choices=["auto", "product", "reduction", "brute"],
                         default="auto")
    p_check.set_defaults(func=_cmd_check)

    p_syn = sub.add_parser("synthesize", help="emit per-attack observers and enablement tables")
    p_syn.add_argument("problem")
    p_syn.add_argument("--out", default="observers", help="output directory for DOT files")
    p_syn.set_defaults(func=_cmd_synthesize)

    p_sim = sub.add_parser("simulate", help="bounded closed-loop languages per attack")
    p_sim.add_argument("problem")
    p_sim.add_argument("--depth", type=int, default=None)
    p_sim.add_argument("--max-report", type=int, default=10,
                       help="maximum number of discrepancy lines to print")
    p_sim.set_defaults(func=_cmd_simulate)

    p_orc = sub.add_parser("oracle", help="cross-check efficient procedures against enumeration")
    p_orc.add_argument("problem")
    p_orc.add_argument("--depth", type=int, default=None)
    p_orc.add_argument("--cap", type=int, default=10,
                       help="cap on the default enumeration depth")
    p_orc.set_defaults(func=_cmd_oracle)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except UnsupportedError as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED


if __name__ == "__main__":
    raise SystemExit(main())
