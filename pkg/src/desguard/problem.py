"""Problem-file loading, validation, and serialization.

A problem file is a single JSON document (schema version 1) holding the
alphabet, the observation map, the plant and specification automata, and
a list of named attacks.  The empty output EPSILON is encoded as the JSON
string "".  The loader enforces every structural invariant and reports
violations with field-level locations.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Union

from .automata import Alphabet, Automaton, check_sublanguage
from .attacks import (
    EPSILON,
    Attack,
    AttackSet,
    IdentityAttack,
    InsertionRemovalAttack,
    ObservationMap,
    ReplacementRemovalAttack,
)
from .errors import InputError

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class Problem:
    """A fully validated verification problem."""

    plant: Automaton
    spec: Automaton
    pmap: ObservationMap
    attacks: AttackSet

    @property
    def alphabet(self) -> Alphabet:
        return self.spec.alphabet

    @property
    def output_alphabet(self) -> frozenset[str]:
        return self.pmap.output_alphabet

    def restrict(self, names: list[str]) -> "Problem":
        """The same problem with only the named attacks, in given order."""
        by_name = {attack.name: attack for attack in self.attacks}
        missing = [n for n in names if n not in by_name]
        if missing:
            raise InputError(f"unknown attack names: {missing}")
        return Problem(
            plant=self.plant,
            spec=self.spec,
            pmap=self.pmap,
            attacks=tuple(by_name[n] for n in names),
        )


def _expect(data: dict, key: str, kind, where: str):
    if key not in data:
        raise InputError(f"{where}: missing field {key!r}")
    value = data[key]
    if not isinstance(value, kind):
        raise InputError(f"{where}.{key}: expected {kind.__name__}")
    return value


def _parse_automaton(data: dict, alphabet: Alphabet, where: str) -> Automaton:
    states = _expect(data, "states", list, where)
    initial = _expect(data, "initial", str, where)
    rows = _expect(data, "transitions", list, where)
    transitions: dict[tuple[str, str], str] = {}
    for idx, row in enumerate(rows):
        if not (isinstance(row, list) and len(row) == 3 and all(isinstance(v, str) for v in row)):
            raise InputError(f"{where}.transitions[{idx}]: expected [source, event, target]")
        src, ev, dst = row
        if (src, ev) in transitions:
            raise InputError(f"{where}.transitions[{idx}]: duplicate transition on ({src!r}, {ev!r})")
        transitions[(src, ev)] = dst
    try:
        return Automaton(
            states=frozenset(states), alphabet=alphabet, transitions=transitions, initial=initial
        )
    except InputError as exc:
        raise InputError(f"{where}: {exc}") from None


def _parse_attack(data: dict, outputs: frozenset[str], index: int) -> Attack:
    where = f"attacks[{index}]"
    kind = _expect(data, "kind", str, where)
    name = data.get("name", f"attack-{index}")
    if not isinstance(name, str):
        raise InputError(f"{where}.name: expected string")
    if kind == "identity":
        return IdentityAttack(name=name)
    if kind == "replacement-removal":
        table = _expect(data, "phi", dict, where)
        unknown = set(table) - outputs
        if unknown:
            raise InputError(f"{where}.phi: unknown output symbols {sorted(unknown)}")
        missing = outputs - set(table)
        if missing:
            raise InputError(f"{where}.phi: no entry for output symbols {sorted(missing)}")
        phi: dict[str, frozenset[str]] = {}
        for symbol, options in table.items():
            if not isinstance(options, list) or not all(isinstance(t, str) for t in options):
                raise InputError(f"{where}.phi.{symbol}: expected a list of symbols")
            if not options:
                raise InputError(f"{where}.phi.{symbol}: empty corruption set")
            bad = set(options) - outputs - {EPSILON}
            if bad:
                raise InputError(f"{where}.phi.{symbol}: unknown output symbols {sorted(bad)}")
            phi[symbol] = frozenset(options)
        return ReplacementRemovalAttack(phi=phi, name=name)
    if kind == "insertion-removal":
        alpha = _expect(data, "alpha", list, where)
        if not all(isinstance(t, str) for t in alpha):
            raise InputError(f"{where}.alpha: expected a list of symbols")
        bad = set(alpha) - outputs
        if bad:
            raise InputError(f"{where}.alpha: unknown output symbols {sorted(bad)}")
        return InsertionRemovalAttack(alpha=frozenset(alpha), name=name)
    raise InputError(f"{where}.kind: unknown attack kind {kind!r}")


def parse_problem(data: Any) -> Problem:
    """Validate a decoded JSON document into a Problem."""
    if not isinstance(data, dict):
        raise InputError("problem: expected a JSON object")
    version = data.get("schema")
    if version != SCHEMA_VERSION:
        raise InputError(f"schema: expected version {SCHEMA_VERSION}, got {version!r}")

    alpha_data = _expect(data, "alphabet", dict, "problem")
    events = _expect(alpha_data, "events", list, "alphabet")
    controllable = _expect(alpha_data, "controllable", list, "alphabet")
    if not all(isinstance(e, str) for e in events + controllable):
        raise InputError("alphabet: events must be strings")
    try:
        alphabet = Alphabet(events=tuple(events), controllable=frozenset(controllable))
    except InputError as exc:
        raise InputError(f"alphabet: {exc}") from None

    table = _expect(data, "observation", dict, "problem")
    unknown = set(table) - set(events)
    if unknown:
        raise InputError(f"observation: unknown events {sorted(unknown)}")
    missing = set(events) - set(table)
    if missing:
        raise InputError(f"observation: no image for events {sorted(missing)}")
    if not all(isinstance(t, str) for t in table.values()):
        raise InputError("observation: images must be strings")
    pmap = ObservationMap(table)

    plant = _parse_automaton(_expect(data, "plant", dict, "problem"), alphabet, "plant")
    spec = _parse_automaton(_expect(data, "specification", dict, "problem"), alphabet, "specification")
    if not check_sublanguage(plant, spec, depth=None):
        raise InputError("specification: language is not contained in the plant language")

    raw_attacks = _expect(data, "attacks", list, "problem")
    if not raw_attacks:
        raise InputError("attacks: at least one attack is required")
    outputs = pmap.output_alphabet
    attacks = []
    names = set()
    for idx, entry in enumerate(raw_attacks):
        if not isinstance(entry, dict):
            raise InputError(f"attacks[{idx}]: expected an object")
        attack = _parse_attack(entry, outputs, idx)
        if attack.name in names:
            raise InputError(f"attacks[{idx}].name: duplicate name {attack.name!r}")
        names.add(attack.name)
        attacks.append(attack)
    return Problem(plant=plant, spec=spec, pmap=pmap, attacks=tuple(attacks))


def load_problem(path: Union[str, Path]) -> Problem:
    path = Path(path)
    if not path.exists():
        raise InputError(f"problem file not found: {path}")
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: not valid JSON ({exc})") from None
    return parse_problem(data)


def _automaton_to_dict(aut: Automaton) -> dict:
    return {
        "states": sorted(aut.states),
        "initial": aut.initial,
        "transitions": [
            [src, ev, dst] for (src, ev), dst in sorted(aut.transitions.items())
        ],
    }


def _attack_to_dict(attack: Attack) -> dict:
    if isinstance(attack, IdentityAttack):
        return {"name": attack.name, "kind": "identity"}
    if isinstance(attack, ReplacementRemovalAttack):
        return {
            "name": attack.name,
            "kind": "replacement-removal",
            "phi": {t: sorted(opts) for t, opts in sorted(attack.phi.items())},
        }
    return {"name": attack.name, "kind": "insertion-removal", "alpha": sorted(attack.alpha)}


def problem_to_dict(problem: Problem) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "alphabet": {
            "events": list(problem.alphabet.events),
            "controllable": sorted(problem.alphabet.controllable),
        },
        "observation": {ev: problem.pmap[ev] for ev in problem.alphabet.events},
        "plant": _automaton_to_dict(problem.plant),
        "specification": _automaton_to_dict(problem.spec),
        "attacks": [_attack_to_dict(a) for a in problem.attacks],
    }


def save_problem(problem: Problem, path: Union[str, Path]) -> None:
    Path(path).write_text(
        json.dumps(problem_to_dict(problem), indent=2, sort_keys=False) + "\n",
        encoding="utf-8",
    )
