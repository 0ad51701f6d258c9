"""Bounded-depth closed-loop languages under a fixed attack.

With the bank supervisor in the loop and one attack actually corrupting
the channel, a plant word survives in the upper language when SOME choice
of corruption keeps its events enabled, and in the lower language when
EVERY choice does.  Instead of enumerating corrupted outputs, the
simulator propagates the set of distinguishable bank configurations per
plant word: the decision depends on the output only through the bank
state, so configurations are a sound and compact quotient.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .automata import Automaton, BoundedLanguage, Word, enumerate_language
from .attacks import (
    EPSILON,
    AttackSet,
    ObservationMap,
    is_finite_attack,
    symbol_corruptions,
)
from .errors import InputError, UnsupportedError
from .observability import Verdict, check_observability
from .observer import BankConfig, SupervisorBank, bank_decision, bank_step
from .automata import ControllabilityResult, check_controllability


@dataclass(frozen=True)
class LoopResult:
    """Closed-loop languages for one attack of the set, to a depth bound.
    ``lower`` is what the attack cannot reject, ``upper`` what it can
    force; lower is always contained in upper."""

    attack_index: int
    depth: int
    lower: BoundedLanguage
    upper: BoundedLanguage


def default_simulation_depth(spec: Automaton) -> int:
    """Covers the specification's state cycle twice."""
    return 2 * len(spec.states)


def compute_controlled_languages(
    plant: Automaton,
    spec: Automaton,
    pmap: ObservationMap,
    attacks: AttackSet,
    attack_index: int,
    depth: int,
    bank: Optional[SupervisorBank] = None,
) -> LoopResult:
    """Simulate the bank supervisor against one attack of the set.

    The supervisor is built from the whole attack set; the attack at
    ``attack_index`` is the one corrupting the channel.
    """
    if not (0 <= attack_index < len(attacks)):
        raise InputError("attack index out of range")
    attack = attacks[attack_index]
    if not is_finite_attack(attack):
        raise UnsupportedError("cannot simulate an infinite corruption set")
    if bank is None:
        bank = SupervisorBank.from_attacks(spec, attacks, pmap)
    observers = bank.observers

    def successors(configs: frozenset[BankConfig], ev) -> frozenset[BankConfig]:
        out = set()
        for config in configs:
            for t in symbol_corruptions(attack, pmap, ev):
                out.add(config if t == EPSILON else bank_step(observers, config, t))
        return frozenset(out)

    def explore(require_all: bool) -> tuple[Word, ...]:
        start: frozenset[BankConfig] = frozenset({bank.config})
        words: list[Word] = [()]
        frontier: list[tuple[Word, str, frozenset[BankConfig]]] = [((), plant.initial, start)]
        for _ in range(depth):
            nxt: list[tuple[Word, str, frozenset[BankConfig]]] = []
            for w, state, configs in frontier:
                for ev in plant.alphabet.events:
                    target = plant.transitions.get((state, ev))
                    if target is None:
                        continue
                    decisions = (
                        bank_decision(spec, observers, config) for config in configs
                    )
                    allowed = (
                        all(ev in d for d in decisions)
                        if require_all
                        else any(ev in d for d in decisions)
                    )
                    if allowed:
                        nxt.append((w + (ev,), target, successors(configs, ev)))
            nxt.sort(key=lambda item: item[0])
            words.extend(w for w, _, _ in nxt)
            frontier = nxt
        return tuple(words)

    return LoopResult(
        attack_index=attack_index,
        depth=depth,
        lower=BoundedLanguage(depth=depth, words=explore(require_all=True)),
        upper=BoundedLanguage(depth=depth, words=explore(require_all=False)),
    )


@dataclass(frozen=True)
class Discrepancy:
    """One word on which a closed-loop language differs from the bounded
    specification language.  ``side`` is "lower" or "upper"; ``kind`` is
    "extra" (in the loop, outside the specification) or "missing"."""

    attack_index: int
    side: str
    kind: str
    word: Word


@dataclass(frozen=True)
class ClosedLoopReport:
    """Outcome of verifying that the bank supervisor enforces the
    specification exactly, per attack, at a depth bound."""

    depth: int
    controllability: ControllabilityResult
    observability: Verdict
    results: tuple[LoopResult, ...]
    discrepancies: tuple[Discrepancy, ...]

    @property
    def conditions_hold(self) -> bool:
        return self.controllability.holds and self.observability.holds

    @property
    def enforced(self) -> bool:
        return not self.discrepancies

    @property
    def consistent(self) -> bool:
        """False signals a bug: the existence conditions hold but some
        closed-loop language still differs from the specification."""
        return not (self.conditions_hold and self.discrepancies)


def verify_closed_loop(
    plant: Automaton,
    spec: Automaton,
    pmap: ObservationMap,
    attacks: AttackSet,
    depth: Optional[int] = None,
) -> ClosedLoopReport:
    """Check controllability and observability, then simulate every attack
    of the set and compare both closed-loop languages with the bounded
    specification language.

    When both conditions hold, any discrepancy is an implementation bug;
    when either fails, a discrepancy is the concrete evidence that no
    bounded simulation of this supervisor matches the specification.
    """
    if depth is None:
        depth = default_simulation_depth(spec)
    for attack in attacks:
        if not is_finite_attack(attack):
            raise UnsupportedError("closed-loop simulation needs finite corruption sets")
    controllability = check_controllability(plant, spec)
    if controllability.holds:
        observability = check_observability(plant, spec, pmap, attacks)
    else:
        # The efficient routes require controllability; fall back to the
        # bounded definitional check.
        observability = check_observability(plant, spec, pmap, attacks, method="brute")
    reference = enumerate_language(spec, depth).as_set
    bank = SupervisorBank.from_attacks(spec, attacks, pmap)
    results = []
    discrepancies: list[Discrepancy] = []
    for index in range(len(attacks)):
        result = compute_controlled_languages(plant, spec, pmap, attacks, index, depth, bank=bank)
        results.append(result)
        for side, language in (("lower", result.lower), ("upper", result.upper)):
            got = language.as_set
            for w in sorted(got - reference, key=lambda w: (len(w), w)):
                discrepancies.append(Discrepancy(index, side, "extra", w))
            for w in sorted(reference - got, key=lambda w: (len(w), w)):
                discrepancies.append(Discrepancy(index, side, "missing", w))
    return ClosedLoopReport(
        depth=depth,
        controllability=controllability,
        observability=observability,
        results=tuple(results),
        discrepancies=tuple(discrepancies),
    )
