"""Attack-resilient state estimation and the bank-of-observers supervisor.

For each hypothesized finite attack we build an observer: a deterministic
automaton over output symbols whose states are sets of specification
states (the estimate).  The supervisor runs one observer per attack; an
observer whose language excludes the received output is permanently
excluded and contributes only the uncontrollable events from then on.  The
control decision is the union of the per-observer enablement sets.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional

from .automata import Automaton, Event, enumerate_language
from .attacks import (
    EPSILON,
    Attack,
    AttackSet,
    IdentityAttack,
    InsertionRemovalAttack,
    ObservationMap,
    OutputSymbol,
    OutputWord,
    could_observe,
    erasable,
    is_finite_attack,
    mask_observation_map,
    symbol_corruptions,
)
from .errors import InputError, UnsupportedError

#: An estimate: the set of specification states consistent with the
#: corrupted output received so far.
Estimate = frozenset[str]


def unobservable_reach(
    spec: Automaton,
    attack: Attack,
    pmap: ObservationMap,
    states: Iterable[str],
) -> Estimate:
    """Closure of a state set over transitions whose event's attacked
    observation can be empty."""
    silent = [ev for ev in spec.alphabet.events if erasable(attack, pmap, ev)]
    reached = set(states)
    stack = list(reached)
    while stack:
        state = stack.pop()
        for ev in silent:
            target = spec.transitions.get((state, ev))
            if target is not None and target not in reached:
                reached.add(target)
                stack.append(target)
    return frozenset(reached)


@dataclass(frozen=True)
class Observer:
    """Deterministic estimator over output symbols for one finite attack."""

    spec: Automaton
    attack: Attack
    pmap: ObservationMap
    states: frozenset[Estimate]
    transitions: dict[tuple[Estimate, OutputSymbol], Estimate]
    initial: Estimate

    def step(self, estimate: Estimate, symbol: OutputSymbol) -> Optional[Estimate]:
        """Successor estimate after one output symbol, or None when the
        symbol is impossible from this estimate."""
        if estimate not in self.states:
            raise InputError("estimate is not a state of this observer")
        return self.transitions.get((estimate, symbol))

    def accepts(self, y: OutputWord) -> bool:
        estimate: Optional[Estimate] = self.initial
        for t in y:
            estimate = self.transitions.get((estimate, t))
            if estimate is None:
                return False
        return True


def build_observer(spec: Automaton, attack: Attack, pmap: ObservationMap) -> Observer:
    """Subset construction with silent-closure for one finite attack.

    From an estimate B and output symbol t, the successor collects every
    state reachable by one event whose corrupted observation can be t,
    then closes under silently observable transitions; the transition is
    left undefined when that set is empty.
    """
    if not is_finite_attack(attack):
        raise UnsupportedError(
            "observers are built for finite attacks; see build_insertion_observer"
        )
    # Output symbols a corrupted channel can actually carry.
    emitted: set[OutputSymbol] = set()
    per_event: dict[Event, frozenset[OutputSymbol]] = {}
    for ev in spec.alphabet.events:
        opts = symbol_corruptions(attack, pmap, ev)
        per_event[ev] = opts
        emitted |= {t for t in opts if t != EPSILON}

    initial = unobservable_reach(spec, attack, pmap, {spec.initial})
    states: set[Estimate] = {initial}
    transitions: dict[tuple[Estimate, OutputSymbol], Estimate] = {}
    queue: deque[Estimate] = deque([initial])
    while queue:
        estimate = queue.popleft()
        for t in sorted(emitted):
            moved = {
                spec.transitions[(state, ev)]
                for state in estimate
                for ev in spec.alphabet.events
                if t in per_event[ev] and (state, ev) in spec.transitions
            }
            if not moved:
                continue
            target = unobservable_reach(spec, attack, pmap, moved)
            transitions[(estimate, t)] = target
            if target not in states:
                states.add(target)
                queue.append(target)
    return Observer(
        spec=spec,
        attack=attack,
        pmap=pmap,
        states=frozenset(states),
        transitions=transitions,
        initial=initial,
    )


def build_insertion_observer(
    spec: Automaton, attack: InsertionRemovalAttack, pmap: ObservationMap
) -> Observer:
    """Convenience estimator for an insertion-removal attack: a plain
    observer under the masked observation map.  Feed it the received
    output with the attacked symbols stripped (the stripped string is the
    only attack-invariant content of the channel)."""
    return build_observer(spec, IdentityAttack(), mask_observation_map(attack.alpha, pmap))


def enabled_events(spec: Automaton, estimate: Iterable[str]) -> frozenset[Event]:
    """All uncontrollable events plus every controllable event enabled at
    some state of the estimate."""
    extra = {
        ev
        for ev in spec.alphabet.controllable
        for state in estimate
        if (state, ev) in spec.transitions
    }
    return spec.alphabet.uncontrollable | extra


#: One estimate per observer; None marks an excluded observer.
BankConfig = tuple[Optional[Estimate], ...]


def bank_initial(observers: tuple[Observer, ...]) -> BankConfig:
    return tuple(obs.initial for obs in observers)


def bank_step(observers: tuple[Observer, ...], config: BankConfig, symbol: OutputSymbol) -> BankConfig:
    """Advance every live observer; observers without a transition on the
    symbol are excluded permanently."""
    return tuple(
        None if estimate is None else obs.transitions.get((estimate, symbol))
        for obs, estimate in zip(observers, config)
    )


def bank_decision(spec: Automaton, observers: tuple[Observer, ...], config: BankConfig) -> frozenset[Event]:
    """Union of per-observer enablement sets; excluded observers
    contribute only the uncontrollable events."""
    decision = frozenset(spec.alphabet.uncontrollable)
    for estimate in config:
        if estimate is not None:
            decision |= enabled_events(spec, estimate)
    return decision


@dataclass(frozen=True)
class SupervisorBank:
    """The running supervisor: one observer per hypothesized attack, the
    current per-observer estimates, and the output received so far."""

    spec: Automaton
    observers: tuple[Observer, ...]
    config: BankConfig
    history: OutputWord = ()

    @classmethod
    def from_attacks(
        cls, spec: Automaton, attacks: AttackSet, pmap: ObservationMap
    ) -> "SupervisorBank":
        observers = tuple(build_observer(spec, attack, pmap) for attack in attacks)
        return cls(spec=spec, observers=observers, config=bank_initial(observers))

    @property
    def alive(self) -> tuple[bool, ...]:
        return tuple(estimate is not None for estimate in self.config)

    def feed(self, symbol: OutputSymbol) -> "SupervisorBank":
        return SupervisorBank(
            spec=self.spec,
            observers=self.observers,
            config=bank_step(self.observers, self.config, symbol),
            history=self.history + (symbol,),
        )

    def feed_word(self, y: OutputWord) -> "SupervisorBank":
        bank = self
        for t in y:
            bank = bank.feed(t)
        return bank

    def decision(self) -> frozenset[Event]:
        return bank_decision(self.spec, self.observers, self.config)


def supervisor_by_enumeration(
    spec: Automaton,
    pmap: ObservationMap,
    attacks: AttackSet,
    y: OutputWord,
    depth: int,
) -> frozenset[Event]:
    """Definitional control decision for a received output: enable every
    uncontrollable event plus each controllable event that continues some
    specification word (up to the length bound) whose corrupted
    observation could be y."""
    decision = set(spec.alphabet.uncontrollable)
    controllable = [ev for ev in spec.alphabet.events if ev in spec.alphabet.controllable]
    for w in enumerate_language(spec, depth):
        state = spec.run(w)
        assert state is not None
        candidates = [ev for ev in controllable if (state, ev) in spec.transitions and ev not in decision]
        if not candidates:
            continue
        if any(could_observe(attack, pmap, w, y) for attack in attacks):
            decision.update(candidates)
    return frozenset(decision)
