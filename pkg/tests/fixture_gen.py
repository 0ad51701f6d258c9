"""Seeded random problem generator for the oracle-equivalence suites.

Specifications are built as the plant minus a random subset of
controllable-event transitions, which makes them controllable sublanguages
by construction.  Fixtures are kept sparse so depth-bounded enumeration of
their languages stays desk-scale.
"""

import random

from desguard import (
    Alphabet,
    Automaton,
    EPSILON,
    InsertionRemovalAttack,
    ObservationMap,
    ReplacementRemovalAttack,
    enumerate_language,
)

EVENT_POOL = ["a", "b", "c", "d"]
OUTPUT_POOL = ["p", "q", "r"]


def random_fixture(rng: random.Random, insertion: bool = False):
    """One random (plant, spec, pmap, attacks) tuple.

    With ``insertion=True`` the attack set holds up to three
    insertion-removal attacks; otherwise one or two replacement-removal
    attacks (sometimes an identity).
    """
    n_states = rng.randint(2, 5)
    n_events = rng.randint(2, 4)
    n_outputs = rng.randint(1, 3)
    states = [f"s{i}" for i in range(n_states)]
    events = EVENT_POOL[:n_events]
    controllable = frozenset(rng.sample(events, rng.randint(1, n_events)))
    alphabet = Alphabet(events=tuple(events), controllable=controllable)

    transitions = {}
    for src in states:
        for ev in events:
            if rng.random() < 0.35:
                transitions[(src, ev)] = rng.choice(states)
    plant = Automaton(
        states=frozenset(states), alphabet=alphabet, transitions=transitions, initial="s0"
    )

    spec_transitions = {
        key: dst
        for key, dst in transitions.items()
        if key[1] not in controllable or rng.random() < 0.7
    }
    spec = Automaton(
        states=frozenset(states), alphabet=alphabet, transitions=spec_transitions, initial="s0"
    )

    outputs = OUTPUT_POOL[:n_outputs]
    pmap = ObservationMap(
        {ev: rng.choice(outputs + [EPSILON]) for ev in events}
    )

    if insertion:
        attacks = tuple(
            InsertionRemovalAttack(
                alpha=frozenset(rng.sample(outputs, rng.randint(0, n_outputs))),
                name=f"ir{k}",
            )
            for k in range(rng.randint(1, 3))
        )
    else:
        choices = outputs + [EPSILON]
        attacks = []
        for k in range(rng.randint(1, 2)):
            phi = {
                t: frozenset(rng.sample(choices, rng.randint(1, 2)))
                for t in outputs
            }
            attacks.append(ReplacementRemovalAttack(phi=phi, name=f"rr{k}"))
        attacks = tuple(attacks)
    return plant, spec, pmap, attacks


def loose_fixture(rng: random.Random):
    """Like random_fixture but the specification may also drop
    uncontrollable transitions, so controllability can genuinely fail."""
    plant, spec, pmap, attacks = random_fixture(rng)
    spec_transitions = {
        key: dst for key, dst in plant.transitions.items() if rng.random() < 0.8
    }
    spec = Automaton(
        states=plant.states,
        alphabet=plant.alphabet,
        transitions=spec_transitions,
        initial=plant.initial,
    )
    return plant, spec, pmap, attacks


def sized_fixtures(seed: int, count: int, max_words: int, depth: int, insertion: bool = False):
    """Yield ``count`` fixtures whose depth-bounded specification language
    stays below ``max_words`` (oversized draws are discarded)."""
    rng = random.Random(seed)
    produced = 0
    while produced < count:
        plant, spec, pmap, attacks = random_fixture(rng, insertion=insertion)
        if len(enumerate_language(spec, depth)) > max_words:
            continue
        produced += 1
        yield plant, spec, pmap, attacks
