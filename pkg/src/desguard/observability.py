"""Observability decision procedures for a specification under attacks.

Three routes produce the same verdict on their common domain:

* ``check_observability_replacement`` — pair-product construction for
  identity / replacement-removal attack sets.  For every ordered attack
  pair it explores triples (spec state, plant state, spec state) reachable
  by pairs of words whose corrupted observations can collide, and looks for
  a controllable event enabled in the first two coordinates but not in the
  third.
* ``check_observability_insertion`` — for insertion-removal attack sets,
  reduces each attack pair to a plain observability check under the
  observation map that additionally hides the attacked symbols.
* ``observability_by_enumeration`` — bounded definitional check over all
  word pairs; the independent oracle.  Accepts any mix of attack kinds.

The efficient routes require the specification to be controllable; the
enumerated route falls back to the raw two-sided definition when it is
not.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .automata import (
    Automaton,
    Event,
    Word,
    check_controllability,
    enumerate_language,
)
from .attacks import (
    EPSILON,
    Attack,
    AttackSet,
    IdentityAttack,
    InsertionRemovalAttack,
    ObservationMap,
    corruption_overlap,
    is_finite_attack,
    mask_observation_map,
    symbol_corruptions,
)
from .errors import InputError, PreconditionError, UnsupportedError

#: A pair label on a product edge: each side is an event or EPSILON.
EventPair = tuple[str, str]
Triple = tuple[str, str, str]


@dataclass(frozen=True)
class Witness:
    """A concrete violation of observability.

    ``left`` and ``right`` are specification words whose corrupted
    observations (under the attacks at ``attack_left`` / ``attack_right``
    in the checked attack set) can collide, yet extending both by ``event``
    keeps ``left`` inside the specification while ``right`` leaves it
    (right·event is in the plant language only).
    """

    left: Word
    right: Word
    event: Event
    attack_left: int
    attack_right: int


@dataclass(frozen=True)
class Verdict:
    """Observability verdict with the route that produced it
    ("product", "reduction", or "brute-force")."""

    holds: bool
    method: str
    witness: Optional[Witness] = None


@dataclass(frozen=True)
class ProductAutomaton:
    """Reachable part of the pair-tracking product for one ordered attack
    pair.  States are triples (spec, plant, spec); edges are labeled by
    event pairs whose single-event corruptions can collide (EPSILON on a
    side leaves that side's coordinates unchanged).  ``paths`` stores one
    shortest driving word pair per reachable triple."""

    plant: Automaton
    spec: Automaton
    initial: Triple
    event_pairs: tuple[EventPair, ...]
    triples: tuple[Triple, ...]
    transitions: dict[tuple[Triple, EventPair], Triple]
    paths: dict[Triple, tuple[Word, Word]]


def _single_corruptions(attack: Attack, pmap: ObservationMap, ev: str) -> frozenset[str]:
    if ev == EPSILON:
        return frozenset({EPSILON})
    return symbol_corruptions(attack, pmap, ev)


def build_product_automaton(
    plant: Automaton,
    spec: Automaton,
    pmap: ObservationMap,
    attack_left: Attack,
    attack_right: Attack,
) -> ProductAutomaton:
    """Construct the reachable product for one ordered attack pair.

    Only identity / replacement-removal attacks are supported; the
    insertion-removal case goes through the reduction route instead.
    """
    if not (is_finite_attack(attack_left) and is_finite_attack(attack_right)):
        raise UnsupportedError("product construction needs finite corruption sets")
    if not plant.alphabet.same_as(spec.alphabet):
        raise InputError("plant and specification must share one alphabet")

    events = list(spec.alphabet.events)
    sides = [EPSILON] + events
    pairs: list[EventPair] = []
    for a in sides:
        for b in sides:
            if a == EPSILON and b == EPSILON:
                continue
            if _single_corruptions(attack_left, pmap, a) & _single_corruptions(attack_right, pmap, b):
                pairs.append((a, b))

    initial: Triple = (spec.initial, plant.initial, spec.initial)
    paths: dict[Triple, tuple[Word, Word]] = {initial: ((), ())}
    transitions: dict[tuple[Triple, EventPair], Triple] = {}
    order: list[Triple] = [initial]
    queue: deque[Triple] = deque([initial])
    while queue:
        r, x, r2 = queue.popleft()
        w_left, w_right = paths[(r, x, r2)]
        for a, b in pairs:
            nr = r if a == EPSILON else spec.transitions.get((r, a))
            nx = x if b == EPSILON else plant.transitions.get((x, b))
            nr2 = r2 if b == EPSILON else spec.transitions.get((r2, b))
            if nr is None or nx is None or nr2 is None:
                continue
            target: Triple = (nr, nx, nr2)
            transitions[((r, x, r2), (a, b))] = target
            if target not in paths:
                paths[target] = (
                    w_left + ((a,) if a != EPSILON else ()),
                    w_right + ((b,) if b != EPSILON else ()),
                )
                order.append(target)
                queue.append(target)
    return ProductAutomaton(
        plant=plant,
        spec=spec,
        initial=initial,
        event_pairs=tuple(pairs),
        triples=tuple(order),
        transitions=transitions,
        paths=paths,
    )


def _scan_product(product: ProductAutomaton, idx_left: int, idx_right: int) -> Optional[Witness]:
    """Look for a reachable triple with a controllable event enabled in the
    first spec copy and the plant copy but not in the second spec copy."""
    spec, plant = product.spec, product.plant
    for triple in product.triples:
        r, x, r2 = triple
        for ev in spec.alphabet.events:
            if ev not in spec.alphabet.controllable:
                continue
            if (
                (r, ev) in spec.transitions
                and (x, ev) in plant.transitions
                and (r2, ev) not in spec.transitions
            ):
                w_left, w_right = product.paths[triple]
                return Witness(
                    left=w_left,
                    right=w_right,
                    event=ev,
                    attack_left=idx_left,
                    attack_right=idx_right,
                )
    return None


def _require_controllable(plant: Automaton, spec: Automaton) -> None:
    if not check_controllability(plant, spec).holds:
        raise PreconditionError(
            "observability tests require a controllable specification; "
            "use observability_by_enumeration for the general definition"
        )


def check_observability_replacement(
    plant: Automaton,
    spec: Automaton,
    pmap: ObservationMap,
    attacks: AttackSet,
) -> Verdict:
    """Product-automaton observability test for identity and
    replacement-removal attack sets."""
    for attack in attacks:
        if not is_finite_attack(attack):
            raise UnsupportedError("attack set contains an insertion-removal attack")
    _require_controllable(plant, spec)
    for i, attack_left in enumerate(attacks):
        for j, attack_right in enumerate(attacks):
            product = build_product_automaton(plant, spec, pmap, attack_left, attack_right)
            witness = _scan_product(product, i, j)
            if witness is not None:
                return Verdict(holds=False, method="product", witness=witness)
    return Verdict(holds=True, method="product")


def check_conventional_observability(
    plant: Automaton,
    spec: Automaton,
    qmap: ObservationMap,
) -> Verdict:
    """Plain (attack-free) observability under the observation map qmap:
    the product test with a single identity attack."""
    return check_observability_replacement(plant, spec, qmap, (IdentityAttack(),))


def check_observability_insertion(
    plant: Automaton,
    spec: Automaton,
    pmap: ObservationMap,
    attacks: AttackSet,
) -> Verdict:
    """Observability under insertion-removal attacks, decided by plain
    observability checks under masked observation maps, one per unordered
    attack pair (including each attack with itself)."""
    for attack in attacks:
        if not isinstance(attack, InsertionRemovalAttack):
            raise UnsupportedError("reduction route needs a pure insertion-removal attack set")
    _require_controllable(plant, spec)
    for i, attack_left in enumerate(attacks):
        for j in range(i, len(attacks)):
            attack_right = attacks[j]
            alpha = attack_left.alpha | attack_right.alpha
            inner = check_conventional_observability(plant, spec, mask_observation_map(alpha, pmap))
            if not inner.holds:
                assert inner.witness is not None
                witness = Witness(
                    left=inner.witness.left,
                    right=inner.witness.right,
                    event=inner.witness.event,
                    attack_left=i,
                    attack_right=j,
                )
                return Verdict(holds=False, method="reduction", witness=witness)
    return Verdict(holds=True, method="reduction")


def default_enumeration_depth(plant: Automaton, spec: Automaton, cap: int = 10) -> int:
    """Depth covering every simple path in the pair product, capped for
    desk-scale tractability."""
    bound = 2 * len(spec.states) ** 2 * len(plant.states)
    return min(bound, cap)


def observability_by_enumeration(
    plant: Automaton,
    spec: Automaton,
    pmap: ObservationMap,
    attacks: AttackSet,
    depth: int,
) -> Verdict:
    """Definitional observability check over all specification word pairs
    of length <= depth.

    When the specification is controllable the check uses the one-sided
    controllable-event form; otherwise it falls back to the raw two-sided
    definition over all events (still covered, because every ordered word
    pair and attack pair is visited).  Overlap of corrupted observations is
    decided without enumerating corruption sets, so mixed attack kinds are
    accepted.
    """
    if depth < 0:
        raise InputError("depth must be nonnegative")
    controllable_spec = check_controllability(plant, spec).holds
    events = (
        [ev for ev in spec.alphabet.events if ev in spec.alphabet.controllable]
        if controllable_spec
        else list(spec.alphabet.events)
    )
    spec_words = list(enumerate_language(spec, depth))

    # Violation candidates: (right word, event) with right·event in the
    # plant language but outside the specification.
    escapes: list[tuple[Word, Event]] = []
    enabled: dict[Event, list[Word]] = {ev: [] for ev in events}
    for w in spec_words:
        state = spec.run(w)
        assert state is not None
        for ev in events:
            if (state, ev) in spec.transitions:
                enabled[ev].append(w)
            elif plant.generates(w + (ev,)):
                escapes.append((w, ev))

    for i, attack_left in enumerate(attacks):
        for j, attack_right in enumerate(attacks):
            overlap_cache: dict[tuple[Word, Word], bool] = {}
            for w_right, ev in escapes:
                for w_left in enabled[ev]:
                    key = (w_left, w_right)
                    hit = overlap_cache.get(key)
                    if hit is None:
                        hit = corruption_overlap(attack_left, attack_right, pmap, w_left, w_right)
                        overlap_cache[key] = hit
                    if hit:
                        return Verdict(
                            holds=False,
                            method="brute-force",
                            witness=Witness(
                                left=w_left,
                                right=w_right,
                                event=ev,
                                attack_left=i,
                                attack_right=j,
                            ),
                        )
    return Verdict(holds=True, method="brute-force")


def check_observability(
    plant: Automaton,
    spec: Automaton,
    pmap: ObservationMap,
    attacks: AttackSet,
    method: str = "auto",
    depth: Optional[int] = None,
) -> Verdict:
    """Dispatch to the right observability route.

    "auto" picks the product construction for finite attack sets, the
    masked-map reduction for pure insertion-removal sets, and the bounded
    enumeration for mixed sets.
    """
    if not attacks:
        raise InputError("attack set must be nonempty")
    if method == "auto":
        if all(is_finite_attack(a) for a in attacks):
            method = "product"
        elif all(isinstance(a, InsertionRemovalAttack) for a in attacks):
            method = "reduction"
        else:
            method = "brute"
    if method == "product":
        return check_observability_replacement(plant, spec, pmap, attacks)
    if method == "reduction":
        return check_observability_insertion(plant, spec, pmap, attacks)
    if method == "brute":
        if depth is None:
            depth = default_enumeration_depth(plant, spec)
        return observability_by_enumeration(plant, spec, pmap, attacks, depth)
    raise InputError(f"unknown observability method {method!r}")


def witness_violates_definition(
    plant: Automaton,
    spec: Automaton,
    pmap: ObservationMap,
    attacks: AttackSet,
    witness: Witness,
) -> bool:
    """Re-validate a witness against the definition it claims to violate:
    both words in the specification, colliding corrupted observations, and
    the shared continuation keeps the left word in the specification while
    the right one escapes into the plant."""
    left, right, ev = witness.left, witness.right, witness.event
    return (
        spec.generates(left)
        and spec.generates(right)
        and spec.generates(left + (ev,))
        and plant.generates(right + (ev,))
        and not spec.generates(right + (ev,))
        and corruption_overlap(
            attacks[witness.attack_left], attacks[witness.attack_right], pmap, left, right
        )
    )
