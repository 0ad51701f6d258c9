"""Deterministic partial finite automata and bounded-language machinery.

States are opaque strings, events are symbols from a finite alphabet, and
the transition table is a partial function: at most one target per
(state, event) pair.  All values are immutable after construction.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Optional

from .errors import InputError

Event = str
Word = tuple[Event, ...]

EMPTY_WORD: Word = ()


def word(text: Iterable[Event]) -> Word:
    """Build a word from any iterable of events (e.g. a string of
    single-character event names)."""
    return tuple(text)


@dataclass(frozen=True)
class Alphabet:
    """A finite event alphabet partitioned into controllable and
    uncontrollable events."""

    events: tuple[Event, ...]
    controllable: frozenset[Event]

    def __post_init__(self) -> None:
        object.__setattr__(self, "events", tuple(self.events))
        object.__setattr__(self, "controllable", frozenset(self.controllable))
        if len(set(self.events)) != len(self.events):
            raise InputError("alphabet events must be unique")
        extra = self.controllable - set(self.events)
        if extra:
            raise InputError(f"controllable events not in alphabet: {sorted(extra)}")

    @property
    def uncontrollable(self) -> frozenset[Event]:
        return frozenset(self.events) - self.controllable

    def same_as(self, other: "Alphabet") -> bool:
        return (
            set(self.events) == set(other.events)
            and self.controllable == other.controllable
        )


@dataclass(frozen=True)
class Automaton:
    """A deterministic partial automaton: finite states, an alphabet, a
    partial (state, event) -> state table, and an initial state."""

    states: frozenset[str]
    alphabet: Alphabet
    transitions: Mapping[tuple[str, Event], str]
    initial: str

    def __post_init__(self) -> None:
        object.__setattr__(self, "states", frozenset(self.states))
        object.__setattr__(self, "transitions", dict(self.transitions))
        if self.initial not in self.states:
            raise InputError(f"initial state {self.initial!r} not declared")
        known = set(self.alphabet.events)
        for (src, ev), dst in self.transitions.items():
            if src not in self.states or dst not in self.states:
                raise InputError(f"transition ({src!r}, {ev!r}) -> {dst!r} uses undeclared state")
            if ev not in known:
                raise InputError(f"transition from {src!r} uses unknown event {ev!r}")

    @cached_property
    def event_set(self) -> frozenset[Event]:
        return frozenset(self.alphabet.events)

    def step(self, state: str, event: Event) -> Optional[str]:
        """Single transition, or None when undefined."""
        if event not in self.event_set:
            raise InputError(f"unknown event {event!r}")
        return self.transitions.get((state, event))

    def run(self, w: Word) -> Optional[str]:
        """State reached from the initial state along w, or None if some
        prefix falls off the transition table.  run(()) is the initial state."""
        state: Optional[str] = self.initial
        for ev in w:
            if ev not in self.event_set:
                raise InputError(f"unknown event {ev!r}")
            state = self.transitions.get((state, ev))
            if state is None:
                return None
        return state

    def generates(self, w: Word) -> bool:
        """True iff w is in the language generated by this automaton."""
        return self.run(w) is not None

    def enabled(self, state: str) -> tuple[Event, ...]:
        """Events with a transition defined at state, in alphabet order."""
        return tuple(ev for ev in self.alphabet.events if (state, ev) in self.transitions)


@dataclass(frozen=True)
class BoundedLanguage:
    """All generated words up to a length bound, in length-lexicographic
    order.  Prefix-closed when produced from an automaton."""

    depth: int
    words: tuple[Word, ...]

    @cached_property
    def as_set(self) -> frozenset[Word]:
        return frozenset(self.words)

    def __contains__(self, w: Word) -> bool:
        return w in self.as_set

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self):
        return iter(self.words)


def enumerate_language(aut: Automaton, depth: int) -> BoundedLanguage:
    """Breadth-first enumeration of every generated word of length <= depth."""
    if depth < 0:
        raise InputError("depth must be nonnegative")
    out: list[Word] = [EMPTY_WORD]
    frontier: list[tuple[Word, str]] = [(EMPTY_WORD, aut.initial)]
    for _ in range(depth):
        nxt: list[tuple[Word, str]] = []
        for w, state in frontier:
            for ev in aut.alphabet.events:
                dst = aut.transitions.get((state, ev))
                if dst is not None:
                    nxt.append((w + (ev,), dst))
        nxt.sort(key=lambda item: item[0])
        out.extend(w for w, _ in nxt)
        frontier = nxt
    return BoundedLanguage(depth=depth, words=tuple(out))


@dataclass(frozen=True)
class ControllabilityResult:
    """Outcome of the controllability check.  On failure the witness is a
    pair (w, sigma): w is in the specification, w·sigma is in the plant but
    not in the specification, and sigma is uncontrollable."""

    holds: bool
    witness: Optional[tuple[Word, Event]] = None


def _require_same_alphabet(plant: Automaton, spec: Automaton) -> None:
    if not plant.alphabet.same_as(spec.alphabet):
        raise InputError("plant and specification must share one alphabet")


def _synchronized_pairs(plant: Automaton, spec: Automaton):
    """BFS over pairs (spec state, plant state) reachable by common words,
    yielding (r, x, shortest word) in breadth-first order."""
    start = (spec.initial, plant.initial)
    seen: dict[tuple[str, str], Word] = {start: EMPTY_WORD}
    queue: deque[tuple[str, str]] = deque([start])
    while queue:
        r, x = queue.popleft()
        w = seen[(r, x)]
        yield r, x, w
        for ev in spec.alphabet.events:
            r2 = spec.transitions.get((r, ev))
            x2 = plant.transitions.get((x, ev))
            if r2 is not None and x2 is not None and (r2, x2) not in seen:
                seen[(r2, x2)] = w + (ev,)
                queue.append((r2, x2))


def check_controllability(plant: Automaton, spec: Automaton) -> ControllabilityResult:
    """Exact controllability check over reachable synchronized state pairs.

    Fails iff some word w common to both automata reaches a pair where an
    uncontrollable event is enabled in the plant but not in the
    specification.
    """
    _require_same_alphabet(plant, spec)
    uncontrollable = spec.alphabet.uncontrollable
    for r, x, w in _synchronized_pairs(plant, spec):
        for ev in spec.alphabet.events:
            if ev not in uncontrollable:
                continue
            if (x, ev) in plant.transitions and (r, ev) not in spec.transitions:
                return ControllabilityResult(holds=False, witness=(w, ev))
    return ControllabilityResult(holds=True)


def check_sublanguage(plant: Automaton, spec: Automaton, depth: Optional[int] = None) -> bool:
    """True iff every specification word of length <= depth is generated by
    the plant.  With depth=None the verdict is exact (the synchronized-pair
    search is unbounded for deterministic automata)."""
    _require_same_alphabet(plant, spec)
    shortest_violation: Optional[int] = None
    for r, x, w in _synchronized_pairs(plant, spec):
        for ev in spec.alphabet.events:
            if (r, ev) in spec.transitions and (x, ev) not in plant.transitions:
                length = len(w) + 1
                if shortest_violation is None or length < shortest_violation:
                    shortest_violation = length
    if shortest_violation is None:
        return True
    return depth is not None and shortest_violation > depth
