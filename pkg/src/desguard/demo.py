"""A small worked problem used throughout the tests and the shipped
problem files.

The specification is the four-state cycle x0 -a-> x1 -b-> x2 -c-> x3
-d-> x0; the plant adds one controllable shortcut x1 -c-> x3 that the
supervisor must prevent.  Events a and c are controllable, b and d are
not; a, b, d are observed as themselves and c is unobservable.

Three attacks come with it:

* ``scramble`` replaces every observed symbol by an arbitrary one, so only
  the length of the output survives.
* ``swap`` can replace a by b and d by a.
* ``erase`` always deletes d.

The specification is controllable, and resilient against each attack in
isolation but not against {swap, erase} together.
"""

from __future__ import annotations

from .automata import Alphabet, Automaton
from .attacks import EPSILON, ObservationMap, ReplacementRemovalAttack
from .problem import Problem

ALPHABET = Alphabet(events=("a", "b", "c", "d"), controllable=frozenset({"a", "c"}))

SPEC = Automaton(
    states=frozenset({"x0", "x1", "x2", "x3"}),
    alphabet=ALPHABET,
    transitions={
        ("x0", "a"): "x1",
        ("x1", "b"): "x2",
        ("x2", "c"): "x3",
        ("x3", "d"): "x0",
    },
    initial="x0",
)

PLANT = Automaton(
    states=SPEC.states,
    alphabet=ALPHABET,
    transitions={**SPEC.transitions, ("x1", "c"): "x3"},
    initial="x0",
)

PMAP = ObservationMap({"a": "a", "b": "b", "c": EPSILON, "d": "d"})

SCRAMBLE = ReplacementRemovalAttack(
    phi={"a": frozenset("abd"), "b": frozenset("abd"), "d": frozenset("abd")},
    name="scramble",
)

SWAP = ReplacementRemovalAttack(
    phi={"a": frozenset("ab"), "b": frozenset("b"), "d": frozenset("ad")},
    name="swap",
)

ERASE = ReplacementRemovalAttack(
    phi={"a": frozenset("a"), "b": frozenset("b"), "d": frozenset({EPSILON})},
    name="erase",
)


def demo_problem() -> Problem:
    """The full problem with all three attacks."""
    return Problem(plant=PLANT, spec=SPEC, pmap=PMAP, attacks=(SCRAMBLE, SWAP, ERASE))
