"""Observation maps, attack models, and the algebra of corrupted outputs.

An observation map sends each event to one output symbol or to the empty
output (written ``EPSILON``, the empty string).  An attack corrupts the
observed output string before it reaches the supervisor:

* ``IdentityAttack`` delivers the output unchanged.
* ``ReplacementRemovalAttack`` independently rewrites each observed symbol
  ``t`` into one element of a nonempty set ``phi[t]`` of symbols or
  ``EPSILON`` (removal).  No insertions.
* ``InsertionRemovalAttack`` freely inserts and removes symbols from a
  fixed set ``alpha``; two outputs are interchangeable exactly when they
  agree after deleting all ``alpha`` symbols.

Insertion-removal corruption sets are infinite, so they are never
enumerated; every question about them is reduced to equality of
``alpha``-stripped strings.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Union

from .automata import Event, Word
from .errors import InputError, NoWitnessError, UnsupportedError

OutputSymbol = str
OutputWord = tuple[OutputSymbol, ...]

#: The empty output, used both as the image of unobservable events and as
#: the "remove this symbol" option in replacement-removal tables.
EPSILON: OutputSymbol = ""


@dataclass(frozen=True)
class ObservationMap:
    """Total per-event map from events to output symbols or EPSILON."""

    table: Mapping[Event, OutputSymbol]

    def __post_init__(self) -> None:
        object.__setattr__(self, "table", dict(self.table))

    def __getitem__(self, event: Event) -> OutputSymbol:
        try:
            return self.table[event]
        except KeyError:
            raise InputError(f"observation map undefined for event {event!r}") from None

    @property
    def output_alphabet(self) -> frozenset[OutputSymbol]:
        """Output symbols actually produced (EPSILON excluded)."""
        return frozenset(t for t in self.table.values() if t != EPSILON)

    def project(self, w: Word) -> OutputWord:
        """Symbol-by-symbol image of w with empty images deleted."""
        return tuple(t for t in (self[ev] for ev in w) if t != EPSILON)


@dataclass(frozen=True)
class IdentityAttack:
    name: str = "identity"


@dataclass(frozen=True)
class ReplacementRemovalAttack:
    """Per-symbol rewrite table.  Every entry must be nonempty: an empty
    corruption set would make whole output strings impossible, which this
    package deliberately rules out (removal is expressed by EPSILON)."""

    phi: Mapping[OutputSymbol, frozenset[OutputSymbol]]
    name: str = "replacement-removal"

    def __post_init__(self) -> None:
        table = {t: frozenset(opts) for t, opts in self.phi.items()}
        object.__setattr__(self, "phi", table)
        for t, opts in table.items():
            if t == EPSILON:
                raise InputError("replacement table keys must be output symbols, not EPSILON")
            if not opts:
                raise InputError(f"empty corruption set for output symbol {t!r}")

    def options(self, symbol: OutputSymbol) -> frozenset[OutputSymbol]:
        try:
            return self.phi[symbol]
        except KeyError:
            raise InputError(f"replacement table undefined for output symbol {symbol!r}") from None


@dataclass(frozen=True)
class InsertionRemovalAttack:
    """Arbitrary insertions/removals of the symbols in ``alpha``."""

    alpha: frozenset[OutputSymbol]
    name: str = "insertion-removal"

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", frozenset(self.alpha))
        if EPSILON in self.alpha:
            raise InputError("attacked symbol set may not contain EPSILON")


Attack = Union[IdentityAttack, ReplacementRemovalAttack, InsertionRemovalAttack]

#: An ordered collection of hypothesized attacks the supervisor must resist.
AttackSet = tuple[Attack, ...]


def is_finite_attack(attack: Attack) -> bool:
    """True for attacks whose corruption sets are finite and enumerable."""
    return isinstance(attack, (IdentityAttack, ReplacementRemovalAttack))


def symbol_corruptions(attack: Attack, pmap: ObservationMap, event: Event) -> frozenset[OutputSymbol]:
    """Possible corrupted observations of one event: a set of single output
    symbols and/or EPSILON.  Unobservable events always yield {EPSILON}
    (there is nothing on the channel for the attacker to touch)."""
    t = pmap[event]
    if t == EPSILON:
        return frozenset({EPSILON})
    if isinstance(attack, IdentityAttack):
        return frozenset({t})
    if isinstance(attack, ReplacementRemovalAttack):
        return attack.options(t)
    raise UnsupportedError("insertion-removal corruption sets are infinite")


def corrupted_observations(attack: Attack, pmap: ObservationMap, w: Word) -> frozenset[OutputWord]:
    """The finite set of corrupted output strings the attack can deliver
    for the event word w, built one event at a time."""
    if not is_finite_attack(attack):
        raise UnsupportedError("cannot enumerate an insertion-removal corruption set")
    results: set[OutputWord] = {()}
    for ev in w:
        opts = symbol_corruptions(attack, pmap, ev)
        results = {
            y + ((t,) if t != EPSILON else ())
            for y in results
            for t in opts
        }
    return frozenset(results)


def erasable(attack: Attack, pmap: ObservationMap, event: Event) -> bool:
    """True iff the attacked observation of the event can be empty."""
    t = pmap[event]
    if t == EPSILON:
        return True
    if isinstance(attack, IdentityAttack):
        return False
    if isinstance(attack, ReplacementRemovalAttack):
        return EPSILON in attack.options(t)
    return t in attack.alpha


def strip_symbols(alpha: Iterable[OutputSymbol], u: OutputWord) -> OutputWord:
    """Delete every symbol of alpha from the output word."""
    removed = frozenset(alpha)
    return tuple(t for t in u if t not in removed)


def mask_observation_map(alpha: Iterable[OutputSymbol], pmap: ObservationMap) -> ObservationMap:
    """The observation map that additionally hides every event whose image
    lies in alpha (composition of stripping with the original map)."""
    removed = frozenset(alpha)
    return ObservationMap(
        {ev: (EPSILON if t in removed else t) for ev, t in pmap.table.items()}
    )


def could_observe(attack: Attack, pmap: ObservationMap, w: Word, y: OutputWord) -> bool:
    """Decide membership of y in the attacked observation set of w without
    enumerating that set.

    Replacement-removal: dynamic programming over an alignment in which
    each event of w contributes either EPSILON or one symbol of y.
    Insertion-removal: equality of the alpha-stripped strings.
    """
    y = tuple(y)
    if isinstance(attack, InsertionRemovalAttack):
        return strip_symbols(attack.alpha, pmap.project(w)) == strip_symbols(attack.alpha, y)
    m = len(y)
    reach = [True] + [False] * m
    for ev in w:
        opts = symbol_corruptions(attack, pmap, ev)
        keep = EPSILON in opts
        new = [reach[0] and keep]
        for j in range(1, m + 1):
            new.append((reach[j] and keep) or (reach[j - 1] and y[j - 1] in opts))
        reach = new
    return reach[m]


def corruption_overlap(
    attack_left: Attack,
    attack_right: Attack,
    pmap: ObservationMap,
    w_left: Word,
    w_right: Word,
) -> bool:
    """True iff the two attacks can deliver a common corrupted output for
    the two event words.  Handles all pairings of attack kinds."""
    left_ir = isinstance(attack_left, InsertionRemovalAttack)
    right_ir = isinstance(attack_right, InsertionRemovalAttack)
    if left_ir and right_ir:
        alpha = attack_left.alpha | attack_right.alpha
        return strip_symbols(alpha, pmap.project(w_left)) == strip_symbols(alpha, pmap.project(w_right))
    if left_ir:
        return _finite_meets_stripped(attack_right, pmap, w_right, attack_left.alpha, pmap.project(w_left))
    if right_ir:
        return _finite_meets_stripped(attack_left, pmap, w_left, attack_right.alpha, pmap.project(w_right))
    return _finite_overlap(
        [symbol_corruptions(attack_left, pmap, ev) for ev in w_left],
        [symbol_corruptions(attack_right, pmap, ev) for ev in w_right],
    )


def _finite_overlap(opts_left: list[frozenset[str]], opts_right: list[frozenset[str]]) -> bool:
    """Alignment reachability: do the two per-event option lists admit a
    common output string?"""
    n, m = len(opts_left), len(opts_right)
    reach = [[False] * (m + 1) for _ in range(n + 1)]
    reach[0][0] = True
    for j in range(1, m + 1):
        reach[0][j] = reach[0][j - 1] and EPSILON in opts_right[j - 1]
    for i in range(1, n + 1):
        skip_left = EPSILON in opts_left[i - 1]
        row, prev = reach[i], reach[i - 1]
        row[0] = prev[0] and skip_left
        common = opts_left[i - 1]
        for j in range(1, m + 1):
            row[j] = (
                (prev[j] and skip_left)
                or (row[j - 1] and EPSILON in opts_right[j - 1])
                or (prev[j - 1] and bool((common & opts_right[j - 1]) - {EPSILON}))
            )
    return reach[n][m]


def _finite_meets_stripped(
    attack: Attack,
    pmap: ObservationMap,
    w: Word,
    alpha: frozenset[str],
    other_projection: OutputWord,
) -> bool:
    """Can the finite attack produce, from w, some output whose
    alpha-stripped form equals the alpha-stripped other projection?"""
    target = strip_symbols(alpha, other_projection)
    m = len(target)
    reach = [True] + [False] * m
    free = alpha | {EPSILON}
    for ev in w:
        opts = symbol_corruptions(attack, pmap, ev)
        keep = bool(opts & free)
        new = [reach[0] and keep]
        for j in range(1, m + 1):
            new.append((reach[j] and keep) or (reach[j - 1] and target[j - 1] in opts))
        reach = new
    return reach[m]


def shared_corruption(
    alpha_left: Iterable[OutputSymbol],
    alpha_right: Iterable[OutputSymbol],
    v_left: OutputWord,
    v_right: OutputWord,
) -> OutputWord:
    """Construct one output word both insertion-removal attacks could have
    delivered: it strips to v_left under alpha_left and to v_right under
    alpha_right.

    Exists iff the two inputs agree after stripping the union of the two
    symbol sets; otherwise raises NoWitnessError.  Construction: start from
    v_left with its alpha_left symbols removed, then merge back in the
    alpha_right-stripped form of v_right, interleaving around the shared
    core of symbols that belong to neither set.
    """
    a_left = frozenset(alpha_left)
    a_right = frozenset(alpha_right)
    union = a_left | a_right
    if strip_symbols(union, v_left) != strip_symbols(union, v_right):
        raise NoWitnessError("no common corruption: strings differ outside the attacked symbols")
    base = strip_symbols(a_left, v_left)       # no alpha_left symbols left
    other = strip_symbols(a_right, v_right)    # no alpha_right symbols left
    out: list[OutputSymbol] = []
    i = j = 0
    while i < len(base) or j < len(other):
        if i < len(base) and base[i] in a_right:
            out.append(base[i])
            i += 1
        elif j < len(other) and other[j] in a_left:
            out.append(other[j])
            j += 1
        else:
            # Both cursors sit on the same core symbol.
            assert base[i] == other[j]
            out.append(base[i])
            i += 1
            j += 1
    return tuple(out)
