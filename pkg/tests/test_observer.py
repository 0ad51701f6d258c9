from itertools import product as cartesian

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from desguard import (
    InputError,
    InsertionRemovalAttack,
    SupervisorBank,
    UnsupportedError,
    build_insertion_observer,
    build_observer,
    could_observe,
    enabled_events,
    enumerate_language,
    strip_symbols,
    supervisor_by_enumeration,
    unobservable_reach,
)

from .conftest import w
from .fixture_gen import sized_fixtures


def brute_estimates(spec, attack, pmap, max_len):
    """Definitional map from corrupted outputs (up to max_len) to the set
    of specification states consistent with them, via (state, output)
    fixpoint propagation.  Independent of the subset construction."""
    from desguard import EPSILON, symbol_corruptions

    pairs = {(spec.initial, ())}
    frontier = list(pairs)
    while frontier:
        state, y = frontier.pop()
        for ev in spec.alphabet.events:
            target = spec.transitions.get((state, ev))
            if target is None:
                continue
            for t in symbol_corruptions(attack, pmap, ev):
                ny = y if t == EPSILON else y + (t,)
                if len(ny) > max_len:
                    continue
                if (target, ny) not in pairs:
                    pairs.add((target, ny))
                    frontier.append((target, ny))
    by_output = {}
    for state, y in pairs:
        by_output.setdefault(y, set()).add(state)
    return by_output


def observer_estimates(observer, max_len):
    """Map from accepted outputs (up to max_len) to estimates, by walking
    the observer."""
    out = {(): observer.initial}
    frontier = [((), observer.initial)]
    symbols = sorted({t for _, t in observer.transitions})
    while frontier:
        y, estimate = frontier.pop()
        if len(y) == max_len:
            continue
        for t in symbols:
            target = observer.transitions.get((estimate, t))
            if target is not None and y + (t,) not in out:
                out[y + (t,)] = target
                frontier.append((y + (t,), target))
    return out


def test_unobservable_reach_demo(spec, erase, pmap):
    # c is unobservable and d is erasable, so from x2 the estimate flows on
    assert unobservable_reach(spec, erase, pmap, {"x2"}) == frozenset({"x2", "x3", "x0"})
    assert unobservable_reach(spec, erase, pmap, {"x0"}) == frozenset({"x0"})


def test_observer_tracks_definitional_estimates(spec, swap, erase, scramble, pmap):
    for attack in (swap, erase, scramble):
        observer = build_observer(spec, attack, pmap)
        assert len(observer.states) <= 2 ** len(spec.states)
        got = observer_estimates(observer, 5)
        want = brute_estimates(spec, attack, pmap, 5)
        assert set(got) == set(want)
        for y, estimate in got.items():
            assert estimate == frozenset(want[y]), (attack.name, y)


def test_observer_step_rejects_foreign_estimate(spec, swap, pmap):
    observer = build_observer(spec, swap, pmap)
    with pytest.raises(InputError):
        observer.step(frozenset({"nope"}), "a")


def test_observer_accepts_exactly_the_corruption_image(spec, swap, pmap):
    observer = build_observer(spec, swap, pmap)
    outputs = set(observer_estimates(observer, 4))
    alphabet = sorted(pmap.output_alphabet)
    words = list(enumerate_language(spec, 8))
    for n in range(5):
        for y in cartesian(alphabet, repeat=n):
            reachable = any(could_observe(swap, pmap, v, y) for v in words)
            assert (y in outputs) == reachable, y


def test_insertion_observer_runs_on_stripped_outputs(spec, pmap):
    attack = InsertionRemovalAttack(alpha=frozenset({"d"}))
    with pytest.raises(UnsupportedError):
        build_observer(spec, attack, pmap)
    observer = build_insertion_observer(spec, attack, pmap)
    # abcd strips to ab under the mask; the observer must accept it
    assert observer.accepts(strip_symbols(attack.alpha, pmap.project(w("abcd"))))
    assert not observer.accepts(tuple("ba"))


def test_enabled_events_union(spec):
    assert enabled_events(spec, {"x0"}) == frozenset({"a", "b", "d"})
    assert enabled_events(spec, {"x1"}) == frozenset({"b", "d"})
    assert enabled_events(spec, {"x0", "x2"}) == frozenset({"a", "b", "c", "d"})


def test_bank_excludes_observer_permanently(demo):
    bank = SupervisorBank.from_attacks(demo.spec, demo.attacks, demo.pmap)
    assert bank.alive == (True, True, True)
    # erase never rewrites a, so its observer dies on an output starting b
    fed = bank.feed_word(tuple("bb"))
    assert fed.alive[0]  # scramble survives anything of matching length
    # once dead, an observer never revives
    revived = fed.feed_word(tuple("a"))
    for was, now in zip(fed.alive, revived.alive):
        if not was:
            assert not now


def test_bank_decision_matches_enumeration_on_demo(demo):
    bank = SupervisorBank.from_attacks(demo.spec, demo.attacks, demo.pmap)
    alphabet = sorted(demo.pmap.output_alphabet)
    for n in range(4):
        for y in cartesian(alphabet, repeat=n):
            got = bank.feed_word(y).decision()
            want = supervisor_by_enumeration(demo.spec, demo.pmap, demo.attacks, y, 12)
            assert got == want, y


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=0, max_value=10_000))
def test_observer_matches_fixpoint_on_random_fixtures(seed):
    _, spec, pmap, attacks = next(sized_fixtures(seed, 1, 600, 10))
    for attack in attacks:
        observer = build_observer(spec, attack, pmap)
        assert len(observer.states) <= 2 ** len(spec.states)
        got = observer_estimates(observer, 4)
        want = brute_estimates(spec, attack, pmap, 4)
        assert set(got) == set(want)
        for y, estimate in got.items():
            assert estimate == frozenset(want[y])
