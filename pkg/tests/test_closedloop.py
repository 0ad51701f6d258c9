import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from desguard import (
    InputError,
    InsertionRemovalAttack,
    UnsupportedError,
    compute_controlled_languages,
    default_simulation_depth,
    enumerate_language,
    verify_closed_loop,
)

from .fixture_gen import sized_fixtures


def test_single_attack_loops_reproduce_the_specification(demo):
    reference = enumerate_language(demo.spec, 7).as_set
    for name in ["scramble", "swap", "erase"]:
        problem = demo.restrict([name])
        result = compute_controlled_languages(
            problem.plant, problem.spec, problem.pmap, problem.attacks, 0, 7
        )
        assert result.lower.as_set == reference, name
        assert result.upper.as_set == reference, name


def test_lower_is_contained_in_upper(demo):
    result = compute_controlled_languages(
        demo.plant, demo.spec, demo.pmap, demo.attacks, 1, 7
    )
    assert result.lower.as_set <= result.upper.as_set


def test_swap_erase_pair_shows_a_discrepancy(demo):
    problem = demo.restrict(["swap", "erase"])
    report = verify_closed_loop(problem.plant, problem.spec, problem.pmap, problem.attacks, 7)
    assert not report.observability.holds
    assert report.controllability.holds
    assert not report.enforced
    assert report.consistent
    reference = enumerate_language(problem.spec, 7).as_set
    for disc in report.discrepancies:
        result = report.results[disc.attack_index]
        language = result.lower.as_set if disc.side == "lower" else result.upper.as_set
        if disc.kind == "extra":
            assert disc.word in language and disc.word not in reference
        else:
            assert disc.word in reference and disc.word not in language


def test_full_report_clean_for_each_single_attack(demo):
    for name in ["scramble", "swap", "erase"]:
        problem = demo.restrict([name])
        report = verify_closed_loop(problem.plant, problem.spec, problem.pmap, problem.attacks, 7)
        assert report.conditions_hold
        assert report.enforced
        assert report.consistent


def test_simulation_rejects_infinite_attacks(demo):
    attacks = (InsertionRemovalAttack(alpha=frozenset({"a"})),)
    with pytest.raises(UnsupportedError):
        verify_closed_loop(demo.plant, demo.spec, demo.pmap, attacks, 5)


def test_attack_index_validated(demo):
    with pytest.raises(InputError):
        compute_controlled_languages(demo.plant, demo.spec, demo.pmap, demo.attacks, 9, 5)


def test_default_depth_covers_the_cycle_twice(demo):
    assert default_simulation_depth(demo.spec) == 8


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=0, max_value=10_000))
def test_verified_fixtures_enforce_the_specification(seed):
    plant, spec, pmap, attacks = next(sized_fixtures(seed, 1, 400, 10))
    report = verify_closed_loop(plant, spec, pmap, attacks, 6)
    assert report.consistent
    reference = enumerate_language(spec, 6).as_set
    if report.conditions_hold:
        for result in report.results:
            assert result.lower.as_set == reference
            assert result.upper.as_set == reference
    for result in report.results:
        assert result.lower.as_set <= result.upper.as_set
        assert all(plant.generates(w) for w in result.upper)
