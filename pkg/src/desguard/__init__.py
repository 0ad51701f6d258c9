"""Supervisory control of discrete-event systems over a corrupted
observation channel: decision procedures for whether a specification can
still be enforced when an attacker rewrites, deletes, or inserts observed
symbols, plus synthesis and simulation of the resilient supervisor."""

from .automata import (
    Alphabet,
    Automaton,
    BoundedLanguage,
    ControllabilityResult,
    Event,
    Word,
    check_controllability,
    check_sublanguage,
    enumerate_language,
    word,
)
from .attacks import (
    EPSILON,
    Attack,
    AttackSet,
    IdentityAttack,
    InsertionRemovalAttack,
    ObservationMap,
    OutputSymbol,
    OutputWord,
    ReplacementRemovalAttack,
    corrupted_observations,
    corruption_overlap,
    could_observe,
    erasable,
    mask_observation_map,
    symbol_corruptions,
    shared_corruption,
    strip_symbols,
)
from .closedloop import (
    ClosedLoopReport,
    Discrepancy,
    LoopResult,
    compute_controlled_languages,
    default_simulation_depth,
    verify_closed_loop,
)
from .dot import export_dot
from .errors import (
    DesguardError,
    InputError,
    NoWitnessError,
    PreconditionError,
    UnsupportedError,
)
from .observability import (
    ProductAutomaton,
    Verdict,
    Witness,
    build_product_automaton,
    check_conventional_observability,
    check_observability,
    check_observability_insertion,
    check_observability_replacement,
    default_enumeration_depth,
    observability_by_enumeration,
    witness_violates_definition,
)
from .observer import (
    Estimate,
    Observer,
    SupervisorBank,
    build_insertion_observer,
    build_observer,
    enabled_events,
    supervisor_by_enumeration,
    unobservable_reach,
)
from .problem import (
    Problem,
    load_problem,
    parse_problem,
    problem_to_dict,
    save_problem,
)

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "Attack",
    "AttackSet",
    "Automaton",
    "BoundedLanguage",
    "ClosedLoopReport",
    "ControllabilityResult",
    "DesguardError",
    "Discrepancy",
    "EPSILON",
    "Estimate",
    "Event",
    "IdentityAttack",
    "InputError",
    "InsertionRemovalAttack",
    "LoopResult",
    "NoWitnessError",
    "ObservationMap",
    "Observer",
    "OutputSymbol",
    "OutputWord",
    "PreconditionError",
    "Problem",
    "ProductAutomaton",
    "ReplacementRemovalAttack",
    "SupervisorBank",
    "UnsupportedError",
    "Verdict",
    "Witness",
    "Word",
    "build_insertion_observer",
    "build_observer",
    "build_product_automaton",
    "check_controllability",
    "check_conventional_observability",
    "check_observability",
    "check_observability_insertion",
    "check_observability_replacement",
    "check_sublanguage",
    "compute_controlled_languages",
    "corrupted_observations",
    "corruption_overlap",
    "could_observe",
    "default_enumeration_depth",
    "default_simulation_depth",
    "enabled_events",
    "enumerate_language",
    "erasable",
    "symbol_corruptions",
    "export_dot",
    "load_problem",
    "mask_observation_map",
    "observability_by_enumeration",
    "parse_problem",
    "problem_to_dict",
    "save_problem",
    "shared_corruption",
    "strip_symbols",
    "supervisor_by_enumeration",
    "unobservable_reach",
    "verify_closed_loop",
    "witness_violates_definition",
    "word",
]
