"""Shelf arrangement under order-sensitive consumer choice."""

from .choice import (
    choose,
    choose_rational,
    choose_satisficing,
    choose_successive,
    single_top,
    top_cycle,
)
from .core import (
    BetweennessInstance,
    Buyer,
    Catalog,
    Direction,
    Instance,
    InstanceTooLarge,
    InvalidInstance,
    LinearPreference,
    Money,
    NotApplicable,
    Rule,
    Tournament,
    evaluate_list,
    validate_betweenness,
    validate_instance,
)
from .solvers import (
    Solution,
    solve_auto,
    solve_exact,
    solve_pa_sc_singleton,
    solve_rc,
    solve_sepa_sat,
    solve_sepa_sc_small_tc,
)

__version__ = "0.1.0"

__all__ = [
    "BetweennessInstance", "Buyer", "Catalog", "Direction", "Instance", "InstanceTooLarge",
    "InvalidInstance", "LinearPreference", "Money", "NotApplicable", "Rule", "Solution",
    "Tournament", "choose", "choose_rational", "choose_satisficing", "choose_successive",
    "evaluate_list", "single_top", "solve_auto", "solve_exact", "solve_pa_sc_singleton",
    "solve_rc", "solve_sepa_sat", "solve_sepa_sc_small_tc", "top_cycle",
    "validate_betweenness", "validate_instance",
]
