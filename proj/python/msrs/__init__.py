from ._core import (
    ContractError,
    ParseError,
    SearchBudgetError,
    SizeBudgetError,
    gantt_svg,
    generate,
    generator_profiles,
    lower_bound_basic,
    parse_instance,
    reduce,
    select_T_32,
    select_T_53,
    solve,
    validate,
    verify_gap,
    write_instance,
)

__all__ = [
    "ContractError",
    "ParseError",
    "SearchBudgetError",
    "SizeBudgetError",
    "gantt_svg",
    "generate",
    "generator_profiles",
    "lower_bound_basic",
    "parse_instance",
    "reduce",
    "select_T_32",
    "select_T_53",
    "solve",
    "validate",
    "verify_gap",
    "write_instance",
]
