"""Generalized Hamming weights of binary projective Reed-Muller codes."""

from ._prmghw import (
    BudgetExceeded,
    Error,
    InvalidInput,
    RangeError,
    antilex_prefix,
    block_length,
    canonical_decompose,
    code_dimension,
    colex_prefix,
    gamma_reduction,
    generator_text,
    ghw_canonical,
    ghw_closed,
    ghw_special,
    hierarchy,
    lower_bound_recursion,
    min_shadow_bruteforce,
    oracle_ghw,
    rho_decompose,
    run_cli,
    shorten_table,
)

__all__ = [
    "BudgetExceeded",
    "Error",
    "InvalidInput",
    "RangeError",
    "antilex_prefix",
    "block_length",
    "canonical_decompose",
    "code_dimension",
    "colex_prefix",
    "gamma_reduction",
    "generator_text",
    "ghw_canonical",
    "ghw_closed",
    "ghw_special",
    "hierarchy",
    "lower_bound_recursion",
    "min_shadow_bruteforce",
    "oracle_ghw",
    "rho_decompose",
    "run_cli",
    "shorten_table",
]
