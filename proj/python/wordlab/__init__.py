"""Combinatorics on words: checkers, counters and bounded searches.

Words are plain strings; rationals are "p/q" strings.
"""

from ._wordlab import (
    BudgetError,
    DomainError,
    Error,
    ParseError,
    UnsupportedError,
    apply_morphism,
    avoid_long_powers,
    bounded_pcp,
    census,
    complexity,
    count_abelian_squares,
    count_distinct_squares,
    count_runs,
    distinct_squares,
    encounters,
    generate,
    growth_census,
    is_alpha_free,
    is_kabelian_npower,
    kabelian_equiv,
    least_period,
    longest_avoiding,
    longest_free_word,
    max_exponent,
    probe_ids,
    run_probe,
    runs,
    solve_word_equation,
    square_density,
)

__all__ = [name for name in dir() if not name.startswith("_")]
