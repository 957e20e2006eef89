"""Conjecture checks, counterexample constructions and experiments."""

from .report import ConjectureReport, analyze_pair
from .examples import (
    GUZMAN_NAMES,
    example_guzman,
    example_iehnc,
    guzman_generators,
    guzman_meet_generators,
    iehnc_generators,
)
from .experiment import (
    CSV_HEADER,
    ExperimentRow,
    SearchResult,
    rows_to_csv,
    run_experiment,
    run_point,
    search_counterexample,
    write_csv,
)

__all__ = [
    'ConjectureReport',
    'analyze_pair',
    'GUZMAN_NAMES',
    'example_guzman',
    'example_iehnc',
    'guzman_generators',
    'guzman_meet_generators',
    'iehnc_generators',
    'CSV_HEADER',
    'ExperimentRow',
    'SearchResult',
    'rows_to_csv',
    'run_experiment',
    'run_point',
    'search_counterexample',
    'write_csv'
]
