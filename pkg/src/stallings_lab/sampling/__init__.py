"""Random subgroup generation."""

from .random_gen import (
    GraphBasedParams,
    WordBasedParams,
    acceptance_rate,
    derive_seed,
    make_rng,
    partial_injection_count,
    sample_graph_based,
    sample_partial_injection,
    sample_permutation,
    sample_reduced_word,
    sample_word_based,
)
from .distributions import (
    BaseDistribution,
    GraphBasedDistribution,
    WordBasedDistribution,
    create_distribution,
    register_distribution,
)

__all__ = [
    'GraphBasedParams',
    'WordBasedParams',
    'acceptance_rate',
    'derive_seed',
    'make_rng',
    'partial_injection_count',
    'sample_graph_based',
    'sample_partial_injection',
    'sample_permutation',
    'sample_reduced_word',
    'sample_word_based',
    'BaseDistribution',
    'GraphBasedDistribution',
    'WordBasedDistribution',
    'create_distribution',
    'register_distribution'
]
