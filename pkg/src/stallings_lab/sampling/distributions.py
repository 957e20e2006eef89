"""
Distribution registry.
Experiments name a random subgroup distribution by tag; the registry builds it.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Callable, Dict, List, Tuple

import numpy as np

from ..core.errors import ContractViolation
from ..core.subgroup import Subgroup
from .random_gen import (
    DEFAULT_MAX_REJECTIONS,
    GraphBasedParams,
    WordBasedParams,
    sample_graph_based,
    sample_word_based,
)


class BaseDistribution(ABC):
    """Base class for distributions; pairs are two independent draws."""

    @property
    @abstractmethod
    def tag(self) -> str:
        """Label written to the distribution column of experiment CSVs."""

    @abstractmethod
    def sample(self, rank: int, param: int, rng: np.random.Generator) -> Subgroup:
        """Draw one subgroup."""

    def sample_pair(self, rank: int, param: int,
                    rng: np.random.Generator) -> Tuple[Subgroup, Subgroup]:
        return self.sample(rank, param, rng), self.sample(rank, param, rng)


@dataclass(frozen=True)
class GraphBasedDistribution(BaseDistribution):
    """param is the vertex count."""
    max_rejections: int = DEFAULT_MAX_REJECTIONS
    finite_index: bool = False

    @property
    def tag(self) -> str:
        return "finite" if self.finite_index else "graph"

    def sample(self, rank: int, param: int, rng: np.random.Generator) -> Subgroup:
        return sample_graph_based(
            GraphBasedParams(rank, param, self.max_rejections, self.finite_index), rng)


@dataclass(frozen=True)
class WordBasedDistribution(BaseDistribution):
    """param is the exclusive word-length bound n."""
    generator_count: int = 4

    @property
    def tag(self) -> str:
        return f"word-k{self.generator_count}"

    def sample(self, rank: int, param: int, rng: np.random.Generator) -> Subgroup:
        return sample_word_based(WordBasedParams(rank, self.generator_count, param), rng)


class DistributionRegistry:
    """Registry for creating distributions by name."""
    def __init__(self):
        self._factories: Dict[str, Callable[..., BaseDistribution]] = {}

    def register_distribution(self, name: str, factory: Callable[..., BaseDistribution]) -> None:
        """Register a new distribution name."""
        self._factories[name] = factory

    def create_distribution(self, name: str, **kwargs) -> BaseDistribution:
        """Create a distribution instance."""
        if name not in self._factories:
            raise ContractViolation(f"Unknown distribution: {name}")
        return self._factories[name](**kwargs)

    def get_available_distributions(self) -> List[str]:
        return list(self._factories.keys())


# Global distribution registry instance
distribution_registry = DistributionRegistry()

distribution_registry.register_distribution("graph", GraphBasedDistribution)
distribution_registry.register_distribution("word", WordBasedDistribution)
distribution_registry.register_distribution(
    "finite", lambda **kwargs: GraphBasedDistribution(finite_index=True, **kwargs))


def create_distribution(name: str, **kwargs) -> BaseDistribution:
    """Create a distribution from the global registry."""
    return distribution_registry.create_distribution(name, **kwargs)


def register_distribution(name: str, factory: Callable[..., BaseDistribution]) -> None:
    """Register a new distribution in the global registry."""
    distribution_registry.register_distribution(name, factory)
