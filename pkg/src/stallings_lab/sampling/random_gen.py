"""
Random subgroups of free groups.

Word-based: the subgroup generated by k random reduced words of bounded length.
Graph-based: one uniform random partial injection per letter, redrawn until the
graph is connected and has no leaf other than the basepoint.
"""

from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Callable, Tuple
import logging

import numpy as np

from ..core.errors import ContractViolation, SamplingError
from ..core.event_system import SampleEvent, publish_event
from ..core.graph import StallingsGraph, has_stray_leaves, is_connected
from ..core.partial_injection import PartialInjection
from ..core.subgroup import Subgroup
from ..core.words import Word

logger = logging.getLogger(__name__)

DEFAULT_MAX_REJECTIONS = 10_000

_MASK64 = (1 << 64) - 1
_SEED_MULTIPLIER = 0x9E3779B97F4A7C15


@dataclass(frozen=True)
class WordBasedParams:
    ambient_rank: int
    generator_count: int
    max_len: int  # words have length < max_len

    def __post_init__(self):
        if self.ambient_rank < 2:
            raise ContractViolation("word-based sampling needs ambient rank >= 2")
        if self.generator_count < 1:
            raise ContractViolation("word-based sampling needs at least one generator")
        if self.max_len < 2:
            raise ContractViolation("max_len must be at least 2")


@dataclass(frozen=True)
class GraphBasedParams:
    ambient_rank: int
    vertex_count: int
    max_rejections: int = DEFAULT_MAX_REJECTIONS
    finite_index: bool = False  # draw permutations: coverings of the rose only

    def __post_init__(self):
        if self.ambient_rank < 2:
            raise ContractViolation("graph-based sampling needs ambient rank >= 2")
        if self.vertex_count < 1:
            raise ContractViolation("graph-based sampling needs at least one vertex")
        if self.max_rejections < 1:
            raise ContractViolation("max_rejections must be at least 1")


def derive_seed(master: int, index: int) -> int:
    """Seed of the index-th task stream: XOR with an odd multiple, then splitmix64."""
    z = (master ^ (_SEED_MULTIPLIER * index)) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def make_rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed & _MASK64)


def _letter_code(slot: int) -> int:
    # slots 2i and 2i+1 are x_{i+1} and its inverse
    return slot // 2 + 1 if slot % 2 == 0 else -(slot // 2 + 1)


def sample_reduced_word(r: int, length: int, rng: np.random.Generator) -> Word:
    """Uniform over the 2r(2r-1)^(length-1) reduced words of exactly this length."""
    if length < 1:
        raise ContractViolation("word length must be at least 1")
    slot = int(rng.integers(2 * r))
    codes = [_letter_code(slot)]
    for _ in range(length - 1):
        forbidden = slot ^ 1
        nxt = int(rng.integers(2 * r - 1))
        if nxt >= forbidden:
            nxt += 1
        slot = nxt
        codes.append(_letter_code(slot))
    return Word(tuple(codes))


def sample_word_based(p: WordBasedParams, rng: np.random.Generator) -> Subgroup:
    """Fold k words whose lengths are uniform on 1..max_len-1, drawn independently."""
    lengths = rng.integers(1, p.max_len, size=p.generator_count)
    words = [sample_reduced_word(p.ambient_rank, int(n), rng) for n in lengths]
    return Subgroup.from_words(p.ambient_rank, words)


@lru_cache(maxsize=None)
def _domain_size_cdf(n: int) -> Tuple[float, ...]:
    """Cumulative probabilities of the domain size k, weight C(n,k)^2 k!."""
    weights = [comb(n, k) ** 2 * factorial(k) for k in range(n + 1)]
    total = sum(weights)
    cumulative, running = [], 0
    for w in weights:
        running += w
        cumulative.append(float(Fraction(running, total)))
    return tuple(cumulative)


def partial_injection_count(n: int) -> int:
    """Number of partial injections on n points."""
    return sum(comb(n, k) ** 2 * factorial(k) for k in range(n + 1))


def sample_partial_injection(n: int, rng: np.random.Generator) -> PartialInjection:
    """Exactly uniform partial injection on n points.

    Domain size by its count weight, then a uniform domain, a uniform image and
    a uniform bijection between them.
    """
    if n < 1:
        raise ContractViolation("partial injections need at least one point")
    k = min(bisect_right(_domain_size_cdf(n), rng.random()), n)
    domain = np.sort(rng.choice(n, size=k, replace=False))
    image = rng.choice(n, size=k, replace=False)
    return PartialInjection.from_pairs(n, zip(domain.tolist(), image.tolist()))


def sample_permutation(n: int, rng: np.random.Generator) -> PartialInjection:
    """Uniform total bijection on n points."""
    perm = rng.permutation(n).tolist()
    return PartialInjection.from_pairs(n, enumerate(perm))


def sample_graph_based(p: GraphBasedParams, rng: np.random.Generator) -> Subgroup:
    """Rejection sampler over tuples of partial injections.

    The basepoint may be a leaf; accepted graphs are returned untrimmed and are
    folded by construction.
    """
    draw: Callable[[int, np.random.Generator], PartialInjection] = (
        sample_permutation if p.finite_index else sample_partial_injection)
    n, r = p.vertex_count, p.ambient_rank
    for attempt in range(1, p.max_rejections + 1):
        maps = tuple(draw(n, rng) for _ in range(r))
        graph = StallingsGraph(r, n, maps, 0, True, False)
        if is_connected(graph) and not has_stray_leaves(graph):
            publish_event(SampleEvent("finite" if p.finite_index else "graph", attempt, n))
            return Subgroup(StallingsGraph(r, n, maps, 0, True, True), None, {"attempt": attempt})
    logger.warning("Rejection budget of %d exhausted (rank %d, %d vertices)",
                   p.max_rejections, r, n)
    raise SamplingError(f"no connected core graph on {n} vertices after "
                        f"{p.max_rejections} attempts", p.max_rejections)


def acceptance_rate(rank: int, vertex_count: int, attempts: int, rng: np.random.Generator) -> float:
    """Empirical probability that one draw of the graph-based sampler is accepted."""
    accepted = 0
    for _ in range(attempts):
        maps = tuple(sample_partial_injection(vertex_count, rng) for _ in range(rank))
        graph = StallingsGraph(rank, vertex_count, maps, 0, True, False)
        accepted += is_connected(graph) and not has_stray_leaves(graph)
    return accepted / attempts
