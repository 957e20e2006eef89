"""
Partial injections on a finite vertex set {0, ..., n-1}.
One partial injection per letter encodes the edges of a folded labeled graph.
"""

from dataclasses import dataclass
from typing import Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from .errors import ContractViolation

UNDEFINED = -1


@dataclass(frozen=True, slots=True)
class PartialInjection:
    """An injective partial map with its inverse kept alongside.

    ``forward[v] == w`` exactly when ``backward[w] == v``; UNDEFINED marks
    points outside the domain (resp. image).
    """
    forward: Tuple[int, ...]
    backward: Tuple[int, ...]

    def __post_init__(self):
        if len(self.forward) != len(self.backward):
            raise ContractViolation("forward and backward tables differ in size")
        for v, w in enumerate(self.forward):
            if w != UNDEFINED and self.backward[w] != v:
                raise ContractViolation(f"forward({v}) = {w} but backward({w}) = {self.backward[w]}")
        for w, v in enumerate(self.backward):
            if v != UNDEFINED and self.forward[v] != w:
                raise ContractViolation(f"backward({w}) = {v} but forward({v}) = {self.forward[v]}")

    @classmethod
    def empty(cls, n: int) -> 'PartialInjection':
        blank = (UNDEFINED,) * n
        return cls(blank, blank)

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[Tuple[int, int]]) -> 'PartialInjection':
        """Build from (v, w) pairs; raises ContractViolation if not injective."""
        forward = [UNDEFINED] * n
        backward = [UNDEFINED] * n
        for v, w in pairs:
            if not (0 <= v < n and 0 <= w < n):
                raise ContractViolation(f"pair ({v}, {w}) outside vertex set of size {n}")
            if forward[v] != UNDEFINED and forward[v] != w:
                raise ContractViolation(f"vertex {v} has two images")
            if backward[w] != UNDEFINED and backward[w] != v:
                raise ContractViolation(f"vertex {w} has two preimages")
            forward[v] = w
            backward[w] = v
        return cls(tuple(forward), tuple(backward))

    @classmethod
    def from_mapping(cls, n: int, mapping: Mapping[int, int]) -> 'PartialInjection':
        return cls.from_pairs(n, mapping.items())

    @property
    def size(self) -> int:
        """Number of points in the vertex set."""
        return len(self.forward)

    def image(self, v: int) -> Optional[int]:
        w = self.forward[v]
        return None if w == UNDEFINED else w

    def preimage(self, w: int) -> Optional[int]:
        v = self.backward[w]
        return None if v == UNDEFINED else v

    def domain(self) -> List[int]:
        return [v for v, w in enumerate(self.forward) if w != UNDEFINED]

    def pairs(self) -> Iterator[Tuple[int, int]]:
        """Defined (v, w) pairs in increasing v."""
        for v, w in enumerate(self.forward):
            if w != UNDEFINED:
                yield v, w

    def domain_size(self) -> int:
        return sum(1 for w in self.forward if w != UNDEFINED)

    def is_total(self) -> bool:
        return UNDEFINED not in self.forward

    def inverse(self) -> 'PartialInjection':
        return PartialInjection(self.backward, self.forward)

    def relabel(self, mapping: Sequence[int], new_size: int) -> 'PartialInjection':
        """Restrict to vertices with ``mapping[v] != UNDEFINED`` and rename them."""
        pairs = []
        for v, w in self.pairs():
            nv, nw = mapping[v], mapping[w]
            if nv != UNDEFINED and nw != UNDEFINED:
                pairs.append((nv, nw))
        return PartialInjection.from_pairs(new_size, pairs)

    def __len__(self) -> int:
        return self.domain_size()
