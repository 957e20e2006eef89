"""
Subgroup-level operations on Stallings graphs: intersection through the
pullback, join by wedge-and-fold, the strengthened Hanna Neumann sum, indices,
free bases and conjugation.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union
import logging
import math

from .errors import ContractViolation, NotASubgroupError, RankMismatchError
from .graph import (
    Edge,
    StallingsGraph,
    components,
    connected_component,
    cycle_rank,
    fold_from_words,
    fold_graph,
    is_covering_of_rose,
    is_member,
    reduced_rank,
    spanning_tree,
    trim_to_core,
)
from .partial_injection import UNDEFINED
from .words import Word, reduce

logger = logging.getLogger(__name__)

INFINITE = math.inf
Index = Union[int, float]


@dataclass(frozen=True)
class Subgroup:
    """A finitely generated subgroup of the free group of rank ``ambient_rank``."""
    graph: StallingsGraph
    generators: Optional[Tuple[Word, ...]] = None
    provenance: Mapping[str, object] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if not (self.graph.folded and self.graph.core):
            raise ContractViolation("a subgroup graph must be folded and core")

    @classmethod
    def from_words(cls, rank: int, generators: Sequence[Word]) -> 'Subgroup':
        words = tuple(reduce(g) for g in generators)
        return cls(fold_from_words(rank, words), words)

    @classmethod
    def from_graph(cls, graph: StallingsGraph, **provenance) -> 'Subgroup':
        """Wrap a graph, cutting it down to the core of its basepoint component."""
        if not graph.core:
            graph = trim_to_core(connected_component(graph, graph.basepoint))
        return cls(graph, None, dict(provenance))

    @classmethod
    def full(cls, rank: int) -> 'Subgroup':
        return cls(StallingsGraph.rose(rank), tuple(Word((a,)) for a in range(1, rank + 1)))

    @classmethod
    def trivial(cls, rank: int) -> 'Subgroup':
        return cls(StallingsGraph.trivial(rank), ())

    @property
    def ambient_rank(self) -> int:
        return self.graph.rank

    @property
    def rank(self) -> int:
        return cycle_rank(self.graph)

    @property
    def reduced_rank(self) -> int:
        return reduced_rank(self.graph)

    def contains(self, w) -> bool:
        return is_member(self.graph, w)

    def generating_words(self) -> List[Word]:
        """The recorded generators, or a free basis read off the graph."""
        if self.generators is not None:
            return list(self.generators)
        return basis(self)


def _check_ranks(H: Subgroup, K: Subgroup) -> None:
    if H.ambient_rank != K.ambient_rank:
        raise RankMismatchError(H.ambient_rank, K.ambient_rank)


@dataclass(frozen=True)
class PullbackGraph:
    """The product of two graphs over the rose, restricted to shared-label edges.

    Vertex i of ``graph`` is the pair ``pairs[i]``. Only pairs touched by some
    product edge are materialized, plus the basepoint pair which is always vertex 0.
    """
    graph: StallingsGraph
    pairs: Tuple[Tuple[int, int], ...]
    index: Mapping[Tuple[int, int], int] = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        if not self.index:
            object.__setattr__(self, "index", {pair: i for i, pair in enumerate(self.pairs)})

    def vertex_of(self, pair: Tuple[int, int]) -> Optional[int]:
        return self.index.get(pair)


def pullback(Y: StallingsGraph, Z: StallingsGraph) -> PullbackGraph:
    if Y.rank != Z.rank:
        raise RankMismatchError(Y.rank, Z.rank)
    index: Dict[Tuple[int, int], int] = {(Y.basepoint, Z.basepoint): 0}

    def vertex(pair: Tuple[int, int]) -> int:
        if pair not in index:
            index[pair] = len(index)
        return index[pair]

    edges: List[Edge] = []
    for a in range(1, Y.rank + 1):
        z_pairs = list(Z.map_for(a).pairs())
        for v, w in Y.map_for(a).pairs():
            for v2, w2 in z_pairs:
                edges.append((vertex((v, v2)), a, vertex((w, w2))))
    graph = StallingsGraph.from_edges(Y.rank, len(index), edges, 0, core=False)
    return PullbackGraph(graph, tuple(index), index)


def intersect(H: Subgroup, K: Subgroup) -> Subgroup:
    """H ∩ K: the core of the pullback component at (basepoint, basepoint)."""
    _check_ranks(H, K)
    product = pullback(H.graph, K.graph)
    meet = trim_to_core(connected_component(product.graph, 0))
    logger.debug("intersect: pullback %d vertices, meet %d vertices",
                 product.graph.vertex_count, meet.vertex_count)
    return Subgroup(meet)


def _offset_edges(g: StallingsGraph, offset: int) -> List[Edge]:
    return [(v + offset, a, w + offset) for v, a, w in g.edges()]


def join(H: Subgroup, K: Subgroup) -> Subgroup:
    """H ∨ K: wedge the two graphs at their basepoints and fold."""
    _check_ranks(H, K)
    n = H.graph.vertex_count
    edges = _offset_edges(H.graph, 0) + _offset_edges(K.graph, n)
    graph = fold_graph(H.ambient_rank, n + K.graph.vertex_count, edges,
                       basepoint=H.graph.basepoint,
                       identify=[(H.graph.basepoint, n + K.graph.basepoint)])
    return Subgroup(graph)


def shnc_left_side(H: Subgroup, K: Subgroup) -> int:
    """Sum of max(0, E - V) over all pullback components.

    Components with a cycle are the double cosets HgK with H ∩ gKg⁻¹ nontrivial;
    trees and their hanging tails add nothing, so no trimming is needed.
    """
    _check_ranks(H, K)
    product = pullback(H.graph, K.graph).graph
    total = 0
    for component in components(product):
        edges = sum(1 for v in component for m in product.maps if m.forward[v] != UNDEFINED)
        total += max(0, edges - len(component))
    return total


def index_in_F(H: Subgroup) -> Index:
    """|F : H|: the vertex count for a covering of the rose, else infinite."""
    return H.graph.vertex_count if is_covering_of_rose(H.graph) else INFINITE


def basis(H: Subgroup) -> List[Word]:
    """A free basis from a breadth-first spanning tree: one word per non-tree edge."""
    tree = spanning_tree(H.graph)
    return [reduce(tree.paths[v].codes + (a,) + tree.paths[w].inverse().codes)
            for v, a, w in tree.non_tree_edges]


def express_in_basis(H: Subgroup, w) -> Word:
    """Rewrite an element of H over ``basis(H)``: letter j+1 is basis word j.

    Each crossing of the j-th non-tree edge contributes ±(j+1).
    """
    tree = spanning_tree(H.graph)
    crossing = tree.edge_index()
    g = H.graph
    v = g.basepoint
    rewritten = []
    for code in reduce(w):
        a = abs(code)
        nxt = g.step(v, code)
        if nxt is None:
            raise NotASubgroupError(f"word {reduce(w)} does not lie in the subgroup")
        source = v if code > 0 else nxt
        j = crossing.get((a, source))
        if j is not None:
            rewritten.append(j + 1 if code > 0 else -(j + 1))
        v = nxt
    if v != g.basepoint:
        raise NotASubgroupError(f"word {reduce(w)} does not lie in the subgroup")
    return reduce(rewritten)


def relative_index(H_sub: Subgroup, H_sup: Subgroup) -> Index:
    """|H_sup : H_sub|, by rewriting H_sub over a basis of H_sup."""
    _check_ranks(H_sub, H_sup)
    generators = basis(H_sub)
    for g in generators:
        if not H_sup.contains(g):
            raise NotASubgroupError(f"generator {g} is not in the larger subgroup")
    sup_rank = H_sup.rank
    if sup_rank == 0:
        return 1
    rewritten = [express_in_basis(H_sup, g) for g in generators]
    return index_in_F(Subgroup.from_words(sup_rank, rewritten))


def conjugate(H: Subgroup, w) -> Subgroup:
    """w H w⁻¹: a fresh path spelling w into the old basepoint, folded and trimmed."""
    w = reduce(w)
    if w.is_identity():
        return H
    w.check_alphabet(H.ambient_rank)
    n = H.graph.vertex_count
    edges = _offset_edges(H.graph, 0)
    start = n
    path = [start] + [n + i for i in range(1, len(w))] + [H.graph.basepoint]
    for i, code in enumerate(w.codes):
        u, v = path[i], path[i + 1]
        edges.append((u, code, v) if code > 0 else (v, -code, u))
    graph = fold_graph(H.ambient_rank, n + len(w), edges, basepoint=start)
    return Subgroup(graph)
