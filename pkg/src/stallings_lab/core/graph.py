"""
Stallings graphs: basepointed labeled graphs stored as one partial injection
per letter, plus the folding, tracing, trimming and rank operations on them.

Letters are numbered 1..rank; ``maps[a - 1]`` holds the a-labelled edges.
"""

from collections import deque
from dataclasses import dataclass, field
from typing import Deque, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple
import logging

import networkx as nx

from .errors import ContractViolation
from .partial_injection import PartialInjection, UNDEFINED
from .union_find import UnionFind
from .words import Word, reduce

logger = logging.getLogger(__name__)

Edge = Tuple[int, int, int]  # (source, letter, target)


@dataclass(frozen=True)
class StallingsGraph:
    """A basepointed labeled graph with deterministic labels.

    Every value is immutable; operations return new graphs. Since each letter's
    edges form a partial injection the graph is always an immersion into the rose.
    """
    rank: int
    vertex_count: int
    maps: Tuple[PartialInjection, ...]
    basepoint: int = 0
    folded: bool = True
    core: bool = False

    def __post_init__(self):
        if self.rank < 1:
            raise ContractViolation(f"alphabet rank must be at least 1, got {self.rank}")
        if self.vertex_count < 1:
            raise ContractViolation("a graph needs at least one vertex")
        if len(self.maps) != self.rank:
            raise ContractViolation(f"expected {self.rank} letter maps, got {len(self.maps)}")
        for m in self.maps:
            if m.size != self.vertex_count:
                raise ContractViolation("letter map size does not match vertex count")
        if not 0 <= self.basepoint < self.vertex_count:
            raise ContractViolation(f"basepoint {self.basepoint} out of range")

    @classmethod
    def from_edges(cls,
                   rank: int,
                   vertex_count: int,
                   edges: Iterable[Edge],
                   basepoint: int = 0,
                   core: Optional[bool] = None) -> 'StallingsGraph':
        """Assemble a graph from (v, a, w) triples; edges must already be deterministic."""
        per_letter: List[List[Tuple[int, int]]] = [[] for _ in range(rank)]
        for v, a, w in edges:
            if not 1 <= a <= rank:
                raise ContractViolation(f"edge label {a} outside alphabet of rank {rank}")
            per_letter[a - 1].append((v, w))
        maps = tuple(PartialInjection.from_pairs(vertex_count, pairs) for pairs in per_letter)
        graph = cls(rank, vertex_count, maps, basepoint)
        if core is None:
            core = is_connected(graph) and not has_stray_leaves(graph)
        return cls(rank, vertex_count, maps, basepoint, True, core)

    @classmethod
    def rose(cls, rank: int) -> 'StallingsGraph':
        """One vertex with a loop per letter: the whole free group."""
        loop = PartialInjection((0,), (0,))
        return cls(rank, 1, (loop,) * rank, 0, True, True)

    @classmethod
    def trivial(cls, rank: int) -> 'StallingsGraph':
        """One vertex and no edges: the trivial subgroup."""
        return cls(rank, 1, (PartialInjection.empty(1),) * rank, 0, True, True)

    def map_for(self, a: int) -> PartialInjection:
        return self.maps[a - 1]

    def step(self, v: int, code: int) -> Optional[int]:
        """Follow one signed letter from v; None when the edge is missing.

        Letters outside the alphabet have no edges anywhere.
        """
        if not 0 < abs(code) <= self.rank:
            return None
        m = self.maps[abs(code) - 1]
        w = m.forward[v] if code > 0 else m.backward[v]
        return None if w == UNDEFINED else w

    def edges(self) -> Iterator[Edge]:
        """All edges sorted by (letter, source)."""
        for a, m in enumerate(self.maps, start=1):
            for v, w in m.pairs():
                yield v, a, w

    @property
    def edge_count(self) -> int:
        return sum(m.domain_size() for m in self.maps)

    def degree(self, v: int) -> int:
        """Incoming plus outgoing edges over all letters; a loop counts twice."""
        return sum((m.forward[v] != UNDEFINED) + (m.backward[v] != UNDEFINED) for m in self.maps)

    def neighbours(self, v: int) -> Iterator[int]:
        for m in self.maps:
            if m.forward[v] != UNDEFINED:
                yield m.forward[v]
            if m.backward[v] != UNDEFINED:
                yield m.backward[v]


class _Folder:
    """Worklist folding over a union-find of vertices.

    ``out[v][a]`` / ``inc[v][a]`` hold one a-neighbour of each class root. A
    second neighbour under the same label queues the pair for identification.
    """

    def __init__(self, rank: int):
        self.rank = rank
        self.uf = UnionFind()
        self.out: List[Dict[int, int]] = []
        self.inc: List[Dict[int, int]] = []
        self.pending: Deque[Tuple[int, int]] = deque()
        self.folds = 0

    def add_vertex(self) -> int:
        self.out.append({})
        self.inc.append({})
        return self.uf.add()

    def add_edge(self, u: int, a: int, v: int) -> None:
        u, v = self.uf.find(u), self.uf.find(v)
        self._attach(self.out[u], a, v)
        self._attach(self.inc[v], a, u)

    def identify(self, u: int, v: int) -> None:
        self.pending.append((u, v))

    def _attach(self, table: Dict[int, int], a: int, x: int) -> None:
        existing = table.get(a)
        if existing is None:
            table[a] = x
        elif self.uf.find(existing) != self.uf.find(x):
            self.pending.append((existing, x))

    def run(self) -> None:
        find = self.uf.find
        while self.pending:
            x, y = self.pending.popleft()
            rx, ry = find(x), find(y)
            if rx == ry:
                continue
            root = self.uf.union(rx, ry)
            other = ry if root == rx else rx
            self.folds += 1
            out_other, inc_other = self.out[other], self.inc[other]
            self.out[other], self.inc[other] = {}, {}
            for a, t in out_other.items():
                self._attach(self.out[root], a, t)
            for a, s in inc_other.items():
                self._attach(self.inc[root], a, s)

    def result(self, basepoint: int) -> StallingsGraph:
        find = self.uf.find
        roots = sorted({find(v) for v in range(len(self.uf))})
        index = {r: i for i, r in enumerate(roots)}
        edges = [(index[r], a, index[find(t)]) for r in roots for a, t in self.out[r].items()]
        graph = StallingsGraph.from_edges(self.rank, len(roots), edges, index[find(basepoint)], core=False)
        return trim_to_core(connected_component(graph, graph.basepoint))


def fold_graph(rank: int,
               vertex_count: int,
               edges: Iterable[Edge],
               basepoint: int = 0,
               identify: Iterable[Tuple[int, int]] = ()) -> StallingsGraph:
    """Fold an arbitrary labeled graph (plus vertex identifications) and trim it.

    Edges may repeat labels at a vertex; the result is the folded core graph of
    the basepoint component, in canonical numbering.
    """
    folder = _Folder(rank)
    for _ in range(vertex_count):
        folder.add_vertex()
    for v, a, w in edges:
        if not 1 <= a <= rank:
            raise ContractViolation(f"edge label {a} outside alphabet of rank {rank}")
        folder.add_edge(v, a, w)
    for u, v in identify:
        folder.identify(u, v)
    folder.run()
    logger.debug("Folded %d vertices with %d identifications", vertex_count, folder.folds)
    return folder.result(basepoint)


def fold_from_words(rank: int, generators: Sequence[Word]) -> StallingsGraph:
    """The Stallings graph of the subgroup generated by ``generators``.

    Builds a wedge of subdivided loops at the basepoint, folds to a fixed point
    and trims the leaves; an empty generator list gives the trivial subgroup.
    """
    if rank < 1:
        raise ContractViolation(f"alphabet rank must be at least 1, got {rank}")
    folder = _Folder(rank)
    base = folder.add_vertex()
    for generator in generators:
        w = reduce(generator)
        w.check_alphabet(rank)
        current = base
        for i, code in enumerate(w.codes):
            nxt = base if i == len(w) - 1 else folder.add_vertex()
            if code > 0:
                folder.add_edge(current, code, nxt)
            else:
                folder.add_edge(nxt, -code, current)
            current = nxt
    folder.run()
    graph = folder.result(base)
    logger.debug("fold_from_words: %d generators -> %d vertices, %d edges",
                 len(generators), graph.vertex_count, graph.edge_count)
    return graph


def trace(g: StallingsGraph, start: int, w: Iterable[int]) -> Optional[int]:
    """Read w from ``start``; None the first time a transition is missing."""
    if not g.folded:
        raise ContractViolation("trace needs a folded graph")
    v: Optional[int] = start
    for code in w:
        v = g.step(v, code)
        if v is None:
            return None
    return v


def is_member(g: StallingsGraph, w: Iterable[int]) -> bool:
    """Whether the reduced form of w labels a basepoint loop."""
    return trace(g, g.basepoint, reduce(w)) == g.basepoint


def bfs_order(g: StallingsGraph, start: int, allowed: Optional[Sequence[bool]] = None) -> List[int]:
    """Vertices reachable from ``start`` (edges undirected), in canonical order.

    Exploration goes letter by letter, forward edge before backward edge, which
    makes the order a basepointed-isomorphism invariant of folded graphs.
    """
    seen = [False] * g.vertex_count
    seen[start] = True
    order = [start]
    queue = deque(order)
    while queue:
        u = queue.popleft()
        for m in g.maps:
            for w in (m.forward[u], m.backward[u]):
                if w != UNDEFINED and not seen[w] and (allowed is None or allowed[w]):
                    seen[w] = True
                    order.append(w)
                    queue.append(w)
    return order


def _renumber(g: StallingsGraph, order: Sequence[int]) -> StallingsGraph:
    mapping = [UNDEFINED] * g.vertex_count
    for new, old in enumerate(order):
        mapping[old] = new
    maps = tuple(m.relabel(mapping, len(order)) for m in g.maps)
    graph = StallingsGraph(g.rank, len(order), maps, 0, g.folded, False)
    core = not has_stray_leaves(graph)
    return StallingsGraph(g.rank, len(order), maps, 0, g.folded, core)


def connected_component(g: StallingsGraph, v: int) -> StallingsGraph:
    """The component of v, renumbered canonically with v as basepoint 0."""
    return _renumber(g, bfs_order(g, v))


def components(g: StallingsGraph) -> List[List[int]]:
    """Undirected connected components, ordered by their smallest vertex."""
    seen = [False] * g.vertex_count
    result = []
    for v in range(g.vertex_count):
        if not seen[v]:
            component = bfs_order(g, v)
            for u in component:
                seen[u] = True
            result.append(sorted(component))
    return result


def is_connected(g: StallingsGraph) -> bool:
    return len(bfs_order(g, g.basepoint)) == g.vertex_count


def has_stray_leaves(g: StallingsGraph) -> bool:
    """Whether some vertex other than the basepoint has total degree at most 1."""
    return any(g.degree(v) <= 1 for v in range(g.vertex_count) if v != g.basepoint)


def is_core(g: StallingsGraph) -> bool:
    return is_connected(g) and not has_stray_leaves(g)


def trim_to_core(g: StallingsGraph) -> StallingsGraph:
    """Repeatedly delete non-basepoint vertices of degree <= 1."""
    degree = [g.degree(v) for v in range(g.vertex_count)]
    alive = [True] * g.vertex_count
    queue = deque(v for v in range(g.vertex_count) if v != g.basepoint and degree[v] <= 1)
    removed = 0
    while queue:
        v = queue.popleft()
        if not alive[v]:
            continue
        alive[v] = False
        removed += 1
        for u in g.neighbours(v):
            if alive[u]:
                degree[u] -= 1
                if u != g.basepoint and degree[u] <= 1:
                    queue.append(u)
    trimmed = _renumber(g, bfs_order(g, g.basepoint, alive))
    if removed:
        logger.debug("trim_to_core removed %d vertices", removed)
    return StallingsGraph(trimmed.rank, trimmed.vertex_count, trimmed.maps, 0, trimmed.folded, True)


def _require_connected(g: StallingsGraph, operation: str) -> None:
    if not is_connected(g):
        raise ContractViolation(f"{operation} needs a connected graph")


def cycle_rank(g: StallingsGraph) -> int:
    """E - V + 1, the rank of the fundamental group."""
    _require_connected(g, "cycle_rank")
    return g.edge_count - g.vertex_count + 1


def reduced_rank(g: StallingsGraph) -> int:
    """max(0, E - V): the reduced rank of the subgroup."""
    _require_connected(g, "reduced_rank")
    return max(0, g.edge_count - g.vertex_count)


def is_covering_of_rose(g: StallingsGraph) -> bool:
    """Every letter map is a total bijection."""
    if not g.folded:
        raise ContractViolation("is_covering_of_rose needs a folded graph")
    return all(m.is_total() for m in g.maps)


def canonical_form(g: StallingsGraph) -> Tuple[int, int, Tuple[Tuple[int, ...], ...]]:
    """Renumbering-invariant key of the basepoint component."""
    c = connected_component(g, g.basepoint)
    return c.rank, c.vertex_count, tuple(m.forward for m in c.maps)


def isomorphic(g: StallingsGraph, h: StallingsGraph) -> bool:
    """Basepointed labeled isomorphism of the basepoint components."""
    return canonical_form(g) == canonical_form(h)


@dataclass(frozen=True)
class SpanningTree:
    """A breadth-first spanning tree of the basepoint component.

    ``paths[v]`` spells the tree path from the basepoint to v; ``non_tree_edges``
    lists the remaining edges in (letter, source) order.
    """
    paths: Dict[int, Word]
    non_tree_edges: List[Edge] = field(default_factory=list)

    def edge_index(self) -> Dict[Tuple[int, int], int]:
        """(letter, source) -> position among the non-tree edges."""
        return {(a, v): i for i, (v, a, _) in enumerate(self.non_tree_edges)}


def spanning_tree(g: StallingsGraph) -> SpanningTree:
    paths: Dict[int, Tuple[int, ...]] = {g.basepoint: ()}
    tree_edges = set()
    queue = deque([g.basepoint])
    while queue:
        u = queue.popleft()
        for a, m in enumerate(g.maps, start=1):
            w = m.forward[u]
            if w != UNDEFINED and w not in paths:
                paths[w] = paths[u] + (a,)
                tree_edges.add((a, u))
                queue.append(w)
            w = m.backward[u]
            if w != UNDEFINED and w not in paths:
                paths[w] = paths[u] + (-a,)
                tree_edges.add((a, w))
                queue.append(w)
    non_tree = [(v, a, w) for v, a, w in g.edges() if v in paths and (a, v) not in tree_edges]
    return SpanningTree({v: reduce(p) for v, p in paths.items()}, non_tree)


def to_networkx(g: StallingsGraph) -> nx.MultiDiGraph:
    """Export for drawing or independent graph checks; edges carry ``label``."""
    graph = nx.MultiDiGraph(rank=g.rank, basepoint=g.basepoint)
    graph.add_nodes_from(range(g.vertex_count))
    for v, a, w in g.edges():
        graph.add_edge(v, w, label=a)
    return graph
