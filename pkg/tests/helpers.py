"""
Brute-force oracles shared by the tests.
"""

from itertools import permutations, combinations
from typing import Iterator, List, Set

from stallings_lab.core.graph import StallingsGraph
from stallings_lab.core.partial_injection import PartialInjection
from stallings_lab.core.words import Word


def all_reduced_words(rank: int, max_len: int) -> List[Word]:
    """Every reduced word of length <= max_len, identity included."""
    letters = [a for a in range(1, rank + 1)] + [-a for a in range(1, rank + 1)]
    result = [Word()]
    frontier = [()]
    for _ in range(max_len):
        nxt = []
        for codes in frontier:
            for c in letters:
                if codes and codes[-1] == -c:
                    continue
                nxt.append(codes + (c,))
        result.extend(Word(c) for c in nxt)
        frontier = nxt
    return result


def accepted_words(g: StallingsGraph, max_len: int) -> Set[Word]:
    """Reduced basepoint loops of length <= max_len, by depth-first search."""
    found: Set[Word] = set()

    def walk(v: int, codes: tuple) -> None:
        if v == g.basepoint:
            found.add(Word(codes))
        if len(codes) == max_len:
            return
        for a in range(1, g.rank + 1):
            for code in (a, -a):
                if codes and codes[-1] == -code:
                    continue
                w = g.step(v, code)
                if w is not None:
                    walk(w, codes + (code,))

    walk(g.basepoint, ())
    return found


def all_partial_injections(n: int) -> Iterator[PartialInjection]:
    """Each partial injection on n points exactly once."""
    points = range(n)
    for k in range(n + 1):
        for domain in combinations(points, k):
            for image in permutations(points, k):
                yield PartialInjection.from_pairs(n, zip(domain, image))
