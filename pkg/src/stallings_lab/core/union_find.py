"""Disjoint-set forest over dense integer ids, used by folding and component splitting."""

from typing import Dict, List


class UnionFind:
    """Union by rank with path compression over the ids 0..n-1.

    New ids can be appended with ``add``; folding grows the set while it works.
    """

    def __init__(self, n: int = 0):
        self._parent: List[int] = list(range(n))
        self._rank: List[int] = [0] * n
        self.components = n

    def __len__(self) -> int:
        return len(self._parent)

    def __repr__(self) -> str:
        return f"UnionFind({len(self)} ids, {self.components} classes)"

    def add(self) -> int:
        new_id = len(self._parent)
        self._parent.append(new_id)
        self._rank.append(0)
        self.components += 1
        return new_id

    def find(self, a: int) -> int:
        root = a
        while self._parent[root] != root:
            root = self._parent[root]
        # compress
        while self._parent[a] != root:
            self._parent[a], a = root, self._parent[a]
        return root

    def union(self, a: int, b: int) -> int:
        """Merge the classes of a and b; returns the surviving root."""
        root_a, root_b = self.find(a), self.find(b)
        if root_a == root_b:
            return root_a
        if self._rank[root_a] < self._rank[root_b]:
            root_a, root_b = root_b, root_a
        self._parent[root_b] = root_a
        if self._rank[root_a] == self._rank[root_b]:
            self._rank[root_a] += 1
        self.components -= 1
        return root_a

    def classes(self) -> Dict[int, List[int]]:
        """Root -> members, members in increasing order."""
        result: Dict[int, List[int]] = {}
        for a in range(len(self._parent)):
            result.setdefault(self.find(a), []).append(a)
        return result
