"""The formula graph of a non-betweenness instance and its complementary pairs.

Vertices are ordered pairs ``(i, j)`` of distinct elements, one per boolean
"i comes before j". Each constraint ``(a, b, c)`` contributes the equalities
``(a, b) == (c, b)`` and ``(b, a) == (b, c)`` as undirected edges. Components
then come in complementary pairs ``S`` / ``reverse(S)`` unless some component
contains both a pair and its reverse, which makes the instance unsatisfiable.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator

from singlecross.nb import NBInstance

Pair = tuple[int, int]
Edge = tuple[Pair, Pair]


def complement(u: Pair) -> Pair:
    return (u[1], u[0])


class UnionFind:
    """Disjoint sets over ``0..size-1`` with path halving and union by size."""

    def __init__(self, size: int):
        self.parent = list(range(size))
        self.size = [1] * size

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> int:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return ra
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        return ra


@dataclass(frozen=True)
class FormulaGraph:
    """Undirected graph on the ``n(n-1)`` ordered pairs of ``1..n``.

    Only edges are stored; vertices are implicit. Each edge is kept with its
    smaller endpoint first.
    """

    ground_size: int
    edges: frozenset[Edge]

    def __post_init__(self):
        n = self.ground_size
        canon = set()
        for u, v in self.edges:
            for i, j in (u, v):
                if i == j or not (1 <= i <= n and 1 <= j <= n):
                    raise ValueError(f"edge {u}-{v} has an invalid endpoint")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            canon.add((u, v) if u < v else (v, u))
        object.__setattr__(self, "edges", frozenset(canon))

    @property
    def vertex_count(self) -> int:
        return self.ground_size * (self.ground_size - 1)

    def vertices(self) -> Iterator[Pair]:
        n = self.ground_size
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if i != j:
                    yield (i, j)

    def index(self, u: Pair) -> int:
        """Bijection between ordered pairs and ``0..n*n-1`` (diagonal unused)."""
        return (u[0] - 1) * self.ground_size + (u[1] - 1)

    def pair(self, idx: int) -> Pair:
        return (idx // self.ground_size + 1, idx % self.ground_size + 1)

    def has_edge(self, u: Pair, v: Pair) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edges

    @cached_property
    def adjacency(self) -> dict[Pair, tuple[Pair, ...]]:
        adj: dict[Pair, list[Pair]] = {}
        for u, v in self.edges:
            adj.setdefault(u, []).append(v)
            adj.setdefault(v, []).append(u)
        return {u: tuple(sorted(vs)) for u, vs in adj.items()}

    def neighbors(self, u: Pair) -> tuple[Pair, ...]:
        return self.adjacency.get(u, ())

    @cached_property
    def _union_find(self) -> UnionFind:
        uf = UnionFind(self.ground_size ** 2)
        for u, v in self.edges:
            uf.union(self.index(u), self.index(v))
        return uf

    def connected(self, u: Pair, v: Pair) -> bool:
        uf = self._union_find
        return uf.find(self.index(u)) == uf.find(self.index(v))

    def components(self) -> list[frozenset[Pair]]:
        """Connected components (isolated vertices included), ordered by smallest member."""
        uf = self._union_find
        groups: dict[int, list[Pair]] = {}
        for u in self.vertices():
            groups.setdefault(uf.find(self.index(u)), []).append(u)
        return sorted((frozenset(g) for g in groups.values()), key=min)

    def shortest_path(self, source: Pair, target: Pair) -> tuple[Pair, ...] | None:
        """Breadth-first path, exploring neighbours in sorted order."""
        prev: dict[Pair, Pair | None] = {source: None}
        queue = deque([source])
        while queue:
            u = queue.popleft()
            if u == target:
                path = []
                node: Pair | None = u
                while node is not None:
                    path.append(node)
                    node = prev[node]
                return tuple(reversed(path))
            for w in self.neighbors(u):
                if w not in prev:
                    prev[w] = u
                    queue.append(w)
        return None


@dataclass(frozen=True)
class ComplementaryPair:
    component: frozenset[Pair]
    complement: frozenset[Pair]

    @property
    def is_singleton(self) -> bool:
        return len(self.component) == 1

    @property
    def smallest(self) -> Pair:
        return min(self.component)


@dataclass(frozen=True)
class ComplementaryPartition:
    """All components paired with their reversed images.

    In each pair ``component`` is the side holding the lexicographically
    smallest ordered pair; pairs are listed by that smallest pair.
    """

    ground_size: int
    pairs: tuple[ComplementaryPair, ...]

    @property
    def k(self) -> int:
        return len(self.pairs)

    def non_singletons(self) -> tuple[ComplementaryPair, ...]:
        return tuple(p for p in self.pairs if not p.is_singleton)

    def singletons(self) -> tuple[ComplementaryPair, ...]:
        return tuple(p for p in self.pairs if p.is_singleton)

    def assignment(self, bits) -> dict[Pair, bool]:
        """Variable values given one bit per pair: its component gets the bit,
        the complement gets the negation."""
        if len(bits) != len(self.pairs):
            raise ValueError(f"need {len(self.pairs)} bits, got {len(bits)}")
        out = {}
        for bit, cp in zip(bits, self.pairs):
            for u in cp.component:
                out[u] = bool(bit)
            for u in cp.complement:
                out[u] = not bit
        return out


@dataclass(frozen=True)
class ComplementClash:
    """``vertex`` and its reverse lie in one component; ``path`` joins them."""

    vertex: Pair
    path: tuple[Pair, ...]

    def verify(self, g: FormulaGraph) -> bool:
        p = self.path
        if len(p) < 2 or p[0] != self.vertex or p[-1] != complement(self.vertex):
            return False
        return all(g.has_edge(a, b) for a, b in zip(p, p[1:]))


def build_formula_graph(inst: NBInstance) -> FormulaGraph:
    edges = set()
    for a, b, c in inst.triples:
        edges.add(((a, b), (c, b)))
        edges.add(((b, a), (b, c)))
    return FormulaGraph(inst.ground_size, frozenset(edges))


def complementary_pairs_partition(g: FormulaGraph) -> ComplementaryPartition | ComplementClash:
    for u in g.vertices():
        if g.connected(u, complement(u)):
            path = g.shortest_path(u, complement(u))
            assert path is not None
            return ComplementClash(u, path)

    pairs = []
    seen: set[Pair] = set()
    for comp in g.components():
        first = min(comp)
        if first in seen:
            continue
        rev = frozenset(complement(u) for u in comp)
        seen.update(comp)
        seen.update(rev)
        pairs.append(ComplementaryPair(comp, rev))
    return ComplementaryPartition(g.ground_size, tuple(pairs))
