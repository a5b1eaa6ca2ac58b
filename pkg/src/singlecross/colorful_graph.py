"""Edge-coloured directed graph on voters built from a complementary partition.

Every non-singleton complementary pair becomes one colour whose edges are the
ordered pairs of its representative component. Choosing an orientation means
keeping or reversing each colour as a whole; the instance is solvable iff
some choice leaves the graph acyclic.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from singlecross.formula_graph import ComplementaryPair, ComplementaryPartition

DiEdge = tuple[int, int]


@dataclass(frozen=True)
class Digraph:
    """Plain directed graph on ``1..n``."""

    n: int
    edges: frozenset[DiEdge]

    @cached_property
    def successors(self) -> dict[int, tuple[int, ...]]:
        out: dict[int, list[int]] = {v: [] for v in range(1, self.n + 1)}
        for u, v in self.edges:
            out[u].append(v)
        return {u: tuple(sorted(vs)) for u, vs in out.items()}


def find_cycle(d: Digraph) -> tuple[int, ...] | None:
    """A directed cycle ``(v0, v1, ..., vk)`` meaning v0 -> v1 -> ... -> vk -> v0, or None.

    Depth-first search starting from the smallest unvisited vertex and
    visiting successors in increasing order, so the witness is deterministic.
    """
    succ = d.successors
    state = dict.fromkeys(succ, 0)  # 0 new, 1 on stack, 2 done
    for root in range(1, d.n + 1):
        if state[root]:
            continue
        stack = [(root, iter(succ[root]))]
        path = [root]
        state[root] = 1
        while stack:
            node, it = stack[-1]
            for w in it:
                if state[w] == 1:
                    return tuple(path[path.index(w):])
                if state[w] == 0:
                    state[w] = 1
                    stack.append((w, iter(succ[w])))
                    path.append(w)
                    break
            else:
                state[node] = 2
                stack.pop()
                path.pop()
    return None


def is_acyclic(d: Digraph) -> bool:
    return find_cycle(d) is None


def smallest_first_topological_order(d: Digraph) -> tuple[int, ...] | None:
    """Kahn's algorithm always emitting the smallest available vertex; None on a cycle."""
    indeg = dict.fromkeys(range(1, d.n + 1), 0)
    for _, v in d.edges:
        indeg[v] += 1
    heap = [v for v, k in indeg.items() if k == 0]
    heapq.heapify(heap)
    order = []
    succ = d.successors
    while heap:
        u = heapq.heappop(heap)
        order.append(u)
        for w in succ[u]:
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(heap, w)
    return tuple(order) if len(order) == d.n else None


@dataclass(frozen=True)
class Orientation:
    """One keep/flip decision per colour (True = reverse that colour)."""

    flip: tuple[bool, ...]

    def __post_init__(self):
        object.__setattr__(self, "flip", tuple(bool(f) for f in self.flip))

    @classmethod
    def keep_all(cls, k: int) -> Orientation:
        return cls((False,) * k)

    @classmethod
    def from_bits(cls, bits: str) -> Orientation:
        bits = bits.strip()
        if any(ch not in "01" for ch in bits):
            raise ValueError(f"orientation must be a string of 0/1, got {bits!r}")
        return cls(tuple(ch == "1" for ch in bits))

    def __len__(self) -> int:
        return len(self.flip)

    def __str__(self) -> str:
        return "".join("1" if f else "0" for f in self.flip)


@dataclass(frozen=True)
class ColorfulGraph:
    """Directed voter graph whose edges carry colour ids ``0..len(colors)-1``.

    ``colors[c]`` is the sorted base-orientation edge list of colour ``c``;
    colours are ordered by their smallest edge. ``singleton_pairs`` keeps the
    one-edge complementary pairs that were left out.
    """

    n: int
    colors: tuple[tuple[DiEdge, ...], ...]
    singleton_pairs: tuple[ComplementaryPair, ...] = ()

    def __post_init__(self):
        colors = tuple(tuple(sorted((int(u), int(v)) for u, v in es)) for es in self.colors)
        seen: dict[frozenset[int], int] = {}
        for c, es in enumerate(colors):
            if not es:
                raise ValueError(f"color {c} has no edges")
            for u, v in es:
                if u == v:
                    raise ValueError(f"self-loop {u}->{v} in color {c}")
                if not (1 <= u <= self.n and 1 <= v <= self.n):
                    raise ValueError(f"edge {u}->{v} leaves vertex set 1..{self.n}")
                key = frozenset((u, v))
                if key in seen:
                    raise ValueError(f"voters {u}, {v} joined by more than one edge")
                seen[key] = c
        object.__setattr__(self, "colors", colors)

    @property
    def num_colors(self) -> int:
        return len(self.colors)

    @cached_property
    def _edge_index(self) -> dict[frozenset[int], tuple[int, DiEdge]]:
        return {
            frozenset(e): (c, e) for c, es in enumerate(self.colors) for e in es
        }

    def edge(self, u: int, v: int) -> tuple[int, DiEdge] | None:
        """``(color, base_direction)`` of the edge between u and v, if any."""
        return self._edge_index.get(frozenset((u, v)))

    def color_of(self, u: int, v: int) -> int | None:
        hit = self.edge(u, v)
        return None if hit is None else hit[0]

    @cached_property
    def neighbors(self) -> dict[int, frozenset[int]]:
        adj: dict[int, set[int]] = {v: set() for v in range(1, self.n + 1)}
        for es in self.colors:
            for u, v in es:
                adj[u].add(v)
                adj[v].add(u)
        return {v: frozenset(s) for v, s in adj.items()}


@dataclass(frozen=True)
class MonochromaticCycle:
    color: int
    cycle: tuple[int, ...]

    def verify(self, g: ColorfulGraph) -> bool:
        if not 0 <= self.color < g.num_colors or len(self.cycle) < 2:
            return False
        es = set(g.colors[self.color])
        cyc = self.cycle
        return all((cyc[i], cyc[(i + 1) % len(cyc)]) in es for i in range(len(cyc)))


@dataclass(frozen=True)
class Biclique:
    """Colour whose edges are exactly ``A x B`` in base orientation."""

    color: int
    A: frozenset[int]
    B: frozenset[int]

    @property
    def is_star(self) -> bool:
        return len(self.A) == 1 or len(self.B) == 1


@dataclass(frozen=True)
class NotBiclique:
    color: int
    sources: frozenset[int]
    targets: frozenset[int]


def build_colorful_graph(part: ComplementaryPartition) -> ColorfulGraph:
    kept = sorted(part.non_singletons(), key=lambda cp: cp.smallest)
    colors = tuple(tuple(sorted(cp.component)) for cp in kept)
    return ColorfulGraph(part.ground_size, colors, part.singletons())


def has_monochromatic_cycle(g: ColorfulGraph) -> MonochromaticCycle | None:
    for c, es in enumerate(g.colors):
        cycle = find_cycle(Digraph(g.n, frozenset(es)))
        if cycle is not None:
            return MonochromaticCycle(c, cycle)
    return None


def three_colored_triangles(g: ColorfulGraph) -> list[tuple[DiEdge, DiEdge, DiEdge]]:
    """Triangles ``u < v < w`` whose edges carry three distinct colours.

    Each triangle is reported as its base-oriented edges between (u, v),
    (v, w) and (u, w), in that order. Edge directions are ignored for matching.
    """
    out = []
    adj = g.neighbors
    for u in range(1, g.n + 1):
        for v in sorted(x for x in adj[u] if x > u):
            for w in sorted(x for x in adj[u] & adj[v] if x > v):
                cuv, euv = g.edge(u, v)
                cvw, evw = g.edge(v, w)
                cuw, euw = g.edge(u, w)
                if len({cuv, cvw, cuw}) == 3:
                    out.append((euv, evw, euw))
    return out


def triangle_colors(g: ColorfulGraph) -> set[int]:
    """Colours taking part in at least one three-coloured triangle."""
    return {g.color_of(*e) for tri in three_colored_triangles(g) for e in tri}


def biclique_decomposition(g: ColorfulGraph, color: int) -> Biclique | NotBiclique:
    if not 0 <= color < g.num_colors:
        raise IndexError(f"color {color} out of range 0..{g.num_colors - 1}")
    es = g.colors[color]
    A = frozenset(u for u, _ in es)
    B = frozenset(v for _, v in es)
    if A.isdisjoint(B) and len(es) == len(A) * len(B):
        return Biclique(color, A, B)
    return NotBiclique(color, A, B)


def apply_orientation(g: ColorfulGraph, o: Orientation | Sequence[bool]) -> Digraph:
    flips = o.flip if isinstance(o, Orientation) else tuple(bool(f) for f in o)
    if len(flips) != g.num_colors:
        raise ValueError(f"orientation has {len(flips)} entries, graph has {g.num_colors} colors")
    edges = set()
    for flip, es in zip(flips, g.colors):
        edges.update((v, u) if flip else (u, v) for u, v in es)
    return Digraph(g.n, frozenset(edges))


def orientations(k: int) -> Iterable[Orientation]:
    """All ``2**k`` orientations in binary counting order (colour 0 most significant)."""
    for bits in itertools.product((False, True), repeat=k):
        yield Orientation(bits)
