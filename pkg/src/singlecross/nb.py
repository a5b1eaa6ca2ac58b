"""Non-betweenness constraints over voters and a brute-force solver.

A triple ``(i, j, k)`` forbids ``j`` from sitting strictly between ``i`` and
``k`` on the axis. ``(i, j, k)`` and ``(k, j, i)`` forbid the same orders, so
instances store the representative with the smaller outer element first.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from singlecross.profile import AnyProfile, as_weak_order

Triple = tuple[int, int, int]

DEFAULT_BRUTE_FORCE_CAP = 9


class CapExceededError(ValueError):
    """An exhaustive search was asked to run above its configured size cap."""


def canonical_triple(t: Iterable[int]) -> Triple:
    i, j, k = t
    return (i, j, k) if i < k else (k, j, i)


@dataclass(frozen=True)
class Axis:
    """A linear order of ``1..n``; ``order[0]`` is the leftmost element."""

    order: tuple[int, ...]

    def __post_init__(self):
        order = tuple(int(x) for x in self.order)
        if sorted(order) != list(range(1, len(order) + 1)):
            raise ValueError(f"axis must be a permutation of 1..{len(order)}, got {order}")
        object.__setattr__(self, "order", order)

    @classmethod
    def identity(cls, n: int) -> Axis:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def parse(cls, text: str) -> Axis:
        """Parse a comma- or whitespace-separated list such as ``"2,1,3"``."""
        tokens = text.replace(",", " ").split()
        try:
            return cls(tuple(int(t) for t in tokens))
        except ValueError as exc:
            raise ValueError(f"bad axis {text!r}: {exc}") from None

    @property
    def n(self) -> int:
        return len(self.order)

    @cached_property
    def position(self) -> dict[int, int]:
        return {v: p for p, v in enumerate(self.order)}

    def reversed(self) -> Axis:
        return Axis(self.order[::-1])

    def __str__(self) -> str:
        return ",".join(map(str, self.order))


@dataclass(frozen=True)
class NBInstance:
    ground_size: int
    triples: frozenset[Triple]

    def __post_init__(self):
        if self.ground_size < 0:
            raise ValueError("ground size must be non-negative")
        canon = set()
        for t in self.triples:
            t = tuple(int(x) for x in t)
            if len(t) != 3:
                raise ValueError(f"constraint {t} is not a triple")
            if len(set(t)) != 3:
                raise ValueError(f"constraint {t} repeats an element")
            if not all(1 <= x <= self.ground_size for x in t):
                raise ValueError(f"constraint {t} leaves ground set 1..{self.ground_size}")
            canon.add(canonical_triple(t))
        object.__setattr__(self, "triples", frozenset(canon))

    def sorted_triples(self) -> list[Triple]:
        return sorted(self.triples)

    def __contains__(self, t) -> bool:
        return canonical_triple(t) in self.triples

    def to_text(self) -> str:
        lines = [str(self.ground_size)]
        lines.extend(f"{i} {j} {k}" for i, j, k in self.sorted_triples())
        return "\n".join(lines) + "\n"


def parse_nb_instance(text: str) -> NBInstance:
    """Parse ``"n"`` followed by one ``"i j k"`` triple per line (``#`` comments)."""
    content = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        toks = raw.split("#", 1)[0].split()
        if toks:
            content.append((lineno, toks))
    if not content:
        raise ValueError("empty input: expected ground set size 'n'")
    lineno, head = content[0]
    if len(head) != 1 or not head[0].isdigit():
        raise ValueError(f"line {lineno}: expected ground set size, got {' '.join(head)!r}")
    n = int(head[0])
    triples = []
    for lineno, toks in content[1:]:
        if len(toks) != 3 or not all(t.isdigit() for t in toks):
            raise ValueError(f"line {lineno}: expected 'i j k', got {' '.join(toks)!r}")
        t = tuple(int(x) for x in toks)
        if len(set(t)) != 3 or not all(1 <= x <= n for x in t):
            raise ValueError(f"line {lineno}: triple {t} must be distinct elements of 1..{n}")
        triples.append(t)
    return NBInstance(n, frozenset(triples))


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def extract_nb_constraints(p: AnyProfile) -> NBInstance:
    """Triples (i, j, k) such that some candidates a, b have
    a over b for i and k but b over a for j."""
    w = as_weak_order(p)
    patterns = set()
    for a, b in itertools.combinations(range(w.m), 2):
        patterns.add(tuple(_sign(row[a] - row[b]) for row in w.scores))
    triples = set()
    for pat in patterns:
        pos = [v for v, s in enumerate(pat, 1) if s > 0]
        neg = [v for v, s in enumerate(pat, 1) if s < 0]
        for outer, middle in ((pos, neg), (neg, pos)):
            if not middle:
                continue
            for i, k in itertools.combinations(outer, 2):
                for j in middle:
                    triples.add((i, j, k))
    return NBInstance(w.n, frozenset(triples))


def order_satisfies(inst: NBInstance, axis: Axis) -> bool:
    """True iff no constraint has its middle element strictly between its outer ones."""
    if axis.n != inst.ground_size:
        raise ValueError(f"axis has {axis.n} elements, instance has {inst.ground_size}")
    pos = axis.position
    for i, j, k in inst.triples:
        pi, pj, pk = pos[i], pos[j], pos[k]
        if pi < pj < pk or pk < pj < pi:
            return False
    return True


def brute_force_solve(inst: NBInstance, cap: int = DEFAULT_BRUTE_FORCE_CAP) -> Axis | None:
    """Lexicographically smallest satisfying order, found by trying all n! orders."""
    n = inst.ground_size
    if n > cap:
        raise CapExceededError(f"brute force over {n}! orders exceeds cap n <= {cap}")
    triples = [(i - 1, j - 1, k - 1) for i, j, k in inst.triples]
    pos = [0] * n
    for perm in itertools.permutations(range(n)):
        for p, v in enumerate(perm):
            pos[v] = p
        if not any(pos[i] < pos[j] < pos[k] or pos[k] < pos[j] < pos[i] for i, j, k in triples):
            return Axis(tuple(v + 1 for v in perm))
    return None
