"""Exhaustive case checks on small partially filled approval matrices.

Each template is a 4 candidate x 5 voter matrix with eight free cells named
``x y z t u v p q``. For every 0/1 filling, the formula graph of the filled
matrix is built and the template's hypothesis and conclusion are evaluated
on it. A template holds when no filling satisfies the hypothesis while
failing the conclusion.

Colour conditions only make sense when the formula graph splits into
complementary pairs, so every hypothesis also requires that it does.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Callable

from singlecross.formula_graph import (
    ComplementClash,
    ComplementaryPartition,
    FormulaGraph,
    Pair,
    build_formula_graph,
    complementary_pairs_partition,
)
from singlecross.nb import extract_nb_constraints
from singlecross.profile import ApprovalProfile

FREE_CELLS = ("x", "y", "z", "t", "u", "v", "p", "q")


class CaseView:
    """Queries about the graphs induced by one filled matrix."""

    def __init__(self, profile: ApprovalProfile):
        self.profile = profile
        self.graph: FormulaGraph = build_formula_graph(extract_nb_constraints(profile))

    @cached_property
    def partition(self) -> ComplementaryPartition | None:
        part = complementary_pairs_partition(self.graph)
        return None if isinstance(part, ComplementClash) else part

    @cached_property
    def _pair_of(self) -> dict[Pair, int]:
        return {
            u: idx
            for idx, cp in enumerate(self.partition.pairs)
            for u in cp.component | cp.complement
        }

    def edge(self, u: Pair, v: Pair) -> bool:
        return self.graph.has_edge(u, v)

    def color(self, u: Pair) -> int:
        """Index of the complementary pair holding ``u``; equal for ``u`` and its reverse."""
        return self._pair_of[u]

    def in_colorful(self, u: Pair) -> bool:
        return not self.partition.pairs[self.color(u)].is_singleton

    def distinct_colors_or_absent(self, third: Pair, first: Pair, second: Pair) -> bool:
        """``third`` is missing from the colourful graph or differs in colour from both others."""
        if not self.in_colorful(third):
            return True
        return self.color(third) not in (self.color(first), self.color(second))


@dataclass(frozen=True)
class LemmaTemplate:
    id: str
    description: str
    skeleton: tuple[str, ...]
    hypothesis: Callable[[CaseView], bool]
    conclusion: Callable[[CaseView], bool]

    def __post_init__(self):
        cells = [tok for row in self.skeleton for tok in row.split()]
        free = [tok for tok in cells if tok not in ("0", "1")]
        if sorted(free) != sorted(FREE_CELLS) or len(cells) != 20:
            raise ValueError(f"template {self.id} must be 4x5 with free cells {FREE_CELLS}")

    def fill(self, values) -> ApprovalProfile:
        assign = dict(zip(FREE_CELLS, values))
        rows = [[int(assign.get(tok, tok)) for tok in row.split()] for row in self.skeleton]
        return ApprovalProfile.from_rows(rows)


@dataclass(frozen=True)
class CaseReport:
    template_id: str
    total: int
    consistent: int
    violations: int
    consistent_assignments: tuple[tuple[int, ...], ...]
    violating_assignments: tuple[tuple[int, ...], ...]

    @property
    def inconsistent(self) -> int:
        return self.total - self.consistent

    def summary(self) -> str:
        return f"consistent={self.consistent} violations={self.violations}"


def _all_edges(*edges: tuple[Pair, Pair]) -> Callable[[CaseView], bool]:
    return lambda c: all(c.edge(u, v) for u, v in edges)


def _colored_hypothesis(first_edge: tuple[Pair, Pair]) -> Callable[[CaseView], bool]:
    def hyp(c: CaseView) -> bool:
        if not (c.edge(*first_edge) and c.edge((2, 3), (2, 5))):
            return False
        if c.partition is None:
            return False
        if c.color((1, 2)) == c.color((2, 3)):
            return False
        return c.distinct_colors_or_absent((1, 3), (1, 2), (2, 3))

    return hyp


def _edge_hypothesis(first_edge: tuple[Pair, Pair]) -> Callable[[CaseView], bool]:
    def hyp(c: CaseView) -> bool:
        return (
            c.edge(*first_edge)
            and c.edge((2, 3), (2, 5))
            and not c.edge((1, 2), (3, 2))
            and not c.edge((1, 2), (5, 2))
            and c.partition is not None
        )

    return hyp


# Fixed cells force the constraints (2,1,4) and (3,2,5).
SKELETON_A = ("0 1 x 1 z", "1 0 y 0 t", "u 0 1 p 1", "v 1 0 q 0")
# Fixed cells force the constraints (1,2,4) and (3,2,5).
SKELETON_B = ("0 1 x 0 z", "1 0 y 1 t", "u 0 1 p 1", "v 1 0 q 0")

TEMPLATES: dict[str, LemmaTemplate] = {
    t.id: t
    for t in (
        LemmaTemplate(
            "L13",
            "(1,2)-(1,4) and (2,3)-(2,5) with distinct colours, (1,3) absent or a third colour "
            "=> (1,3)-(1,5), (4,3)-(4,5), (2,3)-(4,3), (2,5)-(4,5)",
            SKELETON_A,
            _colored_hypothesis(((1, 2), (1, 4))),
            _all_edges(((1, 3), (1, 5)), ((4, 3), (4, 5)), ((2, 3), (4, 3)), ((2, 5), (4, 5))),
        ),
        LemmaTemplate(
            "L14",
            "(1,2)-(4,2) and (2,3)-(2,5) with distinct colours, (1,3) absent or a third colour "
            "=> (4,3)-(1,3), (4,3)-(4,5), (1,3)-(1,5), (4,5)-(1,5)",
            SKELETON_B,
            _colored_hypothesis(((1, 2), (4, 2))),
            _all_edges(((4, 3), (1, 3)), ((4, 3), (4, 5)), ((1, 3), (1, 5)), ((4, 5), (1, 5))),
        ),
        LemmaTemplate(
            "L15",
            "(1,2)-(1,4) and (2,3)-(2,5), no (1,2)-(3,2) or (1,2)-(5,2) => (1,3)-(1,5)",
            SKELETON_A,
            _edge_hypothesis(((1, 2), (1, 4))),
            _all_edges(((1, 3), (1, 5))),
        ),
        LemmaTemplate(
            "L16",
            "(1,2)-(4,2) and (2,3)-(2,5), no (1,2)-(3,2) or (1,2)-(5,2) => (1,3)-(1,5)",
            SKELETON_B,
            _edge_hypothesis(((1, 2), (4, 2))),
            _all_edges(((1, 3), (1, 5))),
        ),
    )
}


def enumerate_lemma_cases(t: LemmaTemplate | str) -> CaseReport:
    """Try all 256 fillings, listed in binary counting order of (x, y, z, t, u, v, p, q)."""
    if isinstance(t, str):
        try:
            t = TEMPLATES[t]
        except KeyError:
            raise ValueError(f"unknown template {t!r}; choose from {', '.join(TEMPLATES)}") from None
    consistent, violating = [], []
    total = 0
    for values in itertools.product((0, 1), repeat=len(FREE_CELLS)):
        total += 1
        case = CaseView(t.fill(values))
        if not t.hypothesis(case):
            continue
        consistent.append(values)
        if not t.conclusion(case):
            violating.append(values)
    return CaseReport(
        t.id, total, len(consistent), len(violating), tuple(consistent), tuple(violating)
    )
