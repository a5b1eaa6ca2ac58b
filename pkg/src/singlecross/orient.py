"""Choosing colour orientations and reading an axis off an acyclic one."""

from __future__ import annotations

from dataclasses import dataclass

from singlecross.colorful_graph import (
    Biclique,
    ColorfulGraph,
    Digraph,
    Orientation,
    apply_orientation,
    biclique_decomposition,
    build_colorful_graph,
    find_cycle,
    has_monochromatic_cycle,
    smallest_first_topological_order,
    triangle_colors,
)
from singlecross.formula_graph import (
    ComplementClash,
    build_formula_graph,
    complementary_pairs_partition,
)
from singlecross.nb import Axis, CapExceededError, NBInstance

DEFAULT_FPT_CAP = 20


@dataclass(frozen=True)
class StructureViolation:
    """The min-rule could not be applied or produced a cycle.

    Cannot happen for graphs induced by approval ballots; signals a bug or
    an input outside that class (general NB instances, 3+ score levels).
    """

    reason: str
    color: int | None = None
    cycle: tuple[int, ...] | None = None


def min_rule_orientation(g: ColorfulGraph) -> Orientation | StructureViolation:
    """Orient each triangle colour ``A x B`` from the side with the smaller minimum.

    Colours in no three-coloured triangle keep their base orientation. The
    result is checked for acyclicity before it is returned.
    """
    mono = has_monochromatic_cycle(g)
    if mono is not None:
        raise ValueError(
            f"min-rule needs a graph without monochromatic cycles; color {mono.color} has {mono.cycle}"
        )
    flip = [False] * g.num_colors
    for c in sorted(triangle_colors(g)):
        bc = biclique_decomposition(g, c)
        if not isinstance(bc, Biclique):
            return StructureViolation("triangle color is not a biclique", color=c)
        flip[c] = min(bc.A) > min(bc.B)
    o = Orientation(tuple(flip))
    cycle = find_cycle(apply_orientation(g, o))
    if cycle is not None:
        return StructureViolation("min-rule orientation has a cycle", cycle=cycle)
    return o


def fpt_solve(g: ColorfulGraph, cap: int = DEFAULT_FPT_CAP) -> Orientation | None:
    """First acyclic orientation in binary counting order (keep before flip,
    colour 0 decided first), or None.

    Depth-first over colours; a branch is cut as soon as the colours decided
    so far already close a cycle, which no later choice can undo.
    """
    k = g.num_colors
    if k > cap:
        raise CapExceededError(f"{k} colors exceeds the exhaustive search cap of {cap}")
    chosen: list[bool] = []
    edges: list[set] = []

    def partial_acyclic() -> bool:
        es = set().union(*edges) if edges else set()
        return find_cycle(Digraph(g.n, frozenset(es))) is None

    def search(c: int) -> bool:
        if c == k:
            return True
        for flip in (False, True):
            chosen.append(flip)
            edges.append({(v, u) if flip else (u, v) for u, v in g.colors[c]})
            if partial_acyclic() and search(c + 1):
                return True
            chosen.pop()
            edges.pop()
        return False

    return Orientation(tuple(chosen)) if search(0) else None


def orientation_to_axis(g: ColorfulGraph, o: Orientation) -> Axis:
    """Topological order of the oriented graph, smallest voter first among ties."""
    order = smallest_first_topological_order(apply_orientation(g, o))
    if order is None:
        raise ValueError(f"orientation {o} leaves a directed cycle")
    return Axis(order)


def solve_nb_fpt(inst: NBInstance, cap: int = DEFAULT_FPT_CAP) -> Axis | None:
    """Satisfying order for an arbitrary NB instance, exponential only in the colour count."""
    part = complementary_pairs_partition(build_formula_graph(inst))
    if isinstance(part, ComplementClash):
        return None
    g = build_colorful_graph(part)
    o = fpt_solve(g, cap)
    return None if o is None else orientation_to_axis(g, o)
