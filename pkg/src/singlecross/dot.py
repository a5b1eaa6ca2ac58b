"""Graphviz DOT text for formula and colourful graphs."""

from __future__ import annotations

from singlecross.colorful_graph import ColorfulGraph, Orientation, apply_orientation
from singlecross.formula_graph import (
    ComplementaryPartition,
    FormulaGraph,
    Pair,
)

PALETTE = (
    "red",
    "blue",
    "darkgreen",
    "orange",
    "purple",
    "brown",
    "deeppink",
    "cyan4",
    "gold3",
    "gray40",
)


def palette_color(idx: int) -> str:
    return PALETTE[idx % len(PALETTE)]


def _pair_id(u: Pair) -> str:
    return f'"{u[0]},{u[1]}"'


def formula_graph_to_dot(g: FormulaGraph, partition: ComplementaryPartition | None = None) -> str:
    """Undirected DOT; isolated vertices are left out.

    With a partition, both sides of complementary pair ``i`` are drawn in
    palette colour ``i``; otherwise all edges are black.
    """
    color_of: dict[Pair, str] = {}
    if partition is not None:
        for idx, cp in enumerate(partition.pairs):
            for u in cp.component | cp.complement:
                color_of[u] = palette_color(idx)
    used = sorted({u for e in g.edges for u in e})
    lines = ["graph formula {", "  node [shape=plaintext];"]
    lines.extend(f"  {_pair_id(u)};" for u in used)
    for u, v in sorted(g.edges):
        attr = f" [color={color_of[u]}]" if u in color_of else ""
        lines.append(f"  {_pair_id(u)} -- {_pair_id(v)}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def colorful_graph_to_dot(g: ColorfulGraph, orientation: Orientation | None = None) -> str:
    """Directed DOT with one pen colour per colour id, directions per ``orientation``."""
    o = orientation if orientation is not None else Orientation.keep_all(g.num_colors)
    directed = apply_orientation(g, o)
    lines = ["digraph colorful {", "  node [shape=circle];"]
    lines.extend(f"  {v};" for v in range(1, g.n + 1))
    for u, v in sorted(directed.edges):
        c = g.color_of(u, v)
        lines.append(f'  {u} -> {v} [color={palette_color(c)}, label="{c}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
