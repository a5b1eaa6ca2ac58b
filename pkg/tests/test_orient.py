from __future__ import annotations

import itertools

import pytest
from hypothesis import given

from singlecross.colorful_graph import (
    Biclique,
    ColorfulGraph,
    Orientation,
    apply_orientation,
    biclique_decomposition,
    build_colorful_graph,
    has_monochromatic_cycle,
    is_acyclic,
    orientations,
)
from singlecross.formula_graph import ComplementClash, build_formula_graph, complementary_pairs_partition
from singlecross.nb import (
    Axis,
    CapExceededError,
    NBInstance,
    brute_force_solve,
    extract_nb_constraints,
    order_satisfies,
    parse_nb_instance,
)
from singlecross.orient import (
    StructureViolation,
    fpt_solve,
    min_rule_orientation,
    orientation_to_axis,
    solve_nb_fpt,
)
from singlecross.profile import parse_approval_matrix
from oracles import fixture_text
from strategies import approval_profiles, nb_instances


def graph_of_instance(inst) -> ColorfulGraph | None:
    part = complementary_pairs_partition(build_formula_graph(inst))
    return None if isinstance(part, ComplementClash) else build_colorful_graph(part)


def intro() -> ColorfulGraph:
    return graph_of_instance(parse_nb_instance(fixture_text("intro_nb.txt")))


def seven_voter_graph() -> ColorfulGraph:
    return graph_of_instance(extract_nb_constraints(parse_approval_matrix(fixture_text("seven_voters.txt"))))


def test_intro_has_two_complementary_acyclic_orientations():
    g = intro()
    good = [str(o) for o in orientations(2) if is_acyclic(apply_orientation(g, o))]
    assert good == ["00", "11"]
    assert str(fpt_solve(g)) == "00"


def test_intro_from_cyclic_base_needs_exactly_one_flip():
    # base orientation containing the cycle 1 -> 2 -> 5 -> 1
    g = intro()
    base = ColorfulGraph(g.n, (g.colors[0], tuple((v, u) for u, v in g.colors[1])))
    assert not is_acyclic(apply_orientation(base, Orientation.keep_all(2)))
    good = [str(o) for o in orientations(2) if is_acyclic(apply_orientation(base, o))]
    assert good == ["01", "10"]


def test_seven_voter_min_rule_and_axis():
    g = seven_voter_graph()
    o = min_rule_orientation(g)
    assert isinstance(o, Orientation)
    d = apply_orientation(g, o)
    expected = set(itertools.product({1, 4, 7}, {2}))
    expected |= set(itertools.product({2}, {3, 5, 6}))
    expected |= set(itertools.product({3, 5}, {6}))
    expected |= set(itertools.product({1, 4, 7}, {3, 5, 6}))
    assert d.edges == expected
    assert orientation_to_axis(g, o) == Axis((1, 4, 7, 2, 3, 5, 6))


def test_min_rule_on_degenerate_graphs():
    assert min_rule_orientation(ColorfulGraph(3, ())) == Orientation(())
    # single-edge colours 1-2, 2-3, 3-1 given as a directed triangle
    g = ColorfulGraph(3, (((1, 2),), ((2, 3),), ((3, 1),)))
    o = min_rule_orientation(g)
    assert isinstance(o, Orientation)
    assert apply_orientation(g, o).edges == {(1, 2), (2, 3), (1, 3)}
    with pytest.raises(ValueError):
        min_rule_orientation(ColorfulGraph(3, (((1, 2), (2, 3), (3, 1)),)))


def test_min_rule_reports_non_biclique_triangle_color():
    # colour 0 is a path, not a product, and sits in a three-coloured triangle
    g = ColorfulGraph(4, (((1, 2), (2, 4)), ((2, 3),), ((1, 3),)))
    v = min_rule_orientation(g)
    assert isinstance(v, StructureViolation)
    assert v.color == 0


def test_monochromatic_cycle_in_general_instance():
    inst = NBInstance(4, frozenset({(1, 2, 3), (1, 3, 2), (1, 3, 4), (2, 4, 3), (3, 1, 4)}))
    g = graph_of_instance(inst)
    mono = has_monochromatic_cycle(g)
    assert mono is not None and mono.verify(g)
    assert fpt_solve(g) is None
    assert solve_nb_fpt(inst) is None
    assert brute_force_solve(inst) is None


def test_fpt_small_cases():
    assert fpt_solve(ColorfulGraph(3, ())) == Orientation(())
    g = ColorfulGraph(3, (((1, 2), (3, 2)),))
    assert fpt_solve(g) == Orientation((False,))
    assert order_satisfies(NBInstance(3, frozenset({(1, 2, 3)})), orientation_to_axis(g, Orientation((False,))))
    assert fpt_solve(ColorfulGraph(3, (((1, 2),), ((2, 3),), ((3, 1),))), cap=3) is not None
    with pytest.raises(CapExceededError):
        fpt_solve(ColorfulGraph(3, (((1, 2),), ((2, 3),), ((1, 3),))), cap=2)


def test_orientation_to_axis_errors_and_ties():
    assert orientation_to_axis(ColorfulGraph(3, ()), Orientation(())) == Axis((1, 2, 3))
    with pytest.raises(ValueError):
        orientation_to_axis(ColorfulGraph(3, (((1, 2),), ((2, 3),), ((3, 1),))), Orientation.keep_all(3))


@given(nb_instances(max_n=6, max_triples=10))
def test_fpt_agrees_with_brute_force(inst):
    expected = brute_force_solve(inst)
    got = solve_nb_fpt(inst)
    assert (got is None) == (expected is None)
    if got is not None:
        assert order_satisfies(inst, got)
        assert solve_nb_fpt(inst) == got


@given(nb_instances(max_n=6, max_triples=10))
def test_fpt_returns_first_acyclic_in_counting_order(inst):
    g = graph_of_instance(inst)
    if g is None or g.num_colors > 10:
        return
    first = next((o for o in orientations(g.num_colors) if is_acyclic(apply_orientation(g, o))), None)
    assert fpt_solve(g) == first


@given(approval_profiles(max_m=6, max_n=7))
def test_min_rule_is_sound_on_approval_graphs(p):
    inst = extract_nb_constraints(p)
    g = graph_of_instance(inst)
    if g is None or has_monochromatic_cycle(g) is not None:
        return
    o = min_rule_orientation(g)
    assert isinstance(o, Orientation)
    assert is_acyclic(apply_orientation(g, o))
    axis = orientation_to_axis(g, o)
    assert order_satisfies(inst, axis)
    for c, flip in enumerate(o.flip):
        bc = biclique_decomposition(g, c)
        if flip:
            assert isinstance(bc, Biclique) and min(bc.A) > min(bc.B)
