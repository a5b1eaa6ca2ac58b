from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from singlecross.extend import (
    NotSeeminglySingleCrossingError,
    extend_to_single_crossing,
    extends,
    find_ssc_violation,
    is_sc,
    is_ssc,
)
from singlecross.nb import Axis
from singlecross.profile import (
    ApprovalProfile,
    LinearProfile,
    WeakOrderProfile,
    generate_cycle_profile,
    subprofile,
)
from oracles import naive_is_ssc, sc_extension_exists, score_table
from strategies import approval_profiles, axes, weak_order_profiles


def test_cycle5_fails_on_identity_axis():
    p = generate_cycle_profile(5)
    v = find_ssc_violation(p, Axis.identity(5))
    assert v is not None
    s = score_table(p)
    assert s[v.i - 1][v.a - 1] > s[v.i - 1][v.b - 1]
    assert s[v.j - 1][v.b - 1] > s[v.j - 1][v.a - 1]
    assert s[v.k - 1][v.a - 1] > s[v.k - 1][v.b - 1]
    assert "voters" in str(v)


def test_cycle5_without_last_candidate_is_fine_on_identity_axis():
    p = subprofile(generate_cycle_profile(5), candidates=[1, 2, 3, 4])
    assert is_ssc(p, Axis.identity(5))


def test_single_voter_and_size_mismatch():
    assert is_ssc(ApprovalProfile.from_ballots(3, [{2}]), Axis.identity(1))
    with pytest.raises(ValueError):
        is_ssc(ApprovalProfile.from_ballots(3, [{2}]), Axis.identity(2))


def test_is_sc_examples():
    two = LinearProfile(2, 2, ((1, 2), (2, 1)))
    assert is_sc(two, Axis((1, 2))) and is_sc(two, Axis((2, 1)))
    three = LinearProfile(2, 3, ((1, 2), (2, 1), (1, 2)))
    assert not is_sc(three, Axis.identity(3))
    with pytest.raises(TypeError):
        is_sc(ApprovalProfile.from_ballots(2, [{1}]), Axis.identity(1))


def test_forced_extension():
    p = ApprovalProfile.from_ballots(2, [{1}, {2}])
    assert extend_to_single_crossing(p, Axis((1, 2))).rankings == ((1, 2), (2, 1))


def test_indifferent_voter_copies_left_neighbour():
    p = ApprovalProfile.from_ballots(2, [{1}, {1, 2}, {2}])
    out = extend_to_single_crossing(p, Axis((1, 2, 3)))
    assert out.rankings[1] == (1, 2)
    # on the reversed axis the nearest strict voter before voter 2 is voter 3
    out = extend_to_single_crossing(p, Axis((3, 2, 1)))
    assert out.rankings[1] == (2, 1)


def test_indifferent_voter_at_the_front_copies_first_strict_opinion():
    p = ApprovalProfile.from_ballots(2, [{1, 2}, {2}, {1}])
    out = extend_to_single_crossing(p, Axis((1, 2, 3)))
    assert out.rankings[0] == (2, 1)


def test_all_tied_candidates_are_listed_by_id():
    p = ApprovalProfile.from_ballots(2, [set()])
    assert extend_to_single_crossing(p, Axis.identity(1)).rankings == ((1, 2),)


def test_clones_sit_directly_below_representative():
    # candidates 1 and 3 have identical rows
    p = ApprovalProfile.from_rows([[1, 0], [0, 1], [1, 0]])
    out = extend_to_single_crossing(p, Axis((1, 2)))
    assert out.rankings == ((1, 3, 2), (2, 1, 3))


def test_precondition_violation_carries_witness():
    with pytest.raises(NotSeeminglySingleCrossingError) as exc:
        extend_to_single_crossing(generate_cycle_profile(5), Axis.identity(5))
    assert exc.value.violation == find_ssc_violation(generate_cycle_profile(5), Axis.identity(5))


@given(weak_order_profiles(max_m=4, max_n=6), st.data())
def test_ssc_check_matches_definition(w, data):
    axis = data.draw(axes(w.n))
    assert is_ssc(w, axis) == naive_is_ssc(score_table(w), axis.order)


@given(weak_order_profiles(max_m=5, max_n=6, levels=4), st.data())
def test_extension_properties(w, data):
    axis = data.draw(axes(w.n))
    if not is_ssc(w, axis):
        with pytest.raises(NotSeeminglySingleCrossingError):
            extend_to_single_crossing(w, axis)
        return
    out = extend_to_single_crossing(w, axis)
    assert (out.m, out.n) == (w.m, w.n)
    assert extends(out, w)
    assert is_sc(out, axis)
    assert naive_is_ssc(score_table(out), axis.order)
    assert extend_to_single_crossing(w, axis) == out


@given(approval_profiles(max_m=4, max_n=4), st.data())
def test_ssc_iff_some_sc_extension_exists(p, data):
    axis = data.draw(axes(p.n))
    assert is_ssc(p, axis) == sc_extension_exists(score_table(p), axis.order)


@given(weak_order_profiles(max_m=3, max_n=4, levels=3), st.data())
def test_ssc_iff_sc_extension_for_weak_orders(w, data):
    axis = data.draw(axes(w.n))
    assert is_ssc(w, axis) == sc_extension_exists(score_table(w), axis.order)


def test_extends_rejects_flipped_preference_and_size_mismatch():
    p = ApprovalProfile.from_ballots(2, [{1}])
    assert extends(LinearProfile(2, 1, ((1, 2),)), p)
    assert not extends(LinearProfile(2, 1, ((2, 1),)), p)
    assert not extends(LinearProfile(2, 2, ((1, 2), (1, 2))), p)
    w = WeakOrderProfile.from_scores([[1, 1]])
    assert extends(LinearProfile(2, 1, ((2, 1),)), w)
