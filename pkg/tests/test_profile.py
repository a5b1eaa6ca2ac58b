from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from singlecross.profile import (
    ApprovalProfile,
    LinearProfile,
    ProfileFormatError,
    WeakOrderProfile,
    generate_cycle_profile,
    generate_sc_positive,
    parse_approval_matrix,
    subprofile,
)
from oracles import naive_psc_exists, score_table
from strategies import approval_profiles

CYCLE5_ROWS = [
    [1, 1, 0, 0, 0],
    [0, 1, 1, 0, 0],
    [0, 0, 1, 1, 0],
    [0, 0, 0, 1, 1],
    [1, 0, 0, 0, 1],
]


def test_parse_cycle5_matrix():
    text = "5 5\n" + "\n".join(" ".join(map(str, r)) for r in CYCLE5_ROWS)
    assert parse_approval_matrix(text) == generate_cycle_profile(5)


def test_parse_single_cell():
    p = parse_approval_matrix("1 1\n1")
    assert (p.m, p.n) == (1, 1)
    assert p.approves(1, 1)


def test_parse_bad_token_reports_row_and_token():
    with pytest.raises(ProfileFormatError) as exc:
        parse_approval_matrix("2 2\n1 2\n0 1")
    assert exc.value.row == 1
    assert exc.value.column == 2
    assert exc.value.line == 2


def test_parse_comments_and_blank_lines():
    text = "# header next\n2 3  # m n\n\n1 0 1\n# middle\n0 1 1\n"
    p = parse_approval_matrix(text)
    assert p.entries == ((1, 0, 1), (0, 1, 1))


@pytest.mark.parametrize(
    "text",
    [
        "",
        "# nothing\n",
        "2\n1 0\n0 1",
        "2 2\n1 0",
        "2 2\n1 0\n0 1\n1 1",
        "2 2\n1 0 1\n0 1 0",
        "0 2\n",
        "a 2\n1 0",
    ],
)
def test_parse_rejects_malformed(text):
    with pytest.raises(ProfileFormatError):
        parse_approval_matrix(text)


def test_transposed_matrix_is_rejected():
    # 2 candidates x 3 voters written as 3 rows of 2
    with pytest.raises(ProfileFormatError):
        parse_approval_matrix("2 3\n1 0\n0 1\n1 1")


@given(approval_profiles())
def test_text_round_trip(p):
    assert parse_approval_matrix(p.to_text()) == p


def test_cycle_profile_small_cases():
    assert generate_cycle_profile(2).entries == ((1, 1), (1, 1))
    p4 = generate_cycle_profile(4)
    for c in range(1, 5):
        assert {v for v in range(1, 5) if p4.approves(v, c)} == {c, c % 4 + 1}
    with pytest.raises(ValueError):
        generate_cycle_profile(1)


@pytest.mark.parametrize("n", range(2, 13))
def test_cycle_profile_two_ones_per_line(n):
    p = generate_cycle_profile(n)
    assert sum(map(sum, p.entries)) == 2 * n
    assert all(sum(row) == 2 for row in p.entries)
    assert all(len(p.ballot(v)) == 2 for v in range(1, n + 1))
    for v in range(1, n + 1):
        assert p.ballot(v) == {v, (v - 2) % n + 1}


def test_subprofile_examples():
    p = generate_cycle_profile(5)
    assert subprofile(p, candidates=[1, 2, 3, 4]).entries == tuple(map(tuple, CYCLE5_ROWS[:4]))
    assert subprofile(p) == p
    minus_v1 = subprofile(p, voters=[2, 3, 4, 5])
    assert minus_v1.entries == tuple(tuple(r[1:]) for r in CYCLE5_ROWS)


@pytest.mark.parametrize(
    "kwargs", [{"voters": []}, {"candidates": []}, {"voters": [0]}, {"candidates": [6]}]
)
def test_subprofile_errors(kwargs):
    with pytest.raises(ValueError):
        subprofile(generate_cycle_profile(5), **kwargs)


@given(approval_profiles(), st.data())
def test_subprofile_removals_commute(p, data):
    vs = data.draw(st.sets(st.integers(1, p.n), min_size=1))
    cs = data.draw(st.sets(st.integers(1, p.m), min_size=1))
    once = subprofile(p, voters=vs, candidates=cs)
    split = subprofile(subprofile(p, voters=vs), candidates=cs)
    other = subprofile(subprofile(p, candidates=cs), voters=vs)
    assert once == split == other
    assert subprofile(once) == once


def test_generate_sc_positive_is_deterministic():
    assert generate_sc_positive(5, 4, 7) == generate_sc_positive(5, 4, 7)
    p = generate_sc_positive(1, 3, 123)
    assert (p.m, p.n) == (3, 1)


@given(st.integers(1, 6), st.integers(1, 6), st.integers(0, 10**6))
def test_generate_sc_positive_is_possibly_single_crossing(n, m, seed):
    p = generate_sc_positive(n, m, seed)
    assert (p.m, p.n) == (m, n)
    assert naive_psc_exists(score_table(p))


def test_weak_order_relations():
    w = WeakOrderProfile.from_scores([[2, 1, 1], [0, 1, 2]])
    assert w.prefers(1, 1, 2)
    assert w.indifferent(1, 2, 3)
    assert w.prefers(2, 3, 1)
    assert w.num_classes() == 3


def test_approval_embeds_as_zero_one_scores():
    p = ApprovalProfile.from_ballots(3, [{1}, {2, 3}])
    assert p.to_weak_order().scores == ((1, 0, 0), (0, 1, 1))
    with pytest.raises(ValueError):
        ApprovalProfile.from_ballots(2, [{3}])


def test_linear_profile_validation_and_scores():
    lp = LinearProfile(3, 2, ((2, 1, 3), (3, 2, 1)))
    assert lp.prefers(1, 2, 1)
    assert lp.position(2, 1) == 2
    assert lp.to_weak_order().scores == ((2, 3, 1), (1, 2, 3))
    with pytest.raises(ValueError):
        LinearProfile(3, 1, ((1, 1, 2),))


def test_constructor_rejects_bad_values():
    with pytest.raises(ValueError):
        ApprovalProfile.from_rows([[0, 2]])
    with pytest.raises(ValueError):
        ApprovalProfile.from_rows([[0, 1], [1]])
