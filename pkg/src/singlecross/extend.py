"""Single-crossing checks along a fixed axis and completion of weak orders
into a single-crossing profile of rankings."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from singlecross.errors import InternalInvariantError
from singlecross.nb import Axis
from singlecross.profile import AnyProfile, LinearProfile, as_weak_order


@dataclass(frozen=True)
class SSCViolation:
    """Voters ``i``, ``j``, ``k`` in axis order; ``a`` over ``b`` for i and k, reversed for j."""

    i: int
    j: int
    k: int
    a: int
    b: int

    def __str__(self) -> str:
        return (
            f"voters {self.i} < {self.j} < {self.k} on the axis: "
            f"{self.a} > {self.b}, then {self.b} > {self.a}, then {self.a} > {self.b}"
        )


class NotSeeminglySingleCrossingError(ValueError):
    def __init__(self, violation: SSCViolation):
        self.violation = violation
        super().__init__(f"profile is not single-crossing along the axis: {violation}")


def _check_axis(n: int, axis: Axis) -> None:
    if axis.n != n:
        raise ValueError(f"axis has {axis.n} voters, profile has {n}")


def find_ssc_violation(p: AnyProfile, axis: Axis) -> SSCViolation | None:
    """First (by candidate pair) pair of candidates whose preference flips twice along the axis."""
    w = as_weak_order(p)
    _check_axis(w.n, axis)
    rows = [w.scores[v - 1] for v in axis.order]
    for a, b in itertools.combinations(range(w.m), 2):
        marks = []  # (voter, sign) at each change of strict preference
        last = 0
        for voter, row in zip(axis.order, rows):
            d = row[a] - row[b]
            s = (d > 0) - (d < 0)
            if s and s != last:
                marks.append((voter, s))
                last = s
                if len(marks) == 3:
                    (i, s0), (j, _), (k, _) = marks
                    x, y = (a + 1, b + 1) if s0 > 0 else (b + 1, a + 1)
                    return SSCViolation(i, j, k, x, y)
    return None


def is_ssc(p: AnyProfile, axis: Axis) -> bool:
    return find_ssc_violation(p, axis) is None


def is_sc(p: LinearProfile, axis: Axis) -> bool:
    if not isinstance(p, LinearProfile):
        raise TypeError("is_sc expects a LinearProfile")
    return find_ssc_violation(p, axis) is None


def extends(linear: LinearProfile, p: AnyProfile) -> bool:
    """True iff every strict preference of ``p`` is kept by ``linear``."""
    w = as_weak_order(p)
    if (linear.m, linear.n) != (w.m, w.n):
        return False
    for v in range(1, w.n + 1):
        rank = {c: pos for pos, c in enumerate(linear.rankings[v - 1])}
        row = w.scores[v - 1]
        for a, b in itertools.permutations(range(1, w.m + 1), 2):
            if row[a - 1] > row[b - 1] and rank[a] > rank[b]:
                return False
    return True


def extend_to_single_crossing(p: AnyProfile, axis: Axis) -> LinearProfile:
    """Linear extensions of every ballot that are single-crossing along ``axis``.

    Candidates tied by every voter are merged into their smallest id and put
    back directly below it afterwards. For each remaining pair, a voter who
    is indifferent copies the strict opinion of the nearest non-indifferent
    voter at or before it on the axis, or failing that the nearest one after.
    """
    w = as_weak_order(p)
    _check_axis(w.n, axis)
    violation = find_ssc_violation(w, axis)
    if violation is not None:
        raise NotSeeminglySingleCrossingError(violation)

    columns: dict[tuple[int, ...], list[int]] = {}
    for c in range(w.m):
        columns.setdefault(tuple(row[c] for row in w.scores), []).append(c)
    reps = sorted(group[0] for group in columns.values())
    clones = {group[0]: group[1:] for group in columns.values()}

    seq = [w.scores[v - 1] for v in axis.order]
    n = w.n
    wins = [dict.fromkeys(reps, 0) for _ in range(n)]
    for a, b in itertools.combinations(reps, 2):
        signs = [(row[a] > row[b]) - (row[a] < row[b]) for row in seq]
        filled = []
        last = 0
        for s in signs:
            last = s or last
            filled.append(last)
        first = next(s for s in signs if s)
        for t in range(n):
            s = filled[t] or first
            wins[t][a if s > 0 else b] += 1

    rankings: list[tuple[int, ...]] = [()] * n
    r = len(reps)
    for t, voter in enumerate(axis.order):
        order = sorted(reps, key=lambda c: -wins[t][c])
        if [wins[t][c] for c in order] != list(range(r - 1, -1, -1)):
            raise InternalInvariantError(f"completed ballot of voter {voter} is not transitive")
        ballot = []
        for c in order:
            ballot.append(c + 1)
            ballot.extend(x + 1 for x in clones[c])
        rankings[voter - 1] = tuple(ballot)
    return LinearProfile(w.m, w.n, tuple(rankings))
