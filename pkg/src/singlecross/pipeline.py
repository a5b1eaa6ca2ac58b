"""End-to-end recognition of possibly single-crossing approval profiles."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Union

from singlecross.colorful_graph import (
    ColorfulGraph,
    MonochromaticCycle,
    build_colorful_graph,
    has_monochromatic_cycle,
)
from singlecross.errors import InternalInvariantError, StructureViolationError
from singlecross.extend import extend_to_single_crossing, extends, is_sc, is_ssc
from singlecross.formula_graph import (
    ComplementClash,
    build_formula_graph,
    complementary_pairs_partition,
)
from singlecross.nb import Axis, CapExceededError, extract_nb_constraints
from singlecross.orient import StructureViolation, min_rule_orientation, orientation_to_axis
from singlecross.profile import AnyProfile, LinearProfile, as_weak_order

DEFAULT_PSC_BRUTE_FORCE_CAP = 8


@dataclass(frozen=True)
class Accept:
    axis: Axis
    linear_profile: LinearProfile

    accepted = True


@dataclass(frozen=True)
class Reject:
    reason: Union[ComplementClash, MonochromaticCycle]

    accepted = False


RecognitionOutcome = Union[Accept, Reject]


@dataclass(frozen=True)
class RecognitionTrace:
    """Intermediate objects of one recognition run, for diagnostics and export."""

    outcome: RecognitionOutcome
    colorful_graph: ColorfulGraph | None


def recognize_psc(p: AnyProfile) -> RecognitionOutcome:
    """Decide whether ``p`` could come from single-crossing rankings.

    On success returns the axis and a single-crossing profile of rankings
    that extends every ballot. Rejections carry a checkable witness. Only
    approval (two score levels) input is guaranteed never to hit the
    structural check; other weak orders may raise ``StructureViolationError``.
    """
    return recognize_with_trace(p).outcome


def recognize_with_trace(p: AnyProfile) -> RecognitionTrace:
    w = as_weak_order(p)
    graph = build_formula_graph(extract_nb_constraints(w))
    part = complementary_pairs_partition(graph)
    if isinstance(part, ComplementClash):
        if not part.verify(graph):
            raise InternalInvariantError(f"clash witness does not check out: {part}")
        return RecognitionTrace(Reject(part), None)

    g = build_colorful_graph(part)
    mono = has_monochromatic_cycle(g)
    if mono is not None:
        if not mono.verify(g):
            raise InternalInvariantError(f"cycle witness does not check out: {mono}")
        return RecognitionTrace(Reject(mono), g)

    o = min_rule_orientation(g)
    if isinstance(o, StructureViolation):
        raise StructureViolationError(o)
    axis = orientation_to_axis(g, o)
    if not is_ssc(w, axis):
        raise InternalInvariantError(f"axis {axis} does not make the ballots single-crossing")
    linear = extend_to_single_crossing(w, axis)
    if not is_sc(linear, axis) or not extends(linear, w):
        raise InternalInvariantError("completed rankings fail the single-crossing or extension check")
    return RecognitionTrace(Accept(axis, linear), g)


def brute_force_psc(p: AnyProfile, cap: int = DEFAULT_PSC_BRUTE_FORCE_CAP) -> Axis | None:
    """Lexicographically smallest voter order along which ``p`` is seemingly single-crossing.

    Tries all n! orders directly against the definition; meant as a test oracle.
    """
    w = as_weak_order(p)
    if w.n > cap:
        raise CapExceededError(f"brute force over {w.n}! axes exceeds cap n <= {cap}")
    # one sign vector per candidate pair, zeros (ties) dropped later
    patterns = set()
    for a, b in itertools.combinations(range(w.m), 2):
        pat = tuple((row[a] > row[b]) - (row[a] < row[b]) for row in w.scores)
        if any(pat):
            patterns.add(pat)
    patterns = list(patterns)
    for perm in itertools.permutations(range(w.n)):
        ok = True
        for pat in patterns:
            changes = 0
            last = 0
            for v in perm:
                s = pat[v]
                if s and s != last:
                    if last:
                        changes += 1
                    last = s
            if changes >= 2:
                ok = False
                break
        if ok:
            return Axis(tuple(v + 1 for v in perm))
    return None
