"""Preference profiles: approval matrices, scored weak orders and rankings.

Voters and candidates are identified by 1-based ids everywhere in the public
API. An approval matrix is stored the way it is written down: one row per
candidate, one column per voter.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence, Union


class ProfileFormatError(ValueError):
    """Malformed approval matrix text.

    ``line`` is the 1-based physical line, ``row`` the 1-based matrix row
    (candidate) when the error is in the body, and ``column`` the 1-based
    token position on that line.
    """

    def __init__(
        self,
        message: str,
        line: int | None = None,
        column: int | None = None,
        row: int | None = None,
    ):
        self.line = line
        self.column = column
        self.row = row
        where = ""
        if line is not None:
            where = f"line {line}"
            if row is not None:
                where += f" (row {row})"
            if column is not None:
                where += f", token {column}"
            where += ": "
        super().__init__(where + message)


@dataclass(frozen=True)
class WeakOrderProfile:
    """Each voter ranks candidates by an integer score; equal scores are ties.

    ``scores[v - 1][c - 1]`` is the score voter ``v`` gives candidate ``c``.
    """

    m: int
    n: int
    scores: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError(f"profile needs m, n >= 1 (got m={self.m}, n={self.n})")
        scores = tuple(tuple(int(s) for s in row) for row in self.scores)
        if len(scores) != self.n or any(len(row) != self.m for row in scores):
            raise ValueError(f"scores must be {self.n} voters x {self.m} candidates")
        object.__setattr__(self, "scores", scores)

    @classmethod
    def from_scores(cls, scores: Sequence[Sequence[int]]) -> WeakOrderProfile:
        """Build from per-voter score lists (outer index = voter)."""
        scores = [list(row) for row in scores]
        if not scores:
            raise ValueError("profile needs at least one voter")
        return cls(m=len(scores[0]), n=len(scores), scores=tuple(map(tuple, scores)))

    def score(self, voter: int, candidate: int) -> int:
        return self.scores[voter - 1][candidate - 1]

    def prefers(self, voter: int, a: int, b: int) -> bool:
        """True iff ``voter`` strictly prefers candidate ``a`` to ``b``."""
        row = self.scores[voter - 1]
        return row[a - 1] > row[b - 1]

    def indifferent(self, voter: int, a: int, b: int) -> bool:
        row = self.scores[voter - 1]
        return row[a - 1] == row[b - 1]

    def num_classes(self) -> int:
        """Largest number of indifference classes any single voter uses."""
        return max(len(set(row)) for row in self.scores)

    def to_weak_order(self) -> WeakOrderProfile:
        return self


@dataclass(frozen=True)
class ApprovalProfile:
    """An ``m x n`` 0/1 matrix; ``entries[c - 1][v - 1] == 1`` iff voter v approves c."""

    m: int
    n: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError(f"profile needs m, n >= 1 (got m={self.m}, n={self.n})")
        entries = tuple(tuple(int(x) for x in row) for row in self.entries)
        if len(entries) != self.m or any(len(row) != self.n for row in entries):
            raise ValueError(f"entries must be {self.m} rows x {self.n} columns")
        for c, row in enumerate(entries, 1):
            for v, x in enumerate(row, 1):
                if x not in (0, 1):
                    raise ValueError(f"entry for candidate {c}, voter {v} is {x}, expected 0 or 1")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> ApprovalProfile:
        rows = [list(r) for r in rows]
        if not rows:
            raise ValueError("profile needs at least one candidate")
        return cls(m=len(rows), n=len(rows[0]), entries=tuple(map(tuple, rows)))

    @classmethod
    def from_ballots(cls, m: int, ballots: Sequence[Iterable[int]]) -> ApprovalProfile:
        """Build from one set of approved candidate ids per voter."""
        sets = [set(b) for b in ballots]
        for v, b in enumerate(sets, 1):
            bad = [c for c in b if not 1 <= c <= m]
            if bad:
                raise ValueError(f"voter {v} approves unknown candidate {bad[0]}")
        rows = [[int(c in b) for b in sets] for c in range(1, m + 1)]
        return cls(m=m, n=len(sets), entries=tuple(map(tuple, rows)))

    def approves(self, voter: int, candidate: int) -> bool:
        return self.entries[candidate - 1][voter - 1] == 1

    def ballot(self, voter: int) -> frozenset[int]:
        return frozenset(c for c in range(1, self.m + 1) if self.entries[c - 1][voter - 1])

    def to_weak_order(self) -> WeakOrderProfile:
        scores = tuple(tuple(self.entries[c][v] for c in range(self.m)) for v in range(self.n))
        return WeakOrderProfile(m=self.m, n=self.n, scores=scores)

    def to_text(self) -> str:
        lines = [f"{self.m} {self.n}"]
        lines.extend(" ".join(map(str, row)) for row in self.entries)
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class LinearProfile:
    """Strict rankings; ``rankings[v - 1]`` lists voter v's candidate ids best first."""

    m: int
    n: int
    rankings: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rankings = tuple(tuple(int(c) for c in r) for r in self.rankings)
        if len(rankings) != self.n:
            raise ValueError(f"expected {self.n} rankings, got {len(rankings)}")
        expected = set(range(1, self.m + 1))
        for v, r in enumerate(rankings, 1):
            if len(r) != self.m or set(r) != expected:
                raise ValueError(f"ranking of voter {v} is not a permutation of 1..{self.m}: {r}")
        object.__setattr__(self, "rankings", rankings)

    def position(self, voter: int, candidate: int) -> int:
        """0-based rank of ``candidate`` in ``voter``'s ballot (0 = best)."""
        return self.rankings[voter - 1].index(candidate)

    def prefers(self, voter: int, a: int, b: int) -> bool:
        r = self.rankings[voter - 1]
        return r.index(a) < r.index(b)

    def to_weak_order(self) -> WeakOrderProfile:
        scores = []
        for r in self.rankings:
            row = [0] * self.m
            for pos, c in enumerate(r):
                row[c - 1] = self.m - pos
            scores.append(tuple(row))
        return WeakOrderProfile(m=self.m, n=self.n, scores=tuple(scores))

    def to_text(self) -> str:
        return "".join(" ".join(map(str, r)) + "\n" for r in self.rankings)


AnyProfile = Union[ApprovalProfile, WeakOrderProfile, LinearProfile]


def as_weak_order(p: AnyProfile) -> WeakOrderProfile:
    return p.to_weak_order()


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0]


def parse_approval_matrix(text: str) -> ApprovalProfile:
    """Parse the ``"m n"`` header followed by ``m`` rows of ``n`` 0/1 tokens.

    Rows are candidates and columns are voters. ``#`` starts a comment; blank
    lines are ignored. A transposed matrix is rejected as a dimension error.
    """
    content = [
        (lineno, _strip_comment(raw).split())
        for lineno, raw in enumerate(text.splitlines(), 1)
    ]
    content = [(lineno, toks) for lineno, toks in content if toks]
    if not content:
        raise ProfileFormatError("empty input: expected header 'm n'")

    header_line, header = content[0]
    if len(header) != 2:
        raise ProfileFormatError(
            f"header must be two integers 'm n', got {len(header)} tokens", header_line
        )
    dims = []
    for col, tok in enumerate(header, 1):
        if not tok.isdigit() or int(tok) < 1:
            raise ProfileFormatError(f"expected a positive integer, got {tok!r}", header_line, col)
        dims.append(int(tok))
    m, n = dims

    body = content[1:]
    if len(body) != m:
        where = body[m][0] if len(body) > m else (body[-1][0] if body else header_line)
        raise ProfileFormatError(f"expected {m} candidate rows, got {len(body)}", where)

    rows = []
    for r, (lineno, toks) in enumerate(body, 1):
        if len(toks) != n:
            raise ProfileFormatError(
                f"expected {n} voter columns, got {len(toks)}", lineno, row=r
            )
        row = []
        for col, tok in enumerate(toks, 1):
            if tok not in ("0", "1"):
                raise ProfileFormatError(f"expected 0 or 1, got {tok!r}", lineno, col, row=r)
            row.append(int(tok))
        rows.append(tuple(row))
    return ApprovalProfile(m=m, n=n, entries=tuple(rows))


def generate_cycle_profile(n: int) -> ApprovalProfile:
    """``n`` voters and ``n`` candidates; voter i approves candidates i and i - 1 (mod n).

    The voter/candidate incidence graph is a single cycle of length 2n.
    """
    if n < 2:
        raise ValueError(f"cycle profile needs n >= 2, got {n}")
    rows = []
    for c in range(1, n + 1):
        # voter v approves c iff c == v or c == v - 1 (with 0 read as n)
        rows.append(tuple(int(c == v or c == (v - 2) % n + 1) for v in range(1, n + 1)))
    return ApprovalProfile(m=n, n=n, entries=tuple(rows))


def subprofile(
    p: ApprovalProfile,
    voters: Iterable[int] | None = None,
    candidates: Iterable[int] | None = None,
) -> ApprovalProfile:
    """Keep only the given voter and candidate ids (``None`` keeps all), in original order."""
    keep_v = sorted(set(voters)) if voters is not None else list(range(1, p.n + 1))
    keep_c = sorted(set(candidates)) if candidates is not None else list(range(1, p.m + 1))
    if not keep_v or not keep_c:
        raise ValueError("subprofile needs at least one voter and one candidate")
    for v in keep_v:
        if not 1 <= v <= p.n:
            raise ValueError(f"voter id {v} out of range 1..{p.n}")
    for c in keep_c:
        if not 1 <= c <= p.m:
            raise ValueError(f"candidate id {c} out of range 1..{p.m}")
    rows = tuple(tuple(p.entries[c - 1][v - 1] for v in keep_v) for c in keep_c)
    return ApprovalProfile(m=len(keep_c), n=len(keep_v), entries=rows)


def random_single_crossing_rankings(n: int, m: int, rng: random.Random) -> list[list[int]]:
    """Random rankings that are single-crossing along voter order 1..n.

    Starting from a random ranking, each subsequent voter applies a few
    adjacent swaps, each to a candidate pair that has not swapped before.
    """
    current = list(range(1, m + 1))
    rng.shuffle(current)
    swapped: set[frozenset[int]] = set()
    out = [list(current)]
    for _ in range(n - 1):
        for _ in range(rng.randint(0, max(1, m // 2))):
            options = [
                i for i in range(m - 1)
                if frozenset((current[i], current[i + 1])) not in swapped
            ]
            if not options:
                break
            i = rng.choice(options)
            swapped.add(frozenset((current[i], current[i + 1])))
            current[i], current[i + 1] = current[i + 1], current[i]
        out.append(list(current))
    return out


def generate_sc_positive(n: int, m: int, seed: int) -> ApprovalProfile:
    """Approval profile obtained by cutting each ranking of a random
    single-crossing profile at a random depth. Always possibly single-crossing."""
    if n < 1 or m < 1:
        raise ValueError(f"need n, m >= 1 (got n={n}, m={m})")
    rng = random.Random(seed)
    rankings = random_single_crossing_rankings(n, m, rng)
    ballots = [set(r[: rng.randint(0, m)]) for r in rankings]
    return ApprovalProfile.from_ballots(m, ballots)
