"""Constructive pivot paths between two trees of T_d.

The construction repeatedly takes a non-consistent source ``mu`` that is as
far as possible from a fixed anchor source in ``S`` and makes it consistent by
pivoting both trees towards each other:

* phase one inserts every edge ``(mu, nu_k)`` of S that points away from the
  anchor into T, either directly or after a preparatory pivot at another
  non-consistent source ``sigma`` on the cycle;
* phase two fixes the one remaining edge of ``mu`` (towards the anchor) by a
  single pivot in S.

Both trees meet at a common tree; the certificate records the two one-sided
move lists.  For degree functions with every d(mu) >= 1 each stage costs at
most 2 d(mu) pivots, giving a total of at most 2(n - 1).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .degree_core import BipartiteTree, is_member
from .errors import BoundViolation, IllegalMove, ValidationError
from .pivoting import PivotMove, diameter_bound, pivot, tree_path

Side = str  # "S" or "T"


def _check_pair(S: BipartiteTree, T: BipartiteTree) -> None:
    if S.df != T.df:
        raise ValidationError(f"trees belong to different degree functions: ({S.df}) vs ({T.df})")


def is_consistent(S: BipartiteTree, T: BipartiteTree, source: int) -> bool:
    return S.incident(source) == T.incident(source)


def consistent_sources(S: BipartiteTree, T: BipartiteTree) -> frozenset[int]:
    _check_pair(S, T)
    return frozenset(mu for mu in range(S.df.m) if is_consistent(S, T, mu))


@lru_cache(maxsize=1 << 16)
def _source_distances(tree: BipartiteTree, anchor: int) -> dict[int, int]:
    m = tree.df.m
    adj = tree.adjacency
    dist = {anchor: 0}
    queue = deque([anchor])
    while queue:
        v = queue.popleft()
        for w in adj.get(v, ()):
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    return {v: d for v, d in dist.items() if v < m}


def next_source(S: BipartiteTree, T: BipartiteTree, anchor: int = 0) -> int | None:
    """Non-consistent source farthest from ``anchor`` in S (smallest index on ties)."""
    dist = _source_distances(S, anchor)
    candidates = [mu for mu in range(S.df.m) if not is_consistent(S, T, mu)]
    if not candidates:
        return None
    return max(candidates, key=lambda mu: (dist[mu], -mu))


@dataclass(frozen=True)
class Stage:
    """Pivots spent making one source consistent."""

    source: int
    moves: tuple[tuple[Side, PivotMove], ...]
    missing_at_start: int  # edges (mu, nu_k), k >= 1, of S absent from T
    away_degree: int  # d(mu): number of components not containing the anchor

    @property
    def cost(self) -> int:
        return len(self.moves)


def _anchor_side_neighbor(S: BipartiteTree, T: BipartiteTree, mu: int, anchor: int) -> int:
    m = S.df.m
    if mu != anchor:
        return tree_path(S, mu, anchor)[1] - m
    # mu is the anchor itself: all other sources are consistent, so any
    # component may play the anchor side; prefer one whose edge T already has.
    shared = [t for t in S.incident(mu) if (mu, t) in T]
    return shared[0] if shared else S.incident(mu)[0]


def _stage(S: BipartiteTree, T: BipartiteTree, mu: int, anchor: int):
    m = S.df.m
    moves: list[tuple[Side, PivotMove]] = []
    if is_consistent(S, T, mu):
        return S, T, Stage(mu, (), 0, S.df.degrees[mu])

    base = _anchor_side_neighbor(S, T, mu, anchor)
    away = [t for t in S.incident(mu) if t != base]
    away_set = set(away)
    missing = sum((mu, t) not in T for t in away)

    for nu_k in away:
        if (mu, nu_k) in T:
            continue
        path = tree_path(T, mu, m + nu_k)
        partner = path[1] - m
        if partner not in away_set:
            T, move = pivot(T, (mu, nu_k))
            assert move.removed == (mu, partner), (move, partner)
            moves.append(("T", move))
            continue
        # the cycle re-enters mu through another nu_l: reroute it through tau
        sigma_at = next(
            i for i in range(2, len(path))
            if path[i] < m and not is_consistent(S, T, path[i])
        )
        sigma = path[sigma_at]
        tau = min(t for t in T.incident(mu) if t not in away_set)
        T, move = pivot(T, (sigma, tau))
        assert move.removed == (sigma, path[sigma_at - 1] - m), (move, path)
        moves.append(("T", move))
        T, move = pivot(T, (mu, nu_k))
        assert move.removed == (mu, tau), (move, tau)
        moves.append(("T", move))

    if not is_consistent(S, T, mu):
        extra = [t for t in T.incident(mu) if t not in away_set]
        assert len(extra) == 1, extra
        S, move = pivot(S, (mu, extra[0]))
        assert move.removed == (mu, base), (move, base)
        moves.append(("S", move))

    assert is_consistent(S, T, mu)
    return S, T, Stage(mu, tuple(moves), missing, len(away))


def make_source_consistent(S: BipartiteTree, T: BipartiteTree, mu: int, anchor: int = 0):
    """Make ``mu`` consistent; returns ``(S', T', moves)`` with side-tagged moves.

    ``mu`` is expected to be the source chosen by :func:`next_source`; for
    other choices the sources behind ``mu`` need not be consistent and the
    construction may fail.
    """
    _check_pair(S, T)
    S2, T2, stage = _stage(S, T, mu, anchor)
    return S2, T2, list(stage.moves)


@dataclass(frozen=True)
class PathCertificate:
    start: BipartiteTree
    target: BipartiteTree
    moves_on_S: tuple[PivotMove, ...]
    moves_on_T: tuple[PivotMove, ...]
    meeting_tree: BipartiteTree
    stages: tuple[Stage, ...] = field(default=(), compare=False)

    @property
    def total_length(self) -> int:
        return len(self.moves_on_S) + len(self.moves_on_T)

    @property
    def bound(self) -> int:
        return diameter_bound(self.start.df)

    def walk(self) -> list[PivotMove]:
        """Single move list leading from ``start`` to ``target``."""
        return list(self.moves_on_S) + [mv.inverse() for mv in reversed(self.moves_on_T)]

    def verify(self) -> None:
        """Replay both move lists; raises on any inconsistency."""
        if apply_path(self.start, self.moves_on_S) != self.meeting_tree:
            raise ValidationError("moves on S do not reach the meeting tree")
        if apply_path(self.target, self.moves_on_T) != self.meeting_tree:
            raise ValidationError("moves on T do not reach the meeting tree")

    def to_json_obj(self) -> dict:
        return {
            "degrees": list(self.start.df.degrees),
            "from": self.start.encode(),
            "to": self.target.encode(),
            "moves_on_S": [str(mv) for mv in self.moves_on_S],
            "moves_on_T": [str(mv) for mv in self.moves_on_T],
            "meeting_tree": self.meeting_tree.encode(),
            "total_length": self.total_length,
            "bound": self.bound,
        }


def bounded_pivot_path(
    S: BipartiteTree, T: BipartiteTree, anchor: int = 0, check_bound: bool = True
) -> PathCertificate:
    _check_pair(S, T)
    start, target = S, T
    moves_S: list[PivotMove] = []
    moves_T: list[PivotMove] = []
    stages = []
    while (mu := next_source(S, T, anchor)) is not None:
        before = consistent_sources(S, T)
        S, T, stage = _stage(S, T, mu, anchor)
        assert before < consistent_sources(S, T), (before, mu)
        stages.append(stage)
        for side, move in stage.moves:
            (moves_S if side == "S" else moves_T).append(move)
    assert S == T
    cert = PathCertificate(start, target, tuple(moves_S), tuple(moves_T), S, tuple(stages))
    if check_bound and cert.total_length > cert.bound:
        raise BoundViolation(
            f"path of length {cert.total_length} exceeds 2(n-1) = {cert.bound} "
            f"for d=({start.df})",
            payload=cert,
        )
    return cert


def apply_path(start: BipartiteTree, moves: Sequence[PivotMove]) -> BipartiteTree:
    tree = start
    for step, move in enumerate(moves):
        if move.inserted in tree:
            raise IllegalMove(step, f"edge {move.inserted} already present")
        if move.removed not in tree:
            raise IllegalMove(step, f"edge {move.removed} not present")
        if move.inserted[0] != move.removed[0]:
            raise IllegalMove(step, "inserted and removed edges have different sources")
        try:
            tree, done = pivot(tree, move.inserted)
        except ValidationError as exc:
            raise IllegalMove(step, str(exc)) from None
        if done.removed != move.removed:
            raise IllegalMove(step, f"pivot removes {done.removed}, not {move.removed}")
        if not is_member(tree):
            raise IllegalMove(step, "result is not a tree of T_d")
    return tree
