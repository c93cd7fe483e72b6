"""Interactive puzzle sessions.

A session places one counter on every point of the plane except the hole;
counters are labeled by their home point id.  Applying a move slides the
counter on the target point into the hole and applies the line involution
to the rest of their common line.  The scramble walk uses a fixed linear
congruential generator so that sessions replay identically across
implementations:

    state' = (1664525 * state + 1013904223) mod 2^32

with the target drawn as candidates[state' mod (n-1)] from the ascending
list of point ids excluding the current hole.
"""

from __future__ import annotations

import secrets
from dataclasses import dataclass

from . import moves
from .plane import Plane, line_through

_LCG_MULT = 1664525
_LCG_INC = 1013904223
_LCG_MOD = 1 << 32


@dataclass(frozen=True)
class MovePreview:
    """What an elementary move does: the line it acts on, the hole/target
    swap, and the transposed pairs of the line involution."""

    target: int
    line: int
    swap: tuple[int, int]
    pairs: tuple[tuple[int, int], ...]

    def as_dict(self) -> dict:
        return {
            "target": self.target,
            "line": self.line,
            "swap": list(self.swap),
            "pairs": [list(p) for p in self.pairs],
        }


class PuzzleSession:
    __slots__ = ("id", "plane", "q", "alpha", "hole", "arrangement",
                 "history", "seed", "solved")

    def __init__(self, session_id: str, plane: Plane, alpha: int, seed: int):
        self.id = session_id
        self.plane = plane
        self.q = plane.q
        self.alpha = alpha
        self.hole = alpha
        self.arrangement: list[int | None] = list(range(plane.n))
        self.arrangement[alpha] = None
        self.history: list[int] = [alpha]
        self.seed = seed
        self.solved = True

    def state_dict(self) -> dict:
        return {
            "id": self.id,
            "q": self.q,
            "hole": self.hole,
            "arrangement": list(self.arrangement),
            "history": list(self.history),
            "solved": self.solved,
        }

    def _recompute_solved(self) -> None:
        self.solved = self.hole == self.alpha and all(
            label == p
            for p, label in enumerate(self.arrangement)
            if p != self.hole
        )


def create_session(
    plane: Plane,
    alpha: int = 0,
    scramble_length: int = 0,
    seed: int | None = None,
    session_id: str | None = None,
) -> PuzzleSession:
    if not 0 <= alpha < plane.n:
        raise ValueError(f"alpha must be a point id below {plane.n}")
    if scramble_length < 0:
        raise ValueError("scramble length cannot be negative")
    if seed is None:
        seed = secrets.randbelow(_LCG_MOD)
    session = PuzzleSession(session_id or secrets.token_hex(8), plane, alpha, seed)
    state = seed % _LCG_MOD
    for _ in range(scramble_length):
        state = (_LCG_MULT * state + _LCG_INC) % _LCG_MOD
        candidates = [p for p in range(plane.n) if p != session.hole]
        apply_move(session, candidates[state % len(candidates)])
    return session


def preview_move(session: PuzzleSession, target: int) -> MovePreview:
    """Describe the move without applying it."""
    plane = session.plane
    if not 0 <= target < plane.n:
        raise ValueError(f"target must be a point id below {plane.n}")
    if target == session.hole:
        raise ValueError("illegal move: the target is the hole")
    pairs = sorted(
        {tuple(sorted((a, b))) for a, b in
         moves.involution_images(plane, session.hole, target).items()}
    )
    return MovePreview(
        target=target,
        line=line_through(plane, session.hole, target),
        swap=(session.hole, target),
        pairs=tuple(pairs),
    )


def apply_move(session: PuzzleSession, target: int) -> MovePreview:
    """Slide the counter on target into the hole; returns what was applied."""
    preview = preview_move(session, target)
    plane = session.plane
    images = moves.move_images(plane, session.hole, target)
    arrangement = list(session.arrangement)
    for src, dst in images.items():
        arrangement[dst] = session.arrangement[src]
    session.arrangement = arrangement
    session.hole = target
    session.history.append(target)
    session._recompute_solved()
    return preview


def undo_move(session: PuzzleSession) -> None:
    """Revert the most recent move."""
    if len(session.history) < 2:
        raise ValueError("no moves to undo")
    previous = session.history[-2]
    images = moves.move_images(session.plane, session.hole, previous)
    arrangement = list(session.arrangement)
    for src, dst in images.items():
        arrangement[dst] = session.arrangement[src]
    session.arrangement = arrangement
    session.hole = previous
    session.history.pop()
    session._recompute_solved()
