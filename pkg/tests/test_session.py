import pytest

from planepuzzle.analysis import plane_for
from planepuzzle.session import (
    apply_move,
    create_session,
    preview_move,
    undo_move,
)


def test_fresh_session_is_solved():
    s = create_session(plane_for(5))
    assert s.solved and s.hole == 0
    assert s.arrangement[0] is None
    assert all(s.arrangement[p] == p for p in range(1, 31))
    assert s.history == [0]


def test_single_move_never_solves():
    s = create_session(plane_for(5), scramble_length=1, seed=7)
    assert not s.solved
    assert len(s.history) == 2


def test_scramble_replay_reproduces_arrangement():
    pl = plane_for(3)
    s = create_session(pl, scramble_length=20, seed=42)
    replay = create_session(pl)
    for target in s.history[1:]:
        apply_move(replay, target)
    assert replay.arrangement == s.arrangement
    assert replay.hole == s.hole


def test_scramble_is_deterministic_per_seed():
    pl = plane_for(5)
    a = create_session(pl, scramble_length=25, seed=9)
    b = create_session(pl, scramble_length=25, seed=9)
    c = create_session(pl, scramble_length=25, seed=10)
    assert a.arrangement == b.arrangement and a.history == b.history
    assert c.arrangement != a.arrangement


def test_lcg_first_draw_matches_documented_constants():
    # Independent replay of the documented generator:
    # state' = (1664525*state + 1013904223) mod 2^32, index = state' mod (n-1).
    pl = plane_for(3)
    seed = 42
    state = (1664525 * seed + 1013904223) % (1 << 32)
    candidates = [p for p in range(13) if p != 0]
    expected_first = candidates[state % 12]
    s = create_session(pl, scramble_length=1, seed=seed)
    assert s.history[1] == expected_first


def test_move_and_back_restores():
    s = create_session(plane_for(5), scramble_length=6, seed=3)
    before = list(s.arrangement)
    hole = s.hole
    target = next(p for p in range(31) if p != hole)
    apply_move(s, target)
    apply_move(s, hole)
    assert s.arrangement == before and s.hole == hole


def test_move_worked_example_q5():
    # Solved board, hole <(1,1,0)>, slide <(1,0,0)>: the two involution
    # pairs swap and the hole changes place with the target.
    pl = plane_for(5)
    al, be = pl.point_id((1, 1, 0)), pl.point_id((1, 0, 0))
    p010, p130 = pl.point_id((0, 1, 0)), pl.point_id((1, 3, 0))
    p120, p140 = pl.point_id((1, 2, 0)), pl.point_id((1, 4, 0))
    s = create_session(pl, alpha=al)
    preview = apply_move(s, be)
    assert s.hole == be
    assert s.arrangement[al] == be and s.arrangement[be] is None
    assert s.arrangement[p010] == p130 and s.arrangement[p130] == p010
    assert s.arrangement[p120] == p140 and s.arrangement[p140] == p120
    assert preview.swap == (al, be)
    assert set(preview.pairs) == {
        tuple(sorted((p010, p130))), tuple(sorted((p120, p140))),
    }


def test_preview_matches_applied_and_does_not_mutate():
    s = create_session(plane_for(7), scramble_length=4, seed=1)
    before = list(s.arrangement)
    target = next(p for p in range(57) if p != s.hole)
    pv = preview_move(s, target)
    assert s.arrangement == before  # no state change
    assert len(pv.pairs) == 3  # (q-1)/2 transposed pairs at q = 7
    applied = apply_move(s, target)
    assert pv == applied


def test_move_to_hole_rejected():
    s = create_session(plane_for(5))
    with pytest.raises(ValueError, match="illegal move"):
        apply_move(s, s.hole)
    with pytest.raises(ValueError):
        preview_move(s, 31)


def test_undo_restores_previous_arrangement():
    s = create_session(plane_for(5), scramble_length=5, seed=11)
    before = list(s.arrangement)
    hole = s.hole
    target = next(p for p in range(31) if p != hole)
    apply_move(s, target)
    undo_move(s)
    assert s.arrangement == before and s.hole == hole
    assert len(s.history) == 6


def test_undo_without_moves_rejected():
    s = create_session(plane_for(5))
    with pytest.raises(ValueError, match="undo"):
        undo_move(s)


def test_reversed_history_returns_to_solved():
    s = create_session(plane_for(5), scramble_length=30, seed=123)
    assert not s.solved
    for target in reversed(s.history[:-1]):
        apply_move(s, target)
    assert s.solved


def test_session_create_validation():
    pl = plane_for(5)
    with pytest.raises(ValueError):
        create_session(pl, alpha=99)
    with pytest.raises(ValueError):
        create_session(pl, scramble_length=-1)


def test_arrangement_is_a_bijection_after_scramble():
    s = create_session(plane_for(9), scramble_length=50, seed=5)
    labels = [x for x in s.arrangement if x is not None]
    assert len(labels) == 90 and len(set(labels)) == 90
    assert s.arrangement[s.hole] is None
