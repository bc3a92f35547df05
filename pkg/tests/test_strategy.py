"""Outcome classification, winning-move selection, and engine soundness."""

import itertools

import pytest

import ryuo_nim as rn
from ryuo_nim import Outcome, PassPosition
from ryuo_nim.errors import NoMoveError


def test_outcome_examples():
    assert rn.outcome(rn.generalized_ryuo(3), (1, 2)) is Outcome.P
    assert rn.outcome(rn.generalized_ryuo(3), (17, 19)) is Outcome.N
    assert rn.outcome(rn.three_dim(), (1, 1, 4)) is Outcome.P
    assert rn.outcome(rn.three_dim(), (1, 1, 1)) is Outcome.N
    assert rn.outcome(rn.pass_ryuo(3), (2, 2, True)) is Outcome.P


@pytest.mark.parametrize("rules", [
    rn.generalized_ryuo(3),
    rn.restricted_side(3, 5),  # oracle fallback path
    rn.three_dim(),
    rn.n_dim(3, 3),
], ids=lambda r: r.describe())
def test_terminal_is_p(rules):
    assert rn.outcome(rules, (0,) * rules.dimension) is Outcome.P


def test_best_moves_examples():
    moves = rn.best_moves(rn.generalized_ryuo(3), (2, 2))
    assert [m.target for m in moves] == [(1, 2), (2, 1)]
    assert all(m.winning for m in moves)
    assert rn.best_moves(rn.generalized_ryuo(3), (1, 2)) == []
    pass_best = rn.best_moves(rn.pass_ryuo(3), (1, 1, True))
    assert [m.target for m in pass_best] == [PassPosition(0, 0, True)]
    assert rn.best_moves(rn.three_dim(), (1, 1, 1))[0].target == (0, 0, 0)


def test_engine_move_examples():
    move = rn.engine_move(rn.generalized_ryuo(3), (2, 2))
    assert move == rn.MoveRecommendation((1, 2), True)
    # losing position: lexicographically smallest option; (1, 2) has the
    # diagonal option (0, 1), which sorts before every axis move
    move = rn.engine_move(rn.generalized_ryuo(3), (1, 2))
    assert move == rn.MoveRecommendation((0, 1), False)
    with pytest.raises(NoMoveError):
        rn.engine_move(rn.pass_ryuo(3), (0, 0, True))
    with pytest.raises(NoMoveError):
        rn.engine_move(rn.generalized_ryuo(3), (0, 0))


def test_best_moves_nonempty_iff_n_position():
    rules = rn.generalized_ryuo(4)
    for pos in itertools.product(range(13), repeat=2):
        if pos == (0, 0):
            continue
        winning = rn.best_moves(rules, pos)
        if rn.outcome(rules, pos) is Outcome.N:
            assert winning
        else:
            assert not winning


@pytest.mark.parametrize("rules, width", [
    (rn.generalized_ryuo(3), 15),
    (rn.restricted_side(3, 4), 15),
    (rn.restricted_side(3, 5), 10),   # no closed form: oracle end to end
    (rn.three_dim(), 6),
    (rn.n_dim(2, 4), 4),
], ids=lambda v: v.describe() if hasattr(v, "describe") else str(v))
def test_engine_soundness(rules, width):
    # from N land on P; from P every option is N
    is_p = rn.p_position_table(rules, (width,) * rules.dimension)
    for pos in itertools.product(range(width + 1), repeat=rules.dimension):
        if pos == (0,) * rules.dimension:
            continue
        if is_p[pos]:
            for opt in rn.legal_moves(rules, pos):
                assert not is_p[opt]
        else:
            target = rn.engine_move(rules, pos).target
            assert is_p[target], (pos, target)


def test_engine_soundness_pass_variant():
    table = rn.outcome_backward_induction(3, (12, 12))
    for state in table.states():
        if (state.x, state.y) == (0, 0):
            continue
        if table.outcome_at(state) is Outcome.N:
            move = rn.engine_move(rn.pass_ryuo(3), state)
            assert move.winning
            assert table.outcome_at(move.target) is Outcome.P


@pytest.mark.parametrize("rules, start", [
    (rn.generalized_ryuo(3), (30, 30)),
    (rn.restricted_side(3, 4), (20, 17)),
    (rn.n_dim(3, 3), (7, 8, 9)),
], ids=lambda v: str(v))
def test_self_play_terminates(rules, start):
    pos = start
    steps = 0
    while any(pos):
        pos = rn.engine_move(rules, pos).target
        steps += 1
        assert steps <= sum(start) + 1
    assert steps <= sum(start) + 1


def test_self_play_pass_variant():
    pos = PassPosition(5, 6, True)
    steps = 0
    while (pos.x, pos.y) != (0, 0):
        pos = rn.engine_move(rn.pass_ryuo(3), pos).target
        steps += 1
        assert steps <= 13
