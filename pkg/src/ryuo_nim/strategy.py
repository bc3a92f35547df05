"""Outcome classification and optimal move selection for every variant.

Closed forms (or exact P-position arithmetic) are used wherever they exist;
the remaining restricted parameter choices fall back to the brute-force
oracle over the minimal enclosing region.
"""

from __future__ import annotations

import itertools
from typing import NamedTuple

import numpy as np

from . import games, grundy, pass_play
from .errors import NoMoveError
from .games import Outcome, PassPosition, Position, RuleSet, Variant


class MoveRecommendation(NamedTuple):
    target: tuple  # Position, or PassPosition for the pass variant
    winning: bool


def three_dim_is_p(pos) -> bool:
    """Exact P-position test for the three-heap game with the all-three
    move: coordinate sum divisible by 3, and the nim-sum of the heap
    quotients vanishes -- XORed with 1 first when every heap is 1 mod 3."""
    x, y, z = pos
    if (x + y + z) % 3 != 0:
        return False
    folded = (x // 3) ^ (y // 3) ^ (z // 3)
    if x % 3 == 1 and y % 3 == 1 and z % 3 == 1:
        return folded ^ 1 == 0
    return folded == 0


def outcome(rules: RuleSet, pos) -> Outcome:
    """P/N outcome of a position: P exactly when its Grundy value is 0."""
    if rules.variant is Variant.PASS_RYUO:
        return pass_play.classify_pass(rules.p, pos)
    coords = games.validate_position(rules, pos)
    if rules.variant is Variant.THREE_DIM:
        return Outcome.P if three_dim_is_p(coords) else Outcome.N
    if grundy.has_closed_form(rules):
        return Outcome.P if grundy.grundy_closed_form(rules, coords) == 0 else Outcome.N
    return Outcome.P if grundy.grundy_brute_force(rules, coords) == 0 else Outcome.N


def _winning_filter(rules: RuleSet, options: list[Position]):
    if rules.variant is Variant.THREE_DIM:
        return [o for o in options if three_dim_is_p(o)]
    if grundy.has_closed_form(rules):
        return [o for o in options if grundy.grundy_closed_form(rules, o) == 0]
    if not options:
        return []
    bounds = tuple(max(o[i] for o in options) for i in range(len(options[0])))
    table = grundy.brute_force_table(rules, bounds)
    return [o for o in options if table[o] == 0]


def best_moves(rules: RuleSet, pos) -> list[MoveRecommendation]:
    """All winning options (those landing on a P-position), in lexicographic
    order.  Empty exactly when ``pos`` is itself a P-position or terminal."""
    if rules.variant is Variant.PASS_RYUO:
        opts = sorted(games.legal_moves_pass(rules.p, pos))
        winning = [o for o in opts
                   if pass_play.classify_pass(rules.p, o) is Outcome.P]
    else:
        opts = sorted(games.legal_moves(rules, pos))
        winning = _winning_filter(rules, opts)
    return [MoveRecommendation(o, True) for o in winning]


def engine_move(rules: RuleSet, pos) -> MoveRecommendation:
    """Deterministic engine choice: the first winning option, or -- from a
    lost position -- the lexicographically smallest legal option."""
    if rules.variant is Variant.PASS_RYUO:
        opts = sorted(games.legal_moves_pass(rules.p, pos))
    else:
        opts = sorted(games.legal_moves(rules, pos))
    if not opts:
        raise NoMoveError(f"no move from terminal position {tuple(pos)}")
    best = best_moves(rules, pos)
    if best:
        return best[0]
    return MoveRecommendation(opts[0], False)


def p_position_table(rules: RuleSet, bounds):
    """Boolean array of P-positions over a region by plain win/loss backward
    induction -- no Grundy values involved.  Oracle counterpart of the
    3-dimensional P-position arithmetic."""
    bs = grundy._check_bounds(bounds, rules.dimension)
    shape = tuple(b + 1 for b in bs)
    is_p = np.zeros(shape, dtype=bool)
    for pos in itertools.product(*(range(s) for s in shape)):
        is_p[pos] = not any(is_p[o] for o in games.legal_moves(rules, pos))
    return is_p
