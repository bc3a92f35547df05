"""
Perfect play
============

A position is N exactly when some option has Grundy value 0; the winning
strategy is simply "move to a zero".  The engine lists all such options,
plays the lexicographically first, and from a lost position falls back to
the smallest legal move.  Watch it converse with itself.
"""

import ryuo_nim as rn
from ryuo_nim import Outcome


def transcript(rules, start):
    pos = start
    print(f"\nself-play, {rules.describe()} from {start} "
          f"({rn.outcome(rules, start).value}-position):")
    mover = 1
    while any(pos):
        move = rn.engine_move(rules, pos)
        tag = "winning" if move.winning else "fallback"
        print(f"  player {mover}: {tuple(pos)} -> {tuple(move.target)} ({tag})")
        pos = move.target
        mover = 3 - mover
    print(f"  player {3 - mover} took the last token and wins")


transcript(rn.generalized_ryuo(3), (5, 7))
transcript(rn.three_dim(), (2, 3, 4))

# The winning options themselves, for a couple of positions:
for pos in [(2, 2), (4, 6), (1, 2)]:
    moves = rn.best_moves(rn.generalized_ryuo(3), pos)
    shown = [m.target for m in moves] or "none (P-position)"
    print(f"winning moves from {pos}: {shown}")

# With the pass in hand the engine knows when burning it wins: from (3, 3)
# the pass move lands on equal heaps with sum divisible by 3, a P-position
# of the spent layer, and it shows up among the winning options.
state = (3, 3, True)
moves = rn.best_moves(rn.pass_ryuo(3), state)
print(f"\nwinning moves from {state}: {[tuple(m.target) for m in moves]}")
assert (3, 3, False) in [m.target for m in moves]
assert rn.classify_pass(3, (3, 3, False)) is Outcome.P
