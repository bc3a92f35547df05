"""
Move sets and the necessary condition
=====================================

A piece is described by the set of offsets it may subtract from its
position.  The rook contributes the two axis rays, the queen adds the
diagonal ray, and the dragon-king for p adds the finite block of offsets
with 1 <= s + t <= p - 1.  A piece's game can only have the two-heap
closed form if its move set contains the rays and that whole block --
and dropping any single block offset breaks the formula at a concrete,
nearby position.
"""

import ryuo_nim as rn

rook = rn.rook_move_set()
queen = rn.queen_move_set()
dragon = rn.generalized_ryuo_move_set(3)

print("offsets usable from (3, 2):")
for name, piece in [("rook", rook), ("queen", queen), ("dragon-king p=3", dragon)]:
    print(f"  {name:16s} {piece.offsets_within(3, 2)}")

# The rook game is plain Nim; the queen game is the classic corner game.
print("\nrook value at (6, 9) :", rn.grundy_custom_moveset(rook, (6, 9)),
      "(= nim-sum", rn.nim_sum((6, 9)), ")")
print("queen value at (3, 3):", rn.grundy_custom_moveset(queen, (3, 3)))

# Which pieces could have the p = 3 closed form at all?
for name, piece in [("rook", rook), ("queen", queen), ("dragon-king p=3", dragon)]:
    verdict = rn.satisfies_necessary_condition(piece, 3)
    print(f"necessary condition for p=3, {name:16s}: {verdict}")

# The queen contains the p = 3 block but her values still differ -- the
# condition is necessary, not sufficient.  The first disagreement:
report = rn.verify_moveset_equivalence(queen, rn.generalized_ryuo(3), (4, 4))
first = report.mismatches[0]
print(f"\nqueen vs p=3 formula: first mismatch at {first.position} "
      f"(oracle {first.oracle}, formula {first.formula})")

# Remove any single required offset from the dragon-king and the formula
# must fail somewhere inside the (p+2) x (p+2) corner.
print("\nwitnesses after dropping one offset (p = 4):")
for dropped in rn.droppable_offsets(4):
    w = rn.necessary_condition_witness(4, dropped)
    print(f"  drop {dropped}: formula first fails at {w.position} "
          f"(oracle {w.oracle}, formula {w.formula})")
