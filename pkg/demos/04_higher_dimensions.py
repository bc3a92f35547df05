"""
Three heaps and beyond
======================

With three heaps and moves "any amount from one heap, one token from any
two, one token from all three" no Grundy formula is known, but the
P-positions have exact arithmetic.  Strike the all-three move and the full
Grundy formula comes back; allow n heaps with a budget on multi-heap
removals and the same shape persists.
"""

import itertools

import numpy as np

import ryuo_nim as rn

# P-positions of the three-heap game with the triple move.
print("3-dim P-positions with every heap <= 4:")
hits = [pos for pos in itertools.product(range(5), repeat=3)
        if rn.three_dim_is_p(pos)]
print(" ", hits)

induction = rn.p_position_table(rn.three_dim(), (14, 14, 14))
agree = all(bool(induction[pos]) == rn.three_dim_is_p(pos)
            for pos in np.ndindex(induction.shape))
print("arithmetic == backward induction on 15^3:", agree)

# The triple move matters: (1,1,1) flips from P to N when it exists.
print("\n(1,1,1) with triple move   :", rn.outcome(rn.three_dim(), (1, 1, 1)).value)
print("(1,1,1) without triple move:",
      rn.outcome(rn.modified_three_dim(), (1, 1, 1)).value)

# Without it, the Grundy value is mod-3 residue plus 3 * nim-sum of thirds.
report = rn.verify_equivalence(rn.modified_three_dim(), (12, 12, 12))
print("\nmodified 3-dim formula sweep:", report.summary())

# n heaps, remove at least 1 from each of k >= 2 heaps, total <= p - 1.
for p, n in ((2, 4), (3, 4)):
    report = rn.verify_equivalence(rn.n_dim(p, n), (6,) * n)
    print(f"n-dim formula sweep       : {report.summary()}")

# p = 3, n = 3 allows exactly "one token from two heaps": the same game
# as the modified three-heap rules.
a = rn.brute_force_table(rn.n_dim(3, 3), (10, 10, 10))
b = rn.brute_force_table(rn.modified_three_dim(), (10, 10, 10))
print("ndim(3,3) == modified 3-dim on 11^3:", bool((a.values == b.values).all()))

# And p = 2 shuts multi-heap moves off entirely: plain n-heap Nim.
rules = rn.n_dim(2, 4)
sample = [(1, 2, 3, 4), (5, 0, 2, 7), (3, 3, 3, 3)]
for pos in sample:
    assert rn.grundy_closed_form(rules, pos) == rn.nim_sum(pos)
print("ndim(2, 4) equals 4-heap Nim on samples:", sample)
