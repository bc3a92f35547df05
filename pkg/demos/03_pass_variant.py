"""
The one-time pass
=================

Give either player a single pass, never usable from the terminal position,
and the Grundy values lose their pattern -- but the P-positions don't.
With the pass spent they are the ordinary ones; with the pass in hand they
form three thin families.  This script draws both layers, marks the
families, and checks the classification against raw backward induction.
"""

import ryuo_nim as rn
from ryuo_nim import Outcome

P = 3
WIDTH = 12


def draw_layer(pass_available: bool) -> None:
    label = "pass available" if pass_available else "pass spent"
    print(f"\nGrundy values, {label} (p = {P}); P-positions bracketed:")
    table = rn.pass_grundy_table(P, (WIDTH, WIDTH), pass_available)
    print("      " + "".join(f"{x:>4}" for x in range(WIDTH + 1)))
    for y in range(WIDTH + 1):
        cells = []
        for x in range(WIDTH + 1):
            value = table[(x, y)]
            state = (x, y, pass_available)
            if rn.classify_pass(P, state) is Outcome.P:
                cells.append(f"[{value}]".rjust(4))
            else:
                cells.append(f"{value}".rjust(4))
        print(f"  y={y:<2} " + "".join(cells))


draw_layer(False)
draw_layer(True)

print("\nthe three families with the pass in hand, inside the window:")
band = [(x, P + 1 - x) for x in range(1, P + 1)]
print("  antidiagonal band :", band)
diag = [(P * n + 1,) * 2 for n in range(1, 4)]
print("  equal heaps p*n+1 :", diag)
pairs = [(k + P * n, P + 2 - k + P * n) for n in (1, 2) for k in range(2, P + 1)]
print("  offset pairs      :", pairs)

# Classification vs backward induction, both layers.
for p in (3, 4, 5):
    report = rn.verify_pass_theorem(p, (39, 39))
    print(report.summary())
    assert report.ok

# For p <= 2 the families overshoot: a pass from the diagonal escapes into
# the spent-layer P-set, and the verifier says so instead of hiding it.
report = rn.verify_pass_theorem(2, (10, 10))
print(f"p=2 control: {len(report.mismatches)} honest mismatches, "
      f"first at {report.mismatches[0].position}")
