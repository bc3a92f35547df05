"""
Grundy heatmaps
===============

The closed form paints a striking quilt: p x p tiles whose base colour is
the scaled nim-sum of the quotients, shaded within each tile by the sum
residue.  P-positions (value 0) are the dark cells marching down the
diagonal.  Writes two PNGs next to this script.
"""

import pathlib

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

import ryuo_nim as rn

HERE = pathlib.Path(__file__).resolve().parent
WIDTH = 48

fig, axes = plt.subplots(2, 3, figsize=(13, 8), constrained_layout=True)
for ax, p in zip(axes.flat, (1, 2, 3, 4, 5, 8)):
    doc = rn.build_table(rn.generalized_ryuo(p), WIDTH)
    grid = np.array(doc.rows)  # rows indexed by y
    ax.imshow(grid, origin="upper", cmap="viridis")
    zeros = np.argwhere(grid == 0)
    ax.scatter(zeros[:, 1], zeros[:, 0], s=4, c="red", marker="s")
    ax.set_title(f"p = {p}")
    ax.set_xlabel("x")
    ax.set_ylabel("y")
fig.suptitle("Grundy values, two-heap dragon-king game (P-positions in red)")
out = HERE / "heatmap_two_heap.png"
fig.savefig(out, dpi=110)
print("wrote", out)

# The pass layer: no clean value pattern, but the P-cells still line up
# into the three families.
fig, axes = plt.subplots(1, 2, figsize=(11, 5), constrained_layout=True)
for ax, layer in zip(axes, (False, True)):
    table = rn.pass_grundy_table(3, (24, 24), pass_available=layer)
    grid = table.values.T
    ax.imshow(grid, origin="upper", cmap="viridis")
    zeros = np.argwhere(grid == 0)
    ax.scatter(zeros[:, 1], zeros[:, 0], s=10, c="red", marker="s")
    ax.set_title("pass available" if layer else "pass spent")
    ax.set_xlabel("x")
    ax.set_ylabel("y")
fig.suptitle("p = 3 with a one-time pass (P-positions in red)")
out = HERE / "heatmap_pass_variant.png"
fig.savefig(out, dpi=110)
print("wrote", out)
