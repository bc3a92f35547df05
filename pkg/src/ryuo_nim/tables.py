"""Grundy-table documents with byte-stable CSV and JSON renderings.

Grids follow the board convention: the origin sits in the upper-left corner,
x runs right and y runs down, so ``rows[y][x]`` is the value at (x, y).
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from . import games, grundy, pass_play
from .errors import UnsupportedVariantError
from .games import RuleSet, Variant

LAYER_PASS = "pass"
LAYER_NOPASS = "nopass"


@dataclass(frozen=True)
class TableDocument:
    game: str
    params: dict[str, int]
    region_max: int
    rows: list[list[int]]
    layer: str | None = None

    def header_fields(self) -> list[tuple[str, object]]:
        fields: list[tuple[str, object]] = [("game", self.game)]
        fields += list(self.params.items())
        if self.layer is not None:
            fields.append(("layer", self.layer))
        fields.append(("region", self.region_max))
        return fields

    def to_csv(self) -> str:
        lines = ["# " + " ".join(f"{k}={v}" for k, v in self.header_fields())]
        lines.append("y\\x," + ",".join(str(x) for x in range(self.region_max + 1)))
        for y, row in enumerate(self.rows):
            lines.append(",".join([str(y)] + [str(v) for v in row]))
        return "\n".join(lines) + "\n"

    def to_json_obj(self) -> dict:
        obj: dict = {"game": self.game, "params": dict(self.params),
                     "max": self.region_max}
        if self.layer is not None:
            obj["layer"] = self.layer
        obj["rows"] = self.rows
        return obj

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":")) + "\n"


def parse_csv(text: str) -> TableDocument:
    """Inverse of :meth:`TableDocument.to_csv`."""
    lines = text.splitlines()
    if len(lines) < 2 or not lines[0].startswith("# "):
        raise ValueError("not a table document")
    meta: dict[str, str] = {}
    for chunk in lines[0][2:].split(" "):
        key, _, value = chunk.partition("=")
        meta[key] = value
    game = meta.pop("game")
    layer = meta.pop("layer", None)
    region_max = int(meta.pop("region"))
    params = {k: int(v) for k, v in meta.items()}
    rows = []
    for line in lines[2:]:
        cells = line.split(",")
        rows.append([int(v) for v in cells[1:]])
    return TableDocument(game, params, region_max, rows, layer)


def _closed_form_grid(rules: RuleSet, m: int) -> np.ndarray:
    """Vectorized closed-form values over [0, m]^2, indexed [x, y]."""
    x = np.arange(m + 1, dtype=np.int64)[:, None]
    y = np.arange(m + 1, dtype=np.int64)[None, :]
    p = rules.p
    v = rules.variant
    if v is Variant.RYUO or v is Variant.NDIM:
        a, b = x, y
    elif v is Variant.RESTRICTED_SIDE:
        a, b = x % rules.q, y % rules.q
    else:  # RESTRICTED_HV
        a, b = x % rules.q, y % rules.r
    base = (a + b) % p + p * ((a // p) ^ (b // p))
    if v is Variant.RESTRICTED_SIDE and rules.q % p == 1:
        special = (x % rules.q == 0) & (y % rules.q == 0) & (x != 0) & (y != 0)
        base = np.where(special, rules.q, base)
    return np.broadcast_to(base, (m + 1, m + 1))


def build_table(rules: RuleSet, region_max: int,
                layer: str | None = None) -> TableDocument:
    """Grundy grid for a two-heap variant: closed form where one exists,
    otherwise the oracle.  ``layer`` selects the pass layer and is only
    meaningful (and then required) for the pass variant."""
    if rules.dimension != 2:
        raise UnsupportedVariantError(
            f"{rules.variant.value} has no two-dimensional grid")
    if region_max < 0:
        raise ValueError("region max must be non-negative")
    if rules.variant is Variant.PASS_RYUO:
        if layer not in (LAYER_PASS, LAYER_NOPASS):
            raise ValueError("pass-ryuo tables need layer 'pass' or 'nopass'")
        table = pass_play.pass_grundy_table(rules.p, (region_max, region_max),
                                            pass_available=(layer == LAYER_PASS))
        grid = table.values
    elif layer is not None:
        raise ValueError("layer applies only to pass-ryuo tables")
    elif grundy.has_closed_form(rules):
        grid = _closed_form_grid(rules, region_max)
    else:
        grid = grundy.brute_force_table(rules, (region_max, region_max)).values
    rows = [[int(v) for v in grid[:, y]] for y in range(region_max + 1)]
    return TableDocument(rules.variant.value, rules.params, region_max,
                         rows, layer)
