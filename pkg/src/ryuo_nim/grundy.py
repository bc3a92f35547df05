"""Grundy-value computation: closed forms, brute-force oracles, sweeps.

Every variant with a known formula gets a closed-form evaluator, and every
variant gets an independent bottom-up mex-recursion oracle.  The two are
deliberately kept apart -- the oracle never consults a formula -- so that
:func:`verify_equivalence` is a meaningful check and not a tautology.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import reduce
from operator import xor
from typing import Iterable, NamedTuple

import numpy as np

from . import games
from .errors import (NoClosedFormError, RegionError, TheoremCounterexampleError,
                     UnsupportedVariantError)
from .games import MoveSet, Position, RuleSet, Variant


def mex(values: Iterable[int]) -> int:
    """Least non-negative integer not in ``values``.

    Uses a boolean scratch of length len+1: the mex of n values is at most n,
    so anything larger can be ignored outright.
    """
    vals = list(values)
    seen = bytearray(len(vals) + 1)
    for v in vals:
        if v < len(seen):
            seen[v] = 1
    return seen.index(0)


def nim_sum(values: Iterable[int]) -> int:
    """Bitwise XOR fold; the empty fold is 0."""
    return reduce(xor, values, 0)


def has_closed_form(rules: RuleSet) -> bool:
    v = rules.variant
    if v in (Variant.RYUO, Variant.MODIFIED_THREE_DIM, Variant.NDIM):
        return True
    if v is Variant.RESTRICTED_SIDE:
        return rules.q % rules.p in (0, 1)
    if v is Variant.RESTRICTED_HV:
        return rules.q % rules.p == 0 and rules.r % rules.p == 0
    return False


def grundy_closed_form(rules: RuleSet, pos) -> int:
    """Exact Grundy value from the variant's closed form.

    Raises :class:`NoClosedFormError` for the pass variant, the plain
    3-dimensional game (only its P-positions have a formula), and restricted
    parameter choices outside the proven cases.
    """
    coords = games.validate_position(rules, pos)
    v = rules.variant
    if v is Variant.RYUO:
        x, y = coords
        p = rules.p
        return (x + y) % p + p * ((x // p) ^ (y // p))
    if v is Variant.RESTRICTED_SIDE:
        p, q = rules.p, rules.q
        x, y = coords
        if q % p == 0:
            a, b = x % q, y % q
            return (a + b) % p + p * ((a // p) ^ (b // p))
        if q % p == 1:
            if x % q == 0 and y % q == 0 and x != 0 and y != 0:
                return q
            a, b = x % q, y % q
            return (a + b) % p + p * ((a // p) ^ (b // p))
        raise NoClosedFormError(
            f"restricted-side has no formula for q mod p = {q % p}; use the oracle")
    if v is Variant.RESTRICTED_HV:
        p, q, r = rules.p, rules.q, rules.r
        if q % p != 0 or r % p != 0:
            raise NoClosedFormError(
                "restricted-hv has a formula only when q and r are both "
                "multiples of p; use the oracle")
        x, y = coords
        a, b = x % q, y % r
        return (a + b) % p + p * ((a // p) ^ (b // p))
    if v is Variant.MODIFIED_THREE_DIM:
        return sum(coords) % 3 + 3 * nim_sum(c // 3 for c in coords)
    if v is Variant.NDIM:
        p = rules.p
        return sum(coords) % p + p * nim_sum(c // p for c in coords)
    raise NoClosedFormError(f"{v.value} has no closed-form Grundy formula")


@dataclass(frozen=True)
class GrundyTable:
    """Dense Grundy values over a box region.

    ``bounds`` are per-coordinate inclusive maxima; ``values`` is indexed by
    raw coordinates.  Filled tables are immutable and safe to share.
    """

    bounds: tuple[int, ...]
    values: np.ndarray

    def __contains__(self, pos) -> bool:
        return (len(pos) == len(self.bounds)
                and all(0 <= c <= b for c, b in zip(pos, self.bounds)))

    def __getitem__(self, pos) -> int:
        if pos not in self:
            raise RegionError(f"position {tuple(pos)} outside region {self.bounds}")
        return int(self.values[tuple(pos)])

    def positions(self):
        """All in-region positions in lexicographic order."""
        return itertools.product(*(range(b + 1) for b in self.bounds))


def _check_bounds(bounds, dimension: int) -> tuple[int, ...]:
    bs = tuple(int(b) for b in bounds)
    if len(bs) != dimension:
        raise RegionError(f"region needs {dimension} bounds, got {len(bs)}")
    if any(b < 0 for b in bs):
        raise RegionError(f"region bounds must be non-negative, got {bs}")
    return bs


def _axis_diag_table(bounds, h_cap: int | None, v_cap: int | None,
                     p: int) -> GrundyTable:
    # Bottom-up over lexicographic (x, y).  cols[y] accumulates G(., y) and
    # row accumulates G(x, .), so single-heap candidates are list slices
    # instead of per-option tuples.
    xmax, ymax = bounds
    vals = np.zeros((xmax + 1, ymax + 1), dtype=np.int64)
    cols: list[list[int]] = [[] for _ in range(ymax + 1)]
    diag = [(s, t) for s in range(1, p) for t in range(1, p - s)]
    for x in range(xmax + 1):
        row: list[int] = []
        for y in range(ymax + 1):
            col = cols[y]
            cand = list(col if h_cap is None else col[-h_cap:])
            cand += row if v_cap is None else row[-v_cap:]
            for s, t in diag:
                if s <= x and t <= y:
                    cand.append(cols[y - t][x - s])
            g = mex(cand)
            vals[x, y] = g
            row.append(g)
            col.append(g)
    return GrundyTable((xmax, ymax), vals)


def _generic_table(rules: RuleSet, bounds) -> GrundyTable:
    shape = tuple(b + 1 for b in bounds)
    vals = np.zeros(shape, dtype=np.int64)
    memo: dict[Position, int] = {}
    for pos in itertools.product(*(range(s) for s in shape)):
        g = mex(memo[o] for o in games.legal_moves(rules, pos))
        memo[pos] = g
        vals[pos] = g
    return GrundyTable(tuple(bounds), vals)


def brute_force_table(rules: RuleSet, bounds) -> GrundyTable:
    """Fill a region with oracle Grundy values, bottom-up in lexicographic
    order.  Never consults the closed forms."""
    bs = _check_bounds(bounds, rules.dimension)
    v = rules.variant
    if v is Variant.PASS_RYUO:
        raise UnsupportedVariantError(
            "pass-ryuo tables are layered; use pass_play.pass_grundy_table")
    if v is Variant.RYUO:
        return _axis_diag_table(bs, None, None, rules.p)
    if v is Variant.RESTRICTED_SIDE:
        return _axis_diag_table(bs, rules.q - 1, rules.q - 1, rules.p)
    if v is Variant.RESTRICTED_HV:
        return _axis_diag_table(bs, rules.q - 1, rules.r - 1, rules.p)
    return _generic_table(rules, bs)


def grundy_brute_force(rules: RuleSet, pos, table: GrundyTable | None = None) -> int:
    """Oracle Grundy value of ``pos``; looks up ``table`` when given (the
    position must lie inside its region), otherwise fills the minimal
    enclosing region."""
    coords = games.validate_position(rules, pos)
    if table is None:
        table = brute_force_table(rules, coords)
    return table[coords]


def moveset_table(m: MoveSet, bounds) -> GrundyTable:
    """Oracle Grundy values for the game whose options come from an
    arbitrary move set."""
    bs = _check_bounds(bounds, 2)
    xmax, ymax = bs
    vals = np.zeros((xmax + 1, ymax + 1), dtype=np.int64)
    for x in range(xmax + 1):
        for y in range(ymax + 1):
            vals[x, y] = mex(vals[x - s, y - t] for s, t in m.offsets_within(x, y))
    return GrundyTable(bs, vals)


def grundy_custom_moveset(m: MoveSet, pos, table: GrundyTable | None = None) -> int:
    coords = tuple(int(c) for c in pos)
    if len(coords) != 2 or any(c < 0 for c in coords):
        raise ValueError(f"move-set games are two-dimensional, got {coords}")
    if table is None:
        table = moveset_table(m, coords)
    return table[coords]


class Mismatch(NamedTuple):
    position: tuple
    oracle: object
    formula: object


@dataclass(frozen=True)
class VerificationReport:
    """Result of sweeping a region and comparing two evaluations pointwise."""

    label: str
    bounds: tuple[int, ...]
    positions_checked: int
    mismatches: tuple[Mismatch, ...]

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def summary(self) -> str:
        region = "x".join(str(b + 1) for b in self.bounds)
        return (f"{self.label} [{region} region, {self.positions_checked} "
                f"positions]: {len(self.mismatches)} mismatches")


def verify_equivalence(rules: RuleSet, bounds) -> VerificationReport:
    """Compare the oracle against the closed form at every in-region
    position; mismatches are listed in lexicographic order."""
    if not has_closed_form(rules):
        raise NoClosedFormError(f"{rules.describe()} has no closed form to verify")
    table = brute_force_table(rules, bounds)
    mismatches = []
    count = 0
    for pos in table.positions():
        count += 1
        oracle = int(table.values[pos])
        formula = grundy_closed_form(rules, pos)
        if oracle != formula:
            mismatches.append(Mismatch(pos, oracle, formula))
    return VerificationReport(rules.describe(), table.bounds, count,
                              tuple(mismatches))


def verify_moveset_equivalence(m: MoveSet, rules: RuleSet,
                               bounds) -> VerificationReport:
    """Compare the oracle of a move-set game against the closed form of
    ``rules`` -- the executable form of "this piece's game has that
    formula" claims and their refutations."""
    if not has_closed_form(rules):
        raise NoClosedFormError(f"{rules.describe()} has no closed form to verify")
    table = moveset_table(m, bounds)
    mismatches = []
    count = 0
    for pos in table.positions():
        count += 1
        oracle = int(table.values[pos])
        formula = grundy_closed_form(rules, pos)
        if oracle != formula:
            mismatches.append(Mismatch(pos, oracle, formula))
    return VerificationReport(f"move set vs {rules.describe()}", table.bounds,
                              count, tuple(mismatches))


def droppable_offsets(p: int) -> list[tuple[int, int]]:
    """Offsets whose removal the necessary-condition theorem covers:
    everything with 1 <= s + t <= p - 1, plus the unit axis steps."""
    offs = {(1, 0), (0, 1)}
    offs.update((s, t) for s in range(p) for t in range(p - s) if 1 <= s + t)
    return sorted(offs)


def necessary_condition_witness(p: int, dropped) -> Mismatch:
    """Drop a single offset from the generalized move set and return the
    first position (lexicographically, within the (p+2) x (p+2) region)
    where the crippled game's oracle disagrees with the two-heap formula.

    The necessary-condition theorem guarantees such a witness exists; not
    finding one raises :class:`TheoremCounterexampleError`.
    """
    s, t = int(dropped[0]), int(dropped[1])
    if (s, t) not in droppable_offsets(p):
        raise ValueError(
            f"offset {(s, t)} is not in the required set for p={p}")
    crippled = games.generalized_ryuo_move_set(p).without((s, t))
    rules = games.generalized_ryuo(p)
    table = moveset_table(crippled, (p + 1, p + 1))
    for pos in table.positions():
        oracle = int(table.values[pos])
        formula = grundy_closed_form(rules, pos)
        if oracle != formula:
            return Mismatch(pos, oracle, formula)
    raise TheoremCounterexampleError(
        f"dropping {(s, t)} from the p={p} move set produced no Grundy "
        f"mismatch within the {(p + 2)}x{(p + 2)} region")
