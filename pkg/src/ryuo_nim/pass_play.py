"""Pass-variant analysis: arithmetic P/N classification, the backward-
induction outcome oracle over (x, y, pass) states, and pass-layer Grundy
tables for display.

No simple Grundy formula is known once the pass move enters, but the set of
P-positions has an exact arithmetic description; :func:`classify_pass`
implements it and :func:`verify_pass_theorem` checks it against an
independent win/loss induction.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import games, grundy
from .errors import RegionError
from .games import Outcome, PassPosition
from .grundy import GrundyTable, Mismatch, VerificationReport


def classify_pass(p: int, pos) -> Outcome:
    """P/N classification of a pass-variant state in O(1) arithmetic.

    With the pass spent, P-positions are exactly those of the ordinary
    two-heap game: coordinate sum divisible by p with equal quotients.
    With the pass in hand they form three thin families (plus the terminal
    state, where the pass is unusable and the previous player has won):

    * the antidiagonal band x + y == p + 1 with both coordinates in 1..p;
    * equal heaps of size p*n + 1 for n >= 1;
    * pairs (k + p*n, p + 2 - k + p*n) for n >= 1 and 2 <= k <= p.

    The families describe the true P-positions for p >= 3.  They need sums
    congruent to 1 or 2 mod p to stay out of the spent-layer P-set, so for
    p <= 2 a pass from the diagonal families escapes into it (at p = 2,
    (3, 3, True) -> (3, 3, False)) and the classification overshoots;
    :func:`verify_pass_theorem` reports those discrepancies honestly.
    """
    if p < 1:
        raise ValueError(f"p must be a positive integer, got {p}")
    x, y, avail = games.validate_pass_position(pos)
    if not avail:
        return Outcome.P if (x + y) % p == 0 and x // p == y // p else Outcome.N
    if x == 0 and y == 0:
        return Outcome.P
    if x + y == p + 1 and 1 <= x <= p:
        return Outcome.P
    if x == y and x % p == 1 and x > p:
        return Outcome.P
    total = x + y - (p + 2)
    if total >= 2 * p and total % (2 * p) == 0:
        doubled_k = x - y + p + 2
        if doubled_k % 2 == 0 and 2 <= doubled_k // 2 <= p:
            return Outcome.P
    return Outcome.N


@dataclass(frozen=True)
class PassOutcomeTable:
    """Win/loss labels for every state in a region, both pass layers.

    Layer arrays hold True where the next player wins (N-positions).
    """

    p: int
    bounds: tuple[int, int]
    next_wins_spent: np.ndarray
    next_wins_avail: np.ndarray

    def __contains__(self, pos) -> bool:
        x, y, _ = pos
        return 0 <= x <= self.bounds[0] and 0 <= y <= self.bounds[1]

    def outcome_at(self, pos) -> Outcome:
        x, y, avail = games.validate_pass_position(pos)
        if (x, y, avail) not in self:
            raise RegionError(f"state {(x, y, avail)} outside region {self.bounds}")
        layer = self.next_wins_avail if avail else self.next_wins_spent
        return Outcome.N if layer[x, y] else Outcome.P

    def states(self):
        """All in-region states in lexicographic (x, y, pass) order."""
        for x in range(self.bounds[0] + 1):
            for y in range(self.bounds[1] + 1):
                yield PassPosition(x, y, False)
                yield PassPosition(x, y, True)


def outcome_backward_induction(p: int, bounds) -> PassOutcomeTable:
    """Label every state by backward induction, never consulting the
    classifier.  The pass-spent layer closes under its own moves, so it is
    solved first; pass-available states then depend only on smaller states
    of their own layer plus their pass image."""
    bs = grundy._check_bounds(bounds, 2)
    xmax, ymax = bs
    spent = np.zeros((xmax + 1, ymax + 1), dtype=bool)
    avail = np.zeros((xmax + 1, ymax + 1), dtype=bool)
    for x in range(xmax + 1):
        for y in range(ymax + 1):
            opts = games.legal_moves_pass(p, PassPosition(x, y, False))
            spent[x, y] = any(not spent[o.x, o.y] for o in opts)
    for x in range(xmax + 1):
        for y in range(ymax + 1):
            wins = False
            for o in games.legal_moves_pass(p, PassPosition(x, y, True)):
                layer = avail if o.pass_available else spent
                if not layer[o.x, o.y]:
                    wins = True
                    break
            avail[x, y] = wins
    return PassOutcomeTable(p, bs, spent, avail)


def verify_pass_theorem(p: int, bounds) -> VerificationReport:
    """Classifier vs backward induction on every in-region state of both
    layers; mismatches in lexicographic (x, y, pass) order."""
    table = outcome_backward_induction(p, bounds)
    mismatches = []
    count = 0
    for state in table.states():
        count += 1
        oracle = table.outcome_at(state)
        formula = classify_pass(p, state)
        if oracle is not formula:
            mismatches.append(Mismatch(tuple(state), oracle.value, formula.value))
    return VerificationReport(f"pass-ryuo p={p}", table.bounds, count,
                              tuple(mismatches))


def pass_grundy_table(p: int, bounds, pass_available: bool) -> GrundyTable:
    """Oracle Grundy values of one pass layer, for table emission.

    The pass-spent layer is the ordinary two-heap game; the pass-available
    layer adds the spent-layer value of the same cell as one extra option
    everywhere except the terminal.  These values are presentation-only --
    outcome classification goes through :func:`classify_pass`.
    """
    bs = grundy._check_bounds(bounds, 2)
    spent = grundy.brute_force_table(games.generalized_ryuo(p), bs)
    if not pass_available:
        return spent
    xmax, ymax = bs
    vals = np.zeros((xmax + 1, ymax + 1), dtype=np.int64)
    cols: list[list[int]] = [[] for _ in range(ymax + 1)]
    diag = [(s, t) for s in range(1, p) for t in range(1, p - s)]
    for x in range(xmax + 1):
        row: list[int] = []
        for y in range(ymax + 1):
            cand = list(cols[y])
            cand += row
            for s, t in diag:
                if s <= x and t <= y:
                    cand.append(cols[y - t][x - s])
            if x or y:
                cand.append(int(spent.values[x, y]))
            g = grundy.mex(cand)
            vals[x, y] = g
            row.append(g)
            cols[y].append(g)
    return GrundyTable(bs, vals)
