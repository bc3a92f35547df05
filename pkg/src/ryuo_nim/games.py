"""Rule sets and move generation for dragon-king Nim and its variants.

A position is a tuple of non-negative heap sizes, equivalently board
coordinates with the goal cell at the origin.  Every legal move is
"toward zero": no coordinate ever grows and at least one shrinks, so play
from any position terminates.

Variants:

* ``ryuo`` -- remove any amount from one heap, or at least one from both
  heaps with the removals totalling at most ``p - 1``.
* ``pass-ryuo`` -- the same game plus a one-time pass usable by either
  player, but never from the terminal position.  States carry a flag.
* ``restricted-side`` -- single-heap removals capped at ``q - 1``.
* ``restricted-hv`` -- per-heap caps ``q - 1`` (first) and ``r - 1`` (second).
* ``3dim`` -- three heaps; any amount from one heap, one token from any two
  heaps, or one token from all three.
* ``3dim-modified`` -- ``3dim`` without the all-three move.
* ``ndim`` -- n heaps; any amount from one heap, or at least one token from
  each of two or more heaps with the removals totalling at most ``p - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import Enum
from typing import NamedTuple

from .errors import DimensionMismatchError, UnsupportedVariantError

Position = tuple[int, ...]
Offset = tuple[int, ...]


class Variant(str, Enum):
    RYUO = "ryuo"
    PASS_RYUO = "pass-ryuo"
    RESTRICTED_SIDE = "restricted-side"
    RESTRICTED_HV = "restricted-hv"
    THREE_DIM = "3dim"
    MODIFIED_THREE_DIM = "3dim-modified"
    NDIM = "ndim"


class Outcome(str, Enum):
    P = "P"  # previous player wins under perfect play
    N = "N"  # next player wins under perfect play


class PassPosition(NamedTuple):
    """State of the pass variant: coordinates plus pass availability.

    Tuple ordering gives the canonical lexicographic order on states,
    with ``pass_available=False`` sorting before ``True``.
    """

    x: int
    y: int
    pass_available: bool


@dataclass(frozen=True)
class RuleSet:
    """A variant identifier plus its parameters.

    Build instances through the factory functions (:func:`generalized_ryuo`
    and friends); the constructor validates parameter presence and range.
    """

    variant: Variant
    p: int | None = None
    q: int | None = None
    r: int | None = None
    n: int | None = None

    def __post_init__(self) -> None:
        v = self.variant
        needs_p = v in (Variant.RYUO, Variant.PASS_RYUO, Variant.RESTRICTED_SIDE,
                        Variant.RESTRICTED_HV, Variant.NDIM)
        if needs_p:
            if self.p is None or self.p < 1:
                raise ValueError(f"{v.value}: p must be a positive integer, got {self.p}")
        elif self.p is not None:
            raise ValueError(f"{v.value} takes no parameter p")
        if v in (Variant.RESTRICTED_SIDE, Variant.RESTRICTED_HV):
            if self.q is None or self.q <= 1:
                raise ValueError(f"{v.value}: q must be an integer > 1, got {self.q}")
        elif self.q is not None:
            raise ValueError(f"{v.value} takes no parameter q")
        if v is Variant.RESTRICTED_HV:
            if self.r is None or self.r <= 1:
                raise ValueError(f"{v.value}: r must be an integer > 1, got {self.r}")
        elif self.r is not None:
            raise ValueError(f"{v.value} takes no parameter r")
        if v is Variant.NDIM:
            if self.n is None or self.n < 2:
                raise ValueError(f"ndim: n must be an integer >= 2, got {self.n}")
        elif self.n is not None:
            raise ValueError(f"{v.value} takes no parameter n")

    @property
    def dimension(self) -> int:
        if self.variant in (Variant.THREE_DIM, Variant.MODIFIED_THREE_DIM):
            return 3
        if self.variant is Variant.NDIM:
            return self.n  # type: ignore[return-value]
        return 2

    @property
    def params(self) -> dict[str, int]:
        """Parameters actually carried by this rule set, in p, q, r, n order."""
        out: dict[str, int] = {}
        for name in ("p", "q", "r", "n"):
            value = getattr(self, name)
            if value is not None:
                out[name] = value
        return out

    def describe(self) -> str:
        params = " ".join(f"{k}={v}" for k, v in self.params.items())
        return f"{self.variant.value} {params}".strip()


def generalized_ryuo(p: int) -> RuleSet:
    return RuleSet(Variant.RYUO, p=p)


def pass_ryuo(p: int) -> RuleSet:
    return RuleSet(Variant.PASS_RYUO, p=p)


def restricted_side(p: int, q: int) -> RuleSet:
    return RuleSet(Variant.RESTRICTED_SIDE, p=p, q=q)


def restricted_hv(p: int, q: int, r: int) -> RuleSet:
    return RuleSet(Variant.RESTRICTED_HV, p=p, q=q, r=r)


def three_dim() -> RuleSet:
    return RuleSet(Variant.THREE_DIM)


def modified_three_dim() -> RuleSet:
    return RuleSet(Variant.MODIFIED_THREE_DIM)


def n_dim(p: int, n: int) -> RuleSet:
    return RuleSet(Variant.NDIM, p=p, n=n)


def validate_position(rules: RuleSet, pos) -> Position:
    """Normalize ``pos`` to a tuple and check it against the rule set."""
    coords = tuple(int(c) for c in pos)
    if len(coords) != rules.dimension:
        raise DimensionMismatchError(
            f"{rules.variant.value} positions have {rules.dimension} coordinates, "
            f"got {len(coords)}")
    if any(c < 0 for c in coords):
        raise ValueError(f"coordinates must be non-negative, got {coords}")
    return coords


def validate_pass_position(pos) -> PassPosition:
    x, y, avail = pos
    state = PassPosition(int(x), int(y), bool(avail))
    if state.x < 0 or state.y < 0:
        raise ValueError(f"coordinates must be non-negative, got {(state.x, state.y)}")
    return state


def _axis_diag_moves(pos: Position, h_cap: int | None, v_cap: int | None,
                     p: int) -> set[Position]:
    """Single-heap moves (optionally capped) plus both-heap moves with the
    removals at least 1 each and totalling at most p - 1."""
    x, y = pos
    moves: set[Position] = set()
    lo = 0 if h_cap is None else max(0, x - h_cap)
    for u in range(lo, x):
        moves.add((u, y))
    lo = 0 if v_cap is None else max(0, y - v_cap)
    for v in range(lo, y):
        moves.add((x, v))
    for s in range(1, min(x, p - 2) + 1):
        for t in range(1, min(y, p - 1 - s) + 1):
            moves.add((x - s, y - t))
    return moves


def _single_heap_moves(pos: Position) -> set[Position]:
    moves: set[Position] = set()
    for i, c in enumerate(pos):
        for k in range(c):
            moves.add(pos[:i] + (k,) + pos[i + 1:])
    return moves


def _three_dim_moves(pos: Position, include_triple: bool) -> set[Position]:
    moves = _single_heap_moves(pos)
    for i, j in ((0, 1), (0, 2), (1, 2)):
        if pos[i] >= 1 and pos[j] >= 1:
            step = list(pos)
            step[i] -= 1
            step[j] -= 1
            moves.add(tuple(step))
    if include_triple and all(c >= 1 for c in pos):
        moves.add(tuple(c - 1 for c in pos))
    return moves


def _ndim_moves(pos: Position, p: int) -> set[Position]:
    moves = _single_heap_moves(pos)
    budget = p - 1
    if budget < 2:
        return moves
    dims = len(pos)

    def extend(i: int, left: int, touched: int, acc: list[int]) -> None:
        if i == dims:
            if touched >= 2:
                moves.add(tuple(acc))
            return
        acc.append(pos[i])
        extend(i + 1, left, touched, acc)
        acc.pop()
        for d in range(1, min(left, pos[i]) + 1):
            acc.append(pos[i] - d)
            extend(i + 1, left - d, touched + 1, acc)
            acc.pop()

    extend(0, budget, 0, [])
    return moves


def legal_moves(rules: RuleSet, pos) -> set[Position]:
    """The option set of ``pos`` under ``rules``.

    Every returned position is component-wise <= ``pos`` with a strictly
    smaller coordinate sum; the terminal all-zero position has no options.
    Pass-variant states carry a flag and go through :func:`legal_moves_pass`.
    """
    if rules.variant is Variant.PASS_RYUO:
        raise UnsupportedVariantError(
            "pass-ryuo states carry a pass flag; use legal_moves_pass")
    coords = validate_position(rules, pos)
    v = rules.variant
    if v is Variant.RYUO:
        return _axis_diag_moves(coords, None, None, rules.p)
    if v is Variant.RESTRICTED_SIDE:
        return _axis_diag_moves(coords, rules.q - 1, rules.q - 1, rules.p)
    if v is Variant.RESTRICTED_HV:
        return _axis_diag_moves(coords, rules.q - 1, rules.r - 1, rules.p)
    if v is Variant.THREE_DIM:
        return _three_dim_moves(coords, include_triple=True)
    if v is Variant.MODIFIED_THREE_DIM:
        return _three_dim_moves(coords, include_triple=False)
    return _ndim_moves(coords, rules.p)


def legal_moves_pass(p: int, pos) -> set[PassPosition]:
    """Options of a pass-variant state.

    While the pass is available every ordinary move keeps it available, and
    passing flips the flag without touching the coordinates.  The pass is
    never an option at the terminal position, so (0, 0, True) is as dead as
    (0, 0, False).
    """
    if p < 1:
        raise ValueError(f"p must be a positive integer, got {p}")
    state = validate_pass_position(pos)
    x, y, avail = state
    if x == 0 and y == 0:
        return set()
    moves = {PassPosition(a, b, avail)
             for a, b in _axis_diag_moves((x, y), None, None, p)}
    if avail:
        moves.add(PassPosition(x, y, False))
    return moves


@dataclass(frozen=True)
class MoveSet:
    """The offsets a piece may subtract from its position.

    Whole rays are stored symbolically so the set can describe unbounded
    horizontal/vertical/diagonal movement; ``block`` adds finitely many
    extra offsets and ``excluded`` punches individual holes (used to probe
    which offsets a Grundy formula actually relies on).  The zero offset is
    never a member.
    """

    horizontal_ray: bool = False
    vertical_ray: bool = False
    diagonal_ray: bool = False
    block: frozenset[tuple[int, int]] = field(default_factory=frozenset)
    excluded: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        for s, t in self.block:
            if s < 0 or t < 0 or (s == 0 and t == 0):
                raise ValueError(f"invalid offset {(s, t)} in move-set block")

    def contains(self, offset) -> bool:
        s, t = offset
        if (s, t) in self.excluded:
            return False
        if self.horizontal_ray and t == 0 and s >= 1:
            return True
        if self.vertical_ray and s == 0 and t >= 1:
            return True
        if self.diagonal_ray and s == t and s >= 1:
            return True
        return (s, t) in self.block

    def without(self, offset) -> "MoveSet":
        """A copy with one offset removed (from rays and block alike)."""
        s, t = offset
        return replace(self, excluded=self.excluded | {(s, t)})

    def offsets_within(self, x: int, y: int) -> list[tuple[int, int]]:
        """All member offsets (s, t) with s <= x and t <= y, sorted."""
        found: set[tuple[int, int]] = set()
        if self.horizontal_ray:
            found.update((s, 0) for s in range(1, x + 1))
        if self.vertical_ray:
            found.update((0, t) for t in range(1, y + 1))
        if self.diagonal_ray:
            found.update((i, i) for i in range(1, min(x, y) + 1))
        found.update((s, t) for s, t in self.block if s <= x and t <= y)
        found -= self.excluded
        return sorted(found)

    def moves_from(self, pos) -> set[Position]:
        """Option set generated by this move set: subtract every applicable
        offset from ``pos``."""
        x, y = pos
        return {(x - s, y - t) for s, t in self.offsets_within(x, y)}


def _diagonal_block(p: int) -> frozenset[tuple[int, int]]:
    return frozenset((s, t) for s in range(p) for t in range(p - s)
                     if 1 <= s + t <= p - 1)


def rook_move_set() -> MoveSet:
    return MoveSet(horizontal_ray=True, vertical_ray=True)


def queen_move_set() -> MoveSet:
    return MoveSet(horizontal_ray=True, vertical_ray=True, diagonal_ray=True)


def generalized_ryuo_move_set(p: int) -> MoveSet:
    """Rook rays plus every offset with 1 <= s + t <= p - 1."""
    return MoveSet(horizontal_ray=True, vertical_ray=True,
                   block=_diagonal_block(p))


def literal_restricted_side_move_set(p: int, q: int) -> MoveSet:
    """Side removals read as 1..q instead of 1..q-1.

    Rejected reading of the side cap; kept only as a negative-control
    fixture -- its Grundy values are expected to disagree with the
    restricted-side formula.
    """
    block = {(s, 0) for s in range(1, q + 1)} | {(0, t) for t in range(1, q + 1)}
    return MoveSet(block=frozenset(block) | _diagonal_block(p))


def move_set(rules: RuleSet) -> MoveSet:
    """The position-independent move set of a two-heap variant."""
    v = rules.variant
    if v is Variant.RYUO or (v is Variant.NDIM and rules.n == 2):
        return generalized_ryuo_move_set(rules.p)
    if v is Variant.RESTRICTED_SIDE:
        block = ({(s, 0) for s in range(1, rules.q)}
                 | {(0, t) for t in range(1, rules.q)})
        return MoveSet(block=frozenset(block) | _diagonal_block(rules.p))
    if v is Variant.RESTRICTED_HV:
        block = ({(s, 0) for s in range(1, rules.q)}
                 | {(0, t) for t in range(1, rules.r)})
        return MoveSet(block=frozenset(block) | _diagonal_block(rules.p))
    raise UnsupportedVariantError(
        f"{v.value} has no two-dimensional move set")


def satisfies_necessary_condition(m: MoveSet, p: int) -> bool:
    """Whether ``m`` contains both axis rays and every offset with
    1 <= s + t <= p - 1 (what a piece must have for its game's Grundy
    values to follow the two-heap closed form for ``p``).

    Ray containment is decided symbolically: a finite block can never stand
    in for a missing ray, and any excluded axis offset breaks one.
    """
    if not (m.horizontal_ray and m.vertical_ray):
        return False
    for s, t in m.excluded:
        if (t == 0 and s >= 1) or (s == 0 and t >= 1):
            return False
    return all(m.contains(off) for off in _diagonal_block(p))
