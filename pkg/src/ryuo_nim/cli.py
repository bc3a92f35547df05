"""Command-line front end: single-position evaluation, Grundy tables,
theorem verification sweeps, best-move queries, and the HTTP service.

Exit codes: 0 success, 1 verification found a discrepancy, 2 usage or
parameter error.  Identical invocations produce byte-identical stdout.
"""

from __future__ import annotations

import argparse
import json
import os
import socket
import sys
from dataclasses import dataclass

import numpy as np

from . import games, grundy, pass_play, strategy, tables
from .games import Outcome, PassPosition, RuleSet, Variant

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2

REGION_CAP = 4096  # per-axis guard against accidental quadratic blowups
DEFAULT_PORT = 8642

VERIFY_SUITES = ("ryuo", "pass", "restricted", "ndim", "moveset", "all")


class UsageError(ValueError):
    pass


def _parse_bool(text: str) -> bool:
    if text == "true":
        return True
    if text == "false":
        return False
    raise argparse.ArgumentTypeError(f"expected true or false, got {text!r}")


def _add_game_options(sub: argparse.ArgumentParser, with_pass: bool) -> None:
    sub.add_argument("--game", required=True,
                     help="variant: ryuo, pass-ryuo, restricted-side, "
                          "restricted-hv, 3dim, 3dim-modified, ndim")
    sub.add_argument("--p", type=int, default=None)
    sub.add_argument("--q", type=int, default=None)
    sub.add_argument("--r", type=int, default=None)
    sub.add_argument("--n", type=int, default=None)
    if with_pass:
        sub.add_argument("--pass", dest="pass_flag", type=_parse_bool,
                         default=None, metavar="true|false",
                         help="pass availability (pass-ryuo only)")


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ryuo-nim",
        description="Grundy values, winning moves and theorem sweeps for "
                    "dragon-king Nim variants.")
    subs = parser.add_subparsers(dest="command", required=True)

    p_eval = subs.add_parser("eval", help="evaluate one position")
    _add_game_options(p_eval, with_pass=True)
    p_eval.add_argument("coords", nargs="+", type=int)
    p_eval.set_defaults(func=cmd_eval)

    p_table = subs.add_parser("table", help="emit a Grundy table")
    _add_game_options(p_table, with_pass=False)
    p_table.add_argument("--max", type=int, required=True,
                         help="inclusive per-axis maximum (<= 4096)")
    p_table.add_argument("--layer", choices=(tables.LAYER_PASS, tables.LAYER_NOPASS),
                         default=None, help="pass layer (pass-ryuo only)")
    p_table.add_argument("--format", choices=("csv", "json"), default="csv")
    p_table.add_argument("--out", default=None, help="write to file instead of stdout")
    p_table.set_defaults(func=cmd_table)

    p_verify = subs.add_parser("verify", help="run a formula-vs-oracle sweep")
    p_verify.add_argument("--suite", required=True, choices=VERIFY_SUITES)
    p_verify.add_argument("--max", type=int, default=None,
                          help="inclusive per-axis maximum for the 2-dim sweeps")
    p_verify.add_argument("--json", action="store_true", dest="as_json")
    p_verify.set_defaults(func=cmd_verify)

    p_best = subs.add_parser("best", help="list all winning moves")
    _add_game_options(p_best, with_pass=True)
    p_best.add_argument("coords", nargs="+", type=int)
    p_best.set_defaults(func=cmd_best)

    p_serve = subs.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("--port", type=int, default=None,
                         help=f"listen port (default {DEFAULT_PORT}, or RYUO_PORT)")
    p_serve.set_defaults(func=cmd_serve)

    return parser


def _build_rules(args) -> RuleSet:
    try:
        variant = Variant(args.game)
    except ValueError:
        raise UsageError(f"unknown game {args.game!r}") from None
    kwargs = {name: getattr(args, name) for name in ("p", "q", "r", "n")
              if getattr(args, name) is not None}
    try:
        return RuleSet(variant, **kwargs)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _checked_coords(rules: RuleSet, coords: list[int]) -> tuple[int, ...]:
    if len(coords) != rules.dimension:
        raise UsageError(f"{rules.variant.value} takes {rules.dimension} "
                         f"coordinates, got {len(coords)}")
    if any(c < 0 for c in coords):
        raise UsageError("coordinates must be non-negative")
    if any(c > REGION_CAP for c in coords):
        raise UsageError(f"coordinates capped at {REGION_CAP} per axis")
    return tuple(coords)


def _pass_state(args, rules: RuleSet) -> PassPosition:
    coords = args.coords
    if len(coords) != 2:
        raise UsageError("pass-ryuo takes 2 coordinates")
    if args.pass_flag is None:
        raise UsageError("pass-ryuo needs --pass true|false")
    if any(c < 0 for c in coords) or any(c > REGION_CAP for c in coords):
        raise UsageError(f"coordinates must be in 0..{REGION_CAP}")
    return PassPosition(coords[0], coords[1], args.pass_flag)


def _format_target(target) -> str:
    if isinstance(target, PassPosition):
        flag = "true" if target.pass_available else "false"
        return f"({target.x},{target.y},{flag})"
    return "(" + ",".join(str(c) for c in target) + ")"


def cmd_eval(args) -> int:
    rules = _build_rules(args)
    if rules.variant is Variant.PASS_RYUO:
        state = _pass_state(args, rules)
        out = pass_play.classify_pass(rules.p, state)
        table = pass_play.pass_grundy_table(rules.p, (state.x, state.y),
                                            state.pass_available)
        print(f"outcome={out.value} (grundy via oracle: {table[(state.x, state.y)]})")
        return EXIT_OK
    if args.pass_flag is not None:
        raise UsageError("--pass applies only to pass-ryuo")
    pos = _checked_coords(rules, args.coords)
    if grundy.has_closed_form(rules):
        g = grundy.grundy_closed_form(rules, pos)
        out = Outcome.P if g == 0 else Outcome.N
        print(f"grundy={g} outcome={out.value}")
    else:
        out = strategy.outcome(rules, pos)
        g = grundy.grundy_brute_force(rules, pos)
        print(f"outcome={out.value} (grundy via oracle: {g})")
    return EXIT_OK


def cmd_table(args) -> int:
    rules = _build_rules(args)
    if args.max < 0 or args.max > REGION_CAP:
        raise UsageError(f"--max must be in 0..{REGION_CAP}")
    layer = args.layer
    if rules.variant is Variant.PASS_RYUO and layer is None:
        layer = tables.LAYER_PASS
    try:
        doc = tables.build_table(rules, args.max, layer)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    text = doc.to_csv() if args.format == "csv" else doc.to_json()
    if args.out:
        with open(args.out, "w", newline="\n") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


@dataclass
class CheckResult:
    name: str
    ok: bool
    mismatches: int
    detail: str


def _equivalence_check(rules: RuleSet, bounds) -> CheckResult:
    report = grundy.verify_equivalence(rules, bounds)
    return CheckResult(report.label, report.ok, len(report.mismatches),
                       report.summary())


def _suite_ryuo(maxn: int | None) -> list[CheckResult]:
    m = 60 if maxn is None else maxn
    return [_equivalence_check(games.generalized_ryuo(p), (m, m))
            for p in range(1, 7)]


def _suite_pass(maxn: int | None) -> list[CheckResult]:
    m = 40 if maxn is None else maxn
    out = []
    for p in (3, 4, 5):
        report = pass_play.verify_pass_theorem(p, (m, m))
        out.append(CheckResult(report.label, report.ok,
                               len(report.mismatches), report.summary()))
    return out


def _suite_restricted(maxn: int | None) -> list[CheckResult]:
    m = 48 if maxn is None else maxn
    checks = []
    for p, q in ((2, 4), (3, 3), (3, 6), (4, 8), (3, 4), (3, 7), (4, 5)):
        checks.append(_equivalence_check(games.restricted_side(p, q), (m, m)))
    for p, q, r in ((3, 3, 6), (2, 4, 2), (3, 6, 3)):
        checks.append(_equivalence_check(games.restricted_hv(p, q, r), (m, m)))
    # Negative control: the side cap read as 1..q must disagree with the
    # formula, otherwise the adopted 1..q-1 reading would be arbitrary.
    control = grundy.verify_moveset_equivalence(
        games.literal_restricted_side_move_set(2, 2),
        games.restricted_side(2, 2), (2, 2))
    found = len(control.mismatches)
    detail = (f"literal 1..q side cap, p=2 q=2: {found} mismatches "
              f"(expected >= 1)")
    if found:
        first = control.mismatches[0]
        detail += f", first at {first.position}"
    checks.append(CheckResult("restricted-side literal cap (negative control)",
                              found >= 1, found, detail))
    return checks


def _suite_ndim(_: int | None) -> list[CheckResult]:
    checks = [_equivalence_check(games.modified_three_dim(), (19, 19, 19))]

    rules = games.three_dim()
    oracle = strategy.p_position_table(rules, (19, 19, 19))
    bad = sum(1 for pos in np.ndindex(oracle.shape)
              if bool(oracle[pos]) != strategy.three_dim_is_p(pos))
    checks.append(CheckResult("3dim P-positions", bad == 0, bad,
                              f"3dim P-position arithmetic vs backward "
                              f"induction [20x20x20]: {bad} mismatches"))

    for p, n in ((2, 4), (3, 4)):
        checks.append(_equivalence_check(games.n_dim(p, n), (9,) * n))

    a = grundy.brute_force_table(games.n_dim(3, 3), (14, 14, 14)).values
    b = grundy.brute_force_table(games.modified_three_dim(), (14, 14, 14)).values
    diff = int((a != b).sum())
    checks.append(CheckResult("ndim(3,3) vs 3dim-modified", diff == 0, diff,
                              f"ndim p=3 n=3 oracle vs 3dim-modified oracle "
                              f"[15x15x15]: {diff} mismatches"))
    return checks


def _suite_moveset(_: int | None) -> list[CheckResult]:
    checks = []
    for p in (3, 4, 5):
        for dropped in grundy.droppable_offsets(p):
            name = f"moveset p={p} drop {dropped}"
            try:
                witness = grundy.necessary_condition_witness(p, dropped)
            except grundy.TheoremCounterexampleError as exc:
                checks.append(CheckResult(name, False, 1, str(exc)))
                continue
            checks.append(CheckResult(
                name, True, 0,
                f"witness at {witness.position}: oracle {witness.oracle}, "
                f"formula {witness.formula}"))
    return checks


_SUITE_RUNNERS = {
    "ryuo": _suite_ryuo,
    "pass": _suite_pass,
    "restricted": _suite_restricted,
    "ndim": _suite_ndim,
    "moveset": _suite_moveset,
}


def run_suite(suite: str, maxn: int | None = None) -> list[CheckResult]:
    names = _SUITE_RUNNERS.keys() if suite == "all" else [suite]
    checks: list[CheckResult] = []
    for name in names:
        checks.extend(_SUITE_RUNNERS[name](maxn))
    return checks


def cmd_verify(args) -> int:
    if args.max is not None and (args.max < 0 or args.max > REGION_CAP):
        raise UsageError(f"--max must be in 0..{REGION_CAP}")
    checks = run_suite(args.suite, args.max)
    all_ok = all(c.ok for c in checks)
    if args.as_json:
        doc = {"suite": args.suite, "ok": all_ok,
               "checks": [{"name": c.name, "ok": c.ok,
                           "mismatches": c.mismatches, "detail": c.detail}
                          for c in checks]}
        print(json.dumps(doc, separators=(",", ":")))
    else:
        for c in checks:
            print(f"[{'ok' if c.ok else 'FAIL'}] {c.detail}")
        passed = sum(1 for c in checks if c.ok)
        print(f"suite {args.suite}: {passed}/{len(checks)} checks passed")
    return EXIT_OK if all_ok else EXIT_MISMATCH


def cmd_best(args) -> int:
    rules = _build_rules(args)
    if rules.variant is Variant.PASS_RYUO:
        pos = _pass_state(args, rules)
    else:
        if args.pass_flag is not None:
            raise UsageError("--pass applies only to pass-ryuo")
        pos = _checked_coords(rules, args.coords)
    moves = strategy.best_moves(rules, pos)
    if moves:
        print(" ".join(_format_target(m.target) for m in moves))
    else:
        print("none (P-position)")
    return EXIT_OK


def cmd_serve(args) -> int:
    port = args.port
    if port is None:
        env = os.environ.get("RYUO_PORT")
        if env is not None:
            try:
                port = int(env)
            except ValueError:
                raise UsageError(f"RYUO_PORT must be an integer, got {env!r}")
        else:
            port = DEFAULT_PORT
    probe = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    try:
        probe.bind(("127.0.0.1", port))
    except OSError:
        print(f"port {port} is busy", file=sys.stderr)
        return EXIT_USAGE
    finally:
        probe.close()
    from . import service
    service.serve(port)
    return EXIT_OK


def main(argv=None) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry() -> None:
    sys.exit(main(sys.argv[1:]))


if __name__ == "__main__":
    entry()
