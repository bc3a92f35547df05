"""Acceptance suite: one test per criterion, each printing a PASS line.

All checks are exact combinatorial identities (tolerance zero); the stated
runtime budgets are asserted where the criterion carries one.  Run with
``pytest tests/test_acceptance.py -v -s`` to see the per-criterion lines.
"""

import itertools
import json
import random
import time
from concurrent.futures import ThreadPoolExecutor

import httpx
import numpy as np
import pytest
from fastapi.testclient import TestClient

import ryuo_nim as rn
from ryuo_nim import Outcome, cli
from ryuo_nim.service import create_app


def report(criterion: int, detail: str) -> None:
    print(f"ACCEPTANCE criterion {criterion}: PASS - {detail}")


def test_criterion_01_worked_example():
    t0 = time.perf_counter()
    rules = rn.generalized_ryuo(3)
    closed = rn.grundy_closed_form(rules, (17, 19))
    table = rn.brute_force_table(rules, (17, 19))
    oracle = rn.grundy_brute_force(rules, (17, 19), table)
    elapsed_ms = (time.perf_counter() - t0) * 1e3
    assert closed == 9
    assert oracle == 9
    assert elapsed_ms < 10.0, f"{elapsed_ms:.2f} ms"
    report(1, f"grundy(17,19)=9 closed form == 18x20 oracle "
              f"({elapsed_ms:.2f} ms < 10 ms)")


def test_criterion_02_mex_fixtures():
    assert rn.mex([0, 1, 2, 3]) == 4
    assert rn.mex([1, 1, 2, 3]) == 0
    assert rn.mex([0, 2, 3, 5]) == 1
    assert rn.mex([0, 0, 0, 1]) == 2
    report(2, "all four mex fixtures exact")


def test_criterion_03_main_theorem_sweep():
    t0 = time.perf_counter()
    for p in range(1, 7):
        rep = rn.verify_equivalence(rn.generalized_ryuo(p), (59, 59))
        assert rep.ok, rep.summary()
        assert rep.positions_checked == 3600
    elapsed = time.perf_counter() - t0
    assert elapsed < 5.0, f"{elapsed:.2f} s"
    report(3, f"p=1..6 on 60x60: 0 mismatches ({elapsed:.2f} s < 5 s)")


def test_criterion_04_nim_sum_mex_recurrence():
    for k in range(33):
        for h in range(33):
            reach = [(k - t) ^ h for t in range(1, k + 1)]
            reach += [k ^ (h - t) for t in range(1, h + 1)]
            assert k ^ h == rn.mex(reach), (k, h)
    report(4, "nim-sum mex recurrence holds for all k,h <= 32")


def test_criterion_05_pass_theorem_sweep():
    t0 = time.perf_counter()
    for p in (3, 4, 5):
        rep = rn.verify_pass_theorem(p, (39, 39))
        assert rep.ok, rep.summary()
        assert rep.positions_checked == 40 * 40 * 2
    for state in [(2, 2, True), (5, 6, True), (1, 3, True), (3, 1, True)]:
        assert rn.classify_pass(3, state) is Outcome.P, state
    elapsed = time.perf_counter() - t0
    assert elapsed < 5.0, f"{elapsed:.2f} s"
    report(5, f"p=3,4,5 on 40x40 both layers: 0 mismatches; memberships hold "
              f"({elapsed:.2f} s < 5 s)")


def test_criterion_06_restricted_variants():
    for p, q in ((2, 4), (3, 3), (3, 6), (4, 8), (3, 4), (3, 7), (4, 5)):
        rep = rn.verify_equivalence(rn.restricted_side(p, q), (47, 47))
        assert rep.ok, rep.summary()
    assert rn.grundy_closed_form(rn.restricted_side(3, 4), (4, 4)) == 4
    for p, q, r in ((3, 3, 6), (2, 4, 2), (3, 6, 3)):
        rep = rn.verify_equivalence(rn.restricted_hv(p, q, r), (47, 47))
        assert rep.ok, rep.summary()
    control = rn.verify_moveset_equivalence(
        rn.literal_restricted_side_move_set(2, 2),
        rn.restricted_side(2, 2), (2, 2))
    assert len(control.mismatches) >= 1
    report(6, "7 side + 3 hv parameterizations clean on 48x48; special value "
              "G(4,4)=4; literal-cap control mismatches as required")


def test_criterion_07_higher_dimensions():
    t0 = time.perf_counter()
    rep = rn.verify_equivalence(rn.modified_three_dim(), (19, 19, 19))
    assert rep.ok, rep.summary()

    induction = rn.p_position_table(rn.three_dim(), (19, 19, 19))
    for pos in np.ndindex(induction.shape):
        assert bool(induction[pos]) == rn.three_dim_is_p(pos), pos

    for p, n in ((2, 4), (3, 4)):
        rep = rn.verify_equivalence(rn.n_dim(p, n), (9,) * 4)
        assert rep.ok, rep.summary()
        assert rep.positions_checked == 10 ** 4

    ndim = rn.brute_force_table(rn.n_dim(3, 3), (14, 14, 14))
    modified = rn.brute_force_table(rn.modified_three_dim(), (14, 14, 14))
    assert (ndim.values == modified.values).all()
    elapsed = time.perf_counter() - t0
    assert elapsed < 30.0, f"{elapsed:.2f} s"
    report(7, f"3-dim theorems on 20^3, n-dim on 10^4 grid, ndim(3,3) == "
              f"modified 3-dim on 15^3 ({elapsed:.2f} s < 30 s)")


def test_criterion_08_necessary_condition():
    cases = 0
    for p in (3, 4, 5):
        for s in range(p):
            for t in range(p - s):
                if not 1 <= s + t <= p - 1:
                    continue
                witness = rn.necessary_condition_witness(p, (s, t))
                assert witness.oracle != witness.formula
                assert all(c <= p + 1 for c in witness.position)
                cases += 1
    assert cases == 5 + 9 + 14
    report(8, f"dropping any of the {cases} offsets yields a witness inside "
              f"(p+2)x(p+2)")


def _sampled_states():
    for p in range(1, 7):
        rules = rn.generalized_ryuo(p)
        for x in range(0, 60, 2):
            for y in range(0, 60, 2):
                yield rules, (x, y)
    for p, q in ((3, 6), (3, 4), (2, 4)):
        rules = rn.restricted_side(p, q)
        for x in range(0, 48, 3):
            for y in range(0, 48, 3):
                yield rules, (x, y)
    rules = rn.restricted_hv(3, 3, 6)
    for x in range(0, 48, 3):
        for y in range(0, 48, 3):
            yield rules, (x, y)
    for rules, width in ((rn.three_dim(), 12), (rn.modified_three_dim(), 9)):
        for pos in itertools.product(range(width + 1), repeat=3):
            yield rules, pos
    rules = rn.n_dim(2, 4)
    for pos in itertools.product(range(7), repeat=4):
        yield rules, pos


def test_criterion_09_strategy_soundness():
    sampled = 0
    n_positions = 0
    for rules, pos in _sampled_states():
        sampled += 1
        if rn.outcome(rules, pos) is Outcome.N:
            n_positions += 1
            move = rn.engine_move(rules, pos)
            assert move.winning
            assert rn.outcome(rules, move.target) is Outcome.P, (rules, pos)
    for p in (3, 4, 5):
        for x in range(0, 40, 2):
            for y in range(0, 40, 2):
                for layer in (False, True):
                    sampled += 1
                    state = (x, y, layer)
                    rules = rn.pass_ryuo(p)
                    if (x, y) != (0, 0) and rn.classify_pass(p, state) is Outcome.N:
                        n_positions += 1
                        move = rn.engine_move(rules, state)
                        assert rn.classify_pass(p, move.target) is Outcome.P

    assert sampled >= 10 ** 4, sampled

    pos = (30, 30)
    moves = 0
    while any(pos):
        pos = rn.engine_move(rn.generalized_ryuo(3), pos).target
        moves += 1
    assert moves <= 61

    report(9, f"{sampled} sampled states ({n_positions} N-positions) all land "
              f"on P; self-play from (30,30) ended in {moves} <= 61 moves")


def test_criterion_10_cli_determinism(capsys):
    args = ["table", "--game", "ryuo", "--p", "3", "--max", "12",
            "--format", "csv"]
    assert cli.main(args) == 0
    first = capsys.readouterr().out
    assert cli.main(args) == 0
    second = capsys.readouterr().out
    assert first == second and first

    assert cli.main(["verify", "--suite", "all"]) == 0
    out = capsys.readouterr().out
    assert "checks passed" in out
    report(10, "table emission byte-identical across runs; "
               "verify --suite all exits 0")


def test_criterion_11_api_contract(live_service):
    with TestClient(create_app()) as client:
        r = client.post("/api/eval",
                        json={"game": {"variant": "ryuo", "params": {"p": 3}},
                              "position": {"coords": [17, 19]}})
        assert r.status_code == 200
        assert r.json()["grundy"] == 9

        rng = random.Random(2024)
        for _ in range(50):
            p = rng.randrange(1, 7)
            coords = [rng.randrange(0, 15), rng.randrange(0, 15)]
            got = client.post(
                "/api/moves",
                json={"game": {"variant": "ryuo", "params": {"p": p}},
                      "position": {"coords": coords}}).json()["moves"]
            expected = sorted(rn.legal_moves(rn.generalized_ryuo(p),
                                             tuple(coords)))
            assert got == [list(m) for m in expected]

    body = {"game": {"variant": "ryuo", "params": {"p": 3}},
            "position": {"coords": [17, 19]}}

    def fire(_):
        return httpx.post(f"{live_service}/api/eval", json=body, timeout=30)

    with ThreadPoolExecutor(max_workers=8) as pool:
        responses = list(pool.map(fire, range(24)))
    assert len({r.content for r in responses}) == 1
    assert json.loads(responses[0].content)["grundy"] == 9
    report(11, "eval grundy 9; /api/moves matches the library on 50 random "
               "fixtures; 24 concurrent identical requests returned "
               "identical bodies")
