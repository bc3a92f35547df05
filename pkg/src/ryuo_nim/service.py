"""Stateless JSON-over-HTTP facade for the play UI and scripted clients.

Responses are pure functions of request bodies.  Error bodies always carry
``{"error": msg}``: 400 for malformed requests, 422 for well-formed requests
whose position does not fit the variant (or would need an oracle region
beyond the service cap).
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from . import games, grundy, pass_play, strategy, tables
from .games import Outcome, PassPosition, RuleSet, Variant

TABLE_CAP = 256        # per-axis table maximum (UI heatmaps only)
ORACLE_AXIS_CAP = 256  # cap for minimal-region oracle evaluations

VARIANT_CATALOGUE = [
    {"variant": "ryuo", "params": ["p"], "closedForm": True},
    {"variant": "pass-ryuo", "params": ["p"], "closedForm": False,
     "ppositionFormula": True},
    {"variant": "restricted-side", "params": ["p", "q"], "closedForm": False,
     "closedFormWhen": "q % p in {0, 1}"},
    {"variant": "restricted-hv", "params": ["p", "q", "r"], "closedForm": False,
     "closedFormWhen": "q % p == 0 and r % p == 0"},
    {"variant": "3dim", "params": [], "closedForm": False,
     "ppositionFormula": True},
    {"variant": "3dim-modified", "params": [], "closedForm": True},
    {"variant": "ndim", "params": ["p", "n"], "closedForm": True},
]


class ApiError(Exception):
    def __init__(self, status: int, message: str):
        super().__init__(message)
        self.status = status
        self.message = message


async def _json_body(request: Request) -> dict:
    try:
        body = await request.json()
    except Exception:
        raise ApiError(400, "request body is not valid JSON") from None
    if not isinstance(body, dict):
        raise ApiError(400, "request body must be a JSON object")
    return body


def _parse_game(body: dict) -> RuleSet:
    game = body.get("game")
    if not isinstance(game, dict):
        raise ApiError(400, "missing 'game' object")
    name = game.get("variant")
    try:
        variant = Variant(name)
    except ValueError:
        raise ApiError(400, f"unknown variant {name!r}") from None
    params = game.get("params", {})
    if not isinstance(params, dict):
        raise ApiError(400, "'game.params' must be an object")
    kwargs = {}
    for key, value in params.items():
        if key not in ("p", "q", "r", "n"):
            raise ApiError(400, f"unknown parameter {key!r}")
        if not isinstance(value, int) or isinstance(value, bool):
            raise ApiError(400, f"parameter {key!r} must be an integer")
        kwargs[key] = value
    try:
        return RuleSet(variant, **kwargs)
    except ValueError as exc:
        raise ApiError(400, str(exc)) from None


def _parse_position(body: dict, rules: RuleSet):
    payload = body.get("position")
    if not isinstance(payload, dict):
        raise ApiError(400, "missing 'position' object")
    coords = payload.get("coords")
    if (not isinstance(coords, list)
            or not all(isinstance(c, int) and not isinstance(c, bool) for c in coords)):
        raise ApiError(400, "'position.coords' must be an array of integers")
    if any(c < 0 for c in coords):
        raise ApiError(400, "coordinates must be non-negative")
    pass_flag = payload.get("pass")
    if rules.variant is Variant.PASS_RYUO:
        if len(coords) != 2:
            raise ApiError(422, "pass-ryuo positions have 2 coordinates")
        if not isinstance(pass_flag, bool):
            raise ApiError(422, "pass-ryuo positions need a boolean 'pass' flag")
        return PassPosition(coords[0], coords[1], pass_flag)
    if pass_flag is not None:
        raise ApiError(422, f"{rules.variant.value} positions carry no pass flag")
    if len(coords) != rules.dimension:
        raise ApiError(422, f"{rules.variant.value} positions have "
                            f"{rules.dimension} coordinates, got {len(coords)}")
    return tuple(coords)


def _wire_position(target) -> list:
    if isinstance(target, PassPosition):
        return [target.x, target.y, target.pass_available]
    return list(target)


def _is_terminal(pos) -> bool:
    if isinstance(pos, PassPosition):
        return pos.x == 0 and pos.y == 0
    return all(c == 0 for c in pos)


def _outcome_with_cap(rules: RuleSet, pos) -> Outcome:
    needs_oracle = (rules.variant not in (Variant.PASS_RYUO, Variant.THREE_DIM)
                    and not grundy.has_closed_form(rules))
    if needs_oracle and any(c > ORACLE_AXIS_CAP for c in pos):
        raise ApiError(422, f"no closed form here; oracle evaluation is "
                            f"capped at {ORACLE_AXIS_CAP} per axis")
    return strategy.outcome(rules, pos)


def create_app() -> FastAPI:
    app = FastAPI(title="ryuo-nim", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origin_regex=r"https?://(localhost|127\.0\.0\.1)(:\d+)?",
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(ApiError)
    async def _api_error(_request, exc: ApiError):
        return JSONResponse({"error": exc.message}, status_code=exc.status)

    @app.get("/api/variants")
    async def variants():
        return VARIANT_CATALOGUE

    @app.post("/api/eval")
    async def evaluate(request: Request):
        body = await _json_body(request)
        rules = _parse_game(body)
        pos = _parse_position(body, rules)
        value = (grundy.grundy_closed_form(rules, pos)
                 if grundy.has_closed_form(rules) else None)
        out = _outcome_with_cap(rules, pos)
        return {"grundy": value, "outcome": out.value,
                "terminal": _is_terminal(pos)}

    @app.post("/api/moves")
    async def moves(request: Request):
        body = await _json_body(request)
        rules = _parse_game(body)
        pos = _parse_position(body, rules)
        if rules.variant is Variant.PASS_RYUO:
            options = sorted(games.legal_moves_pass(rules.p, pos))
        else:
            options = sorted(games.legal_moves(rules, pos))
        return {"moves": [_wire_position(o) for o in options]}

    @app.post("/api/best")
    async def best(request: Request):
        body = await _json_body(request)
        rules = _parse_game(body)
        pos = _parse_position(body, rules)
        if (rules.variant not in (Variant.PASS_RYUO, Variant.THREE_DIM)
                and not grundy.has_closed_form(rules)
                and any(c > ORACLE_AXIS_CAP for c in pos)):
            raise ApiError(422, f"no closed form here; oracle evaluation is "
                                f"capped at {ORACLE_AXIS_CAP} per axis")
        winning = strategy.best_moves(rules, pos)
        if _is_terminal(pos):
            engine = None
        else:
            engine = _wire_position(strategy.engine_move(rules, pos).target)
        return {"winning": [_wire_position(m.target) for m in winning],
                "engineMove": engine}

    @app.post("/api/table")
    async def table(request: Request):
        body = await _json_body(request)
        rules = _parse_game(body)
        region_max = body.get("max")
        if not isinstance(region_max, int) or isinstance(region_max, bool):
            raise ApiError(400, "'max' must be an integer")
        if region_max < 0 or region_max > TABLE_CAP:
            raise ApiError(400, f"'max' must be in 0..{TABLE_CAP}")
        layer = body.get("layer")
        if layer is not None and layer not in (tables.LAYER_PASS,
                                               tables.LAYER_NOPASS):
            raise ApiError(400, "'layer' must be 'pass' or 'nopass'")
        if rules.variant is Variant.PASS_RYUO and layer is None:
            layer = tables.LAYER_PASS
        try:
            doc = tables.build_table(rules, region_max, layer)
        except ValueError as exc:
            raise ApiError(400, str(exc)) from None
        return {"rows": doc.rows}

    return app


def serve(port: int, host: str = "127.0.0.1") -> None:
    """Run the service until interrupted; one access-log line per request
    goes to stderr (stdout stays reserved for data)."""
    import copy

    import uvicorn

    log_config = copy.deepcopy(uvicorn.config.LOGGING_CONFIG)
    log_config["handlers"]["access"]["stream"] = "ext://sys.stderr"
    uvicorn.run(create_app(), host=host, port=port, log_level="info",
                log_config=log_config)
