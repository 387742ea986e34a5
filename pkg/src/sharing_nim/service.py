"""JSON-over-HTTP facade: play sessions against the engine, analysis queries.

Wire format addresses piles by the stable labels L0/L1/L2 given at creation;
sorting happens internally. Sessions live in memory, with an optional JSON
snapshot written on shutdown and reloaded on start. Request bodies are parsed
by hand so every client error comes back as {"error": code, "detail": text}.
"""

from __future__ import annotations

import itertools
import json
import threading
from contextlib import asynccontextmanager
from dataclasses import dataclass, field
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse

from .core import (
    IllegalMove,
    Move,
    Position,
    apply_move,
    is_terminal,
    legal_moves,
    normalize,
    odd_part,
    outcome,
    two_adic_valuation,
    winning_moves,
)
from .oracle import GrundyTable, OutOfRange, build_table
from .analysis import InsufficientPrefix, distribution_report, f_sequence, period_scan

LABELS = ("L0", "L1", "L2")
DEFAULT_TABLE_MAX_B = 600


class ServiceError(Exception):
    def __init__(self, status: int, code: str, detail: str):
        super().__init__(detail)
        self.status = status
        self.code = code
        self.detail = detail


def bad_request(detail: str) -> ServiceError:
    return ServiceError(400, "bad_request", detail)


def not_found(detail: str) -> ServiceError:
    return ServiceError(404, "not_found", detail)


def illegal_move(detail: str) -> ServiceError:
    return ServiceError(422, "illegal_move", detail)


def conflict(detail: str) -> ServiceError:
    return ServiceError(409, "conflict", detail)


@dataclass
class GameSession:
    """One play-through. Piles keyed by creation label, never re-ordered."""

    id: str
    piles: dict[str, int]
    history: list[dict] = field(default_factory=list)
    lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    @property
    def position(self) -> Position:
        return Position(*self.piles.values())

    @property
    def finished(self) -> bool:
        return is_terminal(self.position)

    @property
    def winner(self) -> str | None:
        if self.finished and self.history:
            return self.history[-1]["mover"]
        return None

    def sorted_labels(self) -> list[str]:
        # rank i of the sorted triple <-> this label; ties break by label name
        return sorted(LABELS, key=lambda lab: (self.piles[lab], lab))

    def apply_label_move(self, mover: str, source: str, dest: str, k: int) -> None:
        if source == dest:
            raise IllegalMove("source and destination must differ")
        if k < 1:
            raise IllegalMove("must move at least one token")
        if self.piles[dest] + k > self.piles[source] - k:
            raise IllegalMove(
                f"destination would exceed source: {self.piles[dest]}+{k} > {self.piles[source]}-{k}"
            )
        self.piles[source] -= k
        self.piles[dest] += k
        self.history.append({
            "mover": mover,
            "move": {"source": source, "dest": dest, "k": k},
            "position": dict(self.piles),
        })

    def to_dict(self) -> dict:
        out = {
            "id": self.id,
            "piles": dict(self.piles),
            "status": "finished" if self.finished else "in_progress",
            "history": [dict(h) for h in self.history],
        }
        if self.finished:
            if self.winner is not None:
                out["winner"] = self.winner
        else:
            last = self.history[-1]["mover"] if self.history else None
            out["next_mover"] = "engine" if last == "human" else "human"
        return out


class SessionStore:
    """In-memory id -> session map with deterministic counter ids."""

    def __init__(self, snapshot_path: str | Path | None = None):
        self._sessions: dict[str, GameSession] = {}
        self._counter = itertools.count(1)
        self._lock = threading.Lock()
        self.snapshot_path = Path(snapshot_path) if snapshot_path else None
        if self.snapshot_path and self.snapshot_path.exists():
            self.load(self.snapshot_path)

    def create(self, piles: list[int]) -> GameSession:
        with self._lock:
            sid = f"g{next(self._counter)}"
            session = GameSession(id=sid, piles=dict(zip(LABELS, piles)))
            self._sessions[sid] = session
            return session

    def get(self, sid: str) -> GameSession:
        session = self._sessions.get(sid)
        if session is None:
            raise not_found(f"no session {sid!r}")
        return session

    def save(self, path: str | Path | None = None) -> None:
        path = Path(path) if path else self.snapshot_path
        if path is None:
            return
        state = {
            "next_id": max((int(s[1:]) for s in self._sessions), default=0) + 1,
            "sessions": [
                {"id": s.id, "piles": s.piles, "history": s.history}
                for s in self._sessions.values()
            ],
        }
        path.write_text(json.dumps(state))

    def load(self, path: str | Path) -> None:
        state = json.loads(Path(path).read_text())
        self._sessions = {
            rec["id"]: GameSession(id=rec["id"], piles=rec["piles"], history=rec["history"])
            for rec in state["sessions"]
        }
        self._counter = itertools.count(state["next_id"])


def _parse_piles(payload) -> list[int]:
    if not isinstance(payload, dict) or "piles" not in payload:
        raise bad_request('body must be a JSON object with a "piles" list')
    piles = payload["piles"]
    if not isinstance(piles, list) or len(piles) != 3:
        raise bad_request('"piles" must be a list of three nonnegative integers')
    for v in piles:
        if not isinstance(v, int) or isinstance(v, bool) or v < 0 or v >= 2**64:
            raise bad_request(f"pile size must be a nonnegative 64-bit integer, got {v!r}")
    return piles


def _parse_label_move(payload) -> tuple[str, str, int]:
    if not isinstance(payload, dict):
        raise bad_request("body must be a JSON object")
    try:
        source, dest, k = payload["source"], payload["dest"], payload["k"]
    except KeyError as e:
        raise bad_request(f"missing move field {e.args[0]!r}")
    if source not in LABELS or dest not in LABELS:
        raise bad_request(f"source and dest must be pile labels {LABELS}")
    if not isinstance(k, int) or isinstance(k, bool):
        raise bad_request("k must be an integer")
    return source, dest, k


def _index_move_to_labels(session: GameSession, m: Move) -> tuple[str, str, int]:
    order = session.sorted_labels()
    return order[m.source], order[m.dest], m.k


def _int_param(request: Request, name: str, default: int | None = None) -> int:
    raw = request.query_params.get(name)
    if raw is None:
        if default is not None:
            return default
        raise bad_request(f"missing query parameter {name!r}")
    try:
        return int(raw)
    except ValueError:
        raise bad_request(f"query parameter {name!r} must be an integer, got {raw!r}")


def create_app(
    table_max_b: int = DEFAULT_TABLE_MAX_B,
    snapshot_path: str | Path | None = None,
) -> FastAPI:
    """Build the app with its table (built once, immutable) and store."""
    table: GrundyTable = build_table(table_max_b)
    store = SessionStore(snapshot_path=snapshot_path)

    @asynccontextmanager
    async def _lifespan(_: FastAPI):
        yield
        store.save()

    app = FastAPI(title="sharing-nim", docs_url=None, redoc_url=None, lifespan=_lifespan)
    app.state.store = store
    app.state.table = table

    @app.exception_handler(ServiceError)
    async def _service_error(_, exc: ServiceError):
        return JSONResponse(status_code=exc.status, content={"error": exc.code, "detail": exc.detail})

    @app.exception_handler(RequestValidationError)
    async def _validation_error(_, exc):
        return JSONResponse(status_code=400, content={"error": "bad_request", "detail": str(exc)})

    async def _json_body(request: Request):
        try:
            return await request.json()
        except Exception:
            raise bad_request("body is not valid JSON")

    @app.post("/api/games")
    async def create_game(request: Request):
        piles = _parse_piles(await _json_body(request))
        return store.create(piles).to_dict()

    @app.get("/api/games/{sid}")
    async def get_game(sid: str):
        return store.get(sid).to_dict()

    @app.post("/api/games/{sid}/moves")
    async def submit_move(sid: str, request: Request):
        body = await _json_body(request)
        session = store.get(sid)
        source, dest, k = _parse_label_move(body)
        with session.lock:
            if session.finished:
                raise conflict("game is finished")
            try:
                session.apply_label_move("human", source, dest, k)
            except IllegalMove as e:
                raise illegal_move(str(e))
            return session.to_dict()

    @app.post("/api/games/{sid}/engine-move")
    async def engine_move(sid: str):
        session = store.get(sid)
        with session.lock:
            if session.finished:
                raise conflict("game is finished")
            p = session.position
            wins = winning_moves(p)
            move = wins[0] if wins else min(legal_moves(p))
            source, dest, k = _index_move_to_labels(session, move)
            session.apply_label_move("engine", source, dest, k)
            return session.to_dict()

    @app.get("/api/analysis/status")
    async def analysis_status(request: Request):
        a = _int_param(request, "a")
        b = _int_param(request, "b")
        c = _int_param(request, "c")
        if min(a, b, c) < 0 or max(a, b, c) >= 2**64:
            raise bad_request("pile sizes must be nonnegative 64-bit integers")
        p = Position(a, b, c)
        out = outcome(p)
        A, B = normalize(p)
        return {
            "outcome": out.label,
            "terminal": out.terminal,
            "normalized": {"A": A, "B": B},
            "valuation": two_adic_valuation(B) if B >= 1 else None,
            "odd_part": odd_part(B) if B >= 1 else None,
            "winning_moves": [
                {"source": m.source, "dest": m.dest, "k": m.k} for m in winning_moves(p)
            ],
        }

    @app.get("/api/analysis/grundy")
    async def analysis_grundy(request: Request):
        a = _int_param(request, "a")
        b = _int_param(request, "b")
        if not 0 <= a <= b:
            raise bad_request(f"need 0 <= a <= b, got a={a}, b={b}")
        try:
            value = table.value(a, b)
        except OutOfRange as e:
            raise bad_request(str(e))
        return {"a": a, "b": b, "value": value}

    @app.get("/api/analysis/table")
    async def analysis_table(request: Request):
        max_b = _int_param(request, "max_b")
        if not 0 <= max_b <= table.max_b:
            raise bad_request(f"max_b must be within 0..{table.max_b}")
        rows = []
        for a in range(max_b + 1):
            rows.append([table.value(a, b) if b >= a else None for b in range(max_b + 1)])
        return {"max_b": max_b, "rows": rows}

    @app.get("/api/analysis/row")
    async def analysis_row(request: Request):
        a = _int_param(request, "a")
        count = _int_param(request, "count")
        if a < 0 or count < 1:
            raise bad_request("need a >= 0 and count >= 1")
        if a + count - 1 > table.max_b:
            raise bad_request(f"row slice ends at {a + count - 1}, table holds B <= {table.max_b}")
        return {"a": a, "start": a, "values": [table.value(a, n) for n in range(a, a + count)]}

    @app.get("/api/analysis/f")
    async def analysis_f(request: Request):
        max_n = _int_param(request, "max_n")
        if not 0 <= max_n <= 10**6:
            raise bad_request("max_n must be within 0..1000000")
        return {"max_n": max_n, "values": f_sequence(max_n)}

    @app.get("/api/analysis/period-scan")
    async def analysis_period_scan(request: Request):
        seq_name = request.query_params.get("seq", "f")
        if seq_name != "f":
            raise bad_request('only seq=f is available')
        max_pre = _int_param(request, "max_pre")
        max_p = _int_param(request, "max_p")
        length = _int_param(request, "len", default=490)
        if not 0 < length <= 10**6:
            raise bad_request("len must be within 1..1000000")
        try:
            result = period_scan(f_sequence(length - 1), max_pre, max_p)
        except InsufficientPrefix as e:
            raise bad_request(str(e))
        return {"seq": seq_name, **result.to_dict()}

    @app.get("/api/analysis/distribution")
    async def analysis_distribution(request: Request):
        g = _int_param(request, "g")
        max_b = _int_param(request, "max_b")
        if g < 0:
            raise bad_request("g must be >= 0")
        if not 0 <= max_b <= table.max_b:
            raise bad_request(f"max_b must be within 0..{table.max_b}")
        return distribution_report(g, max_b, table).to_dict()

    return app
