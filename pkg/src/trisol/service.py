"""HTTP sessions for playing the marble game.

The service keeps one game per session: a labeled basis configuration
and its 3-permutation, kept in lock step.  Every state the session has
passed through is stored as serialized bytes, so the state returned
after an undo is byte for byte the one served before the undone move.

Routes:

    POST /session                     {"n": 5, "start": "line"}
    GET  /session/<id>/state
    POST /session/<id>/move           {"from": [x,y], "to": [x,y], "axis": "first"}
    POST /session/<id>/undo
    GET  /session/<id>/history

``start`` may also be "random" (a sampled basis; the response reports
the seed), {"cells": [[x,y], ...]} for an explicit basis, or
{"sigma": [...], "tau": [...]} for an explicit class member.  An illegal
move answers 409 with the violated requirement spelled out.  Responses
carry permissive CORS headers so a browser app served from elsewhere
can talk to the service directly.
"""

from __future__ import annotations

import json
import os
import posixpath
import random
import re
import secrets
import threading
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

from .bijection import configuration_to_perm, perm_to_configuration
from .errors import DomainError, IllegalMoveError
from .grid import Configuration, is_basis
from .perms import ThreePermutation, is_permutation
from .solitaire import (
    Axis,
    apply_move,
    apply_perm_move,
    grid_move_to_perm_move,
    legal_moves,
    sample_basis,
    slide,
)

MAX_SESSION_SIZE = 12
MAX_BODY_BYTES = 1 << 20
DEFAULT_PORT = 8765
PORT_ENV_VAR = "TRISOL_PORT"


def default_port() -> int:
    raw = os.environ.get(PORT_ENV_VAR)
    if raw is None:
        return DEFAULT_PORT
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{PORT_ENV_VAR} must be an integer, got {raw!r}") from None


class _Session:
    def __init__(self, session_id: str, n: int, perm: ThreePermutation, seed: int | None):
        self.id = session_id
        self.n = n
        self.seed = seed
        self.lock = threading.Lock()
        self.perm = perm
        self.conf = perm_to_configuration(perm)
        self.moves: list[dict] = []
        # every snapshot keeps the serialized bytes next to the objects
        # they describe, so undo restores both without recomputation
        self.snapshots: list[tuple[bytes, ThreePermutation, Configuration]] = [
            (self._encode_state(None), self.perm, self.conf)
        ]

    def _state_dict(self, last_move: dict | None) -> dict:
        conf, perm, n = self.conf, self.perm, self.n
        move_entries = []
        for m in legal_moves(conf.cells, n):
            pm = grid_move_to_perm_move(conf, m)
            move_entries.append(
                {
                    "pivot_anchor": list(m.pivot_anchor),
                    "from": list(m.from_cell),
                    "to": list(m.to_cell),
                    "axes": [pm.axis.value],
                    "pair": [pm.i, pm.j],
                }
            )
        return {
            "id": self.id,
            "n": n,
            "configuration": {
                "n": n,
                "cells": [list(c) for c in conf.labels],
                "labeled": True,
            },
            "permutation": {
                "n": n,
                "sigma": list(perm.sigma),
                "tau": list(perm.tau),
            },
            "is_basis": is_basis(conf.cells, n),
            "legal_moves": move_entries,
            "last_move": last_move,
            "move_count": len(self.moves),
        }

    def _encode_state(self, last_move: dict | None) -> bytes:
        return json.dumps(
            self._state_dict(last_move), sort_keys=True, separators=(",", ":")
        ).encode("utf-8")

    def state_bytes(self) -> bytes:
        return self.snapshots[-1][0]

    def play(self, from_cell, to_cell, axis: str | None) -> bytes:
        move = slide(from_cell, to_cell)
        pm = grid_move_to_perm_move(self.conf, move)
        if axis is not None and Axis(axis) is not pm.axis:
            raise IllegalMoveError(
                f"this slide swaps along axis {pm.axis.value}, not {axis}"
            )
        new_conf = apply_move(self.conf, move, self.n)
        new_perm = apply_perm_move(self.perm, pm)
        assert perm_to_configuration(new_perm) == new_conf
        record = {
            "pivot_anchor": list(move.pivot_anchor),
            "from": list(move.from_cell),
            "to": list(move.to_cell),
            "axis": pm.axis.value,
            "pair": [pm.i, pm.j],
        }
        self.conf, self.perm = new_conf, new_perm
        self.moves.append(record)
        self.snapshots.append((self._encode_state(record), new_perm, new_conf))
        return self.snapshots[-1][0]

    def undo(self) -> bytes:
        if len(self.snapshots) == 1:
            raise IllegalMoveError("there is no move to undo")
        self.snapshots.pop()
        self.moves.pop()
        payload, self.perm, self.conf = self.snapshots[-1]
        return payload

    def history_bytes(self) -> bytes:
        return json.dumps(
            {"id": self.id, "moves": self.moves, "move_count": len(self.moves)},
            sort_keys=True,
            separators=(",", ":"),
        ).encode("utf-8")


class _ServiceState:
    def __init__(self):
        self.sessions: dict[str, _Session] = {}
        self.lock = threading.Lock()

    def create(self, body: dict) -> _Session:
        try:
            n = int(body.get("n"))
        except (TypeError, ValueError):
            raise DomainError("the request needs an integer n") from None
        if not 1 <= n <= MAX_SESSION_SIZE:
            raise DomainError(f"n must be between 1 and {MAX_SESSION_SIZE}")
        start = body.get("start", "line")
        seed = None
        if start == "line":
            perm = ThreePermutation(
                tuple(range(n, 0, -1)), tuple(range(1, n + 1))
            )
        elif start == "random":
            seed = body.get("seed")
            if seed is None:
                seed = secrets.randbelow(2**31)
            elif not isinstance(seed, int):
                raise DomainError("seed must be an integer")
            cells = sample_basis(n, seed=seed)
            perm = configuration_to_perm(cells, n, assume_basis=True)
        elif isinstance(start, dict) and "cells" in start:
            try:
                cells = frozenset((int(x), int(y)) for x, y in start["cells"])
            except (TypeError, ValueError):
                raise DomainError("cells must be a list of [x, y] pairs") from None
            if len(cells) != n:
                raise DomainError(f"expected {n} distinct cells")
            perm = configuration_to_perm(cells, n)
        elif isinstance(start, dict) and "sigma" in start and "tau" in start:
            try:
                sigma = tuple(int(v) for v in start["sigma"])
                tau = tuple(int(v) for v in start["tau"])
            except (TypeError, ValueError):
                raise DomainError("sigma and tau must be integer lists") from None
            if not (is_permutation(sigma) and is_permutation(tau) and len(sigma) == n):
                raise DomainError("sigma and tau must be permutations of 1..n")
            perm = ThreePermutation(sigma, tau)
        else:
            raise DomainError(
                'start must be "line", "random", {"cells": ...} or {"sigma": ..., "tau": ...}'
            )
        session_id = secrets.token_hex(8)
        session = _Session(session_id, n, perm, seed)
        with self.lock:
            self.sessions[session_id] = session
        return session

    def get(self, session_id: str) -> "_Session | None":
        with self.lock:
            return self.sessions.get(session_id)


_SESSION_ROUTE = re.compile(r"^/session/([0-9a-f]+)/(state|move|undo|history)$")


class _Handler(BaseHTTPRequestHandler):
    server_version = "trisol"
    protocol_version = "HTTP/1.1"

    # quiet by default; the server object can flip this on
    def log_message(self, fmt, *args):
        if getattr(self.server, "verbose", False):
            super().log_message(fmt, *args)

    @property
    def state(self) -> _ServiceState:
        return self.server.service_state

    def _send(self, status: int, payload: bytes, content_type="application/json"):
        self.send_response(status)
        self.send_header("Content-Type", content_type)
        self.send_header("Content-Length", str(len(payload)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.end_headers()
        self.wfile.write(payload)

    def _send_json(self, status: int, obj: dict):
        payload = json.dumps(obj, sort_keys=True, separators=(",", ":")).encode()
        self._send(status, payload)

    def _send_error(self, status: int, message: str):
        self._send_json(status, {"error": message})

    def _read_body(self) -> dict:
        length = int(self.headers.get("Content-Length") or 0)
        if length > MAX_BODY_BYTES:
            raise DomainError("request body too large")
        raw = self.rfile.read(length) if length else b""
        if not raw:
            return {}
        try:
            body = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise DomainError(f"request body is not valid JSON: {exc}") from None
        if not isinstance(body, dict):
            raise DomainError("request body must be a JSON object")
        return body

    def do_OPTIONS(self):
        self._send(204, b"", content_type="text/plain")

    def do_GET(self):
        m = _SESSION_ROUTE.match(self.path)
        if m:
            session = self.state.get(m.group(1))
            if session is None:
                return self._send_error(404, "unknown session")
            action = m.group(2)
            if action == "state":
                with session.lock:
                    return self._send(200, session.state_bytes())
            if action == "history":
                with session.lock:
                    return self._send(200, session.history_bytes())
            return self._send_error(405, f"{action} needs POST")
        if self._serve_static():
            return
        self._send_error(404, "unknown route")

    def do_POST(self):
        try:
            if self.path == "/session":
                body = self._read_body()
                session = self.state.create(body)
                with session.lock:
                    state = json.loads(session.state_bytes())
                return self._send_json(
                    201, {"id": session.id, "seed": session.seed, "state": state}
                )
            m = _SESSION_ROUTE.match(self.path)
            if m:
                session = self.state.get(m.group(1))
                if session is None:
                    return self._send_error(404, "unknown session")
                action = m.group(2)
                if action == "move":
                    body = self._read_body()
                    try:
                        from_cell = tuple(int(v) for v in body["from"])
                        to_cell = tuple(int(v) for v in body["to"])
                    except (KeyError, TypeError, ValueError):
                        raise DomainError(
                            'a move needs "from" and "to" cells as [x, y]'
                        ) from None
                    if len(from_cell) != 2 or len(to_cell) != 2:
                        raise DomainError("cells are [x, y] pairs")
                    axis = body.get("axis")
                    if axis is not None and axis not in tuple(a.value for a in Axis):
                        raise DomainError(f"unknown axis {axis!r}")
                    with session.lock:
                        payload = session.play(from_cell, to_cell, axis)
                    return self._send(200, payload)
                if action == "undo":
                    with session.lock:
                        payload = session.undo()
                    return self._send(200, payload)
                return self._send_error(405, f"{action} needs GET")
            return self._send_error(404, "unknown route")
        except IllegalMoveError as exc:
            return self._send_error(409, str(exc))
        except DomainError as exc:
            return self._send_error(400, str(exc))

    def _serve_static(self) -> bool:
        ui_dir = getattr(self.server, "ui_dir", None)
        if ui_dir is None:
            return False
        path = posixpath.normpath(self.path.split("?", 1)[0])
        if path in ("/", "."):
            path = "/index.html"
        candidate = os.path.realpath(os.path.join(ui_dir, path.lstrip("/")))
        root = os.path.realpath(ui_dir)
        if not candidate.startswith(root + os.sep) and candidate != root:
            self._send_error(404, "unknown route")
            return True
        if not os.path.isfile(candidate):
            return False
        import mimetypes

        ctype = mimetypes.guess_type(candidate)[0] or "application/octet-stream"
        with open(candidate, "rb") as fh:
            payload = fh.read()
        self._send(200, payload, content_type=ctype)
        return True


def create_server(
    port: int = 0,
    host: str = "127.0.0.1",
    ui_dir: str | None = None,
    verbose: bool = False,
) -> ThreadingHTTPServer:
    """A ready ThreadingHTTPServer; port 0 picks a free port.

    The caller drives serve_forever (and shutdown); tests run it on a
    thread against an ephemeral port.
    """
    server = ThreadingHTTPServer((host, port), _Handler)
    server.service_state = _ServiceState()
    server.ui_dir = ui_dir
    server.verbose = verbose
    return server


def run(port: int | None = None, host: str = "127.0.0.1", ui_dir: str | None = None):
    """Blocking entry point used by the command line."""
    if port is None:
        port = default_port()
    server = create_server(port, host, ui_dir, verbose=True)
    addr = server.server_address
    print(f"serving on http://{addr[0]}:{addr[1]}/  (Ctrl-C stops)")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
