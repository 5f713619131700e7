"""A JSON-over-HTTP session service around the chart stepper.

Each session owns one chart, one strategy, and an undo log.  The
endpoints, all under ``/api/v1``, mirror the engine operations:

========  ==============================  =======================================
POST      /sessions                       {grammar, sentence, strategy} -> {id}
GET       /sessions/ID/chart              full chart snapshot
POST      /sessions/ID/step               {} -> {rule, new_edge} or {done: true}
POST      /sessions/ID/apply              {rule, edge_ids?} -> {new_edges}
POST      /sessions/ID/strategy           {name}
POST      /sessions/ID/reset              {preset}
POST      /sessions/ID/undo               {} -> {removed}
GET       /sessions/ID/tree?edge=N        partial tree for one edge
GET       /sessions/ID/parses             every complete parse on the chart
GET       /presets                        preset names
GET       /presets/NAME                   one preset snapshot
========  ==============================  =======================================

Responses are deterministic given the request history: session ids are
sequential, JSON keys are sorted, and the engine itself is
deterministic.  Mutations are serialized per session, so two sessions
never wait on each other.

The undo log records the edge ids each mutation added.  Because ids
are insertion order and children always point backwards, undoing a
batch is a truncation of the edge list.
"""

from __future__ import annotations

import json
import re
import threading
from dataclasses import dataclass, field
from wsgiref.simple_server import WSGIServer, make_server
from socketserver import ThreadingMixIn

from .chart import (
    Chart,
    ChartRule,
    STRATEGIES,
    Strategy,
    apply_rule,
    chart_init,
    edge_to_dict,
    extract_parses,
    restore,
    snapshot,
    step,
    tree_for_edge,
)
from .errors import LingkitError, UnknownEdgeId
from .grammar import parse_cfg
from .tokens import TaggedToken, whitespace_tokenize
from .tree import Tree, format_tree


class ApiError(Exception):
    def __init__(self, status: int, message: str):
        self.status = status
        self.message = message
        super().__init__(message)


def tree_to_dict(t: Tree | TaggedToken) -> dict:
    if isinstance(t, TaggedToken):
        return {"leaf": t.text, "tag": t.tag, "start": t.loc.start, "end": t.loc.end}
    if t.node.endswith("?") and not t.children:
        return {"placeholder": t.node[:-1]}
    return {"node": t.node, "children": [tree_to_dict(c) for c in t.children]}


@dataclass
class Session:
    id: str
    chart: Chart
    strategy: Strategy
    undo_log: list[list[int]] = field(default_factory=list)
    lock: threading.RLock = field(default_factory=threading.RLock)


class SessionService:
    """The session store plus the request handlers; WSGI-independent."""

    def __init__(self, presets: dict[str, dict] | None = None):
        self._sessions: dict[str, Session] = {}
        self._presets = dict(presets or {})
        self._counter = 0
        self._lock = threading.Lock()
        for name, snap in self._presets.items():
            restore(snap)  # validate up front; a bad preset fails loudly here

    # -- session plumbing ---------------------------------------------------

    def _new_id(self) -> str:
        with self._lock:
            self._counter += 1
            return f"s{self._counter}"

    def _session(self, session_id: str) -> Session:
        session = self._sessions.get(session_id)
        if session is None:
            raise ApiError(404, f"unknown session {session_id!r}")
        return session

    # -- handlers -----------------------------------------------------------

    def create_session(self, body: dict) -> dict:
        for key in ("grammar", "sentence"):
            if key not in body:
                raise ApiError(400, f"missing field {key!r}")
        strategy_name = body.get("strategy", "TopDown")
        if strategy_name not in STRATEGIES:
            raise ApiError(400, f"unknown strategy {strategy_name!r}")
        try:
            grammar = parse_cfg(body["grammar"])
            chart = chart_init(grammar, whitespace_tokenize(body["sentence"]))
        except LingkitError as err:
            raise ApiError(400, str(err))
        session = Session(self._new_id(), chart, STRATEGIES[strategy_name])
        self._sessions[session.id] = session
        return {"id": session.id, "strategy": session.strategy.name}

    def get_chart(self, session_id: str) -> dict:
        session = self._session(session_id)
        with session.lock:
            return snapshot(session.chart)

    def post_step(self, session_id: str, body: dict) -> dict:
        session = self._session(session_id)
        with session.lock:
            outcome = step(session.chart, session.strategy)
            if outcome is None:
                return {"done": True}
            rule, edge = outcome
            session.undo_log.append([session.chart.id_of(edge)])
            return {"rule": rule.value, "new_edge": edge_to_dict(session.chart, edge)}

    def post_apply(self, session_id: str, body: dict) -> dict:
        session = self._session(session_id)
        if "rule" not in body:
            raise ApiError(400, "missing field 'rule'")
        try:
            rule = ChartRule.from_name(body["rule"])
        except ValueError as err:
            raise ApiError(400, str(err))
        selected = None
        if body.get("edge_ids") is not None:
            if not isinstance(body["edge_ids"], list):
                raise ApiError(400, "edge_ids must be a list")
            selected = set(body["edge_ids"])
        with session.lock:
            try:
                added = apply_rule(session.chart, rule, selected)
            except UnknownEdgeId as err:
                raise ApiError(404, str(err))
            if added:
                session.undo_log.append([session.chart.id_of(e) for e in added])
            return {"new_edges": [edge_to_dict(session.chart, e) for e in added]}

    def post_strategy(self, session_id: str, body: dict) -> dict:
        session = self._session(session_id)
        name = body.get("name")
        if name not in STRATEGIES:
            raise ApiError(400, f"unknown strategy {name!r}")
        with session.lock:
            session.strategy = STRATEGIES[name]
            return {"strategy": session.strategy.name}

    def post_reset(self, session_id: str, body: dict) -> dict:
        session = self._session(session_id)
        name = body.get("preset")
        if name not in self._presets:
            raise ApiError(409, f"no preset named {name!r}")
        with session.lock:
            session.chart = restore(self._presets[name])
            session.undo_log.clear()
            return {"reset": name, "edges": len(session.chart)}

    def post_undo(self, session_id: str, body: dict) -> dict:
        session = self._session(session_id)
        with session.lock:
            if not session.undo_log:
                return {"removed": []}
            batch = session.undo_log.pop()
            session.chart.truncate(len(session.chart) - len(batch))
            return {"removed": batch}

    def get_tree(self, session_id: str, edge_id: int) -> dict:
        session = self._session(session_id)
        with session.lock:
            try:
                t = tree_for_edge(session.chart, edge_id)
            except UnknownEdgeId as err:
                raise ApiError(404, str(err))
            return {"edge": edge_id, "tree": tree_to_dict(t), "text": _tree_text(t)}

    def get_parses(self, session_id: str) -> dict:
        session = self._session(session_id)
        with session.lock:
            parses = extract_parses(session.chart)
            return {
                "parses": [
                    {"tree": tree_to_dict(t), "text": format_tree(t)} for t in parses
                ]
            }

    def get_presets(self) -> dict:
        return {"presets": sorted(self._presets)}

    def get_preset(self, name: str) -> dict:
        if name not in self._presets:
            raise ApiError(404, f"no preset named {name!r}")
        return self._presets[name]


def _tree_text(t) -> str:
    return format_tree(t) if isinstance(t, Tree) else str(t)


# ---------------------------------------------------------------------------
# WSGI wiring

_ROUTES = [
    ("POST", re.compile(r"^/api/v1/sessions$"), "create"),
    ("GET", re.compile(r"^/api/v1/sessions/([^/]+)/chart$"), "chart"),
    ("POST", re.compile(r"^/api/v1/sessions/([^/]+)/step$"), "step"),
    ("POST", re.compile(r"^/api/v1/sessions/([^/]+)/apply$"), "apply"),
    ("POST", re.compile(r"^/api/v1/sessions/([^/]+)/strategy$"), "strategy"),
    ("POST", re.compile(r"^/api/v1/sessions/([^/]+)/reset$"), "reset"),
    ("POST", re.compile(r"^/api/v1/sessions/([^/]+)/undo$"), "undo"),
    ("GET", re.compile(r"^/api/v1/sessions/([^/]+)/tree$"), "tree"),
    ("GET", re.compile(r"^/api/v1/sessions/([^/]+)/parses$"), "parses"),
    ("GET", re.compile(r"^/api/v1/presets$"), "preset_list"),
    ("GET", re.compile(r"^/api/v1/presets/([^/]+)$"), "preset"),
]

_STATUS_TEXT = {200: "OK", 400: "Bad Request", 404: "Not Found", 405: "Method Not Allowed", 409: "Conflict"}


def make_app(service: SessionService, static_dir: str | None = None):
    """A WSGI app over the service; optionally serves a static UI from
    ``static_dir`` for non-API paths."""

    def app(environ, start_response):
        method = environ["REQUEST_METHOD"]
        path = environ.get("PATH_INFO", "/")
        query = environ.get("QUERY_STRING", "")

        def respond(status: int, payload: dict, content_type="application/json"):
            body = json.dumps(payload, sort_keys=True, separators=(",", ":")).encode()
            start_response(
                f"{status} {_STATUS_TEXT.get(status, 'Error')}",
                [
                    ("Content-Type", content_type),
                    ("Content-Length", str(len(body))),
                    ("Access-Control-Allow-Origin", "*"),
                    ("Access-Control-Allow-Headers", "Content-Type"),
                    ("Access-Control-Allow-Methods", "GET, POST, OPTIONS"),
                ],
            )
            return [body]

        if method == "OPTIONS":
            return respond(200, {})

        if path.startswith("/api/"):
            try:
                return respond(200, _dispatch(service, method, path, query, environ))
            except ApiError as err:
                return respond(err.status, {"error": err.message})
            except json.JSONDecodeError:
                return respond(400, {"error": "request body is not valid JSON"})

        if static_dir is not None:
            return _serve_static(static_dir, path, start_response)
        return respond(404, {"error": f"no route for {path}"})

    return app


def _read_body(environ) -> dict:
    try:
        length = int(environ.get("CONTENT_LENGTH") or 0)
    except ValueError:
        length = 0
    raw = environ["wsgi.input"].read(length) if length else b""
    if not raw:
        return {}
    body = json.loads(raw.decode("utf-8"))
    if not isinstance(body, dict):
        raise ApiError(400, "request body must be a JSON object")
    return body


def _dispatch(service: SessionService, method: str, path: str, query: str, environ) -> dict:
    for want_method, pattern, name in _ROUTES:
        m = pattern.match(path)
        if not m:
            continue
        if method != want_method:
            raise ApiError(405, f"{method} not allowed on {path}")
        args = m.groups()
        if name == "create":
            return service.create_session(_read_body(environ))
        if name == "chart":
            return service.get_chart(args[0])
        if name == "step":
            return service.post_step(args[0], _read_body(environ))
        if name == "apply":
            return service.post_apply(args[0], _read_body(environ))
        if name == "strategy":
            return service.post_strategy(args[0], _read_body(environ))
        if name == "reset":
            return service.post_reset(args[0], _read_body(environ))
        if name == "undo":
            return service.post_undo(args[0], _read_body(environ))
        if name == "tree":
            params = dict(p.split("=", 1) for p in query.split("&") if "=" in p)
            if "edge" not in params:
                raise ApiError(400, "missing ?edge= parameter")
            try:
                edge_id = int(params["edge"])
            except ValueError:
                raise ApiError(400, "edge must be an integer id")
            return service.get_tree(args[0], edge_id)
        if name == "parses":
            return service.get_parses(args[0])
        if name == "preset_list":
            return service.get_presets()
        if name == "preset":
            return service.get_preset(args[0])
    raise ApiError(404, f"no route for {path}")


_CONTENT_TYPES = {
    ".html": "text/html",
    ".js": "application/javascript",
    ".css": "text/css",
    ".json": "application/json",
    ".svg": "image/svg+xml",
}


def _serve_static(static_dir: str, path: str, start_response):
    import os

    rel = path.lstrip("/") or "index.html"
    full = os.path.normpath(os.path.join(static_dir, rel))
    if not full.startswith(os.path.normpath(static_dir)) or not os.path.isfile(full):
        start_response("404 Not Found", [("Content-Type", "text/plain")])
        return [b"not found"]
    ext = os.path.splitext(full)[1]
    with open(full, "rb") as handle:
        data = handle.read()
    start_response(
        "200 OK",
        [
            ("Content-Type", _CONTENT_TYPES.get(ext, "application/octet-stream")),
            ("Content-Length", str(len(data))),
        ],
    )
    return [data]


class _ThreadingWSGIServer(ThreadingMixIn, WSGIServer):
    daemon_threads = True


def load_presets_file(text: str) -> dict[str, dict]:
    """Preset files are JSON arrays of {name, chart} entries."""
    data = json.loads(text)
    presets = {}
    for entry in data:
        presets[entry["name"]] = entry["chart"]
    return presets


def serve(port: int, presets: dict[str, dict] | None = None, static_dir: str | None = None):
    """Run the service until interrupted; one thread per request."""
    service = SessionService(presets)
    app = make_app(service, static_dir)
    with make_server("", port, app, server_class=_ThreadingWSGIServer) as httpd:
        print(f"chart session service listening on port {port}")
        httpd.serve_forever()
