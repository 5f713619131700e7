import io
import json

import pytest

from lingkit.chart import BOTTOM_UP, chart_init, run_to_fixpoint, snapshot
from lingkit.grammar import parse_cfg
from lingkit.service import SessionService, load_presets_file, make_app
from lingkit.tokens import whitespace_tokenize

TOY_TEXT = "S -> NP VP\nNP -> 'I'\nVP -> 'sleep'"


def call(app, method, path, body=None):
    """Drive the WSGI app directly; returns (status, parsed json)."""
    raw = json.dumps(body).encode() if body is not None else b""
    environ = {
        "REQUEST_METHOD": method,
        "PATH_INFO": path.split("?")[0],
        "QUERY_STRING": path.split("?")[1] if "?" in path else "",
        "CONTENT_LENGTH": str(len(raw)),
        "wsgi.input": io.BytesIO(raw),
    }
    captured = {}

    def start_response(status, headers):
        captured["status"] = int(status.split()[0])
        captured["headers"] = dict(headers)

    chunks = app(environ, start_response)
    payload = b"".join(chunks)
    return captured["status"], json.loads(payload) if payload else None


def fresh_app(presets=None):
    return make_app(SessionService(presets))


def create_toy_session(app, strategy="TopDown"):
    status, body = call(
        app,
        "POST",
        "/api/v1/sessions",
        {"grammar": TOY_TEXT, "sentence": "I sleep", "strategy": strategy},
    )
    assert status == 200
    return body["id"]


def preset_fixture():
    chart = chart_init(parse_cfg(TOY_TEXT), whitespace_tokenize("I sleep"))
    run_to_fixpoint(chart, BOTTOM_UP)
    return {"lecture-1": snapshot(chart)}


def test_create_then_step_grows_chart_by_one():
    app = fresh_app()
    sid = create_toy_session(app)
    _, before = call(app, "GET", f"/api/v1/sessions/{sid}/chart")
    status, stepped = call(app, "POST", f"/api/v1/sessions/{sid}/step", {})
    assert status == 200
    assert stepped["rule"] == "TopDownInit"
    _, after = call(app, "GET", f"/api/v1/sessions/{sid}/chart")
    assert len(after["edges"]) == len(before["edges"]) + 1
    assert after["edges"][-1] == stepped["new_edge"]


def test_step_to_fixpoint_reports_done():
    app = fresh_app()
    sid = create_toy_session(app)
    seen_done = False
    for _ in range(200):
        _, body = call(app, "POST", f"/api/v1/sessions/{sid}/step", {})
        if body.get("done"):
            seen_done = True
            break
    assert seen_done
    _, parses = call(app, "GET", f"/api/v1/sessions/{sid}/parses")
    assert [p["text"] for p in parses["parses"]] == ["(S (NP I) (VP sleep))"]


def test_apply_fundamental_with_selection():
    app = fresh_app()
    sid = create_toy_session(app)
    call(app, "POST", f"/api/v1/sessions/{sid}/apply", {"rule": "TopDownInit"})
    call(app, "POST", f"/api/v1/sessions/{sid}/apply", {"rule": "LexicalInsert"})
    call(app, "POST", f"/api/v1/sessions/{sid}/apply", {"rule": "TopDownPredict"})
    _, fundamental = call(
        app, "POST", f"/api/v1/sessions/{sid}/apply", {"rule": "Fundamental"}
    )
    np_complete = next(
        e for e in fundamental["new_edges"] if e["lhs"] == "NP" and e["dot"] == len(e["rhs"])
    )
    _, chart = call(app, "GET", f"/api/v1/sessions/{sid}/chart")
    s_predict = next(
        e for e in chart["edges"] if e["lhs"] == "S" and e["dot"] == 0
    )
    status, body = call(
        app,
        "POST",
        f"/api/v1/sessions/{sid}/apply",
        {"rule": "Fundamental", "edge_ids": [s_predict["id"], np_complete["id"]]},
    )
    assert status == 200
    assert len(body["new_edges"]) == 1
    edge = body["new_edges"][0]
    assert (edge["i"], edge["j"], edge["lhs"], edge["dot"]) == (0, 1, "S", 1)


def test_tree_endpoint_gives_partial_tree():
    app = fresh_app()
    sid = create_toy_session(app)
    _, stepped = call(app, "POST", f"/api/v1/sessions/{sid}/step", {})
    edge_id = stepped["new_edge"]["id"]
    status, body = call(app, "GET", f"/api/v1/sessions/{sid}/tree?edge={edge_id}")
    assert status == 200
    assert body["text"] == "(S NP? VP?)"
    assert body["tree"]["children"] == [{"placeholder": "NP"}, {"placeholder": "VP"}]


def test_undo_restores_previous_edge_set():
    app = fresh_app()
    sid = create_toy_session(app)
    call(app, "POST", f"/api/v1/sessions/{sid}/step", {})
    _, before = call(app, "GET", f"/api/v1/sessions/{sid}/chart")
    call(app, "POST", f"/api/v1/sessions/{sid}/step", {})
    _, undone = call(app, "POST", f"/api/v1/sessions/{sid}/undo", {})
    assert len(undone["removed"]) == 1
    _, after = call(app, "GET", f"/api/v1/sessions/{sid}/chart")
    assert after == before
    # undo with nothing left to pop is a no-op
    call(app, "POST", f"/api/v1/sessions/{sid}/undo", {})
    _, empty = call(app, "POST", f"/api/v1/sessions/{sid}/undo", {})
    assert empty["removed"] == []


def test_apply_batch_undoes_as_one():
    app = fresh_app()
    sid = create_toy_session(app)
    _, before = call(app, "GET", f"/api/v1/sessions/{sid}/chart")
    _, applied = call(app, "POST", f"/api/v1/sessions/{sid}/apply", {"rule": "LexicalInsert"})
    assert len(applied["new_edges"]) == 2
    call(app, "POST", f"/api/v1/sessions/{sid}/undo", {})
    _, after = call(app, "GET", f"/api/v1/sessions/{sid}/chart")
    assert after == before


def test_strategy_switch_keeps_edges():
    app = fresh_app()
    sid = create_toy_session(app, strategy="TopDown")
    call(app, "POST", f"/api/v1/sessions/{sid}/step", {})
    _, before = call(app, "GET", f"/api/v1/sessions/{sid}/chart")
    status, body = call(
        app, "POST", f"/api/v1/sessions/{sid}/strategy", {"name": "BottomUp"}
    )
    assert status == 200 and body["strategy"] == "BottomUp"
    _, after = call(app, "GET", f"/api/v1/sessions/{sid}/chart")
    assert after == before
    _, stepped = call(app, "POST", f"/api/v1/sessions/{sid}/step", {})
    assert stepped["rule"] in ("LexicalInsert", "BottomUpPredict", "Fundamental")


def test_reset_restores_preset_exactly():
    presets = preset_fixture()
    app = fresh_app(presets)
    sid = create_toy_session(app)
    call(app, "POST", f"/api/v1/sessions/{sid}/step", {})
    status, body = call(
        app, "POST", f"/api/v1/sessions/{sid}/reset", {"preset": "lecture-1"}
    )
    assert status == 200
    _, chart = call(app, "GET", f"/api/v1/sessions/{sid}/chart")
    assert chart == presets["lecture-1"]


def test_error_statuses():
    app = fresh_app(preset_fixture())
    assert call(app, "GET", "/api/v1/sessions/nope/chart")[0] == 404
    sid = create_toy_session(app)
    assert call(app, "POST", f"/api/v1/sessions/{sid}/reset", {"preset": "missing"})[0] == 409
    assert call(app, "POST", f"/api/v1/sessions/{sid}/apply", {"rule": "NotARule"})[0] == 400
    assert call(app, "POST", f"/api/v1/sessions/{sid}/apply", {})[0] == 400
    assert (
        call(app, "POST", f"/api/v1/sessions/{sid}/apply", {"rule": "Fundamental", "edge_ids": [999]})[0]
        == 404
    )
    assert call(app, "GET", f"/api/v1/sessions/{sid}/tree?edge=999")[0] == 404
    assert call(app, "GET", f"/api/v1/sessions/{sid}/tree")[0] == 400
    assert call(app, "POST", "/api/v1/sessions", {"grammar": TOY_TEXT})[0] == 400
    assert (
        call(app, "POST", "/api/v1/sessions", {"grammar": TOY_TEXT, "sentence": "I fly"})[0]
        == 400
    )
    assert call(app, "GET", "/api/v1/unknown")[0] == 404
    assert call(app, "GET", f"/api/v1/sessions/{sid}/step")[0] == 405


def test_presets_listing():
    app = fresh_app(preset_fixture())
    status, body = call(app, "GET", "/api/v1/presets")
    assert status == 200 and body == {"presets": ["lecture-1"]}
    status, body = call(app, "GET", "/api/v1/presets/lecture-1")
    assert status == 200 and body["tokens"] == ["I", "sleep"]
    assert call(app, "GET", "/api/v1/presets/none")[0] == 404


def test_load_presets_file():
    presets = preset_fixture()
    text = json.dumps([{"name": "lecture-1", "chart": presets["lecture-1"]}])
    assert load_presets_file(text) == presets


TRANSCRIPT = [
    ("POST", "/api/v1/sessions", {"grammar": TOY_TEXT, "sentence": "I sleep", "strategy": "BottomUp"}),
    ("POST", "/api/v1/sessions/s1/step", {}),
    ("POST", "/api/v1/sessions/s1/step", {}),
    ("POST", "/api/v1/sessions/s1/apply", {"rule": "BottomUpPredict"}),
    ("GET", "/api/v1/sessions/s1/chart", None),
    ("POST", "/api/v1/sessions/s1/undo", {}),
    ("GET", "/api/v1/sessions/s1/chart", None),
    ("POST", "/api/v1/sessions/s1/step", {}),
    ("GET", "/api/v1/sessions/s1/parses", None),
]


def run_transcript():
    app = fresh_app()
    return [call(app, method, path, body) for method, path, body in TRANSCRIPT]


def test_replaying_a_transcript_is_deterministic():
    assert run_transcript() == run_transcript()
