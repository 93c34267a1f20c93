# tests/test_service.py
WORKED = {"variables": ["x", "y"], "order": "lex", "generators": ["3*x*y + x + y^2", "x^2"]}


def test_solve(client):
    r = client.post("/solve", json={**WORKED, "criteria": "none", "verify": True, "trace": True})
    assert r.status_code == 200
    body = r.json()
    assert body["problem"] == "request"
    assert body["verified"] is True
    assert body["stats"]["basis_size"] == 7
    assert body["basis"][2] == {"polynomial": "-x*y^2", "leading_term": "-x*y^2", "signature": "3*y*e2"}
    assert "DROP 1SING sig=27*y^3*e2" in body["trace"]


def test_solve_with_moeller(client):
    r = client.post("/solve", json={**WORKED, "algorithm": "moeller"})
    assert r.status_code == 200
    assert r.json()["criteria"] == []


def test_solve_rejects_bad_polynomials(client):
    r = client.post("/solve", json={**WORKED, "generators": ["2x"]})
    assert r.status_code == 422
    assert r.json()["error"] == "ParseError"


def test_solve_rejects_unknown_criteria(client):
    r = client.post("/solve", json={**WORKED, "criteria": "rewrite"})
    assert r.status_code == 422


def test_solve_validates_the_body(client):
    r = client.post("/solve", json={"variables": [], "generators": ["x"]})
    assert r.status_code == 422


def test_solve_refuses_gated_rings(client):
    r = client.post("/solve", json={"ring": "multipoly(s,t)", "variables": ["x"], "generators": ["s*x + t"]})
    assert r.status_code == 400
    assert r.json()["error"] == "UnsupportedRingError"


def test_list_and_fetch_benchmarks(client):
    assert client.get("/benchmarks").json() == ["katsura2", "katsura3"]
    r = client.get("/benchmarks/katsura2")
    assert r.status_code == 200
    assert r.json()["variables"] == ["u0", "u1", "u2"]
    assert r.json()["generators"][-1] == "u0 + 2*u1 + 2*u2 - 1"


def test_unknown_benchmark_is_404(client):
    r = client.get("/benchmarks/cyclic5")
    assert r.status_code == 404
    assert r.json()["error"] == "UnknownBenchmarkError"
    assert client.post("/benchmarks/cyclic5/run").status_code == 404


def test_run_benchmark_with_query_options(client):
    r = client.post("/benchmarks/katsura2/run", params={"criteria": "all", "verify": "true"})
    assert r.status_code == 200
    body = r.json()
    assert body["problem"] == "katsura2"
    assert body["verified"] is True
    assert body["stats"]["reductions_to_zero"] == 0


def test_failure_inside_a_run_is_500(client, mocker):
    from app.errors import SignatureOrderError
    mocker.patch("app.routers.solve.run", side_effect=SignatureOrderError("broken"))
    r = client.post("/solve", json=WORKED)
    assert r.status_code == 500
    assert r.json() == {"detail": "broken", "error": "SignatureOrderError"}
