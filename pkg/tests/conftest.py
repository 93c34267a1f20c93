# tests/conftest.py
import pathlib, pytest
from dotenv import load_dotenv

# before any app module reads its settings
load_dotenv(pathlib.Path(__file__).parent / ".env.test", override=True)


@pytest.fixture(autouse=True)
def _log_dir(tmp_path, monkeypatch):
    monkeypatch.setenv("LOG_DIR", str(tmp_path / "logs"))


@pytest.fixture()
def client():
    from fastapi.testclient import TestClient
    from app.main import app
    return TestClient(app)


@pytest.fixture()
def zz_lex():
    """Z[x, y], lex with x > y."""
    from app.polynomials import MonomialOrder, PolyRing
    from app.rings import IntegerRing
    return PolyRing(("x", "y"), MonomialOrder.LEX, IntegerRing())


@pytest.fixture()
def qq_grevlex():
    from app.polynomials import MonomialOrder, PolyRing
    from app.rings import RationalField
    return PolyRing(("x", "y", "z"), MonomialOrder.GREVLEX, RationalField())


@pytest.fixture()
def worked_example(zz_lex):
    """f1 = 3xy + x + y^2, f2 = x^2 over Z, lex x > y."""
    from app.parser import parse_poly
    return [parse_poly("3*x*y + x + y^2", zz_lex), parse_poly("x^2", zz_lex)]


@pytest.fixture()
def worked_basis(zz_lex):
    """The seven-element signature basis computed from worked_example."""
    from app.parser import parse_poly
    from app.signatures import LabeledPoly, Signature
    rows = [
        ("3*x*y + x + y^2", Signature(1, (0, 0), 1)),
        ("x^2", Signature(1, (0, 0), 2)),
        ("-x*y^2", Signature(3, (0, 1), 2)),
        ("x*y + y^3", Signature(9, (0, 1), 2)),
        ("-x + 3*y^3 - y^2", Signature(27, (0, 1), 2)),
        ("3*y^4", Signature(27, (0, 2), 2)),
        ("y^4", Signature(9, (0, 2), 2)),
    ]
    return [LabeledPoly(parse_poly(text, zz_lex), s) for text, s in rows]
