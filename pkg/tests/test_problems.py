# tests/test_problems.py
import pytest

from app.errors import InputError, ParseError, UnknownBenchmarkError
from app.polynomials import MonomialOrder
from app.problems import BENCHMARKS, ProblemFile, bundled_benchmark, katsura, load_problem, parse_problem_text, problem_from_request
from app.rings import RingDescriptor
from app.schema import ProblemIn

WORKED = """\
# worked example
ring: int
vars: x, y
order: lex

3*x*y + x + y^2   # f1
x^2
"""


def test_parse_problem_text():
    problem = parse_problem_text(WORKED, "worked.txt")
    assert problem.ring == RingDescriptor("int")
    assert problem.variables == ("x", "y")
    assert problem.order is MonomialOrder.LEX
    assert problem.generators == ("3*x*y + x + y^2", "x^2")
    assert problem.lines == (6, 7)
    assert problem.name == "worked"


def test_defaults_for_ring_and_order():
    problem = parse_problem_text("vars: a\na^2 - 1\n")
    assert problem.ring == RingDescriptor("int")
    assert problem.order is MonomialOrder.GREVLEX
    assert problem.name == "problem"


@pytest.mark.parametrize(
    "text, line",
    [
        ("vars: x\nx\norder: lex\n", 3),
        ("vars: x\nvars: y\nx\n", 2),
        ("vars: x\norder: deglex\nx\n", 2),
        ("ring: gaussian\nvars: x\nx\n", 1),
    ],
)
def test_header_errors_carry_line_numbers(text, line):
    with pytest.raises(ParseError) as info:
        parse_problem_text(text, "bad.txt")
    assert info.value.line == line
    assert info.value.path == "bad.txt"


def test_missing_vars_header():
    with pytest.raises(ParseError):
        parse_problem_text("x + 1\n")


def test_polynomial_errors_are_located():
    problem = parse_problem_text("ring: int\nvars: x,y\n\nx + y\n2x\n", "sys.txt")
    with pytest.raises(ParseError) as info:
        problem.polynomials(problem.poly_ring())
    assert info.value.line == 5
    assert info.value.position == 1
    assert info.value.path == "sys.txt"


@pytest.mark.parametrize(
    "ring, variables, generators",
    [
        ("int", ("x", "x"), ("x",)),
        ("unipoly(t)", ("t", "x"), ("x",)),
        ("int", (), ("x",)),
        ("int", ("x",), ()),
    ],
)
def test_problem_validation(ring, variables, generators):
    with pytest.raises(InputError):
        ProblemFile(RingDescriptor.parse(ring), variables, MonomialOrder.LEX, generators)


def test_to_text_reads_back():
    problem = parse_problem_text(WORKED)
    again = parse_problem_text(problem.to_text())
    assert (again.ring, again.variables, again.order, again.generators) == (
        problem.ring,
        problem.variables,
        problem.order,
        problem.generators,
    )


def test_load_problem(tmp_path):
    path = tmp_path / "worked.txt"
    path.write_text(WORKED, encoding="utf-8")
    problem = load_problem(path)
    assert problem.source == str(path)
    assert len(problem.polynomials(problem.poly_ring())) == 2
    with pytest.raises(InputError):
        load_problem(tmp_path / "missing.txt")


def test_katsura_generators():
    problem = katsura(2)
    assert problem.variables == ("u0", "u1", "u2")
    assert problem.generators == (
        "u0^2 + 2*u1^2 + 2*u2^2 - u0",
        "2*u0*u1 + 2*u1*u2 - u1",
        "u0 + 2*u1 + 2*u2 - 1",
    )
    assert len(katsura(3).generators) == 4
    with pytest.raises(InputError):
        katsura(0)


@pytest.mark.parametrize("m", [2, 3])
def test_bundled_benchmarks_match_the_generator(m):
    bundled = bundled_benchmark(f"katsura{m}")
    built = katsura(m)
    ring = built.poly_ring()
    assert bundled.variables == built.variables and bundled.order is built.order
    assert bundled.polynomials(ring) == built.polynomials(ring)


def test_unknown_benchmark():
    assert "katsura2" in BENCHMARKS
    with pytest.raises(UnknownBenchmarkError):
        bundled_benchmark("cyclic5")


def test_problem_from_request():
    body = ProblemIn(variables=["x", "y"], order="lex", generators=["x*y - 1"])
    problem = problem_from_request(body)
    assert problem.ring == RingDescriptor("int")
    assert problem.name == "request"
    assert str(problem.polynomials(problem.poly_ring())[0]) == "x*y - 1"
