# app/problems.py
"""
Problem files and bundled benchmarks.

Format (UTF-8, one item per line, '#' starts a comment):

    ring: int
    vars: u0,u1,u2
    order: grevlex
    u0^2 + 2*u1^2 + 2*u2^2 - u0
    ...
"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from .errors import InputError, ParseError, UnknownBenchmarkError
from .parser import parse_poly
from .polynomials import MonomialOrder, PolyRing, Polynomial
from .rings import IntegerRing, RingDescriptor, make_ring
from .schema import ProblemIn

FIXTURES_DIR = Path(__file__).resolve().parent / "fixtures"
BENCHMARKS = ("katsura2", "katsura3")
_HEADER_KEYS = ("ring", "vars", "order")


@dataclass(frozen=True)
class ProblemFile:
    ring: RingDescriptor
    variables: tuple[str, ...]
    order: MonomialOrder
    generators: tuple[str, ...]
    source: Optional[str] = None
    # 1-based file line of each generator, when read from a file
    lines: tuple[int, ...] = ()

    def __post_init__(self):
        if not self.variables:
            raise InputError("at least one variable is required")
        if len(set(self.variables)) != len(self.variables):
            raise InputError(f"repeated variable in {', '.join(self.variables)}")
        clash = set(self.variables) & set(self.ring.aux_vars)
        if clash:
            raise InputError(f"{', '.join(sorted(clash))} is both a variable and a coefficient variable")
        if not self.generators:
            raise InputError("at least one generator is required")

    @property
    def name(self) -> str:
        return Path(self.source).stem if self.source else "problem"

    def poly_ring(self, experimental: bool = False) -> PolyRing:
        return PolyRing(self.variables, self.order, make_ring(self.ring, experimental))

    def polynomials(self, ring: PolyRing) -> list[Polynomial]:
        out = []
        for n, text in enumerate(self.generators):
            try:
                out.append(parse_poly(text, ring))
            except ParseError as e:
                line = self.lines[n] if n < len(self.lines) else None
                raise e.located(self.source, line) from None
        return out

    def to_text(self) -> str:
        header = [f"ring: {self.ring}", f"vars: {','.join(self.variables)}", f"order: {self.order.value}"]
        return "\n".join(header + list(self.generators)) + "\n"


def parse_problem_text(text: str, source: Optional[str] = None) -> ProblemFile:
    header: dict[str, tuple[str, int]] = {}
    generators: list[str] = []
    lines: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition(":")
        if sep and key.strip().lower() in _HEADER_KEYS:
            key = key.strip().lower()
            if generators:
                raise ParseError(f"header '{key}' after the first polynomial", path=source, line=lineno)
            if key in header:
                raise ParseError(f"duplicate header '{key}'", path=source, line=lineno)
            header[key] = (value.strip(), lineno)
            continue
        generators.append(line)
        lines.append(lineno)

    if "vars" not in header:
        raise ParseError("missing 'vars:' header", path=source)
    ring_text, ring_line = header.get("ring", ("int", None))
    order_text, order_line = header.get("order", ("grevlex", None))
    try:
        ring = RingDescriptor.parse(ring_text)
    except ParseError as e:
        raise e.located(source, ring_line) from None
    try:
        order = MonomialOrder(order_text.lower())
    except ValueError:
        raise ParseError(f"unknown order {order_text!r}; expected lex or grevlex", path=source, line=order_line) from None
    variables = tuple(v.strip() for v in header["vars"][0].split(",") if v.strip())
    return ProblemFile(ring, variables, order, tuple(generators), source, tuple(lines))


def load_problem(path: str | Path) -> ProblemFile:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from e
    return parse_problem_text(text, str(path))


def katsura(m: int) -> ProblemFile:
    """
    Katsura-m over Z in u0..um, grevlex: for k = 0..m-1 the quadric
    sum_{l=-m..m} u_|l| u_|k-l| - u_k (indices above m read as 0), then the linear
    sum_{l=-m..m} u_|l| - 1.
    """
    if m < 1:
        raise InputError("katsura needs m >= 1")
    names = tuple(f"u{i}" for i in range(m + 1))
    ring = PolyRing(names, MonomialOrder.GREVLEX, IntegerRing())
    zero = ring.zero()

    def u(i: int) -> Polynomial:
        i = abs(i)
        return ring.gen(i) if i <= m else zero

    polys = []
    for k in range(m):
        p = zero
        for l in range(-m, m + 1):
            p = p + u(l) * u(k - l)
        polys.append(p - u(k))
    linear = zero
    for l in range(-m, m + 1):
        linear = linear + u(l)
    polys.append(linear - ring.one())
    return ProblemFile(RingDescriptor("int"), names, MonomialOrder.GREVLEX, tuple(ring.format(p) for p in polys))


def bundled_benchmark(name: str) -> ProblemFile:
    if name not in BENCHMARKS:
        raise UnknownBenchmarkError(f"unknown benchmark {name!r}; available: {', '.join(BENCHMARKS)}")
    path = FIXTURES_DIR / f"{name}.txt"
    return parse_problem_text(path.read_text(encoding="utf-8"), name)


def problem_from_request(body: ProblemIn) -> ProblemFile:
    return ProblemFile(
        RingDescriptor.parse(body.ring),
        tuple(body.variables),
        MonomialOrder(body.order),
        tuple(body.generators),
        "request",
    )
