"""Problem and solution files, and the deterministic line-oriented report.

Problems travel as a small JSON document with explicit dimensions and a
row-major coefficient array; a whitespace-delimited keyword variant of the
same fields is also accepted so files stay hand-writable.  Serialization is
canonical: fixed key order, floats via repr, trailing newline, so parsing and
re-serializing a canonical file reproduces it byte for byte.

Reports are `key: value` lines with 9-significant-digit numbers plus a
3-decimal display row, 1-based ascending index lists, and no timestamps, so
identical inputs produce identical bytes.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ParseError, ValidationError
from .model import CanonicalLp, OptimalPartition


@dataclass(frozen=True)
class ProblemFile:
    """Parsed canonical-pair data: maximize c'x s.t. Ax <= b, x >= 0."""

    name: str
    m: int
    n: int
    a: tuple[float, ...]  # row-major, length m*n
    b: tuple[float, ...]
    c: tuple[float, ...]
    z_star: float | None = None

    def to_canonical(self) -> CanonicalLp:
        a = np.array(self.a, dtype=float).reshape(self.m, self.n)
        return CanonicalLp(a, np.array(self.b), np.array(self.c))


@dataclass(frozen=True)
class SolutionFile:
    """A claimed strictly complementary pair: primal (x, u), dual (y, v)."""

    x: tuple[float, ...]
    u: tuple[float, ...]
    y: tuple[float, ...]
    v: tuple[float, ...]


@dataclass
class Report:
    """Ordered key/value report; values are rendered exactly once, in order."""

    lines: list[tuple[str, str]] = field(default_factory=list)

    def add(self, key: str, value: str = "") -> None:
        self.lines.append((key, value))

    def add_real(self, key: str, value: float) -> None:
        self.add(key, format_real(value))

    def add_vector(self, key: str, values, display: bool = False) -> None:
        arr = np.asarray(values, dtype=float).reshape(-1)
        self.add(key, " ".join(format_real(v) for v in arr))
        if display:
            self.add(key + "_display", " ".join(f"{v:.3f}" for v in arr))

    def add_indices(self, key: str, indices) -> None:
        self.add(key, " ".join(str(i) for i in sorted(indices)))

    def render(self) -> str:
        return "".join(f"{k}: {v}\n" if v else f"{k}:\n" for k, v in self.lines)


def format_real(v: float) -> str:
    """9 significant digits, no negative zero, inf spelled out."""
    if v == 0:
        return "0"
    if math.isinf(v):
        return "inf" if v > 0 else "-inf"
    return f"{v:.9g}"


def _reject_constant(token: str):
    raise ParseError(f"non-finite number {token!r} is not allowed")


def _require_number(value, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ValidationError(f"{where} must be a number, got {type(value).__name__}")
    if not math.isfinite(value):
        raise ValidationError(f"{where} must be finite")
    return float(value)


def _require_count(value, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise ValidationError(f"{where} must be a positive integer")
    return value


def _require_array(value, length: int, where: str) -> tuple[float, ...]:
    if not isinstance(value, list):
        raise ValidationError(f"{where} must be an array")
    if len(value) != length:
        raise ValidationError(f"{where} length {len(value)} does not match expected {length}")
    return tuple(_require_number(v, f"{where}[{k}]") for k, v in enumerate(value))


def parse_problem(data: bytes | str) -> ProblemFile:
    """Parse a problem document, JSON or the plain keyword variant."""
    text = data.decode("utf-8") if isinstance(data, bytes) else data
    stripped = text.lstrip()
    if not stripped:
        raise ParseError("empty input")
    if stripped.startswith("{"):
        return _problem_from_obj(_load_json(text))
    return _parse_plain_problem(text)


def _load_json(text: str) -> dict:
    try:
        obj = json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    if not isinstance(obj, dict):
        raise ValidationError("top-level JSON value must be an object")
    return obj


def _problem_from_obj(obj: dict) -> ProblemFile:
    known = {"name", "m", "n", "a", "b", "c", "z_star"}
    unknown = set(obj) - known
    if unknown:
        raise ValidationError(f"unknown fields: {sorted(unknown)}")
    for key in ("m", "n", "a", "b", "c"):
        if key not in obj:
            raise ValidationError(f"missing required field {key!r}")
    m = _require_count(obj["m"], "m")
    n = _require_count(obj["n"], "n")
    name = obj.get("name", "problem")
    if not isinstance(name, str):
        raise ValidationError("name must be a string")
    a = _require_array(obj["a"], m * n, "a")
    b = _require_array(obj["b"], m, "b")
    c = _require_array(obj["c"], n, "c")
    z = None if "z_star" not in obj else _require_number(obj["z_star"], "z_star")
    return ProblemFile(name, m, n, a, b, c, z)


def _parse_plain_problem(text: str) -> ProblemFile:
    tokens: list[tuple[str, int]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0]
        tokens.extend((tok, lineno) for tok in body.split())
    pos = 0

    def take(what: str) -> tuple[str, int]:
        nonlocal pos
        if pos >= len(tokens):
            raise ParseError(f"unexpected end of input while reading {what}")
        tok = tokens[pos]
        pos += 1
        return tok

    def take_number(what: str) -> float:
        tok, lineno = take(what)
        try:
            value = float(tok)
        except ValueError:
            raise ParseError(f"line {lineno}: expected a number for {what}, got {tok!r}") from None
        if not math.isfinite(value):
            raise ValidationError(f"line {lineno}: {what} must be finite")
        return value

    fields: dict[str, object] = {}
    while pos < len(tokens):
        key, lineno = take("field name")
        if key in fields:
            raise ParseError(f"line {lineno}: duplicate field {key!r}")
        if key == "name":
            fields[key] = take("name")[0]
        elif key in ("m", "n"):
            value = take_number(key)
            if value != int(value):
                raise ValidationError(f"line {lineno}: {key} must be an integer")
            fields[key] = int(value)
        elif key == "z_star":
            fields[key] = take_number(key)
        elif key in ("a", "b", "c"):
            if "m" not in fields or "n" not in fields:
                raise ParseError(f"line {lineno}: m and n must come before {key!r}")
            counts = {"a": fields["m"] * fields["n"], "b": fields["m"], "c": fields["n"]}
            fields[key] = [take_number(f"{key}[{i}]") for i in range(counts[key])]
        else:
            raise ParseError(f"line {lineno}: unknown field {key!r}")
    fields.setdefault("name", "problem")
    return _problem_from_obj(fields)


def serialize_problem(pf: ProblemFile) -> bytes:
    """Canonical JSON form: fixed key order, floats via repr, trailing newline."""
    obj: dict[str, object] = {
        "name": pf.name,
        "m": pf.m,
        "n": pf.n,
        "a": [float(v) for v in pf.a],
        "b": [float(v) for v in pf.b],
        "c": [float(v) for v in pf.c],
    }
    if pf.z_star is not None:
        obj["z_star"] = float(pf.z_star)
    return (json.dumps(obj, indent=2) + "\n").encode("utf-8")


def parse_solution(data: bytes | str, m: int, n: int) -> SolutionFile:
    """Parse a solution document against the problem's dimensions."""
    text = data.decode("utf-8") if isinstance(data, bytes) else data
    if not text.strip():
        raise ParseError("empty input")
    obj = _load_json(text)
    unknown = set(obj) - {"x", "u", "y", "v"}
    if unknown:
        raise ValidationError(f"unknown fields: {sorted(unknown)}")
    for key in ("x", "u", "y", "v"):
        if key not in obj:
            raise ValidationError(f"missing required field {key!r}")
    return SolutionFile(
        x=_require_array(obj["x"], n, "x"),
        u=_require_array(obj["u"], m, "u"),
        y=_require_array(obj["y"], m, "y"),
        v=_require_array(obj["v"], n, "v"),
    )


def partition_report(report: Report, partition: OptimalPartition) -> None:
    report.add_indices("sigma_x", partition.sigma_x)
    report.add_indices("sigma_v", partition.sigma_v)
    report.add_indices("sigma_u", partition.sigma_u)
    report.add_indices("sigma_y", partition.sigma_y)
