"""Exact solution-space dimensions of linear difference equations.

Equations are plain dicts in the JSON file format used by the ``seqdim``
command-line tool::

    {"order": 2, "coefficients": [{"type": "periodic", "period": ["-1"]}, ...]}

Coefficients are listed a_0 .. a_r. ``dimension`` returns an ``int``, or
``None`` for an infinite-dimensional solution space.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Callable, Iterable, Optional, Sequence, Union

from . import _core
from ._core import (
    DomainError,
    NonPeriodicCoefficients,
    OracleError,
    ParseError,
    RouteMismatch,
    SeqdimError,
)

Number = Union[int, Fraction, str]
Equation = dict

__all__ = [
    "DomainError",
    "NonPeriodicCoefficients",
    "OracleError",
    "ParseError",
    "RouteMismatch",
    "SeqdimError",
    "binomial_equation",
    "constant_equation",
    "determinant",
    "dimension",
    "estimate_dimension",
    "finite_dichotomy_equation",
    "free_half_line_equation",
    "free_window_equation",
    "infinite_dichotomy_equation",
    "interlace",
    "load",
    "periodic",
    "periodic_equation",
    "prescribed_dimension_equation",
    "projected_dim",
    "read_equation",
    "rotate",
    "save",
    "signal_equation",
    "unfold",
    "window_solution_dim",
    "write_equation",
    "zero_solution_equation",
]


def _text(x: Number) -> str:
    if isinstance(x, str):
        return x
    f = Fraction(x)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _dump(eq: Equation) -> str:
    return json.dumps(eq)


def _load(text: str) -> Equation:
    return json.loads(text)


def periodic(values: Iterable[Number]) -> dict:
    """Periodic coefficient with the given period."""
    return {"type": "periodic", "period": [_text(v) for v in values]}


def periodic_equation(coefficients: Sequence[Iterable[Number]]) -> Equation:
    """Equation whose k-th coefficient has period ``coefficients[k]``."""
    return {"order": len(coefficients) - 1, "coefficients": [periodic(c) for c in coefficients]}


def constant_equation(coefficients: Sequence[Number]) -> Equation:
    """a_r y(n+r) + ... + a_0 y(n) = 0 with constant a_0 .. a_r."""
    return periodic_equation([[c] for c in coefficients])


def load(text: str) -> Equation:
    """Parses and validates an equation given as JSON text."""
    return _load(_core.normalize(text))


def read_equation(path: Union[str, Path]) -> Equation:
    return load(Path(path).read_text(encoding="utf-8"))


def save(eq: Equation) -> str:
    return json.dumps(_load(_core.normalize(_dump(eq))), indent=2)


def write_equation(eq: Equation, path: Union[str, Path]) -> None:
    Path(path).write_text(save(eq) + "\n", encoding="utf-8")


def dimension(eq: Equation, method: str = "pencil", H: Optional[int] = None) -> Optional[int]:
    """Exact dimension (None when infinite); coefficients must be periodic."""
    return _core.dimension(_dump(eq), method, H)[0]


def unfold(eq: Equation, H: Optional[int] = None) -> dict:
    """Block size H, matrices A0 and A1 as Fractions, and det(A0 + t A1)."""
    raw = _core.unfold(_dump(eq), H)
    as_frac = lambda rows: [[Fraction(x) for x in row] for row in rows]  # noqa: E731
    return {
        "H": raw["H"],
        "A0": as_frac(raw["A0"]),
        "A1": as_frac(raw["A1"]),
        "det": [Fraction(c) for c in raw["det"]],
        "det_text": raw["det_text"],
    }


def determinant(eq: Equation, H: Optional[int] = None) -> list:
    """Coefficients of det(A0 + t A1), ascending in t."""
    return unfold(eq, H)["det"]


def interlace(*equations: Equation) -> Equation:
    return _load(_core.interlace([_dump(e) for e in equations]))


def rotate(eq: Equation, shift: int) -> Equation:
    return _load(_core.rotate(_dump(eq), shift))


def free_window_equation(d: int) -> Equation:
    return _load(_core.free_window_equation(d))


def free_half_line_equation() -> Equation:
    return _load(_core.free_half_line_equation())


def zero_solution_equation(r: int) -> Equation:
    return _load(_core.zero_solution_equation(r))


def prescribed_dimension_equation(r: int, d: Optional[int]) -> Equation:
    """Order-r equation of dimension d (None for infinite)."""
    return _load(_core.prescribed_dimension_equation(r, d))


def binomial_equation(a: int) -> Equation:
    return _load(_core.binomial_equation(a))


def signal_equation(command: str = "") -> Equation:
    return _load(_core.signal_equation(command))


def finite_dichotomy_equation(a: int, b: int, command: str = "") -> Equation:
    return _load(_core.finite_dichotomy_equation(a, b, command))


def infinite_dichotomy_equation(b: int, command: str = "") -> Equation:
    return _load(_core.infinite_dichotomy_equation(b, command))


def window_solution_dim(eq: Equation, radius: int) -> int:
    return _core.window_solution_dim(_dump(eq), radius)


def projected_dim(eq: Equation, inner: int, outer: int) -> int:
    return _core.projected_dim(_dump(eq), inner, outer)


def estimate_dimension(
    eq: Equation,
    inner: int = 4,
    step: Optional[int] = None,
    stall: int = 3,
    cap: int = 64,
    command: Optional[str] = None,
    sequence: Optional[Callable[[int], Number]] = None,
) -> dict:
    """Finite-window estimate. Oracle coefficients are driven by ``sequence``
    (a Python callable n -> value) if given, else by ``command``."""
    callback = None if sequence is None else (lambda n: _text(sequence(n)))
    return _core.estimate_dimension(_dump(eq), inner, step, stall, cap, command, callback)
