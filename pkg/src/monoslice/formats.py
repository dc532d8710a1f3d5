"""Text format for ideals and exponent rows.

An ideal file starts with a line ``n k`` (variables, generators) followed by
k lines of n space-separated non-negative integers, one generator per line.
Lines whose first non-blank character is ``#`` and blank lines are skipped.
Integers may be arbitrarily large.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .ideal import MonomialIdeal
from .monomial import Monomial


class ParseError(ValueError):
    """Malformed ideal file; remembers the offending line."""

    def __init__(self, message: str, line: int | None = None, source: str = ""):
        self.line = line
        self.source = source
        where = source or "input"
        if line is not None:
            where = f"{where}:{line}"
        super().__init__(f"{where}: {message}")


def _data_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield lineno, stripped


def _parse_ints(fields: list[str], lineno: int, source: str) -> list[int]:
    out = []
    for f in fields:
        try:
            out.append(int(f))
        except ValueError:
            raise ParseError(f"expected an integer, got {f!r}", lineno, source)
    return out


def parse_ideal(text: str, *, source: str = "<input>") -> tuple[MonomialIdeal, bool]:
    """Parse an ideal file; returns (ideal, input_was_minimal).

    The ideal's generators are minimized on load; the flag reports whether
    the file's rows already formed the minimal generating set.
    """
    lines = _data_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise ParseError("missing header line 'n k'", None, source)
    fields = header.split()
    if len(fields) != 2:
        raise ParseError(
            f"header must be 'n k' (two integers), got {len(fields)} fields",
            lineno,
            source,
        )
    n, k = _parse_ints(fields, lineno, source)
    if n < 1:
        raise ParseError(f"need at least one variable, got n={n}", lineno, source)
    if k < 0:
        raise ParseError(f"generator count must not be negative, got {k}", lineno, source)
    rows: list[Monomial] = []
    for lineno, line in lines:
        if len(rows) == k:
            raise ParseError(
                f"expected {k} generator rows but found more data", lineno, source
            )
        fields = line.split()
        if len(fields) != n:
            raise ParseError(
                f"expected {n} exponents, got {len(fields)}", lineno, source
            )
        exps = _parse_ints(fields, lineno, source)
        for e in exps:
            if e < 0:
                raise ParseError(f"negative exponent {e}", lineno, source)
        rows.append(tuple(exps))
    if len(rows) != k:
        raise ParseError(
            f"expected {k} generator rows, found {len(rows)}", None, source
        )
    ideal = MonomialIdeal(n, rows)
    was_minimal = len(rows) == len(ideal.gens) and set(rows) == set(ideal.gens)
    return ideal, was_minimal


def format_ideal(ideal: MonomialIdeal) -> str:
    """Canonical file form: header plus sorted generator rows."""
    lines = [f"{ideal.n} {len(ideal.gens)}"]
    lines.extend(format_row(g) for g in ideal.gens)
    return "\n".join(lines) + "\n"


def format_row(exponents: Iterable[int]) -> str:
    return " ".join(str(e) for e in exponents)


def parse_exponent_vector(fields: list[str], n: int) -> Monomial:
    """Parse n non-negative integers given as separate tokens or one
    comma/space separated string."""
    flat: list[str] = []
    for f in fields:
        flat.extend(f.replace(",", " ").split())
    if len(flat) != n:
        raise ValueError(f"expected {n} exponents, got {len(flat)}")
    out = []
    for f in flat:
        try:
            v = int(f)
        except ValueError:
            raise ValueError(f"expected an integer exponent, got {f!r}")
        if v < 0:
            raise ValueError(f"negative exponent {v}")
        out.append(v)
    return tuple(out)


def parse_weight_vector(text: str, n: int) -> tuple[Fraction, ...]:
    """Parse n rational weights (integers or fractions like 3/2)."""
    fields = text.replace(",", " ").split()
    if len(fields) != n:
        raise ValueError(f"expected {n} weights, got {len(fields)}")
    out = []
    for f in fields:
        try:
            out.append(Fraction(f))
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"expected a rational weight, got {f!r}")
    return tuple(out)
