"""Exponent-vector arithmetic for monomials.

A monomial x^v in n variables is a tuple of n non-negative integers.
Plain Python ints keep every operation exact at any magnitude.
"""
from __future__ import annotations

from operator import add as _add, le as _le

Monomial = tuple[int, ...]


def one(n: int) -> Monomial:
    """The monomial 1 in n variables."""
    return (0,) * n


def variable_power(i: int, exponent: int, n: int) -> Monomial:
    """x_i^exponent as an n-variable monomial (i is 0-based)."""
    if not 0 <= i < n:
        raise ValueError(f"variable index {i} out of range for {n} variables")
    m = [0] * n
    m[i] = exponent
    return tuple(m)


def is_one(m: Monomial) -> bool:
    return not any(m)


def _check_lengths(a: Monomial, b: Monomial) -> None:
    if len(a) != len(b):
        raise ValueError(
            f"monomials live in different rings: {len(a)} vs {len(b)} variables"
        )


def divides(a: Monomial, b: Monomial) -> bool:
    """True iff a | b, i.e. a_i <= b_i for every variable."""
    _check_lengths(a, b)
    return all(map(_le, a, b))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    """The product a*b (exponents add)."""
    _check_lengths(a, b)
    return tuple(map(_add, a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    """Least common multiple (componentwise max)."""
    _check_lengths(a, b)
    return tuple(map(max, a, b))


def mono_gcd(a: Monomial, b: Monomial) -> Monomial:
    """Greatest common divisor (componentwise min)."""
    _check_lengths(a, b)
    return tuple(map(min, a, b))


def mono_colon(a: Monomial, b: Monomial) -> Monomial:
    """The colon a:b = a/gcd(a,b), i.e. componentwise max(a_i - b_i, 0)."""
    _check_lengths(a, b)
    return tuple(x - y if x > y else 0 for x, y in zip(a, b))


def lcm_many(ms, n: int) -> Monomial:
    """lcm of an iterable of monomials; 1 for an empty iterable."""
    acc = [0] * n
    for m in ms:
        for i, e in enumerate(m):
            if e > acc[i]:
                acc[i] = e
    return tuple(acc)


def gcd_many(ms) -> Monomial:
    """gcd of a non-empty iterable of monomials."""
    it = iter(ms)
    try:
        acc = next(it)
    except StopIteration:
        raise ValueError("gcd of an empty collection is undefined") from None
    for m in it:
        acc = tuple(map(min, acc, m))
    return acc


def radical(m: Monomial) -> Monomial:
    """Square-free part: exponent min(v_i, 1)."""
    return tuple(1 if e else 0 for e in m)


def projection(m: Monomial) -> Monomial:
    """m divided by its radical: exponent v_i - min(v_i, 1)."""
    return tuple(e - 1 if e else 0 for e in m)


def support(m: Monomial) -> tuple[int, ...]:
    """Indices of the variables that divide m."""
    return tuple(i for i, e in enumerate(m) if e)


def is_square_free(m: Monomial) -> bool:
    return all(e <= 1 for e in m)


def total_degree(m: Monomial) -> int:
    return sum(m)
