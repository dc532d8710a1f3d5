"""Exhaustive reference computations on explicit exponent grids.

Everything here scans the full candidate box with numpy instead of slicing,
so it shares no code path with the engine. Intended for tests and sanity
checks on small inputs; refuses grids past ``max_points``.
"""
from __future__ import annotations

from math import prod

import numpy as np

from .decomposition import ZERO_COMPONENT, IrreducibleComponent
from .ideal import MonomialIdeal
from .monomial import Monomial, divides, mono_mul, variable_power
from .slices import Slice

DEFAULT_MAX_POINTS = 10_000_000


def _membership_grid(ideal: MonomialIdeal, box: Monomial) -> np.ndarray:
    shape = tuple(e + 1 for e in box)
    grid = np.zeros(shape, dtype=bool)
    for g in ideal.gens:
        grid[tuple(slice(e, None) for e in g)] = True
    return grid


def brute_force_msm(
    ideal: MonomialIdeal,
    box: Monomial | None = None,
    *,
    max_points: int = DEFAULT_MAX_POINTS,
) -> frozenset[Monomial]:
    """Maximal standard monomials by scanning every candidate in the box.

    The default box is the lcm of the minimal generators, which contains all
    maximal standard monomials; a custom box must dominate it componentwise
    so that saturating shifts at the boundary stay faithful.
    """
    u = ideal.lcm
    if box is None:
        box = u
    else:
        box = tuple(box)
        if len(box) != ideal.n:
            raise ValueError(f"expected {ideal.n} box exponents")
        if not divides(u, box):
            raise ValueError("box must dominate the generator lcm")
    points = prod(e + 1 for e in box)
    if points > max_points:
        raise ValueError(
            f"refusing to scan {points} grid points (limit {max_points})"
        )
    inside = _membership_grid(ideal, box)
    maximal = ~inside
    for axis, size in enumerate(inside.shape):
        # multiplying by x_i shifts the grid; membership at the boundary is
        # unchanged because exponents past the lcm behave identically
        shifted_index = list(range(1, size)) + [size - 1]
        maximal &= inside.take(shifted_index, axis=axis)
    return frozenset(
        tuple(int(e) for e in row) for row in np.argwhere(maximal)
    )


def brute_force_decomposition(
    ideal: MonomialIdeal, *, max_points: int = DEFAULT_MAX_POINTS
) -> frozenset[IrreducibleComponent]:
    """Irredundant irreducible decomposition via the closed-box msm scan."""
    if ideal.is_zero:
        return frozenset({ZERO_COMPONENT})
    n = ideal.n
    bounds = tuple(e + 1 for e in ideal.lcm)
    closure = MonomialIdeal(
        n,
        list(ideal.gens) + [variable_power(i, bounds[i], n) for i in range(n)],
    )
    components = set()
    for d in brute_force_msm(closure, max_points=max_points):
        entries = tuple(
            (i, d[i] + 1) for i in range(n) if d[i] + 1 < bounds[i]
        )
        components.add(IrreducibleComponent(entries))
    return frozenset(components)


def brute_force_slice_content(
    s: Slice, *, max_points: int = DEFAULT_MAX_POINTS
) -> frozenset[Monomial]:
    """content(I, S, q) straight from the definition: (msm(I) minus S) * q."""
    subtract = s.subtract
    return frozenset(
        mono_mul(s.multiplier, w)
        for w in brute_force_msm(s.ideal, max_points=max_points)
        if not subtract.contains(w)
    )
