"""Seeded random monomial ideals with minimal generating sets.

Candidates draw every exponent uniformly from 0..max_exp; a candidate is
rejected when it divides or is divisible by a generator already chosen, so
the result is minimal by construction.
"""
from __future__ import annotations

import random

from .ideal import MonomialIdeal
from .monomial import Monomial, divides


def random_ideal(
    n: int,
    k: int,
    max_exp: int,
    *,
    seed: int = 0,
    rng: random.Random | None = None,
    max_attempts: int | None = None,
) -> MonomialIdeal:
    """A random ideal in n variables with exactly k minimal generators.

    Deterministic for a fixed seed. Raises when k generators cannot be
    found within ``max_attempts`` candidates (default 1000 per generator),
    which happens when k exceeds what the exponent cap can accommodate.
    """
    if n < 1:
        raise ValueError(f"need at least one variable, got {n}")
    if k < 0:
        raise ValueError(f"generator count must not be negative, got {k}")
    if max_exp < 0:
        raise ValueError(f"exponent cap must not be negative, got {max_exp}")
    if max_attempts is None:
        max_attempts = max(1000, 1000 * k)
    r = rng if rng is not None else random.Random(seed)
    gens: list[Monomial] = []
    attempts = 0
    while len(gens) < k:
        if attempts >= max_attempts:
            raise ValueError(
                f"could not find {k} incomparable generators within "
                f"{max_attempts} attempts (n={n}, max_exp={max_exp}); "
                f"got {len(gens)}"
            )
        attempts += 1
        cand = tuple(r.randrange(max_exp + 1) for _ in range(n))
        if any(divides(cand, g) or divides(g, cand) for g in gens):
            continue
        gens.append(cand)
    return MonomialIdeal._from_minimal(n, sorted(gens))
