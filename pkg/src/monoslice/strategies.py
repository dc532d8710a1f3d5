"""Split-selection strategies.

A selector maps a fully simplified non-base slice to a SplitDecision. All
selectors here return valid decisions on such slices: pivots are never 1,
never in I or S, and always divide the projected lcm; label variables always
have a usable set of labels.
"""
from __future__ import annotations

import random
from typing import Callable, Protocol

from .ideal import MonomialIdeal
from .monomial import Monomial, gcd_many, mono_mul, projection, variable_power
from .slices import Slice, SplitDecision, content_lower_bound

STRATEGY_IDS = (
    "mingen",
    "minimum",
    "median",
    "maximum",
    "gcd",
    "indep",
    "maxlabel",
    "minlabel",
    "varlabel",
    "frob",
)

DEFAULT_STRATEGY = "median"


class LinearValue(Protocol):
    def value(self, m: Monomial): ...


Selector = Callable[[Slice], SplitDecision]


def make_selector(
    strategy: str = DEFAULT_STRATEGY,
    *,
    rng: random.Random | None = None,
    objective: LinearValue | None = None,
) -> Selector:
    """Build a selector for the named strategy.

    ``rng`` feeds the randomized strategies (gcd, indep); a fresh seeded
    generator is used when omitted so runs are reproducible. ``objective``
    is only consulted by the frob strategy.
    """
    key = strategy.lower()
    if key not in STRATEGY_IDS:
        raise ValueError(
            f"unknown strategy {strategy!r}; expected one of {', '.join(STRATEGY_IDS)}"
        )
    r = rng if rng is not None else random.Random(0)
    return lambda s: select_split(s, key, r, objective)


def select_split(
    s: Slice,
    strategy: str,
    rng: random.Random,
    objective: LinearValue | None = None,
) -> SplitDecision:
    if strategy == "mingen":
        return SplitDecision.pivot_on(_min_generator_pivot(s))
    if strategy == "minimum":
        i = _pure_power_variable(s.ideal)
        return SplitDecision.pivot_on(_clamped_power(s, i, 1))
    if strategy == "median":
        return SplitDecision.pivot_on(_median_pivot(s))
    if strategy == "maximum":
        i = _pure_power_variable(s.ideal)
        return SplitDecision.pivot_on(_clamped_power(s, i, s.ideal.lcm[i] - 1))
    if strategy == "gcd":
        return SplitDecision.pivot_on(_gcd_pivot(s, rng))
    if strategy == "indep":
        return SplitDecision.pivot_on(_indep_pivot(s, rng))
    if strategy == "maxlabel":
        return SplitDecision.label_on(_label_variable(s, "max"))
    if strategy == "minlabel":
        return SplitDecision.label_on(_label_variable(s, "min"))
    if strategy == "varlabel":
        return SplitDecision.label_on(_label_variable(s, "var"))
    if strategy == "frob":
        return SplitDecision.pivot_on(_frob_pivot(s, objective))
    raise ValueError(f"unknown strategy {strategy!r}")


# -- pure-power pivots --------------------------------------------------------


def _pure_power_variable(I: MonomialIdeal) -> int:
    """Variable dividing the most generators, among those with lcm exponent
    at least 2. Ties go to the smallest index.
    """
    u = I.lcm
    best = -1
    besti = -1
    for i, ui in enumerate(u):
        if ui < 2:
            continue
        c = 0
        for g in I.gens:
            if g[i]:
                c += 1
        if c > best:
            best = c
            besti = i
    if besti < 0:
        raise ValueError("no variable has lcm exponent 2 or more")
    return besti


def _clamped_power(s: Slice, i: int, e: int) -> Monomial:
    """x_i^e clamped so the pivot stays valid: strictly below the lcm
    exponent and below any pure power of x_i generating I or S.
    """
    I, S = s.ideal, s.subtract
    hi = I.lcm[i] - 1
    for g in I.gens:
        if g[i] and sum(g) == g[i]:
            hi = min(hi, g[i] - 1)
    for m in S.gens:
        if m[i] and sum(m) == m[i]:
            hi = min(hi, m[i] - 1)
    if hi < 1:
        raise ValueError(f"no valid pure-power pivot in variable {i}")
    return variable_power(i, min(max(e, 1), hi), I.n)


def _median_pivot(s: Slice) -> Monomial:
    i = _pure_power_variable(s.ideal)
    exps = sorted(g[i] for g in s.ideal.gens if g[i])
    return _clamped_power(s, i, exps[(len(exps) - 1) // 2])


# -- generator-driven pivots ---------------------------------------------------


def _min_generator_pivot(s: Slice) -> Monomial:
    """Projection of the first minimal generator that is not square free."""
    for g in s.ideal.gens:
        if any(e >= 2 for e in g):
            return projection(g)
    raise ValueError("all generators are square free; no mingen pivot")


def _gcd_pivot(s: Slice, rng: random.Random) -> Monomial:
    """Projection of the gcd of up to three random generators divisible by
    the most popular variable. Falls back to the median strategy when the
    projection degenerates to 1.
    """
    I = s.ideal
    u = I.lcm
    best = -1
    besti = 0
    for i in range(I.n):
        c = 0
        for g in I.gens:
            if g[i]:
                c += 1
        if c > best and u[i] >= 1:
            best = c
            besti = i
    cands = [g for g in I.gens if g[besti]]
    pick = rng.sample(cands, min(3, len(cands)))
    p = projection(gcd_many(pick))
    if any(p):
        return p
    return _median_pivot(s)


def _indep_pivot(s: Slice, rng: random.Random) -> Monomial:
    """Projection of the gcd of the generators divisible by both of two
    random variables; falls back to the median strategy when degenerate.
    """
    I = s.ideal
    if I.n >= 2:
        i, j = rng.sample(range(I.n), 2)
        both = [g for g in I.gens if g[i] and g[j]]
        if both:
            p = projection(gcd_many(both))
            if any(p):
                return p
    return _median_pivot(s)


# -- label splits --------------------------------------------------------------


def _label_variable(s: Slice, flavor: str) -> int:
    I = s.ideal
    n = I.n
    counts = [0] * n
    label_counts = [0] * n
    for g in I.gens:
        for i, e in enumerate(g):
            if e:
                counts[i] += 1
                if e == 1:
                    label_counts[i] += 1
    valid = []
    for i in range(n):
        if counts[i] == 0:
            continue
        if counts[i] == 1 and label_counts[i] == 1:
            # the only divisible generator might be x_i itself
            g = next(g for g in I.gens if g[i])
            if sum(g) == 1:
                continue
        valid.append(i)
    if not valid:
        raise ValueError("no variable admits a label split")
    if flavor == "var":
        return valid[0]
    if flavor == "max":
        return max(valid, key=lambda i: (counts[i], -i))
    # min: fewest generators with exponent exactly 1, ties broken like max
    return min(valid, key=lambda i: (label_counts[i], -counts[i], i))


# -- objective-driven pivot ------------------------------------------------------


def _frob_pivot(s: Slice, objective: LinearValue | None) -> Monomial:
    """Median-exponent pure power in the variable whose inner slice promises
    the largest objective value, measured on pivot * lower bound of I : pivot.
    Without an objective this degrades to the median strategy.
    """
    if objective is None:
        return _median_pivot(s)
    I = s.ideal
    u = I.lcm
    best = None
    bestp = None
    for i, ui in enumerate(u):
        if ui < 2:
            continue
        exps = sorted(g[i] for g in I.gens if g[i])
        try:
            p = _clamped_power(s, i, exps[(len(exps) - 1) // 2])
        except ValueError:
            continue
        inner = I.colon(p)
        if inner.is_whole_ring:
            continue
        val = objective.value(mono_mul(p, content_lower_bound(inner)))
        if best is None or val > best:
            best = val
            bestp = p
    if bestp is None:
        return _median_pivot(s)
    return bestp
