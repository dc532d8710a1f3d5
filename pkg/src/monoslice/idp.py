"""Optimization over irreducible components via bounded slice search.

A linear functional with rational weights is maximized over the maximal
standard monomials of an ideal (equivalently, over the exponent rows of the
irreducible components of an Artinian ideal). The slice engine does the
enumeration; a guard object prunes slices whose bound cannot beat the best
value seen and applies exponent eliminations that shrink slices without
losing any improving candidate.
"""
from __future__ import annotations

import random
import threading
from dataclasses import dataclass
from fractions import Fraction

from .engine import EngineStats, compute_content
from .ideal import MonomialIdeal
from .monomial import Monomial, mono_mul, one, variable_power
from .slices import Slice, initial_slice
from .strategies import DEFAULT_STRATEGY, make_selector

Weight = Fraction


@dataclass(frozen=True)
class LinearObjective:
    """Linear functional m -> sum_i weights[i] * m_i with exact arithmetic."""

    weights: tuple[Fraction, ...]

    @classmethod
    def of(cls, weights) -> "LinearObjective":
        return cls(tuple(Fraction(w) for w in weights))

    @property
    def n(self) -> int:
        return len(self.weights)

    def value(self, m: Monomial) -> Fraction:
        total = Fraction(0)
        for w, e in zip(self.weights, m):
            if e and w:
                total += w * e
        return total


def slice_bound(s: Slice, objective: LinearObjective) -> Fraction:
    """Upper bound for the objective over the content of ``s``.

    Every content element d satisfies multiplier | d and d / multiplier
    strictly below the lcm in each variable, so the positive weights act on
    multiplier * projection(lcm) and the negative ones on the multiplier.
    """
    if s.ideal.is_zero:
        raise ValueError("slice bounds need a nonzero ideal")
    u = s.ideal.lcm
    q = s.multiplier
    total = Fraction(0)
    for w, qi, ui in zip(objective.weights, q, u):
        if w > 0:
            total += w * (qi + ui - 1 if ui else qi)
        elif w < 0 and qi:
            total += w * qi
    return total


class BestRecord:
    """Thread-safe running maximum with its witness monomial."""

    __slots__ = ("value", "witness", "_lock")

    def __init__(self):
        self.value: Fraction | None = None
        self.witness: Monomial | None = None
        self._lock = threading.Lock()

    def improve(self, value: Fraction, witness: Monomial) -> bool:
        with self._lock:
            if self.value is None or value > self.value:
                self.value = value
                self.witness = witness
                return True
            return False


class BoundGuard:
    """Engine guard: prune dominated slices, tighten the rest.

    A slice dies when its bound cannot exceed the best value so far. When a
    single variable's worst case already sinks the bound below the record,
    the slice is replaced by one with that variable forced: positive-weight
    variables move into the inner slice along x_i, negative-weight ones get
    x_i^(u_i - 1) added to the subtracted set. Either replacement keeps every
    content element that could still improve the record.
    """

    __slots__ = ("objective", "record")

    def __init__(self, objective: LinearObjective, record: BestRecord):
        self.objective = objective
        self.record = record

    def __call__(self, s: Slice) -> Slice | None:
        ideal = s.ideal
        if ideal.is_zero:
            return s
        tau = self.record.value
        if tau is None:
            return s
        bound = slice_bound(s, self.objective)
        if bound <= tau:
            return None
        u = ideal.lcm
        n = ideal.n
        subtract = s.subtract
        for i, w in enumerate(self.objective.weights):
            ui = u[i]
            if w > 0:
                # content avoiding x_i scores at most bound - w*(u_i - 1)
                if ui > 1 and bound - w * (ui - 1) <= tau:
                    xi = variable_power(i, 1, n)
                    return Slice(
                        ideal.colon(xi),
                        subtract.colon(xi),
                        mono_mul(s.multiplier, xi),
                    )
            elif w < 0 and ui >= 2:
                # content divisible by x_i^(u_i - 1) scores at most
                # bound + w*(u_i - 1)
                if bound + w * (ui - 1) <= tau:
                    p = variable_power(i, ui - 1, n)
                    if not ideal.contains(p) and not subtract.contains(p):
                        return Slice(ideal, subtract.plus_one(p), s.multiplier)
        return s


@dataclass(frozen=True)
class IdpResult:
    """Outcome of an optimization run.

    ``feasible`` is False exactly when the ideal has no maximal standard
    monomial (the zero ideal and the whole ring); then value and witness are
    None.
    """

    feasible: bool
    value: Fraction | None
    witness: Monomial | None
    stats: EngineStats

    def value_as(self, cast=float):
        return None if self.value is None else cast(self.value)


def solve_linear_idp(
    ideal: MonomialIdeal,
    weights,
    *,
    strategy: str = DEFAULT_STRATEGY,
    use_bound: bool = True,
    seed: int = 0,
    rng: random.Random | None = None,
    extended_base: bool = True,
    threads: int = 1,
    stats: EngineStats | None = None,
) -> IdpResult:
    """Maximize the linear functional over the msm of ``ideal``.

    With ``use_bound`` off the search degenerates to full enumeration, which
    is useful as a correctness reference. Positive-weight pivots explore the
    inner child first so good records appear early.
    """
    objective = LinearObjective.of(weights)
    if objective.n != ideal.n:
        raise ValueError(
            f"objective has {objective.n} weights for {ideal.n} variables"
        )
    record = BestRecord()

    def took(d: Monomial) -> None:
        record.improve(objective.value(d), d)

    guard = BoundGuard(objective, record) if use_bound else None
    run_stats = compute_content(
        initial_slice(ideal),
        make_selector(
            strategy,
            rng=rng if rng is not None else random.Random(seed),
            objective=objective,
        ),
        took,
        guard=guard,
        stats=stats,
        use_independence=False,
        extended_base=extended_base,
        inner_first=lambda p: objective.value(p) > 0,
        threads=threads,
    )
    if record.value is None:
        return IdpResult(False, None, None, run_stats)
    return IdpResult(True, record.value, record.witness, run_stats)


def optimize_components(
    ideal: MonomialIdeal, weights, **kwargs
) -> IdpResult:
    """Maximize over the exponent rows of the irreducible components.

    The ideal is closed with pure powers first; exponents equal to the bound
    mark variables absent from a component, matching the msm encoding
    row_i = d_i + 1.
    """
    from .decomposition import make_artinian

    closure, _ = make_artinian(ideal)
    return solve_linear_idp(closure, weights, **kwargs)


def codimension(ideal: MonomialIdeal, **kwargs) -> int:
    """Smallest number of variables in an associated irreducible component.

    Defined through the radical: components of the squared-variable closure
    with all-ones weights have value n - (size of a minimal cover), so the
    codimension is n minus the optimum. The zero ideal has codimension 0;
    the whole ring raises, having no components at all.
    """
    if ideal.is_zero:
        return 0
    if ideal.is_whole_ring:
        raise ValueError("the whole ring has no irreducible components")
    n = ideal.n
    squared = ideal.radical_ideal().plus(
        [variable_power(i, 2, n) for i in range(n)]
    )
    result = solve_linear_idp(squared, [1] * n, **kwargs)
    assert result.feasible
    best = result.value
    assert best is not None and best.denominator == 1
    return n - int(best)
