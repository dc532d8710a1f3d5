"""Maximal standard monomials, irreducible decomposition and Alexander duality.

The decomposition of an arbitrary monomial ideal reduces to the maximal
standard monomials of an Artinian closure: each msm d of I + <x_i^t_i>
corresponds to the irreducible component with exponent d_i + 1 in exactly
the variables where d_i + 1 < t_i.
"""
from __future__ import annotations

import random
from bisect import bisect_left
from dataclasses import dataclass
from typing import Callable, Iterable

from .engine import EngineStats, compute_content
from .ideal import MonomialIdeal
from .monomial import Monomial, divides, one, variable_power
from .slices import Slice, initial_slice
from .strategies import DEFAULT_STRATEGY, make_selector

# Exponents above this threshold trigger automatic compression: past ~2**15
# the grid of exponents is far sparser than its range and the slice engine
# only ever needs the relative order of the values that occur.
COMPRESSION_THRESHOLD = 32767


class ExponentCompression:
    """Order-preserving relabeling of the exponents occurring per variable.

    Variable i's table holds 0 and every exponent some generator uses, in
    increasing order; exponent e is encoded as its table index. Divisibility,
    lcm/gcd, colonization and minimality are all preserved, so slice runs on
    the compressed ideal are isomorphic to runs on the original.
    """

    __slots__ = ("tables",)

    def __init__(self, tables: tuple[tuple[int, ...], ...]):
        self.tables = tables

    @classmethod
    def for_ideal(cls, ideal: MonomialIdeal) -> "ExponentCompression":
        tables = []
        for i in range(ideal.n):
            values = {0}
            for g in ideal.gens:
                values.add(g[i])
            tables.append(tuple(sorted(values)))
        return cls(tuple(tables))

    def compress(self, m: Monomial) -> Monomial:
        out = []
        for table, e in zip(self.tables, m):
            k = bisect_left(table, e)
            if k == len(table) or table[k] != e:
                raise ValueError(f"exponent {e} does not occur in this ring")
            out.append(k)
        return tuple(out)

    def compress_ideal(self, ideal: MonomialIdeal) -> MonomialIdeal:
        return MonomialIdeal._from_minimal(
            ideal.n, [self.compress(g) for g in ideal.gens]
        )

    def decompress_msm(self, d: Monomial) -> Monomial:
        """Map an msm of the compressed ideal back to the original ring.

        Compression sends the standard region's upper staircase through
        rank - 1 arithmetic: the preimage of rank r is table[r + 1] - 1.
        """
        return tuple(
            table[r + 1] - 1 for table, r in zip(self.tables, d)
        )


def _wants_compression(ideal: MonomialIdeal, mode) -> bool:
    if mode is True or mode is False:
        return mode
    if mode == "auto":
        return any(e > COMPRESSION_THRESHOLD for e in ideal.lcm)
    raise ValueError(f"compress must be True, False or 'auto', not {mode!r}")


def stream_msm(
    ideal: MonomialIdeal,
    consumer: Callable[[Monomial], None],
    *,
    strategy: str = DEFAULT_STRATEGY,
    seed: int = 0,
    rng: random.Random | None = None,
    compress="auto",
    use_independence: bool = True,
    extended_base: bool = True,
    threads: int = 1,
    stats: EngineStats | None = None,
) -> EngineStats:
    """Stream the maximal standard monomials of ``ideal`` to ``consumer``."""
    select = make_selector(strategy, rng=rng if rng is not None else random.Random(seed))
    if _wants_compression(ideal, compress):
        comp = ExponentCompression.for_ideal(ideal)
        root = initial_slice(comp.compress_ideal(ideal))
        sink = lambda d: consumer(comp.decompress_msm(d))
    else:
        root = initial_slice(ideal)
        sink = consumer
    return compute_content(
        root,
        select,
        sink,
        stats=stats,
        use_independence=use_independence,
        extended_base=extended_base,
        threads=threads,
    )


def maximal_standard_monomials(ideal: MonomialIdeal, **kwargs) -> frozenset[Monomial]:
    """The set of monomials outside ``ideal`` whose every variable multiple
    lies inside. Empty for the zero ideal and the whole ring.
    """
    out: set[Monomial] = set()
    stream_msm(ideal, out.add, **kwargs)
    return frozenset(out)


msm = maximal_standard_monomials


# -- irreducible components -----------------------------------------------------


@dataclass(frozen=True, slots=True)
class IrreducibleComponent:
    """An irreducible monomial ideal <x_i^e : (i, e) in exponents>.

    ``exponents`` pairs variable indices with positive exponents, sorted by
    variable. The empty tuple stands for the zero ideal, which appears only
    in the decomposition of the zero ideal itself.
    """

    exponents: tuple[tuple[int, int], ...]

    def __post_init__(self):
        last = -1
        for i, e in self.exponents:
            if i <= last:
                raise ValueError("exponent entries must be sorted by variable")
            if e < 1:
                raise ValueError("irreducible components use positive exponents")
            last = i

    @property
    def is_zero_ideal(self) -> bool:
        return not self.exponents

    def variables(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.exponents)

    def exponent_row(self, n: int) -> Monomial:
        """Exponents as a length-n tuple with 0 in the unused variables."""
        row = [0] * n
        for i, e in self.exponents:
            row[i] = e
        return tuple(row)

    def as_ideal(self, n: int) -> MonomialIdeal:
        return MonomialIdeal(
            n, [variable_power(i, e, n) for i, e in self.exponents]
        )

    def __str__(self) -> str:
        if not self.exponents:
            return "0"
        return " ".join(
            f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}" for i, e in self.exponents
        )


ZERO_COMPONENT = IrreducibleComponent(())


def make_artinian(
    ideal: MonomialIdeal, bounds: tuple[int, ...] | None = None
) -> tuple[MonomialIdeal, tuple[int, ...]]:
    """Close ``ideal`` under pure powers x_i^t_i; returns (closure, bounds).

    Each bound must exceed the lcm exponent of its variable so that the
    decomposition correspondence stays bijective; the default uses exactly
    lcm exponent + 1.
    """
    u = ideal.lcm
    n = ideal.n
    if bounds is None:
        bounds = tuple(e + 1 for e in u)
    else:
        bounds = tuple(bounds)
        if len(bounds) != n:
            raise ValueError(f"expected {n} bounds, got {len(bounds)}")
        for i, (t, e) in enumerate(zip(bounds, u)):
            if t <= e:
                raise ValueError(
                    f"bound {t} for variable {i} must exceed the lcm exponent {e}"
                )
    closure = ideal.plus([variable_power(i, bounds[i], n) for i in range(n)])
    return closure, bounds


def _component_from_sorted(
    entries: tuple[tuple[int, int], ...]
) -> IrreducibleComponent:
    """Trusted constructor: entries already sorted with positive exponents."""
    c = object.__new__(IrreducibleComponent)
    object.__setattr__(c, "exponents", entries)
    return c


def msm_to_component(d: Monomial, bounds: tuple[int, ...]) -> IrreducibleComponent:
    """Component corresponding to an msm of the Artinian closure: exponent
    d_i + 1 in the variables where that stays below the bound.
    """
    entries = []
    i = 0
    for di, t in zip(d, bounds):
        e = di + 1
        if e > t:
            raise ValueError("monomial exceeds the Artinian bounds")
        if e < t:
            entries.append((i, e))
        i += 1
    return _component_from_sorted(tuple(entries))


def stream_decomposition(
    ideal: MonomialIdeal,
    consumer: Callable[[IrreducibleComponent], None],
    **kwargs,
) -> EngineStats:
    """Stream the irredundant irreducible decomposition of ``ideal``.

    The zero ideal decomposes as itself; the whole ring is the empty
    intersection.
    """
    if ideal.is_zero:
        consumer(ZERO_COMPONENT)
        return EngineStats()
    closure, bounds = make_artinian(ideal)
    return stream_msm(
        closure, lambda d: consumer(msm_to_component(d, bounds)), **kwargs
    )


def irreducible_decomposition(
    ideal: MonomialIdeal, **kwargs
) -> frozenset[IrreducibleComponent]:
    out: set[IrreducibleComponent] = set()
    stream_decomposition(ideal, out.add, **kwargs)
    return frozenset(out)


def components_to_dual(
    n: int, components: Iterable[IrreducibleComponent], point: Monomial
) -> MonomialIdeal:
    """Generators of the Alexander dual from an irreducible decomposition:
    a component with exponent e in variable i contributes point_i + 1 - e.
    """
    gens = []
    for comp in components:
        if comp.is_zero_ideal:
            gens.append(one(n))
        else:
            g = [0] * n
            for i, e in comp.exponents:
                if e > point[i]:
                    raise ValueError(
                        "duality point must dominate every component exponent"
                    )
                g[i] = point[i] + 1 - e
            gens.append(tuple(g))
    return MonomialIdeal(n, gens)


def alexander_dual(
    ideal: MonomialIdeal, point: Monomial | None = None, **kwargs
) -> MonomialIdeal:
    """Alexander dual of ``ideal`` with respect to ``point`` (default lcm).

    Every irreducible component <x_i^e_i : i in A> contributes the generator
    prod x_i^(point_i + 1 - e_i); the dual is generated by all of them.
    ``point`` must be divisible by the lcm of the minimal generators.
    """
    n = ideal.n
    u = ideal.lcm
    if point is None:
        point = u
    else:
        point = tuple(point)
        if len(point) != n:
            raise ValueError(f"expected {n} exponents in the duality point")
        if not divides(u, point):
            raise ValueError("duality point must be divisible by the generator lcm")
    return components_to_dual(
        n, irreducible_decomposition(ideal, **kwargs), point
    )
