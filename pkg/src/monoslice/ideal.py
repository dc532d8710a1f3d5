"""Monomial ideals represented by their unique minimal generating set.

Generators are kept sorted in ascending lexicographic order (exponent of
x_1 compared first), which is the plain tuple order on exponent vectors.
The zero ideal has no generators; the whole ring is generated by 1.
"""
from __future__ import annotations

from typing import Iterable, Sequence

from .monomial import (
    Monomial,
    divides,
    gcd_many,
    mono_lcm,
    one,
    radical,
)


def minimize_gens(gens: Iterable[Monomial]) -> list[Monomial]:
    """Minimal generating set of the ideal generated by ``gens``.

    Result is sorted ascending-lex. Idempotent and independent of input order.
    """
    uniq = sorted(set(gens), key=lambda g: (sum(g), g))
    kept: list[Monomial] = []
    for g in uniq:
        # any divisor of g has strictly smaller total degree, so it was kept already
        for h in kept:
            for a, b in zip(h, g):
                if a > b:
                    break
            else:
                break
        else:
            kept.append(g)
    kept.sort()
    return kept


def _colon_power_gens(
    gens: Sequence[Monomial], i: int, e: int
) -> tuple[Sequence[Monomial], bool]:
    """Quotient a minimal generator set by x_i^e, keeping it minimal.

    Generators above e in x_i keep a positive exponent there while the rest
    land on exponent 0, and no divisibility can hold across the two groups.
    Inside the zero group the generators that had exponent 0 already stay
    pairwise incomparable, so only the freshly zeroed ones need testing.
    Returns the (unsorted) generators and whether anything moved.
    """
    shifted: list[Monomial] = []
    stable: list[Monomial] = []
    fresh: list[Monomial] = []
    for g in gens:
        gi = g[i]
        if gi == 0:
            stable.append(g)
        elif gi > e:
            shifted.append(g[:i] + (gi - e,) + g[i + 1 :])
        else:
            fresh.append(g[:i] + (0,) + g[i + 1 :])
    if not fresh:
        if not shifted:
            return gens, False
        shifted.extend(stable)
        return shifted, True
    if len(fresh) > 1:
        fresh = minimize_gens(fresh)
    for u in stable:
        for z in fresh:
            for a, b in zip(z, u):
                if a > b:
                    break
            else:
                break
        else:
            shifted.append(u)
    for z in fresh:
        for u in stable:
            for a, b in zip(u, z):
                if a > b:
                    break
            else:
                break
        else:
            shifted.append(z)
    return shifted, True


class MonomialIdeal:
    """A monomial ideal in n variables, stored minimally and canonically."""

    __slots__ = ("n", "gens", "_lcm", "_maxprof")

    def __init__(self, n: int, gens: Iterable[Monomial] = ()):
        if n < 1:
            raise ValueError("need at least one variable")
        checked = []
        for g in gens:
            g = tuple(g)
            if len(g) != n:
                raise ValueError(f"generator {g} does not have {n} exponents")
            if any(e < 0 or not isinstance(e, int) for e in g):
                raise ValueError(f"generator {g} has a negative or non-integer exponent")
            checked.append(g)
        self.n = n
        self.gens: tuple[Monomial, ...] = tuple(minimize_gens(checked))
        self._lcm: Monomial | None = None
        self._maxprof = None

    @classmethod
    def _from_minimal(cls, n: int, gens: Iterable[Monomial]) -> "MonomialIdeal":
        """Trusted constructor: ``gens`` must already be a minimal set."""
        self = object.__new__(cls)
        self.n = n
        self.gens = tuple(sorted(gens))
        self._lcm = None
        self._maxprof = None
        return self

    @classmethod
    def zero(cls, n: int) -> "MonomialIdeal":
        return cls._from_minimal(n, ())

    @classmethod
    def whole_ring(cls, n: int) -> "MonomialIdeal":
        return cls._from_minimal(n, (one(n),))

    # -- basic queries ----------------------------------------------------

    @property
    def lcm(self) -> Monomial:
        """lcm of the minimal generators; 1 for the zero ideal."""
        if self._lcm is None:
            gens = self.gens
            if not gens:
                self._lcm = (0,) * self.n
            elif len(gens) == 1:
                self._lcm = gens[0]
            else:
                self._lcm = tuple(map(max, *gens))
        return self._lcm

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_whole_ring(self) -> bool:
        return bool(self.gens) and not any(self.gens[0])

    @property
    def is_square_free(self) -> bool:
        # every generator is square free exactly when the lcm is
        for e in self.lcm:
            if e > 1:
                return False
        return True

    def contains(self, m: Monomial) -> bool:
        """Ideal membership: some generator divides m."""
        if len(m) != self.n:
            raise ValueError(f"monomial {m} does not have {self.n} exponents")
        for g in self.gens:
            for a, b in zip(g, m):
                if a > b:
                    break
            else:
                return True
        return False

    def max_profile(self) -> tuple[tuple[int, int], ...]:
        """Per generator: (count of variables it is maximal in, one such variable).

        A generator m is x_i-maximal when 0 < deg_i(m) = deg_i(lcm).
        The second entry is -1 when the count is 0.
        """
        if self._maxprof is None:
            u = self.lcm
            prof = []
            for g in self.gens:
                cnt = 0
                var = -1
                for i, e in enumerate(g):
                    if e and e == u[i]:
                        cnt += 1
                        var = i
                prof.append((cnt, var))
            self._maxprof = tuple(prof)
        return self._maxprof

    # -- ideal arithmetic --------------------------------------------------

    def colon(self, p: Monomial) -> "MonomialIdeal":
        """The colon ideal I:p, with min(I:p) = minimize {m:p | m in min I}.

        Computed one variable of p at a time: I : x^a y^b = (I : x^a) : y^b.
        Each pure-power step keeps the set minimal, so a single ideal is
        built at the end of the chain.
        """
        if len(p) != self.n:
            raise ValueError(f"monomial {p} does not have {self.n} exponents")
        gens: Sequence[Monomial] = self.gens
        changed = False
        for i, e in enumerate(p):
            if e and gens:
                gens, hit = _colon_power_gens(gens, i, e)
                changed = changed or hit
        if not changed:
            return self
        return MonomialIdeal._from_minimal(self.n, sorted(gens))

    def _colon_power(self, i: int, e: int) -> "MonomialIdeal":
        """Colon by the pure power x_i^e."""
        gens, changed = _colon_power_gens(self.gens, i, e)
        if not changed:
            return self
        return MonomialIdeal._from_minimal(self.n, sorted(gens))

    def intersect_principal(self, p: Monomial) -> "MonomialIdeal":
        """The intersection with the principal ideal generated by p."""
        if not self.gens:
            return self
        return MonomialIdeal(self.n, [mono_lcm(m, p) for m in self.colon(p).gens])

    def radical_ideal(self) -> "MonomialIdeal":
        """The radical: generated by the square-free parts of the generators."""
        return MonomialIdeal(self.n, [radical(g) for g in self.gens])

    def plus(self, extra: Iterable[Monomial]) -> "MonomialIdeal":
        """The sum of this ideal and the ideal generated by ``extra``."""
        extra = tuple(tuple(g) for g in extra)
        for g in extra:
            if len(g) != self.n:
                raise ValueError(f"generator {g} does not have {self.n} exponents")
        if not extra:
            return self
        return MonomialIdeal._from_minimal(self.n, minimize_gens(self.gens + extra))

    def plus_one(self, p: Monomial) -> "MonomialIdeal":
        """The sum I + <p>, linear in the generator count."""
        if len(p) != self.n:
            raise ValueError(f"monomial {p} does not have {self.n} exponents")
        for m in self.gens:
            if divides(m, p):
                return self
        kept = [m for m in self.gens if not divides(p, m)]
        kept.append(p)
        return MonomialIdeal._from_minimal(self.n, kept)

    def restricted_gcd(self, members: Iterable[Monomial]) -> Monomial:
        return gcd_many(members)

    # -- dunder ------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.n == other.n and self.gens == other.gens

    def __hash__(self) -> int:
        return hash((self.n, self.gens))

    def __len__(self) -> int:
        return len(self.gens)

    def __repr__(self) -> str:
        return f"MonomialIdeal({self.n}, {list(self.gens)})"
