"""Slices of the maximal-standard-monomial set and their transformations.

A slice (I, S, q) stands for the set of monomials

    content(I, S, q) = (msm(I) \\ S) * q

where msm(I) is the set of maximal standard monomials of I. The engine
shrinks slices with content-preserving transformations and splits them into
disjoint child slices until base cases apply.
"""
from __future__ import annotations

from dataclasses import dataclass

from .ideal import MonomialIdeal
from .monomial import (
    Monomial,
    divides,
    is_one,
    mono_mul,
    one,
    projection,
    variable_power,
)


@dataclass(frozen=True, slots=True)
class Slice:
    """Immutable slice (ideal, subtract, multiplier)."""

    ideal: MonomialIdeal
    subtract: MonomialIdeal
    multiplier: Monomial

    @property
    def n(self) -> int:
        return self.ideal.n

    def __post_init__(self):
        n = self.ideal.n
        if self.subtract.n != n or len(self.multiplier) != n:
            raise ValueError("slice parts live in different rings")


def initial_slice(ideal: MonomialIdeal) -> Slice:
    """The slice whose content is msm(ideal)."""
    return Slice(ideal, MonomialIdeal.zero(ideal.n), one(ideal.n))


@dataclass(frozen=True, slots=True)
class SplitDecision:
    """What to do at a non-base slice: a pivot split or a label split."""

    kind: str  # "pivot" or "label"
    pivot: Monomial | None = None
    variable: int | None = None

    @classmethod
    def pivot_on(cls, p: Monomial) -> "SplitDecision":
        return cls(kind="pivot", pivot=p)

    @classmethod
    def label_on(cls, i: int) -> "SplitDecision":
        return cls(kind="label", variable=i)


# -- content-preserving transformations -------------------------------------


def normalize(s: Slice) -> Slice:
    """Drop generators of I whose projection lies in S.

    Returns ``s`` itself when nothing changes.
    """
    S = s.subtract
    if S.is_zero:
        return s
    I = s.ideal
    kept = [m for m in I.gens if not S.contains(projection(m))]
    if len(kept) == len(I.gens):
        return s
    return Slice(MonomialIdeal._from_minimal(I.n, kept), S, s.multiplier)


def is_normal(s: Slice) -> bool:
    """True when no generator of I has its projection inside S."""
    S = s.subtract
    if S.is_zero:
        return True
    return not any(S.contains(projection(m)) for m in s.ideal.gens)


def prune_subtract(s: Slice) -> Slice:
    """Drop generators of S that lie in I or miss the projected lcm of I."""
    S = s.subtract
    if S.is_zero:
        return s
    I = s.ideal
    pl = projection(I.lcm)
    kept = [m for m in S.gens if not I.contains(m) and divides(m, pl)]
    if len(kept) == len(S.gens):
        return s
    return Slice(I, MonomialIdeal._from_minimal(S.n, kept), s.multiplier)


def prune_double_maximal(s: Slice) -> Slice:
    """Drop generators that attain the lcm exponent in two or more variables."""
    I = s.ideal
    prof = I.max_profile()
    if all(cnt < 2 for cnt, _ in prof):
        return s
    kept = [g for g, (cnt, _) in zip(I.gens, prof) if cnt < 2]
    return Slice(MonomialIdeal._from_minimal(I.n, kept), s.subtract, s.multiplier)


def content_lower_bound(I: MonomialIdeal) -> Monomial:
    """A monomial dividing every maximal standard monomial of I.

    Computed as lcm over the variables of gcd(M_i)/x_i, where M_i holds the
    generators divisible by x_i that are maximal in no other variable. An
    empty M_i contributes 1.
    """
    if I.is_zero:
        raise ValueError("the zero ideal has no content lower bound")
    n = I.n
    # gens maximal nowhere feed the gcd of every variable they are divisible
    # by; those with full support share one gcd, so they are folded once
    full: list[int] | None = None
    partial: list[Monomial] = []
    per_var: list[list[int] | None] = [None] * n
    for g, (cnt, var) in zip(I.gens, I.max_profile()):
        if cnt >= 2:
            continue
        if cnt == 1:
            cur = per_var[var]
            if cur is None:
                per_var[var] = list(g)
            else:
                for j, e in enumerate(g):
                    if e < cur[j]:
                        cur[j] = e
        elif 0 in g:
            partial.append(g)
        elif full is None:
            full = list(g)
        else:
            for j, e in enumerate(g):
                if e < full[j]:
                    full[j] = e
    l = [0] * n
    for i in range(n):
        kv = per_var[i]
        if kv is None:
            acc = full
        elif full is None:
            acc = kv
        else:
            acc = [a if a < b else b for a, b in zip(kv, full)]
        for g in partial:
            if g[i]:
                if acc is None:
                    acc = g
                else:
                    acc = [a if a < b else b for a, b in zip(acc, g)]
        if acc is None:
            continue
        # fold acc into l with the exponent of x_i knocked down by one
        j = 0
        for e in acc:
            if j == i:
                e -= 1
            if e > l[j]:
                l[j] = e
            j += 1
    return tuple(l)


def apply_lower_bound(s: Slice) -> Slice:
    """Divide the slice by its content lower bound; identity when the bound is 1."""
    l = content_lower_bound(s.ideal)
    if is_one(l):
        return s
    return Slice(
        s.ideal.colon(l), s.subtract.colon(l), mono_mul(s.multiplier, l)
    )


def simplify(s: Slice) -> Slice:
    """Run the transformations to a fixed point.

    Order per round: normalize, prune_subtract, prune_double_maximal, then
    divide by the content lower bound. Content is preserved throughout.
    """
    while True:
        t = prune_double_maximal(prune_subtract(normalize(s)))
        if t.ideal.gens:
            l = content_lower_bound(t.ideal)
            if any(l):
                t = Slice(
                    t.ideal.colon(l),
                    t.subtract.colon(l),
                    mono_mul(t.multiplier, l),
                )
        if t is s:
            return t
        s = t


def is_fully_simplified(s: Slice) -> bool:
    return simplify(s) is s


# -- base cases --------------------------------------------------------------


def base_case_content(s: Slice, *, extended: bool = True) -> list[Monomial] | None:
    """Content of ``s`` when a base case applies, else None.

    Base cases: some variable divides no generator (content empty); I square
    free; one or two variables; and, when ``extended`` is on, at most two
    generators that are maximal in no variable (candidate enumeration with
    direct membership checks).
    """
    I, S, q = s.ideal, s.subtract, s.multiplier
    n = I.n
    u = I.lcm
    if 0 in u:
        return []
    gens = I.gens
    if I.is_square_free:
        if len(gens) == n and all(sum(g) == 1 for g in gens):
            return [] if S.contains(one(n)) else [q]
        return []
    if n == 1:
        w = (gens[0][0] - 1,)
        return [] if S.contains(w) else [mono_mul(q, w)]
    if n == 2:
        out = []
        for a, b in zip(gens, gens[1:]):
            # consecutive stairs of the sorted generators pin one msm element
            w = (b[0] - 1, a[1] - 1)
            if not S.contains(w):
                out.append(mono_mul(q, w))
        return out
    if extended:
        prof = I.max_profile()
        nonmax = [g for g, (cnt, _) in zip(gens, prof) if cnt == 0]
        if len(nonmax) <= 2:
            return _enumerate_near_maximal(I, S, q, nonmax)
    return None


def _enumerate_near_maximal(I, S, q, nonmax) -> list[Monomial]:
    """Check every candidate msm element for an ideal whose generators are
    almost all maximal in some variable.

    A maximal standard monomial d takes the exponent deg_i(lcm) - 1 in every
    variable whose witness generator is maximal; only the (at most two)
    non-maximal generators can pin a different exponent, in at most one
    variable each.
    """
    n = I.n
    u = I.lcm
    base = tuple(e - 1 for e in u)
    cands = {base}
    for m in nonmax:
        for i in range(n):
            if m[i]:
                w = list(base)
                w[i] = m[i] - 1
                cands.add(tuple(w))
    if len(nonmax) == 2:
        m1, m2 = nonmax
        for i in range(n):
            if not m1[i]:
                continue
            for j in range(n):
                if j != i and m2[j]:
                    w = list(base)
                    w[i] = m1[i] - 1
                    w[j] = m2[j] - 1
                    cands.add(tuple(w))
    out = []
    gens = I.gens
    for w in sorted(cands):
        if S.contains(w):
            continue
        # one pass: a generator exceeding w in no variable shows w in I, one
        # exceeding it by exactly one in a single variable witnesses that bump
        needed = n
        seen = [False] * n
        in_ideal = False
        for g in gens:
            over = -1
            i = 0
            for gi, wi in zip(g, w):
                if gi > wi:
                    if over >= 0 or gi > wi + 1:
                        over = -2
                        break
                    over = i
                i += 1
            if over == -1:
                in_ideal = True
                break
            if over >= 0 and not seen[over]:
                seen[over] = True
                needed -= 1
        if not in_ideal and not needed:
            out.append(mono_mul(q, w))
    return out


def is_base_case(s: Slice, *, extended: bool = True) -> bool:
    return base_case_content(s, extended=extended) is not None


def base_content(s: Slice, *, extended: bool = True) -> list[Monomial]:
    content = base_case_content(s, extended=extended)
    if content is None:
        raise ValueError("slice is not a base case")
    return content


# -- splits ------------------------------------------------------------------


def pivot_split(s: Slice, p: Monomial) -> tuple[Slice, Slice]:
    """Split into (inner, outer) slices along the pivot p.

    content(s) is the disjoint union of the children's contents: the inner
    child carries the content divisible by multiplier*p, the outer child the
    rest. The pivot must satisfy p != 1, p not in I, p not in S and
    p | projection(lcm(min I)).
    """
    I, S, q = s.ideal, s.subtract, s.multiplier
    if len(p) != I.n:
        raise ValueError(f"pivot {p} does not have {I.n} exponents")
    if is_one(p):
        raise ValueError("pivot must not be 1")
    if I.contains(p):
        raise ValueError("pivot lies in the ideal")
    if S.contains(p):
        raise ValueError("pivot lies in the subtracted set")
    if not divides(p, projection(I.lcm)):
        raise ValueError("pivot does not divide the projected lcm")
    inner = Slice(I.colon(p), S.colon(p), mono_mul(q, p))
    outer = Slice(I, S.plus_one(p), q)
    return inner, outer


def label_split(s: Slice, i: int) -> list[Slice]:
    """Split along variable x_i into the x_i-divisible part plus one slice
    per generator with exponent exactly 1 in x_i.

    Requires at least one generator divisible by x_i and that x_i itself is
    not a generator.
    """
    I, S, q = s.ideal, s.subtract, s.multiplier
    n = I.n
    if not 0 <= i < n:
        raise ValueError(f"variable index {i} out of range")
    divs = [m for m in I.gens if m[i]]
    if not divs:
        raise ValueError(f"no generator is divisible by variable {i}")
    if len(divs) == 1 and sum(divs[0]) == divs[0][i] == 1:
        raise ValueError(f"variable {i} is itself a generator; label split invalid")
    xi = variable_power(i, 1, n)
    children = [Slice(I.colon(xi), S.colon(xi), mono_mul(q, xi))]
    grown = S
    for l in divs:
        if l[i] != 1:
            continue
        lred = l[:i] + (0,) + l[i + 1 :]
        children.append(Slice(I.colon(lred), grown.colon(lred), mono_mul(q, lred)))
        grown = grown.plus_one(lred)
    return children


def independence_partition(I: MonomialIdeal) -> tuple[tuple[int, ...], ...]:
    """Finest partition of the variables such that every generator is
    supported inside a single part. Unused variables form singletons.
    """
    n = I.n
    if n == 1:
        return ((0,),)
    for g in I.gens:
        if 0 not in g:
            # a generator touching every variable glues the whole ring
            return (tuple(range(n)),)
    parent = list(range(n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for m in I.gens:
        first = -1
        for j, e in enumerate(m):
            if e:
                if first < 0:
                    first = find(j)
                else:
                    rj = find(j)
                    if rj != first:
                        parent[rj] = first
    groups: dict[int, list[int]] = {}
    for j in range(n):
        groups.setdefault(find(j), []).append(j)
    return tuple(sorted(tuple(v) for v in groups.values()))
