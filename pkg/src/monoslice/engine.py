"""Worklist engine computing slice contents.

The engine repeatedly pops a slice, simplifies it, emits content at base
cases and pushes split children otherwise. An optional guard may prune or
transform slices (used for branch-and-bound); an optional independence step
factors a slice into variable-disjoint blocks and streams the product of the
block contents.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass, replace
from itertools import product as _product
from typing import Callable, Iterable

from .ideal import MonomialIdeal
from .monomial import Monomial, divides, mono_mul, one, support
from .slices import (
    Slice,
    SplitDecision,
    base_case_content,
    independence_partition,
    label_split,
    pivot_split,
    simplify,
)

Consumer = Callable[[Monomial], None]
Guard = Callable[[Slice], "Slice | None"]
Selector = Callable[[Slice], SplitDecision]


@dataclass
class EngineStats:
    """Counters accumulated over one engine run."""

    slices_processed: int = 0
    base_cases: int = 0
    pivot_splits: int = 0
    label_splits: int = 0
    independence_splits: int = 0
    emitted: int = 0
    guard_pruned: int = 0
    guard_transformed: int = 0

    def merge(self, other: "EngineStats") -> None:
        self.slices_processed += other.slices_processed
        self.base_cases += other.base_cases
        self.pivot_splits += other.pivot_splits
        self.label_splits += other.label_splits
        self.independence_splits += other.independence_splits
        self.emitted += other.emitted
        self.guard_pruned += other.guard_pruned
        self.guard_transformed += other.guard_transformed

    def as_dict(self) -> dict[str, int]:
        return {
            "slices_processed": self.slices_processed,
            "base_cases": self.base_cases,
            "pivot_splits": self.pivot_splits,
            "label_splits": self.label_splits,
            "independence_splits": self.independence_splits,
            "emitted": self.emitted,
            "guard_pruned": self.guard_pruned,
            "guard_transformed": self.guard_transformed,
        }


@dataclass
class _Ctx:
    select: Selector
    consumer: Consumer
    stats: EngineStats
    guard: Guard | None = None
    use_independence: bool = True
    extended_base: bool = True
    inner_first: Callable[[Monomial], bool] | None = None


def compute_content(
    root: Slice,
    select: Selector,
    consumer: Consumer,
    *,
    guard: Guard | None = None,
    stats: EngineStats | None = None,
    use_independence: bool = True,
    extended_base: bool = True,
    inner_first: Callable[[Monomial], bool] | None = None,
    threads: int = 1,
) -> EngineStats:
    """Stream content(root) to ``consumer``; returns the run's counters.

    ``guard`` is called on every simplified slice and may return None to
    prune it, the slice unchanged to proceed, or a replacement slice (which
    is re-simplified and re-guarded). The guard sees only slices of the root
    ring: slices produced inside independence blocks bypass it. ``inner_first``
    decides, per pivot, whether the inner child is explored before the outer
    one. With ``threads`` > 1 the worklist is shared by that many workers and
    ``consumer`` is serialized behind a lock.
    """
    if stats is None:
        stats = EngineStats()
    ctx = _Ctx(
        select=select,
        consumer=consumer,
        stats=stats,
        guard=guard,
        use_independence=use_independence,
        extended_base=extended_base,
        inner_first=inner_first,
    )
    if threads <= 1:
        _run_serial(root, ctx)
        return stats
    _run_parallel(root, ctx, threads)
    return stats


def _run_serial(root: Slice, ctx: _Ctx) -> None:
    stack = [root]
    pop = stack.pop
    push = stack.extend
    while stack:
        children = _process(pop(), ctx)
        if children:
            push(children)


def _process(s: Slice, ctx: _Ctx) -> tuple[Slice, ...]:
    st = ctx.stats
    st.slices_processed += 1
    # the cheap base cases hold for raw slices too, so try them pre-simplify
    content = base_case_content(s, extended=False)
    if content is None:
        s = simplify(s)
        guard = ctx.guard
        if guard is not None:
            while True:
                g = guard(s)
                if g is None:
                    st.guard_pruned += 1
                    return ()
                if g is s:
                    break
                st.guard_transformed += 1
                s = simplify(g)
        content = base_case_content(s, extended=ctx.extended_base)
    if content is not None:
        st.base_cases += 1
        emit = ctx.consumer
        for d in content:
            emit(d)
        st.emitted += len(content)
        return ()
    if ctx.use_independence:
        blocks = independence_partition(s.ideal)
        if len(blocks) > 1:
            st.independence_splits += 1
            _emit_independent_product(s, blocks, ctx)
            return ()
    decision = ctx.select(s)
    if decision.kind == "pivot":
        inner, outer = pivot_split(s, decision.pivot)
        st.pivot_splits += 1
        if ctx.inner_first is None or ctx.inner_first(decision.pivot):
            return (outer, inner)
        return (inner, outer)
    children = label_split(s, decision.variable)
    st.label_splits += 1
    return tuple(reversed(children))


def _emit_independent_product(
    s: Slice, blocks: tuple[tuple[int, ...], ...], ctx: _Ctx
) -> None:
    """Compute each block's content separately and stream the product.

    Generators of S supported inside one block filter that block directly;
    generators with mixed support filter the recombined product.
    """
    n = s.ideal.n
    block_of = [0] * n
    for bi, block in enumerate(blocks):
        for j in block:
            block_of[j] = bi
    block_gens: list[list[Monomial]] = [[] for _ in blocks]
    for g in s.ideal.gens:
        for j, e in enumerate(g):
            if e:
                block_gens[block_of[j]].append(g)
                break
    block_subtract: list[list[Monomial]] = [[] for _ in blocks]
    mixed: list[Monomial] = []
    for m in s.subtract.gens:
        supp = support(m)
        b0 = block_of[supp[0]]
        if all(block_of[j] == b0 for j in supp[1:]):
            block_subtract[b0].append(m)
        else:
            mixed.append(m)
    parts: list[list[Monomial]] = []
    for bi, block in enumerate(blocks):
        sub_gens = [tuple(g[j] for j in block) for g in block_gens[bi]]
        sub_subtract = [tuple(m[j] for j in block) for m in block_subtract[bi]]
        k = len(block)
        sub = Slice(
            MonomialIdeal._from_minimal(k, sub_gens),
            MonomialIdeal._from_minimal(k, sub_subtract),
            one(k),
        )
        collected: list[Monomial] = []
        sub_ctx = _Ctx(
            select=ctx.select,
            consumer=collected.append,
            stats=ctx.stats,
            guard=None,
            use_independence=ctx.use_independence,
            extended_base=ctx.extended_base,
            inner_first=ctx.inner_first,
        )
        _run_serial(sub, sub_ctx)
        if not collected:
            return
        parts.append(collected)
    q = s.multiplier
    q_trivial = not any(q)
    emit = ctx.consumer
    count = 0
    # the last factor varies fastest, so only its coordinates are rewritten
    # in the inner loop
    head_blocks = blocks[:-1]
    tail_block = blocks[-1]
    tail_part = parts[-1]
    for head in _product(*parts[:-1]):
        w = [0] * n
        for block, piece in zip(head_blocks, head):
            for j, e in zip(block, piece):
                w[j] = e
        for piece in tail_part:
            for j, e in zip(tail_block, piece):
                w[j] = e
            wt = tuple(w)
            if mixed and any(divides(g, wt) for g in mixed):
                continue
            emit(wt if q_trivial else mono_mul(q, wt))
            count += 1
    ctx.stats.emitted += count


# -- parallel driver -----------------------------------------------------------


def _run_parallel(root: Slice, ctx: _Ctx, threads: int) -> None:
    lock = threading.Lock()
    work = threading.Condition(lock)
    stack: list[Slice] = [root]
    state = {"active": 0, "error": None}
    base_consumer = ctx.consumer

    def safe_consumer(d: Monomial) -> None:
        with lock:
            base_consumer(d)

    def worker() -> None:
        local = replace(ctx, consumer=safe_consumer, stats=EngineStats())
        try:
            while True:
                with work:
                    while not stack and state["active"] and state["error"] is None:
                        work.wait()
                    if state["error"] is not None or (
                        not stack and not state["active"]
                    ):
                        work.notify_all()
                        return
                    s = stack.pop()
                    state["active"] += 1
                children = ()
                try:
                    children = _process(s, local)
                finally:
                    with work:
                        state["active"] -= 1
                        if children:
                            stack.extend(children)
                        if stack or not state["active"]:
                            work.notify_all()
        except BaseException as exc:  # propagate to the caller
            with work:
                state["error"] = exc
                work.notify_all()
        finally:
            with lock:
                ctx.stats.merge(local)

    crew = [threading.Thread(target=worker, daemon=True) for _ in range(threads)]
    for t in crew:
        t.start()
    for t in crew:
        t.join()
    if state["error"] is not None:
        raise state["error"]


# -- instrumented recursive engine (for verification) ---------------------------


def compute_content_checked(
    root: Slice,
    select: Selector,
    *,
    use_independence: bool = True,
    extended_base: bool = True,
) -> frozenset[Monomial]:
    """Recursive engine asserting the structural invariants at every node.

    Checks per split: children's contents are pairwise disjoint and the
    termination measure moves: inner and label children strictly shrink the
    lcm, the outer child strictly grows the subtracted set. Checks per
    emission: the emitted monomial over the multiplier is a maximal standard
    monomial of the node's ideal and avoids the subtracted set. Far slower
    than compute_content; intended for tests.
    """
    return _checked(simplify(root), select, use_independence, extended_base)


def _assert_progress(parent: Slice, child: Slice, shrinks_lcm: bool) -> None:
    """Termination measure, lexicographic: the lcm of the ideal divides the
    parent's, strictly for inner and label children; lcm-preserving children
    must strictly grow the subtracted set instead.
    """
    up = parent.ideal.lcm
    uc = child.ideal.lcm
    assert divides(uc, up), "split must not grow the lcm"
    if shrinks_lcm:
        assert uc != up, "split made no lcm progress"
        return
    assert uc == up, "outer child must keep the ideal untouched"
    for m in parent.subtract.gens:
        assert child.subtract.contains(m), "outer child must not shrink S"
    grew = any(
        not parent.subtract.contains(m) for m in child.subtract.gens
    )
    assert grew, "outer child must strictly grow S"


def _assert_emission(s: Slice, d: Monomial) -> None:
    q = s.multiplier
    assert divides(q, d), "emitted monomial must be divisible by the multiplier"
    w = tuple(a - b for a, b in zip(d, q))
    I = s.ideal
    assert not I.contains(w), "emitted monomial lies in the ideal"
    assert not s.subtract.contains(w), "emitted monomial lies in the subtracted set"
    for j in range(I.n):
        bumped = w[:j] + (w[j] + 1,) + w[j + 1 :]
        assert I.contains(bumped), "emitted monomial is not maximal"


def _checked(
    s: Slice, select: Selector, use_independence: bool, extended_base: bool
) -> frozenset[Monomial]:
    content = base_case_content(s, extended=extended_base)
    if content is not None:
        result = frozenset(content)
        assert len(result) == len(content), "base case emitted duplicates"
        for d in result:
            _assert_emission(s, d)
        return result
    if use_independence:
        blocks = independence_partition(s.ideal)
        if len(blocks) > 1:
            out: set[Monomial] = set()
            sink = out.add
            ctx = _Ctx(
                select=select,
                consumer=sink,
                stats=EngineStats(),
                use_independence=use_independence,
                extended_base=extended_base,
            )
            _emit_independent_product(s, blocks, ctx)
            for d in out:
                _assert_emission(s, d)
            return frozenset(out)
    decision = select(s)
    if decision.kind == "pivot":
        inner, outer = pivot_split(s, decision.pivot)
        children = [(inner, True), (outer, False)]
    else:
        children = [(c, True) for c in label_split(s, decision.variable)]
    seen: set[Monomial] = set()
    for child, shrinks_lcm in children:
        _assert_progress(s, child, shrinks_lcm)
        part = _checked(
            simplify(child), select, use_independence, extended_base
        )
        overlap = seen & part
        assert not overlap, f"children overlap on {sorted(overlap)[:3]}"
        seen |= part
    return frozenset(seen)
