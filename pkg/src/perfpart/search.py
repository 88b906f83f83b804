"""Exhaustive search: 1-factorizations and perfect partitions via exact cover.

Two nested exact-cover problems.  The inner one covers the edge set of the
graph with matchings (one 1-factorization); the outer one covers the set of
all matchings with 1-factorizations (a perfect partition).  Branching always
targets the most constrained column, and the outer level always extends the
lexicographically least uncovered matching, which kills the part-order
symmetry without losing completeness.

Everything is deterministic: matchings are taken in lexicographic order and
candidates are tried in ascending index order.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence

from .graph_model import GraphSpec, degree, is_matching
from .matchings import enumerate_matchings
from .perm_core import Perm


class SearchBudgetExceeded(Exception):
    """Raised when the node budget runs out before the search is decided."""


def exact_cover(
    n_cols: int,
    rows: Sequence[int],
    forced: Sequence[int] = (),
    budget: list[int] | None = None,
) -> Iterator[tuple[int, ...]]:
    """Yield exact covers of columns 0..n_cols-1 as sorted row-index tuples.

    rows are column bitmasks; forced rows are pre-selected.  budget, when
    given, is a single-element mutable list of remaining search nodes shared
    with the caller; it raises SearchBudgetExceeded at zero.
    """
    full = (1 << n_cols) - 1
    covered = 0
    chosen = list(forced)
    for idx in forced:
        if rows[idx] & covered:
            return
        covered |= rows[idx]
    # column -> candidate row indices, fixed once; filtered against `covered`
    # at branch time.
    by_col: list[list[int]] = [[] for _ in range(n_cols)]
    for idx, mask in enumerate(rows):
        m = mask
        while m:
            low = m & -m
            by_col[low.bit_length() - 1].append(idx)
            m ^= low

    def descend(covered: int) -> Iterator[tuple[int, ...]]:
        if budget is not None:
            if budget[0] <= 0:
                raise SearchBudgetExceeded
            budget[0] -= 1
        if covered == full:
            yield tuple(sorted(chosen))
            return
        best_col = -1
        best: list[int] | None = None
        rem = full & ~covered
        while rem:
            low = rem & -rem
            rem ^= low
            col = low.bit_length() - 1
            cands = [idx for idx in by_col[col] if not rows[idx] & covered]
            if best is None or len(cands) < len(best):
                best, best_col = cands, col
                if not cands:
                    return
                if len(cands) == 1:
                    break
        assert best is not None and best_col >= 0
        for idx in best:
            chosen.append(idx)
            yield from descend(covered | rows[idx])
            chosen.pop()

    yield from descend(covered)


def _edge_index(spec: GraphSpec) -> dict[tuple[int, int], int]:
    return {edge: k for k, edge in enumerate(spec.edges())}


def _matching_masks(spec: GraphSpec, matchings: Sequence[Perm]) -> list[int]:
    idx = _edge_index(spec)
    masks = []
    for p in matchings:
        mask = 0
        for i, x in enumerate(p, start=1):
            mask |= 1 << idx[(i, x)]
        masks.append(mask)
    return masks


def find_factorizations(
    spec: GraphSpec,
    containing: Perm | None = None,
    budget: int | None = None,
) -> Iterator[tuple[Perm, ...]]:
    """Yield 1-factorizations of spec, optionally forced to contain a matching."""
    matchings = list(enumerate_matchings(spec))
    masks = _matching_masks(spec, matchings)
    forced: list[int] = []
    if containing is not None:
        if not is_matching(spec, containing):
            raise ValueError("forced member is not a matching of the graph")
        forced = [matchings.index(tuple(containing))]
    shared = [budget] if budget is not None else None
    for sol in exact_cover(spec.n * degree(spec), masks, forced, shared):
        yield tuple(matchings[i] for i in sol)


def find_perfect_partition(
    spec: GraphSpec,
    find_all: bool = False,
    budget: int | None = None,
    precheck: bool = True,
):
    """First perfect partition of spec, or None when provably none exists.

    With find_all=True, return an iterator over every perfect partition
    instead.  budget bounds total search nodes across both cover levels;
    exceeding it raises SearchBudgetExceeded, which is distinct from the
    proven-none result.  precheck applies the divisibility shortcut before
    searching (a failed shortcut is itself a proof of none).
    """
    gen = _partitions(spec, budget, precheck)
    if find_all:
        return gen
    return next(gen, None)


def _partitions(
    spec: GraphSpec, budget: int | None, precheck: bool
) -> Iterator[tuple[tuple[Perm, ...], ...]]:
    d = degree(spec)
    matchings = list(enumerate_matchings(spec))
    if not matchings:
        if d == 0:
            yield ()
        return
    if d == 0 or (precheck and len(matchings) % d != 0):
        return
    masks = _matching_masks(spec, matchings)
    n_cols = spec.n * d
    shared = [budget] if budget is not None else None
    full_edges = (1 << n_cols) - 1

    def descend(available: list[int]) -> Iterator[tuple[tuple[Perm, ...], ...]]:
        if not available:
            yield ()
            return
        if shared is not None:
            if shared[0] <= 0:
                raise SearchBudgetExceeded
            shared[0] -= 1
        # forcing local row 0 anchors every part at the least uncovered matching
        local = [masks[i] for i in available]
        for sol in exact_cover(n_cols, local, forced=[0], budget=shared):
            part_ids = tuple(available[k] for k in sol)
            rest = [i for i in available if i not in set(part_ids)]
            part = tuple(matchings[i] for i in part_ids)
            for tail in descend(rest):
                yield (part, *tail)

    yield from descend(list(range(len(matchings))))
