"""Enumeration of perfect matchings and the cycle/block classifications.

Matchings of an n x n adjacency pattern are emitted as 1-based image tuples
in lexicographic order.  Backtracking over rows with column bitmasks keeps
this practical through n = 16.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator

from .graph_model import GraphSpec, block_view, invertible_blocks, zero_blocks
from .perm_core import Perm, cycle_type


def enumerate_matchings(spec: GraphSpec) -> Iterator[Perm]:
    """Yield all perfect matchings as image tuples, lexicographically sorted."""
    n = spec.n
    rows = spec.rows
    images = [0] * n

    def extend(i: int, used: int) -> Iterator[Perm]:
        if i == n:
            yield tuple(images)
            return
        free = rows[i] & ~used
        while free:
            low = free & -free
            free ^= low
            j = low.bit_length()
            images[i] = j
            yield from extend(i + 1, used | low)

    yield from extend(0, 0)


def count_by_enumeration(spec: GraphSpec) -> int:
    """Matching count via backtracking; the third, slowest counting route."""
    return sum(1 for _ in enumerate_matchings(spec))


# L(1, 6) cycle-structure classes.  C24_0 is the refinement of the 2+4 type
# whose 2-cycle contains the point 1.

L61_LABELS = ("C6", "C33", "C24", "C24_0", "C222")


def label_l61(p: Perm) -> str:
    if len(p) != 6:
        raise ValueError("classification is defined for n = 6")
    ct = cycle_type(p)
    if ct == (6,):
        return "C6"
    if ct == (3, 3):
        return "C33"
    if ct == (2, 2, 2):
        return "C222"
    if ct == (2, 4):
        # 2-cycle membership of 1: p(p(1)) == 1 exactly on a 2-cycle
        return "C24_0" if p[p[0] - 1] == 1 else "C24"
    raise ValueError(f"not a matching of L(1,6): cycle type {ct}")


def classify_l61(perms: Iterable[Perm]) -> dict[str, list[Perm]]:
    out: dict[str, list[Perm]] = {lab: [] for lab in L61_LABELS}
    for p in perms:
        out[label_l61(p)].append(p)
    return out


def census_l61(classes: dict[str, list[Perm]]) -> tuple[int, int, int, int, int]:
    """(C6, C33, C24 total including C24_0, C24_0, C222)."""
    return (
        len(classes["C6"]),
        len(classes["C33"]),
        len(classes["C24"]) + len(classes["C24_0"]),
        len(classes["C24_0"]),
        len(classes["C222"]),
    )


# L(2, 4) block classes by number of invertible (I2 or R2) 2x2 blocks.
# S0_1 is the subset of S0 whose zero-block pattern is a product of two
# disjoint block transpositions rather than a block 4-cycle.

L82_LABELS = ("S0", "S1", "S2", "S4")


def label_l82(p: Perm) -> str:
    k = len(invertible_blocks(p))
    if k not in (0, 1, 2, 4):
        raise ValueError(f"impossible invertible-block count {k}")
    return f"S{k}"


def has_transposition_zero_pattern(p: Perm) -> bool:
    """True for S0 members whose four zero blocks pair up symmetrically."""
    zeros = set(zero_blocks(p))
    if len(zeros) != 4:
        return False
    return all((j, i) in zeros for (i, j) in zeros)


def classify_l82(perms: Iterable[Perm]) -> dict[str, list[Perm]]:
    out: dict[str, list[Perm]] = {lab: [] for lab in L82_LABELS}
    out["S0_1"] = []
    for p in perms:
        lab = label_l82(p)
        out[lab].append(p)
        if lab == "S0" and has_transposition_zero_pattern(p):
            out["S0_1"].append(p)
    return out


def census_l82(classes: dict[str, list[Perm]]) -> tuple[int, int, int, int]:
    """(S0, S1, S2, S4)."""
    return tuple(len(classes[lab]) for lab in L82_LABELS)  # type: ignore[return-value]
