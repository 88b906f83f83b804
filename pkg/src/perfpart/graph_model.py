"""Bipartite graph model: complete bipartite graphs with square diagonal holes.

The graph family L(r, m) is K_{n,n} with n = r*m, minus m vertex-disjoint
copies of K_{r,r} placed along the diagonal: adjacency(i, j) = 0 exactly when
ceil(i/r) == ceil(j/r).  r = 0 encodes a plain K_{n,n} (n given explicitly).
Arbitrary 0/1 adjacency matrices are supported alongside the family.

Adjacency rows are stored as bitmasks (bit j-1 set means (i, j) is an edge),
which caps n at 64; everything here is far below that.
"""

from __future__ import annotations

from dataclasses import dataclass
from collections.abc import Iterable, Sequence

from .perm_core import Perm, is_permutation

Block = tuple[tuple[int, int], tuple[int, int]]

I2: Block = ((1, 0), (0, 1))
R2: Block = ((0, 1), (1, 0))
O2: Block = ((0, 0), (0, 0))
J2: Block = ((1, 1), (1, 1))

MAX_N = 64


@dataclass(frozen=True)
class GraphSpec:
    """An n x n bipartite adjacency pattern, either from the L family or explicit."""

    rows: tuple[int, ...]
    kind: str  # "L" or "matrix"
    r: int | None = None
    m: int | None = None

    @property
    def n(self) -> int:
        return len(self.rows)

    def adjacency(self, i: int, j: int) -> bool:
        """Edge test with 1-based row/column indices."""
        return bool(self.rows[i - 1] >> (j - 1) & 1)

    def edges(self) -> list[tuple[int, int]]:
        """All edges (i, j), 1-based, in lexicographic order."""
        return [
            (i, j)
            for i in range(1, self.n + 1)
            for j in range(1, self.n + 1)
            if self.adjacency(i, j)
        ]


def l_graph(r: int, m: int | None = None, n: int | None = None) -> GraphSpec:
    """Build L(r, m); with r = 0 build K_{n,n} for an explicit n."""
    if r < 0:
        raise ValueError("r must be >= 0")
    if r == 0:
        if n is None or n < 1:
            raise ValueError("r=0 needs an explicit n >= 1")
        size = n
    else:
        if m is None or m < 1:
            raise ValueError("m must be >= 1 when r >= 1")
        if n is not None and n != r * m:
            raise ValueError(f"n={n} contradicts r*m={r * m}")
        size = r * m
    if size > MAX_N:
        raise ValueError(f"n={size} exceeds the bitset bound {MAX_N}")
    full = (1 << size) - 1
    rows = []
    for i in range(size):
        if r == 0:
            rows.append(full)
        else:
            block = i // r
            hole = ((1 << r) - 1) << (block * r)
            rows.append(full & ~hole)
    return GraphSpec(rows=tuple(rows), kind="L", r=r, m=None if r == 0 else m)


def from_matrix(rows: Sequence[int] | Sequence[str] | Sequence[Sequence[int]]) -> GraphSpec:
    """Build a spec from bitmask ints, '0101' strings, or 0/1 row sequences."""
    n = len(rows)
    if n == 0 or n > MAX_N:
        raise ValueError(f"need 1..{MAX_N} rows, got {n}")
    masks = []
    for row in rows:
        if isinstance(row, int):
            if row >> n:
                raise ValueError("row mask has bits beyond column n")
            masks.append(row)
        elif isinstance(row, str):
            if len(row) != n or set(row) - {"0", "1"}:
                raise ValueError(f"bad bitstring row {row!r}")
            masks.append(sum(1 << j for j, ch in enumerate(row) if ch == "1"))
        else:
            cells = list(row)
            if len(cells) != n or any(c not in (0, 1) for c in cells):
                raise ValueError("rows must be 0/1 and square")
            masks.append(sum(1 << j for j, c in enumerate(cells) if c))
    return GraphSpec(rows=tuple(masks), kind="matrix")


def row_strings(spec: GraphSpec) -> list[str]:
    """Adjacency rows as '0101...' strings (leftmost character is column 1)."""
    return [
        "".join("1" if spec.adjacency(i, j) else "0" for j in range(1, spec.n + 1))
        for i in range(1, spec.n + 1)
    ]


def degree(spec: GraphSpec) -> int:
    """Common row/column degree; raises on an irregular explicit matrix."""
    if spec.kind == "L" and spec.r is not None:
        return spec.n - spec.r
    sums = {bin(row).count("1") for row in spec.rows}
    cols = {
        sum(spec.rows[i] >> j & 1 for i in range(spec.n)) for j in range(spec.n)
    }
    if len(sums) != 1 or cols != sums:
        raise ValueError("matrix is not regular; degree undefined")
    return sums.pop()


def is_matching(spec: GraphSpec, p: Sequence[int]) -> bool:
    """True when p is a permutation of 1..n whose edges all lie in the graph."""
    if not is_permutation(p, spec.n):
        return False
    return all(spec.adjacency(i, x) for i, x in enumerate(p, start=1))


def block_view(p: Perm) -> tuple[tuple[Block, ...], ...]:
    """The 4x4 block matrix of 2x2 cells for a degree-8 permutation."""
    if len(p) != 8:
        raise ValueError("block view is defined for n = 8")
    mat = [[0] * 8 for _ in range(8)]
    for i, x in enumerate(p, start=1):
        mat[i - 1][x - 1] = 1
    out = []
    for bi in range(4):
        row = []
        for bj in range(4):
            row.append(
                (
                    (mat[2 * bi][2 * bj], mat[2 * bi][2 * bj + 1]),
                    (mat[2 * bi + 1][2 * bj], mat[2 * bi + 1][2 * bj + 1]),
                )
            )
        out.append(tuple(row))
    return tuple(out)


def invertible_blocks(p: Perm) -> list[tuple[int, int]]:
    """1-based block positions whose 2x2 cell is I2 or R2."""
    view = block_view(p)
    return [
        (i + 1, j + 1)
        for i in range(4)
        for j in range(4)
        if view[i][j] in (I2, R2)
    ]


def zero_blocks(p: Perm) -> list[tuple[int, int]]:
    """1-based off-diagonal block positions whose 2x2 cell is all zero."""
    view = block_view(p)
    return [
        (i + 1, j + 1)
        for i in range(4)
        for j in range(4)
        if i != j and view[i][j] == O2
    ]
