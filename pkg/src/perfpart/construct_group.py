"""Group-theoretic perfect partitions: K_{n,n} by cosets, L(n, 2) by coset pairs.

For the cyclic subgroup H generated by the n-cycle c = (1 2 ... n), every
left coset gH of S_n is a 1-factorization of K_{n,n} (row i meets column
g(c^t(i)) once for each t), and the cosets partition S_n, so the coset
decomposition is a perfect partition with (n-1)! parts of size n.

For L(2n, n), the graph on 2n points with two n x n holes, every matching is
a pair (alpha, beta) of permutations of 1..n (top block to bottom, bottom to
top).  The parts {(g c^t, h c^{t+d}) : t = 0..n-1} over coset representatives
g, h and offsets d cover every pair exactly once, giving ((n-1)!)^2 * n parts
of size n.
"""

from __future__ import annotations

from itertools import permutations

from .graph_model import l_graph
from .perm_core import Perm, compose
from .verifier import PartitionCertificate, make_certificate


def _cycle_powers(n: int) -> list[Perm]:
    c = tuple(list(range(2, n + 1)) + [1])  # (1 2 ... n)
    powers = [tuple(range(1, n + 1))]
    for _ in range(n - 1):
        powers.append(compose(c, powers[-1]))
    return powers


def _coset_reps(n: int) -> list[Perm]:
    """Lexicographically least member of each left coset of <(1 2 ... n)>."""
    powers = _cycle_powers(n)
    reps = []
    for images in permutations(range(1, n + 1)):
        g = tuple(images)
        if g == min(compose(g, h) for h in powers):
            reps.append(g)
    return reps


def knn_partition(n: int) -> PartitionCertificate:
    """Perfect partition of K_{n,n} into the (n-1)! left cosets of <(1 2 ... n)>."""
    if n < 1:
        raise ValueError("n must be >= 1")
    powers = _cycle_powers(n)
    parts = [[compose(g, h) for h in powers] for g in _coset_reps(n)]
    return make_certificate(l_graph(0, n=n), parts, complete=True)


def _pair_to_perm(alpha: Perm, beta: Perm, n: int) -> Perm:
    return tuple(n + alpha[i] for i in range(n)) + tuple(beta[i] for i in range(n))


def l2nn_partition(n: int) -> PartitionCertificate:
    """Perfect partition of L(n, 2) (two n x n holes) from paired cosets."""
    if n < 1:
        raise ValueError("n must be >= 1")
    powers = _cycle_powers(n)
    reps = _coset_reps(n)
    parts = []
    for g in reps:
        g_orbit = [compose(g, powers[t]) for t in range(n)]
        for h in reps:
            h_orbit = [compose(h, powers[t]) for t in range(n)]
            for d in range(n):
                parts.append(
                    [
                        _pair_to_perm(g_orbit[t], h_orbit[(t + d) % n], n)
                        for t in range(n)
                    ]
                )
    return make_certificate(l_graph(n, 2), parts, complete=True)
