"""Counting homomorphisms into small symmetric groups."""

from __future__ import annotations

import itertools
import math

from ..errors import SearchCapExceeded
from .presentation import GroupPresentation

__all__ = ["count_homs_to_symmetric"]

MAX_DEGREE = 5
DEFAULT_NODE_CAP = 5_000_000


def _symmetric_group(k):
    elems = list(itertools.permutations(range(k)))
    index = {e: i for i, e in enumerate(elems)}
    mul = [[index[tuple(b[a[x]] for x in range(k))] for b in elems] for a in elems]
    inv = [0] * len(elems)
    for i, e in enumerate(elems):
        r = [0] * k
        for x, y in enumerate(e):
            r[y] = x
        inv[i] = index[tuple(r)]
    return len(elems), mul, inv, index[tuple(range(k))]


def count_homs_to_symmetric(p: GroupPresentation, k: int, node_cap: int = DEFAULT_NODE_CAP) -> int:
    """Number of homomorphisms from the presented group to ``S_k``.

    Generators are assigned in order of first use; each relator is checked as
    soon as all of its generators have images.  Generators in no relator
    contribute a factor ``k!`` each.  Raises :class:`SearchCapExceeded` after
    ``node_cap`` partial assignments.
    """
    if not 1 <= k <= MAX_DEGREE:
        raise ValueError(f"symmetric degree must lie in 1..{MAX_DEGREE}, got {k}")
    size, mul, inv, one = _symmetric_group(k)

    order = []
    for r in sorted(p.relators, key=len):
        for a in r:
            if abs(a) not in order:
                order.append(abs(a))
    free = p.generators - len(order)
    pos = {g: i for i, g in enumerate(order)}
    checks = [[] for _ in order]
    for r in p.relators:
        checks[max(pos[abs(a)] for a in r)].append(r)

    images = [0] * (p.generators + 1)
    nodes = 0

    def holds(r):
        v = one
        for a in r:
            g = images[a] if a > 0 else inv[images[-a]]
            v = mul[v][g]
        return v == one

    def search(depth):
        nonlocal nodes
        if depth == len(order):
            return 1
        total = 0
        g = order[depth]
        for e in range(size):
            nodes += 1
            if nodes > node_cap:
                raise SearchCapExceeded(f"more than {node_cap} partial assignments into S_{k}")
            images[g] = e
            if all(holds(r) for r in checks[depth]):
                total += search(depth + 1)
        return total

    return search(0) * math.factorial(k) ** free
