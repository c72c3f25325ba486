"""Todd-Coxeter enumeration of the cosets of the trivial subgroup (HLT strategy)."""

from __future__ import annotations

import os
from dataclasses import dataclass

from .presentation import GroupPresentation, canonical_relator

__all__ = ["CosetResult", "coset_enumerate", "default_coset_cap"]

DEFAULT_CAP = 100_000


def default_coset_cap() -> int:
    value = os.environ.get("COSET_CAP")
    return int(value) if value else DEFAULT_CAP


@dataclass(frozen=True)
class CosetResult:
    """Either ``order`` is set, or ``exceeded`` is true and ``order`` is None."""

    order: int | None
    exceeded: bool
    cosets_defined: int

    def __str__(self):
        return "exceeded" if self.exceeded else str(self.order)


class _Overflow(Exception):
    pass


class _Table:
    def __init__(self, ncols, cap):
        self.ncols = ncols
        self.cap = cap
        self.rows = [[-1] * ncols]
        self.parent = [0]
        self.queue = []

    def define(self, c, x):
        if len(self.rows) >= self.cap:
            raise _Overflow
        d = len(self.rows)
        self.rows.append([-1] * self.ncols)
        self.parent.append(d)
        self.rows[c][x] = d
        self.rows[d][x ^ 1] = c

    def rep(self, c):
        root = c
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[c] != root:
            self.parent[c], c = root, self.parent[c]
        return root

    def merge(self, a, b):
        a, b = self.rep(a), self.rep(b)
        if a != b:
            lo, hi = min(a, b), max(a, b)
            self.parent[hi] = lo
            self.queue.append(hi)

    def coincidence(self, a, b):
        rows = self.rows
        self.queue = []
        self.merge(a, b)
        i = 0
        while i < len(self.queue):
            g = self.queue[i]
            i += 1
            for x in range(self.ncols):
                d = rows[g][x]
                if d < 0:
                    continue
                rows[d][x ^ 1] = -1
                mu, nu = self.rep(g), self.rep(d)
                if rows[mu][x] >= 0:
                    self.merge(nu, rows[mu][x])
                elif rows[nu][x ^ 1] >= 0:
                    self.merge(mu, rows[nu][x ^ 1])
                else:
                    rows[mu][x] = nu
                    rows[nu][x ^ 1] = mu

    def scan_and_fill(self, a, w):
        rows = self.rows
        r = len(w)
        f, i, b, j = a, 0, a, r - 1
        while True:
            while i <= j and rows[f][w[i]] >= 0:
                f = rows[f][w[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and rows[b][w[j] ^ 1] >= 0:
                b = rows[b][w[j] ^ 1]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if j == i:
                rows[f][w[i]] = b
                rows[b][w[i] ^ 1] = f
                return
            self.define(f, w[i])


def _column(a: int) -> int:
    return 2 * (a - 1) if a > 0 else 2 * (-a - 1) + 1


def coset_enumerate(p: GroupPresentation, max_cosets: int | None = None) -> CosetResult:
    """Order of the presented group, or ``exceeded`` once more than
    ``max_cosets`` cosets have been defined (default ``COSET_CAP`` or 10**5).

    A completed enumeration is exact.  An infinite group always ends in
    ``exceeded``.
    """
    cap = default_coset_cap() if max_cosets is None else int(max_cosets)
    if p.generators == 0:
        return CosetResult(1, False, 1)
    seen = set()
    rels = []
    for r in sorted(p.relators, key=lambda r: (len(r), r)):
        c = canonical_relator(r)
        if c not in seen:
            seen.add(c)
            rels.append([_column(a) for a in r])
    ncols = 2 * p.generators
    t = _Table(ncols, cap)
    try:
        a = 0
        while a < len(t.rows):
            for w in rels:
                if t.parent[a] != a:
                    break
                t.scan_and_fill(a, w)
            if t.parent[a] == a:
                for x in range(ncols):
                    if t.rows[a][x] < 0:
                        t.define(a, x)
            a += 1
    except _Overflow:
        return CosetResult(None, True, len(t.rows))
    live = sum(1 for c in range(len(t.rows)) if t.parent[c] == c)
    return CosetResult(live, False, len(t.rows))
