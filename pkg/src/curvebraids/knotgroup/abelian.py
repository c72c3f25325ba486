"""Abelian invariants through the Smith normal form of the relation matrix."""

from __future__ import annotations

from dataclasses import dataclass

from .presentation import GroupPresentation

__all__ = ["AbelianInvariants", "relation_matrix", "smith_diagonal", "abelianization"]


@dataclass(frozen=True)
class AbelianInvariants:
    """``Z**free_rank`` plus ``Z/d`` for each ``d`` in ``torsion`` (``d_1 | d_2 | ...``)."""

    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        t = tuple(int(d) for d in self.torsion)
        if any(d < 2 for d in t):
            raise ValueError("torsion coefficients must be >= 2")
        if any(b % a for a, b in zip(t, t[1:])):
            raise ValueError(f"torsion {t} is not a divisibility chain")
        object.__setattr__(self, "torsion", t)

    def __str__(self):
        parts = [f"Z/{d}" for d in self.torsion]
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        return " + ".join(parts) if parts else "0"


def relation_matrix(p: GroupPresentation) -> list[list[int]]:
    rows = []
    for r in p.relators:
        row = [0] * p.generators
        for a in r:
            row[abs(a) - 1] += 1 if a > 0 else -1
        rows.append(row)
    return rows


def smith_diagonal(matrix) -> list[int]:
    """Nonzero invariant factors of an integer matrix, in divisibility order.

    Works on Python integers, so entries never overflow.
    """
    a = [[int(x) for x in row] for row in matrix]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    diag = []
    t = 0
    while t < min(rows, cols):
        # pivot: smallest nonzero absolute value in the remaining block
        piv = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] and (piv is None or abs(a[i][j]) < abs(a[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        i, j = piv
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        while True:
            p = a[t][t]
            done = True
            for i in range(t + 1, rows):
                q = a[i][t] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t]:
                    done = False
            for j in range(t + 1, cols):
                q = a[t][j] // p
                if q:
                    for row in a:
                        row[j] -= q * row[t]
                if a[t][j]:
                    done = False
            if done:
                # the pivot must divide the rest of the block
                bad = next(
                    ((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % p),
                    None,
                )
                if bad is None:
                    break
                a[t] = [x + y for x, y in zip(a[t], a[bad[0]])]
                continue
            # move the smallest remaining entry of row/column t to the pivot
            best = (abs(p), t, t)
            for i in range(t + 1, rows):
                if a[i][t] and abs(a[i][t]) < best[0]:
                    best = (abs(a[i][t]), i, t)
            for j in range(t + 1, cols):
                if a[t][j] and abs(a[t][j]) < best[0]:
                    best = (abs(a[t][j]), t, j)
            _, i, j = best
            if i != t:
                a[t], a[i] = a[i], a[t]
            if j != t:
                for row in a:
                    row[t], row[j] = row[j], row[t]
        diag.append(abs(a[t][t]))
        t += 1
    return diag


def abelianization(p: GroupPresentation) -> AbelianInvariants:
    diag = smith_diagonal(relation_matrix(p)) if p.relators and p.generators else []
    rank = p.generators - len(diag)
    return AbelianInvariants(rank, tuple(d for d in diag if d != 1))
