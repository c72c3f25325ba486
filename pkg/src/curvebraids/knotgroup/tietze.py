"""Greedy Tietze simplification."""

from __future__ import annotations

import warnings
from collections import Counter

from ..artin import _inv
from ..braid import free_reduce
from .presentation import GroupPresentation, canonical_relator, cyclic_reduce

__all__ = ["BudgetExceededWarning", "tietze_simplify"]

DEFAULT_BUDGET = 100_000


class BudgetExceededWarning(UserWarning):
    """Simplification stopped early; the returned presentation is the best so far."""


def _clean(gens: int, rels) -> list[tuple[int, ...]]:
    seen = set()
    out = []
    for r in rels:
        r = cyclic_reduce(r)
        if not r:
            continue
        c = canonical_relator(r)
        if c in seen:
            continue
        seen.add(c)
        out.append(r)
    return out


def _best_elimination(rels):
    occ = Counter(abs(a) for r in rels for a in r)
    best = None
    for idx, r in enumerate(rels):
        local = Counter(abs(a) for a in r)
        for g, cnt in sorted(local.items()):
            if cnt != 1:
                continue
            elsewhere = occ[g] - 1
            growth = elsewhere * (len(r) - 2) - len(r)
            key = (growth, len(r), g, idx)
            if best is None or key < best[0]:
                best = (key, idx, g)
    return best


def _eliminate(gens, rels, idx, g):
    r = rels[idx]
    k = next(i for i, a in enumerate(r) if abs(a) == g)
    v = r[k:] + r[:k]
    u = v[1:]
    # v = x_g**e * u = 1
    value = _inv(u) if v[0] > 0 else u

    def sub(w):
        out = []
        for a in w:
            if abs(a) == g:
                out.extend(value if a > 0 else _inv(value))
            else:
                out.append(a)
        # renumber generators above g
        return free_reduce(a - 1 if a > g else (a + 1 if a < -g else a) for a in out)

    return gens - 1, [sub(w) for i, w in enumerate(rels) if i != idx]


def tietze_simplify(p: GroupPresentation, budget: int = DEFAULT_BUDGET) -> GroupPresentation:
    """Drop trivial and duplicate relators and eliminate generators.

    A generator occurring exactly once in some relator is solved for and
    substituted everywhere; among candidates the one with the least growth in
    total relator length goes first.  If an elimination would push the total
    length past ``budget``, the previous presentation is returned and a
    :class:`BudgetExceededWarning` is issued.
    """
    gens, rels = p.generators, _clean(p.generators, p.relators)
    while True:
        choice = _best_elimination(rels)
        if choice is None:
            break
        _, idx, g = choice
        new_gens, new_rels = _eliminate(gens, rels, idx, g)
        new_rels = _clean(new_gens, new_rels)
        if sum(len(r) for r in new_rels) > budget:
            warnings.warn(
                f"tietze budget {budget} exceeded with {gens} generators left",
                BudgetExceededWarning,
                stacklevel=2,
            )
            break
        gens, rels = new_gens, new_rels
    return GroupPresentation(gens, tuple(rels))
