"""Quasipositive band representations realizing Wirtinger presentations."""

from __future__ import annotations

from ..braid import Band, BandRepresentation
from ..errors import NotWirtingerError
from .presentation import GroupPresentation, wirtinger_form

__all__ = ["simple_relations", "wirtinger_to_bands"]


def simple_relations(p: GroupPresentation):
    """Split every relation ``x_i = w x_j w**-1`` into relations ``A = I J I**-1``
    and equalities ``A = B``, introducing one new generator per inner letter of
    ``w``.  Returns ``(generator_count, simple, equalities)`` with
    ``simple`` a list of triples ``(A, I, J)``.
    """
    gens = p.generators
    simple, equal = [], []
    for r in p.relators:
        form = wirtinger_form(r)
        if form is None:
            raise NotWirtingerError(f"relator {r} is not of the form x_i w x_j^-1 w^-1")
        i, w, j = form
        if not w:
            equal.append((i, j))
            continue
        # y_0 = x_i, y_t = w_{t+1} ... x_j ..., y_k = x_j
        chain = [i]
        for _ in range(len(w) - 1):
            gens += 1
            chain.append(gens)
        chain.append(j)
        for t, a in enumerate(w):
            outer, inner = chain[t], chain[t + 1]
            if a > 0:
                simple.append((outer, a, inner))
            else:
                simple.append((inner, -a, outer))
    return gens, simple, equal


def _equality_band(n, u, v):
    # x_u = x_v on strands u < v
    return Band(n, tuple(range(v - 1, u, -1)), u)


def wirtinger_to_bands(p: GroupPresentation) -> BandRepresentation:
    """A quasipositive band representation whose bidisk group is presented by ``p``.

    Generator ``x_k`` (and each auxiliary generator) gets its own strand.  A
    relation ``A = I J I**-1`` gets three more strands ``s, s+1, s+2`` with the
    band ``sigma_{s+1}**-1 sigma_s sigma_{s+1}``, whose relation reads
    ``x_s = x_{s+1} x_{s+2} x_{s+1}**-1``; equality bands then identify those
    strands with the strands of ``A``, ``I`` and ``J``.
    """
    if p.generators == 0:
        raise NotWirtingerError("the trivial group on no generators has no braided realization")
    gens, simple, equal = simple_relations(p)
    n = gens + 3 * len(simple)
    pairs = [(min(a, b), max(a, b)) for a, b in equal if a != b]
    bands = []
    for t, (a, i, j) in enumerate(simple):
        s = gens + 3 * t + 1
        bands.append(Band(n, (-(s + 1),), s))
        pairs += [(a, s), (i, s + 1), (j, s + 2)]
    bands += [_equality_band(n, u, v) for u, v in pairs]
    return BandRepresentation(n, tuple(bands))
