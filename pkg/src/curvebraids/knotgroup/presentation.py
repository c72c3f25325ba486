"""Finite group presentations and the van Kampen presentations of braided surfaces."""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Iterable, Sequence

from ..artin import _inv, braids_equal, generator_images
from ..braid import BandRepresentation, band_to_word, delta_squared, free_reduce

__all__ = [
    "GroupPresentation",
    "NotDeltaSquaredWarning",
    "cyclic_reduce",
    "canonical_relator",
    "bidisk_presentation",
    "projective_presentation",
    "wirtinger_form",
    "is_wirtinger",
]

Word = tuple[int, ...]


class NotDeltaSquaredWarning(UserWarning):
    """A band representation used projectively does not multiply to the full twist."""


def cyclic_reduce(w: Iterable[int]) -> Word:
    w = list(free_reduce(w))
    lo, hi = 0, len(w)
    while hi - lo >= 2 and w[lo] == -w[hi - 1]:
        lo += 1
        hi -= 1
    return tuple(w[lo:hi])


def canonical_relator(w: Sequence[int]) -> Word:
    """Least rotation of the word or its inverse; equal for relators that
    define the same normal subgroup by a rotation or an inversion."""
    w = cyclic_reduce(w)
    if not w:
        return w
    cands = []
    for v in (w, _inv(w)):
        for k in range(len(v)):
            cands.append(v[k:] + v[:k])
    return min(cands)


@dataclass(frozen=True)
class GroupPresentation:
    """Generators ``x_1..x_g``; relators are signed-index words, kept freely and
    cyclically reduced, with trivial relators dropped."""

    generators: int
    relators: tuple[Word, ...] = ()

    def __post_init__(self):
        if self.generators < 0:
            raise ValueError("generator count must be >= 0")
        rels = []
        for r in self.relators:
            r = cyclic_reduce(int(a) for a in r)
            for a in r:
                if a == 0 or abs(a) > self.generators:
                    raise ValueError(f"letter {a} out of range for {self.generators} generators")
            if r:
                rels.append(r)
        object.__setattr__(self, "relators", tuple(rels))

    def total_length(self) -> int:
        return sum(len(r) for r in self.relators)

    def with_relators(self, extra: Iterable[Sequence[int]]) -> "GroupPresentation":
        return GroupPresentation(self.generators, self.relators + tuple(tuple(r) for r in extra))

    def deduplicated(self) -> "GroupPresentation":
        seen = set()
        keep = []
        for r in self.relators:
            c = canonical_relator(r)
            if c not in seen:
                seen.add(c)
                keep.append(r)
        return GroupPresentation(self.generators, tuple(keep))

    def __str__(self):
        parts = [f"gens: {self.generators}"]
        for r in self.relators:
            parts.append("rel: " + " ".join(f"x{a}" if a > 0 else f"-x{-a}" for a in r))
        return "; ".join(parts)


def bidisk_presentation(brep: BandRepresentation) -> GroupPresentation:
    """Relators ``x_i * act(x_i, b)**-1`` for every band ``b`` and every ``i``."""
    n = brep.strands
    rels: list[Word] = []
    for band in brep.bands:
        images = generator_images(band_to_word(band))
        for i, img in enumerate(images, start=1):
            r = free_reduce((i,) + _inv(img))
            if r:
                rels.append(r)
    return GroupPresentation(n, tuple(rels))


def projective_presentation(brep: BandRepresentation, check: bool = True) -> GroupPresentation:
    """The bidisk presentation plus the relation at infinity ``x_1 x_2 ... x_n = 1``.

    Issues :class:`NotDeltaSquaredWarning` when ``check`` is set and the bands do
    not multiply to the full twist.
    """
    n = brep.strands
    if check and n >= 2 and not braids_equal(brep.braid(), delta_squared(n)):
        warnings.warn(
            "band representation does not multiply to delta squared",
            NotDeltaSquaredWarning,
            stacklevel=2,
        )
    p = bidisk_presentation(brep)
    return p.with_relators([tuple(range(1, n + 1))])


def wirtinger_form(r: Sequence[int]) -> tuple[int, Word, int] | None:
    """Return ``(i, w, j)`` with ``r`` a rotation of ``x_i w x_j**-1 w**-1``,
    so that the relator says ``x_i = w x_j w**-1``; ``None`` otherwise."""
    r = cyclic_reduce(r)
    L = len(r)
    if L < 2 or L % 2:
        return None
    h = (L - 2) // 2
    for k in range(L):
        v = r[k:] + r[:k]
        if v[0] > 0 and v[h + 1] < 0 and v[1 : h + 1] == _inv(v[h + 2 :]):
            return v[0], v[1 : h + 1], -v[h + 1]
    return None


def is_wirtinger(p: GroupPresentation) -> bool:
    return all(wirtinger_form(r) is not None for r in p.relators)
