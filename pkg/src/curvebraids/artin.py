"""The right action of B_n on the free group F_n and the braid word problem.

Generators ``x_1..x_n`` of F_n are meridians around the n fibre points.  The
standard generator sigma_i acts by

    x_i -> x_i x_{i+1} x_i^-1,   x_{i+1} -> x_i,   x_j -> x_j otherwise,

and the action is written on the right: ``act(w, a * b) == act(act(w, a), b)``.
Since the action is faithful, two braids are equal exactly when they act the
same way on every generator.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .braid import BraidWord, free_reduce
from .errors import IndexRangeError, StrandMismatchError

__all__ = [
    "FreeWord",
    "free_multiply",
    "free_inverse",
    "generator_images",
    "act",
    "braids_equal",
    "total_product",
    "product_preserves_total",
]

Word = tuple[int, ...]


@dataclass(frozen=True)
class FreeWord:
    rank: int
    letters: Word = ()

    def __post_init__(self):
        letters = tuple(int(a) for a in self.letters)
        for a in letters:
            if a == 0 or abs(a) > self.rank:
                raise IndexRangeError(f"letter {a} out of range for F_{self.rank}")
        object.__setattr__(self, "letters", free_reduce(letters))

    @classmethod
    def generator(cls, rank: int, i: int) -> "FreeWord":
        return cls(rank, (i,))

    def __len__(self):
        return len(self.letters)

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        return free_multiply(self, other)

    def inverse(self) -> "FreeWord":
        return free_inverse(self)

    def __str__(self):
        body = " ".join(str(a) for a in self.letters)
        return f"F{self.rank}: {body}".rstrip()


def free_multiply(u: FreeWord, v: FreeWord) -> FreeWord:
    if u.rank != v.rank:
        raise StrandMismatchError(f"free words of rank {u.rank} and {v.rank}")
    return FreeWord(u.rank, u.letters + v.letters)


def free_inverse(u: FreeWord) -> FreeWord:
    return FreeWord(u.rank, tuple(-a for a in reversed(u.letters)))


def _inv(w: Word) -> Word:
    return tuple(-a for a in reversed(w))


def _substitute(w: Sequence[int], images: Sequence[Word]) -> Word:
    # images[k] is the image of x_{k+1}; apply the endomorphism to w
    out: list[int] = []
    for a in w:
        img = images[a - 1] if a > 0 else _inv(images[-a - 1])
        for b in img:
            if out and out[-1] == -b:
                out.pop()
            else:
                out.append(b)
    return tuple(out)


def _letter_images(n: int, letter: int) -> list[Word]:
    i = abs(letter)
    images: list[Word] = [(k,) for k in range(1, n + 1)]
    if letter > 0:
        images[i - 1] = (i, i + 1, -i)
        images[i] = (i,)
    else:
        images[i - 1] = (i + 1,)
        images[i] = (-(i + 1), i, i + 1)
    return images


def generator_images(b: BraidWord) -> list[Word]:
    """``[act(x_1, b), ..., act(x_n, b)]`` as reduced letter tuples."""
    n = b.strands
    images: list[Word] = [(k,) for k in range(1, n + 1)]
    for x in b.letters:
        step = _letter_images(n, x)
        images = [_substitute(img, step) for img in images]
    return images


def act(w: FreeWord, b: BraidWord) -> FreeWord:
    if w.rank != b.strands:
        raise StrandMismatchError(
            f"free word of rank {w.rank} acted on by B_{b.strands}"
        )
    return FreeWord(w.rank, _substitute(w.letters, generator_images(b)))


def braids_equal(a: BraidWord, b: BraidWord) -> bool:
    if a.strands != b.strands:
        raise StrandMismatchError(f"B_{a.strands} versus B_{b.strands}")
    if a.letters == b.letters:
        return True
    # comparing the two image lists avoids the blow-up of reducing a * b**-1
    return generator_images(a) == generator_images(b)


def total_product(n: int) -> FreeWord:
    """``x_1 x_2 ... x_n``, the boundary loop fixed by every braid."""
    return FreeWord(n, tuple(range(1, n + 1)))


def product_preserves_total(a: BraidWord) -> bool:
    tot = total_product(a.strands)
    return act(tot, a) == tot
