"""Braid words in the Artin generators and their combinatorial invariants.

A braid word on ``n`` strands is a tuple of nonzero integers: ``i`` stands for
the standard generator sigma_i and ``-i`` for its inverse, with ``1 <= i < n``.
Words are freely reduced when constructed, but braid relations are never
applied; deciding equality in B_n is the job of :mod:`curvebraids.artin`.

Strand positions are 1-based everywhere in the public interface.  A letter
sigma_i swaps the strands at positions i and i+1, and a positive letter is a
crossing in which the difference of the two fibre points turns
counterclockwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    CoprimalityError,
    DisconnectedFibreError,
    IndexRangeError,
    NotAKnotError,
    NotPureError,
    StrandMismatchError,
)

__all__ = [
    "BraidWord",
    "Band",
    "BandRepresentation",
    "Permutation",
    "OmegaImage",
    "ClosedBraidInvariants",
    "free_reduce",
    "compose",
    "invert",
    "band_to_word",
    "exponent_sum",
    "permutation",
    "pure_generator",
    "delta",
    "delta_squared",
    "linking_matrix",
    "omega",
    "self_windings",
    "torus_braid",
    "parallel",
    "cable_twist",
    "cable_braid",
    "closure_invariants",
    "is_strictly_positive",
    "fiber_genus",
    "fiber_euler_characteristic",
]


def free_reduce(letters: Iterable[int]) -> tuple[int, ...]:
    """Cancel adjacent ``a, -a`` pairs until none remain."""
    out: list[int] = []
    for a in letters:
        if out and out[-1] == -a:
            out.pop()
        else:
            out.append(a)
    return tuple(out)


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise IndexRangeError(f"strand count must be >= 1, got {self.strands}")
        letters = tuple(int(a) for a in self.letters)
        for a in letters:
            if a == 0 or abs(a) >= self.strands:
                raise IndexRangeError(
                    f"letter {a} out of range for B_{self.strands}"
                )
        object.__setattr__(self, "letters", free_reduce(letters))

    @classmethod
    def identity(cls, strands: int) -> "BraidWord":
        return cls(strands, ())

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        return compose(self, other)

    def __pow__(self, k: int) -> "BraidWord":
        base = self if k >= 0 else invert(self)
        return BraidWord(self.strands, base.letters * abs(k))

    def inverse(self) -> "BraidWord":
        return invert(self)

    def is_identity_word(self) -> bool:
        return not self.letters

    def __str__(self):
        body = " ".join(str(a) for a in self.letters)
        return f"B{self.strands}: {body}".rstrip()


def compose(a: BraidWord, b: BraidWord) -> BraidWord:
    if a.strands != b.strands:
        raise StrandMismatchError(
            f"cannot compose braids on {a.strands} and {b.strands} strands"
        )
    return BraidWord(a.strands, a.letters + b.letters)


def invert(a: BraidWord) -> BraidWord:
    return BraidWord(a.strands, tuple(-x for x in reversed(a.letters)))


@dataclass(frozen=True)
class Band:
    """The braid ``conjugator * sigma_core**(sign*power) * conjugator**-1``.

    ``power`` > 1 describes a local braid that is a power of a band, such as
    the cube of a band at a cusp; such a factor is one entry of a band
    representation but contributes ``power`` to its length.
    """

    strands: int
    conjugator: tuple[int, ...] = ()
    core: int = 1
    sign: int = 1
    power: int = 1

    def __post_init__(self):
        if not 1 <= self.core < self.strands:
            raise IndexRangeError(
                f"band core {self.core} out of range for B_{self.strands}"
            )
        if self.sign not in (1, -1):
            raise ValueError(f"band sign must be +1 or -1, got {self.sign}")
        if self.power < 1:
            raise ValueError(f"band power must be >= 1, got {self.power}")
        conj = BraidWord(self.strands, self.conjugator)
        object.__setattr__(self, "conjugator", conj.letters)

    @property
    def word(self) -> BraidWord:
        return band_to_word(self)

    @property
    def is_positive(self) -> bool:
        return self.sign == 1

    def flipped(self) -> "Band":
        return Band(self.strands, self.conjugator, self.core, -self.sign, self.power)


def band_to_word(b: Band) -> BraidWord:
    core = (b.sign * b.core,) * b.power
    conj = b.conjugator
    return BraidWord(b.strands, conj + core + tuple(-x for x in reversed(conj)))


@dataclass(frozen=True)
class BandRepresentation:
    strands: int
    bands: tuple[Band, ...] = ()

    def __post_init__(self):
        bands = tuple(self.bands)
        for b in bands:
            if b.strands != self.strands:
                raise StrandMismatchError(
                    f"band on {b.strands} strands in a representation on {self.strands}"
                )
        object.__setattr__(self, "bands", bands)

    def __len__(self):
        return len(self.bands)

    def __iter__(self):
        return iter(self.bands)

    @property
    def length(self) -> int:
        """Number of bands, counting a band power ``b**k`` as ``k`` bands."""
        return sum(b.power for b in self.bands)

    @property
    def is_quasipositive(self) -> bool:
        return all(b.sign == 1 for b in self.bands)

    def braid(self) -> BraidWord:
        letters: list[int] = []
        for b in self.bands:
            letters.extend(band_to_word(b).letters)
        return BraidWord(self.strands, letters)

    def __add__(self, other: "BandRepresentation") -> "BandRepresentation":
        if other.strands != self.strands:
            raise StrandMismatchError("band representations on different strand counts")
        return BandRepresentation(self.strands, self.bands + other.bands)


@dataclass(frozen=True)
class Permutation:
    """A bijection of ``{1..n}``; ``images[i-1]`` is the image of ``i``.

    Products read left to right, matching the right action of braids:
    ``(p * q)(i) == q(p(i))``.
    """

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> "Permutation":
        images = list(range(1, n + 1))
        images[i - 1], images[j - 1] = j, i
        return cls(tuple(images))

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if other.size != self.size:
            raise StrandMismatchError("permutations of different sizes")
        return Permutation(tuple(other(self(i)) for i in range(1, self.size + 1)))

    def inverse(self) -> "Permutation":
        inv = [0] * self.size
        for i, x in enumerate(self.images, start=1):
            inv[x - 1] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self.images, start=1))

    def cycles(self) -> list[tuple[int, ...]]:
        """Cycles (fixed points included), each starting at its least element."""
        seen = set()
        out = []
        for start in range(1, self.size + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            x = self(start)
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self(x)
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def is_transposition(self) -> bool:
        return self.cycle_type()[:1] == (2,) and sum(1 for c in self.cycles() if len(c) > 1) == 1


def exponent_sum(a: BraidWord) -> int:
    return sum(1 if x > 0 else -1 for x in a.letters)


def _positions(a: BraidWord) -> list[int]:
    # pos[s] = current position (0-based) of the strand that started at s
    n = a.strands
    where = list(range(n))  # where[pos] = starting label sitting at pos
    for x in a.letters:
        i = abs(x) - 1
        where[i], where[i + 1] = where[i + 1], where[i]
    pos = [0] * n
    for p, s in enumerate(where):
        pos[s] = p
    return pos


def permutation(a: BraidWord) -> Permutation:
    """Map each starting position to the position where that strand ends."""
    return Permutation(tuple(p + 1 for p in _positions(a)))


def pure_generator(n: int, i: int, j: int) -> BraidWord:
    """``A_{i,j} = (s_i ... s_{j-1}) s_j**2 (s_i ... s_{j-1})**-1``.

    Links the strands starting at positions ``i`` and ``j + 1``.
    """
    if not 1 <= i <= j <= n - 1:
        raise IndexRangeError(f"A_{{{i},{j}}} needs 1 <= i <= j <= {n - 1}")
    conj = tuple(range(i, j))
    return BraidWord(n, conj + (j, j) + tuple(-x for x in reversed(conj)))


def delta(n: int) -> BraidWord:
    """The half twist ``(s_1 ... s_{n-1})(s_1 ... s_{n-2}) ... (s_1)``."""
    if n < 1:
        raise IndexRangeError("strand count must be >= 1")
    letters = [x for k in range(n - 1, 0, -1) for x in range(1, k + 1)]
    return BraidWord(n, letters)


def delta_squared(n: int, form: str = "power") -> BraidWord:
    """The full twist, as ``(s_1 ... s_{n-1})**n`` or as a product of the A_{i,j}."""
    if n < 2:
        raise IndexRangeError(f"delta squared needs n >= 2, got {n}")
    if form == "power":
        return BraidWord(n, tuple(range(1, n)) * n)
    if form in ("pure-product", "pure"):
        letters: list[int] = []
        for i in range(1, n):
            for j in range(n - 1, i - 1, -1):
                letters.extend(pure_generator(n, i, j).letters)
        return BraidWord(n, letters)
    raise ValueError(f"unknown form {form!r}; expected 'power' or 'pure-product'")


@dataclass(frozen=True)
class OmegaImage:
    """An element ``(A, x)`` of the semidirect product of symmetric zero-diagonal
    integer matrices with the symmetric group.

    Rows and columns of ``A`` are indexed by starting strand positions, and
    ``(A, x) * (B, y) = (A + B[x, x], x * y)`` where ``B[x, x]`` is ``B``
    with rows and columns relabelled through ``x``.
    """

    matrix: np.ndarray
    perm: Permutation

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=np.int64)
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @classmethod
    def identity(cls, n: int) -> "OmegaImage":
        return cls(np.zeros((n, n), dtype=np.int64), Permutation.identity(n))

    @classmethod
    def generator(cls, n: int, letter: int) -> "OmegaImage":
        i = abs(letter)
        m = np.zeros((n, n), dtype=np.int64)
        m[i - 1, i] = m[i, i - 1] = 1 if letter > 0 else -1
        return cls(m, Permutation.transposition(n, i, i + 1))

    def __mul__(self, other: "OmegaImage") -> "OmegaImage":
        x = np.array(self.perm.images) - 1
        return OmegaImage(self.matrix + other.matrix[np.ix_(x, x)], self.perm * other.perm)

    def __eq__(self, other):
        if not isinstance(other, OmegaImage):
            return NotImplemented
        return self.perm == other.perm and np.array_equal(self.matrix, other.matrix)

    __hash__ = None


def omega(a: BraidWord) -> OmegaImage:
    n = a.strands
    m = np.zeros((n, n), dtype=np.int64)
    where = list(range(n))
    for x in a.letters:
        i = abs(x) - 1
        s, t = where[i], where[i + 1]
        d = 1 if x > 0 else -1
        m[s, t] += d
        m[t, s] += d
        where[i], where[i + 1] = t, s
    return OmegaImage(m, permutation(a))


def linking_matrix(a: BraidWord) -> np.ndarray:
    """Signed crossing counts between strands of a pure braid (twice the linking numbers)."""
    if not permutation(a).is_identity():
        raise NotPureError("linking matrix is defined for pure braids only")
    return omega(a).matrix


def self_windings(a: BraidWord) -> list[int]:
    """Self-windings ``sw_d``, ``d = 0..n-1``, of a braid whose closure is a knot.

    Following the strands of the closure in order ``i_0, i_1 = pi(i_0), ...``,
    ``sw_d`` is half the sum of the omega-matrix entries over the pairs
    ``(i_k, i_{k+d})``.  Each such sum is twice the winding number of a closed
    difference loop, so the halves are integers; ``sw_0`` is always 0 and the
    list sums to the exponent sum.
    """
    n = a.strands
    om = omega(a)
    cyc = om.perm.cycles()
    if len(cyc) != 1:
        raise NotAKnotError(f"closure has {len(cyc)} components, need a knot")
    order = [x - 1 for x in cyc[0]]
    out = []
    for d in range(n):
        s = sum(int(om.matrix[order[k], order[(k + d) % n]]) for k in range(n))
        if s % 2:
            raise ArithmeticError("odd diagonal sum; omega bookkeeping is inconsistent")
        out.append(s // 2)
    return out


def torus_braid(p: int, q: int) -> BraidWord:
    """Positive braid ``(s_1 ... s_{p-1})**q`` on ``p`` strands for the torus knot O{p, q}."""
    if p < 1 or q < 1:
        raise ValueError(f"torus braid needs p, q >= 1, got ({p}, {q})")
    if math.gcd(p, q) != 1:
        raise CoprimalityError(f"({p}, {q}) are not coprime")
    return BraidWord(p, tuple(range(1, p)) * q)


def parallel(base: BraidWord, p: int) -> BraidWord:
    """Blackboard ``p``-parallel: every strand becomes ``p`` strands and every
    crossing a block of ``p**2`` crossings of the same sign."""
    if p < 1:
        raise ValueError("p must be >= 1")
    if p == 1:
        return base
    letters: list[int] = []
    for x in base.letters:
        j = abs(x)
        block = [
            (j - 1) * p + r + 1 + s
            for r in range(p - 1, -1, -1)
            for s in range(p)
        ]
        if x < 0:
            block = [-y for y in reversed(block)]
        letters.extend(block)
    return BraidWord(base.strands * p, letters)


def cable_twist(base: BraidWord, p: int, q: int) -> int:
    """Number of ``(s_1 ... s_{p-1})`` factors appended by :func:`cable_braid`.

    The blackboard parallel of a closed braid diagram has framing equal to the
    writhe ``e(base)``; each parallel copy therefore links the core ``e``
    times, and every factor ``s_1 ... s_{p-1}`` adds one more.  Matching the
    cable's linking number ``q`` with the core against the Seifert framing
    gives ``t = q - p * e(base)``.
    """
    return q - p * exponent_sum(base)


def cable_braid(base: BraidWord, p: int, q: int) -> BraidWord:
    """Braid whose closure is the ``(p, q)`` cable of the knot closing ``base``."""
    if not p >= 1:
        raise ValueError("p must be >= 1")
    if math.gcd(p, q) != 1:
        raise CoprimalityError(f"({p}, {q}) are not coprime")
    if len(permutation(base).cycles()) != 1:
        raise NotAKnotError("cabling needs a braid whose closure is a knot")
    if p == 1:
        return base
    t = cable_twist(base, p, q)
    par = parallel(base, p)
    twist = BraidWord(par.strands, tuple(range(1, p))) ** t
    return par * twist


@dataclass(frozen=True)
class ClosedBraidInvariants:
    strands: int
    exponent_sum: int
    components: int
    cycle_type: tuple[int, ...]
    pairwise_linking: np.ndarray = field(compare=False)
    self_windings: tuple[int, ...] | None = None

    def linking_multiset(self) -> tuple[int, ...]:
        c = self.components
        return tuple(sorted(int(self.pairwise_linking[i, j]) for i in range(c) for j in range(i + 1, c)))

    def battery(self) -> tuple:
        """Hashable summary used to compare braids from different sources."""
        return (
            self.strands,
            self.exponent_sum,
            self.components,
            self.cycle_type,
            self.linking_multiset(),
            self.self_windings,
        )


def closure_invariants(a: BraidWord) -> ClosedBraidInvariants:
    om = omega(a)
    comps = om.perm.cycles()
    c = len(comps)
    lk = np.zeros((c, c), dtype=np.int64)
    for u in range(c):
        for v in range(u + 1, c):
            s = sum(int(om.matrix[i - 1, j - 1]) for i in comps[u] for j in comps[v])
            lk[u, v] = lk[v, u] = s // 2
    sw = tuple(self_windings(a)) if c == 1 else None
    return ClosedBraidInvariants(
        strands=a.strands,
        exponent_sum=exponent_sum(a),
        components=c,
        cycle_type=om.perm.cycle_type(),
        pairwise_linking=lk,
        self_windings=sw,
    )


def is_strictly_positive(a: BraidWord) -> bool:
    if any(x < 0 for x in a.letters):
        return False
    return set(a.letters) == set(range(1, a.strands))


def fiber_euler_characteristic(n: int, e: int) -> int:
    return n - e


def fiber_genus(n: int, e: int, c: int) -> int:
    """Genus ``1 - (n - e + c)/2`` of the fibre surface of a closed positive braid."""
    if n < 1:
        raise IndexRangeError("n must be >= 1")
    g = 1 - Fraction(n - e + c, 2)
    if g.denominator != 1:
        raise DisconnectedFibreError(
            f"non-integral genus {g} for (n={n}, e={e}, c={c}): inconsistent data"
        )
    if g < 0:
        raise DisconnectedFibreError(
            f"negative genus {g} for (n={n}, e={e}, c={c}): the fibre is not connected"
        )
    return int(g)
