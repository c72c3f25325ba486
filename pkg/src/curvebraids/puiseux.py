"""Cable cascades of singular branches given by a Puiseux parametrization.

A branch is ``z = t**m, w = t**n + sum(c_k t**k)`` with ``n > m``.  Truncating
``w`` after successive exponents gives approximations to the branch; the k-th
one covers its image ``g(k)``-to-one.  Each drop of ``g`` is a cabling of the
link, which is an iterated torus knot assembled here from torus and cable
braids.

Coefficients are exact Gaussian rationals ``(re, im)`` pairs of Fractions.
Only their support affects anything computed in this module; the values are
kept for the numerical oracle in :mod:`curvebraids.monodromy`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .braid import (
    BraidWord,
    cable_braid,
    exponent_sum,
    fiber_genus,
    is_strictly_positive,
    torus_braid,
)
from .errors import CascadeValidationError, IndexRangeError, InvalidBranchError

__all__ = [
    "GaussianRational",
    "BranchParam",
    "CableCascade",
    "g_sequence",
    "characteristic_exponents",
    "cable_cascade",
    "cascade_braid",
    "milnor_number",
    "branch_genus",
    "approximation",
]

GaussianRational = tuple[Fraction, Fraction]


def _gaussian(c) -> GaussianRational:
    if isinstance(c, tuple):
        re, im = c
        return Fraction(re), Fraction(im)
    if isinstance(c, complex):
        return Fraction(c.real), Fraction(c.imag)
    return Fraction(c), Fraction(0)


@dataclass(frozen=True)
class BranchParam:
    m: int
    n: int
    coeffs: Mapping[int, GaussianRational] = field(default_factory=dict)

    def __post_init__(self):
        if not (1 <= self.m < self.n):
            raise InvalidBranchError(f"need n > m >= 1, got m={self.m}, n={self.n}")
        clean = {}
        for k, c in dict(self.coeffs).items():
            k = int(k)
            c = _gaussian(c)
            if k <= self.n:
                raise InvalidBranchError(f"coefficient exponent {k} must exceed n={self.n}")
            if c != (0, 0):
                clean[k] = c
        object.__setattr__(self, "coeffs", dict(sorted(clean.items())))
        g = math.gcd(self.m, self.n, *self.coeffs)
        if g != 1:
            raise InvalidBranchError(
                f"exponents share the factor {g}: the parametrization is not one-to-one"
            )

    @property
    def top(self) -> int:
        """Largest exponent ``N`` present in ``w``."""
        return max(self.coeffs, default=self.n)

    @property
    def support(self) -> list[int]:
        return [self.n, *self.coeffs]

    def coefficient(self, k: int) -> GaussianRational:
        if k == self.n:
            return (Fraction(1), Fraction(0))
        return self.coeffs.get(k, (Fraction(0), Fraction(0)))

    def __hash__(self):
        return hash((self.m, self.n, tuple(self.coeffs.items())))

    def __str__(self):
        terms = [f"t^{self.n}"]
        for k, (re, im) in self.coeffs.items():
            if im == 0 and re == 1:
                terms.append(f"t^{k}")
            elif im == 0:
                terms.append(f"({re}) t^{k}")
            else:
                sign = "-" if im < 0 else "+"
                terms.append(f"({re} {sign} {abs(im)} i) t^{k}")
        return f"m={self.m}; w = " + " + ".join(terms)


@dataclass(frozen=True)
class CableCascade:
    """Cabling pairs ``(p_k, q_k)`` of the iterated torus knot ``O{p_1, q_1; ...}``."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        pairs = tuple((int(p), int(q)) for p, q in self.pairs)
        for p, q in pairs:
            if p < 1 or math.gcd(p, q) != 1:
                raise ValueError(f"invalid cabling pair ({p}, {q})")
        object.__setattr__(self, "pairs", pairs)

    @property
    def strands(self) -> int:
        return math.prod(p for p, _ in self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def __len__(self):
        return len(self.pairs)


def g_sequence(b: BranchParam) -> list[int]:
    """Covering degrees ``g(1), ..., g(N - n + 1)`` of the successive approximations."""
    out = []
    g = math.gcd(b.m, b.n)
    for k in range(1, b.top - b.n + 2):
        if k > 1 and (b.n + k - 1) in b.coeffs:
            g = math.gcd(g, b.n + k - 1)
        out.append(g)
    return out


def characteristic_exponents(b: BranchParam) -> list[int]:
    """Exponents at which the covering degree drops, in increasing order."""
    e = b.m
    out = []
    for k in b.support:
        if k % e:
            out.append(k)
            e = math.gcd(e, k)
    return out


def cable_cascade(b: BranchParam, validate: bool = False, **oracle_options) -> CableCascade:
    """Cabling pairs of the link of the branch.

    With characteristic exponents ``beta_1 < ... < beta_h`` and
    ``e_i = gcd(m, beta_1, ..., beta_i)``, the pairs are ``p_i = e_{i-1}/e_i``
    and ``q_i = a_i + p_{i-1} p_i q_{i-1}`` where ``a_1 = beta_1/e_1`` and
    ``a_i = (beta_i - beta_{i-1})/e_i``.  Exponents with no drop only give
    ``p = 1`` cablings, which do not change the knot type, and are skipped.

    With ``validate=True`` the braid of the cascade is compared with the
    numerically tracked braid of ``b`` and a mismatch raises
    :class:`CascadeValidationError`.
    """
    pairs = []
    e_prev, beta_prev, q_prev, p_prev = b.m, 0, 0, 1
    for beta in characteristic_exponents(b):
        e = math.gcd(e_prev, beta)
        p = e_prev // e
        a = (beta - beta_prev) // e
        q = a + p_prev * p * q_prev
        pairs.append((p, q))
        e_prev, beta_prev, q_prev, p_prev = e, beta, q, p
    cascade = CableCascade(tuple(pairs))
    if validate:
        _validate_against_oracle(b, cascade, **oracle_options)
    return cascade


def _validate_against_oracle(b: BranchParam, cascade: CableCascade, **options) -> None:
    from .braid import closure_invariants
    from .monodromy import track_parametric

    ours = closure_invariants(cascade_braid(cascade)).battery()
    tracked = track_parametric(b, **options)
    theirs = closure_invariants(tracked.word).battery()
    if ours != theirs:
        raise CascadeValidationError(
            f"cascade {cascade.pairs} gives battery {ours}, oracle gives {theirs}"
        )


def cascade_braid(c: CableCascade) -> BraidWord:
    """Strictly positive braid whose closure is the iterated torus knot of ``c``."""
    pairs = list(c.pairs)
    if not pairs:
        return BraidWord(1)
    p, q = pairs[0]
    word = torus_braid(p, q)
    for p, q in pairs[1:]:
        word = cable_braid(word, p, q)
    if word.strands > 1 and not is_strictly_positive(word):
        raise CascadeValidationError(f"cascade {c.pairs} produced a non-positive braid")
    return word


def milnor_number(b: BranchParam) -> int:
    """``mu = e(beta) - m + 1`` for the cascade braid ``beta`` on ``m`` strands."""
    word = cascade_braid(cable_cascade(b))
    return exponent_sum(word) - word.strands + 1


def branch_genus(b: BranchParam) -> int:
    word = cascade_braid(cable_cascade(b))
    return fiber_genus(word.strands, exponent_sum(word), 1)


def approximation(b: BranchParam, k: int) -> BranchParam:
    """Parametrization of the branch covered by the k-th approximation."""
    last = b.top - b.n + 1
    if not 1 <= k <= last:
        raise IndexRangeError(f"approximation index {k} outside 1..{last}")
    g = g_sequence(b)[k - 1]
    coeffs = {e // g: c for e, c in b.coeffs.items() if e <= b.n + k - 1}
    return BranchParam(b.m // g, b.n // g, coeffs)
