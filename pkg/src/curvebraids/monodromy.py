"""Numerical braid monodromy over a circle ``|z| = eps``.

The fibre of a branch or of a polynomial curve over ``z = eps * exp(i phi)``
is followed continuously for ``phi`` in ``[0, 2 pi]``.  Projecting the fibre
onto the real line ``exp(i theta) R`` gives a braid diagram; each change in
the left-to-right order of two adjacent points is a letter, whose sign is the
direction in which the difference of the two points turns.

This is the only module that uses floating point.  Everything it produces is
a braid word, and callers compare braid words through exact invariants.
"""

from __future__ import annotations

import cmath
import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from .braid import BraidWord, Permutation, is_strictly_positive, permutation
from .errors import (
    CollisionError,
    NegativeCrossingError,
    PoleError,
    RootMatchingError,
)
from .puiseux import BranchParam, GaussianRational, _gaussian

__all__ = [
    "PolyCurve",
    "TrackedBraid",
    "PositivityReport",
    "critical_radius",
    "track_parametric",
    "track_polynomial",
    "positivity_check",
    "DEFAULT_TOL",
    "DEFAULT_SAMPLES",
    "MAX_SAMPLES",
]

DEFAULT_TOL = 1e-9
DEFAULT_SAMPLES = 256
MAX_SAMPLES = 2**20
N_ANGLES = 16
TWO_PI = 2 * math.pi


def _setting(value, env: str, default, cast):
    if value is not None:
        return cast(value)
    raw = os.environ.get(env)
    return cast(raw) if raw else default


def _to_complex(c: GaussianRational) -> complex:
    return complex(float(c[0]), float(c[1]))


@dataclass(frozen=True)
class PolyCurve:
    """``f(z, w) = sum c_ij z**i w**j`` with exact Gaussian-rational coefficients."""

    monomials: tuple[tuple[int, int, GaussianRational], ...]

    def __post_init__(self):
        merged: dict[tuple[int, int], tuple[Fraction, Fraction]] = {}
        for zi, wj, c in self.monomials:
            if zi < 0 or wj < 0:
                raise ValueError("monomial exponents must be non-negative")
            re, im = _gaussian(c)
            r0, i0 = merged.get((zi, wj), (Fraction(0), Fraction(0)))
            merged[(zi, wj)] = (r0 + re, i0 + im)
        mons = tuple(
            (zi, wj, c) for (zi, wj), c in sorted(merged.items()) if c != (0, 0)
        )
        object.__setattr__(self, "monomials", mons)
        if self.degree < 1:
            raise ValueError("curve must have degree >= 1 in w")

    @property
    def degree(self) -> int:
        return max((wj for _, wj, _ in self.monomials), default=0)

    def coefficient_poly(self, j: int) -> np.ndarray:
        """Coefficients of ``f_j(z)`` (the ``w**j`` coefficient), highest power first."""
        terms = [(zi, _to_complex(c)) for zi, wj, c in self.monomials if wj == j]
        if not terms:
            return np.zeros(1, dtype=complex)
        deg = max(zi for zi, _ in terms)
        out = np.zeros(deg + 1, dtype=complex)
        for zi, c in terms:
            out[deg - zi] += c
        return out

    def w_coefficients(self, z: complex) -> np.ndarray:
        return np.array(
            [np.polyval(self.coefficient_poly(j), z) for j in range(self.degree, -1, -1)]
        )


@dataclass(frozen=True)
class TrackedBraid:
    word: BraidWord
    samples: int
    min_separation: float
    radius: float
    theta: float
    signs: tuple[int, ...]
    source: str
    root_permutation: Permutation
    warnings: tuple[str, ...] = field(default=())


@dataclass(frozen=True)
class PositivityReport:
    all_positive: bool
    strictly_positive: bool
    negative_crossings: tuple[int, ...]
    ok: bool


class _Fibre:
    """Labelled fibre points as a function of the angle ``phi``."""

    size: int

    def start(self) -> np.ndarray:
        raise NotImplementedError

    def step(self, phi0: float, roots0: np.ndarray, phi1: float) -> np.ndarray:
        raise NotImplementedError


class _ParametricFibre(_Fibre):
    def __init__(self, b: BranchParam, eps: float):
        self.size = b.m
        self.m = b.m
        self.r = eps ** (1.0 / b.m)
        self.terms = [(k, _to_complex(b.coefficient(k))) for k in b.support]

    def at(self, phi: float) -> np.ndarray:
        k = np.arange(self.m)
        t = self.r * np.exp(1j * (phi + TWO_PI * k) / self.m)
        return sum(c * t**e for e, c in self.terms)

    def start(self):
        return self.at(0.0)

    def step(self, phi0, roots0, phi1):
        return self.at(phi1)


class _PolynomialFibre(_Fibre):
    def __init__(self, f: PolyCurve, eps: float):
        self.size = f.degree
        self.f = f
        self.eps = eps

    def roots(self, phi: float) -> np.ndarray:
        coeffs = self.f.w_coefficients(self.eps * cmath.exp(1j * phi))
        return np.roots(coeffs)

    def start(self):
        return np.sort_complex(self.roots(0.0))

    def step(self, phi0, roots0, phi1):
        new = self.roots(phi1)
        if len(new) != len(roots0):
            raise RootMatchingError("root count changed along the circle")
        sep = _min_separation(roots0)
        dist = np.abs(roots0[:, None] - new[None, :])
        choice = np.argmin(dist, axis=1)
        if len(set(choice.tolist())) != len(choice):
            raise RootMatchingError("nearest-neighbour matching is not injective")
        if np.any(dist[np.arange(len(choice)), choice] > 0.5 * sep):
            raise RootMatchingError("matched root is farther than half the separation")
        return new[choice]


def _min_separation(roots: np.ndarray) -> float:
    if len(roots) < 2:
        return math.inf
    d = np.abs(roots[:, None] - roots[None, :])
    return float(d[np.triu_indices(len(roots), 1)].min())


def _scale(roots: np.ndarray) -> float:
    return max(float(np.abs(roots).max()), 1e-300)


def _sample_loop(fibre: _Fibre, samples: int, tol: float, max_samples: int):
    """Adaptive continuation over ``[0, 2 pi]``.

    A step is accepted when no point moves more than a quarter of the current
    minimum separation; that bounds the rotation of every pairwise difference
    by 30 degrees, so no pair can swap twice inside one step.
    """
    h0 = TWO_PI / samples
    hmin = TWO_PI / max_samples
    phi = 0.0
    roots = fibre.start()
    phis = [phi]
    fibres = [roots]
    min_sep = _min_separation(roots)
    if min_sep <= tol * _scale(roots):
        raise CollisionError(f"fibre points collide at phi=0 (separation {min_sep:.3g})")
    h = h0
    while phi < TWO_PI:
        nxt = min(phi + h, TWO_PI)
        sep = _min_separation(roots)
        try:
            new = fibre.step(phi, roots, nxt)
            ok = float(np.abs(new - roots).max()) <= 0.25 * sep
        except RootMatchingError:
            if h <= hmin:
                raise
            ok = False
        if not ok:
            if h <= hmin:
                raise CollisionError(
                    f"step size fell below 2pi/{max_samples} near phi={phi:.6f}"
                )
            h /= 2
            continue
        new_sep = _min_separation(new)
        if new_sep <= tol * _scale(new):
            raise CollisionError(
                f"fibre points collide near phi={nxt:.6f} (separation {new_sep:.3g})"
            )
        min_sep = min(min_sep, new_sep)
        phi, roots = nxt, new
        phis.append(phi)
        fibres.append(roots)
        if len(phis) > max_samples:
            raise CollisionError("sample cap exceeded")
        h = min(h * 2, h0)
    return phis, fibres, min_sep


def _order(roots: np.ndarray, theta: float) -> list[int]:
    s = (roots * cmath.exp(-1j * theta)).real
    return sorted(range(len(roots)), key=lambda k: (s[k], k))


def _crossing_events(phis, fibres, theta):
    rot = cmath.exp(-1j * theta)
    events = []
    for k in range(len(phis) - 1):
        s0 = (fibres[k] * rot).real
        s1 = (fibres[k + 1] * rot).real
        n = len(s0)
        for a in range(n):
            for b in range(a + 1, n):
                d0, d1 = s0[a] - s0[b], s1[a] - s1[b]
                if d0 == 0 or d0 * d1 < 0:
                    frac = d0 / (d0 - d1) if d0 != d1 else 0.0
                    events.append((phis[k] + frac * (phis[k + 1] - phis[k]), a, b))
    return events


def _angle_score(phis, fibres, theta) -> float:
    events = sorted(_crossing_events(phis, fibres, theta))
    if len(events) < 2:
        return math.inf
    gaps = [b[0] - a[0] for a, b in zip(events, events[1:])]
    # closing gap across phi = 2 pi
    gaps.append(events[0][0] + TWO_PI - events[-1][0])
    return min(gaps)


def _choose_theta(phis, fibres) -> float:
    candidates = [math.pi * (c + 0.37) / N_ANGLES for c in range(N_ANGLES)]
    scores = [_angle_score(phis, fibres, t) for t in candidates]
    return candidates[int(np.argmax(scores))]


def _read_word(fibre, phis, fibres, theta, max_depth=40):
    letters: list[int] = []
    warnings: list[str] = []
    extra = 0

    def emit(phi0, r0, phi1, r1, depth):
        nonlocal extra
        o0, o1 = _order(r0, theta), _order(r1, theta)
        if o0 == o1:
            return
        rank1 = {lab: i for i, lab in enumerate(o1)}
        swapped = []
        for i in range(len(o0)):
            for j in range(i + 1, len(o0)):
                if rank1[o0[i]] > rank1[o0[j]]:
                    swapped.append((i, j))
        single = len(swapped) == 1 and swapped[0][1] == swapped[0][0] + 1
        if single:
            i = swapped[0][0]
            a, b = o0[i], o0[i + 1]
            turn = cmath.phase((r1[a] - r1[b]) / (r0[a] - r0[b]))
            letters.append((i + 1) if turn > 0 else -(i + 1))
            return
        if depth < max_depth:
            mid = 0.5 * (phi0 + phi1)
            rm = fibre.step(phi0, r0, mid)
            extra += 1
            emit(phi0, r0, mid, rm, depth + 1)
            emit(mid, rm, phi1, r1, depth + 1)
            return
        positions = sorted(i for i, j in swapped)
        disjoint = all(j == i + 1 for i, j in swapped) and all(
            q - p >= 2 for p, q in zip(positions, positions[1:])
        )
        if not disjoint:
            raise CollisionError(
                f"projection at theta={theta:.4f} is not in general position near phi={phi0:.6f}"
            )
        warnings.append(phi0)
        for i in positions:
            a, b = o0[i], o0[i + 1]
            turn = cmath.phase((r1[a] - r1[b]) / (r0[a] - r0[b]))
            letters.append((i + 1) if turn > 0 else -(i + 1))

    for k in range(len(phis) - 1):
        emit(phis[k], fibres[k], phis[k + 1], fibres[k + 1], 0)
    return letters, warnings, extra


def _track(fibre: _Fibre, eps, theta, samples, tol, max_samples, source) -> TrackedBraid:
    phis, fibres, min_sep = _sample_loop(fibre, samples, tol, max_samples)
    if theta is None:
        theta = _choose_theta(phis, fibres)
    letters, simultaneous, extra = _read_word(fibre, phis, fibres, theta)
    warnings = []
    if simultaneous:
        warnings.append(
            f"{len(simultaneous)} groups of simultaneous commuting crossings "
            f"(first near phi={simultaneous[0]:.6f})"
        )
    n = fibre.size
    word = BraidWord(n, letters)

    # permutation of the fibre after one turn, in projection positions
    start, end = fibres[0], fibres[-1]
    dist = np.abs(end[:, None] - start[None, :])
    tau = np.argmin(dist, axis=1)  # end of label L sits where label tau[L] started
    if len(set(tau.tolist())) != n:
        raise RootMatchingError("fibre does not close up after one turn")
    o0 = _order(start, theta)
    pos0 = {lab: i for i, lab in enumerate(o0)}
    images = [0] * n
    for lab in range(n):
        images[pos0[lab]] = pos0[int(tau[lab])] + 1
    root_perm = Permutation(tuple(images))
    if permutation(word) != root_perm:
        raise RootMatchingError(
            "braid word permutation disagrees with the observed root permutation"
        )
    return TrackedBraid(
        word=word,
        samples=len(phis) + extra,
        min_separation=min_sep,
        radius=eps,
        theta=theta,
        signs=tuple(1 if x > 0 else -1 for x in letters),
        source=source,
        root_permutation=root_perm,
        warnings=tuple(warnings),
    )


def critical_radius(b: BranchParam) -> float:
    """Smallest ``|z| > 0`` over which two fibre points of the branch coincide.

    Points ``w(t)`` and ``w(zeta t)`` with ``zeta**m = 1`` meet at the nonzero
    roots of ``sum c_k (1 - zeta**k) t**k``; the radius is ``|t|**m``.
    """
    best = math.inf
    terms = [(k, _to_complex(b.coefficient(k))) for k in b.support]
    for j in range(1, b.m):
        zeta = cmath.exp(TWO_PI * 1j * j / b.m)
        coeff = {k: c * (1 - zeta**k) for k, c in terms if abs(1 - zeta**k) > 1e-12}
        low, high = min(coeff), max(coeff)
        poly = np.zeros(high - low + 1, dtype=complex)
        for k, c in coeff.items():
            poly[high - k] = c
        for r in np.roots(poly) if len(poly) > 1 else ():
            if abs(r) > 0:
                best = min(best, abs(r) ** b.m)
    return best


def track_parametric(
    b: BranchParam,
    eps: float | None = None,
    theta: float | None = None,
    samples: int | None = None,
    tol: float | None = None,
    max_samples: int = MAX_SAMPLES,
    retries: int = 6,
) -> TrackedBraid:
    """Closed braid traced by the branch over ``|z| = eps``.

    The default radius is ``min(1/4, critical_radius(b) / 2)``.  A radius
    beyond the critical one is tracked anyway, with a warning, since the
    braid then also encircles other branch points.  On a collision the radius
    is halved, at most ``retries`` times.
    """
    crit = critical_radius(b)
    if eps is None:
        eps = min(0.25, crit / 2)
    if eps <= 0:
        raise ValueError("eps must be positive")
    samples = _setting(samples, "MONODROMY_SAMPLES", DEFAULT_SAMPLES, int)
    tol = _setting(tol, "MONODROMY_TOL", DEFAULT_TOL, float)
    notes: list[str] = []
    if eps >= crit:
        notes.append(
            f"eps={eps:g} is not below the critical radius {crit:.6g}; "
            "the braid is not the link of the singularity"
        )
    for attempt in range(retries + 1):
        try:
            tb = _track(_ParametricFibre(b, eps), eps, theta, samples, tol, max_samples, "parametric")
        except CollisionError as exc:
            if attempt == retries:
                raise
            notes.append(f"eps={eps:g}: {exc}; retrying with eps/2")
            eps /= 2
            continue
        if notes:
            tb = TrackedBraid(**{**tb.__dict__, "warnings": tuple(notes) + tb.warnings})
        return tb
    raise AssertionError("unreachable")


def track_polynomial(
    f: PolyCurve,
    eps: float = 0.5,
    theta: float | None = None,
    samples: int | None = None,
    tol: float | None = None,
    max_samples: int = MAX_SAMPLES,
    pole_margin: float = 1e-6,
) -> TrackedBraid:
    """Closed braid traced by the roots in ``w`` of ``f(z, w)`` over ``|z| = eps``."""
    if eps <= 0:
        raise ValueError("eps must be positive")
    samples = _setting(samples, "MONODROMY_SAMPLES", DEFAULT_SAMPLES, int)
    tol = _setting(tol, "MONODROMY_TOL", DEFAULT_TOL, float)
    lead = np.trim_zeros(f.coefficient_poly(f.degree), "f")
    if len(lead) == 0:
        raise PoleError("leading coefficient in w is identically zero")
    if len(lead) > 1:
        zeros = np.roots(lead)
        if np.any(np.abs(zeros) <= eps * (1 + pole_margin)):
            raise PoleError(
                f"leading coefficient vanishes in |z| <= {eps}: poles in the fibre"
            )
    return _track(_PolynomialFibre(f, eps), eps, theta, samples, tol, max_samples, "polynomial")


def positivity_check(t: TrackedBraid, from_singularity: bool = True) -> PositivityReport:
    """Check that every crossing is positive (and, for branches, that the word is
    strictly positive).  Failures raise when ``from_singularity`` is set."""
    negatives = tuple(i for i, s in enumerate(t.signs) if s < 0)
    strictly = is_strictly_positive(t.word)
    ok = not negatives and (strictly or t.source != "parametric")
    report = PositivityReport(
        all_positive=not negatives,
        strictly_positive=strictly,
        negative_crossings=negatives,
        ok=ok,
    )
    if from_singularity and not ok:
        raise NegativeCrossingError(
            f"{len(negatives)} negative crossing(s) in a singularity braid", report
        )
    return report
