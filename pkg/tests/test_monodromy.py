import math

import pytest

from curvebraids.braid import BraidWord, closure_invariants, is_strictly_positive, permutation
from curvebraids.errors import CollisionError, NegativeCrossingError, PoleError
from curvebraids.monodromy import (
    PolyCurve,
    critical_radius,
    positivity_check,
    track_parametric,
    track_polynomial,
)
from curvebraids.puiseux import BranchParam, cable_cascade, cascade_braid


def poly(*monomials):
    return PolyCurve(tuple(monomials))


CUSP = poly((0, 2, 1), (3, 0, -1))
NODE = poly((0, 2, 1), (2, 0, -1))
SMOOTH_PAIR = poly((0, 2, 1), (0, 0, -1))


def battery(word):
    return closure_invariants(word).battery()


class TestParametric:
    def test_cusp(self):
        t = track_parametric(BranchParam(2, 3), eps=0.25)
        assert battery(t.word) == battery(BraidWord(2, (1, 1, 1)))
        assert t.min_separation > 0
        assert permutation(t.word) == t.root_permutation

    def test_two_five(self):
        t = track_parametric(BranchParam(2, 5))
        inv = closure_invariants(t.word)
        assert (inv.exponent_sum, inv.components) == (5, 1)
        assert all(s > 0 for s in t.signs)

    def test_two_pairs(self):
        b = BranchParam(4, 6, {7: 1})
        t = track_parametric(b)
        assert is_strictly_positive(t.word)
        assert battery(t.word) == battery(cascade_braid(cable_cascade(b)))

    def test_default_radius_below_critical(self):
        b = BranchParam(4, 6, {7: 1})
        assert track_parametric(b).radius < critical_radius(b)

    def test_bad_eps(self):
        with pytest.raises(ValueError):
            track_parametric(BranchParam(2, 3), eps=0)

    def test_large_radius_is_flagged(self):
        t = track_parametric(BranchParam(4, 6, {7: 1}), eps=16.0)
        assert any("critical radius" in w for w in t.warnings)


class TestCriticalRadius:
    def test_monomial_branch_never_collides(self):
        assert critical_radius(BranchParam(2, 3)) == math.inf

    def test_two_terms(self):
        # w(t) - w(it) = 2 t^6 + (1 + i) t^7 vanishes at |t| = sqrt(2)
        assert critical_radius(BranchParam(4, 6, {7: 1})) == pytest.approx(4.0)

    def test_collision_is_refused(self):
        # right on the critical circle two fibre points meet
        b = BranchParam(2, 3, {5: -1})
        r = critical_radius(b)
        with pytest.raises(CollisionError):
            track_parametric(b, eps=r, retries=0)


class TestPolynomial:
    def test_cusp(self):
        t = track_polynomial(CUSP, eps=0.5)
        assert battery(t.word) == battery(BraidWord(2, (1, 1, 1)))

    def test_node(self):
        t = track_polynomial(NODE, eps=0.5)
        inv = closure_invariants(t.word)
        assert (inv.exponent_sum, inv.components, inv.linking_multiset()) == (2, 2, (1,))

    def test_no_singularity(self):
        t = track_polynomial(SMOOTH_PAIR, eps=0.5)
        assert t.word == BraidWord(2)

    def test_pole(self):
        # (z - 1/4) w^2 - z^3: the leading coefficient vanishes inside the disk
        f = poly((1, 2, 1), (0, 2, "-1/4"), (3, 0, -1))
        with pytest.raises(PoleError):
            track_polynomial(f, eps=0.5)
        assert closure_invariants(track_polynomial(f, eps=0.1).word).exponent_sum == 3

    def test_degree(self):
        with pytest.raises(ValueError):
            poly((2, 0, 1))


class TestPositivity:
    def test_trefoil(self):
        r = positivity_check(track_polynomial(CUSP, eps=0.5))
        assert r.ok and r.all_positive and r.strictly_positive

    def test_node(self):
        assert positivity_check(track_polynomial(NODE, eps=0.5)).all_positive

    def test_branch(self):
        r = positivity_check(track_parametric(BranchParam(4, 6, {7: 1})))
        assert r.ok and r.strictly_positive

    def test_large_radius_reports(self):
        # w^2 = z^2 (z - 1) at radius 2 also encloses the branch point z = 1
        f = poly((0, 2, 1), (3, 0, -1), (2, 0, 1))
        t = track_polynomial(f, eps=2.0)
        r = positivity_check(t, from_singularity=False)
        assert r.negative_crossings == tuple(i for i, s in enumerate(t.signs) if s < 0)
        if not r.ok:
            with pytest.raises(NegativeCrossingError):
                positivity_check(t)

    def test_negative_raises(self):
        t = track_parametric(BranchParam(2, 3))
        flipped = type(t)(**{**t.__dict__, "signs": (-1,) + t.signs[1:]})
        with pytest.raises(NegativeCrossingError):
            positivity_check(flipped)
        assert not positivity_check(flipped, from_singularity=False).ok


BRANCHES = [
    BranchParam(2, 3),
    BranchParam(3, 5),
    BranchParam(4, 6, {7: 1}),
    BranchParam(4, 6, {9: 1}),
    BranchParam(6, 9, {10: 1}),
]


@pytest.mark.parametrize("b", BRANCHES, ids=str)
def test_battery_stable_under_radius_angle_and_sampling(b):
    ref = track_parametric(b)
    want = battery(ref.word)
    assert battery(track_parametric(b, eps=ref.radius / 2).word) == want
    assert battery(track_parametric(b, theta=0.3).word) == want
    assert battery(track_parametric(b, theta=1.9).word) == want
    assert battery(track_parametric(b, samples=512).word) == want


@pytest.mark.parametrize("f", [CUSP, NODE], ids=["cusp", "node"])
def test_polynomial_stable(f):
    want = battery(track_polynomial(f, eps=0.5).word)
    assert battery(track_polynomial(f, eps=0.25).word) == want
    assert battery(track_polynomial(f, eps=0.5, theta=1.0).word) == want
    assert battery(track_polynomial(f, eps=0.5, samples=512).word) == want


def test_deterministic():
    b = BranchParam(4, 6, {7: 1})
    assert track_parametric(b).word == track_parametric(b).word
    assert track_polynomial(CUSP).word == track_polynomial(CUSP).word


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("MONODROMY_SAMPLES", "64")
    t = track_polynomial(NODE)
    assert closure_invariants(t.word).exponent_sum == 2
