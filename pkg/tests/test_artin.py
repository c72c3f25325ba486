import pytest

from curvebraids.artin import (
    FreeWord,
    act,
    braids_equal,
    free_inverse,
    free_multiply,
    generator_images,
    product_preserves_total,
    total_product,
)
from curvebraids.braid import BraidWord, delta_squared, permutation
from curvebraids.errors import IndexRangeError, StrandMismatchError


def F(n, *letters):
    return FreeWord(n, letters)


def B(n, *letters):
    return BraidWord(n, letters)


class TestFreeWords:
    def test_multiply(self):
        assert free_multiply(F(3, 1), F(3, -1)) == F(3)
        assert free_multiply(F(3, 1, 2), F(3, -2, 3)) == F(3, 1, 3)
        assert F(3) * F(3, 2, -1) == F(3, 2, -1)

    def test_inverse(self):
        assert free_inverse(F(3, 1, -2, 3)) == F(3, -3, 2, -1)

    def test_rank_mismatch(self):
        with pytest.raises(StrandMismatchError):
            free_multiply(F(2, 1), F(3, 1))

    def test_letter_range(self):
        with pytest.raises(IndexRangeError):
            F(2, 3)

    def test_str(self):
        assert str(F(4, 1, -2)) == "F4: 1 -2"


class TestAction:
    def test_generator_images(self):
        assert act(F(2, 1), B(2, 1)) == F(2, 1, 2, -1)
        assert act(F(2, 2), B(2, 1)) == F(2, 1)
        assert act(F(3, 3), B(3, 1)) == F(3, 3)

    def test_inverse_generator(self):
        assert act(F(2, 1), B(2, -1)) == F(2, 2)
        assert act(F(2, 2), B(2, -1)) == F(2, -2, 1, 2)

    def test_square(self):
        assert act(F(2, 1), B(2, 1, 1)) == F(2, 1, 2, 1, -2, -1)
        assert act(F(2, 2), B(2, 1, 1)) == F(2, 1, 2, -1)

    def test_rank_mismatch(self):
        with pytest.raises(StrandMismatchError):
            act(F(2, 1), B(3, 1))

    def test_right_action(self):
        a, b = B(3, 1, -2), B(3, 2, 2, 1)
        w = F(3, 1, 3, -2)
        assert act(w, a * b) == act(act(w, a), b)

    def test_images_are_conjugates_of_generators(self):
        b = B(4, 1, -3, 2, 2, -1, 3)
        perm = permutation(b)
        for i, img in enumerate(generator_images(b), start=1):
            h = len(img) // 2
            assert img[:h] == tuple(-x for x in reversed(img[h + 1 :]))
            # the meridian at position i ends up as the meridian of the strand at perm^-1(i)
            assert img[h] == perm.inverse()(i)


class TestWordProblem:
    def test_braid_relations(self):
        assert braids_equal(B(3, 1, 2, 1), B(3, 2, 1, 2))
        assert braids_equal(B(4, 1, 3), B(4, 3, 1))
        assert braids_equal(B(4, 2, 3, 2, 1), B(4, 3, 2, 3, 1))

    def test_unequal(self):
        assert not braids_equal(B(3, 1), B(3, 2))
        assert not braids_equal(B(3, 1, 2), B(3, 2, 1))
        assert not braids_equal(B(2, 1), B(2, -1))

    def test_strand_mismatch(self):
        with pytest.raises(StrandMismatchError):
            braids_equal(B(3), B(4))

    def test_central_full_twist(self):
        d = delta_squared(4)
        g = B(4, 1, -2, 3)
        assert braids_equal(g * d * g.inverse(), d)
        assert not braids_equal(g * B(4, 1) * g.inverse(), B(4, 1))

    @pytest.mark.parametrize("n", range(2, 7))
    def test_full_twist_forms(self, n):
        assert braids_equal(delta_squared(n), delta_squared(n, "pure-product"))


class TestTotalProduct:
    def test_examples(self):
        assert total_product(3) == F(3, 1, 2, 3)
        assert product_preserves_total(B(2, 1))
        assert product_preserves_total(delta_squared(4))
        assert product_preserves_total(B(5, 1, -4, 2, 3, -3, -1, 4, 4, 2, -2, 1))
