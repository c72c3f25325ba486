"""Hypothesis strategies for braid words, bands and free words."""

from hypothesis import strategies as st

from curvebraids.artin import FreeWord
from curvebraids.braid import Band, BandRepresentation, BraidWord


@st.composite
def letters(draw, n, max_size=12):
    if n < 2:
        return []
    return draw(st.lists(st.integers(1, n - 1).flatmap(lambda i: st.sampled_from([i, -i])), max_size=max_size))


@st.composite
def braids(draw, n=None, max_size=12, min_strands=2, max_strands=5):
    if n is None:
        n = draw(st.integers(min_strands, max_strands))
    return BraidWord(n, draw(letters(n, max_size)))


@st.composite
def braid_pairs(draw, max_size=10):
    n = draw(st.integers(2, 5))
    return draw(braids(n, max_size)), draw(braids(n, max_size))


@st.composite
def free_words(draw, n, max_size=8):
    gens = st.integers(1, n).flatmap(lambda i: st.sampled_from([i, -i]))
    return FreeWord(n, draw(st.lists(gens, max_size=max_size)))


@st.composite
def bands(draw, n, positive=None):
    conj = draw(letters(n, 4))
    core = draw(st.integers(1, n - 1))
    sign = 1 if positive else draw(st.sampled_from([1, -1]))
    power = draw(st.integers(1, 3))
    return Band(n, tuple(conj), core, sign, power)


@st.composite
def band_reps(draw, positive=True, max_bands=5):
    n = draw(st.integers(2, 5))
    bs = draw(st.lists(bands(n, positive), max_size=max_bands))
    return BandRepresentation(n, tuple(bs))


@st.composite
def knot_braids(draw, max_size=12):
    """Random braid, extended by positive letters until its closure is a knot."""
    from curvebraids.braid import permutation

    b = draw(braids(max_size=max_size))
    n = b.strands
    while len(permutation(b).cycle_type()) > 1:
        cycles = len(permutation(b).cycle_type())
        for i in draw(st.permutations(range(1, n))):
            c = b * BraidWord(n, (i,))
            if len(permutation(c).cycle_type()) < cycles:
                b = c
                break
    return b
