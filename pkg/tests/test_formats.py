from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from curvebraids.braid import Band, BandRepresentation, BraidWord
from curvebraids.errors import FormatError
from curvebraids.formats import (
    dumps,
    format_band,
    format_brep,
    from_json,
    loads,
    parse_any,
    parse_band,
    parse_branch,
    parse_brep,
    parse_braid,
    parse_free_word,
    parse_presentation,
    to_json,
)
from curvebraids.knotgroup import AbelianInvariants, GroupPresentation
from curvebraids.monodromy import PolyCurve
from curvebraids.puiseux import BranchParam

from strategies import band_reps, braids, free_words


class TestBraids:
    def test_parse(self):
        assert parse_braid("B4: 1 2 -1 3") == BraidWord(4, (1, 2, -1, 3))
        assert parse_braid("B3:") == BraidWord(3)
        assert parse_braid(" B2 : 1 1 1 ") == BraidWord(2, (1, 1, 1))

    @pytest.mark.parametrize("text", ["B4 1 2", "B2: 1 x", "B2: 2", "C3: 1", "B3: (1)"])
    def test_errors(self, text):
        with pytest.raises(FormatError):
            parse_braid(text)


class TestBands:
    def test_grammar(self):
        assert parse_band("(3^3)", 4) == Band(4, (), 3, 1, 3)
        assert parse_band("(3 -2 : 1)", 4) == Band(4, (3, -2), 1)
        assert parse_band("(2 : -1)", 3) == Band(3, (2,), 1, -1)
        assert parse_band("(1 : 2^3)", 6) == Band(6, (1,), 2, 1, 3)

    def test_brep(self):
        r = parse_brep("B4: (3^3) (3 -2 : 1) (1^3) (2) (1^3) (3 2 : 1)")
        assert r.strands == 4 and len(r.bands) == 6 and r.length == 12
        assert format_brep(r) == "B4: (3^3) (3 -2 : 1) (1^3) (2) (1^3) (3 2 : 1)"
        assert format_band(Band(3, (2,), 1, -1, 2)) == "(2 : -1^2)"

    @pytest.mark.parametrize("text", ["B3: (1", "B3: (1) junk", "B3: (0)", "B3: (3)", "B3: (1 : )"])
    def test_errors(self, text):
        with pytest.raises(FormatError):
            parse_brep(text)


class TestOthers:
    def test_free_word(self):
        assert str(parse_free_word("F3: 1 -2 3")) == "F3: 1 -2 3"
        with pytest.raises(FormatError):
            parse_free_word("F2: 3")

    def test_presentation(self):
        p = parse_presentation("gens: 4; rel: x1 x2 x1 -x2 -x1 -x2; rel: x3 -x4")
        assert p == GroupPresentation(4, ((1, 2, 1, -2, -1, -2), (3, -4)))
        assert parse_presentation("gens: 2\nrel: 1 -2") == GroupPresentation(2, ((1, -2),))
        assert parse_presentation(str(p)) == p

    @pytest.mark.parametrize("text", ["rel: x1", "gens: two", "gens: 2; rel: x3", "gens: 2; foo: x1", "gens: 2; rel: y1"])
    def test_presentation_errors(self, text):
        with pytest.raises(FormatError):
            parse_presentation(text)

    def test_branch(self):
        b = parse_branch("m=4; w = t^6 + t^7 + (3/2 + 1/2 i) t^9")
        assert b == BranchParam(4, 6, {7: 1, 9: (Fraction(3, 2), Fraction(1, 2))})
        assert parse_branch(str(b)) == b
        assert parse_branch("m=2; w = t^3 + (-1/2) t^5").coefficient(5) == (Fraction(-1, 2), 0)
        c = parse_branch("m=2; w = t^3 + (- i) t^5")
        assert parse_branch(str(c)) == c
        assert c.coefficient(5) == (0, -1)

    @pytest.mark.parametrize(
        "text",
        ["m=4; w = t^6 + t^6", "m=4; w = 2 t^6", "m=4; w = t^8", "m=4 w = t^6", "m=2; w = t^3 + (x) t^5"],
    )
    def test_branch_errors(self, text):
        with pytest.raises(FormatError):
            parse_branch(text)


OBJECTS = [
    BraidWord(3, (1, -2)),
    Band(4, (2, -3), 1, -1, 2),
    BandRepresentation(3, (Band(3, (), 1), Band(3, (2,), 1, 1, 3))),
    GroupPresentation(2, ((1, 1), (2, 2, 2))),
    AbelianInvariants(1, (2, 6)),
    BranchParam(4, 6, {7: (Fraction(1, 3), -2)}),
    PolyCurve(((0, 2, 1), (3, 0, (-1, Fraction(1, 2))))),
]


@pytest.mark.parametrize("obj", OBJECTS, ids=lambda o: type(o).__name__)
def test_json_round_trip(obj):
    assert loads(dumps(obj)) == obj
    assert dumps(loads(dumps(obj))) == dumps(obj)


def test_untagged_json():
    assert from_json({"strands": 2, "word": [1]}) == BraidWord(2, (1,))
    assert from_json({"monomials": [{"zi": 0, "wj": 2, "re": "1", "im": "0"}, {"zi": 2, "wj": 0, "re": "-1"}]}) == PolyCurve(
        ((0, 2, 1), (2, 0, -1))
    )
    with pytest.raises(FormatError):
        from_json({"foo": 1})
    with pytest.raises(FormatError):
        loads("{nope")
    with pytest.raises(FormatError):
        from_json({"type": "braid", "strands": 2})


def test_parse_any():
    assert isinstance(parse_any("B3: 1 2"), BraidWord)
    assert isinstance(parse_any("B3: (1) (2)"), BandRepresentation)
    assert isinstance(parse_any("gens: 1"), GroupPresentation)
    assert isinstance(parse_any("m=2; w = t^3"), BranchParam)
    assert isinstance(parse_any(dumps(BraidWord(2, (1,)))), BraidWord)
    with pytest.raises(FormatError):
        parse_any("  ")
    with pytest.raises(FormatError):
        parse_any("hello")


@given(braids())
def test_braid_text_round_trip(b):
    assert parse_any(str(b)) == b
    assert loads(dumps(b)) == b


@given(band_reps(positive=False))
def test_brep_text_round_trip(r):
    if r.bands:
        assert parse_brep(format_brep(r)) == r
    assert loads(dumps(r)) == r


@given(st.integers(1, 5).flatmap(free_words))
def test_free_word_round_trip(w):
    assert parse_any(str(w)) == w
    assert to_json(w)["type"] == "free_word"
