import pytest

from forestf.utils.exceptions import LengthFormulaError
from tests.utils.words import *

from forestf.diagram.word import parse_word
from forestf.diagram.forest import IDENTITY, from_word, multiply
from forestf.diagram.text import parse_diagram
from forestf.cayley.witnesses import witnesses
from forestf.metric.labels import (
    length,
    norm,
    width,
    is_left_sided,
    width_bound_exceptions,
)
from forestf.metric.geodesic import (
    X2Facts,
    geodesic_word,
    geodesic_signatures,
    x2_element,
    x2_facts,
)


def test_geodesic_word():
    assert () == geodesic_word(IDENTITY)

    for text in WORDS:
        d = from_word(parse_word(text))
        word = geodesic_word(d)
        assert norm(d) == len(word)
        assert d == from_word(word)

    for n in range(1, 5):
        l_element, r_element = witnesses(n)
        assert 2 * n + 2 == len(geodesic_word(l_element))
        assert r_element == from_word(geodesic_word(r_element))


def test_geodesic_word_without_descent(mocker):
    mocker.patch('forestf.metric.geodesic.norm', return_value=1)
    with pytest.raises(LengthFormulaError):
        geodesic_word(from_word((x1,)))


def test_geodesic_of_sample():
    d = from_word(parse_word(SAMPLE_WORD_TEXT))
    assert SAMPLE_LENGTH == len(geodesic_word(d))


def test_x2():
    assert parse_diagram(X2_TEXT) == x2_element()
    assert X2Facts(True, 3) == x2_facts(IDENTITY)

    f = from_word(parse_word('x1 x0^-1'))
    assert X2Facts(True, 3) == x2_facts(f, x2_element())

    # x2 does not commute with x1.
    assert not x2_facts(parse_diagram(X1_TEXT)).commutes


def test_signatures_small_ball(ball4):
    signatures = geodesic_signatures(ball4)
    assert len(ball4) == len(signatures)
    assert frozenset({(0, 0, 0)}) == signatures[IDENTITY]
    assert frozenset({(1, 0, 0)}) == signatures[parse_diagram(X1_TEXT)]
    assert frozenset({(0, 0, 1)}) == signatures[parse_diagram(X0_TEXT)]

    for element, found in signatures.items():
        assert all(sum(signature) == ball4.depth[element]
                   for signature in found)


@pytest.mark.slow
def test_caret_split_geodesics(ball6):
    '''
    Some geodesic of every element spends one x1 per top caret, one x1^-1
    per bottom caret and l0 letters x0^+-1.
    '''
    signatures = geodesic_signatures(ball6)
    for element in ball6:
        breakdown = length(element)
        expected = (
            breakdown.top_carets,
            breakdown.bottom_carets,
            breakdown.x0_count,
        )
        assert expected in signatures[element], element


@pytest.mark.slow
def test_left_sided_elements(ball8):
    left_sided = [element for element in ball8 if is_left_sided(element)]
    assert IDENTITY in left_sided

    x2 = x2_element()
    for element in left_sided:
        assert norm(element) >= 2 * width(element), element
        assert X2Facts(True, 3) == x2_facts(element, x2), element
        assert multiply(x2, element) == multiply(element, x2)


@pytest.mark.slow
def test_width_bound_outside_left_sided(ball8):
    for element in ball8:
        assert norm(element) >= width(element), element

    exceptions = width_bound_exceptions(ball8)
    assert exceptions
    assert from_word((x0,)) in exceptions
    assert not any(is_left_sided(element) for element in exceptions)


@pytest.mark.slow
def test_geodesic_words_of_ball(ball6):
    for element in ball6:
        word = geodesic_word(element)
        assert ball6.depth[element] == len(word)
        assert element == from_word(word)
