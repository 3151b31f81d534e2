import random

import pytest

from tests.utils.words import *

from forestf.diagram.word import parse_word
from forestf.diagram.forest import IDENTITY, from_word, inverse, multiply
from forestf.diagram.text import parse_diagram
from forestf.plmap.dyadic import Dyadic
from forestf.plmap.maps import (
    PLMap,
    IDENTITY_MAP,
    normalize,
    forest_intervals,
    to_plmap,
    evaluate,
    pl_inverse,
    compose,
    pl_equal,
    satisfies_pl_conditions,
    detect_composition_order,
    homomorphism_sweep,
)
from forestf.schemas import validate_payload


def element(text):
    return from_word(parse_word(text))


def test_generators():
    assert IDENTITY_MAP == to_plmap(IDENTITY)
    assert PLMap((), -1, -1) == to_plmap(parse_diagram(X0_TEXT))
    assert PLMap((), 1, 1) == to_plmap(parse_diagram(X0_INV_TEXT))

    x1_map = to_plmap(parse_diagram(X1_TEXT))
    assert ((0, 0), (2, 1)) == x1_map.breakpoints
    assert (0, -1) == (x1_map.k_minus, x1_map.k_plus)
    assert [Dyadic(1, 2)] == x1_map.slopes()


def test_evaluate():
    x0_map = to_plmap(parse_diagram(X0_TEXT))
    assert Dyadic(-1, 2) == evaluate(x0_map, Dyadic(1, 2))

    x1_map = to_plmap(parse_diagram(X1_TEXT))
    assert Dyadic(-5) == x1_map(-5)
    assert Dyadic(1, 2) == x1_map(1)
    assert Dyadic(3, 4) == x1_map(Dyadic(3, 2))
    assert Dyadic(2) == x1_map(3)
    assert isinstance(x1_map(Dyadic(1, 8)), Dyadic)


def test_forest_intervals():
    d = parse_diagram(X1_TEXT)
    assert [(0, 1), (Dyadic(1, 2), 1)] == forest_intervals(d.top)
    assert [(0, 0), (1, 0)] == forest_intervals(d.bottom)
    assert [(-1, 0), (0, 0)] == \
        forest_intervals(parse_diagram(X0_TEXT).top)


def test_normalize():
    assert IDENTITY_MAP == normalize([(0, 0), (1, 1), (5, 5)], 0, 0)
    assert PLMap((), 2, 2) == normalize([(0, 2)], 2, 2)

    with pytest.raises(ValueError):
        normalize([(0, 5)], 0, 0)
    with pytest.raises(ValueError):
        normalize([], 0, 1)


def test_homomorphism():
    assert 'f o g' == detect_composition_order()

    for left in WORDS:
        for right in WORDS[-3:]:
            f, g = element(left), element(right)
            assert to_plmap(multiply(f, g)) == \
                compose(to_plmap(f), to_plmap(g))


def test_inverse():
    for text in WORDS:
        d = element(text)
        plmap = to_plmap(d)
        assert pl_inverse(plmap) == to_plmap(inverse(d))
        assert IDENTITY_MAP == compose(plmap, pl_inverse(plmap))
        assert pl_equal(plmap, to_plmap(d))


def test_random_sweep():
    assert [] == homomorphism_sweep(random.Random(0), pairs=60)


@pytest.mark.slow
def test_full_random_sweep():
    assert [] == homomorphism_sweep(random.Random(0), pairs=500)


def test_maps_of_ball(ball4):
    maps = {to_plmap(d) for d in ball4}
    assert 161 == len(maps) == len(ball4)
    assert all(map(satisfies_pl_conditions, maps))
    assert IDENTITY_MAP in maps


@pytest.mark.slow
def test_maps_of_larger_ball(ball6):
    maps = {to_plmap(d) for d in ball6}
    assert 1381 == len(maps) == len(ball6)
    assert all(map(satisfies_pl_conditions, maps))


def test_pl_conditions():
    assert satisfies_pl_conditions(IDENTITY_MAP)
    assert not satisfies_pl_conditions(
        PLMap(((Dyadic(0), Dyadic(0)), (Dyadic(3), Dyadic(1))), 0, -2),
    )
    assert not satisfies_pl_conditions(PLMap(((0, 0),), 0, 0))


def test_plmap_json():
    payload = to_plmap(parse_diagram(X1_TEXT)).to_json()
    validate_payload(payload, 'plmap')
    assert [[0, 0, 0, 0], [2, 0, 1, 0]] == payload['breakpoints']
    assert 0 == payload['k_minus']
    assert -1 == payload['k_plus']
