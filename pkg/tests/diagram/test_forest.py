import random

import pytest

from tests.utils.words import *

from forestf.utils.exceptions import ForestStructureError
from forestf.diagram.tree import LEAF, caret
from forestf.diagram.word import parse_word, invert_word
from forestf.diagram.text import parse_diagram, diagram_to_text
from forestf.diagram.forest import (
    IDENTITY,
    identity,
    make_diagram,
    validate,
    pad,
    expand,
    reducible_leaves,
    reduce_at,
    trim,
    canonicalize,
    is_canonical,
    require_canonical,
    apply_generator,
    apply_word,
    from_word,
    inverse,
    is_semi_positive,
    to_word,
    stack,
    multiply_by_word_fold,
    multiply,
    neighbors,
)


def element(text):
    return from_word(parse_word(text))


def test_generators_on_identity():
    assert IDENTITY == identity()
    assert IDENTITY_TEXT == diagram_to_text(IDENTITY)

    expected = [X0_TEXT, X0_INV_TEXT, X1_TEXT, X1_INV_TEXT]
    for letter, text in zip([x0, X0, x1, X1], expected):
        assert text == diagram_to_text(apply_generator(letter, IDENTITY))

    assert expected == list(map(diagram_to_text, neighbors(IDENTITY)))


def test_from_word():
    assert parse_diagram(L2_TEXT) == element('x0^-2 x1 x0^3 x1^-2')
    assert parse_diagram(X2_TEXT) == element('x2')
    assert IDENTITY == element('x0 x1 x1^-1 x0^-1')

    # the last letter acts first.
    word = parse_word('x1 x0')
    assert apply_generator(x1, apply_generator(x0, IDENTITY)) == \
        from_word(word)
    assert apply_word(word, IDENTITY) == from_word(word)


def test_group_relations():
    # x_i^-1 x_n x_i = x_{n+1} for i < n.
    assert element('x3') == element('x1^-1 x2 x1')
    assert element('x4') == element('x0^-1 x3 x0')
    assert element('x4') == element('x2^-1 x3 x2')
    assert element('x0 x1^-1 x2') == element('x2 x0 x1^-1')
    assert element('x0 x1^-1 x3') == element('x3 x0 x1^-1')


def test_inverse_and_product():
    for text in WORDS:
        d = element(text)
        assert IDENTITY == multiply(d, inverse(d))
        assert IDENTITY == multiply(inverse(d), d)
        assert inverse(d) == from_word(invert_word(parse_word(text)))


def test_multiply_is_word_concatenation():
    for left in WORDS:
        for right in WORDS:
            expected = element(f'{left} {right}')
            assert expected == multiply(element(left), element(right))


def test_associativity():
    a, b, c = (element(text) for text in WORDS[-3:])
    assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))


def test_stack():
    f = element('x0^-1 x1 x0^2 x1')
    assert is_semi_positive(f)

    for text in WORDS:
        g = element(text)
        stacked = stack(f, g)
        assert stacked == multiply_by_word_fold(f, g)
        assert stacked == element(f'x0^-1 x1 x0^2 x1 {text}')
        assert is_canonical(stacked)

    # stacking can meet an opposing grounded caret of g.
    assert IDENTITY == stack(element('x1'), element('x1^-1'))

    with pytest.raises(ForestStructureError):
        stack(element('x1^-1'), IDENTITY)


def test_semi_positive():
    assert is_semi_positive(IDENTITY)
    assert is_semi_positive(element('x0^-3 x1^2 x0'))
    assert not is_semi_positive(element('x1^-1'))


def test_to_word():
    for text in WORDS:
        d = element(text)
        assert d == from_word(to_word(d))

    assert () == to_word(IDENTITY)
    assert (x1,) == to_word(element('x1'))


def test_validate():
    validate(IDENTITY)

    with pytest.raises(ForestStructureError):
        validate(make_diagram([caret()], 0, [LEAF], 0))
    with pytest.raises(ForestStructureError):
        validate(make_diagram([LEAF], 1, [LEAF], 0))
    with pytest.raises(ForestStructureError):
        validate(make_diagram([], 0, [], 0))


def test_trim_and_pad():
    padded = pad(IDENTITY, 2, 1)
    assert 4 == len(padded.top.trees)
    assert 2 == padded.top.pointer
    assert not is_canonical(padded)
    assert IDENTITY == trim(padded)
    assert IDENTITY == canonicalize(padded)

    with pytest.raises(ForestStructureError):
        require_canonical(padded)
    assert IDENTITY == require_canonical(IDENTITY)


def test_expand_and_reduce():
    expanded = expand(IDENTITY, 0)
    assert [0] == reducible_leaves(expanded)
    assert IDENTITY == reduce_at(expanded, 0)
    assert IDENTITY == canonicalize(expanded)

    with pytest.raises(ForestStructureError):
        reduce_at(IDENTITY, 0)


def test_reduction_is_confluent():
    for text in WORDS:
        d = element(text)
        for leaf in range(d.top.leaf_count):
            once = expand(d, leaf)
            assert d == canonicalize(once)
            for other in range(once.top.leaf_count):
                assert d == canonicalize(expand(once, other))


def test_canonical_equality():
    for text in WORDS:
        d = element(text)
        assert is_canonical(d)
        assert hash(d) == hash(element(text))
        assert len(neighbors(d)) == 4
        assert len(set(neighbors(d))) == 4


def reduce_in_order(diagram, rng):
    while True:
        leaves = reducible_leaves(diagram)
        if not leaves:
            return trim(diagram)
        diagram = reduce_at(diagram, rng.choice(leaves))


def test_reduction_order_is_irrelevant():
    rng = random.Random(11)
    for text in WORDS:
        d = element(text)
        expanded = pad(d, 1, 2)
        for _ in range(5):
            leaf = rng.randrange(expanded.top.leaf_count)
            expanded = expand(expanded, leaf)

        for _ in range(6):
            assert d == reduce_in_order(expanded, rng)


def test_associativity_on_ball(ball5):
    rng = random.Random(5)
    elements = list(ball5)
    for _ in range(100):
        a, b, c = rng.sample(elements, 3)
        assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))


def test_generators_are_bijections(ball5):
    for letter in (x0, x1):
        images = set()
        for d in ball5:
            image = apply_generator(letter, d)
            assert d == apply_generator(letter.inverse, image)
            assert d == apply_generator(
                letter, apply_generator(letter.inverse, d),
            )
            images.add(image)
        assert len(ball5) == len(images)


def test_generator_action_is_left_multiplication(ball4):
    for letter in (x0, X0, x1, X1):
        g = from_word((letter,))
        for d in ball4:
            assert apply_generator(letter, d) == multiply(g, d)


@pytest.mark.slow
def test_stack_on_ball(ball6):
    others = [element(text) for text in WORDS[1:4]]
    semi_positive = [f for f in ball6 if is_semi_positive(f)]
    assert IDENTITY in semi_positive

    for f in semi_positive:
        for g in others:
            assert stack(f, g) == multiply_by_word_fold(f, g)


@pytest.mark.slow
def test_to_word_on_ball(ball6):
    for d in ball6:
        assert d == from_word(to_word(d))
