import logging
from collections import namedtuple

from forestf.utils.exceptions import LengthFormulaError
from forestf.diagram.word import (
    Letter,
    LETTERS,
    expand_higher_generator,
)
from forestf.diagram.forest import (
    apply_generator,
    from_word,
    multiply,
)
from .labels import norm


logger = logging.getLogger(__name__)


def geodesic_word(diagram):
    '''
    A minimum-length word for `diagram`. Walks down to the identity, always
    taking the first letter (in x0, x0^-1, x1, x1^-1 order) that lowers the
    length by one; the word is the inverted walk.
    '''
    current = diagram
    current_length = norm(current)
    walk = []

    while current_length:
        for letter in LETTERS:
            candidate = apply_generator(letter, current)
            candidate_length = norm(candidate)
            if candidate_length == current_length - 1:
                break
        else:
            raise LengthFormulaError(
                f'no descending neighbor at length {current_length}',
            )
        walk.append(letter)
        current = candidate
        current_length = candidate_length

    return tuple(letter.inverse for letter in walk)


X2Facts = namedtuple('X2Facts', ['commutes', 'length_shift'])


def x2_element():
    return from_word(expand_higher_generator(2))


def x2_facts(diagram, x2=None):
    if x2 is None:
        x2 = x2_element()
    left = multiply(x2, diagram)
    right = multiply(diagram, x2)
    return X2Facts(left == right, norm(left) - norm(diagram))


_SIGNATURE_STEP = {
    Letter.X1: (1, 0, 0),
    Letter.X1_INV: (0, 1, 0),
    Letter.X0: (0, 0, 1),
    Letter.X0_INV: (0, 0, 1),
}


def _add(signature, step):
    return tuple(a + b for a, b in zip(signature, step))


def geodesic_signatures(ball):
    '''
    For every element of `ball`: the set of (x1 count, x1^-1 count, x0^+-1
    count) triples realised by its minimum-length words. Built layer by
    layer; an edge u -> g*u between consecutive layers extends every
    signature of u by the letter g.
    '''
    signatures = {}
    for depth, layer in enumerate(ball.layers):
        for element in layer:
            if depth == 0:
                signatures[element] = frozenset({(0, 0, 0)})
                continue

            collected = set()
            for letter in LETTERS:
                previous = apply_generator(letter.inverse, element)
                if ball.depth.get(previous) != depth - 1:
                    continue
                step = _SIGNATURE_STEP[letter]
                collected.update(
                    _add(signature, step) for signature in signatures[previous]
                )
            signatures[element] = frozenset(collected)

        logger.debug('signatures done for layer %d', depth)
    return signatures
