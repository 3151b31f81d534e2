"""
The pair l, r that keeps F from being minimally almost convex, and the
checks run against it.

    l = x0^-2 x1 x0^(n+1) x1^-n        r = x0^2 l

l and r share every caret and differ only in the top pointer. They are at
distance 2, both have length 2n+2, and every path between them inside the
ball of radius 2n+2 has length at least 4n+4.
"""

import logging
from collections import namedtuple
from itertools import product

from forestf.utils.exceptions import ResourceCapExceeded
from forestf.diagram.word import (
    Letter,
    LETTERS,
    parse_word,
    format_word,
)
from forestf.diagram.forest import (
    IDENTITY,
    apply_generator,
    apply_word,
    from_word,
)
from forestf.diagram.text import diagram_to_text
from forestf.metric.labels import length, norm
from .graph import distance, restricted_distance


logger = logging.getLogger(__name__)


def witness_words(n):
    l_word = parse_word(f'x0^-2 x1 x0^{n + 1} x1^-{n}')
    return l_word, (Letter.X0,) * 2 + l_word


def _require_positive(n):
    if n < 1:
        raise ValueError(f'witnesses need n >= 1, got {n}')


def witnesses(n):
    _require_positive(n)
    l_word, r_word = witness_words(n)
    return from_word(l_word), from_word(r_word)


def alternate_witnesses(n):
    '''
    l' = x1^-1 x0^-n x1 x0^(n-1) and r' = x0^2 l', another pair at distance
    2 that differs only in the top pointer.
    '''
    _require_positive(n)
    l_word = parse_word(f'x1^-1 x0^-{n} x1 x0^{n - 1}')
    l_alt = from_word(l_word)
    return l_alt, apply_word((Letter.X0,) * 2, l_alt)


def avoiding_path_word(n):
    '''
    A path of length 4n+4 from l to r inside the ball. For n >= 2 it never
    visits the identity; for n = 1 its fourth vertex is the identity.
    '''
    return parse_word(
        f'(x1 x0^{n + 1}) (x1^-1 x0^-{n}) (x1^-1 x0^{n}) (x1 x0^{1 - n})',
    )


def identity_path_word(n):
    '''
    A path of length 4n+4 from l to r inside the ball through the identity.
    '''
    return parse_word(
        f'(x1 x0^{n + 1}) (x1^-{n} x0^-1) (x1^-1 x0 x1^{n - 1}) '
        f'(x1 x0^{1 - n})',
    )


# only stated for n = 8.
WIDE_PATH_N = 8
WIDE_PATH_TEXT = (
    '(x1 x0^7 x1^-4 x0^2) (x1^-1 x0^-4) (x1^-1 x0^4) (x1 x0^-2 x1^4 x0^-5)'
)


def wide_path_word():
    return parse_word(WIDE_PATH_TEXT)


def alternate_detour_word(n):
    '''
    Candidate path from l' to r'. Reported, never asserted.
    '''
    return parse_word(
        f'(x0^{1 - n} x1) (x0^{n + 1} x1^-1) (x0^-{n} x1^-1) (x0^{n} x1)',
    )


def path_vertices(start, word):
    '''
    Vertices visited when `word` is applied to `start`, last letter first.
    '''
    vertices = [start]
    for letter in reversed(tuple(word)):
        vertices.append(apply_generator(letter, vertices[-1]))
    return vertices


class Mismatches(list):

    def expect(self, step, expected, actual):
        if expected != actual:
            self.append({
                'step': step,
                'expected': expected,
                'actual': actual,
            })


class WitnessReport(namedtuple(
    'WitnessReport',
    [
        'n',
        'l',
        'r',
        'length_l',
        'length_r',
        'carets',
        'distance',
        'restricted_distance',
        'partial',
        'mismatches',
    ],
)):

    __slots__ = ()

    def to_json(self):
        return {
            'n': self.n,
            'l': diagram_to_text(self.l),
            'r': diagram_to_text(self.r),
            'length_l': self.length_l,
            'length_r': self.length_r,
            'carets': self.carets,
            'distance': self.distance,
            'radius': 2 * self.n + 2,
            'restricted_distance': self.restricted_distance,
            'partial': self.partial,
            'passed': not self.mismatches,
            'mismatches': list(self.mismatches),
        }


def verify_theorem(n, limits=None, restricted=None):
    '''
    Checks d(l, r) = 2, l(l) = l(r) = 2n+2, n+1 carets, and, by
    restricted search, that the shortest in-ball path has length 4n+4,
    which makes 2m the convexity value at radius m = 2n+2.

    The restricted search runs by default for n <= 2 only; a resource cap
    yields a partial report.
    '''
    l_element, r_element = witnesses(n)
    radius = 2 * n + 2
    mismatches = Mismatches()

    length_l = norm(l_element)
    length_r = norm(r_element)
    carets = length(l_element).caret_count
    mismatches.expect('length(l)', radius, length_l)
    mismatches.expect('length(r)', radius, length_r)
    mismatches.expect('carets(l)', n + 1, carets)
    mismatches.expect('carets(r)', n + 1, length(r_element).caret_count)
    mismatches.expect('length(x0 l)', radius + 1,
                      norm(apply_generator(Letter.X0, l_element)))
    mismatches.expect(
        'l and r differ only in the top pointer', True,
        l_element.top.trees == r_element.top.trees and
        l_element.bottom == r_element.bottom,
    )

    graph_distance = distance(l_element, r_element)
    mismatches.expect('d(l, r)', 2, graph_distance)

    if restricted is None:
        restricted = n <= 2

    in_ball = None
    partial = not restricted
    if restricted:
        try:
            in_ball = restricted_distance(l_element, r_element, radius, limits)
        except ResourceCapExceeded as exc:
            logger.warning('restricted search for n=%d capped: %s', n, exc)
            partial = True
        else:
            mismatches.expect('restricted_distance(l, r)', 4 * n + 4, in_ball)

    return WitnessReport(
        n, l_element, r_element,
        length_l, length_r, carets,
        graph_distance, in_ball, partial, mismatches,
    )


PathCheck = namedtuple(
    'PathCheck',
    ['name', 'word', 'steps', 'max_length', 'in_ball', 'visits_identity',
     'reaches_target'],
)


def check_path(name, start, target, word, radius):
    vertices = path_vertices(start, word)
    lengths = [norm(vertex) for vertex in vertices]
    return PathCheck(
        name,
        format_word(word),
        len(word),
        max(lengths),
        max(lengths) <= radius,
        IDENTITY in vertices,
        vertices[-1] == target,
    )


def _expect_path(mismatches, check, steps, visits_identity):
    mismatches.expect(f'{check.name}: steps', steps, check.steps)
    mismatches.expect(f'{check.name}: reaches r', True, check.reaches_target)
    mismatches.expect(f'{check.name}: stays in ball', True, check.in_ball)
    if visits_identity is not None:
        mismatches.expect(
            f'{check.name}: visits identity',
            visits_identity, check.visits_identity,
        )


def verify_example_paths(n):
    '''
    Walks the explicit long paths from l to r and the alternate pair.
    '''
    l_element, r_element = witnesses(n)
    radius = 2 * n + 2
    mismatches = Mismatches()
    paths = []

    # at n = 1 the avoiding word passes x0^-1 x1^-1 x0 x1 l = 1, so the
    # visit is reported only.
    checks = [
        (check_path('avoiding', l_element, r_element,
                    avoiding_path_word(n), radius),
         False if n >= 2 else None),
        (check_path('through_identity', l_element, r_element,
                    identity_path_word(n), radius), True),
    ]
    if n == WIDE_PATH_N:
        checks.append((check_path('wide', l_element, r_element,
                                  wide_path_word(), radius), None))

    for check, visits_identity in checks:
        _expect_path(mismatches, check, 4 * n + 4, visits_identity)
        paths.append(check._asdict())

    # the word for l' has 2n+1 letters, so the pair is measured only.
    l_alt, r_alt = alternate_witnesses(n)

    detour = check_path('alternate_detour', l_alt, r_alt,
                        alternate_detour_word(n), radius)

    return {
        'n': n,
        'radius': radius,
        'paths': paths,
        'alternate': {
            'l': diagram_to_text(l_alt),
            'r': diagram_to_text(r_alt),
            'length_l': norm(l_alt),
            'length_r': norm(r_alt),
            'length_x0_l': norm(apply_generator(Letter.X0, l_alt)),
            'detour': detour._asdict(),
        },
        'passed': not mismatches,
        'mismatches': list(mismatches),
    }


def exit_vertex(r_element):
    '''
    x0^-1 x1^-1 r, the vertex every short in-ball path into r comes from.
    '''
    return apply_word((Letter.X0_INV, Letter.X1_INV), r_element)


def is_backtracking(triple):
    return any(
        first is second.inverse
        for first, second in zip(triple, triple[1:])
    )


def verify_triples_from_r(n):
    '''
    Every reduced 3-step path leaving r either passes x0^-1 x1^-1 r or leaves
    the ball of radius 2n+2. Backtracking triples revisit a vertex, so they
    are listed but carry no claim.
    '''
    _, r_element = witnesses(n)
    radius = 2 * n + 2
    target = exit_vertex(r_element)
    mismatches = Mismatches()
    triples = []

    for triple in product(LETTERS, repeat=3):
        vertices = [r_element]
        for letter in triple:
            vertices.append(apply_generator(letter, vertices[-1]))

        passes = target in vertices[1:]
        leaves = any(norm(vertex) > radius for vertex in vertices[1:])
        backtracking = is_backtracking(triple)
        holds = backtracking or passes or leaves

        triples.append({
            'triple': format_word(triple),
            'backtracking': backtracking,
            'passes_exit': passes,
            'leaves_ball': leaves,
            'holds': holds,
        })
        if not holds:
            mismatches.append({
                'step': 'triple',
                'expected': 'passes exit vertex or leaves ball',
                'actual': format_word(triple),
            })

    # the last two steps of the long path stay inside the ball.
    mismatches.expect(
        'length(x0^-1 x1^-1 r) <= R', True, norm(target) <= radius,
    )
    mismatches.expect(
        'length(x1^-1 r) <= R', True,
        norm(apply_generator(Letter.X1_INV, r_element)) <= radius,
    )

    return {
        'n': n,
        'radius': radius,
        'exit_vertex': diagram_to_text(target),
        'triples': triples,
        'reduced': sum(not item['backtracking'] for item in triples),
        'passed': not mismatches,
        'mismatches': list(mismatches),
    }


def expected_weights(n):
    '''
    Pair weights of l, r and x0 l.
    '''
    head = (1,) * (n - 1)
    return {
        'l': head + (0, 2, 0),
        'r': head + (1, 1, 0),
        'x0 l': head + (1, 2, 0),
    }


def verify_witness_lengths(n):
    l_element, r_element = witnesses(n)
    radius = 2 * n + 2
    elements = {
        'l': l_element,
        'r': r_element,
        'x0 l': apply_generator(Letter.X0, l_element),
    }
    mismatches = Mismatches()
    observed = {}

    for name, element in elements.items():
        breakdown = length(element)
        observed[name] = breakdown.to_json()
        mismatches.expect(
            f'weights({name})',
            list(expected_weights(n)[name]),
            list(breakdown.labeling.weights),
        )

    mismatches.expect('length(l)', radius, observed['l']['total'])
    mismatches.expect('length(r)', radius, observed['r']['total'])
    mismatches.expect('length(x0 l)', radius + 1, observed['x0 l']['total'])
    mismatches.expect('carets(l)', n + 1, observed['l']['l1'])
    mismatches.expect('width(l)', n + 2, len(observed['l']['weights']))

    return {
        'n': n,
        'lengths': observed,
        'passed': not mismatches,
        'mismatches': list(mismatches),
    }
