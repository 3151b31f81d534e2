"""
Elements of F as piecewise-linear homeomorphisms of the real line.

A `PLMap` keeps its breakpoints (t, f(t)) in increasing order; left of the
first one f(t) = t + k_minus, right of the last one f(t) = t + k_plus.
Normal form has no breakpoint collinear with its neighbours, so two maps
are equal iff their normal forms are.

A diagram becomes a map by placing tree j of each window on
[j - pointer, j - pointer + 1), halving intervals at every caret, and
sending the i-th bottom leaf interval affinely onto the i-th top one.
With this anchoring x0 is t -> t - 1 and the map of f * g is the
composition f o g.
"""

import logging
from bisect import bisect_right
from collections import namedtuple
from fractions import Fraction

from forestf.diagram.word import parse_word, format_word, random_word
from forestf.diagram.forest import from_word, multiply
from .dyadic import Dyadic, dyadic, log2_of_power


logger = logging.getLogger(__name__)


class PLMap(namedtuple('PLMap', ['breakpoints', 'k_minus', 'k_plus'])):

    __slots__ = ()

    def slopes(self):
        points = self.breakpoints
        return [
            Fraction(y1 - y0) / (x1 - x0)
            for (x0, y0), (x1, y1) in zip(points, points[1:])
        ]

    def __call__(self, t):
        return evaluate(self, t)

    def to_json(self):
        return {
            'breakpoints': [
                x.to_parts() + y.to_parts() for x, y in self.breakpoints
            ],
            'k_minus': self.k_minus,
            'k_plus': self.k_plus,
        }


IDENTITY_MAP = PLMap((), 0, 0)


def _make_point(x, y):
    return dyadic(x), dyadic(y)


def normalize(breakpoints, k_minus, k_plus):
    '''
    Drop breakpoints collinear with their neighbours; the tails count as
    slope-1 neighbours.
    '''
    points = sorted(_make_point(x, y) for x, y in breakpoints)

    kept = []
    for idx, (x, y) in enumerate(points):
        if kept:
            last_x, last_y = kept[-1]
            incoming = Fraction(y - last_y) / (x - last_x)
        else:
            incoming = Fraction(1)
            if y - x != k_minus:
                raise ValueError('first breakpoint is off the left tail')

        if idx + 1 < len(points):
            next_x, next_y = points[idx + 1]
            outgoing = Fraction(next_y - y) / (next_x - x)
        else:
            outgoing = Fraction(1)
            if y - x != k_plus:
                raise ValueError('last breakpoint is off the right tail')

        if incoming != outgoing:
            kept.append((x, y))

    # removing a point can make its left neighbour removable.
    if len(kept) != len(points):
        return normalize(kept, k_minus, k_plus)

    if not kept and k_minus != k_plus:
        raise ValueError('a translation needs equal tail offsets')
    return PLMap(tuple(kept), k_minus, k_plus)


def normalize_map(plmap):
    return normalize(plmap.breakpoints, plmap.k_minus, plmap.k_plus)


def _leaf_intervals(tree, start, exponent, intervals):
    # the tree covers [start, start + 2^-exponent).
    if tree.is_leaf:
        intervals.append((start, exponent))
        return
    _leaf_intervals(tree.left, start, exponent + 1, intervals)
    _leaf_intervals(
        tree.right,
        Dyadic(start + Dyadic.from_parts(1, exponent + 1)),
        exponent + 1,
        intervals,
    )


def forest_intervals(forest):
    intervals = []
    for idx, tree in enumerate(forest.trees):
        _leaf_intervals(tree, Dyadic(idx - forest.pointer), 0, intervals)
    return intervals


def to_plmap(diagram):
    domain = forest_intervals(diagram.bottom)
    image = forest_intervals(diagram.top)

    breakpoints = [(x, y) for (x, _), (y, _) in zip(domain, image)]
    last_x, x_exponent = domain[-1]
    last_y, y_exponent = image[-1]
    breakpoints.append((
        Dyadic(last_x + Dyadic.from_parts(1, x_exponent)),
        Dyadic(last_y + Dyadic.from_parts(1, y_exponent)),
    ))

    bottom, top = diagram.bottom, diagram.top
    k_minus = bottom.pointer - top.pointer
    k_plus = (
        (len(top.trees) - top.pointer) - (len(bottom.trees) - bottom.pointer)
    )
    return normalize(breakpoints, k_minus, k_plus)


def evaluate(plmap, t):
    t = dyadic(t)
    points = plmap.breakpoints
    if not points or t <= points[0][0]:
        return Dyadic(t + plmap.k_minus)
    if t >= points[-1][0]:
        return Dyadic(t + plmap.k_plus)

    idx = bisect_right([x for x, _ in points], t) - 1
    (x0, y0), (x1, y1) = points[idx], points[idx + 1]
    power = log2_of_power(Fraction(y1 - y0) / (x1 - x0))
    return Dyadic(y0 + Dyadic(t - x0).scaled(power))


def pl_inverse(plmap):
    return normalize(
        [(y, x) for x, y in plmap.breakpoints],
        -plmap.k_minus,
        -plmap.k_plus,
    )


def compose(outer, inner):
    '''
    outer o inner: t -> outer(inner(t)).
    '''
    inverse_inner = pl_inverse(inner)
    xs = {x for x, _ in inner.breakpoints}
    xs.update(evaluate(inverse_inner, x) for x, _ in outer.breakpoints)

    return normalize(
        [(x, evaluate(outer, evaluate(inner, x))) for x in xs],
        outer.k_minus + inner.k_minus,
        outer.k_plus + inner.k_plus,
    )


def pl_equal(a, b):
    return normalize_map(a) == normalize_map(b)


def satisfies_pl_conditions(plmap):
    '''
    Strictly increasing dyadic breakpoints, power-of-2 slopes, integer
    tail offsets.
    '''
    points = plmap.breakpoints
    if not all(
        isinstance(x, Dyadic) and isinstance(y, Dyadic) for x, y in points
    ):
        return False
    for (x0, y0), (x1, y1) in zip(points, points[1:]):
        if not (x0 < x1 and y0 < y1):
            return False
    if any(log2_of_power(slope) is None for slope in plmap.slopes()):
        return False
    return isinstance(plmap.k_minus, int) and isinstance(plmap.k_plus, int)


_ORDER_SAMPLES = (
    ('x1', 'x0'),
    ('x0^-1 x1', 'x1^2 x0'),
    ('x1^-1 x0^2', 'x0^-1 x1^-1'),
)


def detect_composition_order(samples=_ORDER_SAMPLES):
    '''
    'f o g' if the map of f*g is the composition f o g on every sample,
    'g o f' if it is g o f, else 'neither'.
    '''
    forward = backward = True
    for f_text, g_text in samples:
        f = from_word(parse_word(f_text))
        g = from_word(parse_word(g_text))
        product = to_plmap(multiply(f, g))
        f_map, g_map = to_plmap(f), to_plmap(g)
        forward = forward and product == compose(f_map, g_map)
        backward = backward and product == compose(g_map, f_map)

    if forward and not backward:
        order = 'f o g'
    elif backward and not forward:
        order = 'g o f'
    else:
        order = 'neither'
    logger.info('map of a product composes as %s', order)
    return order


def homomorphism_sweep(rng, pairs=500, max_length=12):
    '''
    Checks the map of f*g against f o g on random word pairs. Returns the
    failing pairs as formatted words.
    '''
    failures = []
    for _ in range(pairs):
        f_word = random_word(rng, max_length)
        g_word = random_word(rng, max_length)
        f, g = from_word(f_word), from_word(g_word)
        if to_plmap(multiply(f, g)) != compose(to_plmap(f), to_plmap(g)):
            failures.append((format_word(f_word), format_word(g_word)))
    logger.debug('homomorphism sweep: %d pairs, %d failures',
                 pairs, len(failures))
    return failures
