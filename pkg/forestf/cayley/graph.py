"""
The Cayley graph of F over {x0, x1}.

Vertices are canonical diagrams and every vertex v has the four edges
v -> g*v. Searches run breadth first in the fixed letter order and sort each
layer by the text form, so their results do not depend on set iteration
order.
"""

import logging
from collections import namedtuple

from forestf.utils.constants import ConvexityPairs
from forestf.utils.exceptions import ResourceCapExceeded
from forestf.utils.limits import ResourceGuard
from forestf.diagram.forest import (
    IDENTITY,
    inverse,
    multiply,
    neighbors,
)
from forestf.diagram.text import diagram_to_text
from forestf.metric.labels import norm


logger = logging.getLogger(__name__)


def _sorted_layer(elements):
    return tuple(sorted(elements, key=diagram_to_text))


class Ball:

    '''
    Elements of length at most `radius`, grouped by length.
    '''

    def __init__(self, radius, layers):
        self.radius = radius
        self.layers = tuple(map(tuple, layers))
        self.depth = {
            element: depth
            for depth, layer in enumerate(self.layers)
            for element in layer
        }

    def __len__(self):
        return len(self.depth)

    def __contains__(self, element):
        return element in self.depth

    def __iter__(self):
        for layer in self.layers:
            yield from layer

    @property
    def sphere_sizes(self):
        return [len(layer) for layer in self.layers]

    def restricted(self, radius):
        if radius > self.radius:
            raise ValueError(
                f'ball of radius {self.radius} cannot serve {radius}',
            )
        return Ball(radius, self.layers[:radius + 1])

    def stats(self):
        return {
            'radius': self.radius,
            'count': len(self),
            'spheres': self.sphere_sizes,
        }


def enumerate_ball(radius, limits=None, cache=None):
    '''
    Breadth-first enumeration from the identity with canonical-form dedup.
    '''
    if cache is not None:
        cached = cache.load(radius)
        if cached is not None:
            return cached

    guard = ResourceGuard(limits, label=f'ball({radius})')
    layers = [(IDENTITY,)]
    seen = {IDENTITY}

    for depth in range(1, radius + 1):
        found = set()
        for element in layers[-1]:
            for neighbor in neighbors(element):
                if neighbor in seen:
                    continue
                seen.add(neighbor)
                found.add(neighbor)
            reason = guard.exceeded(len(seen))
            if reason is not None:
                logger.warning('%s, stopping at depth %d', reason, depth)
                raise ResourceCapExceeded(
                    reason, partial=Ball(depth - 1, layers),
                )

        layers.append(_sorted_layer(found))
        logger.debug('ball layer %d: %d elements', depth, len(found))

    ball = Ball(radius, layers)
    if cache is not None:
        cache.store(ball)
    return ball


def distance(u, v):
    '''
    Graph distance through the length formula: the edge path u -> v spells
    a word w with w*u = v, so d(u, v) = l(v * u^-1).
    '''
    return norm(multiply(v, inverse(u)))


def bfs_distance(u, v, limits=None):
    '''
    Bidirectional breadth-first distance, independent of the length formula.
    '''
    if u == v:
        return 0

    guard = ResourceGuard(limits, label='bfs_distance')
    forward = {u: 0}
    backward = {v: 0}
    forward_frontier = [u]
    backward_frontier = [v]

    while forward_frontier and backward_frontier:
        if len(forward_frontier) > len(backward_frontier):
            forward, backward = backward, forward
            forward_frontier, backward_frontier = (
                backward_frontier, forward_frontier,
            )

        next_frontier = []
        best = None
        for element in forward_frontier:
            for neighbor in neighbors(element):
                if neighbor in backward:
                    total = forward[element] + 1 + backward[neighbor]
                    best = total if best is None else min(best, total)
                if neighbor not in forward:
                    forward[neighbor] = forward[element] + 1
                    next_frontier.append(neighbor)
        if best is not None:
            return best

        guard.check(len(forward) + len(backward))
        forward_frontier = next_frontier

    return None


def distance_conventions(u, v, limits=None):
    '''
    Both formula readings of the distance next to the breadth-first value.
    '''
    report = {
        'right_invariant': distance(u, v),
        'left_invariant': norm(multiply(inverse(u), v)),
        'bfs': bfs_distance(u, v, limits),
    }
    if report['right_invariant'] != report['bfs']:
        logger.warning('distance convention mismatch: %s', report)
    return report


def restricted_distance(u, v, radius, limits=None):
    '''
    Shortest path length from u to v through elements of length at most
    `radius`, or None when no such path exists. Membership is decided by
    the length formula, the ball is never enumerated.
    '''
    if norm(u) > radius or norm(v) > radius:
        return None
    if u == v:
        return 0

    guard = ResourceGuard(limits, label=f'restricted_distance(R={radius})')
    depth = {u: 0}
    frontier = [u]
    step = 0

    while frontier:
        step += 1
        next_frontier = []
        for element in frontier:
            for neighbor in neighbors(element):
                if neighbor in depth:
                    continue
                if norm(neighbor) > radius:
                    depth[neighbor] = None
                    continue
                if neighbor == v:
                    logger.debug('restricted target reached at step %d', step)
                    return step
                depth[neighbor] = step
                next_frontier.append(neighbor)

        reason = guard.exceeded(len(depth))
        if reason is not None:
            logger.warning('%s, last complete step %d', reason, step)
            raise ResourceCapExceeded(
                reason,
                partial={'explored': len(depth), 'lower_bound': step + 1},
            )
        logger.debug(
            'restricted step %d: frontier %d', step, len(next_frontier),
        )
        frontier = next_frontier

    return None


ConvexityResult = namedtuple(
    'ConvexityResult',
    ['radius', 'value', 'witness', 'pairs'],
)


def _two_step_targets(element):
    near = set(neighbors(element))
    targets = set()
    for neighbor in near:
        targets.update(neighbors(neighbor))
    targets -= near
    targets.discard(element)
    return targets


def _right_translates(element, sphere):
    return {multiply(element, shift) for shift in sphere}


def _in_ball_distances(start, targets, ball):
    remaining = set(targets)
    found = {}
    seen = {start}
    frontier = [start]
    step = 0

    while frontier and remaining:
        step += 1
        next_frontier = []
        for element in frontier:
            for neighbor in neighbors(element):
                if neighbor in seen or neighbor not in ball:
                    continue
                seen.add(neighbor)
                next_frontier.append(neighbor)
                if neighbor in remaining:
                    remaining.discard(neighbor)
                    found[neighbor] = step
        frontier = next_frontier
    return found


def convexity_search(radius, ball=None, limits=None, cache=None,
                     rule=ConvexityPairs.GRAPH):
    '''
    max d_B(g, h) over g, h in the ball with d(g, h) = 2. Under
    `ConvexityPairs.LEFT` the pairs are those with l(g^-1 h) = 2 instead;
    d_B is the in-ball graph distance either way.
    '''
    rule = ConvexityPairs(rule)
    if ball is None:
        ball = enumerate_ball(radius, limits, cache)
    elif ball.radius != radius:
        ball = ball.restricted(radius)

    sphere = None
    if rule == ConvexityPairs.LEFT:
        sphere = enumerate_ball(2).layers[2]

    guard = ResourceGuard(limits, label=f'convexity({radius})')
    best = 0
    witness = None
    pairs = 0

    for count, element in enumerate(ball, start=1):
        if sphere is None:
            candidates = _two_step_targets(element)
        else:
            candidates = _right_translates(element, sphere)
        targets = {target for target in candidates if target in ball}
        distances = _in_ball_distances(element, targets, ball)
        pairs += len(distances)

        for target in sorted(distances, key=diagram_to_text):
            if distances[target] > best:
                best = distances[target]
                witness = (element, target)

        reason = guard.exceeded(len(ball))
        if reason is not None:
            logger.warning('%s after %d sources', reason, count)
            raise ResourceCapExceeded(
                reason,
                partial=ConvexityResult(radius, best, witness, pairs),
            )

    logger.info(
        'c(%d) = %d over %d %s pairs', radius, best, pairs, rule.value,
    )
    return ConvexityResult(radius, best, witness, pairs)


def convexity_c(radius, ball=None, limits=None, cache=None,
                rule=ConvexityPairs.GRAPH):
    return convexity_search(radius, ball, limits, cache, rule).value

