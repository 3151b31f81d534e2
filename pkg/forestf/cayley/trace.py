"""
Right foot / critical leaf trace along a path.

The right foot of a diagram is the rightmost leaf of its pointed top tree,
the critical leaf the rightmost leaf of its pointed bottom tree, both as
window-leaf indices of the vertex's own diagram. The foot steps on the
critical leaf when the two indices coincide.
"""

from collections import namedtuple

from forestf.diagram.word import format_word
from forestf.diagram.forest import apply_generator
from forestf.diagram.text import diagram_to_text
from forestf.metric.labels import norm, right_foot, critical_leaf


class TraceStep(namedtuple(
    'TraceStep',
    [
        'index',
        'letter',
        'element',
        'length',
        'in_ball',
        'right_foot',
        'critical_leaf',
        'foot_offset',
        'jump',
    ],
)):

    __slots__ = ()

    @property
    def foot_on_critical(self):
        return self.foot_offset == 0


def _step_to_json(step):
    return {
        'index': step.index,
        'letter': None if step.letter is None else step.letter.value,
        'element': diagram_to_text(step.element),
        'length': step.length,
        'in_ball': step.in_ball,
        'right_foot': step.right_foot,
        'critical_leaf': step.critical_leaf,
        'foot_offset': step.foot_offset,
        'foot_on_critical': step.foot_on_critical,
        'jump': step.jump,
    }


class PathTrace(namedtuple('PathTrace', ['start', 'word', 'radius', 'steps'])):

    __slots__ = ()

    @property
    def hits(self):
        return [step.index for step in self.steps if step.foot_on_critical]

    @property
    def h_l(self):
        '''
        First vertex whose right foot steps on the critical leaf.
        '''
        hits = self.hits
        return self.steps[hits[0]].element if hits else None

    @property
    def h_r(self):
        hits = self.hits
        return self.steps[hits[-1]].element if hits else None

    @property
    def jumps(self):
        return [step.index for step in self.steps if step.jump]

    def crossings_accounted(self):
        '''
        Every sign change of the foot offset goes through zero or is a
        recorded jump.
        '''
        for previous, current in zip(self.steps, self.steps[1:]):
            crossed = previous.foot_offset * current.foot_offset < 0
            if crossed and not current.jump:
                return False
        return True

    def to_json(self):
        hits = self.hits
        return {
            'start': diagram_to_text(self.start),
            'word': format_word(self.word),
            'radius': self.radius,
            'steps': [_step_to_json(step) for step in self.steps],
            'h_l': hits[0] if hits else None,
            'h_r': hits[-1] if hits else None,
            'jumps': self.jumps,
        }


def _trace_step(index, letter, element, radius, previous_offset):
    foot = right_foot(element)
    critical = critical_leaf(element)
    offset = foot - critical
    element_length = norm(element)
    return TraceStep(
        index,
        letter,
        element,
        element_length,
        None if radius is None else element_length <= radius,
        foot,
        critical,
        offset,
        previous_offset is not None and abs(offset - previous_offset) > 1,
    )


def analyze_path(start, word, radius=None):
    '''
    Trace of the path that applies `word` to `start`, last letter first.
    Step 0 is the start vertex.
    '''
    word = tuple(word)
    steps = [_trace_step(0, None, start, radius, None)]
    element = start
    for index, letter in enumerate(reversed(word), start=1):
        element = apply_generator(letter, element)
        steps.append(
            _trace_step(index, letter, element, radius, steps[-1].foot_offset),
        )
    return PathTrace(start, word, radius, tuple(steps))
