from tests.utils.words import *

from forestf.diagram.word import parse_word
from forestf.diagram.forest import IDENTITY
from forestf.diagram.text import parse_diagram
from forestf.cayley.witnesses import witnesses, avoiding_path_word
from forestf.cayley.trace import analyze_path
from forestf.schemas import validate_payload


def test_trace_from_identity():
    trace = analyze_path(IDENTITY, parse_word('x0'))
    first, second = trace.steps

    assert 0 == first.index
    assert first.letter is None
    assert first.in_ball is None
    assert first.foot_on_critical

    assert x0 is second.letter
    assert 1 == second.right_foot
    assert 0 == second.critical_leaf
    assert 1 == second.foot_offset
    assert not second.jump

    assert [0] == trace.hits
    assert IDENTITY == trace.h_l == trace.h_r


def test_trace_jump():
    trace = analyze_path(parse_diagram(X2_TEXT), (x1,))
    assert 0 == trace.steps[0].foot_offset
    assert 2 == trace.steps[1].foot_offset
    assert [1] == trace.jumps


def test_trace_along_long_path():
    for n in range(1, 4):
        l_element, r_element = witnesses(n)
        trace = analyze_path(l_element, avoiding_path_word(n), 2 * n + 2)

        assert 4 * n + 5 == len(trace.steps)
        assert r_element == trace.steps[-1].element
        assert trace.steps[0].foot_offset < 0
        assert trace.steps[-1].foot_offset > 0
        assert all(step.in_ball for step in trace.steps)

        assert trace.h_l is not None
        assert trace.crossings_accounted()


def test_trace_json():
    l_element, _ = witnesses(1)
    payload = analyze_path(l_element, avoiding_path_word(1), 4).to_json()
    validate_payload(payload, 'path_trace')
    assert 9 == len(payload['steps'])
    assert payload['steps'][0]['letter'] is None
    assert 4 == payload['radius']
    assert isinstance(payload['h_l'], int)
