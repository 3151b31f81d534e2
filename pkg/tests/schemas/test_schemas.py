import json

import jsonschema
import pytest

from tests.utils.words import *

from forestf.diagram.word import parse_word
from forestf.diagram.forest import from_word
from forestf.metric.labels import length
from forestf.plmap.maps import to_plmap
from forestf.cayley.trace import analyze_path
from forestf.cayley.witnesses import (
    avoiding_path_word,
    verify_theorem,
    witnesses,
)
from forestf.schemas import load_schema, validate_payload

SCHEMA_NAMES = ['length', 'path_trace', 'plmap', 'witness_report']


def test_load_schema():
    for name in SCHEMA_NAMES:
        schema = load_schema(name)
        assert 'object' == schema['type']
        assert schema['required']


def test_emitted_json_validates():
    d = from_word(parse_word(SAMPLE_WORD_TEXT))
    l_element, _ = witnesses(2)
    payloads = [
        (length(d).to_json(), 'length'),
        (to_plmap(d).to_json(), 'plmap'),
        (analyze_path(l_element, avoiding_path_word(2)).to_json(),
         'path_trace'),
        (verify_theorem(3).to_json(), 'witness_report'),
    ]
    for payload, name in payloads:
        # what the CLI prints, not the in-memory payload.
        validate_payload(json.loads(json.dumps(payload)), name)


def test_wrong_types_rejected():
    bad = {
        'l1': 'x',
        'l0': -5,
        'total': None,
        'top_labels': 'QQ',
        'bottom_labels': 3,
        'weights': [7],
    }
    with pytest.raises(jsonschema.ValidationError):
        validate_payload(bad, 'length')

    payload = length(from_word((x1,))).to_json()
    for key, value in [
        ('l0', -1),
        ('top_labels', 'LQ'),
        ('weights', [3]),
        ('total', '2'),
    ]:
        broken = dict(payload, **{key: value})
        with pytest.raises(jsonschema.ValidationError):
            validate_payload(broken, 'length')


def test_missing_key_rejected():
    payload = to_plmap(from_word((x0,))).to_json()
    del payload['k_plus']
    with pytest.raises(jsonschema.ValidationError):
        validate_payload(payload, 'plmap')

    payload = to_plmap(from_word((x0,))).to_json()
    payload['breakpoints'].append([1, 0, 1])
    with pytest.raises(jsonschema.ValidationError):
        validate_payload(payload, 'plmap')
