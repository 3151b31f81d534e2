import json
import os
from functools import lru_cache

import jsonschema


SCHEMA_DIR = os.path.dirname(os.path.abspath(__file__))


@lru_cache(maxsize=None)
def _read_schema(name):
    path = os.path.join(SCHEMA_DIR, f'{name}.json')
    with open(path, encoding='utf-8') as fin:
        return json.load(fin)


def load_schema(name):
    schema = _read_schema(name)
    jsonschema.Draft7Validator.check_schema(schema)
    return schema


def validate_payload(payload, name):
    '''
    Raises jsonschema.ValidationError when `payload` breaks schema `name`.
    '''
    jsonschema.validate(payload, load_schema(name))
    return payload
