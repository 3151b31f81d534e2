import time

from forestf.utils.exceptions import ResourceCapExceeded
from forestf.utils.helper_functions import namedtuple_with_default


DEFAULT_MAX_ELEMENTS = 10 ** 7

ResourceLimits = namedtuple_with_default(
    'ResourceLimits',
    ('max_elements', DEFAULT_MAX_ELEMENTS),
    ('max_seconds', None),
)


class ResourceGuard:

    '''
    Tracks one search against a `ResourceLimits`. Callers ask `exceeded`
    after every insertion and raise with their own partial result.
    '''

    def __init__(self, limits=None, label='search'):
        self.limits = limits or ResourceLimits()
        self.label = label
        self._started = time.monotonic()

    @property
    def elapsed(self):
        return time.monotonic() - self._started

    def exceeded(self, count):
        max_elements = self.limits.max_elements
        if max_elements is not None and count > max_elements:
            return f'{self.label}: more than {max_elements} elements'

        max_seconds = self.limits.max_seconds
        if max_seconds is not None and self.elapsed > max_seconds:
            return f'{self.label}: more than {max_seconds} seconds'

        return None

    def check(self, count, partial=None):
        reason = self.exceeded(count)
        if reason is not None:
            raise ResourceCapExceeded(reason, partial=partial)
