"""
Registration and ordered execution of verification checks.

Example:

suite = VerificationSuite()

@suite.check(before_all=True)
def lengths(context):
    ...
    return {'passed': True, ...}

@suite.check(run_after=lengths)
def theorem(context):
    ...

report = suite.run(context)
"""

import logging
import time
from collections import namedtuple

from forestf.utils.constants import (
    CheckOptions,
    CheckStatus,
    VerificationScope,
)
from forestf.utils.exceptions import (
    CheckRegistrationError,
    ResourceCapExceeded,
    VerificationFailure,
)
from forestf.utils.helper_functions import (
    namedtuple_with_default,
    ordered_groups_of_checks,
    to_iterable,
)
from forestf.utils.limits import ResourceLimits


logger = logging.getLogger(__name__)


VerificationContext = namedtuple_with_default(
    'VerificationContext',
    ('n', 1),
    ('scope', VerificationScope.PARTIAL),
    ('limits', ResourceLimits()),
    ('seed', 0),
)


CheckResult = namedtuple(
    'CheckResult',
    ['name', 'status', 'payload', 'elapsed'],
)


class VerificationReport:

    def __init__(self, context, results):
        self.context = context
        self.results = results

    @property
    def passed(self):
        return all(
            result.status != CheckStatus.FAILED for result in self.results
        )

    @property
    def partial(self):
        return any(
            result.status in (CheckStatus.PARTIAL, CheckStatus.SKIPPED)
            for result in self.results
        )

    def failures(self):
        return [
            result for result in self.results
            if result.status == CheckStatus.FAILED
        ]

    def to_json(self, timings=False):
        checks = []
        for result in self.results:
            item = {
                'name': result.name,
                'status': result.status.value,
                'payload': result.payload,
            }
            if timings:
                item['elapsed'] = round(result.elapsed, 6)
            checks.append(item)

        return {
            'n': self.context.n,
            'scope': self.context.scope.value,
            'passed': self.passed,
            'partial': self.partial,
            'checks': checks,
        }


class VerificationSuite:

    def __init__(self):
        self._registered = []

    def check(self, callback=None, **options):
        '''
        Meaningful options:

        - before_all: this check runs first. At most one check per suite.
        - run_after: a registered check (or several). This check runs after
        them and is skipped if any of them did not pass.
        - after_all: this check runs last.
        '''
        if callback:
            if not callable(callback):
                raise CheckRegistrationError('check is not callable.')
            self._registered.append((callback, {}))
            return callback

        def _closure(callback):
            self._registered.append((callback, options))
            return callback

        return _closure

    @property
    def checks(self):
        return [check for check, _ in self._registered]

    def _prerequisites(self, check, options, root):
        prerequisites = set()
        if root is not None and check is not root:
            prerequisites.add(root)
        run_after = options.get(CheckOptions.RUN_AFTER.value)
        if run_after is not None:
            prerequisites.update(to_iterable(run_after))
        return prerequisites

    def _run_one(self, check, context):
        started = time.monotonic()
        try:
            payload = check(context)
        except VerificationFailure as exc:
            status = CheckStatus.FAILED
            payload = {'error': str(exc), 'mismatch': exc.mismatch}
        except ResourceCapExceeded as exc:
            status = CheckStatus.PARTIAL
            payload = {'error': str(exc)}
        else:
            if not payload.get('passed', True):
                status = CheckStatus.FAILED
            elif payload.get('partial'):
                status = CheckStatus.PARTIAL
            else:
                status = CheckStatus.PASSED
        return CheckResult(
            check.__name__, status, payload, time.monotonic() - started,
        )

    def run(self, context):
        groups = ordered_groups_of_checks(self._registered)
        options_of = dict(self._registered)

        root = None
        for check, options in self._registered:
            if options.get(CheckOptions.BEFORE_ALL.value):
                root = check

        status_of = {}
        results = []
        for group in groups:
            for check in group:
                blocked = sorted(
                    prerequisite.__name__
                    for prerequisite in self._prerequisites(
                        check, options_of[check], root,
                    )
                    if status_of.get(prerequisite) in (
                        CheckStatus.FAILED, CheckStatus.SKIPPED,
                    )
                )
                if blocked:
                    result = CheckResult(
                        check.__name__,
                        CheckStatus.SKIPPED,
                        {'blocked_by': blocked},
                        0.0,
                    )
                else:
                    logger.debug('running check %s', check.__name__)
                    result = self._run_one(check, context)

                if result.status == CheckStatus.FAILED:
                    logger.warning('check %s failed', result.name)
                status_of[check] = result.status
                results.append(result)

        return VerificationReport(context, results)
