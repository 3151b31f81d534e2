import pytest

from forestf.utils.constants import CheckStatus, VerificationScope
from forestf.utils.exceptions import (
    CheckRegistrationError,
    ResourceCapExceeded,
    VerificationFailure,
)
from forestf.verification.protocol import (
    VerificationContext,
    VerificationSuite,
)


def test_context_defaults():
    context = VerificationContext()
    assert 1 == context.n
    assert VerificationScope.PARTIAL == context.scope
    assert 0 == context.seed
    assert 3 == VerificationContext(n=3).n


def test_registration():
    suite = VerificationSuite()

    @suite.check
    def a(context):
        return {'passed': True}

    @suite.check(run_after=a)
    def b(context):
        return {'passed': True}

    assert [a, b] == suite.checks


def test_registration_errors():
    suite = VerificationSuite()
    with pytest.raises(CheckRegistrationError):
        suite.check(42)

    @suite.check(before_all=True)
    def a(context):
        return {'passed': True}

    @suite.check(before_all=True)
    def b(context):
        return {'passed': True}

    with pytest.raises(CheckRegistrationError):
        suite.run(VerificationContext())


def test_run_order_and_status():
    suite = VerificationSuite()
    called = []

    @suite.check(after_all=True)
    def last(context):
        called.append('last')
        return {}

    @suite.check
    def independent(context):
        called.append('independent')
        return {'passed': True, 'n': context.n}

    @suite.check(run_after=independent)
    def dependent(context):
        called.append('dependent')
        return {'passed': True}

    @suite.check(before_all=True)
    def root(context):
        called.append('root')
        return {'passed': True}

    report = suite.run(VerificationContext(n=2))
    assert ['root', 'independent', 'dependent', 'last'] == called
    assert report.passed
    assert not report.partial
    assert [] == report.failures()
    assert 2 == report.results[1].payload['n']


def test_failed_check_blocks_dependents():
    suite = VerificationSuite()

    @suite.check
    def broken(context):
        return {'passed': False, 'mismatches': ['x']}

    @suite.check(run_after=broken)
    def follower(context):
        raise AssertionError('must not run')

    @suite.check(run_after=follower)
    def second_follower(context):
        raise AssertionError('must not run')

    report = suite.run(VerificationContext())
    statuses = {result.name: result.status for result in report.results}
    assert CheckStatus.FAILED == statuses['broken']
    assert CheckStatus.SKIPPED == statuses['follower']
    assert CheckStatus.SKIPPED == statuses['second_follower']
    assert not report.passed
    assert report.partial
    assert ['broken'] == [result.name for result in report.failures()]
    assert {'blocked_by': ['broken']} == report.results[1].payload


def test_failed_root_blocks_everything():
    suite = VerificationSuite()

    @suite.check(before_all=True)
    def root(context):
        raise VerificationFailure('bad root', mismatch={'step': 'root'})

    @suite.check
    def other(context):
        raise AssertionError('must not run')

    report = suite.run(VerificationContext())
    assert CheckStatus.FAILED == report.results[0].status
    assert {'step': 'root'} == report.results[0].payload['mismatch']
    assert CheckStatus.SKIPPED == report.results[1].status


def test_capped_check_is_partial():
    suite = VerificationSuite()

    @suite.check
    def capped(context):
        raise ResourceCapExceeded('too many elements')

    @suite.check
    def partial(context):
        return {'passed': True, 'partial': True}

    report = suite.run(VerificationContext())
    assert [CheckStatus.PARTIAL, CheckStatus.PARTIAL] == [
        result.status for result in report.results
    ]
    assert report.passed
    assert report.partial


def test_report_json():
    suite = VerificationSuite()

    @suite.check
    def only(context):
        return {'passed': True}

    report = suite.run(VerificationContext())
    payload = report.to_json()
    assert {'n', 'scope', 'passed', 'partial', 'checks'} == set(payload)
    assert 'partial' == payload['scope']
    assert [{
        'name': 'only',
        'status': 'passed',
        'payload': {'passed': True},
    }] == payload['checks']

    timed = report.to_json(timings=True)
    assert 'elapsed' in timed['checks'][0]
