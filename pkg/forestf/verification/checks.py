import random

from forestf.utils.constants import VerificationScope
from forestf.cayley.witnesses import (
    verify_witness_lengths,
    verify_theorem,
    verify_example_paths,
    verify_triples_from_r,
)
from forestf.plmap.maps import (
    detect_composition_order,
    homomorphism_sweep,
)
from .protocol import VerificationSuite


SWEEP_PAIRS = 500
SWEEP_MAX_LENGTH = 12


def _restricted_search_wanted(context):
    if context.scope == VerificationScope.FULL:
        return True
    return context.n <= 2


def build_suite(scope):
    '''
    Checks registered for `scope`:

    - examples_only: witness lengths, example paths.
    - partial: adds the theorem (restricted search for n <= 2 only) and the
    three-step exits from r.
    - full: restricted search for every n and the seeded map sweep.
    '''
    scope = VerificationScope(scope)
    suite = VerificationSuite()

    @suite.check(before_all=True)
    def witness_lengths(context):
        return verify_witness_lengths(context.n)

    @suite.check
    def example_paths(context):
        return verify_example_paths(context.n)

    if scope == VerificationScope.EXAMPLES_ONLY:
        return suite

    @suite.check
    def theorem(context):
        return verify_theorem(
            context.n,
            context.limits,
            restricted=_restricted_search_wanted(context),
        ).to_json()

    @suite.check
    def triples_from_r(context):
        return verify_triples_from_r(context.n)

    if scope == VerificationScope.PARTIAL:
        return suite

    @suite.check
    def composition_order(context):
        order = detect_composition_order()
        return {'order': order, 'passed': order == 'f o g'}

    @suite.check(run_after=composition_order)
    def homomorphism(context):
        failures = homomorphism_sweep(
            random.Random(context.seed),
            pairs=SWEEP_PAIRS,
            max_length=SWEEP_MAX_LENGTH,
        )
        return {
            'seed': context.seed,
            'pairs': SWEEP_PAIRS,
            'failures': failures,
            'passed': not failures,
        }

    return suite


def run_verification(context):
    return build_suite(context.scope).run(context)
