import collections.abc as abc
from collections import namedtuple

from forestf.utils.constants import (
    CheckOptions,
    TopologySearchColor,
)
from forestf.utils.exceptions import CheckRegistrationError


def namedtuple_with_default(name, *pairs):
    keys, defaults = zip(*pairs)

    gencls = namedtuple(name, keys)
    gencls.__new__.__defaults__ = tuple(defaults)
    return gencls


def to_iterable(element):
    if not isinstance(element, abc.Iterable):
        element = (element,)
    return element


def run_length_groups(items):
    '''
    [a, a, b, a] -> [(a, 2), (b, 1), (a, 1)]
    '''
    groups = []
    for item in items:
        if groups and groups[-1][0] == item:
            groups[-1] = (item, groups[-1][1] + 1)
        else:
            groups.append((item, 1))
    return groups


# restricted options only contains CheckOptions.
def ordered_groups_of_checks(check_and_restricted_options):
    '''
    Returns a list of groups. Every check of a group only depends on checks
    of earlier groups. Registration order is kept inside a group.
    '''
    root = None
    last = None

    parents = {}
    registered = []

    # one pass processing.
    for check, options in check_and_restricted_options:

        before_all = options.get(CheckOptions.BEFORE_ALL.value)
        after_all = options.get(CheckOptions.AFTER_ALL.value)
        run_after = options.get(CheckOptions.RUN_AFTER.value)

        # check root.
        if before_all:
            if after_all or run_after:
                raise CheckRegistrationError('Conflict on before_all.')
            if root is not None:
                raise CheckRegistrationError(
                    'Already set before_all: {}'.format(str(root)),
                )
            root = check
            continue

        # check last.
        if after_all:
            if run_after:
                raise CheckRegistrationError('Conflict on after_all.')
            if last is not None:
                raise CheckRegistrationError(
                    'Already set after_all: {}'.format(str(last)),
                )
            last = check
            continue

        # check precedent.
        if run_after is None:
            parents[check] = set()
        else:
            parents[check] = set(to_iterable(run_after)) - {root}

        registered.append(check)

    for check in registered:
        for parent in parents[check]:
            if parent not in parents:
                raise CheckRegistrationError(
                    'run_after refers to an unregistered check: {}'.format(
                        str(parent),
                    ),
                )

    searched = {
        check: TopologySearchColor.WHITE
        for check in registered
    }
    level = {}

    def DFS(check):
        if searched[check] == TopologySearchColor.GRAY:
            raise CheckRegistrationError('Detect circle.')
        if searched[check] == TopologySearchColor.BLACK:
            return level[check]

        searched[check] = TopologySearchColor.GRAY
        level[check] = 1 + max(
            (DFS(parent) for parent in parents[check]),
            default=-1,
        )
        searched[check] = TopologySearchColor.BLACK
        return level[check]

    groups = []
    for check in registered:
        depth = DFS(check)
        while len(groups) <= depth:
            groups.append([])
        groups[depth].append(check)

    if root:
        groups.insert(0, [root])
    if last:
        groups.append([last])

    return groups
