"""
Word length of a forest diagram from its space labels.

Every space of the support (the gap between window leaves i and i+1) is
labeled in each forest independently:

    L   exterior, and the tree right of the space is at or left of the pointer
    N   the leaf right of the space is a left leaf in its caret
    I   interior
    R   anything else (exterior, right of the pointer, next tree trivial)

Top and bottom spaces pair up positionally. The length is the total number
of carets plus the summed pair weights.
"""

from collections import namedtuple

from forestf.utils.constants import SpaceLabel
from forestf.diagram.tree import leaf_count, left_leaf_flags


L, N, R = SpaceLabel.L, SpaceLabel.N, SpaceLabel.R
I = SpaceLabel.I  # noqa: E741


def _build_weight_table():
    table = {}
    for top in SpaceLabel:
        for bottom in SpaceLabel:
            table[top, bottom] = 2

    table[N, L] = table[L, N] = 1
    for label in (I, R):
        table[L, label] = table[label, L] = 1
    for pair in ((I, I), (I, R), (R, I)):
        table[pair] = 0
    return table


WEIGHT_TABLE = _build_weight_table()


def pair_weight(top, bottom):
    return WEIGHT_TABLE[top, bottom]


SpaceLabeling = namedtuple(
    'SpaceLabeling',
    ['support', 'top_labels', 'bottom_labels', 'weights'],
)


class LengthBreakdown(namedtuple(
    'LengthBreakdown',
    ['top_carets', 'bottom_carets', 'x0_count', 'labeling'],
)):

    __slots__ = ()

    @property
    def caret_count(self):
        return self.top_carets + self.bottom_carets

    @property
    def total(self):
        return self.caret_count + self.x0_count

    def to_json(self):
        return {
            'l1': self.caret_count,
            'l0': self.x0_count,
            'total': self.total,
            'top_carets': self.top_carets,
            'bottom_carets': self.bottom_carets,
            'top_labels': labels_to_text(self.labeling.top_labels),
            'bottom_labels': labels_to_text(self.labeling.bottom_labels),
            'weights': list(self.labeling.weights),
        }


def labels_to_text(labels):
    return ''.join(label.value for label in labels)


def _leaf_layout(forest):
    '''
    Per window leaf: (index of its tree, left-leaf flag).
    '''
    tree_of = []
    flags = []
    for idx, tree in enumerate(forest.trees):
        tree_of.extend([idx] * leaf_count(tree))
        flags.extend(left_leaf_flags(tree))
    return tree_of, flags


def _pointed_or_nontrivial_span(forest):
    lowest = None
    highest = None
    start = 0
    for idx, tree in enumerate(forest.trees):
        end = start + leaf_count(tree) - 1
        if idx == forest.pointer or not tree.is_leaf:
            lowest = start if lowest is None else min(lowest, start)
            highest = end if highest is None else max(highest, end)
        start = end + 1
    return lowest, highest


def support(diagram):
    '''
    (first leaf, last leaf) of the smallest window-leaf interval holding
    both pointed trees and every nontrivial tree.
    '''
    top_low, top_high = _pointed_or_nontrivial_span(diagram.top)
    bottom_low, bottom_high = _pointed_or_nontrivial_span(diagram.bottom)
    return min(top_low, bottom_low), max(top_high, bottom_high)


def _label_forest(forest, first, last):
    tree_of, flags = _leaf_layout(forest)

    labels = []
    for space in range(first, last):
        right_tree = tree_of[space + 1]
        exterior = tree_of[space] != right_tree
        if exterior and right_tree <= forest.pointer:
            labels.append(L)
        elif flags[space + 1]:
            labels.append(N)
        elif not exterior:
            labels.append(I)
        else:
            labels.append(R)
    return tuple(labels)


def label_spaces(diagram):
    first, last = support(diagram)
    top_labels = _label_forest(diagram.top, first, last)
    bottom_labels = _label_forest(diagram.bottom, first, last)
    weights = tuple(map(pair_weight, top_labels, bottom_labels))
    return SpaceLabeling((first, last), top_labels, bottom_labels, weights)


def length(diagram):
    labeling = label_spaces(diagram)
    return LengthBreakdown(
        diagram.top.caret_count,
        diagram.bottom.caret_count,
        sum(labeling.weights),
        labeling,
    )


def norm(diagram):
    '''
    Word length only.
    '''
    return length(diagram).total


def width(diagram):
    first, last = support(diagram)
    return max(last - first, 0)


def right_foot(diagram):
    return diagram.top.tree_span(diagram.top.pointer)[1]


def critical_leaf(diagram):
    return diagram.bottom.tree_span(diagram.bottom.pointer)[1]


def _right_of_pointer_trivial(forest):
    return all(tree.is_leaf for tree in forest.trees[forest.pointer + 1:])


def is_left_sided(diagram):
    return (
        right_foot(diagram) == critical_leaf(diagram) and
        _right_of_pointer_trivial(diagram.top) and
        _right_of_pointer_trivial(diagram.bottom)
    )


def width_bound_exceptions(elements):
    '''
    Elements with w <= l < 2w. l >= w holds for every element, since each
    weight-0 space is interior in some forest; l >= 2w holds only for the
    left-sided ones, so none of the returned elements is left-sided.
    '''
    exceptions = []
    for element in elements:
        element_width = width(element)
        if element_width <= norm(element) < 2 * element_width:
            exceptions.append(element)
    return exceptions
