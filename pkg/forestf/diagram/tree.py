"""
Finite planar binary trees.

A tree is either the leaf `LEAF` or a caret `Tree(left, right)`. Trees are
immutable tuples, so they hash and compare structurally:

    Tree(LEAF, Tree(LEAF, LEAF)) != Tree(Tree(LEAF, LEAF), LEAF)

Leaves are addressed by their offset in the left-to-right leaf order.
"""

from collections import namedtuple
from functools import lru_cache

from forestf.utils.exceptions import ForestStructureError


class Tree(namedtuple('Tree', ['left', 'right'])):

    __slots__ = ()

    @property
    def is_leaf(self):
        return self.left is None

    @property
    def is_grounded(self):
        return (
            not self.is_leaf and
            self.left.is_leaf and
            self.right.is_leaf
        )

    def __repr__(self):
        return f'Tree<{tree_to_text(self)}>'


LEAF = Tree(None, None)


def caret(left=LEAF, right=LEAF):
    return Tree(left, right)


def is_tree(obj):
    if not isinstance(obj, Tree):
        return False
    if obj.is_leaf:
        return obj.right is None
    return is_tree(obj.left) and is_tree(obj.right)


@lru_cache(maxsize=None)
def leaf_count(tree):
    if tree.is_leaf:
        return 1
    return leaf_count(tree.left) + leaf_count(tree.right)


@lru_cache(maxsize=None)
def caret_count(tree):
    if tree.is_leaf:
        return 0
    return 1 + caret_count(tree.left) + caret_count(tree.right)


@lru_cache(maxsize=None)
def left_leaf_flags(tree):
    '''
    One flag per leaf: whether the leaf is the left child of its caret. The
    single leaf of a trivial tree has no caret and gets False.
    '''
    if tree.is_leaf:
        return (False,)

    left = left_leaf_flags(tree.left)
    if tree.left.is_leaf:
        left = (True,)
    return left + left_leaf_flags(tree.right)


@lru_cache(maxsize=None)
def leaf_depths(tree):
    if tree.is_leaf:
        return (0,)
    return tuple(
        depth + 1
        for depth in leaf_depths(tree.left) + leaf_depths(tree.right)
    )


@lru_cache(maxsize=None)
def grounded_offsets(tree):
    '''
    Offsets of the left leaves of all grounded carets.
    '''
    if tree.is_leaf:
        return ()
    if tree.is_grounded:
        return (0,)

    shift = leaf_count(tree.left)
    return grounded_offsets(tree.left) + tuple(
        shift + offset for offset in grounded_offsets(tree.right)
    )


def collapse(tree, offset):
    '''
    Replace the grounded caret whose left leaf sits at `offset` by a leaf.
    '''
    if tree.is_leaf:
        raise ForestStructureError(f'no grounded caret at leaf {offset}')
    if tree.is_grounded and offset == 0:
        return LEAF

    shift = leaf_count(tree.left)
    if offset < shift:
        return Tree(collapse(tree.left, offset), tree.right)
    return Tree(tree.left, collapse(tree.right, offset - shift))


def sprout(tree, offset):
    '''
    Replace the leaf at `offset` by a grounded caret.
    '''
    if tree.is_leaf:
        if offset != 0:
            raise ForestStructureError(f'leaf offset {offset} out of range')
        return caret()

    shift = leaf_count(tree.left)
    if offset < shift:
        return Tree(sprout(tree.left, offset), tree.right)
    return Tree(tree.left, sprout(tree.right, offset - shift))


def graft(tree, subtrees):
    '''
    Attach `subtrees` to the leaves of `tree`, in leaf order.
    '''
    subtrees = list(subtrees)
    if len(subtrees) != leaf_count(tree):
        raise ForestStructureError('graft needs one subtree per leaf')

    remaining = iter(subtrees)

    def _walk(node):
        if node.is_leaf:
            return next(remaining)
        return Tree(_walk(node.left), _walk(node.right))

    return _walk(tree)


def tree_to_text(tree):
    if tree.is_leaf:
        return '.'
    return '(' + tree_to_text(tree.left) + tree_to_text(tree.right) + ')'


def tree_height(tree):
    if tree.is_leaf:
        return 0
    return 1 + max(tree_height(tree.left), tree_height(tree.right))


def left_vine(carets):
    tree = LEAF
    for _ in range(carets):
        tree = caret(tree, LEAF)
    return tree


def right_vine(carets):
    tree = LEAF
    for _ in range(carets):
        tree = caret(LEAF, tree)
    return tree
