"""
Forest diagrams and the group operations of F.

A diagram stores only a finite window of each bounded bi-infinite forest;
every position outside the window is a trivial tree. The i-th leaf of the
bottom window is matched to the i-th leaf of the top window.

Canonical diagrams are reduced (no opposing pair of grounded carets) and
trimmed (neither boundary position consists of two unpointed trivial
trees). Two canonical diagrams are equal iff they represent the same
element, so `==` and `hash` on `ForestDiagram` are group-element equality.
"""

from collections import namedtuple

from forestf.utils.exceptions import ForestStructureError
from .tree import (
    LEAF,
    Tree,
    is_tree,
    leaf_count,
    caret_count,
    grounded_offsets,
    collapse,
    sprout,
    graft,
)
from .word import (
    Letter,
    LETTERS,
    free_reduce,
)


class PointedForest(namedtuple('PointedForest', ['trees', 'pointer'])):

    __slots__ = ()

    @property
    def pointed_tree(self):
        return self.trees[self.pointer]

    @property
    def leaf_count(self):
        return sum(map(leaf_count, self.trees))

    @property
    def caret_count(self):
        return sum(map(caret_count, self.trees))

    @property
    def is_trivial(self):
        return all(tree.is_leaf for tree in self.trees)

    def tree_starts(self):
        '''
        Window-leaf index of the leftmost leaf of every tree.
        '''
        starts = []
        start = 0
        for tree in self.trees:
            starts.append(start)
            start += leaf_count(tree)
        return starts

    def locate(self, leaf):
        '''
        window-leaf index -> (tree index, offset inside the tree).
        '''
        start = 0
        for idx, tree in enumerate(self.trees):
            size = leaf_count(tree)
            if leaf < start + size:
                return idx, leaf - start
            start += size
        raise ForestStructureError(f'leaf {leaf} is outside the window')

    def tree_span(self, idx):
        '''
        (first leaf, last leaf) of the tree at `idx`.
        '''
        start = sum(map(leaf_count, self.trees[:idx]))
        return start, start + leaf_count(self.trees[idx]) - 1

    def grounded_leaves(self):
        grounded = set()
        for start, tree in zip(self.tree_starts(), self.trees):
            grounded.update(
                start + offset for offset in grounded_offsets(tree)
            )
        return grounded

    def replace_tree(self, idx, *replacement):
        trees = self.trees[:idx] + tuple(replacement) + self.trees[idx + 1:]
        pointer = self.pointer
        if pointer > idx:
            pointer += len(replacement) - 1
        return PointedForest(trees, pointer)

    def padded(self, left, right):
        return PointedForest(
            (LEAF,) * left + self.trees + (LEAF,) * right,
            self.pointer + left,
        )


class ForestDiagram(namedtuple('ForestDiagram', ['top', 'bottom'])):

    __slots__ = ()

    def __repr__(self):
        # local import, text depends on this module.
        from .text import diagram_to_text
        return f'ForestDiagram<{diagram_to_text(self)}>'


def pointed_forest(trees, pointer=0):
    return PointedForest(tuple(trees), pointer)


def make_diagram(top_trees, top_pointer, bottom_trees, bottom_pointer):
    return ForestDiagram(
        pointed_forest(top_trees, top_pointer),
        pointed_forest(bottom_trees, bottom_pointer),
    )


IDENTITY = make_diagram([LEAF], 0, [LEAF], 0)


def identity():
    return IDENTITY


def _validate_forest(forest, side):
    if not isinstance(forest, PointedForest):
        raise ForestStructureError(f'{side} forest is not a PointedForest')
    if not forest.trees:
        raise ForestStructureError(f'{side} window is empty')
    if not all(map(is_tree, forest.trees)):
        raise ForestStructureError(f'{side} window holds a non-tree')
    if not 0 <= forest.pointer < len(forest.trees):
        raise ForestStructureError(
            f'{side} pointer {forest.pointer} out of range '
            f'0..{len(forest.trees) - 1}',
        )


def validate(diagram):
    _validate_forest(diagram.top, 'top')
    _validate_forest(diagram.bottom, 'bottom')

    top_leaves = diagram.top.leaf_count
    bottom_leaves = diagram.bottom.leaf_count
    if top_leaves != bottom_leaves:
        raise ForestStructureError(
            f'leaf-count mismatch: top has {top_leaves}, '
            f'bottom has {bottom_leaves}',
        )
    return diagram


def pad(diagram, left=0, right=0):
    '''
    Add matched trivial trees to both windows.
    '''
    return ForestDiagram(
        diagram.top.padded(left, right),
        diagram.bottom.padded(left, right),
    )


def expand(diagram, leaf):
    '''
    Insert an opposing pair of grounded carets at window leaf `leaf`.
    '''
    top_idx, top_offset = diagram.top.locate(leaf)
    bottom_idx, bottom_offset = diagram.bottom.locate(leaf)
    return ForestDiagram(
        diagram.top.replace_tree(
            top_idx, sprout(diagram.top.trees[top_idx], top_offset),
        ),
        diagram.bottom.replace_tree(
            bottom_idx,
            sprout(diagram.bottom.trees[bottom_idx], bottom_offset),
        ),
    )


def reducible_leaves(diagram):
    '''
    Window leaves that are the left leaf of an opposing pair of grounded
    carets, in increasing order.
    '''
    return sorted(
        diagram.top.grounded_leaves() & diagram.bottom.grounded_leaves(),
    )


def reduce_at(diagram, leaf):
    if leaf not in reducible_leaves(diagram):
        raise ForestStructureError(f'no opposing grounded carets at {leaf}')

    top_idx, top_offset = diagram.top.locate(leaf)
    bottom_idx, bottom_offset = diagram.bottom.locate(leaf)
    return ForestDiagram(
        diagram.top.replace_tree(
            top_idx, collapse(diagram.top.trees[top_idx], top_offset),
        ),
        diagram.bottom.replace_tree(
            bottom_idx,
            collapse(diagram.bottom.trees[bottom_idx], bottom_offset),
        ),
    )


def _reduce_all(diagram):
    while True:
        leaves = reducible_leaves(diagram)
        if not leaves:
            return diagram
        top_idx, top_offset = diagram.top.locate(leaves[0])
        bottom_idx, bottom_offset = diagram.bottom.locate(leaves[0])
        diagram = ForestDiagram(
            diagram.top.replace_tree(
                top_idx, collapse(diagram.top.trees[top_idx], top_offset),
            ),
            diagram.bottom.replace_tree(
                bottom_idx,
                collapse(diagram.bottom.trees[bottom_idx], bottom_offset),
            ),
        )


def _removable(top, bottom, top_idx, bottom_idx):
    return (
        top.trees[top_idx].is_leaf and
        bottom.trees[bottom_idx].is_leaf and
        top.pointer != top_idx and
        bottom.pointer != bottom_idx
    )


def trim(diagram):
    top, bottom = diagram

    while _removable(top, bottom, 0, 0):
        top = PointedForest(top.trees[1:], top.pointer - 1)
        bottom = PointedForest(bottom.trees[1:], bottom.pointer - 1)

    while _removable(top, bottom, len(top.trees) - 1, len(bottom.trees) - 1):
        top = PointedForest(top.trees[:-1], top.pointer)
        bottom = PointedForest(bottom.trees[:-1], bottom.pointer)

    return ForestDiagram(top, bottom)


def _normalize(diagram):
    return trim(_reduce_all(diagram))


def canonicalize(diagram):
    return _normalize(validate(diagram))


def is_canonical(diagram):
    try:
        return canonicalize(diagram) == diagram
    except ForestStructureError:
        return False


def require_canonical(diagram):
    if not is_canonical(diagram):
        raise ForestStructureError(
            f'{diagram!r} is not a canonical forest diagram',
        )
    return diagram


def _move_pointer_right(diagram):
    if diagram.top.pointer == len(diagram.top.trees) - 1:
        diagram = pad(diagram, right=1)
    top = diagram.top
    return ForestDiagram(
        PointedForest(top.trees, top.pointer + 1), diagram.bottom,
    )


def _move_pointer_left(diagram):
    if diagram.top.pointer == 0:
        diagram = pad(diagram, left=1)
    top = diagram.top
    return ForestDiagram(
        PointedForest(top.trees, top.pointer - 1), diagram.bottom,
    )


def _drop_caret(diagram):
    if diagram.top.pointer == len(diagram.top.trees) - 1:
        diagram = pad(diagram, right=1)

    top = diagram.top
    idx = top.pointer
    merged = Tree(top.trees[idx], top.trees[idx + 1])
    trees = top.trees[:idx] + (merged,) + top.trees[idx + 2:]
    # the new caret may oppose a grounded bottom caret.
    return _reduce_all(
        ForestDiagram(PointedForest(trees, idx), diagram.bottom),
    )


def _delete_caret(diagram):
    top = diagram.top
    idx = top.pointer
    current = top.pointed_tree

    if current.is_leaf:
        # expansion first: the matched bottom leaf grows a grounded caret.
        leaf = top.tree_span(idx)[0]
        bottom_idx, bottom_offset = diagram.bottom.locate(leaf)
        bottom = diagram.bottom.replace_tree(
            bottom_idx,
            sprout(diagram.bottom.trees[bottom_idx], bottom_offset),
        )
        return ForestDiagram(top.replace_tree(idx, LEAF, LEAF), bottom)

    return ForestDiagram(
        top.replace_tree(idx, current.left, current.right),
        diagram.bottom,
    )


_ACTIONS = {
    Letter.X0: _move_pointer_right,
    Letter.X0_INV: _move_pointer_left,
    Letter.X1: _drop_caret,
    Letter.X1_INV: _delete_caret,
}


def apply_generator(letter, diagram):
    '''
    Canonical diagram of `letter * diagram`.
    '''
    return trim(_ACTIONS[letter](diagram))


def apply_word(word, diagram):
    '''
    Canonical diagram of `word * diagram`; letters act right to left.
    '''
    for letter in reversed(tuple(word)):
        diagram = apply_generator(letter, diagram)
    return diagram


def from_word(word):
    return apply_word(word, IDENTITY)


def inverse(diagram):
    return ForestDiagram(diagram.bottom, diagram.top)


def is_semi_positive(diagram):
    return diagram.bottom.is_trivial


def _tree_instructions(tree):
    # build the left subtree, step right, build the right subtree, step
    # back and join the two roots.
    if tree.is_leaf:
        return []
    return (
        _tree_instructions(tree.left) +
        [Letter.X0] +
        _tree_instructions(tree.right) +
        [Letter.X0_INV, Letter.X1]
    )


def _forest_instructions(forest):
    '''
    Instructions, in application order, that build `forest` as the top
    forest of a semi-positive element whose bottom pointer sits under the
    first window leaf.
    '''
    instructions = []
    for idx, tree in enumerate(forest.trees):
        if idx:
            instructions.append(Letter.X0)
        instructions.extend(_tree_instructions(tree))

    moves = len(forest.trees) - 1 - forest.pointer
    instructions.extend([Letter.X0_INV] * moves)
    return instructions


def to_word(diagram):
    '''
    A word for `diagram`, not necessarily geodesic. The element factors as
    P * Q^-1 with P carrying the top forest and Q the bottom forest, both
    over trivial bottom forests aligned at the first window leaf.
    '''
    top_instructions = _forest_instructions(diagram.top)
    bottom_instructions = _forest_instructions(diagram.bottom)

    word = list(reversed(top_instructions))
    word.extend(letter.inverse for letter in bottom_instructions)
    return free_reduce(word)


def stack(f, g):
    '''
    Diagram of f * g for semi-positive f: the leaves of f's top forest are
    attached to the roots of g's top forest, with the bottom pointer of f
    over the top pointer of g.
    '''
    if not is_semi_positive(f):
        raise ForestStructureError(
            'stacking needs a semi-positive left factor',
        )

    f_leaves = f.top.leaf_count
    # f leaf j sits over g tree j + shift.
    shift = g.top.pointer - f.bottom.pointer

    lowest = min(0, shift)
    highest = max(len(g.top.trees) - 1, f_leaves - 1 + shift)
    g = pad(g, -lowest, highest - (len(g.top.trees) - 1))
    shift -= lowest

    f = pad(f, shift, len(g.top.trees) - f_leaves - shift)

    grafted = []
    consumed = 0
    for tree in f.top.trees:
        size = leaf_count(tree)
        grafted.append(graft(tree, g.top.trees[consumed:consumed + size]))
        consumed += size

    return _normalize(ForestDiagram(
        PointedForest(tuple(grafted), f.top.pointer),
        g.bottom,
    ))


def multiply_by_word_fold(f, g):
    return apply_word(to_word(f), g)


def multiply(f, g):
    '''
    Canonical diagram of the product f * g.
    '''
    if is_semi_positive(f):
        return stack(f, g)
    return multiply_by_word_fold(f, g)


def neighbors(diagram):
    return tuple(apply_generator(letter, diagram) for letter in LETTERS)
