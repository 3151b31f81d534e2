"""
Drawings of forest diagrams.

`render_ascii` prints the text form followed by a dendrogram: the top
forest grows upward from a shared row of leaves, the bottom forest grows
downward, and "^"/"v" mark the roots of the pointed trees.

`render_dot` emits Graphviz source with one node per caret and leaf and
dashed edges joining matched leaves.
"""

from forestf.utils.constants import RenderStyle
from .tree import leaf_count, tree_height
from .text import diagram_to_text


_LEAF_GAP = 2


def _layout_forest(forest):
    '''
    (carets, roots) where carets is a list of (x, level, left_x, left_level,
    right_x, right_level) and roots a list of root columns, one per tree.
    '''
    carets = []
    roots = []

    def _walk(tree, first_leaf):
        if tree.is_leaf:
            return first_leaf * _LEAF_GAP, 0
        left_x, left_level = _walk(tree.left, first_leaf)
        right_x, right_level = _walk(
            tree.right, first_leaf + leaf_count(tree.left),
        )
        level = max(left_level, right_level) + 1
        x = (left_x + right_x) // 2
        carets.append((x, level, left_x, left_level, right_x, right_level))
        return x, level

    first_leaf = 0
    for tree in forest.trees:
        x, _ = _walk(tree, first_leaf)
        roots.append(x)
        first_leaf += leaf_count(tree)
    return carets, roots


def _draw_forest(forest, width):
    height = max(map(tree_height, forest.trees))
    grid = [[' '] * width for _ in range(height + 1)]

    carets, roots = _layout_forest(forest)
    for x, level, left_x, left_level, right_x, right_level in carets:
        row = grid[level]
        for col in range(left_x + 1, right_x):
            row[col] = '-'
        row[left_x] = row[right_x] = '+'
        row[x] = '+'
        for col, child_level in ((left_x, left_level), (right_x, right_level)):
            for lower in range(child_level + 1, level):
                grid[lower][col] = '|'

    marker = [' '] * width
    marker[roots[forest.pointer]] = '*'
    # rows 1..height, the leaf row is shared and drawn separately.
    return [''.join(row).rstrip() for row in grid[1:]], ''.join(marker)


def render_ascii(diagram):
    leaves = diagram.top.leaf_count
    width = (leaves - 1) * _LEAF_GAP + 1

    top_rows, top_marker = _draw_forest(diagram.top, width)
    bottom_rows, bottom_marker = _draw_forest(diagram.bottom, width)

    leaf_row = [' '] * width
    for idx in range(leaves):
        leaf_row[idx * _LEAF_GAP] = 'o'

    lines = [diagram_to_text(diagram)]
    lines.append(top_marker.replace('*', 'v').rstrip())
    lines.extend(reversed(top_rows))
    lines.append(''.join(leaf_row))
    lines.extend(bottom_rows)
    lines.append(bottom_marker.replace('*', '^').rstrip())
    return '\n'.join(lines)


def _dot_forest(forest, prefix, lines, hanging=False):
    leaf_names = []
    counter = [0]

    def _walk(tree):
        if tree.is_leaf:
            name = f'{prefix}_leaf{len(leaf_names)}'
            leaf_names.append(name)
            lines.append(f'    {name} [shape=point];')
            return name
        name = f'{prefix}_caret{counter[0]}'
        counter[0] += 1
        lines.append(f'    {name} [shape=circle, label="", width=0.15];')
        left = _walk(tree.left)
        right = _walk(tree.right)
        for child in (left, right):
            if hanging:
                lines.append(f'    {child} -> {name};')
            else:
                lines.append(f'    {name} -> {child};')
        return name

    for idx, tree in enumerate(forest.trees):
        root = _walk(tree)
        if idx == forest.pointer:
            lines.append(f'    {root} [color=red, penwidth=2];')
    return leaf_names


def render_dot(diagram):
    lines = [
        'digraph forest_diagram {',
        f'    label="{diagram_to_text(diagram)}";',
        '    node [fontsize=10];',
    ]
    top_leaves = _dot_forest(diagram.top, 'top', lines)

    # bottom edges run from the leaves down to the roots.
    bottom_leaves = _dot_forest(diagram.bottom, 'bottom', lines, hanging=True)

    for top_leaf, bottom_leaf in zip(top_leaves, bottom_leaves):
        lines.append(
            f'    {top_leaf} -> {bottom_leaf} [style=dashed, dir=none];',
        )
    lines.append('}')
    return '\n'.join(lines)


_RENDERERS = {
    RenderStyle.ASCII: render_ascii,
    RenderStyle.DOT: render_dot,
}


def render(diagram, style=RenderStyle.ASCII):
    return _RENDERERS[RenderStyle(style)](diagram)
