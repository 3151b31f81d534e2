"""
Text form of forest diagrams.

    diagram := forest "/" forest
    forest  := ("^"? tree)+
    tree    := "." | "(" tree tree ")"

The top forest is written first. "^" marks the pointed tree of each
forest, exactly one per forest. Spaces separate trees:

    ^(..) / ^. .        the generator x1
    . ^. . (..) / ^((..).) . .
"""

from lark import Lark, Transformer, LarkError
from lark.exceptions import UnexpectedInput, VisitError

from forestf.utils.exceptions import (
    ForestStructureError,
    WordSyntaxError,
)
from .tree import LEAF, Tree, tree_to_text
from .forest import (
    PointedForest,
    ForestDiagram,
    validate,
    require_canonical,
)


_DIAGRAM_GRAMMAR = r'''
    diagram: forest "/" forest

    forest: ptree+

    ptree: POINTER? tree

    tree: "."                -> leaf
        | "(" tree tree ")"  -> caret

    POINTER: "^"

    %ignore " "
    %ignore /[\t\r\n]+/
'''


class _DiagramBuilder(Transformer):

    def diagram(self, children):
        return ForestDiagram(*children)

    def forest(self, children):
        pointers = [
            idx for idx, (pointed, _) in enumerate(children) if pointed
        ]
        if len(pointers) != 1:
            raise ForestStructureError(
                f'every forest needs exactly one "^", found {len(pointers)}',
            )
        return PointedForest(
            tuple(tree for _, tree in children),
            pointers[0],
        )

    def ptree(self, children):
        if len(children) == 2:
            return True, children[1]
        return False, children[0]

    def leaf(self, _):
        return LEAF

    def caret(self, children):
        return Tree(*children)


_diagram_parser = Lark(_DIAGRAM_GRAMMAR, start='diagram', parser='lalr')


def looks_like_diagram(text):
    return '/' in text


def parse_diagram(text, raw=False):
    '''
    Parse and validate a diagram. Only canonical diagrams are accepted unless
    `raw` is set, in which case any valid diagram is returned as written.
    '''
    try:
        tree = _diagram_parser.parse(text)
    except UnexpectedInput as exc:
        column = getattr(exc, 'column', -1)
        raise WordSyntaxError(
            f'cannot parse diagram {text!r}',
            text=text,
            position=column - 1 if column and column > 0 else len(text),
        ) from exc
    except LarkError as exc:
        raise WordSyntaxError(
            f'cannot parse diagram {text!r}', text=text,
        ) from exc

    try:
        diagram = _DiagramBuilder().transform(tree)
    except VisitError as exc:
        if isinstance(exc.orig_exc, ForestStructureError):
            raise exc.orig_exc from None
        raise

    if raw:
        return validate(diagram)
    return require_canonical(validate(diagram))


def forest_to_text(forest):
    return ' '.join(
        ('^' if idx == forest.pointer else '') + tree_to_text(tree)
        for idx, tree in enumerate(forest.trees)
    )


def diagram_to_text(diagram):
    return f'{forest_to_text(diagram.top)} / {forest_to_text(diagram.bottom)}'
