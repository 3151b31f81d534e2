from enum import Enum, auto


class EnumByUpperCaseName(Enum):

    def _generate_next_value_(name, *args, **kwargs):
        return name.upper()


class EnumByLowerCaseName(Enum):

    def _generate_next_value_(name, *args, **kwargs):
        return name.lower()


class SpaceLabel(EnumByUpperCaseName):

    # exterior and left of the pointer.
    L = auto()
    # the leaf to the right is a left leaf in its caret.
    N = auto()
    # interior.
    I = auto()  # noqa: E741
    # exterior and right of the pointer.
    R = auto()


class VerificationScope(EnumByLowerCaseName):

    FULL = auto()
    PARTIAL = auto()
    EXAMPLES_ONLY = auto()


class CheckOptions(EnumByLowerCaseName):

    BEFORE_ALL = auto()
    AFTER_ALL = auto()
    RUN_AFTER = auto()


class CheckStatus(EnumByLowerCaseName):

    PASSED = auto()
    FAILED = auto()
    PARTIAL = auto()
    SKIPPED = auto()


class RenderStyle(EnumByLowerCaseName):

    ASCII = auto()
    DOT = auto()


class TopologySearchColor(Enum):

    WHITE = auto()
    GRAY = auto()
    BLACK = auto()


class ConvexityPairs(EnumByLowerCaseName):

    # d(g, h) = l(h g^-1) = 2, adjacent at distance 2 in the graph.
    GRAPH = auto()
    # l(g^-1 h) = 2.
    LEFT = auto()
